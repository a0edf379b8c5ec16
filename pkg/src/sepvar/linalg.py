"""Exact sparse elimination over the integers.

Vectors are dicts ``{column: coefficient}`` with hashable, orderable column
keys.  Rational input is scaled to integers and every stored row is kept
primitive (content 1), so no fractions appear during reduction.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Hashable, Iterable, Mapping


def _integral(vec: Mapping) -> dict:
    den = 1
    for c in vec.values():
        if isinstance(c, Fraction):
            den = lcm(den, c.denominator)
    return {key: int(c * den) for key, c in vec.items() if c}


def _content(*parts: dict) -> int:
    g = 0
    for part in parts:
        for c in part.values():
            g = gcd(g, c)
            if g == 1:
                return 1
    return g


class Echelon:
    """Incremental row echelon form keyed by leading (smallest) column.

    With ``track=True`` every stored row remembers which input vectors it
    is built from, so a vector reducing to zero yields a relation among
    the inputs.
    """

    def __init__(self, track: bool = False):
        self.rows: dict[Hashable, tuple[dict, dict]] = {}
        self.track = track
        self.relations: list[dict[int, int]] = []
        self._count = 0

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce(self, vec: dict, combo: dict) -> tuple[dict, dict]:
        while vec:
            lead = min(vec)
            row = self.rows.get(lead)
            if row is None:
                break
            rvec, rcombo = row
            a, b = rvec[lead], vec[lead]
            g = gcd(a, b)
            fa, fb = a // g, b // g
            new = {key: fa * c for key, c in vec.items()}
            for key, c in rvec.items():
                v = new.get(key, 0) - fb * c
                if v:
                    new[key] = v
                else:
                    new.pop(key, None)
            if self.track:
                ncombo = {key: fa * c for key, c in combo.items()}
                for key, c in rcombo.items():
                    v = ncombo.get(key, 0) - fb * c
                    if v:
                        ncombo[key] = v
                    else:
                        ncombo.pop(key, None)
                combo = ncombo
            g = _content(new, combo)
            if g > 1:
                new = {key: c // g for key, c in new.items()}
                combo = {key: c // g for key, c in combo.items()}
            vec = new
        return vec, combo

    def add(self, vec: Mapping) -> bool:
        """Insert ``vec``; return True iff it was independent of the rows so far."""
        index = self._count
        self._count += 1
        combo = {index: 1} if self.track else {}
        vec, combo = self._reduce(_integral(vec), combo)
        if not vec:
            if self.track:
                self.relations.append(combo)
            return False
        lead = min(vec)
        if vec[lead] < 0:
            vec = {key: -c for key, c in vec.items()}
            combo = {key: -c for key, c in combo.items()}
        self.rows[lead] = (vec, combo)
        return True

    def contains(self, vec: Mapping) -> bool:
        """Span membership without modifying the echelon."""
        saved = self.track
        self.track = False
        try:
            rest, _ = self._reduce(_integral(vec), {})
        finally:
            self.track = saved
        return not rest


def rank(vectors: Iterable[Mapping]) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return ech.rank


def nullspace(vectors: Iterable[Mapping]) -> list[dict[int, int]]:
    """Basis of linear relations among ``vectors``, as ``{index: coeff}`` dicts."""
    ech = Echelon(track=True)
    for v in vectors:
        ech.add(v)
    return ech.relations


def in_span(vec: Mapping, vectors: Iterable[Mapping]) -> bool:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return ech.contains(vec)


__all__ = ["Echelon", "rank", "nullspace", "in_span"]
