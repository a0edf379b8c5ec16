"""Root system of sp(2k) (type C_k) in epsilon-coordinates.

Simple roots are e_1 - e_2, ..., e_{k-1} - e_k and 2e_k.  The compact
subsystem (roots of gl(k)) is {e_i - e_j}.  Weights are
:class:`~sepvar.partitions.Weight` objects; the inner product is the
Euclidean one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import re

from .partitions import Weight


class NotDominantError(ValueError):
    """Raised when a weight is not k-dominant integral."""


@dataclass(frozen=True, order=True)
class Root:
    vector: tuple[int, ...]

    def __post_init__(self):
        v = tuple(int(c) for c in self.vector)
        object.__setattr__(self, "vector", v)
        nz = [c for c in v if c]
        ok = (
            (len(nz) == 2 and set(map(abs, nz)) == {1})
            or (len(nz) == 1 and abs(nz[0]) == 2)
        )
        if not ok:
            raise ValueError(f"{v} is not a root of type C")

    @classmethod
    def e_minus(cls, k: int, i: int, j: int) -> "Root":
        v = [0] * k
        v[i - 1] += 1
        v[j - 1] -= 1
        return cls(tuple(v))

    @classmethod
    def e_plus(cls, k: int, i: int, j: int, sign: int = 1) -> "Root":
        """sign * (e_i + e_j); i == j gives sign * 2e_i."""
        v = [0] * k
        v[i - 1] += sign
        v[j - 1] += sign
        return cls(tuple(v))

    @classmethod
    def parse(cls, text: str, k: int) -> "Root":
        """Inverse of ``str``: ``"e1+e3"``, ``"2e2"``, ``"-e1-e2"``."""
        v = [0] * k
        for sign, coef, idx in re.findall(r"([+-]?)(\d*)e(\d+)", text.replace(" ", "")):
            c = int(coef) if coef else 1
            v[int(idx) - 1] += -c if sign == "-" else c
        return cls(tuple(v))

    @property
    def k(self) -> int:
        return len(self.vector)

    @property
    def is_long(self) -> bool:
        return sum(1 for c in self.vector if c) == 1

    @property
    def is_compact(self) -> bool:
        return sum(self.vector) == 0

    @property
    def is_positive(self) -> bool:
        first = next(c for c in self.vector if c)
        return first > 0

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.vector))

    def norm2(self) -> int:
        return sum(c * c for c in self.vector)

    def inner(self, other: "Root") -> int:
        return sum(a * b for a, b in zip(self.vector, other.vector))

    def as_weight(self) -> Weight:
        return Weight(tuple(2 * c for c in self.vector))

    def __str__(self):
        out = ""
        for i, c in enumerate(self.vector, start=1):
            if not c:
                continue
            sign = "-" if c < 0 else ("+" if out else "")
            mag = "" if abs(c) == 1 else str(abs(c))
            out += f"{sign}{mag}e{i}"
        return out

    def __repr__(self):
        return f"Root({self})"


@lru_cache(maxsize=None)
def compact_positive(k: int) -> tuple[Root, ...]:
    return tuple(Root.e_minus(k, i, j) for i in range(1, k + 1) for j in range(i + 1, k + 1))


@lru_cache(maxsize=None)
def noncompact_positive(k: int) -> tuple[Root, ...]:
    return tuple(Root.e_plus(k, i, j) for i in range(1, k + 1) for j in range(i, k + 1))


@lru_cache(maxsize=None)
def positive_roots(k: int) -> tuple[Root, ...]:
    if k < 1:
        raise ValueError("k must be positive")
    return compact_positive(k) + noncompact_positive(k)


@lru_cache(maxsize=None)
def all_roots(k: int) -> tuple[Root, ...]:
    pos = positive_roots(k)
    return pos + tuple(-a for a in pos)


@lru_cache(maxsize=None)
def simple_roots(k: int) -> tuple[Root, ...]:
    return tuple(Root.e_minus(k, i, i + 1) for i in range(1, k)) + (Root.e_plus(k, k, k),)


@lru_cache(maxsize=None)
def rho(k: int) -> Weight:
    """Half the sum of the positive roots."""
    total = [0] * k
    for a in positive_roots(k):
        for i, c in enumerate(a.vector):
            total[i] += c
    # doubled coordinates of half the sum are the sum itself
    return Weight(tuple(total))


def pairing(mu: Weight, alpha: Root) -> Fraction:
    """mu(alpha^vee) = 2 (alpha, mu) / (alpha, alpha)."""
    if len(mu) != alpha.k:
        raise ValueError("length mismatch")
    # mu is doubled, so (alpha, mu) = sum(alpha * doubled) / 2
    return Fraction(2 * sum(a * m for a, m in zip(alpha.vector, mu.doubled)), 2 * alpha.norm2())


def inner(mu: Weight, alpha: Root) -> Fraction:
    return Fraction(sum(a * m for a, m in zip(alpha.vector, mu.doubled)), 2)


def reflect(mu: Weight, alpha: Root) -> Weight:
    c = pairing(mu, alpha)
    return Weight(tuple(m - int(2 * c * a) for m, a in zip(mu.doubled, alpha.vector)))


def dominant_sort(mu: Weight) -> Weight:
    return Weight(tuple(sorted(mu.doubled, reverse=True)))


def require_k_dominant(mu: Weight):
    if not mu.is_k_dominant():
        raise NotDominantError(f"{mu!r} is not k-dominant integral")


def simple_coordinates(v: tuple[int, ...]) -> tuple[Fraction, ...]:
    """Coefficients of an integer vector in the simple-root basis."""
    k = len(v)
    coeffs = []
    running = 0
    for i in range(k - 1):
        running += v[i]
        coeffs.append(Fraction(running))
    coeffs.append(Fraction(running + v[k - 1], 2))
    return tuple(coeffs)


def dominance_leq(alpha: Root, beta: Root) -> bool:
    """alpha <= beta iff beta - alpha is an N-combination of simple roots."""
    if alpha.k != beta.k:
        raise ValueError("roots of different rank")
    diff = tuple(b - a for a, b in zip(alpha.vector, beta.vector))
    return all(c >= 0 and c.denominator == 1 for c in simple_coordinates(diff))


@dataclass(frozen=True, order=True)
class SignedPermutation:
    """w(lam)_i = signs[i] * lam[perm[i]] (0-based indices)."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    @classmethod
    def identity(cls, k: int) -> "SignedPermutation":
        return cls(tuple(range(k)), (1,) * k)

    @classmethod
    def reflection(cls, alpha: Root) -> "SignedPermutation":
        k = alpha.k
        perm, signs = list(range(k)), [1] * k
        nz = [i for i, c in enumerate(alpha.vector) if c]
        if len(nz) == 1:
            signs[nz[0]] = -1
        else:
            i, j = nz
            perm[i], perm[j] = j, i
            if not alpha.is_compact:
                signs[i] = signs[j] = -1
        return cls(tuple(perm), tuple(signs))

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        """(self * other)(lam) = self(other(lam))."""
        perm = tuple(other.perm[p] for p in self.perm)
        signs = tuple(s * other.signs[p] for s, p in zip(self.signs, self.perm))
        return SignedPermutation(perm, signs)

    def inverse(self) -> "SignedPermutation":
        k = len(self.perm)
        perm = [0] * k
        signs = [1] * k
        for i, (p, s) in enumerate(zip(self.perm, self.signs)):
            perm[p] = i
            signs[p] = s
        return SignedPermutation(tuple(perm), tuple(signs))

    def apply(self, vec: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(s * vec[p] for s, p in zip(self.signs, self.perm))

    def act(self, mu: Weight) -> Weight:
        return Weight(self.apply(mu.doubled))

    def act_root(self, alpha: Root) -> Root:
        return Root(self.apply(alpha.vector))

    def is_identity(self) -> bool:
        return self.perm == tuple(range(len(self.perm))) and all(s == 1 for s in self.signs)


__all__ = [
    "NotDominantError",
    "Root",
    "SignedPermutation",
    "positive_roots",
    "compact_positive",
    "noncompact_positive",
    "all_roots",
    "simple_roots",
    "rho",
    "pairing",
    "inner",
    "reflect",
    "dominant_sort",
    "dominance_leq",
    "simple_coordinates",
    "require_k_dominant",
]
