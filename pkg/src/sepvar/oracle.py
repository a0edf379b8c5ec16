"""Brute-force graded dimensions by exact linear algebra on monomial bases.

Nothing here consults the root system.  Polynomials are dicts keyed by
packed monomials: the exponent of x-variable v occupies bits
``[BITS*v, BITS*(v+1))`` of a Python int, so multiplying monomials is
integer addition.  Every map below preserves the row multidegree (the
gl(k)-weight), which is used to split each matrix into independent blocks.
"""

from __future__ import annotations

import os
from collections import defaultdict
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb

from .generators import harmonic_basis
from .linalg import Echelon
from .partitions import Partition, require_sigma_nk
from .polyalg import MPoly, R_KIND, X_KIND

BITS = 6
MASK = (1 << BITS) - 1
DEFAULT_MAX_COLUMNS = 200_000


class ColumnLimitError(ValueError):
    """A monomial basis is larger than the configured guardrail."""


def max_columns() -> int:
    raw = os.environ.get("SEPVAR_MAX_COLUMNS")
    return int(raw) if raw else DEFAULT_MAX_COLUMNS


def _guard(count: int, what: str):
    limit = max_columns()
    if count > limit:
        raise ColumnLimitError(
            f"{what} needs {count} columns, above the limit of {limit} (set SEPVAR_MAX_COLUMNS to raise it)"
        )


def _check_nk(n: int, k: int):
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")


# --- packed monomials -------------------------------------------------------


def _xi(i: int, j: int, n: int) -> int:
    return (i - 1) * n + (j - 1)


def _pack(exps) -> int:
    out = 0
    for v, e in enumerate(exps):
        if e:
            if e > MASK:
                raise OverflowError("exponent too large for packed monomials")
            out |= e << (BITS * v)
    return out


def _unpack(m: int, nvars: int) -> list[int]:
    return [(m >> (BITS * v)) & MASK for v in range(nvars)]


def _row_degrees(m: int, n: int, k: int) -> tuple[int, ...]:
    exps = _unpack(m, n * k)
    return tuple(sum(exps[(i - 1) * n:(i) * n]) for i in range(1, k + 1))


def _mul(a: dict, b: dict) -> dict:
    out: dict[int, int] = defaultdict(int)
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            out[m1 + m2] += c1 * c2
    return {m: c for m, c in out.items() if c}


def _monomial_exponents(nvars: int, degree: int):
    for combo in combinations_with_replacement(range(nvars), degree):
        exps = [0] * nvars
        for v in combo:
            exps[v] += 1
        yield exps


# --- the ring P and harmonics -------------------------------------------------


def dim_P(n: int, k: int, m: int) -> int:
    if m < 0:
        raise ValueError("degree must be non-negative")
    return comb(n * k + m - 1, m)


def _laplacian_image(exps: list[int], n: int, k: int) -> dict:
    """Stacked image (a, b, target) of one monomial under all Laplacians."""
    out: dict = {}
    for a in range(1, k + 1):
        for b in range(a, k + 1):
            for l in range(1, n + 1):
                u, v = _xi(a, l, n), _xi(b, n + 1 - l, n)
                if u == v:
                    c = exps[u] * (exps[u] - 1)
                    if not c:
                        continue
                    t = list(exps)
                    t[u] -= 2
                else:
                    c = exps[u] * exps[v]
                    if not c:
                        continue
                    t = list(exps)
                    t[u] -= 1
                    t[v] -= 1
                key = (a, b, _pack(t))
                out[key] = out.get(key, 0) + c
    return out


def _torus_weight(exps: list[int], n: int, k: int) -> tuple[int, ...]:
    col = [sum(exps[_xi(i, j, n)] for i in range(1, k + 1)) for j in range(1, n + 1)]
    return tuple(col[l] - col[n - 1 - l] for l in range(n // 2))


def laplacian_rank(n: int, k: int, e: int) -> int:
    """Rank of the stacked Laplacians on polynomials of degree e."""
    _check_nk(n, k)
    if e < 2:
        return 0
    _guard(dim_P(n, k, e), f"harmonics of degree {e}")
    blocks: dict = defaultdict(list)
    for exps in _monomial_exponents(n * k, e):
        key = (
            tuple(sum(exps[(i - 1) * n:i * n]) for i in range(1, k + 1)),
            _torus_weight(exps, n, k),
        )
        blocks[key].append(exps)
    total = 0
    for key in sorted(blocks):
        ech = Echelon()
        for exps in blocks[key]:
            ech.add(_laplacian_image(exps, n, k))
        total += ech.rank
    return total


@lru_cache(maxsize=None)
def dim_H(n: int, k: int, e: int) -> int:
    if e < 0:
        raise ValueError("degree must be non-negative")
    return dim_P(n, k, e) - laplacian_rank(n, k, e)


# --- invariants ---------------------------------------------------------------


def _r_packed(a: int, b: int, n: int) -> dict:
    out: dict[int, int] = defaultdict(int)
    for l in range(1, n + 1):
        exps = [0] * (n * max(a, b))
        exps[_xi(a, l, n)] += 1
        exps[_xi(b, n + 1 - l, n)] += 1
        out[_pack(exps)] += 1
    return dict(out)


def _R_pairs(k: int) -> list[tuple[int, int]]:
    return [(a, b) for a in range(1, k + 1) for b in range(a, k + 1)]


class _InvariantCache:
    """Evaluations of R-monomials, built one factor at a time."""

    def __init__(self, n: int, k: int):
        self.n, self.k = n, k
        self.pairs = _R_pairs(k)
        self.r = [_r_packed(a, b, n) for a, b in self.pairs]
        self.memo: dict[tuple[int, ...], dict] = {(0,) * len(self.pairs): {0: 1}}
        self._bases: dict[int, tuple[tuple[int, ...], ...]] = {}

    def eval(self, rexps: tuple[int, ...]) -> dict:
        got = self.memo.get(rexps)
        if got is not None:
            return got
        last = max(i for i, e in enumerate(rexps) if e)
        prev = list(rexps)
        prev[last] -= 1
        out = _mul(self.eval(tuple(prev)), self.r[last])
        self.memo[rexps] = out
        return out

    def row_degrees(self, rexps) -> tuple[int, ...]:
        deg = [0] * self.k
        for (a, b), e in zip(self.pairs, rexps):
            deg[a - 1] += e
            deg[b - 1] += e
        return tuple(deg)

    def monomials(self, d: int) -> list[tuple[int, ...]]:
        return [tuple(e) for e in _monomial_exponents(len(self.pairs), d)]

    def basis(self, d: int) -> tuple[tuple[int, ...], ...]:
        """R-monomials of degree d whose evaluations form a basis of I_d."""
        if d in self._bases:
            return self._bases[d]
        mons = self.monomials(d)
        _guard(len(mons), f"invariants of degree {d}")
        blocks: dict = defaultdict(list)
        for m in mons:
            blocks[self.row_degrees(m)].append(m)
        chosen = []
        for key in sorted(blocks):
            ech = Echelon()
            for m in blocks[key]:
                if ech.add(self.eval(m)):
                    chosen.append(m)
        self._bases[d] = tuple(sorted(chosen))
        return self._bases[d]


@lru_cache(maxsize=None)
def _invariants(n: int, k: int) -> _InvariantCache:
    return _InvariantCache(n, k)


def dim_I(n: int, k: int, d: int) -> int:
    """Rank of the evaluation map on degree-d monomials in the R_ab."""
    _check_nk(n, k)
    if d < 0:
        raise ValueError("degree must be non-negative")
    return len(_invariants(n, k).basis(d))


def dim_ker_total(n: int, k: int, m: int) -> int:
    """Dimension of Ker phi in total degree m (2 * invariant degree + harmonic degree)."""
    if m < 0:
        raise ValueError("degree must be non-negative")
    source = sum(dim_I(n, k, d) * dim_H(n, k, m - 2 * d) for d in range(m // 2 + 1))
    return source - dim_P(n, k, m)


# --- one isotypic component ---------------------------------------------------


def _to_packed(P: MPoly, n: int) -> dict:
    out = {}
    for m, c in P.terms.items():
        exps = [0] * (n * max((v[1] for v, _ in m), default=1))
        for (kind, i, j), e in m:
            if kind != X_KIND:
                raise ValueError("expected a polynomial in x only")
            exps[_xi(i, j, n)] += e
        out[_pack(exps)] = c if c.denominator != 1 else int(c)
    return out


def _R_mpoly(rexps: tuple[int, ...], k: int) -> MPoly:
    mono = tuple(((R_KIND, a, b), e) for (a, b), e in zip(_R_pairs(k), rexps) if e)
    return MPoly.from_monomial(mono)


def _product_system(n: int, k: int, sigma: Partition, d: int):
    require_sigma_nk(sigma, n, k)
    if d < 0:
        raise ValueError("degree must be non-negative")
    inv = _invariants(n, k)
    F = harmonic_basis(sigma, n, k)
    B = inv.basis(d)
    _guard(len(B) * len(F), f"the multiplication map in degree {d}")
    Fp = [_to_packed(f, n) for f in F]
    Frow = [_row_degrees(next(iter(f)), n, k) for f in Fp]
    cells = []
    for bi, b in enumerate(B):
        brow = inv.row_degrees(b)
        for fi in range(len(F)):
            key = tuple(x + y for x, y in zip(brow, Frow[fi]))
            cells.append((key, bi, fi))
    blocks: dict = defaultdict(list)
    for key, bi, fi in cells:
        blocks[key].append((bi, fi))
    return inv, B, F, Fp, blocks


def dim_ker_sigma(n: int, k: int, sigma: Partition, d: int) -> int:
    """dim of the degree-d part of Ker(I (x) F_sigma# -> P)."""
    inv, B, F, Fp, blocks = _product_system(n, k, sigma, d)
    rank = 0
    for key in sorted(blocks):
        ech = Echelon()
        for bi, fi in blocks[key]:
            ech.add(_mul(inv.eval(B[bi]), Fp[fi]))
        rank += ech.rank
    return len(B) * len(F) - rank


def kernel_vectors(n: int, k: int, sigma: Partition, d: int) -> list[MPoly]:
    """Basis of the degree-d kernel as tensors sum c * R^b (x) f."""
    inv, B, F, Fp, blocks = _product_system(n, k, sigma, d)
    out = []
    for key in sorted(blocks):
        cells = blocks[key]
        ech = Echelon(track=True)
        for bi, fi in cells:
            ech.add(_mul(inv.eval(B[bi]), Fp[fi]))
        for rel in ech.relations:
            T = MPoly()
            for idx, c in sorted(rel.items()):
                bi, fi = cells[idx]
                T = T + _R_mpoly(B[bi], k) * F[fi] * c
            out.append(T)
    return out


def graded_dims(fn, *args, max_degree: int) -> dict[int, int]:
    return {m: fn(*args, m) for m in range(max_degree + 1)}


__all__ = [
    "ColumnLimitError",
    "DEFAULT_MAX_COLUMNS",
    "dim_P",
    "dim_H",
    "laplacian_rank",
    "dim_I",
    "dim_ker_total",
    "dim_ker_sigma",
    "kernel_vectors",
    "graded_dims",
    "max_columns",
]
