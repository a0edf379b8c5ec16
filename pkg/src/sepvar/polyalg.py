"""Sparse polynomials in x_ij and formal invariant symbols R_ab.

A monomial is a sorted tuple of ``(var, exponent)`` pairs where ``var`` is
``(0, a, b)`` for R_ab (a <= b) and ``(1, i, j)`` for x_ij.  R-symbols
therefore sort before x-variables, rows before columns.

An element of I (x) H is stored as an ordinary :class:`MPoly`: the R-part
of each monomial is the left tensor factor, the x-part the right one.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .partitions import Partition, Weight, require_sigma_nk

R_KIND, X_KIND = 0, 1

Var = tuple[int, int, int]
Monomial = tuple[tuple[Var, int], ...]


class NotWeightVectorError(ValueError):
    """Raised when terms of a tensor carry different h_ii eigenvalues."""


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def _var_name(v: Var) -> str:
    kind, i, j = v
    letter = "R" if kind == R_KIND else "x"
    return f"{letter}{i}{j}" if i < 10 and j < 10 else f"{letter}{i}_{j}"


class MPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[m] = Fraction(c)
        self.terms: dict[Monomial, Fraction] = clean

    # constructors
    @classmethod
    def const(cls, c) -> "MPoly":
        return cls({(): Fraction(c)})

    @classmethod
    def var(cls, v: Var, exp: int = 1) -> "MPoly":
        return cls({((v, exp),): Fraction(1)}) if exp else cls.const(1)

    @classmethod
    def from_monomial(cls, m: Monomial, c=1) -> "MPoly":
        return cls({m: Fraction(c)})

    # arithmetic
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other) -> "MPoly":
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return MPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "MPoly":
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "MPoly":
        return (-self) + other

    def __mul__(self, other) -> "MPoly":
        if isinstance(other, (int, Fraction)):
            return MPoly({m: c * other for m, c in self.terms.items()})
        out: dict[Monomial, Fraction] = defaultdict(Fraction)
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                out[_mono_mul(m1, m2)] += c1 * c2
        return MPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "MPoly":
        if e < 0:
            raise ValueError("negative exponent")
        out, base = MPoly.const(1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def derivative(self, v: Var) -> "MPoly":
        out = {}
        for m, c in self.terms.items():
            d = dict(m)
            e = d.get(v, 0)
            if not e:
                continue
            if e == 1:
                del d[v]
            else:
                d[v] = e - 1
            key = tuple(sorted(d.items()))
            out[key] = out.get(key, 0) + c * e
        return MPoly(out)

    # structure
    def variables(self) -> list[Var]:
        return sorted({v for m in self.terms for v, _ in m})

    def has_R(self) -> bool:
        return any(v[0] == R_KIND for m in self.terms for v, _ in m)

    def split_by_x(self) -> dict[Monomial, "MPoly"]:
        """Group terms by x-monomial; values are the R-parts."""
        groups: dict[Monomial, dict] = defaultdict(dict)
        for m, c in self.terms.items():
            rpart = tuple(p for p in m if p[0][0] == R_KIND)
            xpart = tuple(p for p in m if p[0][0] == X_KIND)
            groups[xpart][rpart] = c
        return {x: MPoly(t) for x, t in groups.items()}

    def split_by_R(self) -> dict[Monomial, "MPoly"]:
        """Group terms by R-monomial; values are the x-parts (right factors)."""
        groups: dict[Monomial, dict] = defaultdict(dict)
        for m, c in self.terms.items():
            rpart = tuple(p for p in m if p[0][0] == R_KIND)
            xpart = tuple(p for p in m if p[0][0] == X_KIND)
            groups[rpart][xpart] = c
        return {r: MPoly(t) for r, t in groups.items()}

    def R_degrees(self) -> set[int]:
        return {sum(e for v, e in m if v[0] == R_KIND) for m in self.terms}

    def map_x(self, f) -> "MPoly":
        """Apply ``f`` to the x-part of every term, keeping the R-part."""
        out = MPoly()
        for rmono, xpoly in self.split_by_R().items():
            out = out + MPoly.from_monomial(rmono) * f(xpoly)
        return out

    # output
    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Graded lexicographic order, largest first."""
        variables = self.variables()
        pos = {v: i for i, v in enumerate(variables)}

        def key(item):
            m, _ = item
            vec = [0] * len(variables)
            for v, e in m:
                vec[pos[v]] = e
            return (-sum(vec), [-e for e in vec])

        return sorted(self.terms.items(), key=key)

    def __str__(self):
        if not self.terms:
            return "0"
        out = ""
        for m, c in self.sorted_terms():
            factors = [_var_name(v) + (f"^{e}" if e > 1 else "") for v, e in m]
            mag = abs(c)
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            body = "*".join(factors)
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def __repr__(self):
        return f"MPoly({self})"

    def latex(self, tensor: bool = False) -> str:
        """LaTeX; with ``tensor=True`` an otimes separates R-part and x-part."""
        if not self.terms:
            return "0"

        def tex(v: Var, e: int) -> str:
            kind, i, j = v
            letter = "r" if kind == R_KIND else "x"
            base = f"{letter}_{{{i}{j}}}" if i < 10 and j < 10 else f"{letter}_{{{i},{j}}}"
            return base + (f"^{{{e}}}" if e > 1 else "")

        out = ""
        for m, c in self.sorted_terms():
            r = "".join(tex(v, e) for v, e in m if v[0] == R_KIND)
            x = "".join(tex(v, e) for v, e in m if v[0] == X_KIND)
            if tensor:
                body = f"{r or '1'} \\otimes {x or '1'}"
            else:
                body = r + x
            mag = abs(c)
            coeff = ""
            if mag != 1 or not body:
                coeff = str(mag) if mag.denominator == 1 else f"\\frac{{{mag.numerator}}}{{{mag.denominator}}}"
            sign = "-" if c < 0 else ("+" if out else "")
            out += (f" {sign} " if out else sign) + coeff + body
        return out

    def to_json(self) -> dict:
        variables = self.variables()
        pos = {v: i for i, v in enumerate(variables)}
        terms = []
        for m, c in self.sorted_terms():
            vec = [0] * len(variables)
            for v, e in m:
                vec[pos[v]] = e
            terms.append([_frac(c), vec])
        return {"variables": [_var_name(v) for v in variables], "terms": terms, "text": str(self)}


TensorElement = MPoly


def _frac(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def x(i: int, j: int) -> MPoly:
    return MPoly.var((X_KIND, i, j))


def R(a: int, b: int) -> MPoly:
    a, b = min(a, b), max(a, b)
    return MPoly.var((R_KIND, a, b))


def r_eval(i: int, j: int, n: int, k: int | None = None) -> MPoly:
    """The invariant r_ij = sum_l x_il x_{j,n+1-l}."""
    if not (1 <= i <= j) or (k is not None and j > k):
        raise IndexError(f"need 1 <= i <= j <= k, got i={i}, j={j}, k={k}")
    return _r_eval_cached(i, j, n)


@lru_cache(maxsize=None)
def _r_eval_cached(i: int, j: int, n: int) -> MPoly:
    out = MPoly()
    for l in range(1, n + 1):
        out = out + x(i, l) * x(j, n + 1 - l)
    return out


def _require_no_R(P: MPoly):
    if P.has_R():
        raise ValueError("polynomial contains R-symbols; expected an element of P")


def laplacian(a: int, b: int, P: MPoly, n: int) -> MPoly:
    _require_no_R(P)
    out = MPoly()
    for l in range(1, n + 1):
        out = out + P.derivative((X_KIND, a, l)).derivative((X_KIND, b, n + 1 - l))
    return out


def h_action_x(s: int, t: int, P: MPoly, n: int) -> MPoly:
    """sum_l x_sl d/dx_tl P + (n/2) delta_st P."""
    _require_no_R(P)
    return _h_x_part(s, t, P, n) + (P * Fraction(n, 2) if s == t else MPoly())


def _h_x_part(s: int, t: int, P: MPoly, n: int) -> MPoly:
    out = MPoly()
    for l in range(1, n + 1):
        d = P.derivative((X_KIND, t, l))
        if d:
            out = out + x(s, l) * d
    return out


def _det(rows: list[list[MPoly]]) -> MPoly:
    size = len(rows)
    memo: dict[frozenset, MPoly] = {}

    def expand(cols: frozenset) -> MPoly:
        r = size - len(cols)
        if not cols:
            return MPoly.const(1)
        if cols in memo:
            return memo[cols]
        out = MPoly()
        ordered = sorted(cols)
        for pos, c in enumerate(ordered):
            entry = rows[r][c]
            if not entry:
                continue
            sub = expand(cols - {c})
            if sub:
                term = entry * sub
                out = out + (term if pos % 2 == 0 else -term)
        memo[cols] = out
        return out

    return expand(frozenset(range(size)))


def determinant(rows: list[list[MPoly]]) -> MPoly:
    """Cofactor expansion with memoization over column subsets."""
    if any(len(r) != len(rows) for r in rows):
        raise ValueError("matrix is not square")
    return _det(rows)


def delta_j(j: int, n: int, k: int) -> MPoly:
    """Determinant of the bottom-right j x j corner of the k x n matrix x."""
    if not 1 <= j <= min(n, k):
        raise ValueError(f"corner size {j} outside 1..min(n,k)={min(n, k)}")
    rows = [[x(k - j + 1 + a, n - j + 1 + b) for b in range(j)] for a in range(j)]
    return determinant(rows)


def delta_sigma(sigma: Partition, n: int, k: int) -> MPoly:
    require_sigma_nk(sigma, n, k)
    if sigma.depth > min(n, k):
        raise ValueError(f"depth {sigma.depth} exceeds min(n,k)={min(n, k)}")
    out = MPoly.const(1)
    for j in range(1, sigma.depth + 1):
        a = sigma.part(j) - sigma.part(j + 1)
        if a:
            out = out * delta_j(j, n, k) ** a
    return out


def _eval_R_monomial(m: Monomial, n: int) -> MPoly:
    out = MPoly.const(1)
    for (kind, a, b), e in m:
        out = out * _r_eval_cached(a, b, n) ** e
    return out


def phi(T: MPoly, n: int) -> MPoly:
    """Substitute R_ab -> r_ab and multiply out."""
    out = MPoly()
    for rmono, xpoly in T.split_by_R().items():
        out = out + _eval_R_monomial(rmono, n) * xpoly
    return out


def h_action_tensor(s: int, t: int, T: MPoly, n: int) -> MPoly:
    """Action of h_st on I (x) H: derivation on R-parts plus the x-action."""
    out: dict[Monomial, Fraction] = defaultdict(Fraction)
    for m, c in T.terms.items():
        d = dict(m)
        for v, e in m:
            kind, a, b = v
            if kind == R_KIND:
                rest = dict(d)
                if e == 1:
                    del rest[v]
                else:
                    rest[v] = e - 1
                hits = []
                if t == a:
                    hits.append((min(s, b), max(s, b)))
                if t == b:
                    hits.append((min(a, s), max(a, s)))
                for p, q in hits:
                    nd = dict(rest)
                    key = (R_KIND, p, q)
                    nd[key] = nd.get(key, 0) + 1
                    out[tuple(sorted(nd.items()))] += c * e
            elif kind == X_KIND and a == t:
                rest = dict(d)
                if e == 1:
                    del rest[v]
                else:
                    rest[v] = e - 1
                key = (X_KIND, s, b)
                rest[key] = rest.get(key, 0) + 1
                out[tuple(sorted(rest.items()))] += c * e
        if s == t:
            out[m] += c * Fraction(n, 2)
    return MPoly(out)


def _row_eigen(m: Monomial, i: int) -> int:
    total = 0
    for (kind, a, b), e in m:
        if kind == X_KIND:
            if a == i:
                total += e
        else:
            total += e * ((a == i) + (b == i))
    return total


def weight_of(T: MPoly, n: int, k: int) -> Weight:
    """lambda_i = -(eigenvalue of h_ii), checked constant over all terms."""
    if not T:
        raise NotWeightVectorError("the zero element has no weight")
    found = None
    for m in T.terms:
        eig = tuple(_row_eigen(m, i) for i in range(1, k + 1))
        if found is None:
            found = eig
        elif eig != found:
            raise NotWeightVectorError(f"terms with h_ii eigenvalues {found} and {eig}")
    return Weight(tuple(-2 * e - n for e in found))


def is_harmonic(P: MPoly, n: int, k: int) -> bool:
    return all(
        not laplacian(a, b, P, n) for a in range(1, k + 1) for b in range(a, k + 1)
    )


def is_zero_in_IH(T: MPoly, n: int) -> bool:
    """Zero in I (x) P iff every left factor evaluates to zero."""
    return all(not phi(q, n) for q in T.split_by_x().values())


def is_hw_tensor(T: MPoly, n: int, k: int) -> bool:
    return all(
        is_zero_in_IH(h_action_tensor(s, t, T, n), n)
        for s in range(1, k + 1)
        for t in range(1, s)
    )


def monomials(variables: Iterable[Var], degree: int) -> list[Monomial]:
    """All monomials of the given degree in ``variables``, lexicographic."""
    variables = sorted(variables)
    out: list[Monomial] = []

    def rec(start: int, left: int, acc: list):
        if left == 0:
            out.append(tuple(acc))
            return
        for idx in range(start, len(variables)):
            for e in range(left, 0, -1):
                rec(idx + 1, left - e, acc + [(variables[idx], e)])

    rec(0, degree, [])
    return out


def R_variables(k: int) -> list[Var]:
    return [(R_KIND, a, b) for a in range(1, k + 1) for b in range(a, k + 1)]


def x_variables(n: int, k: int) -> list[Var]:
    return [(X_KIND, i, j) for i in range(1, k + 1) for j in range(1, n + 1)]


__all__ = [
    "MPoly",
    "TensorElement",
    "NotWeightVectorError",
    "x",
    "R",
    "r_eval",
    "laplacian",
    "h_action_x",
    "determinant",
    "delta_j",
    "delta_sigma",
    "phi",
    "h_action_tensor",
    "weight_of",
    "is_harmonic",
    "is_zero_in_IH",
    "is_hw_tensor",
    "monomials",
    "R_variables",
    "x_variables",
]
