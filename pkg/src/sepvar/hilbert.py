"""Hilbert series of N(lam), L(lam), the invariant ring and Ker phi_sigma.

Series are exact rational functions ``numerator(q) / (1 - q)^pole_order``
with integer numerators.  During alternating sums all pieces share the
pole k(k+1)/2 and are normalized only at the end.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from .ew import resolve_weight
from .partitions import Partition, Weight, require_sigma_nk, sigma_sharp
from .roots import NotDominantError


def _trim(coeffs) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _poly_mul(a, b) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _one_minus_q_pow(p: int) -> tuple[int, ...]:
    return tuple((-1) ** i * comb(p, i) for i in range(p + 1))


@dataclass(frozen=True)
class RationalSeries:
    numerator: tuple[int, ...]
    pole_order: int

    def __post_init__(self):
        num = tuple(self.numerator)
        for c in num:
            if Fraction(c).denominator != 1:
                raise ValueError(f"non-integral numerator coefficient {c}")
        object.__setattr__(self, "numerator", _trim(int(c) for c in num))
        if self.pole_order < 0:
            raise ValueError("pole order must be non-negative")

    @classmethod
    def zero(cls) -> "RationalSeries":
        return cls((), 0)

    def is_zero(self) -> bool:
        return not self.numerator

    def raise_pole(self, p: int) -> "RationalSeries":
        """Same series written over (1 - q)^p, p >= pole_order."""
        if p < self.pole_order:
            raise ValueError("cannot lower the pole this way")
        return RationalSeries(_poly_mul(self.numerator, _one_minus_q_pow(p - self.pole_order)), p)

    def normalized(self) -> "RationalSeries":
        num, p = list(self.numerator), self.pole_order
        if not num:
            return RationalSeries((), 0)
        while p > 0 and sum(num) == 0:
            # synthetic division by (1 - q): quotient c_j = sum_{i<=j} a_i
            quot, acc = [], 0
            for a in num[:-1]:
                acc += a
                quot.append(acc)
            num, p = quot, p - 1
        return RationalSeries(tuple(num), p)

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        p = max(self.pole_order, other.pole_order)
        a, b = self.raise_pole(p).numerator, other.raise_pole(p).numerator
        m = max(len(a), len(b))
        a, b = a + (0,) * (m - len(a)), b + (0,) * (m - len(b))
        return RationalSeries(tuple(x + y for x, y in zip(a, b)), p)

    def __neg__(self) -> "RationalSeries":
        return RationalSeries(tuple(-c for c in self.numerator), self.pole_order)

    def __sub__(self, other: "RationalSeries") -> "RationalSeries":
        return self + (-other)

    def scale(self, c: int) -> "RationalSeries":
        return RationalSeries(tuple(c * x for x in self.numerator), self.pole_order)

    def shift(self, m: int) -> "RationalSeries":
        """Multiply by q^m."""
        if not self.numerator:
            return self
        return RationalSeries((0,) * m + self.numerator, self.pole_order)

    def __eq__(self, other):
        if not isinstance(other, RationalSeries):
            return NotImplemented
        a, b = self.normalized(), other.normalized()
        return a.numerator == b.numerator and a.pole_order == b.pole_order

    def __hash__(self):
        n = self.normalized()
        return hash((n.numerator, n.pole_order))

    def expand(self, order: int) -> list[int]:
        return expand(self, order)

    def render(self) -> str:
        return render(self)

    def to_json(self) -> dict:
        s = self.normalized()
        return {"numerator": list(s.numerator), "pole_order": s.pole_order, "rendered": render(s)}


def expand(s: RationalSeries, order: int) -> list[int]:
    """First order + 1 power-series coefficients."""
    if order < 0:
        raise ValueError("order must be non-negative")
    p = s.pole_order
    # coefficients of 1/(1-q)^p
    base = [comb(j + p - 1, j) if p else int(j == 0) for j in range(order + 1)]
    out = [0] * (order + 1)
    for i, a in enumerate(s.numerator):
        if i > order:
            break
        for j in range(order + 1 - i):
            out[i + j] += a * base[j]
    return out


def _render_poly(coeffs: tuple[int, ...]) -> str:
    out = ""
    for i, c in enumerate(coeffs):
        if not c:
            continue
        mono = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
        mag = abs(c)
        body = str(mag) if (mag != 1 or not mono) else ""
        sign = "-" if c < 0 else ("+" if out else "")
        out += f"{sign}{body}{mono}"
    return out


def render(s: RationalSeries) -> str:
    """Factored text form such as ``3q(1+q)/(1-q)^5``."""
    s = s.normalized()
    if s.is_zero():
        return "0"
    num = list(s.numerator)
    low = next(i for i, c in enumerate(num) if c)
    rest = num[low:]
    g = 0
    for c in rest:
        g = gcd(g, c)
    if rest[-1] < 0:
        g = -g
    rest = tuple(c // g for c in rest)
    head = "" if g == 1 else ("-" if g == -1 else str(g))
    qpart = "" if low == 0 else ("q" if low == 1 else f"q^{low}")
    if len([c for c in rest if c]) > 1:
        body = f"({_render_poly(rest)})"
        text = head + qpart + body
    else:
        text = head + qpart
        if not text or text == "-":
            text += "1"
    if s.pole_order == 0:
        return text
    den = "(1-q)" if s.pole_order == 1 else f"(1-q)^{s.pole_order}"
    return f"{text}/{den}"


def weyl_dim_gl(lam: Weight) -> int:
    """Dimension of the irreducible gl(k)-module of highest weight lam."""
    if not lam.is_k_dominant():
        raise NotDominantError(f"{lam!r} is not dominant for gl(k)")
    d = lam.doubled
    k = len(d)
    num, den = 1, 1
    for i in range(k):
        for j in range(i + 1, k):
            num *= (d[i] - d[j]) // 2 + (j - i)
            den *= j - i
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError("Weyl dimension formula gave a non-integer")
    return q


def _free_pole(k: int) -> int:
    return k * (k + 1) // 2


def hs_verma(lam: Weight) -> RationalSeries:
    k = len(lam)
    return RationalSeries((weyl_dim_gl(lam),), _free_pole(k))


def hs_L_weight(lam: Weight) -> RationalSeries:
    k = len(lam)
    pole = _free_pole(k)
    res = resolve_weight(lam)
    num: dict[int, int] = {}
    for i, stage in enumerate(res.stages):
        for term in stage:
            num[term.shift] = num.get(term.shift, 0) + (-1) ** i * weyl_dim_gl(term.weight)
    top = max(num) if num else 0
    return RationalSeries(tuple(num.get(j, 0) for j in range(top + 1)), pole).normalized()


def hs_L(sigma: Partition, n: int, k: int) -> RationalSeries:
    require_sigma_nk(sigma, n, k)
    return hs_L_weight(sigma_sharp(sigma, n, k))


def hs_I(n: int, k: int) -> RationalSeries:
    if n >= k:
        return RationalSeries((1,), _free_pole(k))
    return hs_L(Partition(()), n, k)


def hs_kernel(sigma: Partition, n: int, k: int) -> RationalSeries:
    """dim(F_{sigma#}) H_I - H_L."""
    require_sigma_nk(sigma, n, k)
    dim_f = weyl_dim_gl(sigma_sharp(sigma, n, k))
    return (hs_I(n, k).scale(dim_f) - hs_L(sigma, n, k)).normalized()


__all__ = [
    "RationalSeries",
    "expand",
    "render",
    "weyl_dim_gl",
    "hs_verma",
    "hs_L",
    "hs_L_weight",
    "hs_I",
    "hs_kernel",
]
