"""Young diagrams, half-integral weights and the Howe-duality labels.

A diagram ``sigma`` labels an O(n)-type occurring in polynomials on k
vectors in C^n.  The sets handled here are

* ``Sigma_{n,k}``: at most n boxes in the first two columns, depth <= k;
* ``Sigma0_{n,k}``: labels whose generalized Verma module is reducible;
* ``Omega_{n,k}``: narrow diagrams (at most two columns).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator


class NotInSigmaError(ValueError):
    """Raised when a diagram is outside Sigma_{n,k}."""


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"4,3,1"``; the empty string is the trivial diagram."""
        text = text.strip().strip("()")
        if not text:
            return cls(())
        try:
            parts = tuple(int(p) for p in text.split(",") if p.strip())
        except ValueError:
            raise ValueError(f"cannot parse partition {text!r}") from None
        return cls(parts)

    def __str__(self):
        return ",".join(str(p) for p in self.parts)

    def __repr__(self):
        return f"Partition({self.parts})"

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def part(self, i: int) -> int:
        """1-based row length, zero past the depth."""
        if i < 1:
            raise IndexError(i)
        return self.parts[i - 1] if i <= len(self.parts) else 0

    @property
    def depth(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def column_length(self, j: int) -> int:
        return sum(1 for p in self.parts if p >= j)

    def __add__(self, other: "Partition") -> "Partition":
        m = max(len(self), len(other))
        return Partition(tuple(self.part(i) + other.part(i) for i in range(1, m + 1)))


@dataclass(frozen=True)
class Weight:
    """Weight in epsilon-coordinates, stored as twice its coordinates."""

    doubled: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "doubled", tuple(int(c) for c in self.doubled))

    @classmethod
    def of(cls, *coords) -> "Weight":
        doubled = []
        for c in coords:
            c2 = Fraction(c) * 2
            if c2.denominator != 1:
                raise ValueError(f"coordinate {c} is not a half-integer")
            doubled.append(int(c2))
        return cls(tuple(doubled))

    @classmethod
    def parse(cls, text: str) -> "Weight":
        return cls.of(*(Fraction(t) for t in text.strip().strip("()").split(",")))

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, 2) for c in self.doubled)

    def __len__(self):
        return len(self.doubled)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __add__(self, other: "Weight") -> "Weight":
        _check_len(self, other)
        return Weight(tuple(a + b for a, b in zip(self.doubled, other.doubled)))

    def __sub__(self, other: "Weight") -> "Weight":
        _check_len(self, other)
        return Weight(tuple(a - b for a, b in zip(self.doubled, other.doubled)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.doubled))

    def scale(self, c) -> "Weight":
        c = Fraction(c)
        return Weight.of(*(x * c for x in self.coords))

    def total(self) -> Fraction:
        return Fraction(sum(self.doubled), 2)

    def is_integral(self) -> bool:
        return all(c % 2 == 0 for c in self.doubled)

    def is_k_dominant(self) -> bool:
        """Weakly decreasing with integral consecutive differences."""
        d = self.doubled
        return all(a >= b and (a - b) % 2 == 0 for a, b in zip(d, d[1:]))

    def __str__(self):
        return ",".join(_frac_str(c) for c in self.coords)

    def __repr__(self):
        return f"Weight({str(self)})"

    def to_json(self) -> list[str]:
        return [_frac_str(c) for c in self.coords]


def _frac_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _check_len(a: Weight, b: Weight):
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {a!r} vs {b!r}")


def unit(k: int, i: int, c: int = 1) -> Weight:
    """c * epsilon_i (1-based) as a length-k weight."""
    d = [0] * k
    d[i - 1] = 2 * c
    return Weight(tuple(d))


def depth(sigma: Partition) -> int:
    return sigma.depth


def sigma_nk_violation(sigma: Partition, n: int, k: int) -> str | None:
    """Name of the violated Sigma_{n,k} condition, or None."""
    two_cols = sigma.column_length(1) + sigma.column_length(2)
    if two_cols > n:
        return f"diagram {sigma} has {two_cols} boxes in its first two columns, more than n={n}"
    if sigma.depth > k:
        return f"diagram {sigma} has depth {sigma.depth}, more than k={k}"
    return None


def in_sigma_nk(sigma: Partition, n: int, k: int) -> bool:
    return sigma_nk_violation(sigma, n, k) is None


def require_sigma_nk(sigma: Partition, n: int, k: int):
    msg = sigma_nk_violation(sigma, n, k)
    if msg is not None:
        raise NotInSigmaError(msg)


def sigma_sharp(sigma: Partition, n: int, k: int) -> Weight:
    """(-sigma_k - n/2, ..., -sigma_1 - n/2)."""
    require_sigma_nk(sigma, n, k)
    return Weight(tuple(-2 * sigma.part(k + 1 - i) - n for i in range(1, k + 1)))


def in_sigma0(sigma: Partition, n: int, k: int) -> bool:
    """Closed-form membership in Sigma0_{n,k}."""
    require_sigma_nk(sigma, n, k)
    if n >= 2 * k - 1:
        return False
    if k > n:
        return True
    return sigma.part(n + 1 - k) >= 2


def narrow(t: int, d: int) -> Partition:
    """Narrow diagram of type (t, d): t rows of length 2, d - t rows of length 1."""
    if not 0 <= t <= d:
        raise ValueError(f"need 0 <= t <= d, got t={t}, d={d}")
    return Partition((2,) * t + (1,) * (d - t))


def narrow_decompose(sigma: Partition) -> tuple[int, int, Partition]:
    """Split sigma = narrow(t, d) + mu with the maximal narrow part."""
    t = sum(1 for p in sigma.parts if p >= 2)
    d = sigma.depth
    mu = Partition(tuple(sigma.part(i) - 2 for i in range(1, t + 1)))
    return t, d, mu


def is_narrow(sigma: Partition) -> bool:
    return all(p <= 2 for p in sigma.parts)


def _bounded_partitions(total: int, max_part: int, max_len: int) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in _bounded_partitions(total - first, first, max_len - 1):
            yield (first,) + rest


def enumerate_sigma(n: int, k: int, max_boxes: int) -> list[Partition]:
    """All of Sigma_{n,k} with at most max_boxes boxes, lexicographically sorted."""
    if max_boxes < 0:
        raise ValueError("max_boxes must be non-negative")
    out = []
    for size in range(max_boxes + 1):
        for parts in _bounded_partitions(size, size, min(n, k)):
            sigma = Partition(parts)
            if in_sigma_nk(sigma, n, k):
                out.append(sigma)
    return sorted(out)


def enumerate_partitions(max_boxes: int, max_depth: int) -> list[Partition]:
    """Every partition with bounded size and depth (no Sigma condition)."""
    out = []
    for size in range(max_boxes + 1):
        out.extend(Partition(p) for p in _bounded_partitions(size, size, max_depth))
    return sorted(out)


def parse_sigma(text: str | Iterable[int] | Partition | None) -> Partition:
    if text is None:
        return Partition(())
    if isinstance(text, Partition):
        return text
    if isinstance(text, str):
        return Partition.parse(text)
    return Partition(tuple(text))


__all__ = [
    "NotInSigmaError",
    "Partition",
    "Weight",
    "unit",
    "depth",
    "in_sigma_nk",
    "sigma_nk_violation",
    "require_sigma_nk",
    "sigma_sharp",
    "in_sigma0",
    "narrow",
    "narrow_decompose",
    "is_narrow",
    "enumerate_sigma",
    "enumerate_partitions",
    "parse_sigma",
]
