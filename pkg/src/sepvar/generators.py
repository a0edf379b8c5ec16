"""Bordered matrix M^(n,k), its (n+1)-minors, and kernel generators.

M^(n,k) is the symmetric (n+k)-square matrix

    [ R_ij        x reversed ]
    [ x^T rev.    J_n        ]

with J_n the antidiagonal identity.  After substituting R_ij -> r_ij it
has rank n, so each (n+1)-minor, read as an element of I (x) H, lies in
the kernel of the multiplication map.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .ew import lambda_prime
from .hilbert import weyl_dim_gl
from .linalg import Echelon
from .partitions import Partition, in_sigma0, in_sigma_nk, narrow, narrow_decompose, sigma_sharp
from .polyalg import (
    MPoly,
    R,
    _eval_R_monomial,
    delta_sigma,
    determinant,
    is_harmonic,
    is_hw_tensor,
    is_zero_in_IH,
    phi,
    h_action_tensor,
    weight_of,
    x,
)


class GeneratorPreconditionError(ValueError):
    """A generator was requested for data outside its domain."""


class DimensionMismatchError(RuntimeError):
    """Lowering closure stabilized at an unexpected dimension."""


@dataclass(frozen=True)
class BorderedMatrix:
    n: int
    k: int

    @property
    def size(self) -> int:
        return self.n + self.k

    def entry(self, i: int, j: int) -> MPoly:
        """1-based entry."""
        n, k = self.n, self.k
        if not (1 <= i <= self.size and 1 <= j <= self.size):
            raise IndexError(f"entry ({i},{j}) outside a {self.size}x{self.size} matrix")
        if i <= k and j <= k:
            return R(i, j)
        if i <= k < j:
            return x(i, n + k + 1 - j)
        if j <= k < i:
            return x(j, n + k + 1 - i)
        return MPoly.const(1 if (i - k) + (j - k) == n + 1 else 0)

    def rows(self) -> list[list[MPoly]]:
        return [[self.entry(i, j) for j in range(1, self.size + 1)] for i in range(1, self.size + 1)]

    def evaluate(self, point: dict[tuple[int, int], Fraction]) -> list[list[Fraction]]:
        """Numeric matrix at x_ij = point[(i, j)] with R_ij -> r_ij."""
        out = []
        for row in self.rows():
            vals = []
            for e in row:
                total = Fraction(0)
                for m, c in phi(e, self.n).terms.items():
                    term = c
                    for (_, a, b), p in m:
                        term *= point[(a, b)] ** p
                    total += term
                vals.append(total)
            out.append(vals)
        return out

    def generic_rank(self, trials: int = 50, seed: int = 0) -> set[int]:
        """Ranks observed at random rational points."""
        rng = random.Random(seed)
        seen = set()
        for _ in range(trials):
            point = {
                (i, j): Fraction(rng.randint(-9, 9), rng.randint(1, 5))
                for i in range(1, self.k + 1)
                for j in range(1, self.n + 1)
            }
            ech = Echelon()
            for row in self.evaluate(point):
                ech.add({c: v for c, v in enumerate(row) if v})
            seen.add(ech.rank)
        return seen


def build_M(n: int, k: int) -> BorderedMatrix:
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    return BorderedMatrix(n, k)


def minor(a: int, b: int, n: int, k: int) -> MPoly:
    """Determinant of the (n+1)-window of M^(n,k) starting at row a, column b."""
    if not (1 <= a <= k and 1 <= b <= k):
        raise IndexError(f"window ({a},{b}) of order {n + 1} leaves M^({n},{k}); need 1 <= a,b <= {k}")
    M = build_M(n, k)
    rows = [[M.entry(a + i, b + j) for j in range(n + 1)] for i in range(n + 1)]
    return determinant(rows)


def _check_generator_input(t: int, d: int, mu: Partition, n: int, k: int) -> Partition:
    if not 0 <= t <= d:
        raise GeneratorPreconditionError(f"need 0 <= t <= d, got t={t}, d={d}")
    if d == 0:
        raise GeneratorPreconditionError("d > 0 required: the trivial diagram has no kernel generator")
    sigma0 = narrow(t, d)
    if not in_sigma_nk(sigma0, n, k):
        raise GeneratorPreconditionError(f"narrow diagram ({t},{d}) is not in Sigma_{{{n},{k}}}")
    if not in_sigma0(sigma0, n, k):
        raise GeneratorPreconditionError(
            f"narrow diagram ({t},{d}) is not in Sigma0_{{{n},{k}}} (its Verma module is irreducible)"
        )
    if mu.depth > t:
        raise GeneratorPreconditionError(f"depth of mu={mu} exceeds t={t}")
    return sigma0 + mu


def generator(t: int, d: int, mu: Partition, n: int, k: int) -> MPoly:
    """Highest weight vector (det M_{d-n+k, t-n+k}) * delta_mu of Ker phi_sigma."""
    _check_generator_input(t, d, mu, n, k)
    base = minor(d - n + k, t - n + k, n, k)
    if not mu.depth:
        return base
    dm = delta_sigma(mu, n, k)
    return base.map_x(lambda p: p * dm)


def generator_for(sigma: Partition, n: int, k: int) -> tuple[MPoly, tuple[int, int, Partition]]:
    t, d, mu = narrow_decompose(sigma)
    return generator(t, d, mu, n, k), (t, d, mu)


def verify_generator(t: int, d: int, mu: Partition, n: int, k: int) -> dict:
    sigma = _check_generator_input(t, d, mu, n, k)
    T = generator(t, d, mu, n, k)
    expected = lambda_prime(sigma, n, k)
    try:
        got = weight_of(T, n, k)
    except ValueError:
        got = None
    report = {
        "nonzero": not is_zero_in_IH(T, n),
        "in_kernel": not phi(T, n),
        "harmonic": all(is_harmonic(p, n, k) for p in T.split_by_R().values()),
        "weight": got == expected,
        "highest_weight": is_hw_tensor(T, n, k),
    }
    report["all_pass"] = all(report.values())
    report["expected_weight"] = expected.to_json()
    report["weight_of"] = got.to_json() if got is not None else None
    return report


def ih_coordinates(T: MPoly, n: int, k: int) -> dict:
    """Coordinates of T in I (x) P, faithful even when I has relations."""
    if n >= k or not T.has_R():
        return dict(T.terms)
    out: dict = {}
    for rmono, xpoly in T.split_by_R().items():
        ev = _eval_R_monomial(rmono, n)
        for em, ec in ev.terms.items():
            for xm, xc in xpoly.terms.items():
                key = (em, xm)
                v = out.get(key, 0) + ec * xc
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
    return out


def basis_of_F(hwv: MPoly, target_dim: int, n: int, k: int) -> list[MPoly]:
    """Independent lowering-closure of a highest weight vector."""
    if not hwv:
        raise ValueError("highest weight vector is zero")
    ech = Echelon()
    basis: list[MPoly] = []
    queue = deque([hwv])
    ech.add(ih_coordinates(hwv, n, k))
    basis.append(hwv)
    while queue:
        v = queue.popleft()
        for s in range(1, k + 1):
            for t in range(s + 1, k + 1):
                w = h_action_tensor(s, t, v, n)
                if w and ech.add(ih_coordinates(w, n, k)):
                    basis.append(w)
                    queue.append(w)
                    if len(basis) > target_dim:
                        raise DimensionMismatchError(
                            f"lowering closure exceeds the expected dimension {target_dim}"
                        )
    if len(basis) != target_dim:
        raise DimensionMismatchError(
            f"lowering closure has dimension {len(basis)}, expected {target_dim}"
        )
    return basis


def harmonic_basis(sigma: Partition, n: int, k: int) -> list[MPoly]:
    """Basis of the copy of F_{sigma#} generated by delta_sigma."""
    return basis_of_F(delta_sigma(sigma, n, k), weyl_dim_gl(sigma_sharp(sigma, n, k)), n, k)


def lowest_R_degree(T: MPoly) -> int:
    return min(T.R_degrees())


__all__ = [
    "GeneratorPreconditionError",
    "DimensionMismatchError",
    "BorderedMatrix",
    "build_M",
    "minor",
    "generator",
    "generator_for",
    "verify_generator",
    "basis_of_F",
    "harmonic_basis",
    "ih_coordinates",
    "lowest_R_degree",
]
