"""One test per acceptance criterion; each prints a single PASS/FAIL line.

Run directly (``python tests/test_acceptance.py``) or through pytest, where
the lines are repeated in the terminal summary.
"""

from __future__ import annotations

import time
from fractions import Fraction

from sepvar.ew import closed_form_checks, gamma_set, lambda_prime, level_of_reduction, resolution
from sepvar.generators import basis_of_F, generator, ih_coordinates, verify_generator
from sepvar.hilbert import RationalSeries, hs_I, hs_kernel
from sepvar.linalg import Echelon
from sepvar.oracle import dim_ker_sigma, dim_ker_total, kernel_vectors
from sepvar.partitions import Partition, Weight, enumerate_sigma, in_sigma0, narrow_decompose, sigma_sharp, unit
from sepvar.polyalg import R, is_harmonic, is_zero_in_IH, phi, weight_of, x

P, W = Partition.of, Weight.of
LINES: list[str] = []


def report(num: int, title: str, failures: list, elapsed: float, bound: float, detail: str = ""):
    ok = not failures and elapsed < bound
    status = "PASS" if ok else "FAIL"
    extra = f"; {detail}" if detail else ""
    line = f"[{status}] criterion {num}: {title} ({elapsed:.2f}s, bound {bound:g}s{extra})"
    if failures:
        line += f" first failure: {failures[0]}"
    print(line)
    LINES.append(line)
    assert not failures, failures[:5]
    assert elapsed < bound, f"took {elapsed:.2f}s, bound {bound}s"


def series(num, pole=5):
    coeffs = [Fraction(c) for c in num]
    assert all(c.denominator == 1 for c in coeffs)
    return RationalSeries(tuple(int(c) for c in coeffs), pole)


def test_criterion_1_hilbert_series():
    start = time.perf_counter()
    fails = []
    expected = {
        "I": (hs_I(2, 3), series([1, 1, 1])),
        "(1,1)": (hs_kernel(P(1, 1), 2, 3), series([0, 3, 3])),
        "(1)": (hs_kernel(P(1), 2, 3), series([0, 0, 3])),
        "(2)": (hs_kernel(P(2), 2, 3), series([0, 6, 6])),
    }
    for d in range(4):
        a = Fraction(3, 2)
        expected[f"({3 + d})"] = (
            hs_kernel(P(3 + d), 2, 3),
            series([0, a * (d + 5) * (d + 2), a * 2 * (d + 3)]),
        )
    for name, (got, want) in expected.items():
        if got != want:
            fails.append(f"{name}: {got.render()} != {want.render()}")
    report(1, "Hilbert series at n=2, k=3", fails, time.perf_counter() - start, 1)


def _stage_weights(res):
    return [[t.weight for t in stage] for stage in res.stages[1:]]


def test_criterion_2_resolutions():
    start = time.perf_counter()
    fails = []
    for sigma, weight, shift in [(P(1, 1), W(-2, -2, -3), 1), (P(1), W(-2, -3, -3), 2), (P(2), W(-1, -3, -3), 1)]:
        res = resolution(sigma, 2, 3)
        got = [(t.weight, t.shift) for t in res.stages[1]] if res.r else []
        if got != [(weight, shift)]:
            fails.append(f"{sigma}: Z1 {got}")
    for d in range(4):
        res = resolution(P(3 + d), 2, 3)
        want = [[W(-1, -3, -4 - d)], [W(-2, -4, -4 - d)], [W(-4, -4, -4 - d)]]
        if res.r != 3 or _stage_weights(res) != want:
            fails.append(f"({3 + d}): r={res.r} stages {_stage_weights(res)}")
    report(2, "resolutions at n=2, k=3", fails, time.perf_counter() - start, 1)


def test_criterion_3_boundary_cases():
    start = time.perf_counter()
    fails, count = [], 0
    for n, k in [(2, 2), (4, 3), (6, 4)]:
        for s in enumerate_sigma(n, k, 8):
            count += 1
            res = resolution(s, n, k)
            lam = sigma_sharp(s, n, k)
            if s.depth == k - 1 and s.part(k - 1) >= 2:
                ok = res.r == 1 and _stage_weights(res) == [[lam - unit(k, 1, 2)]]
            else:
                ok = res.r == 0
            if not ok:
                fails.append(f"even ({n},{k}) sigma={s}: r={res.r}")
    for n, k in [(3, 3), (5, 4)]:
        for s in enumerate_sigma(n, k, 8):
            count += 1
            res = resolution(s, n, k)
            lam = sigma_sharp(s, n, k)
            if s.part(k - 2) >= 2 and s.depth == k - 2:
                want = lam - unit(k, 1, 2) - unit(k, 2, 2)
            elif s.part(k - 2) >= 2 and s.depth == k - 1:
                want = lam - unit(k, 1) - unit(k, 2)
            else:
                if res.r != 0:
                    fails.append(f"odd ({n},{k}) sigma={s}: unexpected r={res.r}")
                continue
            if not (res.r == 1 and _stage_weights(res) == [[want]]):
                fails.append(f"odd ({n},{k}) sigma={s}: {_stage_weights(res)} != {want}")
    report(3, "boundary non-stable cases", fails, time.perf_counter() - start, 5, f"{count} diagrams")


def test_criterion_4_injectivity_boundary():
    start = time.perf_counter()
    fails = []
    for n, k in [(1, 1), (3, 2), (5, 3)]:
        dims = [dim_ker_total(n, k, m) for m in range(7)]
        if any(dims):
            fails.append(f"({n},{k}) kernel dims {dims}")
    degrees = {}
    for n, k in [(1, 2), (2, 2), (2, 3), (3, 3)]:
        m = min(
            2 * level_of_reduction(s, n, k) + s.size
            for s in enumerate_sigma(n, k, 8)
            if s.depth and in_sigma0(s, n, k)
        )
        degrees[(n, k)] = m
        if dim_ker_total(n, k, m) <= 0:
            fails.append(f"({n},{k}) no kernel in degree {m}")
    detail = "first kernel degrees " + ", ".join(f"{nk}:{m}" for nk, m in degrees.items())
    report(4, "injectivity boundary", fails, time.perf_counter() - start, 120, detail)


D2 = 2 * R(1, 2) * x(1, 2) * x(2, 2) - R(1, 1) * x(2, 2) ** 2 - R(2, 2) * x(1, 2) ** 2


def test_criterion_5_generators():
    start = time.perf_counter()
    fails, count = [], 0
    for n in range(1, 5):
        for k in range(1, 5):
            for s in enumerate_sigma(n, k, 6):
                if not s.depth or not in_sigma0(s, n, k):
                    continue
                count += 1
                t, d, mu = narrow_decompose(s)
                rep = verify_generator(t, d, mu, n, k)
                if not rep["all_pass"]:
                    fails.append(f"({n},{k}) sigma={s}: {rep}")
    T = generator(1, 1, P(), 2, 2)
    if T != D2 and T != -D2:
        fails.append(f"(2,2) sigma=(2): {T}")
    for a in range(4):
        basis = basis_of_F(D2 * x(2, 2) ** a, a + 1, 2, 2)
        ech = Echelon()
        for b in basis:
            ech.add(ih_coordinates(b, 2, 2))
        for i in range(a + 1):
            if not ech.contains(ih_coordinates(D2 * x(1, 2) ** i * x(2, 2) ** (a - i), 2, 2)):
                fails.append(f"basis for a={a} misses i={i}")
    report(5, "generator correctness", fails, time.perf_counter() - start, 120, f"{count} generators")


def test_criterion_6_cross_validation():
    start = time.perf_counter()
    fails, cells = [], 0
    for n in range(1, 4):
        for k in range(1, 5):
            for s in enumerate_sigma(n, k, 4):
                series_dims = hs_kernel(s, n, k).expand(3)
                for d in range(4):
                    cells += 1
                    got = dim_ker_sigma(n, k, s, d)
                    if got != series_dims[d]:
                        fails.append(f"({n},{k}) sigma={s} d={d}: oracle {got}, series {series_dims[d]}")
    weights = 0
    for n in range(1, 5):
        for k in range(1, 5):
            for s in enumerate_sigma(n, k, 6):
                if s.depth and in_sigma0(s, n, k):
                    weights += 1
                    t, d, mu = narrow_decompose(s)
                    if weight_of(generator(t, d, mu, n, k), n, k) != lambda_prime(s, n, k):
                        fails.append(f"({n},{k}) sigma={s}: weight_of != lambda_prime")
    lemmas = 0
    for n in range(1, 6):
        for k in range(1, n + 3):
            for s in enumerate_sigma(n, k, 6):
                checks = closed_form_checks(n, k, s)
                for name in ("L1", "L3"):
                    status = checks[name]["status"]
                    lemmas += status == "pass"
                    if status == "fail":
                        fails.append(f"{name} ({n},{k}) sigma={s}: {checks[name]}")
    members = 0
    for n in range(1, 7):
        for k in range(1, 7):
            for s in enumerate_sigma(n, k, 8):
                members += 1
                if in_sigma0(s, n, k) != bool(gamma_set(sigma_sharp(s, n, k))):
                    fails.append(f"Sigma0 ({n},{k}) sigma={s}")
    detail = f"{cells} series cells, {weights} weights, {lemmas} lemma instances, {members} Sigma0 tests"
    report(6, "cross-validation", fails, time.perf_counter() - start, 600, detail)


def test_criterion_7_embedding():
    start = time.perf_counter()
    fails, witnesses = [], 0
    for s in enumerate_sigma(2, 2, 4):
        for d in range(4):
            for T in kernel_vectors(2, 2, s, d):
                witnesses += 1
                # M_{2x2} sits inside M_{3x2} as the first two rows, so indices are unchanged
                embedded = T
                if not phi(embedded, 2).is_zero():
                    fails.append(f"sigma={s} d={d}: phi != 0")
                if is_zero_in_IH(embedded, 2):
                    fails.append(f"sigma={s} d={d}: witness vanishes")
                if not all(is_harmonic(h, 2, 3) for h in embedded.split_by_R().values()):
                    fails.append(f"sigma={s} d={d}: right factor not harmonic for k=3")
    if not witnesses:
        fails.append("no witnesses produced")
    report(7, "embedding (2,2) into (2,3)", fails, time.perf_counter() - start, 30, f"{witnesses} witnesses")


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
