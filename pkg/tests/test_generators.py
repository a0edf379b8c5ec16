import pytest

from sepvar.ew import lambda_prime, level_of_reduction
from sepvar.generators import (
    DimensionMismatchError,
    GeneratorPreconditionError,
    basis_of_F,
    build_M,
    generator,
    harmonic_basis,
    ih_coordinates,
    lowest_R_degree,
    minor,
    verify_generator,
)
from sepvar.hilbert import weyl_dim_gl
from sepvar.linalg import Echelon
from sepvar.partitions import Partition, Weight, enumerate_sigma, in_sigma0, narrow_decompose, sigma_sharp
from sepvar.polyalg import MPoly, R, delta_sigma, phi, weight_of, x

P, W = Partition.of, Weight.of
D2 = 2 * R(1, 2) * x(1, 2) * x(2, 2) - R(1, 1) * x(2, 2) ** 2 - R(2, 2) * x(1, 2) ** 2


def test_bordered_matrix_entries():
    M = build_M(2, 2)
    assert M.entry(1, 3) == x(1, 2)
    assert M.entry(1, 4) == x(1, 1)
    assert M.entry(3, 4) == 1
    assert M.entry(3, 3).is_zero()
    for n, k in [(1, 2), (2, 3), (3, 2)]:
        M = build_M(n, k)
        for i in range(1, n + k + 1):
            for j in range(1, n + k + 1):
                assert M.entry(i, j) == M.entry(j, i)


@pytest.mark.parametrize("n,k", [(1, 2), (2, 2), (2, 3), (3, 4)])
def test_generic_rank_is_n(n, k):
    assert build_M(n, k).generic_rank(trials=50, seed=n * 10 + k) == {n}


def test_first_minor_is_the_worked_example():
    m = minor(1, 1, 2, 2)
    assert m == D2 or m == -D2
    with pytest.raises(IndexError):
        minor(3, 1, 2, 2)


@pytest.mark.parametrize("n,k", [(n, k) for n in range(1, 7) for k in range(1, 8 - n)])
def test_all_windows_vanish_under_phi(n, k):
    for a in range(1, k + 1):
        for b in range(1, k + 1):
            assert phi(minor(a, b, n, k), n).is_zero()


def test_one_dimensional_example_lies_in_the_generated_module():
    # x^2 (x) y - xy (x) x with x = x11, y = x21
    target = R(1, 1) * x(2, 1) - R(1, 2) * x(1, 1)
    assert phi(target, 1).is_zero()
    T = generator(0, 1, P(), 1, 2)
    basis = basis_of_F(T, weyl_dim_gl(lambda_prime(P(1), 1, 2)), 1, 2)
    ech = Echelon()
    for b in basis:
        ech.add(ih_coordinates(b, 1, 2))
    assert ech.contains(ih_coordinates(target, 1, 2))


def test_generator_examples():
    for a in range(4):
        T = generator(1, 1, P(a) if a else P(), 2, 2)
        expected = D2 * x(2, 2) ** a
        assert T == expected or T == -expected
        assert weight_of(T, 2, 2) == W(-3, -3 - a)
    T = generator(1, 1, P(), 2, 3)
    assert T == minor(2, 2, 2, 3)
    assert weight_of(T, 2, 3) == W(-1, -3, -3) == lambda_prime(P(2), 2, 3)


@pytest.mark.parametrize(
    "args,match",
    [
        ((0, 0, P(), 2, 3), "d > 0"),
        ((1, 2, P(), 4, 3), "Sigma0"),
        ((2, 1, P(), 2, 3), "t <= d"),
        ((1, 1, P(1, 1), 2, 3), "depth of mu"),
        ((2, 2, P(), 3, 3), "not in Sigma_"),
    ],
)
def test_generator_preconditions(args, match):
    with pytest.raises(GeneratorPreconditionError, match=match):
        generator(*args)


@pytest.mark.parametrize(
    "t,d,n,k,shift",
    [(1, 1, 2, 2, None), (2, 2, 4, 3, W(2, 0, 0)), (1, 2, 3, 3, W(1, 1, 0))],
)
def test_verify_examples(t, d, n, k, shift):
    report = verify_generator(t, d, P(), n, k)
    assert report["all_pass"], report
    if shift is not None:
        sigma = Partition((2,) * t + (1,) * (d - t))
        assert report["weight_of"] == (sigma_sharp(sigma, n, k) - shift).to_json()


@pytest.mark.parametrize("n,k", [(n, k) for n in range(1, 4) for k in range(1, 5)])
def test_generators_verify_and_start_at_the_level(n, k):
    for s in enumerate_sigma(n, k, 4):
        if s.depth and in_sigma0(s, n, k):
            t, d, mu = narrow_decompose(s)
            assert verify_generator(t, d, mu, n, k)["all_pass"]
            T = generator(t, d, mu, n, k)
            assert lowest_R_degree(T) == level_of_reduction(s, n, k)
            basis = basis_of_F(T, weyl_dim_gl(lambda_prime(s, n, k)), n, k)
            assert all(phi(b, n).is_zero() for b in basis)


def test_basis_of_F_examples():
    assert harmonic_basis(P(1), 2, 2) == [x(2, 2), x(1, 2)]
    assert basis_of_F(MPoly.const(1), 1, 2, 2) == [MPoly.const(1)]
    with pytest.raises(DimensionMismatchError):
        basis_of_F(delta_sigma(P(1), 2, 2), 3, 2, 2)
    with pytest.raises(DimensionMismatchError):
        basis_of_F(delta_sigma(P(2), 2, 2), 2, 2, 2)
