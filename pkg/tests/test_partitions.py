import pytest
from hypothesis import given, strategies as st

from sepvar.partitions import (
    NotInSigmaError,
    Partition,
    Weight,
    enumerate_partitions,
    enumerate_sigma,
    in_sigma0,
    in_sigma_nk,
    narrow,
    narrow_decompose,
    parse_sigma,
    sigma_sharp,
)

P = Partition.of


def test_depth_ignores_trailing_zeros():
    assert P(4, 3, 1, 0, 0).depth == 3
    assert P(4, 3, 1, 0, 0) == P(4, 3, 1)
    assert P().depth == 0
    assert P(2, 2, 1).depth == 3


@pytest.mark.parametrize("parts", [(1, 2), (3, -1)])
def test_rejects_bad_parts(parts):
    with pytest.raises(ValueError):
        Partition(parts)


def test_serialization_round_trip():
    assert str(P(4, 3, 1)) == "4,3,1"
    assert Partition.parse("4,3,1") == P(4, 3, 1)
    assert Partition.parse("") == P()
    assert parse_sigma(None) == P()
    assert str(Weight.of("-3/2", "-5/2")) == "-3/2,-5/2"
    assert Weight.parse("-3/2,-5/2") == Weight((-3, -5))
    with pytest.raises(ValueError):
        Weight.of("1/3")


def test_in_sigma_nk():
    assert in_sigma_nk(P(1, 1), 2, 3)
    assert not in_sigma_nk(P(2, 1), 2, 3)
    assert in_sigma_nk(P(), 1, 1)
    assert not in_sigma_nk(P(1, 1, 1), 5, 2)


def test_sigma_sharp():
    assert sigma_sharp(P(1, 1), 2, 3) == Weight.of(-1, -2, -2)
    assert sigma_sharp(P(), 2, 3) == Weight.of(-1, -1, -1)
    assert sigma_sharp(P(2), 2, 2) == Weight.of(-1, -3)
    assert sigma_sharp(P(1), 3, 2) == Weight.of("-3/2", "-5/2")
    with pytest.raises(NotInSigmaError, match="first two columns"):
        sigma_sharp(P(2, 1), 2, 3)
    with pytest.raises(NotInSigmaError, match="depth"):
        sigma_sharp(P(1, 1, 1), 5, 2)


def test_in_sigma0_examples():
    assert in_sigma0(P(2, 2), 4, 3)
    assert not in_sigma0(P(2, 1), 4, 3)
    assert in_sigma0(P(1), 2, 3)


def test_narrow_decompose():
    assert narrow_decompose(P(4, 3, 1)) == (2, 3, P(2, 1))
    assert narrow_decompose(narrow(2, 5)) == (2, 5, P())
    assert narrow_decompose(P()) == (0, 0, P())


def test_enumerate_sigma():
    assert enumerate_sigma(2, 3, 2) == sorted([P(), P(1), P(2), P(1, 1)])
    assert enumerate_sigma(4, 4, 0) == [P()]
    # (2) has two boxes in its first two columns, too many for n = 1
    assert enumerate_sigma(1, 1, 3) == [P(), P(1)]


partitions = st.lists(st.integers(0, 6), max_size=6).map(lambda xs: Partition(tuple(sorted(xs, reverse=True))))


@given(partitions)
def test_decompose_recomposes(sigma):
    t, d, mu = narrow_decompose(sigma)
    assert narrow(t, d) + mu == sigma
    assert mu.depth <= t


@given(partitions, st.integers(1, 7), st.integers(1, 7))
def test_sharp_is_weakly_decreasing(sigma, n, k):
    if in_sigma_nk(sigma, n, k):
        d = sigma_sharp(sigma, n, k).doubled
        assert all(a >= b for a, b in zip(d, d[1:]))


@pytest.mark.parametrize("n", range(1, 7))
def test_semistable_range_has_empty_sigma0(n):
    for k in range(1, (n + 1) // 2 + 1):
        assert n >= 2 * k - 1
        assert not any(in_sigma0(s, n, k) for s in enumerate_sigma(n, k, 7))


@pytest.mark.parametrize("n", range(1, 5))
def test_sigma_nk_stable_in_k_once_k_reaches_n(n):
    for s in enumerate_partitions(7, 7):
        values = {in_sigma_nk(s, n, k) for k in range(n, n + 4)}
        assert len(values) == 1
