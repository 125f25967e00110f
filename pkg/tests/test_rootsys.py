"""Root-system construction: exact data, closure completeness, dual bases."""

from fractions import Fraction

import pytest

from adnil.rootsys import (
    AffineRoot,
    InvalidTypeError,
    build_root_system,
    coroot,
    coroot_coordinates,
    height,
    in_coroot_lattice,
    inner,
    is_long,
    root_sum,
)

SWEEP = (
    [("A", p) for p in range(1, 9)]
    + [("B", p) for p in range(2, 7)]
    + [("C", p) for p in range(2, 7)]
    + [("D", p) for p in range(4, 8)]
    + [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]
)


@pytest.mark.parametrize("label,rank", [("A", 0), ("B", 1), ("C", 1), ("D", 2), ("E", 5), ("E", 9), ("F", 3), ("G", 3), ("H", 2)])
def test_invalid_types_rejected(label, rank):
    with pytest.raises(InvalidTypeError):
        build_root_system(label, rank)


def test_a2_basics():
    rs = build_root_system("A", 2)
    assert rs.num_positive == 3
    assert rs.coxeter_number == 3
    assert rs.exponents == (1, 2)
    assert set(rs.positive_roots) == {(1, 0), (0, 1), (1, 1)}
    assert inner(rs, (1, 0), (0, 1)) == -1
    assert rs.theta == (1, 1)


def test_c3_matches_the_symplectic_array():
    rs = build_root_system("C", 3)
    assert rs.num_positive == 9
    assert rs.coxeter_number == 6
    assert rs.exponents == (1, 3, 5)
    want = {
        (1, 0, 0), (1, 1, 0), (1, 1, 1), (1, 2, 1), (2, 2, 1),
        (0, 1, 0), (0, 1, 1), (0, 2, 1),
        (0, 0, 1),
    }
    assert set(rs.positive_roots) == want


def test_e8_closure_and_count_identity():
    rs = build_root_system("E", 8)
    assert rs.num_positive == 120
    assert rs.coxeter_number == 30
    assert rs.num_positive == rs.rank * rs.coxeter_number // 2


@pytest.mark.parametrize("label,rank", SWEEP)
def test_structure_identities(label, rank):
    rs = build_root_system(label, rank)
    assert rs.num_positive == rs.rank * rs.coxeter_number // 2
    assert sum(rs.exponents) == rs.num_positive
    assert sum(rs.marks) == rs.coxeter_number - 1
    assert height(rs, rs.theta_index) == rs.coxeter_number - 1
    assert inner(rs, rs.theta, rs.theta) == 2
    # simple roots are unit vectors and the first rank entries by ordering
    for i in range(rs.rank):
        assert rs.positive_roots[i] == rs.simple_vector(i)
    # all coordinates nonnegative
    assert all(all(c >= 0 for c in v) for v in rs.positive_roots)


@pytest.mark.parametrize("label,rank", SWEEP)
def test_closure_completeness(label, rank):
    """Whenever a coordinate sum of two positive roots is a root, root_sum finds it."""
    rs = build_root_system(label, rank)
    n = rs.num_positive
    for i in range(n):
        for j in range(n):
            s = tuple(a + b for a, b in zip(rs.positive_roots[i], rs.positive_roots[j]))
            assert root_sum(rs, i, j) == rs.root_index.get(s)


@pytest.mark.parametrize("label,rank", SWEEP)
def test_dual_basis_exactness(label, rank):
    rs = build_root_system(label, rank)
    for i in range(rs.rank):
        for j in range(rs.rank):
            want = Fraction(1 if i == j else 0)
            assert inner(rs, rs.fundamental_coweights[i], rs.simple_vector(j)) == want
    for j in range(rs.rank):
        assert inner(rs, rs.rho_coweight, rs.simple_vector(j)) == 1


def test_root_sum_examples():
    rs = build_root_system("A", 2)
    assert root_sum(rs, 0, 1) == rs.root_index[(1, 1)]
    assert root_sum(rs, rs.root_index[(1, 1)], 0) is None
    c3 = build_root_system("C", 3)
    i = c3.root_index[(0, 1, 1)]
    j = c3.root_index[(0, 1, 0)]
    assert root_sum(c3, i, j) == c3.root_index[(0, 2, 1)]


def test_is_long():
    c3 = build_root_system("C", 3)
    assert is_long(c3, c3.root_index[(0, 2, 1)])
    assert not is_long(c3, c3.root_index[(0, 1, 1)])
    a2 = build_root_system("A", 2)
    assert all(is_long(a2, i) for i in range(3))
    g2 = build_root_system("G", 2)
    assert inner(g2, (1, 0), (1, 0)) == Fraction(2, 3)
    assert [is_long(g2, g2.root_index[v]) for v in [(1, 0), (0, 1), (3, 2)]] == [False, True, True]


def test_coroots_lie_in_the_coroot_lattice():
    for label, rank in [("B", 3), ("C", 3), ("G", 2), ("F", 4)]:
        rs = build_root_system(label, rank)
        for i in range(rs.num_positive):
            assert in_coroot_lattice(rs, coroot(rs, i))
        # simple coroots have unit coroot coordinates
        for i in range(rs.rank):
            cc = coroot_coordinates(rs, coroot(rs, i))
            assert list(cc) == [1 if j == i else 0 for j in range(rs.rank)]


def test_affine_root_positivity():
    pos = AffineRoot((1, 0), 0)
    neg = AffineRoot((-1, 0), 0)
    assert pos.is_positive and not neg.is_positive
    assert AffineRoot((-1, -1), 1).is_positive
    assert not AffineRoot((1, 1), -1).is_positive
    assert neg.negated() == pos


def test_root_systems_are_cached_and_shared():
    assert build_root_system("A", 3) is build_root_system("A", 3)
