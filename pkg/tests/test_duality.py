"""Duality: coordinates, the A/B/C involutions, G2, conjectured properties."""

import pytest

from adnil.rootsys import build_root_system
from adnil.ideals import (
    Ideal,
    enumerate_ideals,
    gen,
    generators,
    height_filtration_ideal,
    up_closure,
)
from adnil.duality import (
    DualityUnavailableError,
    TypeACoords,
    TypeCCoords,
    a_box_to_root,
    a_root_to_box,
    b_box_to_root,
    c_box_to_root,
    conjecture_properties_check,
    coords_of_ideal_A,
    coords_of_ideal_BC,
    dual_A,
    dual_B,
    dual_C,
    dual_ideal,
    dual_in_subsystem,
    find_involutions,
    has_duality,
    ideal_of_coords_A,
    ideal_of_coords_BC,
    self_dual_ideals_A,
)

SP6_TABLE = [
    ([(1, 1, 0)], {(1, 1, 0), (0, 0, 1)}),
    ([(0, 1, 1)], {(0, 2, 1), (1, 0, 0)}),
    ([(0, 2, 1)], {(0, 1, 1), (1, 0, 0)}),
    ([(1, 1, 1)], {(1, 1, 0), (0, 2, 1)}),
    ([(1, 2, 1)], {(1, 1, 1), (0, 2, 1)}),
    ([(2, 2, 1)], {(1, 1, 0), (0, 1, 1)}),
]

SO7_TABLE = [
    ([(1, 1, 0)], {(1, 1, 0), (0, 0, 1)}),
    ([(0, 1, 1)], {(0, 1, 2), (1, 0, 0)}),
    ([(0, 1, 2)], {(0, 1, 1), (1, 0, 0)}),
    ([(1, 1, 1)], {(1, 1, 0), (0, 1, 2)}),
    ([(1, 1, 2)], {(1, 1, 1), (0, 1, 2)}),
    ([(1, 2, 2)], {(1, 1, 0), (0, 1, 1)}),
]


def ideal_from_vectors(rs, vectors):
    return up_closure(rs, tuple(rs.root_index[tuple(v)] for v in vectors))


def dual_gen_vectors(rs, vectors):
    return set(generators(dual_ideal(ideal_from_vectors(rs, vectors))).vectors())


def test_type_a_box_coding():
    n = 5
    assert a_root_to_box(n, (1, 0, 0, 0)) == (1, 2)
    assert a_root_to_box(n, (1, 1, 1, 1)) == (1, 5)  # the highest root
    for i in range(1, n):
        assert a_box_to_root(n, i, i + 1) == tuple(
            1 if t == i else 0 for t in range(1, n)
        )
    rs = build_root_system("A", 4)
    for v in rs.positive_roots:
        i, j = a_root_to_box(n, v)
        assert j - i == sum(v)  # height equals the gap
        assert a_box_to_root(n, i, j) == v


def test_type_a_coords_roundtrip_all_sl5():
    rs = build_root_system("A", 4)
    for ideal in enumerate_ideals(rs):
        coords = coords_of_ideal_A(ideal)
        assert ideal_of_coords_A(rs, coords).members == ideal.members


def test_dual_a_examples():
    rs = build_root_system("A", 3)
    full = Ideal(rs, (1 << rs.num_positive) - 1)
    coords = coords_of_ideal_A(full)
    assert dual_A(coords).pairs() == ()
    assert dual_ideal(full).members == 0
    # height filtrations swap: k <-> h+1-k
    h = rs.coxeter_number
    for k in range(1, h + 1):
        lhs = dual_ideal(height_filtration_ideal(rs, k))
        assert lhs.members == height_filtration_ideal(rs, h + 1 - k).members


def test_dual_a_is_involutive_and_pairs_generator_counts():
    for p in range(1, 7):
        rs = build_root_system("A", p)
        for ideal in enumerate_ideals(rs):
            dual = dual_ideal(ideal)
            assert gen(ideal) + gen(dual) == p
            assert dual_ideal(dual).members == ideal.members


def test_simple_subset_identity():
    """The ideal generated by a simple-root subset dualises to the complement."""
    for label, rank in [("A", 4), ("B", 3), ("C", 3), ("G", 2)]:
        rs = build_root_system(label, rank)
        for mask in range(1 << rank):
            subset = tuple(i for i in range(rank) if mask >> i & 1)
            ideal = up_closure(rs, tuple(rs.root_index[rs.simple_vector(i)] for i in subset))
            dual = dual_ideal(ideal)
            want = up_closure(
                rs,
                tuple(rs.root_index[rs.simple_vector(i)] for i in range(rank) if i not in subset),
            )
            assert dual.members == want.members


def test_self_dual_counts_and_sl7_list():
    assert len(self_dual_ideals_A(5)) == 2
    assert len(self_dual_ideals_A(6)) == 0
    fixed = self_dual_ideals_A(7)
    assert sorted(c.pairs() for c in fixed) == sorted(
        [
            ((1, 5), (2, 6), (3, 7)),
            ((1, 4), (2, 6), (4, 7)),
            ((1, 4), (2, 5), (5, 7)),
            ((1, 3), (3, 6), (4, 7)),
            ((1, 3), (3, 5), (5, 7)),
        ]
    )


def test_sp8_worked_example():
    rs = build_root_system("C", 4)
    ideal = ideal_from_vectors(rs, [(1, 0, 0, 0), (0, 1, 1, 0), (0, 0, 2, 1)])
    coords = coords_of_ideal_BC(ideal)
    assert coords.pairs() == ((1, 2), (2, 4), (3, 6))
    dual = dual_C(coords)
    assert dual.pairs() == ((2, 5),)
    assert set(generators(ideal_of_coords_BC(rs, dual)).vectors()) == {(0, 1, 1, 1)}


def test_sp6_table():
    rs = build_root_system("C", 3)
    for i in range(3):
        alpha = tuple(1 if j == i else 0 for j in range(3))
        others = {tuple(1 if j == k else 0 for j in range(3)) for k in range(3) if k != i}
        assert dual_gen_vectors(rs, [alpha]) == others
    for gens, want in SP6_TABLE:
        assert dual_gen_vectors(rs, gens) == want


def test_so7_table():
    rs = build_root_system("B", 3)
    for i in range(3):
        alpha = tuple(1 if j == i else 0 for j in range(3))
        others = {tuple(1 if j == k else 0 for j in range(3)) for k in range(3) if k != i}
        assert dual_gen_vectors(rs, [alpha]) == others
    for gens, want in SO7_TABLE:
        assert dual_gen_vectors(rs, gens) == want
        coords = coords_of_ideal_BC(ideal_from_vectors(rs, gens))
        assert dual_B(coords) == dual_C(coords)  # shape transfer, same involution


@pytest.mark.parametrize("label", ["B", "C"])
@pytest.mark.parametrize("p", [2, 3, 4, 5])
def test_bc_involution_no_fixed_points(label, p):
    rs = build_root_system(label, p)
    for ideal in enumerate_ideals(rs):
        dual = dual_ideal(ideal)
        assert dual.members != ideal.members
        assert dual_ideal(dual).members == ideal.members
        assert gen(ideal) + gen(dual) == p


def test_box_maps_cover_all_roots():
    for label, builder in (("C", c_box_to_root), ("B", b_box_to_root)):
        for p in (2, 3, 4, 5):
            rs = build_root_system(label, p)
            boxes = {
                builder(p, i, j)
                for i in range(1, p + 1)
                for j in range(i + 1, 2 * p + 2 - i)
            }
            assert boxes == set(rs.positive_roots)


def test_coords_validation():
    with pytest.raises(ValueError):
        TypeACoords(4, (2, 1), (3, 4))  # not increasing
    with pytest.raises(ValueError):
        TypeACoords(4, (1,), (1,))  # needs i < j
    with pytest.raises(ValueError):
        TypeCCoords(3, (2,), (6,))  # violates i+j <= 2p+1
    with pytest.raises(ValueError):
        TypeCCoords(3, (1, 2), (4,))  # length mismatch


def test_duality_unavailable():
    rs = build_root_system("D", 4)
    with pytest.raises(DualityUnavailableError):
        dual_ideal(Ideal(rs, 0))
    assert not has_duality(rs)
    assert has_duality(build_root_system("G", 2))


def test_g2_involution_unique_and_valid():
    rs = build_root_system("G", 2)
    assert len(find_involutions(rs, limit=5)) == 1
    report = conjecture_properties_check(rs)
    assert report.all_ok
    # the two simple roots swap, the height slices reverse
    for i, j in [(0, 1)]:
        a = up_closure(rs, (rs.root_index[rs.simple_vector(i)],))
        b = up_closure(rs, (rs.root_index[rs.simple_vector(j)],))
        assert dual_ideal(a).members == b.members


@pytest.mark.parametrize(
    "label,rank",
    [("A", p) for p in range(1, 8)] + [("B", 3), ("B", 4), ("C", 3), ("C", 4), ("G", 2)],
)
def test_conjecture_properties(label, rank):
    report = conjecture_properties_check(build_root_system(label, rank))
    assert report.all_ok, report.counterexample


def test_dual_in_subsystem_matches_component_structure():
    rs = build_root_system("C", 3)
    # removing alpha_3 leaves an A2: the dual of {alpha_1+alpha_2} there is itself
    got = dual_in_subsystem(rs, ((1, 1, 0),), 2)
    assert set(got) == {(1, 1, 0)}
    # removing alpha_1 leaves a C2 on {alpha_2, alpha_3}
    got = dual_in_subsystem(rs, ((0, 1, 0),), 0)
    assert set(got) == {(0, 0, 1)}
    with pytest.raises(ValueError):
        dual_in_subsystem(rs, ((1, 0, 0),), 0)
