"""Ideal enumeration, generators, series, chains, sub-posets, statistics."""

import pytest

from adnil.rootsys import build_root_system
from adnil.ideals import (
    Antichain,
    Ideal,
    NotAnAntichainError,
    NotAnIdealError,
    chain_between,
    class_of_nilpotence,
    closed_form_counts,
    count_ideals,
    enumerate_ideals,
    gen,
    generators,
    heisenberg_ideal,
    height_filtration_ideal,
    lower_central_series,
    narayana_formula,
    narayana_polynomial,
    recurrence_check,
    sim,
    sim_polynomial,
    stat_table,
    sub_poset,
    up_closure,
)

SWEEP = (
    [("A", p) for p in range(1, 9)]
    + [("B", p) for p in range(2, 7)]
    + [("C", p) for p in range(2, 7)]
    + [("D", p) for p in range(4, 8)]
    + [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]
)


def ideal_from_vectors(rs, vectors):
    return up_closure(rs, tuple(rs.root_index[tuple(v)] for v in vectors))


def test_up_closure_examples():
    rs = build_root_system("A", 2)
    assert ideal_from_vectors(rs, [(1, 1)]).size == 1
    two = ideal_from_vectors(rs, [(1, 0)])
    assert two.size == 2
    assert set(generators(two).vectors()) == {(1, 0)}


def test_antichain_rejection_names_the_pair():
    rs = build_root_system("A", 2)
    with pytest.raises(NotAnAntichainError) as err:
        Antichain(rs, (0, rs.root_index[(1, 1)]))
    assert "(1, 0)" in str(err.value) and "(1, 1)" in str(err.value)


def test_ideal_closure_validation():
    rs = build_root_system("A", 2)
    with pytest.raises(NotAnIdealError):
        Ideal(rs, 1)  # alpha_1 alone is not upward closed


def test_generators_examples():
    rs = build_root_system("C", 3)
    full = Ideal(rs, (1 << rs.num_positive) - 1)
    assert set(generators(full).vectors()) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}
    empty = Ideal(rs, 0)
    assert generators(empty).roots == ()
    # the symplectic rank-4 example: the southwest corners regenerate the ideal
    c4 = build_root_system("C", 4)
    gens = [(1, 0, 0, 0), (0, 1, 1, 0), (0, 0, 2, 1)]
    ideal = ideal_from_vectors(c4, gens)
    assert set(generators(ideal).vectors()) == set(gens)


@pytest.mark.parametrize("label,rank", SWEEP)
def test_generators_up_closure_roundtrip(label, rank):
    rs = build_root_system(label, rank)
    for ideal in enumerate_ideals(rs):
        assert up_closure(rs, generators(ideal)).members == ideal.members


@pytest.mark.parametrize("label,rank", SWEEP)
def test_count_matches_closed_form(label, rank):
    rs = build_root_system(label, rank)
    assert count_ideals(rs) == closed_form_counts(rs).total


def test_enumeration_is_sorted_and_complete():
    rs = build_root_system("A", 2)
    ideals = enumerate_ideals(rs)
    assert len(ideals) == 5
    masks = [i.members for i in ideals]
    assert masks == sorted(masks)
    assert masks[0] == 0 and masks[-1] == (1 << 3) - 1


def test_sim_and_gen_examples():
    rs = build_root_system("A", 2)
    full = Ideal(rs, 7)
    assert sim(full) == 2 and gen(full) == 2
    theta_only = ideal_from_vectors(rs, [(1, 1)])
    assert sim(theta_only) == 0 and gen(theta_only) == 1
    for label, rank in [("A", 3), ("B", 3), ("C", 3), ("G", 2), ("F", 4)]:
        sys_ = build_root_system(label, rank)
        h = heisenberg_ideal(sys_)
        simple_gens = {v for v in generators(h).vectors() if sum(v) == 1}
        assert set(generators(h).vectors()) == simple_gens  # generators are H cap Pi


def test_lower_central_series_examples():
    rs = build_root_system("A", 2)
    full = Ideal(rs, 7)
    series = lower_central_series(full)
    assert [t.size for t in series] == [3, 1]
    assert series[1].members == 1 << rs.root_index[(1, 1)]
    assert class_of_nilpotence(full) == 2
    theta_only = ideal_from_vectors(rs, [(1, 1)])
    assert len(lower_central_series(theta_only)) == 1
    assert class_of_nilpotence(Ideal(rs, 0)) == 0
    for label, rank in [("A", 3), ("B", 3), ("C", 3), ("G", 2)]:
        sys_ = build_root_system(label, rank)
        assert class_of_nilpotence(heisenberg_ideal(sys_)) == 2


@pytest.mark.parametrize("label,rank", [("A", 3), ("B", 3), ("C", 3), ("G", 2), ("D", 4)])
def test_class_of_full_ideal_is_h_minus_one(label, rank):
    """The series of the full ideal is the height filtration."""
    rs = build_root_system(label, rank)
    full = Ideal(rs, (1 << rs.num_positive) - 1)
    series = lower_central_series(full)
    assert len(series) == rs.coxeter_number - 1
    for k, term in enumerate(series, start=1):
        assert term.members == height_filtration_ideal(rs, k).members


@pytest.mark.parametrize("label,rank", [("A", 3), ("B", 3), ("C", 3)])
def test_series_terms_are_descending_ideals(label, rank):
    rs = build_root_system(label, rank)
    for ideal in enumerate_ideals(rs):
        series = lower_central_series(ideal)
        prev = ideal.members
        for term in series[1:]:
            assert term.members & ~prev == 0
            prev = term.members


def test_chain_between_examples():
    rs = build_root_system("A", 2)
    empty, full = Ideal(rs, 0), Ideal(rs, 7)
    assert chain_between(full, full) == [full]
    chain = chain_between(empty, full)
    assert len(chain) == 4
    theta_only = ideal_from_vectors(rs, [(1, 1)])
    chain = chain_between(theta_only, full)
    assert [set(generators(i).vectors()) for i in chain] == [
        {(1, 1)}, {(1, 0)}, {(1, 0), (0, 1)},
    ]
    with pytest.raises(ValueError):
        chain_between(full, theta_only)


@pytest.mark.parametrize("label,rank", [("B", 3), ("C", 3)])
def test_chain_steps_are_ideals(label, rank):
    rs = build_root_system(label, rank)
    ideals = enumerate_ideals(rs)
    full = ideals[-1]
    for ideal in ideals:
        chain = chain_between(ideal, full)
        assert len(chain) == full.size - ideal.size + 1
        for a, b in zip(chain, chain[1:]):
            assert b.size == a.size + 1  # Ideal construction validates closure


def test_sub_poset_counts():
    rs = build_root_system("A", 3)
    assert sub_poset(rs, range(3)).count_ideals() == count_ideals(rs)
    assert sub_poset(rs, ()).count_ideals() == 1
    # removing the middle node leaves A1 x A1
    assert sub_poset(rs, (0, 2)).count_ideals() == 4
    d4 = build_root_system("D", 4)
    assert sub_poset(d4, (0, 2, 3)).count_ideals() == 8  # A1^3 around the hub


@pytest.mark.parametrize("label,rank", [("A", 3), ("C", 3), ("G", 2), ("F", 4), ("E", 6)])
def test_recurrences(label, rank):
    report = recurrence_check(build_root_system(label, rank))
    assert report.all_ok
    assert report.per_index_values == sim_polynomial(build_root_system(label, rank))


@pytest.mark.parametrize("label,rank", SWEEP)
def test_sim_extremes(label, rank):
    poly = sim_polynomial(build_root_system(label, rank))
    p = rank
    assert poly[p] == 1
    if p >= 1:
        assert poly[p - 1] == p
    if p >= 2:
        want = p * (p + 1) // 2 if label in "BCF" else (p - 1) * (p + 2) // 2
        if label != "G":
            assert poly[p - 2] == want


def test_polynomial_examples():
    assert sim_polynomial(build_root_system("F", 4)) == (66, 24, 10, 4, 1)
    assert narayana_polynomial(build_root_system("F", 4)) == (1, 24, 55, 24, 1)
    assert narayana_polynomial(build_root_system("A", 2)) == (1, 3, 1)
    assert narayana_formula(build_root_system("A", 2)) == (1, 3, 1)


def test_closed_form_examples():
    f4 = closed_form_counts(build_root_system("F", 4))
    assert (f4.total, f4.no_simple) == (105, 66)
    g2 = closed_form_counts(build_root_system("G", 2))
    assert (g2.total, g2.no_simple) == (8, 5)
    e8 = closed_form_counts(build_root_system("E", 8))
    assert (e8.total, e8.no_simple) == (25080, 17342)


@pytest.mark.parametrize("label,rank", [("A", 4), ("B", 4), ("C", 4), ("D", 5), ("G", 2), ("F", 4)])
def test_height_filtration(label, rank):
    rs = build_root_system(label, rank)
    for k in range(1, rs.coxeter_number):
        ideal = height_filtration_ideal(rs, k)
        want = {tuple(v) for v in rs.positive_roots if sum(v) == k}
        assert set(generators(ideal).vectors()) == want


@pytest.mark.parametrize("label,rank", [("A", 4), ("B", 4), ("C", 4), ("D", 4), ("G", 2), ("F", 4), ("E", 6)])
def test_antichain_bound(label, rank):
    """At most rank generators, attained only by the full ideal."""
    rs = build_root_system(label, rank)
    full_mask = (1 << rs.num_positive) - 1
    for ideal in enumerate_ideals(rs):
        g = gen(ideal)
        assert g <= rank
        if g == rank:
            assert ideal.members == full_mask
            assert set(generators(ideal).vectors()) == {
                rs.simple_vector(i) for i in range(rank)
            }


def test_stat_table():
    rs = build_root_system("C", 3)
    table = stat_table(rs)
    assert len(table.records) == 20
    assert table.sim_coeffs == (10, 6, 3, 1)
    assert table.gen_coeffs == (1, 9, 9, 1)
    assert sum(r.size == 0 for r in table.records) == 1
    assert max(r.nil_class for r in table.records) == rs.coxeter_number - 1


def test_d_type_narayana_conjecture_small():
    for p in range(4, 8):
        rs = build_root_system("D", p)
        assert narayana_polynomial(rs) == narayana_formula(rs)


def test_sim_distribution_b_equals_c():
    for p in range(2, 6):
        assert sim_polynomial(build_root_system("B", p)) == sim_polynomial(
            build_root_system("C", p)
        )
