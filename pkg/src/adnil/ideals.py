"""ad-nilpotent ideals of the positive-root poset and their statistics.

An ideal is an upward closed subset of the positive roots, stored as a
bitset (one Python int) over root indices.  The minimal elements form an
antichain, and antichain <-> ideal is the canonical bijection, so both
enumeration and the generator statistic run over antichains directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .rootsys import RootSystem, build_root_system, root_sum


def bits(mask: int):
    """Indices of the set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@lru_cache(maxsize=None)
def _poset_tables(type_label: str, rank: int):
    """Comparability bitmasks and the pairwise root-sum table."""
    rs = build_root_system(type_label, rank)
    n = rs.num_positive
    roots = rs.positive_roots
    up = [0] * n        # up[i]: mask of j with root_i <= root_j (incl. i)
    below = [0] * n     # below[i]: mask of j with root_j < root_i (strict)
    for i in range(n):
        vi = roots[i]
        for j in range(n):
            vj = roots[j]
            if i != j and all(a <= b for a, b in zip(vi, vj)):
                up[i] |= 1 << j
                below[j] |= 1 << i
        up[i] |= 1 << i
    full = (1 << n) - 1
    incomp = [full & ~(up[i] | below[i]) for i in range(n)]
    sum_table = [[-1] * n for i in range(n)]
    for i in range(n):
        for j in range(n):
            k = root_sum(rs, i, j)
            if k is not None:
                sum_table[i][j] = k
    simple_mask = 0
    for i in range(rank):
        simple_mask |= 1 << rs.root_index[rs.simple_vector(i)]
    return tuple(up), tuple(below), tuple(incomp), tuple(tuple(r) for r in sum_table), simple_mask


class NotAnAntichainError(ValueError):
    pass


class NotAnIdealError(ValueError):
    pass


@dataclass(frozen=True)
class Antichain:
    """Sorted tuple of pairwise incomparable positive-root indices."""

    rs: RootSystem
    roots: tuple[int, ...]

    def __post_init__(self):
        up, _, _, _, _ = _poset_tables(self.rs.type_label, self.rs.rank)
        object.__setattr__(self, "roots", tuple(sorted(self.roots)))
        for a in range(len(self.roots)):
            for b in range(a + 1, len(self.roots)):
                i, j = self.roots[a], self.roots[b]
                if up[i] & (1 << j) or up[j] & (1 << i):
                    raise NotAnAntichainError(
                        f"roots {self.rs.positive_roots[i]} and "
                        f"{self.rs.positive_roots[j]} are comparable"
                    )

    def __len__(self) -> int:
        return len(self.roots)

    def vectors(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.rs.positive_roots[i] for i in self.roots)


@dataclass(frozen=True)
class Ideal:
    """Upward closed set of positive roots, as a bitset over root indices."""

    rs: RootSystem
    members: int

    def __post_init__(self):
        up, _, _, _, _ = _poset_tables(self.rs.type_label, self.rs.rank)
        for i in bits(self.members):
            if up[i] & ~self.members:
                missing = next(bits(up[i] & ~self.members))
                raise NotAnIdealError(
                    f"set is not upward closed: contains {self.rs.positive_roots[i]} "
                    f"but not {self.rs.positive_roots[missing]}"
                )

    @property
    def size(self) -> int:
        return self.members.bit_count()

    def indices(self) -> tuple[int, ...]:
        return tuple(bits(self.members))

    def __contains__(self, root_index: int) -> bool:
        return bool(self.members >> root_index & 1)


def up_closure(rs: RootSystem, antichain: Antichain | tuple[int, ...]) -> Ideal:
    """Smallest ideal containing the given antichain."""
    if not isinstance(antichain, Antichain):
        antichain = Antichain(rs, tuple(antichain))
    up, _, _, _, _ = _poset_tables(rs.type_label, rs.rank)
    mask = 0
    for i in antichain.roots:
        mask |= up[i]
    return Ideal(rs, mask)


def generators(ideal: Ideal) -> Antichain:
    """Minimal elements of the ideal; up_closure(generators(I)) == I."""
    rs = ideal.rs
    _, below, _, _, _ = _poset_tables(rs.type_label, rs.rank)
    mins = tuple(i for i in bits(ideal.members) if not ideal.members & below[i])
    return Antichain(rs, mins)


def sim(ideal: Ideal) -> int:
    """Number of simple roots contained in the ideal."""
    _, _, _, _, simple_mask = _poset_tables(ideal.rs.type_label, ideal.rs.rank)
    return (ideal.members & simple_mask).bit_count()


def gen(ideal: Ideal) -> int:
    return len(generators(ideal))


def lower_central_series(ideal: Ideal) -> list[Ideal]:
    """[I_1, I_2, ...] with I_k = {gamma+nu in roots : gamma in I_{k-1}, nu in I_1}."""
    rs = ideal.rs
    _, _, _, sum_table, _ = _poset_tables(rs.type_label, rs.rank)
    first = ideal.members
    series = []
    cur = first
    while cur:
        series.append(Ideal(rs, cur))
        nxt = 0
        for g in bits(cur):
            row = sum_table[g]
            for v in bits(first):
                k = row[v]
                if k >= 0:
                    nxt |= 1 << k
        if nxt == cur:  # cannot happen for nilpotent brackets; guard anyway
            raise RuntimeError("lower central series failed to descend")
        cur = nxt
    return series


def class_of_nilpotence(ideal: Ideal) -> int:
    return len(lower_central_series(ideal))


def chain_between(inner_ideal: Ideal, outer_ideal: Ideal) -> list[Ideal]:
    """Saturated chain of ideals from I to J, adding one root per step.

    At each step the maximal available root of J \\ I with the lowest index
    is inserted, which makes the chain deterministic.
    """
    rs = inner_ideal.rs
    if inner_ideal.members & ~outer_ideal.members:
        raise ValueError("first ideal is not contained in the second")
    up, _, _, _, _ = _poset_tables(rs.type_label, rs.rank)
    chain = [inner_ideal]
    cur = inner_ideal.members
    while cur != outer_ideal.members:
        gap = outer_ideal.members & ~cur
        addable = next(i for i in bits(gap) if not (up[i] & ~(1 << i)) & gap)
        cur |= 1 << addable
        chain.append(Ideal(rs, cur))
    return chain


def _iter_antichain_masks(incomp, universe: int):
    """All antichain bitmasks inside the universe mask, DFS by least index."""
    stack = [(0, universe)]
    while stack:
        chosen, candidates = stack.pop()
        yield chosen
        c = candidates
        while c:
            low = c & -c
            i = low.bit_length() - 1
            c ^= low
            higher = ~(low | (low - 1))
            stack.append((chosen | low, candidates & incomp[i] & higher))


@lru_cache(maxsize=None)
def _ideal_masks(type_label: str, rank: int) -> tuple[int, ...]:
    rs = build_root_system(type_label, rank)
    up, _, incomp, _, _ = _poset_tables(type_label, rank)
    full = (1 << rs.num_positive) - 1
    out = []
    for anti in _iter_antichain_masks(incomp, full):
        m = 0
        for i in bits(anti):
            m |= up[i]
        out.append(m)
    return tuple(sorted(out))


def enumerate_ideals(rs: RootSystem) -> list[Ideal]:
    """Every ad-nilpotent ideal exactly once, ordered by membership bitset."""
    return [Ideal(rs, m) for m in _ideal_masks(rs.type_label, rs.rank)]


def count_ideals(rs: RootSystem) -> int:
    return len(_ideal_masks(rs.type_label, rs.rank))


@dataclass(frozen=True)
class RootSubPoset:
    """Positive roots supported on a subset J of the simple roots.

    A possibly reducible root poset; enumeration works directly on the
    restricted comparability relation, no type recognition involved.
    """

    rs: RootSystem
    simple_indices: tuple[int, ...]
    universe: int

    def iter_antichain_masks(self, universe: int | None = None):
        _, _, incomp, _, _ = _poset_tables(self.rs.type_label, self.rs.rank)
        u = self.universe if universe is None else universe
        return _iter_antichain_masks(incomp, u)

    def count_ideals(self) -> int:
        return sum(1 for _ in self.iter_antichain_masks())

    def count_no_simple_ideals(self) -> int:
        """Ideals of the sub-poset containing none of its simple roots."""
        simple = 0
        for j in self.simple_indices:
            simple |= 1 << self.rs.root_index[self.rs.simple_vector(j)]
        return sum(1 for _ in self.iter_antichain_masks(self.universe & ~simple))


def sub_poset(rs: RootSystem, simple_indices) -> RootSubPoset:
    """Restriction of the root poset to roots supported on given simples (0-indexed)."""
    keep = frozenset(simple_indices)
    universe = 0
    for i, v in enumerate(rs.positive_roots):
        if all(c == 0 or j in keep for j, c in enumerate(v)):
            universe |= 1 << i
    return RootSubPoset(rs, tuple(sorted(keep)), universe)


@lru_cache(maxsize=None)
def _size_sim_counts(type_label: str, rank: int) -> dict[tuple[int, int], int]:
    """Joint counts of (antichain size, simple roots in the antichain).

    A simple root lies in an ideal iff it is one of the generators, so the
    sim statistic can be read off the antichain itself.
    """
    rs = build_root_system(type_label, rank)
    _, _, incomp, _, simple_mask = _poset_tables(type_label, rank)
    full = (1 << rs.num_positive) - 1
    counts: dict[tuple[int, int], int] = {}
    for anti in _iter_antichain_masks(incomp, full):
        key = (anti.bit_count(), (anti & simple_mask).bit_count())
        counts[key] = counts.get(key, 0) + 1
    return counts


def sim_polynomial(rs: RootSystem) -> tuple[int, ...]:
    """Coefficient i = number of ideals containing exactly i simple roots."""
    counts = _size_sim_counts(rs.type_label, rs.rank)
    out = [0] * (rs.rank + 1)
    for (_, s), c in counts.items():
        out[s] += c
    return tuple(out)


def narayana_polynomial(rs: RootSystem) -> tuple[int, ...]:
    """Coefficient k = number of ideals with exactly k generators."""
    counts = _size_sim_counts(rs.type_label, rs.rank)
    out = [0] * (rs.rank + 1)
    for (k, _), c in counts.items():
        out[k] += c
    return tuple(out)


@dataclass(frozen=True)
class IdealStats:
    size: int
    sim: int
    gen: int
    nil_class: int


@dataclass(frozen=True)
class StatTable:
    rs: RootSystem
    records: tuple[IdealStats, ...]
    sim_coeffs: tuple[int, ...]
    gen_coeffs: tuple[int, ...]


def stat_table(rs: RootSystem) -> StatTable:
    """Per-ideal statistics plus the aggregated coefficient vectors."""
    records = []
    for ideal in enumerate_ideals(rs):
        records.append(
            IdealStats(ideal.size, sim(ideal), gen(ideal), class_of_nilpotence(ideal))
        )
    return StatTable(rs, tuple(records), sim_polynomial(rs), narayana_polynomial(rs))


@dataclass(frozen=True)
class ClosedFormCounts:
    total: int
    no_simple: int


def _exact_product(numerators, denominators) -> int:
    value = Fraction(1)
    for a, b in zip(numerators, denominators):
        value *= Fraction(a, b)
    if value.denominator != 1:
        raise ArithmeticError(f"count product is not integral: {value}")
    return int(value)


def closed_form_counts(rs: RootSystem) -> ClosedFormCounts:
    """Product formulas for the number of all / no-simple-root ideals."""
    h, exps = rs.coxeter_number, rs.exponents
    total = _exact_product((h + e + 1 for e in exps), (e + 1 for e in exps))
    no_simple = _exact_product((h + e - 1 for e in exps), (e + 1 for e in exps))
    return ClosedFormCounts(total, no_simple)


@dataclass(frozen=True)
class RecurrenceReport:
    sim_zero_ok: bool
    sim_zero_value: int
    per_index_ok: tuple[bool, ...]
    per_index_values: tuple[int, ...]

    @property
    def all_ok(self) -> bool:
        return self.sim_zero_ok and all(self.per_index_ok)


def recurrence_check(rs: RootSystem) -> RecurrenceReport:
    """Verify the inclusion-exclusion recurrences against direct enumeration.

    The number of ideals with no simple root equals the alternating sum of
    total ideal counts over all simple-root subsets, and the number with
    exactly i simple roots equals the sum of no-simple counts over the
    subsets of size p - i.  Sub-poset counts are computed directly, so the
    multiplicativity over reducible subsystems is exercised implicitly.
    """
    p = rs.rank
    poly = sim_polynomial(rs)
    totals: dict[frozenset, int] = {}
    no_simple: dict[frozenset, int] = {}
    for mask in range(1 << p):
        subset = frozenset(j for j in range(p) if mask >> j & 1)
        sp = sub_poset(rs, subset)
        totals[subset] = sp.count_ideals()
        no_simple[subset] = sp.count_no_simple_ideals()
    zero = sum((-1) ** (p - len(s)) * t for s, t in totals.items())
    values = []
    for i in range(p + 1):
        values.append(sum(c for s, c in no_simple.items() if len(s) == p - i))
    return RecurrenceReport(
        sim_zero_ok=zero == poly[0],
        sim_zero_value=zero,
        per_index_ok=tuple(values[i] == poly[i] for i in range(p + 1)),
        per_index_values=tuple(values),
    )


def heisenberg_ideal(rs: RootSystem) -> Ideal:
    """Roots not orthogonal to the highest root; the standard Heisenberg set."""
    mask = 0
    for i, v in enumerate(rs.positive_roots):
        if rs.form(v, rs.theta) > 0:
            mask |= 1 << i
    return Ideal(rs, mask)


def height_filtration_ideal(rs: RootSystem, k: int) -> Ideal:
    """Ideal of all positive roots of height >= k."""
    mask = 0
    for i, v in enumerate(rs.positive_roots):
        if sum(v) >= k:
            mask |= 1 << i
    return Ideal(rs, mask)


def narayana_formula(rs: RootSystem) -> tuple[int, ...] | None:
    """Closed-form generator-count coefficients where one is known/conjectured."""
    p = rs.rank
    t = rs.type_label
    if t == "A":
        n = p + 1
        return tuple(comb(n, k) * comb(n, k + 1) // n for k in range(p + 1))
    if t in ("B", "C"):
        return tuple(comb(p, k) ** 2 for k in range(p + 1))
    if t == "D":
        out = []
        for k in range(p + 1):
            val = Fraction(comb(p, k) ** 2) - Fraction(p, p - 1) * comb(p - 1, k) * comb(p - 1, k - 1) if k >= 1 else Fraction(comb(p, k) ** 2)
            assert val.denominator == 1
            out.append(int(val))
        return tuple(out)
    return None
