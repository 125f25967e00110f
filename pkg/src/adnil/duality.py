"""The duality involution on ideals for types A, B, C (and, forced, G2).

Type A ideals are right-justified Ferrers diagrams inside the staircase;
the generator boxes (i_1,j_1) < ... < (i_k,j_k) are the southwest corners,
and the dual ideal is produced by complementing the two coordinate sets:
X* = ({2..n} minus Y) - 1 and Y* = ({1..n-1} minus X) + 1.

Types C and B live on shifted Ferrers diagrams with rows i < j <= 2p+1-i.
For C the diagram unfolds to a self-conjugate type-A diagram in size 2p
(cancelling the duplicated middle corner when i_k + j_k = 2p+1), is
dualised there, and folds back.  For B the same shifted shapes are used
verbatim (shape transfer through the symplectic side); only the box-to-root
dictionaries differ.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .rootsys import RootSystem, build_root_system
from .ideals import Ideal, enumerate_ideals, gen, generators, up_closure


class DualityUnavailableError(ValueError):
    pass


# ---------------------------------------------------------------------------
# type A: boxes (i, j), 1 <= i < j <= n, box (i,j) = alpha_i + ... + alpha_{j-1}
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TypeACoords:
    """Southwest-corner coordinates of a type A ideal in matrix size n."""

    n: int
    X: tuple[int, ...]
    Y: tuple[int, ...]

    def __post_init__(self):
        if len(self.X) != len(self.Y):
            raise ValueError("X and Y must have equal lengths")
        if list(self.X) != sorted(set(self.X)) or list(self.Y) != sorted(set(self.Y)):
            raise ValueError("coordinates must be strictly increasing")
        for i, j in zip(self.X, self.Y):
            if not (1 <= i < j <= self.n):
                raise ValueError(f"({i},{j}) is not a valid box for n={self.n}")

    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self.X, self.Y))


def a_box_to_root(n: int, i: int, j: int) -> tuple[int, ...]:
    return tuple(1 if i <= t < j else 0 for t in range(1, n))


def a_root_to_box(n: int, coords) -> tuple[int, int]:
    support = [t + 1 for t, c in enumerate(coords) if c]
    if not support or set(coords) - {0, 1} or support != list(range(support[0], support[-1] + 1)):
        raise ValueError(f"{coords} is not a type A positive root")
    return support[0], support[-1] + 1


def coords_of_ideal_A(ideal: Ideal) -> TypeACoords:
    rs = ideal.rs
    if rs.type_label != "A":
        raise DualityUnavailableError("type A coordinates need a type A system")
    n = rs.rank + 1
    boxes = sorted(a_root_to_box(n, v) for v in generators(ideal).vectors())
    return TypeACoords(n, tuple(i for i, _ in boxes), tuple(j for _, j in boxes))


def ideal_of_coords_A(rs: RootSystem, coords: TypeACoords) -> Ideal:
    idx = tuple(
        rs.root_index[a_box_to_root(coords.n, i, j)] for i, j in coords.pairs()
    )
    return up_closure(rs, idx)


def dual_A(c: TypeACoords) -> TypeACoords:
    n = c.n
    x_new = tuple(v - 1 for v in range(2, n + 1) if v not in set(c.Y))
    y_new = tuple(v + 1 for v in range(1, n) if v not in set(c.X))
    return TypeACoords(n, x_new, y_new)


# ---------------------------------------------------------------------------
# types C and B: shifted diagrams with boxes (i, j), i < j <= 2p+1-i
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TypeCCoords:
    """Southwest corners of a shifted Ferrers diagram of rank p.

    The defining inequalities: both coordinate sequences strictly increase,
    i_l < j_l, and i_k + j_k <= 2p+1 for the last corner.  The same shapes
    encode both the symplectic and the odd orthogonal ideals.
    """

    p: int
    X: tuple[int, ...]
    Y: tuple[int, ...]

    def __post_init__(self):
        if len(self.X) != len(self.Y):
            raise ValueError("X and Y must have equal lengths")
        if list(self.X) != sorted(set(self.X)) or list(self.Y) != sorted(set(self.Y)):
            raise ValueError("coordinates must be strictly increasing")
        for i, j in zip(self.X, self.Y):
            if not (1 <= i < j <= 2 * self.p):
                raise ValueError(f"({i},{j}) out of range for rank {self.p}")
        if self.X and self.X[-1] + self.Y[-1] > 2 * self.p + 1:
            raise ValueError("last corner must satisfy i_k + j_k <= 2p+1")

    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self.X, self.Y))


def c_box_to_root(p: int, i: int, j: int) -> tuple[int, ...]:
    """Symplectic root of the box: eps_i - eps_j, eps_i + eps_{2p+1-j}, or 2 eps_i."""
    if not (1 <= i < j <= 2 * p + 1 - i):
        raise ValueError(f"({i},{j}) is not a box of the rank-{p} shifted staircase")
    v = [0] * p
    if j <= p:
        for t in range(i, j):
            v[t - 1] = 1
    elif j == 2 * p + 1 - i:
        for t in range(i, p):
            v[t - 1] = 2
        v[p - 1] = 1
    else:
        k = 2 * p + 1 - j
        for t in range(i, k):
            v[t - 1] = 1
        for t in range(k, p):
            v[t - 1] = 2
        v[p - 1] = 1
    return tuple(v)


def b_box_to_root(p: int, i: int, j: int) -> tuple[int, ...]:
    """Odd orthogonal root of the box: eps_i - eps_j, eps_i, or eps_i + eps_{2p+2-j}."""
    if not (1 <= i < j <= 2 * p + 1 - i):
        raise ValueError(f"({i},{j}) is not a box of the rank-{p} shifted staircase")
    v = [0] * p
    if j <= p:
        for t in range(i, j):
            v[t - 1] = 1
    elif j == p + 1:
        for t in range(i, p + 1):
            v[t - 1] = 1
    else:
        k = 2 * p + 2 - j
        for t in range(i, k):
            v[t - 1] = 1
        for t in range(k, p + 1):
            v[t - 1] = 2
    return tuple(v)


@lru_cache(maxsize=None)
def _box_root_maps(type_label: str, p: int):
    to_root = {}
    for i in range(1, p + 1):
        for j in range(i + 1, 2 * p + 2 - i):
            to_root[(i, j)] = (
                c_box_to_root(p, i, j) if type_label == "C" else b_box_to_root(p, i, j)
            )
    to_box = {v: b for b, v in to_root.items()}
    assert len(to_box) == p * p
    return to_root, to_box


def coords_of_ideal_BC(ideal: Ideal) -> TypeCCoords:
    rs = ideal.rs
    if rs.type_label not in ("B", "C"):
        raise DualityUnavailableError("shifted coordinates need a type B or C system")
    _, to_box = _box_root_maps(rs.type_label, rs.rank)
    boxes = sorted(to_box[v] for v in generators(ideal).vectors())
    return TypeCCoords(rs.rank, tuple(i for i, _ in boxes), tuple(j for _, j in boxes))


def ideal_of_coords_BC(rs: RootSystem, coords: TypeCCoords) -> Ideal:
    to_root, _ = _box_root_maps(rs.type_label, rs.rank)
    idx = tuple(rs.root_index[to_root[b]] for b in coords.pairs())
    return up_closure(rs, idx)


def dual_C(c: TypeCCoords) -> TypeCCoords:
    """Unfold to the self-conjugate size-2p diagram, dualise there, fold back."""
    p = c.p
    m = 2 * p + 1
    xbar = list(c.X) + [m - j for j in reversed(c.Y)]
    ybar = list(c.Y) + [m - i for i in reversed(c.X)]
    if c.X and c.X[-1] + c.Y[-1] == m:
        # the middle corner sits on the antidiagonal: cancel the repetition
        k = len(c.X)
        del xbar[k], ybar[k - 1]
    unfolded = TypeACoords(2 * p, tuple(xbar), tuple(ybar))
    dual = dual_A(unfolded)
    pairs = [(i, j) for i, j in dual.pairs() if i + j <= m]
    out = TypeCCoords(p, tuple(i for i, _ in pairs), tuple(j for _, j in pairs))
    assert len(out.X) + len(c.X) == p, "generator counts must pair to the rank"
    return out


def dual_B(c: TypeCCoords) -> TypeCCoords:
    """Shape transfer: the odd orthogonal dual uses the same shifted shapes."""
    return dual_C(c)


# ---------------------------------------------------------------------------
# ideal-level duality, including the forced G2 involution
# ---------------------------------------------------------------------------

def _search_involutions(rs: RootSystem):
    """Backtracking search for involutions satisfying the pairing properties."""
    ideals = enumerate_ideals(rs)
    by_gen: dict[int, list[Ideal]] = {}
    for ideal in ideals:
        by_gen.setdefault(gen(ideal), []).append(ideal)

    def extend(mapping, remaining):
        if not remaining:
            yield dict(mapping)
            return
        ideal = remaining[0]
        if ideal.members in mapping:
            yield from extend(mapping, remaining[1:])
            return
        for target in by_gen[rs.rank - gen(ideal)]:
            if target.members in mapping and mapping[target.members] != ideal.members:
                continue
            if target.members == ideal.members and gen(ideal) * 2 != rs.rank:
                continue
            new = dict(mapping)
            new[ideal.members] = target.members
            new[target.members] = ideal.members
            if _satisfies_conjecture_properties(rs, new):
                yield from extend(new, remaining[1:])

    yield from extend({}, ideals)


def _satisfies_conjecture_properties(rs: RootSystem, partial: dict[int, int]) -> bool:
    """Check properties (iii)-(vi) on the pairs fixed so far."""
    for m, m2 in partial.items():
        ideal, dual = Ideal(rs, m), Ideal(rs, m2)
        g = generators(ideal).vectors()
        gd = generators(dual).vectors()
        if not _long_short_ok(rs, g, gd):
            return False
        for a in range(rs.rank):
            alpha = rs.simple_vector(a)
            if alpha in g:
                if any(v[a] != 0 for v in gd):
                    return False
                expected = dual_in_subsystem(rs, tuple(v for v in g if v != alpha), a)
                if set(expected) != set(gd):
                    return False
            elif all(v[a] == 0 for v in g):
                expected = (alpha,) + dual_in_subsystem(rs, g, a)
                if set(expected) != set(gd):
                    return False
    # height-slice pairing on fully matched slices
    h = rs.coxeter_number
    for k in range(1, h + 1):
        slice_k = _height_slice_ideal_mask(rs, k)
        if slice_k in partial and partial[slice_k] != _height_slice_ideal_mask(rs, h + 1 - k):
            return False
    return True


def _height_slice_ideal_mask(rs: RootSystem, k: int) -> int:
    mask = 0
    for i, v in enumerate(rs.positive_roots):
        if sum(v) >= k:
            mask |= 1 << i
    return mask


def _long_short_ok(rs: RootSystem, gammas, duals) -> bool:
    """Long/short multiset of the two generator sets together matches Pi."""
    simple_longs = sum(1 for i in range(rs.rank) if rs.simple_len2[i] == 2)
    combined = list(gammas) + list(duals)
    longs = sum(1 for v in combined if rs.form(v, v) == 2)
    return longs == simple_longs and len(combined) == rs.rank


@lru_cache(maxsize=None)
def _g2_involution_table(type_label: str, rank: int) -> dict[int, int]:
    rs = build_root_system(type_label, rank)
    found = []
    for mapping in _search_involutions(rs):
        if mapping not in found:
            found.append(mapping)
        if len(found) > 1:
            break
    assert len(found) == 1, f"expected a unique involution, found {len(found)}"
    return found[0]


def dual_ideal(ideal: Ideal) -> Ideal:
    """The dual ideal, for the types where the involution is constructed."""
    rs = ideal.rs
    t = rs.type_label
    if t == "A":
        return ideal_of_coords_A(rs, dual_A(coords_of_ideal_A(ideal)))
    if t == "C":
        return ideal_of_coords_BC(rs, dual_C(coords_of_ideal_BC(ideal)))
    if t == "B":
        return ideal_of_coords_BC(rs, dual_B(coords_of_ideal_BC(ideal)))
    if t == "G":
        table = _g2_involution_table(t, rs.rank)
        return Ideal(rs, table[ideal.members])
    raise DualityUnavailableError(f"no duality implemented for type {t}")


def has_duality(rs: RootSystem) -> bool:
    return rs.type_label in ("A", "B", "C", "G")


# ---------------------------------------------------------------------------
# duality inside the subsystem spanned by all simple roots but one
# ---------------------------------------------------------------------------

def _components_after_removal(rs: RootSystem, removed: int):
    """Connected Dynkin segments of Pi minus one node, with their local type.

    Components of A/B/C/G2 diagrams are chains; the one containing the far
    end of a B/C diagram keeps that type, everything else is type A.
    """
    p = rs.rank
    nodes = [i for i in range(p) if i != removed]
    comps: list[list[int]] = []
    for i in nodes:
        if comps and comps[-1][-1] == i - 1:
            comps[-1].append(i)
        else:
            comps.append([i])
    out = []
    for comp in comps:
        if rs.type_label in ("B", "C") and comp[-1] == p - 1 and len(comp) >= 1:
            out.append((rs.type_label, comp))
        else:
            out.append(("A", comp))
    return out


def dual_in_subsystem(rs: RootSystem, gamma_vectors, removed: int):
    """Dual of an antichain taken inside the root subsystem avoiding one simple.

    Decomposes into Dynkin segments, dualises each component through its own
    box machinery, and reassembles global coordinate vectors.
    """
    if rs.type_label not in ("A", "B", "C", "G"):
        raise DualityUnavailableError(f"no subsystem duality for type {rs.type_label}")
    if any(v[removed] != 0 for v in gamma_vectors):
        raise ValueError("antichain must avoid the removed simple root")
    out: list[tuple[int, ...]] = []
    for comp_type, nodes in _components_after_removal(rs, removed):
        local = [
            tuple(v[t] for t in nodes)
            for v in gamma_vectors
            if any(v[t] for t in nodes)
        ]
        m = len(nodes)
        if comp_type == "A":
            boxes = sorted(a_root_to_box(m + 1, v) for v in local)
            coords = TypeACoords(m + 1, tuple(i for i, _ in boxes), tuple(j for _, j in boxes))
            dual_boxes = dual_A(coords).pairs()
            local_dual = [a_box_to_root(m + 1, i, j) for i, j in dual_boxes]
        else:
            _, to_box = _box_root_maps(comp_type, m)
            boxes = sorted(to_box[v] for v in local)
            coords = TypeCCoords(m, tuple(i for i, _ in boxes), tuple(j for _, j in boxes))
            dual_boxes = dual_C(coords).pairs()
            to_root, _ = _box_root_maps(comp_type, m)
            local_dual = [to_root[b] for b in dual_boxes]
        for lv in local_dual:
            v = [0] * rs.rank
            for t, node in enumerate(nodes):
                v[node] = lv[t]
            out.append(tuple(v))
    return tuple(out)


# ---------------------------------------------------------------------------
# fixed points, property reports, exploration search
# ---------------------------------------------------------------------------

def self_dual_ideals_A(n: int) -> list[TypeACoords]:
    """All fixed points of the type A duality on matrix size n."""
    if n < 2:
        raise ValueError("need n >= 2")
    rs = build_root_system("A", n - 1)
    out = []
    for ideal in enumerate_ideals(rs):
        coords = coords_of_ideal_A(ideal)
        if dual_A(coords) == coords:
            out.append(coords)
    out.sort(key=lambda c: (len(c.X), c.X, c.Y))
    expected = comb(n - 1, (n - 1) // 2) // ((n - 1) // 2 + 1) if n % 2 == 1 else 0
    assert len(out) == expected
    return out


@dataclass(frozen=True)
class PropertyReport:
    involution_ok: bool
    gen_pairing_ok: bool
    removal_ok: bool            # property: dual avoids a contained simple root
    insertion_ok: bool          # property: dual of a subsystem antichain adds it
    height_slices_ok: bool
    long_short_ok: bool
    counterexample: str | None

    @property
    def all_ok(self) -> bool:
        return (
            self.involution_ok
            and self.gen_pairing_ok
            and self.removal_ok
            and self.insertion_ok
            and self.height_slices_ok
            and self.long_short_ok
        )


def conjecture_properties_check(rs: RootSystem, dual_fn=dual_ideal) -> PropertyReport:
    """Verify the conjectured duality properties on every ideal of the system."""
    p = rs.rank
    flags = {k: True for k in ("inv", "pair", "rem", "ins", "slice", "ls")}
    counter = None

    def fail(key: str, msg: str):
        nonlocal counter
        flags[key] = False
        if counter is None:
            counter = msg

    for ideal in enumerate_ideals(rs):
        dual = dual_fn(ideal)
        if dual_fn(dual).members != ideal.members:
            fail("inv", f"not an involution at {generators(ideal).vectors()}")
        g = generators(ideal).vectors()
        gd = generators(dual).vectors()
        if len(g) + len(gd) != p:
            fail("pair", f"gen counts {len(g)}+{len(gd)} != {p} at {g}")
        if not _long_short_ok(rs, g, gd):
            fail("ls", f"long/short distribution off at {g} -> {gd}")
        for a in range(p):
            alpha = rs.simple_vector(a)
            if alpha in g:
                if any(v[a] != 0 for v in gd):
                    fail("rem", f"dual of {g} meets removed simple {a + 1}")
                    continue
                expected = dual_in_subsystem(rs, tuple(v for v in g if v != alpha), a)
                if set(expected) != set(gd):
                    fail("rem", f"subsystem dual mismatch at {g}, simple {a + 1}")
            elif all(v[a] == 0 for v in g):
                expected = set((alpha,) + dual_in_subsystem(rs, g, a))
                if expected != set(gd):
                    fail("ins", f"insertion property fails at {g}, simple {a + 1}")
    h = rs.coxeter_number
    for k in range(1, h + 1):
        ideal = Ideal(rs, _height_slice_ideal_mask(rs, k))
        want = _height_slice_ideal_mask(rs, h + 1 - k)
        if dual_fn(ideal).members != want:
            fail("slice", f"height slice {k} does not map to {h + 1 - k}")
    return PropertyReport(
        flags["inv"], flags["pair"], flags["rem"], flags["ins"], flags["slice"],
        flags["ls"], counter,
    )


def find_involutions(rs: RootSystem, limit: int = 10) -> list[dict[int, int]]:
    """Search involutions satisfying the pairing properties (exploration aid).

    Backtracking over ideals matched by complementary generator counts with
    the subsystem-compatibility and long/short filters applied on the fly.
    Practical for small ranks of types A/B/C/G; the properties pin the
    involution down uniquely at rank two.
    """
    found = []
    for mapping in _search_involutions(rs):
        if mapping not in found:
            found.append(mapping)
        if len(found) >= limit:
            break
    return found
