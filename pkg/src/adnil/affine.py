"""Affine Weyl elements attached to ideals, and the lattice-point geometry.

Elements are stored as the pair (v, r): a finite Weyl part v (exact integer
matrix on the simple-root basis) and a coroot-lattice translation r, acting
linearly on V + Q*delta by w(x) = v(x) - (x, r)*delta.  The inversion set
of the element attached to an ideal is the union of the sets
{k*delta - gamma : gamma in I_k} over the lower central series, and the
element is recovered from it by repeatedly peeling off an affine simple
root.  Inversion sets are "stacks": for each finite root the levels present
form an initial segment, so it suffices to track one count per signed root.

Sign conventions (inversions of w, not of w^{-1}) are pinned down by the
Heisenberg anchor: the element of {gamma : (gamma, theta) > 0} must come
out as the translation by -theta^vee.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .linalg import frac_vec
from .rootsys import (
    AffineRoot,
    RootSystem,
    build_root_system,
    coroot_coordinates,
)
from .ideals import Ideal, bits, lower_central_series

LatticePoint = tuple[Fraction, ...]


class NotBiclosedError(ValueError):
    pass


class NotAdmissibleError(ValueError):
    pass


@lru_cache(maxsize=None)
def _signed_tables(type_label: str, rank: int):
    """Signed-root indexing and the permutations induced by s_0..s_p.

    Signed index s < N is root s, s >= N is minus root s-N.  Index 0 of the
    permutation list is the affine reflection s_0, whose finite part is the
    reflection in theta; levels never need tracking because inversion-set
    stacks stay grounded.
    """
    rs = build_root_system(type_label, rank)
    n = rs.num_positive
    p = rs.rank

    def signed_index(vec) -> int:
        i = rs.root_index.get(tuple(vec))
        if i is not None:
            return i
        return n + rs.root_index[tuple(-c for c in vec)]

    def reflect_simple(vec, i):
        pairing = sum(vec[k] * rs.cartan[k][i] for k in range(p))
        out = list(vec)
        out[i] -= pairing
        return out

    def reflect_theta(vec):
        pairing = sum(vec[k] * rs.theta_pairing[k] for k in range(p))
        return [c - pairing * t for c, t in zip(vec, rs.theta)]

    perms = []
    for i in range(p + 1):
        perm = []
        for s in range(2 * n):
            vec = rs.positive_roots[s] if s < n else [-c for c in rs.positive_roots[s - n]]
            img = reflect_theta(vec) if i == 0 else reflect_simple(vec, i - 1)
            perm.append(signed_index(img))
        perms.append(tuple(perm))
    simple_signed = tuple(rs.root_index[rs.simple_vector(i)] for i in range(p))
    return tuple(perms), simple_signed


@dataclass(frozen=True)
class AffineWeylElement:
    """w = v . t_r with v in the finite Weyl group and r in the coroot lattice."""

    rs: RootSystem
    v: tuple[tuple[int, ...], ...]       # rows: v(x)_i = sum_j v[i][j] x_j
    v_inv: tuple[tuple[int, ...], ...]
    r: tuple[int, ...]
    length: int

    def apply_finite(self, vec, inverse: bool = False):
        m = self.v_inv if inverse else self.v
        return tuple(sum(row[j] * vec[j] for j in range(len(vec))) for row in m)

    def pairing_r(self, vec) -> int:
        """(vec, r): integral whenever vec is a root, since r lies in the coroot lattice."""
        val = self.rs.form(vec, self.r)
        assert val.denominator == 1
        return int(val)

    def act(self, root: AffineRoot) -> AffineRoot:
        """Linear action on V + Q*delta: w(x + k*delta) = v(x) + (k - (x, r))*delta."""
        return AffineRoot(
            self.apply_finite(root.finite), root.level - self.pairing_r(root.finite)
        )

    def act_inverse(self, root: AffineRoot) -> AffineRoot:
        """w^{-1}(x + k*delta) = v^{-1}(x) + (k + (x, d))*delta with d = v(r)."""
        d = self.apply_finite(self.r)
        val = self.rs.form(root.finite, d)
        assert val.denominator == 1
        return AffineRoot(self.apply_finite(root.finite, inverse=True), root.level + int(val))

    def affine_act_on_point(self, y, inverse: bool = False):
        """Affine-linear action on V: w.y = v(y + r); inverse: v^{-1}(y) - r."""
        if inverse:
            img = self.apply_finite(frac_vec(y), inverse=True)
            return tuple(a - b for a, b in zip(img, self.r))
        shifted = tuple(Fraction(a) + b for a, b in zip(y, self.r))
        return self.apply_finite(shifted)


def _identity_rows(p: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(p)] for i in range(p)]


def phi_set(ideal: Ideal) -> frozenset[AffineRoot]:
    """Inversion set of the element attached to the ideal.

    {k*delta - gamma} for gamma running over the k-th term of the lower
    central series, k >= 1.
    """
    rs = ideal.rs
    out = []
    for k, term in enumerate(lower_central_series(ideal), start=1):
        for i in bits(term.members):
            out.append(AffineRoot(tuple(-c for c in rs.positive_roots[i]), k))
    return frozenset(out)


def element_from_inversions(rs: RootSystem, phi) -> AffineWeylElement:
    """The unique element whose inversion set is the given biclosed set.

    Repeatedly extracts an affine simple root alpha_i contained in the
    residual set and replaces it by s_i(residual minus alpha_i); the product
    of the extracted reflections, newest on the left, is the element.
    """
    n = rs.num_positive
    p = rs.rank
    counts = [0] * (2 * n)
    by_root: dict[int, list[int]] = {}
    for ar in phi:
        if not ar.is_positive:
            raise NotBiclosedError(f"{ar} is not a positive affine root")
        i = rs.root_index.get(ar.finite)
        j = rs.root_index.get(tuple(-c for c in ar.finite))
        if i is None and j is None:
            raise NotBiclosedError(f"finite part of {ar} is not a root")
        s = i if i is not None else n + j
        by_root.setdefault(s, []).append(ar.level)
        counts[s] += 1
    for s, levels in by_root.items():
        base = 0 if s < n else 1
        if sorted(levels) != list(range(base, base + len(levels))):
            raise NotBiclosedError(
                "levels are not an initial segment for finite root index "
                f"{s % n}: {sorted(levels)}"
            )
    return _peel(rs, counts, sum(counts))


def _peel(rs: RootSystem, counts: list[int], total: int) -> AffineWeylElement:
    n = rs.num_positive
    p = rs.rank
    perms, simple_signed = _signed_tables(rs.type_label, rs.rank)
    theta_neg = n + rs.theta_index

    v = _identity_rows(p)
    v_inv = _identity_rows(p)
    r = [0] * p
    length = total

    remaining = total
    while remaining:
        if counts[theta_neg] > 0:
            i = 0
            counts[theta_neg] -= 1
        else:
            for i in range(1, p + 1):
                if counts[simple_signed[i - 1]] > 0:
                    counts[simple_signed[i - 1]] -= 1
                    break
            else:
                raise NotBiclosedError("residual set contains no affine simple root")
        remaining -= 1
        perm = perms[i]
        new_counts = [0] * (2 * n)
        for s in range(2 * n):
            if counts[s]:
                new_counts[perm[s]] = counts[s]
        counts = new_counts
        # accumulate w <- s_i . w
        if i == 0:
            # finite part of s_0 is the reflection in theta; translation -theta^vee
            tp = rs.theta_pairing
            theta = rs.theta
            sums = [sum(tp[k] * v[k][j] for k in range(p)) for j in range(p)]
            v = [[v[a][j] - theta[a] * sums[j] for j in range(p)] for a in range(p)]
            v_inv_theta = [sum(v_inv[a][k] * theta[k] for k in range(p)) for a in range(p)]
            v_inv = [
                [v_inv[a][j] - tp[j] * v_inv_theta[a] for j in range(p)] for a in range(p)
            ]
            r = [c - t for c, t in zip(r, v_inv_theta)]
        else:
            idx = i - 1
            col = [rs.cartan[k][idx] for k in range(p)]
            new_row = [v[idx][j] - sum(col[k] * v[k][j] for k in range(p)) for j in range(p)]
            v[idx] = new_row
            coli = [v_inv[a][idx] for a in range(p)]
            v_inv = [
                [v_inv[a][j] - rs.cartan[j][idx] * coli[a] for j in range(p)]
                for a in range(p)
            ]
    return AffineWeylElement(
        rs,
        tuple(tuple(row) for row in v),
        tuple(tuple(row) for row in v_inv),
        tuple(r),
        length,
    )


def element_of_ideal(ideal: Ideal) -> AffineWeylElement:
    return element_from_inversions(ideal.rs, phi_set(ideal))


def inversion_set(w: AffineWeylElement) -> frozenset[AffineRoot]:
    """Recompute the inversion set directly from the pair (v, r).

    For finite gamma the positive affine roots gamma + k*delta sent negative
    are exactly those with k < (gamma, r) + [v(gamma) < 0], k within the
    allowed range; this is independent of the peeling and is used as the
    round-trip oracle.
    """
    rs = w.rs
    out = []
    gram_r = [sum(row[j] * w.r[j] for j in range(rs.rank)) for row in rs.gram]
    for i, root in enumerate(rs.positive_roots):
        img = w.apply_finite(root)
        img_negative = tuple(img) not in rs.root_index
        pr_exact = sum(c * g for c, g in zip(root, gram_r))
        assert pr_exact.denominator == 1
        pr = int(pr_exact)
        limit = pr + (1 if img_negative else 0)
        for k in range(0, limit):
            out.append(AffineRoot(root, k))
        neg = tuple(-c for c in root)
        limit_neg = -pr + (0 if img_negative else 1)
        for k in range(1, limit_neg):
            out.append(AffineRoot(neg, k))
    return frozenset(out)


def ideal_of_element(w: AffineWeylElement) -> Ideal:
    """I_w = {gamma : delta - gamma is an inversion of w}."""
    rs = w.rs
    mask = 0
    for i, root in enumerate(rs.positive_roots):
        ar = AffineRoot(tuple(-c for c in root), 1)
        if not w.act(ar).is_positive:
            mask |= 1 << i
    return Ideal(rs, mask)


def is_admissible(w: AffineWeylElement) -> bool:
    """w(alpha) positive for simple alpha, and every negative w^{-1}(simple)
    of the form gamma - delta with gamma a positive root."""
    rs = w.rs
    p = rs.rank
    for i in range(p):
        if not w.act(AffineRoot(rs.simple_vector(i), 0)).is_positive:
            return False
    hat_simples = [AffineRoot(rs.simple_vector(i), 0) for i in range(p)]
    hat_simples.append(AffineRoot(tuple(-c for c in rs.theta), 1))  # alpha_0
    for ar in hat_simples:
        img = w.act_inverse(ar)
        if img.is_positive:
            continue
        if img.level != -1 or tuple(img.finite) not in rs.root_index:
            return False
    return True


def generator_criterion(w: AffineWeylElement, root_index: int) -> bool:
    """gamma is a generator of I_w iff w(delta - gamma) is minus an affine simple."""
    rs = w.rs
    gamma = rs.positive_roots[root_index]
    ar = AffineRoot(tuple(-c for c in gamma), 1)
    img = w.act(ar)
    if img.is_positive:
        raise ValueError(f"root {gamma} does not lie in the ideal of w")
    if img.level == 0:
        neg = tuple(-c for c in img.finite)
        return neg in rs.root_index and sum(neg) == 1
    return img.level == -1 and tuple(img.finite) == rs.theta


def hat_simple_negative_count(w: AffineWeylElement) -> int:
    """Number of affine simple roots sent negative by w^{-1}."""
    rs = w.rs
    total = 0
    hat_simples = [AffineRoot(rs.simple_vector(i), 0) for i in range(rs.rank)]
    hat_simples.append(AffineRoot(tuple(-c for c in rs.theta), 1))
    for ar in hat_simples:
        if not w.act_inverse(ar).is_positive:
            total += 1
    return total


def class_criterion(w: AffineWeylElement) -> int:
    """The unique k with w(alpha_0) + (k-1)*delta negative and + k*delta positive."""
    rs = w.rs
    alpha0 = AffineRoot(tuple(-c for c in rs.theta), 1)
    img = w.act(alpha0)
    if img.is_positive:
        return 0  # the ideal of w is empty
    finite_positive = tuple(img.finite) in rs.root_index
    k = (-img.level) if finite_positive else (1 - img.level)
    assert k >= 1
    assert not AffineRoot(img.finite, img.level + k - 1).is_positive
    assert AffineRoot(img.finite, img.level + k).is_positive
    return k


def class_branch(w: AffineWeylElement) -> str:
    """Which half of the dichotomy w(alpha_0) + cl*delta lands in."""
    rs = w.rs
    k = class_criterion(w)
    if k == 0:
        raise ValueError("empty ideal has no branch")
    alpha0 = AffineRoot(tuple(-c for c in rs.theta), 1)
    img = w.act(alpha0)
    landed = AffineRoot(img.finite, img.level + k)
    if landed.level == 0 and tuple(landed.finite) in rs.root_index:
        return "finite"       # in Delta^+
    if landed.level == 1 and tuple(-c for c in landed.finite) in rs.root_index:
        return "delta-minus"  # in delta - Delta^+
    raise AssertionError("criterion landed outside both branches")


def d_point(w: AffineWeylElement) -> LatticePoint:
    """d = v(r), the coroot-lattice point attached to an admissible element."""
    if not is_admissible(w):
        raise NotAdmissibleError("d-points are defined for admissible elements only")
    return tuple(Fraction(c) for c in w.apply_finite(w.r))


def simplex_contains(rs: RootSystem, point) -> bool:
    """(tau, alpha_i) >= -1 for all simple roots and (tau, theta) <= 2."""
    x = frac_vec(point)
    for i in range(rs.rank):
        if rs.form(x, rs.simple_vector(i)) < -1:
            return False
    return rs.form(x, rs.theta) <= 2


def simplex_face_codim(rs: RootSystem, point) -> int:
    """Codimension of the minimal face containing the point (which must lie inside)."""
    x = frac_vec(point)
    codim = 0
    for i in range(rs.rank):
        val = rs.form(x, rs.simple_vector(i))
        assert val >= -1
        if val == -1:
            codim += 1
    tval = rs.form(x, rs.theta)
    assert tval <= 2
    if tval == 2:
        codim += 1
    return codim


def simplex_vertices(rs: RootSystem) -> tuple[LatticePoint, ...]:
    """-rho^vee together with -rho^vee + ((h+1)/m_i) pi_i for each i."""
    h = rs.coxeter_number
    rho = rs.rho_coweight
    verts = [tuple(-c for c in rho)]
    for i in range(rs.rank):
        scale = Fraction(h + 1, rs.marks[i])
        verts.append(
            tuple(-c + scale * w for c, w in zip(rho, rs.fundamental_coweights[i]))
        )
    return tuple(verts)


def lattice_points_in_simplex(rs: RootSystem) -> list[LatticePoint]:
    """All coroot-lattice points in the simplex, by bounded integer search.

    The search runs over integer coordinates in the simple-coroot basis,
    boxed by the vertex coordinates (inflated by one for safety) and pruned
    with interval bounds per constraint.
    """
    p = rs.rank
    # constraint rows over coroot coordinates are Cartan-integer rows
    rows = [[rs.cartan[i][j] for j in range(p)] for i in range(p)]
    theta_row = [
        sum(rs.marks[k] * rs.cartan[k][j] for k in range(p)) for j in range(p)
    ]
    lo, hi = [], []
    vert_coords = [coroot_coordinates(rs, v) for v in simplex_vertices(rs)]
    for j in range(p):
        vals = [vc[j] for vc in vert_coords]
        lo.append(math.floor(min(vals)) - 1)
        hi.append(math.ceil(max(vals)) + 1)

    # per-constraint suffix interval bounds over the box
    def suffix_bounds(row):
        mins = [0] * (p + 1)
        maxs = [0] * (p + 1)
        for j in range(p - 1, -1, -1):
            a, b = row[j] * lo[j], row[j] * hi[j]
            mins[j] = mins[j + 1] + min(a, b)
            maxs[j] = maxs[j + 1] + max(a, b)
        return mins, maxs

    simple_bounds = [suffix_bounds(r) for r in rows]
    theta_bounds = suffix_bounds(theta_row)

    points: list[LatticePoint] = []
    c = [0] * p
    partial_simple = [[0] * (p + 1) for _ in range(p)]
    partial_theta = [0] * (p + 1)

    def rec(j: int):
        if j == p:
            points.append(
                tuple(Fraction(2 * c[k], 1) / rs.simple_len2[k] for k in range(p))
            )
            return
        for val in range(lo[j], hi[j] + 1):
            ok = True
            for i in range(p):
                part = partial_simple[i][j] + rows[i][j] * val
                if part + simple_bounds[i][1][j + 1] < -1:
                    ok = False
                    break
                partial_simple[i][j + 1] = part
            if ok:
                tpart = partial_theta[j] + theta_row[j] * val
                if tpart + theta_bounds[0][j + 1] > 2:
                    ok = False
                else:
                    partial_theta[j + 1] = tpart
            if ok:
                c[j] = val
                rec(j + 1)
        return

    rec(0)
    # the box plus interval pruning is only a relaxation: intersect exactly
    out = [pt for pt in points if simplex_contains(rs, pt)]
    out.sort()
    return out
