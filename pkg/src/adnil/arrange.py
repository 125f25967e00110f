"""Dominant regions of the Catalan arrangement attached to ideals.

The arrangement has hyperplanes (x, mu) in {-1, 0, 1} for every positive
root mu; its characteristic polynomial factors as the product of the
linear terms t - h - e_i, so region counts come straight out of Zaslavsky's
theorem.  An ideal corresponds to the dominant region where (x, gamma) > 1
exactly for the roots gamma of the ideal, and a rational witness point for
the region is the image of a fundamental-alcove point under the inverse
affine action of the ideal's element.  The witness contract is the
verified sign pattern, not the construction: every returned point is
checked exactly against all defining inequalities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import frac_vec, mat_vec
from .rootsys import RootSystem
from .ideals import Ideal, sim
from .affine import element_of_ideal


@dataclass(frozen=True)
class CharPoly:
    """Characteristic polynomial in factored form: product of (t - root_i)."""

    roots: tuple[int, ...]

    def evaluate(self, t) -> Fraction:
        value = Fraction(1)
        for r in self.roots:
            value *= Fraction(t) - r
        return value

    def coefficients(self) -> tuple[int, ...]:
        """Expanded coefficients, constant term first."""
        coeffs = [Fraction(1)]
        for r in self.roots:
            nxt = [Fraction(0)] * (len(coeffs) + 1)
            for i, c in enumerate(coeffs):
                nxt[i + 1] += c
                nxt[i] -= c * r
            coeffs = nxt
        assert all(c.denominator == 1 for c in coeffs)
        return tuple(int(c) for c in coeffs)


def char_poly(rs: RootSystem) -> CharPoly:
    h = rs.coxeter_number
    return CharPoly(tuple(h + e for e in rs.exponents))


@dataclass(frozen=True)
class RegionCounts:
    regions: int
    bounded: int
    dominant_regions: int
    dominant_bounded: int


def zaslavsky_counts(rs: RootSystem) -> RegionCounts:
    """Region counts from the characteristic polynomial.

    regions = (-1)^p chi(-1), bounded = |chi(1)|; the dominant counts divide
    by the Weyl group order, the product of e_i + 1, and the divisions must
    be exact.
    """
    chi = char_poly(rs)
    p = rs.rank
    regions = (-1) ** p * chi.evaluate(-1)
    bounded = abs(chi.evaluate(1))
    order = 1
    for e in rs.exponents:
        order *= e + 1
    dom_r = Fraction(regions) / order
    dom_b = Fraction(bounded) / order
    if dom_r.denominator != 1 or dom_b.denominator != 1:
        raise ArithmeticError("Weyl group order does not divide the region count")
    return RegionCounts(int(regions), int(bounded), int(dom_r), int(dom_b))


def is_bounded_region(ideal: Ideal) -> bool:
    """The region of an ideal is bounded iff the ideal contains no simple root."""
    return sim(ideal) == 0


class WitnessError(RuntimeError):
    pass


def _check_witness(rs: RootSystem, ideal: Ideal, x) -> bool:
    gx = mat_vec(rs.gram, frac_vec(x))
    for i in range(rs.rank):
        if gx[i] <= 0:
            return False
    for i, root in enumerate(rs.positive_roots):
        val = sum(c * g for c, g in zip(root, gx))
        inside = bool(ideal.members >> i & 1)
        if inside and not val > 1:
            return False
        if not inside and not val < 1:
            return False
    return True


def region_witness(ideal: Ideal):
    """Exact rational point separating the ideal's region.

    Primary construction: push the alcove point rho^vee / h through the
    inverse affine action of the ideal's affine Weyl element.  If the exact
    verification fails (it should not), fall back to Fourier-Motzkin
    feasibility at small rank; an infeasible system is a hard error.
    """
    rs = ideal.rs
    x0 = tuple(c / rs.coxeter_number for c in rs.rho_coweight)
    w = element_of_ideal(ideal)
    x = w.affine_act_on_point(x0, inverse=True)
    if _check_witness(rs, ideal, x):
        return x
    if rs.rank <= 4:
        x = _fourier_motzkin_witness(ideal)
        if x is not None and _check_witness(rs, ideal, x):
            return x
    raise WitnessError(
        f"no witness for ideal of size {ideal.size} in {rs.type_label}{rs.rank}"
    )


def _region_inequalities(ideal: Ideal):
    """Strict inequalities a.x > b defining the region, in root coordinates."""
    rs = ideal.rs
    rows = []
    for i in range(rs.rank):
        a = mat_vec(rs.gram, frac_vec(rs.simple_vector(i)))
        rows.append((tuple(a), Fraction(0)))
    for i, root in enumerate(rs.positive_roots):
        a = mat_vec(rs.gram, frac_vec(root))
        if ideal.members >> i & 1:
            rows.append((tuple(a), Fraction(1)))
        else:
            rows.append((tuple(-c for c in a), Fraction(-1)))
    return rows


def _fourier_motzkin_witness(ideal: Ideal):
    """Exact feasibility for the region's strict inequality system."""
    rows = _region_inequalities(ideal)
    p = ideal.rs.rank
    return fourier_motzkin_point(rows, p)


def fourier_motzkin_point(rows, dim: int):
    """A rational solution of the strict system a.x > b, or None.

    Eliminates the last variable by combining opposite-sign rows, recurses,
    then back-substitutes the midpoint of the admissible interval.
    """
    if dim == 0:
        return () if all(b < 0 for a, b in rows) else None
    lower, upper, rest = [], [], []
    for a, b in rows:
        c = a[dim - 1]
        head = a[: dim - 1]
        if c > 0:
            lower.append((head, b, c))       # x_dim > (b - head.x)/c
        elif c < 0:
            upper.append((head, b, c))       # x_dim < (b - head.x)/c
        else:
            rest.append((head, b))
    for ah, bh, ch in lower:
        for au, bu, cu in upper:
            # (b_l - a_l.x)/c_l < (b_u - a_u.x)/c_u with c_u < 0 flips once
            a = tuple(-cu * x + ch * y for x, y in zip(ah, au))
            b = -cu * bh + ch * bu
            rest.append((a, b))
    point = fourier_motzkin_point(rest, dim - 1)
    if point is None:
        return None
    lo, hi = None, None
    for ah, bh, ch in lower:
        val = (bh - sum(x * y for x, y in zip(ah, point))) / ch
        lo = val if lo is None else max(lo, val)
    for au, bu, cu in upper:
        val = (bu - sum(x * y for x, y in zip(au, point))) / cu
        hi = val if hi is None else min(hi, val)
    if lo is None and hi is None:
        last = Fraction(0)
    elif lo is None:
        last = hi - 1
    elif hi is None:
        last = lo + 1
    else:
        if not lo < hi:
            return None
        last = (lo + hi) / 2
    return point + (last,)
