"""Immutable exact root-system data for the simple types A..G.

Positive roots are integer coordinate vectors in the simple-root basis, so
the root order (mu below nu iff nu - mu is a nonnegative combination of
simple roots) is a coordinatewise test and all arithmetic stays integral.
The invariant inner product is normalised so that long roots have squared
length 2, realised as an exact rational Gram matrix per type.

The exponents are read off the height distribution of the positive roots:
the number of positive roots of height k equals the number of exponents
that are >= k, so the multiset of exponents is the conjugate partition of
the height counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .linalg import Vec, dot, frac_vec, mat_inverse, mat_vec

VALID_RANKS = {
    "A": lambda p: p >= 1,
    "B": lambda p: p >= 2,
    "C": lambda p: p >= 2,
    "D": lambda p: p >= 3,
    "E": lambda p: p in (6, 7, 8),
    "F": lambda p: p == 4,
    "G": lambda p: p == 2,
}


class InvalidTypeError(ValueError):
    pass


def _dynkin_data(type_label: str, p: int):
    """Edges of the Dynkin graph (0-indexed) and squared simple-root lengths."""
    two = Fraction(2)
    one = Fraction(1)
    chain = [(i, i + 1) for i in range(p - 1)]
    if type_label == "A":
        return chain, [two] * p
    if type_label == "B":
        return chain, [two] * (p - 1) + [one]
    if type_label == "C":
        return chain, [one] * (p - 1) + [two]
    if type_label == "D":
        return [(i, i + 1) for i in range(p - 2)] + [(p - 3, p - 1)], [two] * p
    if type_label == "E":
        edges = [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]
        edges += [(5, 6)] if p >= 7 else []
        edges += [(6, 7)] if p == 8 else []
        return edges, [two] * p
    if type_label == "F":
        return chain, [two, two, one, one]
    if type_label == "G":
        return [(0, 1)], [Fraction(2, 3), two]
    raise InvalidTypeError(f"unknown type label {type_label!r}")


def _gram_and_cartan(type_label: str, p: int):
    edges, len2 = _dynkin_data(type_label, p)
    gram = [[Fraction(0)] * p for _ in range(p)]
    for i in range(p):
        gram[i][i] = len2[i]
    for i, j in edges:
        # adjacent simple roots meet at an obtuse angle fixed by the longer one
        gram[i][j] = gram[j][i] = -max(len2[i], len2[j]) / 2
    cartan = [[int(2 * gram[i][j] / len2[j]) for j in range(p)] for i in range(p)]
    return tuple(tuple(row) for row in gram), tuple(tuple(row) for row in cartan), tuple(len2)


def _generate_positive_roots(cartan, p: int) -> list[tuple[int, ...]]:
    """Closure of simple-root addition, produced height by height.

    A candidate beta + alpha_i is a root iff the alpha_i-string through
    beta extends upwards, i.e. q - <beta, alpha_i^vee> >= 1 where q is the
    number of downward steps that stay roots.
    """
    simple = [tuple(1 if j == i else 0 for j in range(p)) for i in range(p)]
    known = set(simple)
    by_height = {1: list(simple)}
    h = 1
    while by_height.get(h):
        nxt = []
        for beta in by_height[h]:
            pairing = [sum(beta[k] * cartan[k][i] for k in range(p)) for i in range(p)]
            for i in range(p):
                cand = list(beta)
                cand[i] += 1
                cand = tuple(cand)
                if cand in known:
                    continue
                if beta == simple[i]:
                    continue  # 2*alpha_i is never a root
                q = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if down[i] < 0 or tuple(down) not in known:
                        break
                    q += 1
                if q - pairing[i] >= 1:
                    known.add(cand)
                    nxt.append(cand)
        h += 1
        if nxt:
            by_height[h] = nxt
    roots = sorted(known, key=lambda v: (sum(v), tuple(-c for c in v)))
    return roots


def _exponents_from_heights(roots, p: int) -> tuple[int, ...]:
    counts: dict[int, int] = {}
    for v in roots:
        counts[sum(v)] = counts.get(sum(v), 0) + 1
    hmax = max(counts)
    exps = []
    # conjugate partition of the height counts
    for k in range(1, hmax + 1):
        exps.append(counts.get(k, 0))
    result = []
    for i in range(p):
        e = sum(1 for c in exps if c > i)
        result.append(e)
    return tuple(sorted(result))


@dataclass(frozen=True)
class AffineRoot:
    """A real affine root gamma + k*delta with gamma in the finite system."""

    finite: tuple[int, ...]
    level: int

    @property
    def is_positive(self) -> bool:
        if self.level != 0:
            return self.level > 0
        return all(c >= 0 for c in self.finite) and any(c > 0 for c in self.finite)

    def negated(self) -> "AffineRoot":
        return AffineRoot(tuple(-c for c in self.finite), -self.level)


class RootSystem:
    """Frozen container for one simple root system.

    Built once by :func:`build_root_system`; all attributes are tuples or
    dicts that must never be mutated.
    """

    def __init__(self, type_label: str, rank: int):
        if type_label not in VALID_RANKS or not VALID_RANKS[type_label](rank):
            raise InvalidTypeError(
                f"({type_label}, {rank}) is not a valid simple type: "
                "need A p>=1, B/C p>=2, D p>=3, E 6..8, F 4, G 2"
            )
        self.type_label = type_label
        self.rank = rank
        p = rank
        self.gram, self.cartan, self.simple_len2 = _gram_and_cartan(type_label, p)
        roots = _generate_positive_roots(self.cartan, p)
        self.positive_roots: tuple[tuple[int, ...], ...] = tuple(roots)
        self.root_index: dict[tuple[int, ...], int] = {v: i for i, v in enumerate(roots)}
        self.num_positive = len(roots)

        heights = [sum(v) for v in roots]
        top = max(heights)
        tops = [v for v in roots if sum(v) == top]
        assert len(tops) == 1, "highest root must be unique"
        self.theta: tuple[int, ...] = tops[0]
        self.theta_index = self.root_index[self.theta]
        self.marks = self.theta
        self.coxeter_number = top + 1
        self.exponents = _exponents_from_heights(roots, p)

        self.len2 = tuple(self.form(v, v) for v in roots)
        assert self.len2[self.theta_index] == 2, "(theta, theta) must equal 2"
        assert max(self.len2) == 2

        gram_inv = mat_inverse(self.gram)
        # (pi_i, alpha_j) = delta_ij; Gram is symmetric so columns = rows
        self.fundamental_coweights: tuple[Vec, ...] = tuple(gram_inv[i] for i in range(p))
        self.rho_coweight: Vec = tuple(
            sum((gram_inv[i][j] for i in range(p)), Fraction(0)) for j in range(p)
        )

        assert self.num_positive == p * self.coxeter_number // 2
        assert sum(self.marks) == self.coxeter_number - 1
        assert sum(self.exponents) == self.num_positive
        for i in range(p):
            for j in range(p):
                want = Fraction(1 if i == j else 0)
                assert self.form(self.fundamental_coweights[i], self.simple_vector(j)) == want

        # <x, theta^vee> = (x, theta) since (theta, theta) = 2
        self.theta_pairing = tuple(
            int(self.form(self.simple_vector(j), self.theta)) for j in range(p)
        )

    def simple_vector(self, i: int) -> tuple[int, ...]:
        return tuple(1 if j == i else 0 for j in range(self.rank))

    def form(self, x, y) -> Fraction:
        gx = mat_vec(self.gram, frac_vec(x))
        return dot(gx, frac_vec(y))

    def __repr__(self) -> str:
        return f"RootSystem({self.type_label}{self.rank})"


@lru_cache(maxsize=None)
def build_root_system(type_label: str, rank: int) -> RootSystem:
    """Construct (and cache) the root system of the given simple type."""
    return RootSystem(type_label, rank)


def root_sum(rs: RootSystem, i: int, j: int) -> int | None:
    """Index of root_i + root_j if positive, else None."""
    s = tuple(a + b for a, b in zip(rs.positive_roots[i], rs.positive_roots[j]))
    return rs.root_index.get(s)


def inner(rs: RootSystem, x, y) -> Fraction:
    """Exact invariant inner product of two rational vectors in V."""
    return rs.form(x, y)


def height(rs: RootSystem, i: int) -> int:
    return sum(rs.positive_roots[i])


def is_long(rs: RootSystem, i: int) -> bool:
    return rs.len2[i] == 2


def coroot(rs: RootSystem, i: int) -> tuple[int, ...]:
    """gamma^vee = 2*gamma/(gamma,gamma); integral in the simple-root basis."""
    scale = Fraction(2) / rs.len2[i]
    v = tuple(scale * c for c in rs.positive_roots[i])
    assert all(c.denominator == 1 for c in v)
    return tuple(int(c) for c in v)


def coroot_coordinates(rs: RootSystem, x) -> Vec:
    """Coordinates of x in the simple-coroot basis (x_j * len2_j / 2)."""
    return tuple(Fraction(c) * rs.simple_len2[j] / 2 for j, c in enumerate(x))


def in_coroot_lattice(rs: RootSystem, x) -> bool:
    return all(c.denominator == 1 for c in coroot_coordinates(rs, x))
