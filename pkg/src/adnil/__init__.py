"""Exact combinatorics of ad-nilpotent ideals of Borel subalgebras.

Subpackages: rootsys (root-system data), ideals (enumeration and
statistics), affine (the affine Weyl correspondence and simplex geometry),
duality (the type A/B/C/G2 involution), arrange (Catalan-arrangement region
counts and witnesses), claims (named verification checks), cli.
"""

from .rootsys import AffineRoot, RootSystem, build_root_system
from .ideals import (
    Antichain,
    Ideal,
    class_of_nilpotence,
    closed_form_counts,
    enumerate_ideals,
    gen,
    generators,
    lower_central_series,
    narayana_polynomial,
    sim,
    sim_polynomial,
    up_closure,
)
from .affine import (
    AffineWeylElement,
    d_point,
    element_from_inversions,
    element_of_ideal,
    is_admissible,
    lattice_points_in_simplex,
    phi_set,
    simplex_face_codim,
    simplex_vertices,
)
from .duality import dual_ideal, self_dual_ideals_A
from .arrange import char_poly, region_witness, zaslavsky_counts

__version__ = "0.1.0"

__all__ = [
    "AffineRoot",
    "AffineWeylElement",
    "Antichain",
    "Ideal",
    "RootSystem",
    "build_root_system",
    "char_poly",
    "class_of_nilpotence",
    "closed_form_counts",
    "d_point",
    "dual_ideal",
    "element_from_inversions",
    "element_of_ideal",
    "enumerate_ideals",
    "gen",
    "generators",
    "is_admissible",
    "lattice_points_in_simplex",
    "lower_central_series",
    "narayana_polynomial",
    "phi_set",
    "region_witness",
    "self_dual_ideals_A",
    "sim",
    "sim_polynomial",
    "simplex_face_codim",
    "simplex_vertices",
    "up_closure",
    "zaslavsky_counts",
]
