"""Delta polynomials of lattice simplices via finite subgroups of (Q/Z)^(d+1)."""

from .catalog import (
    FAMILIES,
    FamilySpec,
    chain_generator,
    construct_group,
    construct_simplex,
    expected_classes,
)
from .classifier import search, verify_bounds
from .counting import count_M, known_N, ordered_bell
from .delta import (
    DeltaPolynomial,
    delta_of,
    delta_text,
    ehrhart_check,
    gorenstein_index,
    is_gorenstein,
    target,
)
from .residues import (
    ResidueGroup,
    canonical_form,
    from_generators,
    group_of_simplex,
    pyramid_coordinates,
)
from .simplex import LatticeSimplex, family_A, family_BC, from_vertices

__version__ = "0.1.0"

__all__ = [
    "FAMILIES",
    "FamilySpec",
    "DeltaPolynomial",
    "LatticeSimplex",
    "ResidueGroup",
    "canonical_form",
    "chain_generator",
    "construct_group",
    "construct_simplex",
    "count_M",
    "delta_of",
    "delta_text",
    "ehrhart_check",
    "expected_classes",
    "family_A",
    "family_BC",
    "from_generators",
    "from_vertices",
    "gorenstein_index",
    "group_of_simplex",
    "is_gorenstein",
    "known_N",
    "ordered_bell",
    "pyramid_coordinates",
    "search",
    "target",
    "verify_bounds",
]
