"""Diagram calculus for long virtual knots.

Gauss-code parsing, Reidemeister rewriting, the concatenation monoid,
band-surface genus, and coloring invariants, with budget-bounded
equivalence and commutation search on top.
"""

from longvk.corpus import classical_corpus, full_corpus, virtual_corpus
from longvk.gauss import (
    OVER,
    UNDER,
    GaussCodeError,
    LabelArity,
    MalformedToken,
    OpenGaussDiagram,
    RoleClash,
    SignClash,
    UnknownLabel,
    canonicalize,
    linked,
    mirror,
    parse_gauss_code,
    serialize,
)
from longvk.invariants import (
    FiniteBiquandle,
    check_axioms,
    coloring_matrix,
    commutator_witness,
    default_catalog,
    dihedral_quandle,
    enumerate_biquandles,
    odd_writhe,
    shipped_catalog,
    structure_from_file,
    structure_from_spec,
    trivial_quandle,
)
from longvk.monoid import NotACutPoint, concat, cut_points, is_diagram_decomposable, split_at
from longvk.moves import (
    IllegalMove,
    MoveEvent,
    apply_move,
    enumerate_moves,
    inverse_event,
)
from longvk.search import (
    Budget,
    Verdict,
    commute_check,
    default_budget,
    equivalent_within,
    min_genus_in_orbit,
    prime_scan,
)
from longvk.surface import (
    InvalidTraversal,
    NonIntegralGenus,
    RibbonGraph,
    boundary_components,
    build_band_surface,
    euler_characteristic,
    gauss_from_surface,
    natural_traversal,
    supporting_genus,
)

__version__ = "0.1.0"

__all__ = [
    "OVER",
    "UNDER",
    "GaussCodeError",
    "MalformedToken",
    "LabelArity",
    "RoleClash",
    "SignClash",
    "UnknownLabel",
    "OpenGaussDiagram",
    "canonicalize",
    "linked",
    "mirror",
    "parse_gauss_code",
    "serialize",
    "NotACutPoint",
    "concat",
    "cut_points",
    "split_at",
    "is_diagram_decomposable",
    "IllegalMove",
    "MoveEvent",
    "apply_move",
    "enumerate_moves",
    "inverse_event",
    "RibbonGraph",
    "InvalidTraversal",
    "NonIntegralGenus",
    "build_band_surface",
    "boundary_components",
    "euler_characteristic",
    "gauss_from_surface",
    "natural_traversal",
    "supporting_genus",
    "FiniteBiquandle",
    "check_axioms",
    "coloring_matrix",
    "commutator_witness",
    "default_catalog",
    "shipped_catalog",
    "dihedral_quandle",
    "trivial_quandle",
    "structure_from_file",
    "structure_from_spec",
    "enumerate_biquandles",
    "odd_writhe",
    "Budget",
    "Verdict",
    "default_budget",
    "equivalent_within",
    "min_genus_in_orbit",
    "commute_check",
    "prime_scan",
    "classical_corpus",
    "virtual_corpus",
    "full_corpus",
    "__version__",
]
