"""Exact combinatorics of square-tiled cyclic covers of the four-punctured sphere.

The package builds the square-tiled flat surface of a cyclic cover
M_N(a1, a2, a3, a4), derives its stratum, genus, cylinder decompositions,
Veech-group index and orbit, evaluates closed-form sums of Lyapunov
exponents in exact rational arithmetic, cross-validates them against the
general sum formula computed from first principles, and classifies
maximally degenerate spectra and spin parity.
"""

from .cover_params import (
    CoverParams,
    Symmetry,
    canonical_surface_form,
    covers_isomorphic,
    dual,
    surfaces_isomorphic,
    symmetry_group,
    validate,
)
from .errors import (
    ClassificationMismatch,
    CycloCoverError,
    DegreeMismatch,
    DegreeTooSmall,
    InvalidCoverError,
    NotConnected,
    SumNotDivisible,
    VerificationFailure,
)
from .lyapunov import (
    DegeneracyFlags,
    GeneralSumTerms,
    LyapunovReport,
    classify_degeneracy,
    general_sum_terms,
    sum_closed,
    sum_general,
)
from .origami import CylinderDecomposition, Origami, build, cylinder_decomposition, verify
from .report import CoverReport, build_report, from_jsonable, to_jsonable
from .search import SearchResult, run_search
from .spin import SpinParity, spin_parity
from .strata import (
    DifferentialKind,
    GenusData,
    Stratum,
    differential_kind,
    genus,
    render_stratum,
    singularity_pattern,
)
from .veech import VeechDescriptor, orbit, veech_index

__all__ = [
    "CoverParams",
    "Symmetry",
    "validate",
    "dual",
    "covers_isomorphic",
    "surfaces_isomorphic",
    "symmetry_group",
    "canonical_surface_form",
    "DifferentialKind",
    "Stratum",
    "GenusData",
    "differential_kind",
    "singularity_pattern",
    "genus",
    "render_stratum",
    "Origami",
    "CylinderDecomposition",
    "build",
    "verify",
    "cylinder_decomposition",
    "VeechDescriptor",
    "veech_index",
    "orbit",
    "LyapunovReport",
    "GeneralSumTerms",
    "DegeneracyFlags",
    "sum_closed",
    "sum_general",
    "general_sum_terms",
    "classify_degeneracy",
    "SpinParity",
    "spin_parity",
    "CoverReport",
    "build_report",
    "to_jsonable",
    "from_jsonable",
    "SearchResult",
    "run_search",
    "CycloCoverError",
    "InvalidCoverError",
    "DegreeTooSmall",
    "NotConnected",
    "SumNotDivisible",
    "DegreeMismatch",
    "VerificationFailure",
    "ClassificationMismatch",
]
