"""Real schemes of combinatorially patchworked plane curves.

A regular unimodular triangulation of the dilated standard triangle plus a
sign per lattice point determines a curve in the real projective plane up
to ambient isotopy.  This package classifies such patchworks in
near-linear time per pair, enumerates sign distributions exhaustively or
by seeded sampling, runs the small-degree triangulation census, verifies
itself against an independent naive classifier, and renders pictures.
"""

from .builtins import builtin
from .classify import Classifier, classify
from .diamond import DiamondComplex, diamond_points, extend_signs, reflect
from .errors import (
    BudgetExceeded,
    IndexOutOfRange,
    InvalidDegree,
    InvariantViolation,
    MergeMismatch,
    NotATriangulation,
    NotUnimodular,
    ParseError,
    PointOutOfRange,
    TcurvesError,
    UnknownBuiltin,
)
from .flips import CensusResult, enumerate_unimodular, flip_neighbors
from .lattice import (
    SYMMETRY_GROUP,
    SymmetryElement,
    Triangulation,
    harnack_bound,
    lattice_points,
    num_points,
    point_index,
    validate_triangulation,
)
from .lifting import delaunay_lifting, from_lifting
from .oracle import oracle_classify
from .pipeline import (
    ClassificationResult,
    PatchworkAnalysis,
    analyze,
    classify_reference,
    component_partition,
    detect_root,
    region_partition,
    region_tree,
)
from .polynomial import emit_polynomial, format_polynomial
from .regularity import is_regular
from .render import RenderOptions, render_svg
from .scheme import SchemeNode, SchemeTree, canonical_scheme, parse_scheme
from .signs import (
    SignDistribution,
    apply_symmetry,
    eps_action,
    normalize_sign,
    num_representatives,
    representative,
)
from .sweep import SweepRange, SweepReport, empty_report, merge, sample, sweep

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CensusResult",
    "ClassificationResult",
    "Classifier",
    "DiamondComplex",
    "IndexOutOfRange",
    "InvalidDegree",
    "InvariantViolation",
    "MergeMismatch",
    "NotATriangulation",
    "NotUnimodular",
    "ParseError",
    "PatchworkAnalysis",
    "PointOutOfRange",
    "RenderOptions",
    "SYMMETRY_GROUP",
    "SchemeNode",
    "SchemeTree",
    "SignDistribution",
    "SweepRange",
    "SweepReport",
    "SymmetryElement",
    "TcurvesError",
    "Triangulation",
    "UnknownBuiltin",
    "analyze",
    "apply_symmetry",
    "builtin",
    "canonical_scheme",
    "classify",
    "classify_reference",
    "component_partition",
    "delaunay_lifting",
    "detect_root",
    "diamond_points",
    "emit_polynomial",
    "empty_report",
    "enumerate_unimodular",
    "eps_action",
    "extend_signs",
    "flip_neighbors",
    "format_polynomial",
    "from_lifting",
    "harnack_bound",
    "is_regular",
    "lattice_points",
    "merge",
    "normalize_sign",
    "num_points",
    "num_representatives",
    "oracle_classify",
    "parse_scheme",
    "point_index",
    "reflect",
    "region_partition",
    "region_tree",
    "render_svg",
    "representative",
    "sample",
    "sweep",
    "validate_triangulation",
]
