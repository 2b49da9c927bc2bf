"""Exact verification toolkit for nodal quartic surfaces in P^3."""

__version__ = "0.1.0"

from .errors import (  # noqa: F401
    CertificationFailureError,
    DegeneratePairingError,
    DimensionMismatchError,
    DuplicateNodeError,
    NodalQuarticError,
    NotAComplexError,
    NotANodeError,
    NotSplitError,
    OutOfRangeError,
    RepeatedRootError,
    ZeroPolynomialError,
)
from .icstalk import (  # noqa: F401
    BComplex,
    OperatorFamily,
    StalkCohomology,
    betti_nodal_quartic,
    build_bcomplex,
    cohomology,
    nodal_stalk,
    stalk,
)
from .kummer import KummerOutput, SexticCurve, kummer_from_sextic, one_node_example  # noqa: F401
from .lattice import (  # noqa: F401
    CycleConfiguration,
    QuadraticSpace,
    Subspace,
    nodal_model,
    pl_operator,
    sigma_splitting,
)
from .nodal import (  # noqa: F401
    Classification,
    Mode,
    ProjPointQ,
    SearchConfig,
    SingularPointReport,
    certify_point,
    find_singular_numeric,
)
from .qpoly import HomogPoly, evaluate, gradient, hessian, monomial_basis, variables  # noqa: F401
from .severi import NodeSet, SeveriReport, evaluation_matrix, independence_test, severi_report  # noqa: F401
