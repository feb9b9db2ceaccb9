"""Spectral determinants of metric graphs with standard vertex conditions,
and spanning-tree recovery from them."""

from ._kernels import BACKEND
from .bounds import (
    BoundReport,
    anderson_morley_improves,
    det_drift,
    eigenvalue_drift,
    mckay_lower,
    norm_bound,
    product_difference_bound,
    relaxed_threshold,
    upper_bounds,
)
from .graphs import (
    DiscreteGraph,
    GraphShape,
    MetricGraph,
    attach_lengths,
    build_graph,
    equilateral,
    load_graph_file,
    parse_graph_text,
    shape,
)
from .matrices import (
    LaplacianMatrix,
    MatrixKind,
    SpectrumReal,
    combinatorial_laplacian,
    det_prime,
    det_prime_matrix,
    equilateral_r,
    harmonic_laplacian,
    principal_minor,
    spectrum,
    weighted_r,
)
from .oracle import QuantumSpectrum, SpectrumSource, enumerate_equilateral, secular_solve
from .quantum import (
    DeterminantReport,
    DetRoute,
    TreeEstimate,
    det_prime_equilateral,
    det_prime_friedlander,
    threshold_delta,
    tree_estimator,
)
from .trees import (
    TreeCount,
    TreeMethod,
    all_methods,
    count_brute_force,
    count_det_prime_over_v,
    count_harmonic,
    count_matrix_tree,
    count_regular,
)
from .zeta import (
    PhaseSet,
    ZetaEvaluation,
    ZetaRoute,
    det_prime_from_zeta,
    hurwitz_zeta,
    hurwitz_zeta_dz,
    phase_set,
    riemann_zeta,
    zeta_direct_sum,
    zeta_hurwitz,
)

__version__ = "0.1.0"
