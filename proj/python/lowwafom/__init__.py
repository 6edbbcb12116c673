"""Extensible low-WAFOM digital nets: search, evaluation and Genz benchmarks."""

from ._core import (
    GeneratingMatrixSet,
    GenzInstance,
    NonFiniteIntegrand,
    ParseError,
    __version__,
    default_h,
    genz_instance,
    is_upper_square_regular,
    mc_integrate,
    qmc_integrate,
    random_genz_instance,
    read_matrices,
    run_cli,
    search,
    seqgen_search,
    wafom_naive,
    wafom_tabled,
    write_matrices,
)

__all__ = [
    "GeneratingMatrixSet",
    "GenzInstance",
    "NonFiniteIntegrand",
    "ParseError",
    "__version__",
    "default_h",
    "genz_instance",
    "is_upper_square_regular",
    "mc_integrate",
    "qmc_integrate",
    "random_genz_instance",
    "read_matrices",
    "run_cli",
    "search",
    "seqgen_search",
    "wafom_naive",
    "wafom_tabled",
    "write_matrices",
]
