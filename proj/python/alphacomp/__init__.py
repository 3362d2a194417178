"""Compound matrices of real order, matrix measures, and contraction analysis.

The heavy lifting lives in the compiled extension ``_core``; this package
re-exports it. When running from a build tree (extension on ``sys.path``
rather than installed into the package), the bare module is picked up as a
fallback.
"""

try:
    from alphacomp._core import *  # noqa: F401,F403
    from alphacomp._core import __doc__ as _core_doc
except ImportError:  # pragma: no cover - build-tree layout
    from _core import *  # noqa: F401,F403
    from _core import __doc__ as _core_doc

__all__ = [
    "lex_tuples",
    "minor",
    "mult_compound",
    "add_compound",
    "kron_product",
    "kron_sum",
    "wedge",
    "eig",
    "principal_power",
    "matrix_real_power",
    "matrix_real_power_ex",
    "matrix_exp",
    "alpha_mult_compound",
    "alpha_mult_compound_alt",
    "alpha_add_compound",
    "alpha_add_compound_oracle",
    "alpha_eigs",
    "alpha_spectral_abscissa",
    "transform_add_compound",
    "induced_norm",
    "matrix_measure",
    "compound_measure",
    "alpha_measure",
    "measure_chain",
    "weighted_measure",
    "omega_bound",
    "douady_oesterle_check",
    "certify_system",
    "minimal_alpha_system",
    "simulate_system",
]
