"""Module numerical radius toolkit.

Matrix-model Hilbert module operations (inner products, right actions,
rank-one operators), the linking-algebra radius engines with certified
circle maximization, and the JSON property-check suite, all backed by the
C++ core.
"""

from modrad._core import (
    __version__,
    hermitian_eigenvalues,
    inner_product,
    module_action,
    module_norm,
    numerical_radius,
    numerical_radius_bruteforce,
    omega,
    omega_profile,
    omega_via_w,
    operator_norm,
    random_ginibre,
    run_suite_json,
    spectral_radius,
    sym2x2_norm,
    theta,
)

__all__ = [
    "__version__",
    "hermitian_eigenvalues",
    "inner_product",
    "module_action",
    "module_norm",
    "numerical_radius",
    "numerical_radius_bruteforce",
    "omega",
    "omega_profile",
    "omega_via_w",
    "operator_norm",
    "random_ginibre",
    "run_suite_json",
    "spectral_radius",
    "sym2x2_norm",
    "theta",
]
