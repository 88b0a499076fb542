"""Euler characteristics of Hilbert schemes of points on Kleinian singularities.

Exact computation of the generating series of Euler characteristics of
Hilbert schemes of points on ADE quotient singularities and on surfaces
containing them, together with the affine Lie algebra character they
specialize from.
"""

__version__ = "0.1.0"

from .lie_data import DynkinType, cartan_matrix, root_datum, zeta_order
from .cyclotomic import CyclotomicInteger, cyclotomic_polynomial, zeta_power
from .qseries import QSeries, euler_factor_inverse_power, smooth_surface_series, smooth_curve_series
from .lattice_theta import enumerate_vectors, twisted_theta, theta_untwisted
from .zeta_series import SurfaceSpec, local_series, surface_series, stratification_check
from .character import extended_character, specialize_at_zeta, specialize_at_one, weight_multiplicity

__all__ = [
    "DynkinType", "cartan_matrix", "root_datum", "zeta_order",
    "CyclotomicInteger", "cyclotomic_polynomial", "zeta_power",
    "QSeries", "euler_factor_inverse_power", "smooth_surface_series", "smooth_curve_series",
    "enumerate_vectors", "twisted_theta", "theta_untwisted",
    "SurfaceSpec", "local_series", "surface_series", "stratification_check",
    "extended_character", "specialize_at_zeta", "specialize_at_one", "weight_multiplicity",
]
