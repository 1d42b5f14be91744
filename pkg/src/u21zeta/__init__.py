"""Exact and numerical cross-checks for doubling zeta integrals on U(2,1)."""

from .dscoef import psi_full, psi_radial, schmid_residual
from .exactmath import HalfInt
from .fockweil import bargmann_oracle, build_harmonic, phi_norm_sq, weil_coeff
from .hypergeo import gauss_2f1
from .repparams import (BoundaryParameter, DualPairCase, HCParam, KPoint,
                        blattner, case_from_hc_param, classify_chamber,
                        dual_param, formal_degree)
from .zetaeval import (QuadratureConfig, ZetaValue, c_squared_projection,
                       consistency_check, radial_moment, zeta_closed_form,
                       zeta_numeric)

__version__ = "0.1.0"

__all__ = [
    "BoundaryParameter", "DualPairCase", "HCParam", "HalfInt", "KPoint",
    "QuadratureConfig", "ZetaValue", "bargmann_oracle", "blattner",
    "build_harmonic", "c_squared_projection", "case_from_hc_param",
    "classify_chamber", "consistency_check", "dual_param", "formal_degree",
    "gauss_2f1", "phi_norm_sq", "psi_full", "psi_radial", "radial_moment",
    "schmid_residual", "weil_coeff", "zeta_closed_form", "zeta_numeric",
]
