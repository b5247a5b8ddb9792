"""Exact and high-precision group characters."""

from .bessel import bessel_B_batch
from .characters import (Phi_m_eval, Phi_m_univariate, bessel_B, beta_shift_check,
                         box_partitions, line_one_law, normalized_schur,
                         normalized_symplectic, orthogonal_eval, phi_m_count,
                         phi_m_eval, schur_dim, schur_eval, skew_schur_dim,
                         symplectic_denominator, symplectic_eval)
from .jet import Jet
from .precision import PrecisionError
from .signature import Signature, as_signature

__all__ = [
    "Jet", "PrecisionError", "Phi_m_eval", "Phi_m_univariate", "Signature",
    "as_signature", "bessel_B", "bessel_B_batch", "beta_shift_check",
    "box_partitions", "line_one_law", "normalized_schur", "normalized_symplectic",
    "orthogonal_eval", "phi_m_count", "phi_m_eval", "schur_dim", "schur_eval",
    "skew_schur_dim", "symplectic_denominator", "symplectic_eval",
]
