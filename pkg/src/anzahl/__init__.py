"""Exact subspace counts in finite hermitian and symplectic geometries.

The closed-form statistics (alpha, beta, gamma, rho) live in
``anzahl.hermitian`` and ``anzahl.symplectic``; ``anzahl.oracle`` recounts
them by brute force, ``anzahl.bounds`` checks the inequalities built on them
and ``anzahl.identity`` verifies their recursions with symbolic q.
"""

from .errors import (
    AnzahlError,
    InstanceTooLarge,
    NoSuchSubspace,
    NotAPrimePower,
    ParamOutOfRange,
    UndefinedParity,
)
from .field import FieldDescriptor, FieldElement, construct_field, is_prime_power
from .forms import HERMITIAN, SYMPLECTIC, Form, SubspaceClass, classify, perp, radical, standard_form
from .hermitian import alpha_h, beta_h, gamma_h, gamma_h_span, rho_h
from .qseries import Q, LaurentPolynomial, RationalFunction, gauss, gauss_minus, segre_count
from .subspaces import Subspace, echelonize, enumerate_subspaces
from .symplectic import (
    alpha_s,
    beta_s,
    gamma_s,
    gamma_s_raw,
    gamma_s_span,
    gamma_s_span_raw,
    rho_s,
    rho_s_raw,
)

__version__ = "0.1.0"

__all__ = [
    "AnzahlError", "InstanceTooLarge", "NoSuchSubspace", "NotAPrimePower", "ParamOutOfRange", "UndefinedParity",
    "FieldDescriptor", "FieldElement", "construct_field", "is_prime_power",
    "HERMITIAN", "SYMPLECTIC", "Form", "SubspaceClass", "classify", "perp", "radical", "standard_form",
    "alpha_h", "beta_h", "gamma_h", "gamma_h_span", "rho_h",
    "Q", "LaurentPolynomial", "RationalFunction", "gauss", "gauss_minus", "segre_count",
    "Subspace", "echelonize", "enumerate_subspaces",
    "alpha_s", "beta_s", "gamma_s", "gamma_s_raw", "gamma_s_span", "gamma_s_span_raw", "rho_s", "rho_s_raw",
]
