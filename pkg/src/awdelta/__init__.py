"""Exact computations in the universal Askey-Wilson algebra over Q(q)."""
from .qfield import LaurentQ, PoleError, Q, RatFuncQ, q_integer, q_power, specialize_q
from .delta import (
    A, B, C, alpha, beta, gamma, one,
    DeltaElement, OmegaElement, PBWMonomial, OmegaMonomial,
    casimir, commutator, filtration_degree, from_omega_basis, is_central,
    to_omega_basis,
)
from .expr import parse, parse_element

__version__ = "0.1.0"
