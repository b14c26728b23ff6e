"""Quadrature approximation of the matrix logarithm and its error constants."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, EpsilonOutOfRange, NearSingularShift, NotInUnitBall, SingularMatrix, ZeroImage
from .matcore import as_matrix, as_vector, inverse, reference_log, spectral_norm
from .quadrature import QuadratureRule, pade_error_bound

ZERO_IMAGE_TOL = 1e-12
# float64 floor for checking a computed distance against a certified bound;
# the bounds can be far below machine epsilon (e.g. ~1e-26 for M=8, rho=0.1)
ROUNDOFF_ALLOWANCE = 1e-12


def distance_to_identity(A) -> float:
    A = as_matrix(A)
    return spectral_norm(A - np.eye(A.shape[0]))


def require_unit_ball(A) -> float:
    rho = distance_to_identity(A)
    if not rho < 1.0:
        raise NotInUnitBall(f"||A - I|| = {rho:.6g} must be < 1")
    return rho


@dataclass(frozen=True)
class LogApprox:
    """``f_M(A) = (A - I) h_M(A)`` together with its error constants.

    Attributes:
        rho: spectral norm ``||A - I||``.
        hM: ``sum_j w_j [tau_j (A - I) + I]^{-1}``.
        eps_MA: certified bound on ``||fM - log(A)||``.
        delta_M: ``rho * sqrt(sum_j w_j^2)``, the solver-error amplification.
    """

    A: np.ndarray
    rule: QuadratureRule
    rho: float
    fM: np.ndarray
    hM: np.ndarray
    eps_MA: float
    delta_M: float

    @property
    def M(self) -> int:
        return self.rule.M


def resolvent(A, t: float) -> np.ndarray:
    """``[t (A - I) + I]^{-1}`` for ``t`` in [0, 1]."""
    A = as_matrix(A)
    if not 0.0 <= t <= 1.0:
        raise DomainError(f"t must lie in [0, 1], got {t}")
    require_unit_ball(A)
    eye = np.eye(A.shape[0])
    try:
        return inverse(t * (A - eye) + eye)
    except SingularMatrix as exc:
        raise NearSingularShift(str(exc)) from exc


def build_log_approx(A, rule: QuadratureRule) -> LogApprox:
    A = as_matrix(A)
    rho = require_unit_ball(A)
    X = A - np.eye(A.shape[0])
    hM = np.zeros_like(A)
    for tau, w in zip(rule.nodes, rule.weights):
        hM += w * resolvent(A, float(tau))
    return LogApprox(
        A=A,
        rule=rule,
        rho=rho,
        fM=X @ hM,
        hM=hM,
        eps_MA=pade_error_bound(rule, rho),
        delta_M=rho * rule.weight_l2,
    )


def error_constant_K(A, b_state) -> float:
    """``||log(A)|b>|| * (1 - ||A - I||)`` for a unit vector ``b_state``."""
    A = as_matrix(A)
    b = as_vector(b_state)
    if abs(np.linalg.norm(b) - 1.0) > 1e-10:
        raise DomainError("b_state must have unit norm")
    rho = require_unit_ball(A)
    image = np.linalg.norm(reference_log(A) @ b)
    if image <= ZERO_IMAGE_TOL:
        raise ZeroImage(f"||log(A)|b>|| = {image:.3e}; the target state is undefined")
    return float(image * (1.0 - rho))


def final_error_bound(approx: LogApprox, K: float, eps_prime: float) -> float:
    """End-to-end bound ``(2/K)(eps_MA + sqrt(M) delta_M eps')`` on the output state."""
    if not 0.0 <= eps_prime < 0.5:
        raise EpsilonOutOfRange(f"eps_prime must lie in [0, 1/2), got {eps_prime}")
    if not K > 0.0:
        raise DomainError(f"K must be positive, got {K}")
    return (2.0 / K) * (approx.eps_MA + math.sqrt(approx.M) * approx.delta_M * eps_prime)


def normalized_distance(v, w) -> float:
    """``|| v/||v|| - w/||w|| ||``."""
    v = as_vector(v)
    w = as_vector(w)
    return float(np.linalg.norm(v / np.linalg.norm(v) - w / np.linalg.norm(w)))


def normalized_distance_bound(v, w) -> float:
    """``2 ||v - w|| / ||v||``, which dominates :func:`normalized_distance`."""
    v = as_vector(v)
    w = as_vector(w)
    return float(2.0 * np.linalg.norm(v - w) / np.linalg.norm(v))
