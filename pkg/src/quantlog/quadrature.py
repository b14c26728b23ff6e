"""Gauss-Legendre rules mapped to [0, 1] and the scalar log(1+x) quadrature.

The M-point rule applied to ``log(1+x) = x * int_0^1 dt / (1 + t x)`` gives
the diagonal (M, M) Pade approximant of ``log(1+x)``; this module exposes
that scalar function and the norm-based error bound derived from it.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath
import numpy as np

from .errors import DomainError, UnsupportedOrder

MAX_ORDER = 64
_NEWTON_TOL = 1e-15
_NEWTON_MAXITER = 100
_BOUND_DPS = 60


@dataclass(frozen=True)
class QuadratureRule:
    """An M-point Gauss-Legendre rule on [-1, 1] and its image on [0, 1].

    ``nodes``/``weights`` live on [0, 1]; ``raw_nodes``/``raw_weights`` are
    the underlying rule on [-1, 1]. All arrays are in increasing node order.
    """

    M: int
    nodes: np.ndarray
    weights: np.ndarray
    raw_nodes: np.ndarray
    raw_weights: np.ndarray

    @property
    def C_M(self) -> float:
        """Rotation normalization ``1 / max_j w_j``."""
        return 1.0 / float(np.max(self.weights))

    @property
    def weight_l2(self) -> float:
        return float(np.sqrt(np.sum(self.weights**2)))


def _legendre_and_derivative(M: int, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """P_M(x) and P_M'(x) by the three-term recurrence."""
    p_prev = np.ones_like(x)
    p = x.copy()
    for k in range(1, M):
        p_prev, p = p, ((2 * k + 1) * x * p - k * p_prev) / (k + 1)
    dp = M * (x * p - p_prev) / (x**2 - 1.0)
    return p, dp


def gauss_legendre(M: int) -> QuadratureRule:
    """Build the M-point rule, 1 <= M <= 64.

    Roots of P_M are found by Newton iteration from the asymptotic guess
    ``cos(pi (j - 1/4) / (M + 1/2))``. Only the nonnegative half is solved;
    the other half is mirrored so the rule is exactly symmetric.
    """
    if isinstance(M, bool) or not isinstance(M, (int, np.integer)) or not 1 <= M <= MAX_ORDER:
        raise UnsupportedOrder(f"order M must be an integer in [1, {MAX_ORDER}], got {M!r}")
    M = int(M)
    half = (M + 1) // 2
    j = np.arange(1, half + 1, dtype=float)
    x = np.cos(np.pi * (j - 0.25) / (M + 0.5))
    for _ in range(_NEWTON_MAXITER):
        p, dp = _legendre_and_derivative(M, x)
        step = p / dp
        x = x - step
        if np.max(np.abs(step)) <= _NEWTON_TOL:
            break
    p, dp = _legendre_and_derivative(M, x)
    w = 2.0 / ((1.0 - x**2) * dp**2)

    if M % 2 == 1:
        # middle root of an odd-degree Legendre polynomial is exactly 0
        x[-1] = 0.0
    # x is descending and nonnegative; mirror to obtain the full ascending rule
    pos_x, pos_w = x[::-1], w[::-1]
    if M % 2 == 1:
        t = np.concatenate([-pos_x[:0:-1], pos_x])
        s = np.concatenate([pos_w[:0:-1], pos_w])
    else:
        t = np.concatenate([-pos_x[::-1], pos_x])
        s = np.concatenate([pos_w[::-1], pos_w])

    return QuadratureRule(
        M=M,
        nodes=0.5 * t + 0.5,
        weights=0.5 * s,
        raw_nodes=t,
        raw_weights=s,
    )


def scalar_quadrature_log(rule: QuadratureRule, x: float) -> float:
    """``x * sum_j w_j / (tau_j x + 1)``, the (M, M) Pade approximant of log(1+x)."""
    if not abs(x) < 1.0:
        raise DomainError(f"|x| must be < 1, got {x}")
    return float(x * np.sum(rule.weights / (rule.nodes * x + 1.0)))


def pade_log1p(M: int, x) -> mpmath.mpf:
    """(M, M) Pade approximant of log(1+x) in extended precision.

    Evaluated as the 2M-th convergent of the continued fraction
    ``x / (1 + x / (2 + x / (3 + 4x / (4 + 4x / (5 + 9x / ...)))))``.
    Must be called inside an ``mpmath.workdps`` block for full accuracy.
    """
    x = mpmath.mpf(x)
    t = mpmath.mpf(2 * M)
    for k in range(2 * M, 1, -1):
        t = (k - 1) + (k // 2) ** 2 * x / t
    return x / t


def pade_error_bound(rule: QuadratureRule, rho: float) -> float:
    """Upper bound on ||f_M(A) - log(A)|| given ``rho = ||A - I|| < 1``.

    The difference ``r_M(-rho) - log(1 - rho)`` cancels catastrophically in
    double precision once it drops below ~1e-16, so it is formed at 60
    significant digits and rounded once.
    """
    if not 0.0 <= rho < 1.0:
        raise DomainError(f"rho must lie in [0, 1), got {rho}")
    with mpmath.workdps(_BOUND_DPS):
        x = -mpmath.mpf(rho)
        return float(abs(pade_log1p(rule.M, x) - mpmath.log1p(x)))
