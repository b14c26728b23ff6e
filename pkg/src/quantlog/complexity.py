"""Query and gate cost formulas with every big-O constant set to 1.

Logs are base 2. The numbers are for comparing trends across parameters,
not absolute resource counts.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .errors import DomainError


def _log2(x: float) -> float:
    return math.log2(x)


def _check_common(d: int, kappa: float, eps: float) -> None:
    if d < 1:
        raise DomainError(f"sparsity d must be >= 1, got {d}")
    if not kappa >= 1.0:
        raise DomainError(f"condition number must be >= 1, got {kappa}")
    if not 0.0 < eps <= 0.5:
        raise DomainError(f"precision must lie in (0, 1/2], got {eps}")


def qlsp_cost(d: int, kappa: float, eps: float, N: int = 2) -> tuple[float, float, float]:
    """Cost of the LCU linear solver for a d-sparse system of dimension N.

    Returns ``(queries to P_A, uses of P_b, gates)``.
    """
    _check_common(d, kappa, eps)
    if N < 1:
        raise DomainError(f"dimension must be >= 1, got {N}")
    ell = _log2(d * kappa / eps)
    queries = d * kappa**2 * ell**2
    uses_b = kappa * ell
    gates = queries * (_log2(N) + ell**2.5)
    return queries, uses_b, gates


def amplification_repetitions(p: float) -> int:
    """Smallest integer ``r`` with ``r * sqrt(p) >= 1``."""
    if not 0.0 < p <= 1.0:
        raise DomainError(f"success probability must lie in (0, 1], got {p}")
    root = math.sqrt(p)
    reps = math.ceil(1.0 / root)
    while reps * root < 1.0:
        reps += 1
    return reps


@dataclass(frozen=True)
class CostReport:
    rho: float
    kappa_prime: float
    kappa_A_bound: float
    d: int
    eps_prime: float
    M: int
    N: int
    s: int
    L: float
    pa_queries: float
    pb_uses: float
    gates: float
    oracle_gates_per_query: float
    aa_repetitions: int | None

    def as_dict(self) -> dict:
        return asdict(self)


def total_cost(
    rho: float,
    d: int,
    eps_prime: float,
    M: int,
    N: int,
    s: int = 32,
    L: float = 0.0,
    p_lower_bound: float | None = None,
) -> CostReport:
    """Whole-algorithm cost for ``rho = ||A - I||``.

    The gate count adds the linear-solver term (dimension ``MN``), one gate
    for the controlled rotation, ``log M`` Hadamards and the ``L`` gates of
    the shifted block-encoding. ``aa_repetitions`` is filled only when a
    success-probability lower bound is supplied.
    """
    if not 0.0 <= rho < 1.0:
        raise DomainError(f"rho must lie in [0, 1), got {rho}")
    if M < 1 or N < 1 or s < 1:
        raise DomainError("M, N and s must be positive")
    if L < 0:
        raise DomainError(f"L must be nonnegative, got {L}")
    kappa_prime = 1.0 / (1.0 - rho)
    queries, uses_b, solver_gates = qlsp_cost(d, kappa_prime, eps_prime, M * N)
    gates = solver_gates + 1.0 + _log2(M) + L
    reps = amplification_repetitions(p_lower_bound) if p_lower_bound is not None else None
    return CostReport(
        rho=rho,
        kappa_prime=kappa_prime,
        kappa_A_bound=2.0 * kappa_prime,
        d=d,
        eps_prime=eps_prime,
        M=M,
        N=N,
        s=s,
        L=L,
        pa_queries=queries,
        pb_uses=uses_b,
        gates=gates,
        oracle_gates_per_query=_log2(M * N) + s**2,
        aa_repetitions=reps,
    )
