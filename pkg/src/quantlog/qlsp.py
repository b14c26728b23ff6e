"""The block-diagonal linear system whose solution feeds the pipeline.

Block ``j`` (1-based, ``j = 1..M``) of the big matrix is ``tau_j (A - I) + I``
and the right-hand side stacks ``M`` copies of the normalized ``b``. The
solve is a dense direct solve standing in for an ideal quantum linear solver;
solver error is modelled separately by :func:`perturb_state`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.linalg import block_diag

from .errors import DomainError, EpsilonOutOfRange
from .logquad import require_unit_ball
from .matcore import as_matrix, as_vector, inverse, spectral_norm
from .quadrature import QuadratureRule


@dataclass(frozen=True)
class QlspInstance:
    A: np.ndarray
    rule: QuadratureRule
    b: np.ndarray
    bigA: np.ndarray
    bigB: np.ndarray
    blocks_x: tuple[np.ndarray, ...]
    p: np.ndarray
    c: float = 2.0

    @property
    def N(self) -> int:
        return self.A.shape[0]

    @property
    def M(self) -> int:
        return self.rule.M

    @property
    def x(self) -> np.ndarray:
        return np.concatenate(self.blocks_x)

    @property
    def x_norm(self) -> float:
        return float(np.linalg.norm(self.x))

    def block(self, j: int) -> np.ndarray:
        """Diagonal block ``j`` (1-based) of the big matrix."""
        N = self.N
        return self.bigA[(j - 1) * N : j * N, (j - 1) * N : j * N]

    def rescaled(self) -> tuple[np.ndarray, np.ndarray]:
        """``(bigA / c, c x)``; the normalized solution state is unchanged."""
        return self.bigA / self.c, self.c * self.x


class ConditionBounds(NamedTuple):
    normA: float
    normAinv: float
    kappa: float
    kappa_bound: float
    rho: float

    @property
    def norm_bound(self) -> float:
        return 2.0

    @property
    def inv_bound(self) -> float:
        return 1.0 / (1.0 - self.rho)

    def holds(self) -> bool:
        return self.normA < 2.0 and self.normAinv < self.inv_bound and self.kappa < self.kappa_bound


def build_instance(A, rule: QuadratureRule, b, c: float = 2.0) -> QlspInstance:
    A = as_matrix(A)
    b = as_vector(b)
    if b.shape[0] != A.shape[0]:
        raise DomainError(f"b has length {b.shape[0]}, A is {A.shape[0]}x{A.shape[0]}")
    bn = np.linalg.norm(b)
    if bn == 0.0:
        raise DomainError("b must be nonzero")
    if c < 2.0:
        raise DomainError(f"rescale constant c must be >= 2, got {c}")
    require_unit_ball(A)
    b = b / bn

    N = A.shape[0]
    eye = np.eye(N)
    blocks = [tau * (A - eye) + eye for tau in rule.nodes]
    xs = tuple(np.linalg.solve(blk, b) for blk in blocks)
    x_norm = math.sqrt(sum(float(np.vdot(x, x).real) for x in xs))
    p = np.array([np.linalg.norm(x) / x_norm for x in xs])
    return QlspInstance(
        A=A,
        rule=rule,
        b=b,
        bigA=block_diag(*blocks).astype(np.complex128),
        bigB=np.tile(b, rule.M),
        blocks_x=xs,
        p=p,
        c=float(c),
    )


def ideal_solution_state(inst: QlspInstance) -> np.ndarray:
    """|x> with the ``(j, i)`` amplitude at flat index ``(j-1) N + i``."""
    x = inst.x
    return x / np.linalg.norm(x)


def perturb_state(x_state, eps_prime: float, seed) -> np.ndarray:
    """Rotate a unit vector by a chord of length exactly ``eps_prime``.

    The rotation is toward a seeded random direction orthogonal to
    ``x_state``, so the result stays unit-norm.
    """
    x = as_vector(x_state)
    if not 0.0 <= eps_prime < 0.5:
        raise EpsilonOutOfRange(f"eps_prime must lie in [0, 1/2), got {eps_prime}")
    if abs(np.linalg.norm(x) - 1.0) > 1e-10:
        raise DomainError("x_state must have unit norm")
    if eps_prime == 0.0:
        return x.copy()
    if x.shape[0] < 2:
        raise DomainError("cannot perturb a 1-dimensional state")

    rng = np.random.default_rng(seed)
    u = rng.standard_normal(x.shape[0]) + 1j * rng.standard_normal(x.shape[0])
    # two Gram-Schmidt passes keep the orthogonality at rounding level
    for _ in range(2):
        u = u - np.vdot(x, u) * x
    u /= np.linalg.norm(u)

    theta = 2.0 * math.asin(eps_prime / 2.0)
    return math.cos(theta) * x + math.sin(theta) * u


def condition_bounds(inst: QlspInstance) -> ConditionBounds:
    rho = spectral_norm(inst.A - np.eye(inst.N))
    normA = spectral_norm(inst.bigA)
    normAinv = spectral_norm(inverse(inst.bigA))
    return ConditionBounds(
        normA=normA,
        normAinv=normAinv,
        kappa=normA * normAinv,
        kappa_bound=2.0 / (1.0 - rho),
        rho=rho,
    )


def hermitian_dilation(A, b) -> tuple[np.ndarray, np.ndarray]:
    """``[[0, A], [A^H, 0]]`` and right side ``(b, 0)``.

    The solution of the dilated system is ``(0, x)`` where ``A x = b``.
    """
    A = as_matrix(A)
    b = as_vector(b)
    Z = np.zeros_like(A)
    H = np.block([[Z, A], [A.conj().T, Z]])
    return H, np.concatenate([b, np.zeros_like(b)])
