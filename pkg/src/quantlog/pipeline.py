"""Exact statevector simulation of the log(A)|b> preparation circuit.

Qubit registers, most significant first::

    j-register (m qubits) | block-encoding ancillas (a + 1) | i-register (n) | rotation ancilla (1)

The amplitude array is stored flat; internally it is viewed with shape
``(M, 2**(a+1), N, 2)``. Step 1 (the linear solve) is supplied as a
prepared solution state, Steps 2 to 4 are applied as exact unitaries and
Step 5 is an exact projection onto the all-zeros sector.
"""

from __future__ import annotations

import enum
import math
from dataclasses import asdict, dataclass, field

import numpy as np
from scipy.linalg import hadamard

from .complexity import amplification_repetitions, total_cost
from .errors import AlphaTooSmall, DimensionMismatch, DomainError, NotHermitian, NotUnitary, WrongStage, ZeroProbability
from .logquad import ROUNDOFF_ALLOWANCE, LogApprox, build_log_approx, error_constant_K, final_error_bound
from .matcore import as_matrix, as_vector, eigendecompose_hermitian, is_hermitian, reference_log, spectral_norm
from .qlsp import QlspInstance, build_instance, ideal_solution_state, perturb_state
from .quadrature import QuadratureRule

UNITARY_TOL = 1e-11
ZERO_PROB_TOL = 1e-14


class Stage(enum.Enum):
    AFTER_STEP1 = 1
    AFTER_STEP2 = 2
    AFTER_STEP3 = 3
    AFTER_STEP4 = 4
    MEASURED = 5


def _qubits(dim: int, what: str) -> int:
    q = dim.bit_length() - 1
    if dim < 1 or (1 << q) != dim:
        raise DimensionMismatch(f"{what} = {dim} is not a power of two")
    return q


@dataclass(frozen=True)
class RegisterLayout:
    m: int
    n: int
    a: int = 1

    @classmethod
    def for_sizes(cls, M: int, N: int, a: int = 1) -> "RegisterLayout":
        return cls(m=_qubits(M, "M"), n=_qubits(N, "N"), a=a)

    @property
    def M(self) -> int:
        return 1 << self.m

    @property
    def N(self) -> int:
        return 1 << self.n

    @property
    def ancilla_dim(self) -> int:
        return 1 << (self.a + 1)

    @property
    def total_qubits(self) -> int:
        return self.m + self.n + self.a + 2

    @property
    def shape(self) -> tuple[int, int, int, int]:
        return (self.M, self.ancilla_dim, self.N, 2)


@dataclass(frozen=True)
class PipelineState:
    layout: RegisterLayout
    amplitudes: np.ndarray
    stage: Stage

    def tensor(self) -> np.ndarray:
        return self.amplitudes.reshape(self.layout.shape)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


@dataclass(frozen=True)
class BlockEncoding:
    """Unitary ``U`` whose all-zero-ancilla corner is ``(A - I) / (1 + alpha)``."""

    U: np.ndarray
    alpha: float
    a: int
    N: int

    @property
    def subnormalization(self) -> float:
        return 1.0 + self.alpha

    def corner(self) -> np.ndarray:
        return self.U[: self.N, : self.N]


@dataclass
class RunReport:
    M: int
    N: int
    rho: float
    alpha: float
    eps_prime: float
    seed: int
    success_probability: float
    predicted_ideal_p: float
    lower_bound_p: float
    output_fidelity: float
    state_error: float
    bound_state_error: float
    eps_MA: float
    delta_M: float
    C_M: float
    K: float
    aa_repetitions: int
    query_counts: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return asdict(self)

    @property
    def thm5_ok(self) -> bool:
        """Output-state error within the end-to-end bound (up to float64 round-off)."""
        return self.state_error <= self.bound_state_error + ROUNDOFF_ALLOWANCE

    @property
    def thm6_ok(self) -> bool:
        return self.success_probability >= self.lower_bound_p


def is_unitary(U, tol: float = UNITARY_TOL) -> bool:
    U = np.asarray(U)
    return bool(np.max(np.abs(U.conj().T @ U - np.eye(U.shape[0]))) <= tol)


def default_alpha(A) -> float:
    """``1 + ||A - I||`` rounded up to two decimals; always >= ||A||."""
    A = as_matrix(A)
    rho = spectral_norm(A - np.eye(A.shape[0]))
    return math.ceil((1.0 + rho) * 100.0) / 100.0


def build_block_encoding_of_A(A, alpha: float) -> np.ndarray:
    """One-ancilla unitary dilation ``[[B, S], [S, -B]]`` of ``B = A / alpha``.

    ``S = sqrt(I - B^2)`` shares B's eigenvectors, so the dilation is both
    Hermitian and unitary.
    """
    A = as_matrix(A)
    if not is_hermitian(A):
        raise NotHermitian("block-encoding construction needs a Hermitian A")
    w, V = eigendecompose_hermitian(A)
    if alpha <= 0.0 or np.max(np.abs(w)) > alpha * (1.0 + 1e-14):
        raise AlphaTooSmall(f"alpha = {alpha} is below ||A|| = {np.max(np.abs(w)):.6g}")
    bw = np.clip(w / alpha, -1.0, 1.0)
    B = (V * bw) @ V.conj().T
    S = (V * np.sqrt(1.0 - bw**2)) @ V.conj().T
    return np.block([[B, S], [S, -B]])


def shift_encoding(U_A, alpha: float, a: int = 1) -> BlockEncoding:
    """Block-encoding of ``A - I`` with subnormalization ``1 + alpha``.

    Conjugates ``V = |0><0| (x) U_A - |1><1| (x) I`` by the one-qubit
    rotation ``G`` that prepares ``(sqrt(alpha)|0> + |1>) / sqrt(1 + alpha)``.
    """
    U_A = as_matrix(U_A)
    if not is_unitary(U_A):
        raise NotUnitary("U_A is not unitary within 1e-11")
    dim = U_A.shape[0]
    if dim % (1 << a):
        raise DimensionMismatch(f"U_A dimension {dim} not divisible by 2^{a}")
    # block (a, b) of G^H V G is (g0a g0b U_A - g1a g1b I) / (1 + alpha) with
    # g = sqrt(1 + alpha) G = [[sqrt(alpha), -1], [1, sqrt(alpha)]]; the
    # products are formed exactly so A = I yields an exactly zero corner
    r = math.sqrt(alpha)
    eye = np.eye(dim)
    U = np.block([[alpha * U_A - eye, -r * U_A - r * eye], [-r * U_A - r * eye, U_A - alpha * eye]]) / (1.0 + alpha)
    return BlockEncoding(U=U, alpha=float(alpha), a=a, N=dim >> a)


def initial_state(x_state, layout: RegisterLayout) -> PipelineState:
    """Embed the Step-1 solution state with every ancilla in |0>."""
    x = as_vector(x_state)
    if x.shape[0] != layout.M * layout.N:
        raise DimensionMismatch(f"state has length {x.shape[0]}, expected {layout.M * layout.N}")
    psi = np.zeros(layout.shape, dtype=np.complex128)
    psi[:, 0, :, 0] = x.reshape(layout.M, layout.N)
    return PipelineState(layout, psi.reshape(-1), Stage.AFTER_STEP1)


def _require(state: PipelineState, stage: Stage) -> None:
    if state.stage is not stage:
        raise WrongStage(f"expected stage {stage.name}, got {state.stage.name}")


def step2_controlled_rotation(state: PipelineState, rule: QuadratureRule) -> PipelineState:
    """Rotate the last qubit by ``C_M w_j`` conditioned on the j-register."""
    _require(state, Stage.AFTER_STEP1)
    if rule.M != state.layout.M:
        raise DimensionMismatch(f"rule has M = {rule.M}, layout has M = {state.layout.M}")
    c = np.clip(rule.C_M * rule.weights, 0.0, 1.0)
    s = np.sqrt(1.0 - c**2)
    psi = state.tensor()
    out = np.empty_like(psi)
    cj = c[:, None, None]
    sj = s[:, None, None]
    out[..., 0] = cj * psi[..., 0] - sj * psi[..., 1]
    out[..., 1] = sj * psi[..., 0] + cj * psi[..., 1]
    return PipelineState(state.layout, out.reshape(-1), Stage.AFTER_STEP2)


def step3_hadamard(state: PipelineState) -> PipelineState:
    _require(state, Stage.AFTER_STEP2)
    M = state.layout.M
    H = hadamard(M) / math.sqrt(M)
    out = np.tensordot(H, state.tensor(), axes=(1, 0))
    return PipelineState(state.layout, out.reshape(-1), Stage.AFTER_STEP3)


def step4_apply_encoding(state: PipelineState, enc: BlockEncoding) -> PipelineState:
    """Apply ``I_M (x) U (x) I_2``."""
    _require(state, Stage.AFTER_STEP3)
    lay = state.layout
    if enc.a != lay.a or enc.N != lay.N:
        raise DimensionMismatch(f"encoding (a={enc.a}, N={enc.N}) does not fit layout (a={lay.a}, N={lay.N})")
    psi = state.amplitudes.reshape(lay.M, lay.ancilla_dim * lay.N, 2)
    out = np.einsum("kl,jlr->jkr", enc.U, psi)
    return PipelineState(lay, out.reshape(-1), Stage.AFTER_STEP4)


def success_sector(state: PipelineState) -> np.ndarray:
    """Unnormalized amplitudes of the sector a correct run keeps at this stage.

    After Step 2 that is rotation ancilla 0 (shape ``(M, N)``); after Step 3
    additionally ``j = 0`` and after Step 4 also all block ancillas 0
    (shape ``(N,)`` for both).
    """
    psi = state.tensor()
    if state.stage is Stage.AFTER_STEP2:
        return psi[:, 0, :, 0].copy()
    if state.stage is Stage.AFTER_STEP3:
        return psi[0, 0, :, 0].copy()
    if state.stage is Stage.AFTER_STEP4:
        return psi[0, 0, :, 0].copy()
    raise WrongStage(f"no success sector defined at stage {state.stage.name}")


def step5_postselect(state: PipelineState) -> tuple[float, np.ndarray]:
    """Probability of reading all zeros and the renormalized data register."""
    _require(state, Stage.AFTER_STEP4)
    sector = success_sector(state)
    prob = float(np.vdot(sector, sector).real)
    if prob < ZERO_PROB_TOL:
        raise ZeroProbability(f"success probability {prob:.3e} is numerically zero")
    return prob, sector / math.sqrt(prob)


def sample_postselection(state: PipelineState, shots: int, seed) -> float:
    """Estimate the post-selection probability from ``shots`` simulated measurements."""
    _require(state, Stage.AFTER_STEP4)
    sector = success_sector(state)
    prob = min(1.0, float(np.vdot(sector, sector).real))
    rng = np.random.default_rng(seed)
    return rng.binomial(shots, prob) / shots


def ideal_success_probability(approx: LogApprox, inst: QlspInstance, alpha: float) -> float:
    rule = approx.rule
    fMb = approx.fM @ inst.b
    return float(
        rule.C_M**2 * np.vdot(fMb, fMb).real / ((1.0 + alpha) ** 2 * rule.M * inst.x_norm**2)
    )


def success_probability_lower_bound(C_M: float, K: float, alpha: float, M: int, eps: float) -> float:
    """``(1 - eps/2)^2 (C_M K / ((1 + alpha) M))^2``.

    The factor ``1 - eps/2`` is clamped at 0: once ``eps >= 2`` the bound
    carries no information.
    """
    if eps < 0.0:
        raise DomainError(f"eps must be nonnegative, got {eps}")
    shrink = max(0.0, 1.0 - eps / 2.0)
    return shrink**2 * (C_M * K / ((1.0 + alpha) * M)) ** 2


def run_full(
    A,
    b,
    rule: QuadratureRule,
    alpha: float | None = None,
    eps_prime: float = 0.0,
    seed: int = 0,
    L: float = 0.0,
    s: int = 32,
) -> RunReport:
    A = as_matrix(A)
    if alpha is None:
        alpha = default_alpha(A)
    layout = RegisterLayout.for_sizes(rule.M, A.shape[0])

    inst = build_instance(A, rule, b)
    approx = build_log_approx(A, rule)
    x_state = ideal_solution_state(inst)
    x_tilde = perturb_state(x_state, eps_prime, seed)

    enc = shift_encoding(build_block_encoding_of_A(A, alpha), alpha)
    state = initial_state(x_tilde, layout)
    state = step2_controlled_rotation(state, rule)
    state = step3_hadamard(state)
    state = step4_apply_encoding(state, enc)
    p_tilde, f_tilde = step5_postselect(state)

    K = error_constant_K(A, inst.b)
    target = reference_log(A) @ inst.b
    target /= np.linalg.norm(target)
    eps = final_error_bound(approx, K, eps_prime)
    p_lb = success_probability_lower_bound(rule.C_M, K, alpha, rule.M, eps)

    d = int(np.max(np.count_nonzero(A, axis=0)))
    if eps_prime > 0.0:
        cost = total_cost(approx.rho, d, eps_prime, rule.M, A.shape[0], s=s, L=L).as_dict()
    else:
        # an exact solver has no finite cost under these formulas
        cost = dict.fromkeys(("pa_queries", "pb_uses", "gates"), math.nan)
        cost["oracle_gates_per_query"] = math.log2(rule.M * A.shape[0]) + s**2
    return RunReport(
        M=rule.M,
        N=A.shape[0],
        rho=approx.rho,
        alpha=float(alpha),
        eps_prime=float(eps_prime),
        seed=int(seed),
        success_probability=p_tilde,
        predicted_ideal_p=ideal_success_probability(approx, inst, alpha),
        lower_bound_p=p_lb,
        output_fidelity=float(abs(np.vdot(target, f_tilde)) ** 2),
        state_error=float(np.linalg.norm(target - f_tilde)),
        bound_state_error=eps,
        eps_MA=approx.eps_MA,
        delta_M=approx.delta_M,
        C_M=rule.C_M,
        K=K,
        aa_repetitions=amplification_repetitions(min(1.0, p_tilde)),
        query_counts={
            key: cost[key] for key in ("pa_queries", "pb_uses", "gates", "oracle_gates_per_query")
        },
    )
