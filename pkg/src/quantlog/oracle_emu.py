"""Query-counted classical emulation of sparse-access oracles.

``SparseAccess`` stands in for the entry oracle O_A and the position oracle
O_nu of a d-sparse matrix. ``BlockSystemOracle`` composes them into the
oracles of the block-diagonal system ``diag(tau_k (A - I) + I)`` and tallies
the primitive gates each composed call would cost, with unit constants:

    step I      equality check k == k'           log M
    step II-2   multiply tau_k * A_ij            s^2
    step II-3   equality check i == j            log N
    step II-4   1 - tau_k                        s
    step II-5   add                              s

Uncomputation mirrors steps I and II, so a full call costs twice the sum.
Indices follow the 1-based convention (``i, j, l >= 1``); block indices
``k`` are 0-based.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import DomainError, IndexOutOfRange, NoSuchNonzero
from .matcore import as_matrix
from .quadrature import QuadratureRule


def _round_scaled(value: Fraction, s: int) -> int:
    # round-half-to-even on the exact rational value
    return round(value * (1 << s))


@dataclass(frozen=True)
class FixedPoint:
    """Complex number stored as integer mantissas at scale ``2**-s``."""

    re: int
    im: int
    s: int

    @classmethod
    def from_value(cls, value, s: int) -> "FixedPoint":
        z = complex(value)
        return cls(_round_scaled(Fraction(z.real), s), _round_scaled(Fraction(z.imag), s), s)

    @classmethod
    def zero(cls, s: int) -> "FixedPoint":
        return cls(0, 0, s)

    @property
    def real_fraction(self) -> Fraction:
        return Fraction(self.re, 1 << self.s)

    @property
    def imag_fraction(self) -> Fraction:
        return Fraction(self.im, 1 << self.s)

    def __complex__(self) -> complex:
        return complex(float(self.real_fraction), float(self.imag_fraction))

    def __add__(self, other: "FixedPoint") -> "FixedPoint":
        if other.s != self.s:
            raise DomainError("cannot add fixed-point values at different scales")
        return FixedPoint(self.re + other.re, self.im + other.im, self.s)

    def scale(self, factor: "FixedPoint") -> "FixedPoint":
        """Multiply by a real fixed-point ``factor`` and round back to ``s`` bits."""
        if factor.im != 0:
            raise DomainError("scale factor must be real")
        f = factor.real_fraction
        return FixedPoint(
            _round_scaled(self.real_fraction * f, self.s),
            _round_scaled(self.imag_fraction * f, self.s),
            self.s,
        )


@dataclass
class SparseAccess:
    """Sparse-access model of a square matrix with O_A and O_nu counters.

    Every diagonal entry must be nonzero; the composed block oracles rely on
    the diagonal appearing in each column's nonzero list.
    """

    matrix: np.ndarray
    s: int = 32
    queries_entry: int = 0
    queries_position: int = 0
    columns: list[list[int]] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        self.matrix = as_matrix(self.matrix)
        if self.s < 1:
            raise DomainError(f"bit accuracy s must be positive, got {self.s}")
        if np.any(np.diag(self.matrix) == 0):
            raise DomainError("all diagonal entries must be nonzero")
        nz = self.matrix != 0
        # 1-based ascending row indices per column
        self.columns = [list(np.flatnonzero(nz[:, j]) + 1) for j in range(self.N)]

    @classmethod
    def from_scipy(cls, sparse, s: int = 32) -> "SparseAccess":
        return cls(sparse.toarray(), s=s)

    @property
    def N(self) -> int:
        return self.matrix.shape[0]

    @property
    def d(self) -> int:
        nz = self.matrix != 0
        return int(max(nz.sum(axis=0).max(), nz.sum(axis=1).max()))

    def check_index(self, *idx: int) -> None:
        for i in idx:
            if not 1 <= i <= self.N:
                raise IndexOutOfRange(f"index {i} outside 1..{self.N}")

    def query_entry(self, i: int, j: int) -> FixedPoint:
        """O_A: the s-bit value of entry (i, j)."""
        self.check_index(i, j)
        self.queries_entry += 1
        return FixedPoint.from_value(self.matrix[i - 1, j - 1], self.s)

    def query_position(self, j: int, l: int) -> int:
        """O_nu: row index of the l-th nonzero of column j."""
        self.check_index(j)
        if not 1 <= l <= self.d:
            raise IndexOutOfRange(f"l = {l} outside 1..{self.d}")
        self.queries_position += 1
        col = self.columns[j - 1]
        if l > len(col):
            raise NoSuchNonzero(f"column {j} has only {len(col)} nonzeros, asked for l = {l}")
        return int(col[l - 1])

    def reset(self) -> dict:
        """Return the current tallies and zero the counters."""
        tallies = {"O_A": self.queries_entry, "O_nu": self.queries_position}
        self.queries_entry = 0
        self.queries_position = 0
        return tallies


@dataclass
class BlockSystemOracle:
    """Composed oracles for ``diag(tau_k (A - I) + I)``, ``k = 0..M-1``."""

    access: SparseAccess
    rule: QuadratureRule
    gates: int = 0
    taus: list[FixedPoint] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        self.taus = [FixedPoint.from_value(t, self.s) for t in self.rule.nodes]

    @property
    def s(self) -> int:
        return self.access.s

    @property
    def M(self) -> int:
        return self.rule.M

    @property
    def log_M(self) -> int:
        return math.ceil(math.log2(self.M))

    @property
    def log_N(self) -> int:
        return math.ceil(math.log2(self.access.N))

    def _check_block(self, *ks: int) -> None:
        for k in ks:
            if not 0 <= k < self.M:
                raise IndexOutOfRange(f"block index {k} outside 0..{self.M - 1}")

    def position(self, k: int, j: int, l: int) -> tuple[int, int]:
        """Big O_nu: one O_nu query plus ``log M`` CNOTs copying ``k``."""
        self._check_block(k)
        row = self.access.query_position(j, l)
        self.gates += self.log_M
        return k, row

    def entry(self, k: int, i: int, k2: int, j: int) -> FixedPoint:
        """Big O_A: ``tau_k A_ij + (1 - tau_k) delta_ij`` when ``k == k2``, else 0."""
        self._check_block(k, k2)
        self.access.check_index(i, j)
        s = self.s
        # step I and its uncompute run on every branch
        self.gates += 2 * self.log_M
        if k != k2:
            return FixedPoint.zero(s)

        tau = self.taus[k]
        r1 = self.access.query_entry(i, j)  # II-1
        r2 = r1.scale(tau)  # II-2
        r3 = FixedPoint.zero(s)
        if i == j:  # II-3
            r3 = FixedPoint(1 << s, 0, s) + FixedPoint(-tau.re, 0, s)  # II-4
        r4 = r2 + r3  # II-5
        self.access.query_entry(i, j)  # III: uncomputing r1 costs a second O_A query
        self.gates += 2 * (s * s + self.log_N + 2 * s)
        return r4

    @staticmethod
    def gates_per_entry_call(M: int, N: int, s: int) -> int:
        return 2 * (math.ceil(math.log2(M)) + s * s + math.ceil(math.log2(N)) + 2 * s)

    def reconstruct(self) -> np.ndarray:
        """Assemble the full ``MN x MN`` matrix from composed-oracle calls."""
        N, M = self.access.N, self.M
        out = np.zeros((M * N, M * N), dtype=np.complex128)
        for k in range(M):
            for j in range(1, N + 1):
                for l in range(1, len(self.access.columns[j - 1]) + 1):
                    _, i = self.position(k, j, l)
                    out[k * N + i - 1, k * N + j - 1] = complex(self.entry(k, i, k, j))
        return out


@dataclass(frozen=True)
class BigStatePrep:
    """Structure of ``P_b_big = H^{(x) m} (x) P_b``."""

    M: int
    pb_uses: int
    hadamard_gates: int
    state: np.ndarray


def prepare_big_b(b, M: int) -> BigStatePrep:
    b = np.asarray(b, dtype=np.complex128)
    nb = np.linalg.norm(b)
    if nb == 0.0:
        raise DomainError("b must be nonzero")
    m = M.bit_length() - 1
    if M < 1 or (1 << m) != M:
        raise DomainError(f"M = {M} is not a power of two")
    state = np.kron(np.full(M, 1.0 / math.sqrt(M)), b / nb)
    return BigStatePrep(M=M, pb_uses=1, hadamard_gates=m, state=state)
