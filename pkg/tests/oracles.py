"""Independent reference computations used only by the tests.

None of these share code paths with the package under test.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np


def jacobi_singular_values(A, sweeps: int = 60, tol: float = 1e-15) -> np.ndarray:
    """Singular values by one-sided (Hestenes) Jacobi rotations, descending."""
    U = np.array(A, dtype=np.complex128, copy=True)
    n = U.shape[1]
    for _ in range(sweeps):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                alpha = np.vdot(U[:, p], U[:, p]).real
                beta = np.vdot(U[:, q], U[:, q]).real
                gamma = np.vdot(U[:, p], U[:, q])
                g = abs(gamma)
                if g == 0.0 or g <= tol * np.sqrt(alpha * beta):
                    continue
                off = max(off, g / np.sqrt(alpha * beta))
                phase = gamma / g
                zeta = (beta - alpha) / (2.0 * g)
                t = np.sign(zeta) / (abs(zeta) + np.sqrt(1.0 + zeta**2)) if zeta != 0 else 1.0
                c = 1.0 / np.sqrt(1.0 + t**2)
                s = c * t
                up = U[:, p].copy()
                uq = U[:, q].copy()
                U[:, p] = c * up - s * np.conj(phase) * uq
                U[:, q] = s * phase * up + c * uq
        if off <= tol:
            break
    return np.sort(np.linalg.norm(U, axis=0))[::-1]


def golub_welsch(M: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes/weights on [-1, 1] from the Jacobi matrix eigenproblem."""
    k = np.arange(1, M)
    beta = k / np.sqrt(4.0 * k**2 - 1.0)
    J = np.diag(beta, 1) + np.diag(beta, -1)
    x, V = np.linalg.eigh(J)
    return x, 2.0 * V[0, :] ** 2


def log1p_taylor(n: int) -> list[Fraction]:
    """Coefficients c_0..c_n of log(1+x)."""
    return [Fraction(0)] + [Fraction((-1) ** (k + 1), k) for k in range(1, n + 1)]


def _solve_fraction(A: list[list[Fraction]], b: list[Fraction]) -> list[Fraction]:
    n = len(b)
    M = [row[:] + [b[i]] for i, row in enumerate(A)]
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col] / M[col][col]
                M[r] = [a - f * c for a, c in zip(M[r], M[col])]
    return [M[i][n] / M[i][i] for i in range(n)]


def pade_coefficients(m: int) -> tuple[list[Fraction], list[Fraction]]:
    """Exact (m, m) Pade coefficients of log(1+x) by series matching.

    Returns numerator p_0..p_m and denominator q_0..q_m with q_0 = 1, so that
    Q(x) log(1+x) - P(x) = O(x^{2m+1}).
    """
    c = log1p_taylor(2 * m)
    # denominator: sum_{j=0..m} q_j c_{k-j} = 0 for k = m+1..2m, q_0 = 1
    A = [[c[k - j] if k - j >= 0 else Fraction(0) for j in range(1, m + 1)] for k in range(m + 1, 2 * m + 1)]
    rhs = [-c[k] for k in range(m + 1, 2 * m + 1)]
    q = [Fraction(1)] + _solve_fraction(A, rhs)
    p = [sum((q[j] * c[k - j] for j in range(0, k + 1) if j <= m), Fraction(0)) for k in range(m + 1)]
    return p, q


def pade_eval(p, q, x: float) -> float:
    num = sum(float(pk) * x**k for k, pk in enumerate(p))
    den = sum(float(qk) * x**k for k, qk in enumerate(q))
    return num / den


def exact_monomial_integral(k: int) -> float:
    """int_0^1 x^k dx."""
    return 1.0 / (k + 1)


def fixed_point_round(value: Fraction, s: int) -> Fraction:
    scaled = value * (1 << s)
    return Fraction(round(scaled), 1 << s)


def block_entry_exact(a_ij: complex, tau: float, same_index: bool, s: int) -> complex:
    """Exact-rational replay of the composed entry oracle's arithmetic."""
    tau_q = fixed_point_round(Fraction(tau), s)
    re = fixed_point_round(Fraction(a_ij.real), s)
    im = fixed_point_round(Fraction(a_ij.imag), s)
    re = fixed_point_round(re * tau_q, s)
    im = fixed_point_round(im * tau_q, s)
    if same_index:
        re += 1 - tau_q
    return complex(float(re), float(im))


def expm_taylor(A, terms: int = 60, squarings: int = 6) -> np.ndarray:
    """Matrix exponential by scaled Taylor series and repeated squaring."""
    A = np.asarray(A, dtype=np.complex128) / 2**squarings
    out = np.eye(A.shape[0], dtype=np.complex128)
    term = np.eye(A.shape[0], dtype=np.complex128)
    for k in range(1, terms):
        term = term @ A / k
        out = out + term
    for _ in range(squarings):
        out = out @ out
    return out
