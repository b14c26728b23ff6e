"""Row builders behind the CLI subcommands.

Each function returns ``(header, rows)`` with rows as tuples in header
order, so the CLI only has to format them.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from itertools import product

import numpy as np

from .complexity import total_cost
from .io import derive_seed
from .logquad import build_log_approx
from .matcore import reference_log, spectral_norm
from .pipeline import RunReport, build_block_encoding_of_A, default_alpha, run_full, shift_encoding
from .qlsp import build_instance, condition_bounds
from .quadrature import gauss_legendre

QUADRATURE_HEADER = ("M", "j", "tau", "omega", "sum_omega", "C_M")
APPROX_HEADER = ("M", "N", "rho", "error", "eps_MA", "margin")
RUN_HEADER = (
    "M",
    "N",
    "rho",
    "alpha",
    "eps_prime",
    "seed",
    "success_probability",
    "predicted_ideal_p",
    "lower_bound_p",
    "output_fidelity",
    "state_error",
    "bound_state_error",
    "eps_MA",
    "delta_M",
    "C_M",
    "K",
    "aa_repetitions",
    "pa_queries",
    "pb_uses",
    "gates",
    "thm5_ok",
    "thm6_ok",
)
BOUNDS_HEADER = (
    "M",
    "N",
    "rho",
    "normA",
    "normAinv",
    "kappa",
    "kappa_bound",
    "holds",
    "alpha",
    "unitarity_residual",
    "corner_residual",
)
COMPLEXITY_HEADER = (
    "rho",
    "kappa_prime",
    "kappa_A_bound",
    "d",
    "eps_prime",
    "M",
    "N",
    "s",
    "L",
    "pa_queries",
    "pb_uses",
    "gates",
    "oracle_gates_per_query",
    "aa_repetitions",
)


def quadrature_rows(Ms):
    rows = []
    for M in Ms:
        rule = gauss_legendre(M)
        total = float(np.sum(rule.weights))
        for j, (tau, w) in enumerate(zip(rule.nodes, rule.weights), start=1):
            rows.append((M, j, float(tau), float(w), total, rule.C_M))
    return QUADRATURE_HEADER, rows


def approx_rows(A, Ms):
    log_A = reference_log(A)
    rows = []
    for M in Ms:
        approx = build_log_approx(A, gauss_legendre(M))
        err = spectral_norm(approx.fM - log_A)
        rows.append((M, A.shape[0], approx.rho, err, approx.eps_MA, approx.eps_MA - err))
    return APPROX_HEADER, rows


def run_row(report: RunReport):
    q = report.query_counts
    return (
        report.M,
        report.N,
        report.rho,
        report.alpha,
        report.eps_prime,
        report.seed,
        report.success_probability,
        report.predicted_ideal_p,
        report.lower_bound_p,
        report.output_fidelity,
        report.state_error,
        report.bound_state_error,
        report.eps_MA,
        report.delta_M,
        report.C_M,
        report.K,
        report.aa_repetitions,
        q["pa_queries"],
        q["pb_uses"],
        q["gates"],
        int(report.thm5_ok),
        int(report.thm6_ok),
    )


def _one_run(args):
    A, b, M, alpha, eps_prime, seed, L, s = args
    return run_row(run_full(A, b, gauss_legendre(M), alpha=alpha, eps_prime=eps_prime, seed=seed, L=L, s=s))


def sweep_rows(A, b, Ms, eps_primes, n_seeds: int, root_seed: int = 0, alpha=None, L=0.0, s=32, jobs: int = 1):
    """Every ``(M, eps', trial)`` combination, sorted by ``(M, eps', trial)``.

    The perturbation seed of each row is derived from ``(root_seed, M, trial)``
    and is written to the ``seed`` column, so any row can be rerun alone with
    :func:`run_full`.
    """
    if alpha is None:
        alpha = default_alpha(A)
    tasks = [
        (A, b, M, alpha, eps, derive_seed(root_seed, M, trial), L, s)
        for M, eps, trial in product(sorted(Ms), sorted(eps_primes), range(n_seeds))
    ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_one_run, tasks, chunksize=8))
    else:
        rows = [_one_run(t) for t in tasks]
    return RUN_HEADER, rows


def count_violations(rows) -> tuple[int, int]:
    i5 = RUN_HEADER.index("thm5_ok")
    i6 = RUN_HEADER.index("thm6_ok")
    return sum(1 for r in rows if not r[i5]), sum(1 for r in rows if not r[i6])


def bounds_rows(A, Ms, alpha=None):
    if alpha is None:
        alpha = default_alpha(A)
    N = A.shape[0]
    b = np.ones(N) / math.sqrt(N)
    enc = shift_encoding(build_block_encoding_of_A(A, alpha), alpha)
    U = enc.U
    unit_res = float(np.max(np.abs(U.conj().T @ U - np.eye(U.shape[0]))))
    corner_res = float(np.max(np.abs((1.0 + alpha) * enc.corner() - (A - np.eye(N)))))
    rows = []
    for M in Ms:
        cb = condition_bounds(build_instance(A, gauss_legendre(M), b))
        rows.append(
            (M, N, cb.rho, cb.normA, cb.normAinv, cb.kappa, cb.kappa_bound, int(cb.holds()), alpha, unit_res, corner_res)
        )
    return BOUNDS_HEADER, rows


def complexity_rows(rho, d, eps_primes, Ms, N, s=32, L=0.0, p_lower_bound=None):
    rows = []
    for M, eps in product(Ms, eps_primes):
        c = total_cost(rho, d, eps, M, N, s=s, L=L, p_lower_bound=p_lower_bound)
        rows.append(tuple(getattr(c, h) for h in COMPLEXITY_HEADER))
    return COMPLEXITY_HEADER, rows


def matrix_sparsity(A) -> int:
    nz = np.asarray(A) != 0
    return int(max(nz.sum(axis=0).max(), nz.sum(axis=1).max()))

