"""Matrix/vector files, seeded test-matrix generation and seed derivation.

Dense files are JSON objects ``{"dim": N, "entries": [[re, im], ...]}`` with
entries in row-major order (vectors use the same layout with N entries).
Python's float repr round-trips exactly, so write-then-read is bit-exact.
Files ending in ``.mtx`` are read as Matrix Market.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np
import scipy.io
from scipy.stats import unitary_group

from .errors import DimensionMismatch, DomainError
from .matcore import as_matrix, as_vector


def _pairs(values: np.ndarray) -> list[list[float]]:
    return [[float(z.real), float(z.imag)] for z in values]


def _unpairs(entries) -> np.ndarray:
    arr = np.asarray(entries, dtype=float)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise DimensionMismatch("entries must be a list of [re, im] pairs")
    return arr[:, 0] + 1j * arr[:, 1]


def write_matrix(path, A) -> None:
    A = as_matrix(A)
    doc = {"dim": A.shape[0], "entries": _pairs(A.reshape(-1))}
    Path(path).write_text(json.dumps(doc) + "\n")


def read_matrix(path) -> np.ndarray:
    path = Path(path)
    if path.suffix == ".mtx":
        M = scipy.io.mmread(path)
        M = M.toarray() if hasattr(M, "toarray") else np.asarray(M)
        return as_matrix(M)
    doc = json.loads(path.read_text())
    n = int(doc["dim"])
    flat = _unpairs(doc["entries"])
    if flat.shape[0] != n * n:
        raise DimensionMismatch(f"expected {n * n} entries for dim {n}, got {flat.shape[0]}")
    return flat.reshape(n, n)


def write_vector(path, b) -> None:
    b = as_vector(b)
    Path(path).write_text(json.dumps({"dim": b.shape[0], "entries": _pairs(b)}) + "\n")


def read_vector(path) -> np.ndarray:
    doc = json.loads(Path(path).read_text())
    n = int(doc["dim"])
    flat = _unpairs(doc["entries"])
    if flat.shape[0] != n:
        raise DimensionMismatch(f"expected {n} entries, got {flat.shape[0]}")
    return flat


def derive_seed(root: int, *keys: int) -> int:
    """Counter-based child seed: the same ``(root, keys)`` always gives the same value."""
    ss = np.random.SeedSequence(entropy=root, spawn_key=tuple(int(k) for k in keys))
    return int(ss.generate_state(1, dtype=np.uint32)[0])


def random_hermitian(N: int, rho: float, seed) -> np.ndarray:
    """Hermitian ``V diag(lam) V^H`` with Haar ``V`` and ``||A - I|| = rho``.

    One eigenvalue is pinned at ``1 +/- rho`` (random sign); the rest are
    uniform on ``(1 - rho, 1 + rho)``.
    """
    if N < 1:
        raise DomainError(f"N must be positive, got {N}")
    if not 0.0 <= rho < 1.0:
        raise DomainError(f"rho must lie in [0, 1), got {rho}")
    rng = np.random.default_rng(seed)
    lam = rng.uniform(1.0 - rho, 1.0 + rho, size=N)
    lam[0] = 1.0 + rho * rng.choice([-1.0, 1.0])
    if N == 1:
        return lam.reshape(1, 1).astype(np.complex128)
    V = unitary_group.rvs(N, random_state=rng)
    A = (V * lam) @ V.conj().T
    return 0.5 * (A + A.conj().T)


def random_unit_vector(N: int, seed) -> np.ndarray:
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(N) + 1j * rng.standard_normal(N)
    return v / np.linalg.norm(v)


def parse_generator(spec: str) -> dict:
    """Parse ``rho=R,n=K,seed=S`` (``n`` qubits) or ``rho=R,N=D,seed=S``."""
    fields = {}
    for item in spec.split(","):
        if not item.strip():
            continue
        key, sep, value = item.partition("=")
        if not sep:
            raise DomainError(f"malformed generator field {item!r}")
        fields[key.strip()] = value.strip()
    unknown = set(fields) - {"rho", "n", "N", "seed"}
    if unknown:
        raise DomainError(f"unknown generator fields {sorted(unknown)}")
    if "rho" not in fields:
        raise DomainError("generator spec needs rho=")
    if "N" in fields:
        N = int(fields["N"])
    else:
        N = 1 << int(fields.get("n", 2))
    return {"rho": float(fields["rho"]), "N": N, "seed": int(fields.get("seed", 0))}


def generate_matrix(spec: str) -> np.ndarray:
    g = parse_generator(spec)
    return random_hermitian(g["N"], g["rho"], g["seed"])


def resolve_b(source: str, N: int, seed: int = 0) -> np.ndarray:
    """``e1``, ``uniform``, ``random`` or a vector file path."""
    if source == "e1":
        b = np.zeros(N, dtype=np.complex128)
        b[0] = 1.0
        return b
    if source == "uniform":
        return np.full(N, 1.0 / math.sqrt(N), dtype=np.complex128)
    if source == "random":
        return random_unit_vector(N, seed)
    b = read_vector(source)
    if b.shape[0] != N:
        raise DimensionMismatch(f"b has length {b.shape[0]}, matrix has dimension {N}")
    return b
