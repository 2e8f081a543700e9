"""Matrix-level correlation measures for qubit density matrices.

Entropies are in bits. These routines work on any valid density matrix and
serve as the independent check on the cat-state closed forms in
:mod:`spincat.closed`.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DensityMatrixError, RankError
from .qubits import eigensystem, partial_trace, validate_density_matrix

# Eigenvalues of a density matrix below this are treated as exact zeros. Keeping
# rounding-level eigenvalues would perturb the concurrence by ~sqrt(eps).
RANK_TOL = 1e-13
_CLAMP_TOL = 1e-12

_SIGMA_YY = np.array(
    [[0, 0, 0, -1], [0, 0, 1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]], dtype=complex
)


def binary_entropy(x: float) -> float:
    """``H(x) = -x log2 x - (1 - x) log2 (1 - x)`` with ``0 log 0 = 0``."""
    x = float(x)
    if x < -_CLAMP_TOL or x > 1 + _CLAMP_TOL or math.isnan(x):
        raise ValueError(f"binary entropy argument {x!r} outside [0, 1]")
    x = min(max(x, 0.0), 1.0)
    out = 0.0
    for y in (x, 1.0 - x):
        if y > 0.0:
            out -= y * math.log2(y)
    return out


def entropy_of_spectrum(eigenvalues) -> float:
    vals = np.clip(np.real(eigenvalues), 0.0, None)
    vals = vals[vals > 0]
    return float(-np.sum(vals * np.log2(vals)))


def von_neumann_entropy(rho: np.ndarray) -> float:
    rho = validate_density_matrix(rho)
    return entropy_of_spectrum(np.linalg.eigvalsh(rho))


def _two_qubit(rho: np.ndarray) -> np.ndarray:
    rho = validate_density_matrix(rho)
    if rho.shape != (4, 4):
        raise DensityMatrixError(f"expected a two-qubit (4x4) state, got {rho.shape}")
    return rho


def wootters_concurrence(rho: np.ndarray) -> float:
    """Two-qubit concurrence ``max(0, l1 - l2 - l3 - l4)``.

    The ``l_i`` are the square roots of the eigenvalues of
    ``sqrt(rho) rho~ sqrt(rho)`` with ``rho~ = (Y x Y) rho* (Y x Y)``. Writing
    ``rho = W W^dag`` over its nonzero spectrum, that Hermitian product has the
    same nonzero eigenvalues as ``tau^dag tau`` with ``tau = W^T (Y x Y) W``, so
    the ``l_i`` are read off as singular values of ``tau`` without forming
    square roots of near-zero eigenvalues.
    """
    rho = _two_qubit(rho)
    vals, vecs = eigensystem(rho)
    keep = vals > RANK_TOL
    w = vecs[:, keep] * np.sqrt(vals[keep])
    tau = w.T @ _SIGMA_YY @ w
    lam = np.zeros(4)
    if tau.size:
        sv = np.linalg.svd(tau, compute_uv=False)
        lam[: sv.size] = sv
    return float(max(0.0, lam[0] - lam[1:].sum()))


def eof_from_concurrence(c: float) -> float:
    """Entanglement of formation ``H((1 + sqrt(1 - c**2)) / 2)`` of a two-qubit state."""
    c = float(c)
    if c < -_CLAMP_TOL or c > 1 + _CLAMP_TOL:
        raise ValueError(f"concurrence {c!r} outside [0, 1]")
    c = min(max(c, 0.0), 1.0)
    return binary_entropy(0.5 + 0.5 * math.sqrt(1.0 - c * c))


def entanglement_of_formation(rho: np.ndarray) -> float:
    return eof_from_concurrence(wootters_concurrence(rho))


def mutual_information(rho: np.ndarray) -> float:
    """``S(rho_A) + S(rho_B) - S(rho_AB)`` for a two-qubit state."""
    rho = _two_qubit(rho)
    s_a = entropy_of_spectrum(np.linalg.eigvalsh(partial_trace(rho, [0])))
    s_b = entropy_of_spectrum(np.linalg.eigvalsh(partial_trace(rho, [1])))
    s_ab = entropy_of_spectrum(np.linalg.eigvalsh(rho))
    return max(0.0, s_a + s_b - s_ab)


def _measured_index(measured) -> int:
    key = str(measured).upper()
    if key not in ("A", "B"):
        raise ValueError(f"measured party must be 'A' or 'B', got {measured!r}")
    return 0 if key == "A" else 1


def purify(rho: np.ndarray, max_rank: int = 2) -> np.ndarray:
    """Purification ``sum_i sqrt(l_i) |phi_i> |i>_C`` of a rank ``<= max_rank`` state.

    The ancilla is appended as the last qubit(s); for ``max_rank = 2`` it is one qubit.
    """
    vals, vecs = eigensystem(rho)
    rank = int(np.sum(vals > RANK_TOL))
    if rank > max_rank:
        raise RankError(f"state has rank {rank} > {max_rank}")
    anc = max_rank
    psi = np.zeros(rho.shape[0] * anc, dtype=complex)
    for i in range(rank):
        psi += np.kron(np.sqrt(vals[i]) * vecs[:, i], np.eye(anc)[i])
    return psi


def koashi_winter_smin(rho: np.ndarray, measured="A") -> float:
    """Minimal conditional entropy of a rank-2 two-qubit state via its purification.

    With ``measured='A'`` the minimum over measurements on A of the average
    entropy left on B equals the entanglement of formation between B and the
    purifying qubit C.
    """
    rho = _two_qubit(rho)
    psi = purify(rho, max_rank=2)
    other = 1 - _measured_index(measured)
    return entanglement_of_formation(partial_trace(psi, [other, 2]))


def discord_koashi_winter(rho: np.ndarray, measured="A") -> float:
    """Discord ``S(rho_measured) - S(rho_AB) + S~min`` for rank-2 two-qubit states."""
    rho = _two_qubit(rho)
    s_m = entropy_of_spectrum(np.linalg.eigvalsh(partial_trace(rho, [_measured_index(measured)])))
    s_ab = entropy_of_spectrum(np.linalg.eigvalsh(rho))
    return max(0.0, s_m - s_ab + koashi_winter_smin(rho, measured))
