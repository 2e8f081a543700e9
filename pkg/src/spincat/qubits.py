"""Logical-qubit representation of split cat states.

Each part of spin ``l`` is mapped onto the orthonormal pair built from
``|l, eta> +/- |l, -eta>``, under which

    |l, +eta> = a_l |0> + b_l |1>,    |l, -eta> = a_l |0> - b_l |1>

with ``a_l = sqrt((1 + p**(2l)) / 2)`` and ``b_l = sqrt((1 - p**(2l)) / 2)``.
Basis index bit ``i`` (most significant first) belongs to part ``i``.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Sequence

import numpy as np

from .errors import DegenerateCatError, DensityMatrixError, SchemeError
from .spin import CatState, HalfInt, SpinLike, SplitScheme, cat_normalization, check_scheme, half

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10


class LogicalAmplitudes(NamedTuple):
    a: float
    b: float


def logical_amplitudes(l: SpinLike, p: float) -> LogicalAmplitudes:
    x = float(p) ** half(l).twice
    return LogicalAmplitudes(math.sqrt((1.0 + x) / 2.0), math.sqrt((1.0 - x) / 2.0))


def basis_labels(scheme: SplitScheme) -> list[tuple[tuple[HalfInt, int], ...]]:
    """Labels ``((spin, bit), ...)`` for every basis index of the scheme's qubit space."""
    n = len(scheme)
    labels = []
    for idx in range(2 ** n):
        bits = [(idx >> (n - 1 - i)) & 1 for i in range(n)]
        labels.append(tuple(zip(scheme.parts, bits)))
    return labels


def _branches(state: CatState, parts: Sequence[HalfInt]):
    plus, minus = np.ones(1), np.ones(1)
    for part in parts:
        a, b = logical_amplitudes(part, state.p)
        plus = np.kron(plus, [a, b])
        minus = np.kron(minus, [a, -b])
    return plus, minus


def cat_vector(state: CatState, scheme: SplitScheme) -> np.ndarray:
    """Assemble ``N_m (prod_i |l_i,eta> + e^{i m pi} prod_i |l_i,-eta>)`` in the qubit basis."""
    scheme = check_scheme(state, scheme)
    plus, minus = _branches(state, scheme.parts)
    return (cat_normalization(state) * (plus + state.c * minus)).astype(complex)


def pure_bipartite_state(state: CatState, scheme: SplitScheme) -> np.ndarray:
    """Two-qubit vector ``(C00, C01, C10, C11)`` of a cat state split into two parts."""
    scheme = check_scheme(state, scheme, size=2)
    norm = cat_normalization(state)
    a1, b1 = logical_amplitudes(scheme[0], state.p)
    a2, b2 = logical_amplitudes(scheme[1], state.p)
    same, flip = 1 + state.c, 1 - state.c
    return norm * np.array(
        [same * a1 * a2, flip * a1 * b2, flip * a2 * b1, same * b1 * b2], dtype=complex
    )


def tripartite_state(state: CatState, scheme: SplitScheme) -> np.ndarray:
    """Eight-component vector of a cat state split into three parts."""
    return cat_vector(state, check_scheme(state, scheme, size=3))


def projector(psi: np.ndarray) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex).reshape(-1)
    return np.outer(psi, psi.conj())


def _num_qubits(dim: int) -> int:
    n = dim.bit_length() - 1
    if dim < 2 or 2 ** n != dim:
        raise DensityMatrixError(f"dimension {dim} is not a power of two")
    return n


def partial_trace(state_or_rho: np.ndarray, keep: Sequence[int]) -> np.ndarray:
    """Reduced density matrix on the qubits ``keep`` (0-based, returned in ascending order).

    Accepts either a state vector or a density matrix over ``n`` qubits.
    """
    arr = np.asarray(state_or_rho, dtype=complex)
    rho = projector(arr) if arr.ndim == 1 else arr
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise DensityMatrixError(f"expected a vector or square matrix, got shape {arr.shape}")
    n = _num_qubits(rho.shape[0])
    keep = sorted(set(int(k) for k in keep))
    if not keep or len(keep) == n or keep[0] < 0 or keep[-1] >= n:
        raise SchemeError(f"keep must be a nonempty proper subset of range({n}), got {keep}")
    traced = [k for k in range(n) if k not in keep]
    t = rho.reshape([2] * (2 * n))
    for offset, k in enumerate(traced):
        axis = k - offset
        t = np.trace(t, axis1=axis, axis2=axis + t.ndim // 2)
    d = 2 ** len(keep)
    return t.reshape(d, d)


def mixed_two_qubit_closed(state: CatState, l1: SpinLike, l2: SpinLike) -> np.ndarray:
    """Closed-form reduced state of parts ``l1, l2`` after tracing out ``j - l1 - l2``.

    The matrix is X-shaped in the basis ``|00>, |01>, |10>, |11>``; the outer
    block carries ``1 + q cos(m pi)`` and the inner block ``1 - q cos(m pi)``
    with ``q = p**(2 (j - l1 - l2))``.
    """
    l1, l2 = half(l1), half(l2)
    if (l1 + l2).twice >= state.j.twice:
        raise SchemeError(f"parts {l1} + {l2} leave nothing to trace out of j={state.j}")
    if state.degenerate:
        raise DegenerateCatError("odd cat state at p = 1 has no closed-form density matrix")
    n2 = cat_normalization(state) ** 2
    q = state.pow(state.j - l1 - l2)
    a1, b1 = logical_amplitudes(l1, state.p)
    a2, b2 = logical_amplitudes(l2, state.p)
    outer = 1 + q * state.c
    inner = 1 - q * state.c
    cross = 2 * a1 * b1 * a2 * b2
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = 2 * a1**2 * a2**2 * outer
    rho[3, 3] = 2 * b1**2 * b2**2 * outer
    rho[0, 3] = rho[3, 0] = cross * outer
    rho[1, 1] = 2 * a1**2 * b2**2 * inner
    rho[2, 2] = 2 * a2**2 * b1**2 * inner
    rho[1, 2] = rho[2, 1] = cross * inner
    return n2 * rho


def _check_hermitian(rho: np.ndarray, tol: float) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise DensityMatrixError(f"expected a square matrix, got shape {rho.shape}")
    err = np.max(np.abs(rho - rho.conj().T)) if rho.size else 0.0
    if err > tol:
        raise DensityMatrixError(f"matrix is not Hermitian (max deviation {err:.3g})")
    return rho


def eigensystem(rho: np.ndarray, tol: float = 1e-10):
    """Eigenvalues in descending order and the matching orthonormal eigenvectors (columns)."""
    rho = _check_hermitian(rho, tol)
    vals, vecs = np.linalg.eigh((rho + rho.conj().T) / 2)
    order = np.argsort(vals)[::-1]
    return vals[order], vecs[:, order]


def validate_density_matrix(rho: np.ndarray) -> np.ndarray:
    """Check Hermiticity, unit trace and positivity; return the matrix as complex array."""
    rho = _check_hermitian(rho, HERMITIAN_TOL)
    _num_qubits(rho.shape[0])
    tr = np.trace(rho).real
    if abs(tr - 1.0) > TRACE_TOL:
        raise DensityMatrixError(f"trace is {tr!r}, expected 1")
    lowest = np.linalg.eigvalsh(rho)[0]
    if lowest < -PSD_TOL:
        raise DensityMatrixError(f"matrix has negative eigenvalue {lowest:.3g}")
    return rho
