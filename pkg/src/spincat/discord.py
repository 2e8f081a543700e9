"""Quantum discord by direct optimization over projective measurements.

The measured qubit is projected onto ``{|v0><v0|, |v1><v1|}`` with
``|v0> = (cos(theta/2), e^{i phi} sin(theta/2))``. The conditional entropy
is minimized on a ``grid_n x 2*grid_n`` grid in ``(theta, phi)`` and the best
cell is refined by coordinate descent with a halving step.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceWarning
from .measures import _measured_index, _two_qubit, entropy_of_spectrum
from .qubits import partial_trace

MIN_GRID = 32
# refinement counts as converged once the angular step is below this (radians)
STEP_TOL = 1e-9


@dataclass(frozen=True)
class MeasurementSetting:
    theta: float
    phi: float

    def vectors(self) -> tuple[np.ndarray, np.ndarray]:
        c, s = math.cos(self.theta / 2), math.sin(self.theta / 2)
        phase = np.exp(1j * self.phi)
        return np.array([c, phase * s]), np.array([-np.conj(phase) * s, c])

    def projectors(self) -> tuple[np.ndarray, np.ndarray]:
        v0, v1 = self.vectors()
        return np.outer(v0, v0.conj()), np.outer(v1, v1.conj())


def _xlog2x(x: np.ndarray) -> np.ndarray:
    out = np.zeros_like(x)
    pos = x > 0
    out[pos] = x[pos] * np.log2(x[pos])
    return out


def conditional_entropy(rho: np.ndarray, theta, phi, measured="A") -> np.ndarray:
    """Average post-measurement entropy ``sum_k p_k S(rho_k)`` of the unmeasured qubit.

    ``theta`` and ``phi`` may be arrays of equal shape; the result has that shape.
    """
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    shape = np.broadcast(theta, phi).shape
    th, ph = np.broadcast_to(theta, shape).ravel(), np.broadcast_to(phi, shape).ravel()
    t = np.asarray(rho, dtype=complex).reshape(2, 2, 2, 2)
    if _measured_index(measured) == 1:
        t = t.transpose(1, 0, 3, 2)
    c, s = np.cos(th / 2), np.sin(th / 2)
    phase = np.exp(1j * ph)
    total = np.zeros(th.size)
    for v in (np.stack([c, phase * s], axis=1), np.stack([-phase.conj() * s, c], axis=1)):
        sigma = np.einsum("na,abcd,nc->nbd", v.conj(), t, v)
        d0, d1 = sigma[:, 0, 0].real, sigma[:, 1, 1].real
        tr = d0 + d1
        gap = np.sqrt((d0 - d1) ** 2 + 4 * np.abs(sigma[:, 0, 1]) ** 2)
        e_hi = np.clip((tr + gap) / 2, 0, None)
        e_lo = np.clip((tr - gap) / 2, 0, None)
        # p_k S(sigma_k / p_k) = p_k log p_k - sum_i e_i log e_i
        total += _xlog2x(np.clip(tr, 0, None)) - _xlog2x(e_hi) - _xlog2x(e_lo)
    return total.reshape(shape)


def minimize_conditional_entropy(
    rho: np.ndarray, measured="A", grid_n: int = 64, refine_iters: int = 40
) -> tuple[float, MeasurementSetting, bool]:
    """Return ``(S~min, best setting, converged)``."""
    if grid_n < MIN_GRID:
        raise ValueError(f"grid_n must be at least {MIN_GRID}, got {grid_n}")
    thetas = np.linspace(0.0, np.pi, grid_n)
    phis = np.linspace(0.0, 2 * np.pi, 2 * grid_n, endpoint=False)
    tt, pp = np.meshgrid(thetas, phis, indexing="ij")
    values = conditional_entropy(rho, tt, pp, measured)
    i, k = np.unravel_index(np.argmin(values), values.shape)
    best = float(values[i, k])
    x = np.array([thetas[i], phis[k]])

    step = np.pi / grid_n
    max_moves = 4 * grid_n
    converged = True
    moves = np.array([[1, 0], [-1, 0], [0, 1], [0, -1]], dtype=float)
    for _ in range(refine_iters):
        for _ in range(max_moves):
            trial = x + step * moves
            vals = conditional_entropy(rho, trial[:, 0], trial[:, 1], measured)
            j = int(np.argmin(vals))
            if vals[j] < best:
                best, x = float(vals[j]), trial[j]
            else:
                break
        else:
            converged = False
        step /= 2
    converged = converged and step <= STEP_TOL
    return best, MeasurementSetting(float(x[0]), float(x[1])), converged


def discord_bruteforce(
    rho: np.ndarray, measured="A", grid_n: int = 64, refine_iters: int = 40
) -> float:
    """Discord ``S(rho_measured) - S(rho_AB) + min_M sum_k p_k S(rho_k)``.

    Emits :class:`ConvergenceWarning` (and still returns the best value found)
    when the refinement did not settle at its step floor.
    """
    rho = _two_qubit(rho)
    smin, setting, converged = minimize_conditional_entropy(rho, measured, grid_n, refine_iters)
    if not converged:
        warnings.warn(
            f"discord refinement did not converge (best at theta={setting.theta:.6g}, "
            f"phi={setting.phi:.6g})",
            ConvergenceWarning,
            stacklevel=2,
        )
    s_m = entropy_of_spectrum(np.linalg.eigvalsh(partial_trace(rho, [_measured_index(measured)])))
    s_ab = entropy_of_spectrum(np.linalg.eigvalsh(rho))
    return max(0.0, s_m - s_ab + smin)
