"""Analytic p -> 1 values for odd cat states (W-type limit).

With ``p = 1 - eps`` every closed-form ratio is ``0/0`` at ``eps = 0``;
expanding ``p**(2k) = 1 - 2k eps + O(eps**2)`` gives the finite values below.
"""

from __future__ import annotations

import math

from .spin import SpinLike, half


def _f(x: SpinLike) -> float:
    return float(half(x))


def w_half_product(v: SpinLike, j: SpinLike) -> float:
    """Limit of ``(1 + p**(2u)) (1 - p**(2v)) / (2 (1 - p**(2j)))`` with ``u + v = j``."""
    return _f(v) / _f(j)


def w_pure_ratio(k: SpinLike, j: SpinLike) -> float:
    """Limit of ``(p**(2k) - p**(2(j-k))) / (1 - p**(2j))``."""
    k, j = _f(k), _f(j)
    return (j - 2 * k) / j


def w_pure_concurrence(k: SpinLike, j: SpinLike) -> float:
    """Concurrence of the split ``k | j - k`` of the W-type state: ``2 sqrt(k (j-k)) / j``."""
    k, j = _f(k), _f(j)
    return 2 * math.sqrt(k * (j - k)) / j


def w_pair_concurrence(l1: SpinLike, l2: SpinLike, j: SpinLike) -> float:
    """Concurrence between parts ``l1`` and ``l2`` of the W-type state: ``2 sqrt(l1 l2) / j``.

    For a two-part split (``l1 + l2 = j``) this is ``2 sqrt(j1 j2) / (j1 + j2)``.
    """
    return 2 * math.sqrt(_f(l1) * _f(l2)) / _f(j)
