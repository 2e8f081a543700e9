"""Closed-form correlation measures of split even/odd spin coherent states.

Every function takes a :class:`~spincat.spin.CatState` and part spins. At the
degenerate odd point (``m`` odd, ``p = 1``) the ``0/0`` ratios are replaced by
their analytic limits from :mod:`spincat.limits`; nothing divides by zero.
"""

from __future__ import annotations

import math

from . import limits
from .errors import SchemeError
from .measures import binary_entropy, eof_from_concurrence
from .spin import CatState, HalfInt, SpinLike, SplitScheme, check_scheme, half

RIGHT, LEFT = "right", "left"


def _denominator(state: CatState) -> float:
    return 1.0 + state.c * state.pow(state.j)


def _clip01(x: float) -> float:
    return min(max(x, 0.0), 1.0)


def _check_part(state: CatState, k: SpinLike) -> HalfInt:
    k = half(k)
    if not 0 < k.twice < state.j.twice:
        raise SchemeError(f"part {k} is not a proper part of j={state.j}")
    return k


def _check_pair(state: CatState, l1: SpinLike, l2: SpinLike) -> tuple[HalfInt, HalfInt, HalfInt]:
    l1, l2 = half(l1), half(l2)
    if l1.twice < 1 or l2.twice < 1 or (l1 + l2).twice >= state.j.twice:
        raise SchemeError(f"({l1}, {l2}) is not a pair of a three-part split of j={state.j}")
    return l1, l2, state.j - l1 - l2


def half_product(state: CatState, u: SpinLike, v: SpinLike) -> float:
    """``(1 + p**(2u)) (1 + cos(m pi) p**(2v)) / (2 (1 + cos(m pi) p**(2j)))`` with ``u + v = j``.

    Eigenvalue of the reduced state of the parts carrying total spin ``v``
    (or, equivalently, ``u``).
    """
    u, v = half(u), half(v)
    if (u + v) != state.j:
        raise SchemeError(f"{u} + {v} != j={state.j}")
    if state.degenerate:
        return limits.w_half_product(v, state.j)
    value = 0.5 * (1 + state.pow(u)) * (1 + state.c * state.pow(v)) / _denominator(state)
    return _clip01(value)


def pure_ratio(state: CatState, k: SpinLike) -> float:
    """``(p**(2k) + cos(m pi) p**(2(j-k))) / (1 + cos(m pi) p**(2j))``."""
    k = _check_part(state, k)
    if state.degenerate:
        return limits.w_pure_ratio(k, state.j)
    return (state.pow(k) + state.c * state.pow(state.j - k)) / _denominator(state)


def concurrence_one_vs_rest(state: CatState, k: SpinLike) -> float:
    """Concurrence of the pure split ``k | j - k``."""
    k = _check_part(state, k)
    if state.degenerate:
        return limits.w_pure_concurrence(k, state.j)
    rest = state.j - k
    num = math.sqrt((1 - state.pow(k) ** 2) * (1 - state.pow(rest) ** 2))
    return _clip01(num / _denominator(state))


def eof_one_vs_rest(state: CatState, k: SpinLike) -> float:
    """Entanglement of formation of the pure split ``k | j - k``."""
    return binary_entropy(_clip01(0.5 + 0.5 * pure_ratio(state, k)))


def concurrence_pure_bipartite(state: CatState, scheme: SplitScheme) -> float:
    scheme = check_scheme(state, scheme, size=2)
    return concurrence_one_vs_rest(state, scheme[0])


def eof_pure_bipartite(state: CatState, scheme: SplitScheme) -> float:
    scheme = check_scheme(state, scheme, size=2)
    return eof_one_vs_rest(state, scheme[0])


def eof_tripartite_pure(state: CatState, scheme: SplitScheme, head: int) -> float:
    """Entanglement between part ``head`` and the other two parts of a three-part split."""
    scheme = check_scheme(state, scheme, size=3)
    return eof_one_vs_rest(state, scheme[head])


def concurrence_mixed_pair(state: CatState, l1: SpinLike, l2: SpinLike) -> float:
    """Concurrence of the two-part reduced state after tracing out ``j - l1 - l2``."""
    l1, l2, l3 = _check_pair(state, l1, l2)
    if state.degenerate:
        return limits.w_pair_concurrence(l1, l2, state.j)
    num = state.pow(l3) * math.sqrt((1 - state.pow(l1) ** 2) * (1 - state.pow(l2) ** 2))
    return _clip01(num / _denominator(state))


def eof_mixed_pair(state: CatState, l1: SpinLike, l2: SpinLike) -> float:
    c = concurrence_mixed_pair(state, l1, l2)
    return binary_entropy(0.5 + 0.5 * math.sqrt(max(0.0, 1 - c * c)))


def joint_eigenvalues(state: CatState, l1: SpinLike, l2: SpinLike) -> tuple[float, float]:
    """The two nonzero eigenvalues of the pair state ``rho_{l1 l2}``."""
    l1, l2, l3 = _check_pair(state, l1, l2)
    lam = half_product(state, l3, l1 + l2)
    return lam, 1.0 - lam


def marginal_eigenvalues(state: CatState, l: SpinLike) -> tuple[float, float]:
    """Eigenvalues of the single-part state ``rho_l``."""
    l = _check_part(state, l)
    lam = half_product(state, l, state.j - l)
    return lam, 1.0 - lam


def mutual_information_closed(state: CatState, l1: SpinLike, l2: SpinLike) -> float:
    l1, l2, _ = _check_pair(state, l1, l2)
    s1 = binary_entropy(marginal_eigenvalues(state, l1)[0])
    s2 = binary_entropy(marginal_eigenvalues(state, l2)[0])
    s12 = binary_entropy(joint_eigenvalues(state, l1, l2)[0])
    return max(0.0, s1 + s2 - s12)


def smin_closed(state: CatState, l1: SpinLike, l2: SpinLike, direction: str = RIGHT) -> float:
    """Minimal conditional entropy of ``rho_{l1 l2}`` after measuring ``l1`` (right) or ``l2`` (left).

    Equals the entanglement of formation between the unmeasured part and the traced-out one.
    """
    l1, l2, l3 = _check_pair(state, l1, l2)
    measured, kept = _orient(l1, l2, direction)
    return eof_mixed_pair(state, kept, l3)


def _orient(l1: HalfInt, l2: HalfInt, direction: str) -> tuple[HalfInt, HalfInt]:
    if direction == RIGHT:
        return l1, l2
    if direction == LEFT:
        return l2, l1
    raise ValueError(f"direction must be 'right' or 'left', got {direction!r}")


def discord_closed(state: CatState, l1: SpinLike, l2: SpinLike, direction: str = RIGHT) -> float:
    """Discord of ``rho_{l1 l2}`` measured on ``l1`` (``right``) or ``l2`` (``left``)."""
    l1, l2, l3 = _check_pair(state, l1, l2)
    measured, _ = _orient(l1, l2, direction)
    s_measured = binary_entropy(marginal_eigenvalues(state, measured)[0])
    s_joint = binary_entropy(joint_eigenvalues(state, l1, l2)[0])
    return max(0.0, s_measured - s_joint + smin_closed(state, l1, l2, direction))
