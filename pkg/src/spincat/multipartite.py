"""Tripartite correlation totals, pairwise discord balances, conservation and monogamy.

Part indices refer to positions in a three-part :class:`SplitScheme`. For an
ordered pair ``(a, b)``, ``D(a -> b)`` is the discord of ``rho_ab`` with part
``a`` measured.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

from . import closed
from .errors import SchemeError
from .spin import CatState, Parity, SpinLike, SplitScheme, check_scheme, half

PAIRS = ((0, 1), (0, 2), (1, 2))
ORDERED_PAIRS = tuple(permutations(range(3), 2))
CYCLIC_PAIRS = ((0, 1), (1, 2), (2, 0))


def _others(head: int) -> tuple[int, int]:
    if head not in (0, 1, 2):
        raise SchemeError(f"head must be 0, 1 or 2, got {head!r}")
    return tuple(k for k in range(3) if k != head)


def directed_discord(state: CatState, scheme: SplitScheme, a: int, b: int) -> float:
    return closed.discord_closed(state, scheme[a], scheme[b], closed.RIGHT)


def pair_eof(state: CatState, scheme: SplitScheme, a: int, b: int) -> float:
    return closed.eof_mixed_pair(state, scheme[a], scheme[b])


def total_eof(state: CatState, scheme: SplitScheme) -> float:
    """Mean of the three pair and three one-vs-rest entanglements of formation."""
    scheme = check_scheme(state, scheme, size=3)
    pairs = sum(pair_eof(state, scheme, a, b) for a, b in PAIRS)
    pure = sum(closed.eof_one_vs_rest(state, k) for k in scheme)
    return (pairs + pure) / 6


def total_discord(state: CatState, scheme: SplitScheme) -> float:
    """Mean over all twelve directed bipartitions of the discord.

    The six one-vs-rest entries are pure splits, where discord in either
    direction equals the entropy of entanglement.
    """
    scheme = check_scheme(state, scheme, size=3)
    mixed = sum(directed_discord(state, scheme, a, b) for a, b in ORDERED_PAIRS)
    pure = sum(2 * closed.eof_one_vs_rest(state, k) for k in scheme)
    return (mixed + pure) / 12


def delta_plus(state: CatState, l1: SpinLike, l2: SpinLike) -> float:
    """Average of the two directed discords of ``rho_{l1 l2}``."""
    return 0.5 * (
        closed.discord_closed(state, l1, l2, closed.RIGHT)
        + closed.discord_closed(state, l2, l1, closed.RIGHT)
    )


def delta_minus(state: CatState, l1: SpinLike, l2: SpinLike) -> float:
    """Half the difference ``D(l1 -> l2) - D(l2 -> l1)``."""
    return 0.5 * (
        closed.discord_closed(state, l1, l2, closed.RIGHT)
        - closed.discord_closed(state, l2, l1, closed.RIGHT)
    )


def monogamy_delta_eof(state: CatState, scheme: SplitScheme, head: int = 0) -> float:
    """``E(head | rest) - E(head, o1) - E(head, o2)``; nonnegative means monogamous."""
    scheme = check_scheme(state, scheme, size=3)
    o1, o2 = _others(head)
    return (
        closed.eof_one_vs_rest(state, scheme[head])
        - pair_eof(state, scheme, head, o1)
        - pair_eof(state, scheme, head, o2)
    )


def monogamy_delta_discord(state: CatState, scheme: SplitScheme, head: int = 0) -> float:
    """``D(head -> rest) - D(head -> o1) - D(head -> o2)`` with ``head`` measured."""
    scheme = check_scheme(state, scheme, size=3)
    o1, o2 = _others(head)
    return (
        closed.eof_one_vs_rest(state, scheme[head])
        - directed_discord(state, scheme, head, o1)
        - directed_discord(state, scheme, head, o2)
    )


def conservation_residuals(state: CatState, scheme: SplitScheme) -> dict[str, float]:
    """Largest violations of the discord/EoF bookkeeping identities.

    ``sum_discord``: for every part ``b``, ``sum_a D(a -> b) = sum_a E(a, b)``.
    ``delta_plus``: the three pair averages sum to the three pair EoFs.
    ``delta_minus``: the balances around the cycle 0 -> 1 -> 2 -> 0 cancel.
    ``total``: ``|total_discord - total_eof|``.
    """
    scheme = check_scheme(state, scheme, size=3)
    d = {(a, b): directed_discord(state, scheme, a, b) for a, b in ORDERED_PAIRS}
    e = {}
    for a, b in PAIRS:
        e[a, b] = e[b, a] = pair_eof(state, scheme, a, b)
    per_part = [
        abs(sum(d[a, b] for a in range(3) if a != b) - sum(e[a, b] for a in range(3) if a != b))
        for b in range(3)
    ]
    plus = sum(0.5 * (d[a, b] + d[b, a]) for a, b in PAIRS)
    minus = sum(0.5 * (d[a, b] - d[b, a]) for a, b in CYCLIC_PAIRS)
    pair_sum = sum(e[a, b] for a, b in PAIRS)
    return {
        "sum_discord": max(per_part),
        "delta_plus": abs(plus - pair_sum),
        "delta_minus": abs(minus),
        "total": abs(total_discord(state, scheme) - total_eof(state, scheme)),
    }


@dataclass(frozen=True)
class BipartiteRecord:
    scheme: SplitScheme
    m: Parity
    p: float
    concurrence: float
    eof: float
    limit: bool = False

    @property
    def discord(self) -> float:
        # pure state: discord in either direction is the entropy of entanglement
        return self.eof


@dataclass(frozen=True)
class TripartiteRecord:
    scheme: SplitScheme
    m: Parity
    p: float
    discord: dict = field(repr=False)
    pair_concurrence: dict = field(repr=False)
    pair_eof: dict = field(repr=False)
    one_vs_rest: tuple
    one_vs_rest_concurrence: tuple
    total_eof: float
    total_discord: float
    delta_plus: dict = field(repr=False)
    delta_minus: dict = field(repr=False)
    delta_eof: tuple
    delta_discord: tuple
    limit: bool = False


def bipartite_record(state: CatState, scheme: SplitScheme) -> BipartiteRecord:
    scheme = check_scheme(state, scheme, size=2)
    return BipartiteRecord(
        scheme=scheme,
        m=state.m,
        p=state.p,
        concurrence=closed.concurrence_pure_bipartite(state, scheme),
        eof=closed.eof_pure_bipartite(state, scheme),
        limit=state.degenerate,
    )


def tripartite_record(state: CatState, scheme: SplitScheme) -> TripartiteRecord:
    scheme = check_scheme(state, scheme, size=3)
    discord = {(a, b): directed_discord(state, scheme, a, b) for a, b in ORDERED_PAIRS}
    return TripartiteRecord(
        scheme=scheme,
        m=state.m,
        p=state.p,
        discord=discord,
        pair_concurrence={
            (a, b): closed.concurrence_mixed_pair(state, scheme[a], scheme[b]) for a, b in PAIRS
        },
        pair_eof={(a, b): pair_eof(state, scheme, a, b) for a, b in PAIRS},
        one_vs_rest=tuple(closed.eof_one_vs_rest(state, k) for k in scheme),
        one_vs_rest_concurrence=tuple(closed.concurrence_one_vs_rest(state, k) for k in scheme),
        total_eof=total_eof(state, scheme),
        total_discord=total_discord(state, scheme),
        delta_plus={(a, b): 0.5 * (discord[a, b] + discord[b, a]) for a, b in PAIRS},
        delta_minus={(a, b): 0.5 * (discord[a, b] - discord[b, a]) for a, b in PAIRS},
        delta_eof=tuple(monogamy_delta_eof(state, scheme, h) for h in range(3)),
        delta_discord=tuple(monogamy_delta_discord(state, scheme, h) for h in range(3)),
        limit=state.degenerate,
    )


def limit_values(scheme: SplitScheme, m, which_limit: str):
    """Record of all measures in the ``p -> 0`` (``"p0"``) or ``p -> 1`` (``"p1"``) limit.

    ``p0`` is the GHZ-type point; ``p1`` is the product state for even ``m``
    and the W-type state for odd ``m`` (delivered through the analytic limits).
    """
    if which_limit not in ("p0", "p1"):
        raise ValueError(f"which_limit must be 'p0' or 'p1', got {which_limit!r}")
    if not isinstance(scheme, SplitScheme):
        scheme = SplitScheme(tuple(half(x) for x in scheme))
    state = CatState(scheme.j, m, 0.0 if which_limit == "p0" else 1.0)
    if len(scheme) == 2:
        return bipartite_record(state, scheme)
    return tripartite_record(state, scheme)
