"""Closed form vs. matrix oracle comparisons over the standard parameter grid."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import closed, multipartite
from .discord import discord_bruteforce
from .measures import eof_from_concurrence, wootters_concurrence
from .qubits import mixed_two_qubit_closed, partial_trace, projector, pure_bipartite_state, tripartite_state
from .spin import CatState, Parity, SplitScheme, enumerate_tripartitions, half

GRID_J = ("3/2", "2", "5/2", "3")
GRID_P = tuple(round(0.05 * k, 10) for k in range(1, 20))

TOLERANCES = {
    "density_matrix": 1e-10,
    "concurrence_pair": 1e-10,
    "eof_pair": 1e-10,
    "concurrence_pure": 1e-10,
    "discord": 1e-6,
    "conservation": 1e-10,
}


@dataclass(frozen=True)
class GridCase:
    state: CatState
    scheme: SplitScheme


def grid_cases(js=GRID_J, ps=GRID_P) -> Iterator[GridCase]:
    for j in js:
        for scheme in enumerate_tripartitions(j):
            for m in Parity:
                for p in ps:
                    yield GridCase(CatState(half(j), m, p), scheme)


def discord_cases(n: int = 100, seed: int = 20240607) -> list[tuple[CatState, SplitScheme, int, int]]:
    """Deterministic subsample of (state, scheme, measured, other) directed-discord cases."""
    cases = [
        (case.state, case.scheme, a, b)
        for case in grid_cases()
        for a, b in multipartite.ORDERED_PAIRS
    ]
    rng = np.random.default_rng(seed)
    idx = np.sort(rng.choice(len(cases), size=min(n, len(cases)), replace=False))
    return [cases[i] for i in idx]


def run(discord_samples: int = 100) -> dict[str, dict]:
    """Max residual per check, with its tolerance and wall time."""
    worst = dict.fromkeys(("density_matrix", "concurrence_pair", "eof_pair", "concurrence_pure", "conservation"), 0.0)
    start = time.perf_counter()
    for case in grid_cases():
        state, scheme = case.state, case.scheme
        psi = tripartite_state(state, scheme)
        for a, b in multipartite.PAIRS:
            rho = mixed_two_qubit_closed(state, scheme[a], scheme[b])
            worst["density_matrix"] = max(
                worst["density_matrix"], float(np.max(np.abs(rho - partial_trace(psi, [a, b]))))
            )
            c_matrix = wootters_concurrence(rho)
            worst["concurrence_pair"] = max(
                worst["concurrence_pair"],
                abs(closed.concurrence_mixed_pair(state, scheme[a], scheme[b]) - c_matrix),
            )
            worst["eof_pair"] = max(
                worst["eof_pair"],
                abs(closed.eof_mixed_pair(state, scheme[a], scheme[b]) - eof_from_concurrence(c_matrix)),
            )
        for k in range(3):
            rest = state.j - scheme[k]
            split = SplitScheme((scheme[k], rest))
            c_pure = wootters_concurrence(projector(pure_bipartite_state(state, split)))
            worst["concurrence_pure"] = max(
                worst["concurrence_pure"],
                abs(closed.concurrence_pure_bipartite(state, split) - c_pure),
            )
        worst["conservation"] = max(
            worst["conservation"], max(multipartite.conservation_residuals(state, scheme).values())
        )
    elapsed = time.perf_counter() - start
    out = {k: {"max_residual": v, "tolerance": TOLERANCES[k], "seconds": elapsed} for k, v in worst.items()}

    if discord_samples:
        start = time.perf_counter()
        worst_d = 0.0
        for state, scheme, a, b in discord_cases(discord_samples):
            lo, hi = min(a, b), max(a, b)
            rho = mixed_two_qubit_closed(state, scheme[lo], scheme[hi])
            brute = discord_bruteforce(rho, measured="A" if a == lo else "B")
            worst_d = max(worst_d, abs(brute - multipartite.directed_discord(state, scheme, a, b)))
        out["discord"] = {
            "max_residual": worst_d,
            "tolerance": TOLERANCES["discord"],
            "seconds": time.perf_counter() - start,
        }
    return out


def passed(results: dict[str, dict]) -> bool:
    return all(r["max_residual"] <= r["tolerance"] for r in results.values())
