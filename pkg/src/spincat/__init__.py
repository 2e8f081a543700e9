"""Bipartite and tripartite quantum correlations of even and odd spin coherent states."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    ConvergenceWarning,
    DegenerateCatError,
    DensityMatrixError,
    RankError,
    SchemeError,
    SpinCatError,
)
from .spin import (  # noqa: E402
    CatState,
    HalfInt,
    Parity,
    SplitScheme,
    cat_normalization,
    coherent_pair_overlap,
    enumerate_bipartitions,
    enumerate_tripartitions,
    half,
    overlap_from_eta,
)
from .qubits import (  # noqa: E402
    eigensystem,
    logical_amplitudes,
    mixed_two_qubit_closed,
    partial_trace,
    pure_bipartite_state,
    tripartite_state,
)
from .measures import (  # noqa: E402
    binary_entropy,
    eof_from_concurrence,
    koashi_winter_smin,
    mutual_information,
    von_neumann_entropy,
    wootters_concurrence,
)
from .discord import MeasurementSetting, discord_bruteforce  # noqa: E402
from .closed import (  # noqa: E402
    concurrence_mixed_pair,
    concurrence_pure_bipartite,
    discord_closed,
    eof_mixed_pair,
    eof_pure_bipartite,
    eof_tripartite_pure,
)
from .multipartite import (  # noqa: E402
    delta_minus,
    delta_plus,
    limit_values,
    monogamy_delta_discord,
    monogamy_delta_eof,
    total_discord,
    total_eof,
)
