"""Parameter sweeps over the overlap p, figure presets, and CSV/JSON output."""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import __version__, multipartite
from .errors import SchemeError
from .spin import (
    CatState,
    HalfInt,
    Parity,
    SplitScheme,
    enumerate_bipartitions,
    enumerate_tripartitions,
    half,
)

MEASURES = (
    "C_pure",
    "E_pure",
    "C_pair",
    "E_pair",
    "D_right",
    "D_left",
    "total",
    "deltaE",
    "deltaD",
    "conservation_residuals",
)
BIPARTITE_MEASURES = ("C_pure", "E_pure", "D_right", "D_left")
DEFAULT_STEPS = 201
SIG_DIGITS = 12


def fmt(value: float) -> str:
    return format(float(value), f".{SIG_DIGITS}g")


@dataclass(frozen=True)
class SweepSpec:
    j: HalfInt
    m: Parity
    schemes: object = "all"  # "all" or a sequence of SplitScheme
    p_start: float = 0.0
    p_end: float = 1.0
    steps: int = DEFAULT_STEPS
    measures: tuple = ("E_pure",)
    arity: int = 3  # used when schemes == "all"

    def __post_init__(self):
        object.__setattr__(self, "j", half(self.j))
        object.__setattr__(self, "m", Parity.coerce(self.m))
        object.__setattr__(self, "measures", tuple(self.measures))
        if not 0.0 <= self.p_start < self.p_end <= 1.0:
            raise SchemeError(
                f"need 0 <= p_start < p_end <= 1, got [{self.p_start}, {self.p_end}]"
            )
        if self.steps < 2:
            raise SchemeError(f"steps must be at least 2, got {self.steps}")
        unknown = [x for x in self.measures if x not in MEASURES]
        if unknown:
            raise SchemeError(f"unknown measures {unknown}; choose from {', '.join(MEASURES)}")
        if self.schemes != "all":
            schemes = tuple(
                s if isinstance(s, SplitScheme) else SplitScheme(tuple(s)) for s in self.schemes
            )
            object.__setattr__(self, "schemes", schemes)

    def resolved_schemes(self) -> tuple[SplitScheme, ...]:
        valid = enumerate_bipartitions(self.j) + enumerate_tripartitions(self.j)
        if self.schemes == "all":
            chosen = enumerate_bipartitions(self.j) if self.arity == 2 else enumerate_tripartitions(self.j)
            if not chosen:
                raise SchemeError(f"j={self.j} has no {self.arity}-part schemes")
            return tuple(chosen)
        for s in self.schemes:
            if s not in valid:
                listing = "; ".join(str(v) for v in valid)
                raise SchemeError(f"scheme ({s}) is not a split of j={self.j}; valid: {listing}")
        if len({len(s) for s in self.schemes}) > 1:
            raise SchemeError("cannot mix two- and three-part schemes in one sweep")
        return self.schemes

    def grid(self) -> np.ndarray:
        return np.linspace(self.p_start, self.p_end, self.steps)


@dataclass
class Row:
    p: float
    scheme: str
    m: str
    values: dict
    limit: bool = False


@dataclass
class CorrelationReport:
    meta: dict
    columns: list
    rows: list = field(default_factory=list)


def _pair_label(a: int, b: int) -> str:
    return f"[{a}{b}]"


def measure_columns(measures: Sequence[str], arity: int) -> list[str]:
    cols = []
    for name in measures:
        if arity == 2:
            if name not in BIPARTITE_MEASURES:
                raise SchemeError(f"measure {name!r} needs a three-part scheme")
            cols.append(name)
        elif name in ("C_pure", "E_pure", "deltaE", "deltaD"):
            cols += [f"{name}[{k}]" for k in range(3)]
        elif name in ("C_pair", "E_pair", "D_right", "D_left"):
            cols += [name + _pair_label(a, b) for a, b in multipartite.PAIRS]
        elif name == "total":
            cols += ["E_total", "D_total"]
        elif name == "conservation_residuals":
            cols += ["res_sum_discord", "res_delta_plus", "res_delta_minus", "res_total"]
    return cols


def _bipartite_values(state: CatState, scheme: SplitScheme, measures) -> dict:
    rec = multipartite.bipartite_record(state, scheme)
    table = {"C_pure": rec.concurrence, "E_pure": rec.eof, "D_right": rec.discord, "D_left": rec.discord}
    return {name: table[name] for name in measures}


def _tripartite_values(state: CatState, scheme: SplitScheme, measures) -> dict:
    rec = multipartite.tripartite_record(state, scheme)
    out = {}
    for name in measures:
        if name in ("C_pure", "E_pure", "deltaE", "deltaD"):
            seq = {
                "C_pure": rec.one_vs_rest_concurrence,
                "E_pure": rec.one_vs_rest,
                "deltaE": rec.delta_eof,
                "deltaD": rec.delta_discord,
            }[name]
            out.update({f"{name}[{k}]": seq[k] for k in range(3)})
        elif name in ("C_pair", "E_pair"):
            src = rec.pair_concurrence if name == "C_pair" else rec.pair_eof
            out.update({name + _pair_label(a, b): src[a, b] for a, b in multipartite.PAIRS})
        elif name == "D_right":
            out.update({name + _pair_label(a, b): rec.discord[a, b] for a, b in multipartite.PAIRS})
        elif name == "D_left":
            out.update({name + _pair_label(a, b): rec.discord[b, a] for a, b in multipartite.PAIRS})
        elif name == "total":
            out.update({"E_total": rec.total_eof, "D_total": rec.total_discord})
        elif name == "conservation_residuals":
            res = multipartite.conservation_residuals(state, scheme)
            out.update({f"res_{k}": v for k, v in res.items()})
    return out


def run_sweep(spec: SweepSpec) -> CorrelationReport:
    """One row per p value per scheme, ordered by p then scheme."""
    schemes = spec.resolved_schemes()
    arity = len(schemes[0])
    columns = measure_columns(spec.measures, arity)
    report = CorrelationReport(
        meta={
            "j": str(spec.j),
            "m": str(spec.m.value),
            "scheme": "all" if spec.schemes == "all" else ";".join(str(s) for s in schemes),
            "steps": spec.steps,
            "p_start": spec.p_start,
            "p_end": spec.p_end,
            "measures": list(spec.measures),
            "version": __version__,
        },
        columns=columns,
    )
    if not spec.measures:
        return report
    values_for = _bipartite_values if arity == 2 else _tripartite_values
    for p in spec.grid():
        state = CatState(spec.j, spec.m, float(p))
        for scheme in schemes:
            report.rows.append(
                Row(
                    p=float(p),
                    scheme=str(scheme),
                    m=str(spec.m.value),
                    values=values_for(state, scheme, spec.measures),
                    limit=state.degenerate,
                )
            )
    return report


@dataclass(frozen=True)
class FigurePreset:
    id: str
    j: str
    parities: tuple
    schemes: tuple
    measure: str
    caption: str

    def sweep_specs(self, steps: int = DEFAULT_STEPS) -> list[SweepSpec]:
        return [
            SweepSpec(
                j=self.j,
                m=m,
                schemes=tuple(SplitScheme.parse(s) for s in self.schemes),
                steps=steps,
                measures=(self.measure,),
            )
            for m in self.parities
        ]


def _preset(id, j, parities, schemes, measure, caption):
    return FigurePreset(id, j, tuple(parities), tuple(schemes), measure, caption)


_J2_BI = ("3/2,1/2", "1,1")
_J2_TRI = ("1/2,1/2,1", "1,1/2,1/2")
_J2_TRI_D = ("1,1/2,1/2", "1/2,1/2,1")
_J3 = ("1,1,1", "1/2,1/2,2", "1/2,1,3/2")
_THIRDS = ("1/2,1/2,1/2",)

FIGURES = {
    p.id: p
    for p in (
        _preset("fig1", "2", [0], _J2_BI, "E_pure", "pairwise EoF, j=2 bipartitions, m=0"),
        _preset("fig2", "2", [1], _J2_BI, "E_pure", "pairwise EoF, j=2 bipartitions, m=1"),
        _preset("fig3", "3/2", [0, 1], _THIRDS, "deltaE", "EoF monogamy deficit, (1/2,1/2,1/2), m=0 and m=1"),
        _preset("fig4", "2", [0], _J2_TRI, "deltaE", "EoF monogamy deficit, j=2, m=0"),
        _preset("fig5", "2", [1], _J2_TRI, "deltaE", "EoF monogamy deficit, j=2, m=1"),
        _preset("fig6", "3", [0], _J3, "total", "multipartite correlations, j=3, m=0"),
        _preset("fig7", "3", [1], _J3, "total", "multipartite correlations, j=3, m=1"),
        _preset("fig8", "3/2", [0, 1], _THIRDS, "deltaD", "discord monogamy deficit, (1/2,1/2,1/2), m=0 and m=1"),
        _preset("fig9", "2", [0], _J2_TRI_D, "deltaD", "discord monogamy deficit, j=2, m=0"),
        _preset("fig10", "2", [1], _J2_TRI_D, "deltaD", "discord monogamy deficit, j=2, m=1"),
    )
}

# figure curve -> column of the underlying sweep
_CURVE_SOURCE = {"E_pure": ("E", "E_pure"), "deltaE": ("deltaE", "deltaE[0]"),
                 "deltaD": ("deltaD", "deltaD[0]"), "total": ("D", "D_total")}


def figure(fig_id: str, steps: int = DEFAULT_STEPS) -> CorrelationReport:
    """Plot-ready table for one of the figure presets: a p column plus one column per curve."""
    try:
        preset = FIGURES[fig_id]
    except KeyError:
        raise SchemeError(f"unknown figure {fig_id!r}; choose from {', '.join(FIGURES)}") from None
    prefix, source = _CURVE_SOURCE[preset.measure]
    multi_m = len(preset.parities) > 1
    columns, sweeps = [], []
    for spec in preset.sweep_specs(steps):
        sweeps.append((spec, run_sweep(spec)))
        for s in spec.resolved_schemes():
            tag = f";m={spec.m.value}" if multi_m else ""
            columns.append(f"{prefix}({' '.join(str(x) for x in s)}{tag})")

    rows = []
    n_schemes = len(preset.schemes)
    for i in range(steps):
        values, limit, p = {}, False, None
        col = iter(columns)
        for spec, rep in sweeps:
            for row in rep.rows[i * n_schemes:(i + 1) * n_schemes]:
                values[next(col)] = row.values[source]
                limit = limit or row.limit
                p = row.p
        rows.append(
            Row(
                p=p,
                scheme="|".join(preset.schemes),
                m="|".join(str(m) for m in preset.parities),
                values=values,
                limit=limit,
            )
        )
    return CorrelationReport(
        meta={
            "figure": preset.id,
            "caption": preset.caption,
            "j": preset.j,
            "m": "|".join(str(m) for m in preset.parities),
            "scheme": "|".join(preset.schemes),
            "steps": steps,
            "measures": [preset.measure],
            "version": __version__,
        },
        columns=columns,
        rows=rows,
    )


def to_csv(report: CorrelationReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["p", "scheme", "m", *report.columns, "limit"])
    for row in report.rows:
        writer.writerow(
            [fmt(row.p), row.scheme, row.m, *(fmt(row.values[c]) for c in report.columns), int(row.limit)]
        )
    return buf.getvalue()


def to_json(report: CorrelationReport) -> str:
    doc = {
        "meta": report.meta,
        "columns": list(report.columns),
        "rows": [
            {
                "p": float(fmt(row.p)),
                "scheme": row.scheme,
                "m": row.m,
                "limit": bool(row.limit),
                "values": {c: float(fmt(row.values[c])) for c in report.columns},
            }
            for row in report.rows
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def emit(report: CorrelationReport, format: str = "csv", path=None) -> str:
    """Serialize ``report`` as CSV or JSON; write it to ``path`` when given and return the text."""
    if format == "csv":
        text = to_csv(report)
    elif format == "json":
        text = to_json(report)
    else:
        raise ValueError(f"format must be 'csv' or 'json', got {format!r}")
    if path is not None and str(path) != "-":
        try:
            with open(path, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            raise OSError(f"cannot write report to {os.fspath(path)!r}: {exc}") from exc
    return text


def read_csv(path) -> tuple[list[str], list[dict]]:
    """Header and rows (as dicts of strings) of a CSV written by :func:`emit`."""
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        return list(reader.fieldnames or []), list(reader)
