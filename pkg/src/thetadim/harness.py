"""Theorem-conformance sweeps over every canonical spec in a parameter box."""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from itertools import chain

from . import _kernels
from .constructions import FOUR_EXCEPTIONS, BetaPrediction, matching_theorems, predict_beta
from .model import GraphSpec, canonical_specs
from .resolving import (
    BetaResult,
    SearchLimitExceeded,
    check_ip_internal_vertex_condition,
    check_twin_path_lemma,
    closer_center,
    ip_lower_bound,
    khuller_conditions,
    metric_dimension,
    verify_resolving,
)

SCHEMA_VERSION = 1
CSV_COLUMNS = ("spec", "n", "m", "beta", "pred_lo", "pred_hi", "theorem", "witness_size", "flags", "ms")


@dataclass(frozen=True)
class SweepConfig:
    min_m: int = 3
    max_m: int = 4
    max_s: int = 6
    min_s: int = 1
    guard_n: int = 32
    max_k: int = 6
    witness_cap: int = 64
    jobs: int = 1
    fmt: str = "json"
    out: str | None = None
    pruned: bool = False
    timing: bool = False

    def __post_init__(self):
        if self.min_m < 2 or self.max_m < self.min_m:
            raise ValueError(f"bad multiplicity range [{self.min_m}, {self.max_m}]")
        if self.min_s < 1 or self.max_s < self.min_s:
            raise ValueError(f"bad length range [{self.min_s}, {self.max_s}]")
        if self.fmt not in ("json", "csv"):
            raise ValueError(f"unknown format {self.fmt!r}")

    def specs(self) -> list[GraphSpec]:
        per_m = (canonical_specs(m, self.max_s, self.min_s) for m in range(self.min_m, self.max_m + 1))
        return sorted(chain.from_iterable(per_m), key=lambda s: s.lengths)


@dataclass
class Row:
    spec: str
    n: int
    m: int
    beta: int | str
    prediction: BetaPrediction
    basis_count: int | None = None
    applicable: list[str] = field(default_factory=list)
    witness_sizes: dict[str, int] = field(default_factory=dict)
    flags: dict[str, bool] = field(default_factory=dict)
    ms: float | None = None

    @property
    def passed(self) -> bool:
        return all(self.flags.values())

    def to_dict(self) -> dict:
        p = self.prediction
        out = {
            "spec": self.spec,
            "n": self.n,
            "m": self.m,
            "beta": self.beta,
            "basis_count": self.basis_count,
            "prediction": {"kind": p.kind, "lo": p.lo, "hi": p.hi, "theorem": p.theorem_id},
            "applicable": self.applicable,
            "witness_sizes": self.witness_sizes,
            "flags": self.flags,
            "passed": self.passed,
        }
        if self.ms is not None:
            out["ms"] = self.ms
        return out

    def csv_fields(self) -> list:
        p = self.prediction
        flags = ";".join(f"{k}={int(v)}" for k, v in self.flags.items())
        wsize = "" if p.witness is None else len(p.witness)
        ms = "" if self.ms is None else f"{self.ms:.1f}"
        return [self.spec, self.n, self.m, self.beta, p.lo, p.hi, p.theorem_id, wsize, flags, ms]


def _basis_facts(spec: GraphSpec, result: BetaResult) -> dict[str, bool]:
    """Multiplicity-4 structure of two-element metric bases."""
    flags = {"no_center_in_basis": True, "basis_avoids_shortest_paths": True,
             "basis_split_by_center": True, "khuller": True}
    shortest = {i for i, s in enumerate(spec.lengths, start=1) if s == spec.lengths[0]}
    for W in result.witnesses:
        if any(w.is_center for w in W):
            flags["no_center_in_basis"] = False
            continue
        if any(w.path in shortest for w in W):
            flags["basis_avoids_shortest_paths"] = False
        if {closer_center(spec, w) for w in W} != {1, 2}:
            flags["basis_split_by_center"] = False
        if not khuller_conditions(spec, W).all_ok:
            flags["khuller"] = False
    return flags


def evaluate_spec(spec: GraphSpec, config: SweepConfig) -> Row:
    """Brute force (within the guard), every applicable theorem, every witness."""
    t0 = time.perf_counter()
    prediction = predict_beta(spec)
    theorems = matching_theorems(spec)
    row = Row(str(spec), spec.n, spec.m, "skipped", prediction,
              applicable=[t.theorem_id for t in theorems])

    result = None
    if spec.n <= config.guard_n:
        try:
            result = metric_dimension(spec, config.witness_cap, pruned=config.pruned, max_k=config.max_k)
        except SearchLimitExceeded:
            result = None
    beta = result.beta if result is not None else None
    flags = row.flags

    own = [(t, t.predict(spec)) for t in theorems]
    exact_values = {p.lo for t, p in own if t.exact}
    flags["exact_consistent"] = len(exact_values) <= 1
    witness_ok = True
    for t, p in own:
        if p.witness is None:
            continue
        row.witness_sizes[t.theorem_id] = len(p.witness)
        if not verify_resolving(spec, p.witness).resolved or len(p.witness) != p.hi:
            witness_ok = False
        if beta is not None and t.exact and len(p.witness) != beta:
            witness_ok = False
    flags["witnesses"] = witness_ok

    if beta is not None:
        row.beta = beta
        row.basis_count = result.basis_count
        flags["total_bound"] = spec.m - 3 <= beta <= spec.m
        flags["ip_bound"] = beta >= ip_lower_bound(spec)
        flags["prediction"] = prediction.contains(beta)
        flags["all_theorems"] = all(p.contains(beta) for _, p in own)
        flags["ip_condition"] = all(check_ip_internal_vertex_condition(spec, W) for W in result.witnesses)
        flags["twin_lemma"] = all(check_twin_path_lemma(spec, W) is None for W in result.witnesses)
        if spec.m == 4:
            flags["four_exceptions"] = (beta == 4) == (spec.lengths in FOUR_EXCEPTIONS)
            if beta == 2 and not config.pruned:
                if result.truncated:
                    result = metric_dimension(spec, result.basis_count, max_k=2)
                flags.update(_basis_facts(spec, result))
    if config.timing:
        row.ms = round((time.perf_counter() - t0) * 1000, 1)
    return row


def _evaluate_star(args):
    return evaluate_spec(*args)


def run_sweep(config: SweepConfig) -> list[Row]:
    specs = config.specs()
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            return list(pool.map(_evaluate_star, [(s, config) for s in specs], chunksize=4))
    return [evaluate_spec(s, config) for s in specs]


def _header(config: SweepConfig) -> dict:
    cfg = asdict(config)
    cfg.pop("out")
    return {
        "generated_at": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "backend": _kernels.BACKEND,
        "config": cfg,
    }


def render_report(rows: list[Row], config: SweepConfig) -> str:
    if config.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for r in rows:
            writer.writerow(r.csv_fields())
        return buf.getvalue()
    doc = {
        "schema": SCHEMA_VERSION,
        "header": _header(config),
        "summary": {"rows": len(rows), "failed": sum(not r.passed for r in rows),
                    "skipped": sum(r.beta == "skipped" for r in rows)},
        "rows": [r.to_dict() for r in rows],
    }
    return json.dumps(doc, indent=1, ensure_ascii=False) + "\n"


def report_body(text: str) -> str:
    """Report text minus the volatile header, for determinism comparisons."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError:
        return text
    doc.pop("header", None)
    return json.dumps(doc, sort_keys=True)


# Theorems whose own statement is only an interval; specs they match are listed
# even when a sharper exact result also applies.
OPEN_INTERVAL_THEOREMS = ("thm:Boundfors2<s1OneDifferent", "thm:Distinct,si")


@dataclass(frozen=True)
class OpenCase:
    spec: str
    lo: int
    hi: int
    theorem: str
    beta: int | str
    best: str

    @property
    def inside(self) -> bool | None:
        if isinstance(self.beta, str):
            return None
        return self.lo <= self.beta <= self.hi


def open_cases(config: SweepConfig) -> list[OpenCase]:
    """Interval predictions paired with brute-forced values.

    One row per spec whose best prediction is an interval, plus one row per
    spec matched by an interval-only theorem family.
    """
    out = []
    for spec in config.specs():
        best = predict_beta(spec)
        intervals = [] if best.is_exact else [best]
        intervals += [t.predict(spec) for t in matching_theorems(spec)
                      if t.theorem_id in OPEN_INTERVAL_THEOREMS and t.theorem_id != best.theorem_id]
        if not intervals:
            continue
        beta: int | str = "skipped"
        if spec.n <= config.guard_n:
            try:
                beta = metric_dimension(spec, 1, pruned=config.pruned, max_k=config.max_k).beta
            except SearchLimitExceeded:
                pass
        for p in intervals:
            out.append(OpenCase(str(spec), p.lo, p.hi, p.theorem_id, beta, f"{best} ({best.theorem_id})"))
    return out


def render_open_cases(cases: list[OpenCase], fmt: str = "text") -> str:
    header = ["spec", "pred_lo", "pred_hi", "theorem", "beta", "best"]
    if fmt == "json":
        return json.dumps({"schema": SCHEMA_VERSION, "open_cases": [asdict(c) for c in cases]}, indent=1) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for c in cases:
            writer.writerow([c.spec, c.lo, c.hi, c.theorem, c.beta, c.best])
        return buf.getvalue()
    cells = [["spec", "interval", "beta", "theorem", "best prediction"]]
    cells += [[c.spec, f"[{c.lo},{c.hi}]", str(c.beta), c.theorem, c.best] for c in cases]
    widths = [max(len(r[k]) for r in cells) for k in range(len(cells[0]) - 1)]
    lines = ["  ".join(r[k].ljust(widths[k]) for k in range(len(widths))) + "  " + r[-1] for r in cells]
    return "\n".join(lines) + "\n"
