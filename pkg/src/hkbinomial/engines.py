"""Engine selection, reports, and the cross-check harness.

Three routes compute the same exact length:

* closed: the iterative closed form (fast, guarded by applicability)
* direct: per-monomial membership enumeration (budgeted by q^m)
* oracle: relation-graph union-find (budgeted by node count)

`hk` with engine="auto" prefers closed, then direct, then oracle, and
records every fallback reason.  `cross_check` runs all applicable engines
per corpus instance and treats any disagreement as a hard failure; the
closed form's boundary conventions are only trusted because this gate
exists.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .algebra import Binomial, PrimePower, parse_binomial, render
from .classify import classify, classification_summary
from .closedform import hk_closed_form_tables
from .errors import DomainError, HKError, NotApplicableError, ResourceError
from .keycheck import hk_direct_count
from .mmax import params_summary
from .oracle import hk_oracle_report

JSON_INT_LIMIT = 2**53

ENGINES = ("auto", "closed", "direct", "oracle")


@dataclass
class Config:
    enum_cap: int = 10**7
    oracle_cap: int = 10**6
    workers: int = 1
    format: str = "plain"  # plain | json | csv
    verbose: bool = False

    def __post_init__(self):
        if self.enum_cap < 1 or self.oracle_cap < 1 or self.workers < 1:
            raise DomainError("caps and worker count must be positive")
        if self.format not in ("plain", "json", "csv"):
            raise DomainError(f"unknown output format {self.format!r}")


def jsonable_int(x: int):
    """Ints that may not survive a double round-trip become decimal strings."""
    return x if -JSON_INT_LIMIT < x < JSON_INT_LIMIT else str(x)


@dataclass
class HKReport:
    p: int
    n: int
    q: int
    m: int
    value: int
    engine: str
    guard_notes: list = field(default_factory=list)
    classification: dict = field(default_factory=dict)
    mmax_params: list | None = None
    oracle_stats: dict | None = None
    tables: dict | None = None
    timing_ms: float = 0.0

    def data_dict(self) -> dict:
        """Deterministic payload; timing deliberately excluded."""
        out = {
            "p": self.p,
            "n": self.n,
            "q": jsonable_int(self.q),
            "m": self.m,
            "value": str(self.value),
            "engine": self.engine,
            "guard_notes": list(self.guard_notes),
            "classification": self.classification,
        }
        if self.mmax_params is not None:
            out["mmax_params"] = self.mmax_params
        if self.oracle_stats is not None:
            out["oracle"] = self.oracle_stats
        if self.tables is not None:
            out["tables"] = self.tables
        return out

    def json_dict(self) -> dict:
        return {"data": self.data_dict(), "timing": {"ms": self.timing_ms}}


def _tables_dict(tables) -> dict:
    return {
        "g_p": [jsonable_int(v) for v in tables.g_p],
        "g_z": [jsonable_int(v) for v in tables.g_z],
        "g_n": [jsonable_int(v) for v in tables.g_n],
        "d_consts": [jsonable_int(v) for v in tables.d_consts],
        "xtilde": list(tables.xtilde),
        "ints_level_top": [str(v) for v in tables.ints_level_top],
    }


def hk(
    f: Binomial,
    p: int | None = None,
    n: int = 1,
    engine: str = "auto",
    config: Config | None = None,
    verbose: bool = False,
) -> HKReport:
    """Evaluate the length for q = p^n with the requested engine.

    engine="auto" tries closed, then direct, then oracle; a specific
    engine raises instead of falling back.
    """
    if engine not in ENGINES:
        raise DomainError(f"unknown engine {engine!r}")
    if p is None:
        p = f.p
    if p != f.p:
        raise DomainError(f"p = {p} does not match the binomial over F_{f.p}")
    cfg = config or Config()
    q = PrimePower(p, n)
    cls = classify(f)
    notes = []
    started = time.perf_counter()

    def report(value, used, mmax=None, oracle_stats=None, tables=None):
        return HKReport(
            p=p,
            n=n,
            q=q.q,
            m=f.m,
            value=value,
            engine=used,
            guard_notes=notes,
            classification=classification_summary(cls),
            mmax_params=mmax,
            oracle_stats=oracle_stats,
            tables=tables,
            timing_ms=(time.perf_counter() - started) * 1000.0,
        )

    if engine in ("auto", "closed"):
        try:
            value, tables, params = hk_closed_form_tables(f, p, n)
            mmax = [
                {k: jsonable_int(v) if isinstance(v, int) else v for k, v in row.items()}
                for row in params_summary(params)
            ]
            return report(
                value,
                "closed",
                mmax=mmax,
                tables=_tables_dict(tables) if (verbose or cfg.verbose) else None,
            )
        except NotApplicableError as exc:
            if engine == "closed":
                raise
            notes.append(f"closed-form not applicable: {exc}")

    size = q.q**f.m
    if engine in ("auto", "direct"):
        if size <= cfg.enum_cap:
            value = hk_direct_count(f, q, enum_cap=cfg.enum_cap)
            return report(value, "direct")
        if engine == "direct":
            raise ResourceError(
                f"direct count needs {size} membership tests, budget is {cfg.enum_cap}",
                required=size,
                budget=cfg.enum_cap,
            )
        notes.append(f"direct budget exceeded: q^m = {size} > {cfg.enum_cap}")

    if engine in ("auto", "oracle"):
        if size <= cfg.oracle_cap:
            rep = hk_oracle_report(f, q, node_cap=cfg.oracle_cap)
            stats = {
                "nodes": jsonable_int(rep.nodes),
                "dead": jsonable_int(rep.dead_nodes),
                "merges": jsonable_int(rep.merges),
                "live_merged_classes": jsonable_int(rep.live_merged_classes),
            }
            return report(rep.length, "oracle", oracle_stats=stats)
        if engine == "oracle":
            raise ResourceError(
                f"oracle needs {size} nodes, budget is {cfg.oracle_cap}",
                required=size,
                budget=cfg.oracle_cap,
            )
        notes.append(f"oracle budget exceeded: q^m = {size} > {cfg.oracle_cap}")

    raise ResourceError(
        "no engine applicable within budgets: " + "; ".join(notes),
        required=size,
    )


@dataclass
class CheckReport:
    entries: list
    all_agree: bool

    def json_list(self) -> list:
        return self.entries


def _check_instance(item, cfg: Config):
    f, p, n = item
    values = {}
    skipped = {}
    try:
        values["closed"] = hk(f, p, n, engine="closed", config=cfg).value
    except NotApplicableError as exc:
        skipped["closed"] = f"not applicable: {exc}"
    try:
        values["direct"] = hk(f, p, n, engine="direct", config=cfg).value
    except ResourceError as exc:
        skipped["direct"] = f"budget: {exc}"
    try:
        values["oracle"] = hk(f, p, n, engine="oracle", config=cfg).value
    except ResourceError as exc:
        skipped["oracle"] = f"budget: {exc}"
    agree = len(set(values.values())) <= 1
    return {
        "poly": render(f),
        "p": p,
        "n": n,
        "values": {k: str(v) for k, v in sorted(values.items())},
        "skipped": dict(sorted(skipped.items())),
        "agree": agree,
    }


def cross_check(instances, config: Config | None = None) -> CheckReport:
    """Run every applicable engine on each (binomial, p, n) instance.

    Instances are evaluated concurrently up to the configured worker
    limit; results keep input order, so reports are deterministic.
    """
    cfg = config or Config()
    items = list(instances)
    if cfg.workers > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            entries = list(pool.map(lambda it: _check_instance(it, cfg), items))
    else:
        entries = [_check_instance(it, cfg) for it in items]
    return CheckReport(entries=entries, all_agree=all(e["agree"] for e in entries))


def load_corpus(path: str) -> list:
    """Read a corpus file: one JSON object {"poly", "p", "n"} per line."""
    out = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
                f = parse_binomial(obj["poly"], int(obj["p"]))
                out.append((f, int(obj["p"]), int(obj["n"])))
            except (KeyError, ValueError, HKError) as exc:
                raise HKError(f"{path}:{lineno}: bad corpus entry: {exc}") from exc
    return out
