"""Report records for verification runs, with deterministic ordering.

Every check in the library returns a list of ``ReportRecord``.  Conjectural
results carry their own statuses and never affect exit codes unless that is
explicitly requested.  Record parameters and witnesses are plain JSON-ready
values so records can cross process boundaries in a worker pool.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
CONJECTURAL_PASS = "conjectural-pass"
CONJECTURAL_FAIL = "conjectural-fail"
SKIPPED = "skipped"

_FAILING = {FAIL}


@dataclass(frozen=True)
class ReportRecord:
    check: str
    params: dict
    status: str
    detail: str = ""
    witness: object = None

    def sort_key(self):
        return (self.check, json.dumps(self.params, sort_keys=True))

    def to_json_dict(self) -> dict:
        out = {"check": self.check, "params": self.params, "status": self.status}
        if self.detail:
            out["detail"] = self.detail
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def record(check: str, params: dict, ok: bool, detail: str = "", witness=None, conjectural: bool = False) -> ReportRecord:
    if conjectural:
        status = CONJECTURAL_PASS if ok else CONJECTURAL_FAIL
    else:
        status = PASS if ok else FAIL
    return ReportRecord(check, params, status, detail, witness)


def skipped(check: str, params: dict, detail: str) -> ReportRecord:
    return ReportRecord(check, params, SKIPPED, detail)


def merge(*groups) -> list[ReportRecord]:
    out = []
    for g in groups:
        out.extend(g)
    out.sort(key=ReportRecord.sort_key)
    return out


def exit_code(records, include_conjectural: bool = False) -> int:
    failing = set(_FAILING)
    if include_conjectural:
        failing.add(CONJECTURAL_FAIL)
    return 1 if any(r.status in failing for r in records) else 0


def render_json(records, header: dict | None = None) -> str:
    payload = {"records": [r.to_json_dict() for r in records]}
    if header:
        payload = {"header": header, **payload}
    return json.dumps(payload, indent=2, sort_keys=False)


def render_ascii(records, header: dict | None = None) -> str:
    lines = []
    if header:
        lines.append("  ".join(f"{k}={v}" for k, v in header.items()))
        lines.append("")
    width = max((len(r.check) for r in records), default=5)
    for r in records:
        params = " ".join(f"{k}={v}" for k, v in r.params.items())
        suffix = f"  [{r.detail}]" if r.detail else ""
        lines.append(f"{r.check:<{width}}  {r.status:<16} {params}{suffix}")
    counts = {}
    for r in records:
        counts[r.status] = counts.get(r.status, 0) + 1
    summary = ", ".join(f"{k}: {v}" for k, v in sorted(counts.items()))
    lines.append("")
    lines.append(f"total: {len(records)} ({summary})")
    return "\n".join(lines)


def default_workers() -> int:
    value = os.environ.get("TAFTDOUBLE_WORKERS", "1")
    try:
        return max(1, int(value))
    except ValueError:
        return 1


def _invoke(task):
    fn, kwargs = task
    return fn(**kwargs)


def run_tasks(tasks, workers: int | None = None) -> list[ReportRecord]:
    """Run (callable, kwargs) tasks, fanning out to processes when asked.

    Each task returns a list of records; the merged output is sorted, so the
    result does not depend on scheduling.
    """
    workers = default_workers() if workers is None else workers
    if workers <= 1 or len(tasks) <= 1:
        groups = [_invoke(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            groups = list(pool.map(_invoke, tasks))
    return merge(*groups)
