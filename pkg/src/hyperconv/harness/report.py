"""Running laws over their grids and reporting the outcome."""
from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .laws import REGISTRY, ScopeConfig, get_law

SCHEMA = 1
MAX_COUNTEREXAMPLES = 20


@dataclass
class LawOutcome:
    id: str
    anchor: str
    scope: dict
    instances: int = 0
    passed: int = 0
    failed: int = 0
    errors: int = 0
    status: str = "pass"
    reason: str = ""
    counterexamples: list = field(default_factory=list)
    seconds: float = 0.0

    def body(self) -> dict:
        out = {"id": self.id, "anchor": self.anchor, "scope": self.scope,
               "instances": self.instances, "passed": self.passed, "failed": self.failed,
               "errors": self.errors, "status": self.status,
               "counterexamples": self.counterexamples}
        if self.reason:
            out["reason"] = self.reason
        return out


@dataclass
class Report:
    config: ScopeConfig
    laws: list

    @property
    def ok(self) -> bool:
        return all(o.status in ("pass", "excluded") for o in self.laws)

    def body(self) -> dict:
        """Everything except timing, so equal runs give equal bodies."""
        totals = {s: sum(o.status == s for o in self.laws)
                  for s in ("pass", "fail", "skipped", "excluded")}
        return {"schema": SCHEMA, "config": self.config.as_dict(), "ok": self.ok,
                "totals": totals, "laws": [o.body() for o in self.laws]}

    def to_json(self, timing: bool = False) -> str:
        data = self.body()
        if timing:
            data = {"report": data, "timing": {o.id: round(o.seconds, 3) for o in self.laws}}
        return json.dumps(data, indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = []
        for o in self.laws:
            tag = o.status.upper()
            extra = f" ({o.reason})" if o.reason else ""
            lines.append(f"{tag:8s} {o.id:24s} {o.passed}/{o.instances}{extra}  {o.seconds:.1f}s")
            for ce in o.counterexamples[:3]:
                lines.append("         counterexample: " + json.dumps(ce, sort_keys=True)[:400])
        b = self.body()["totals"]
        lines.append(f"{b['pass']} passed, {b['fail']} failed, {b['skipped']} skipped, "
                     f"{b['excluded']} excluded")
        return "\n".join(lines)


def _run_one(law_id: str, instance: dict) -> tuple:
    try:
        ok, detail = get_law(law_id).check(instance)
        return ("pass" if ok else "fail"), detail
    except Exception as exc:   # reported per instance, never fatal to the run
        return "error", {"error": f"{type(exc).__name__}: {exc}"}


def _run_law(law_id: str, config: ScopeConfig, excluded: dict, pool) -> LawOutcome:
    law = get_law(law_id)
    out = LawOutcome(law.id, law.anchor, law.scope(config))
    start = time.perf_counter()
    if law_id in excluded:
        out.status, out.reason = "excluded", excluded[law_id]
        return out
    instances = sorted(law.instances(config), key=lambda i: json.dumps(i, sort_keys=True))
    out.instances = len(instances)
    if pool is None:
        results = [_run_one(law_id, inst) for inst in instances]
    else:
        results = list(pool.map(_run_one, [law_id] * len(instances), instances, chunksize=4))
    for inst, (verdict, detail) in zip(instances, results):
        if verdict == "pass":
            out.passed += 1
            continue
        if verdict == "fail":
            out.failed += 1
        else:
            out.errors += 1
        if len(out.counterexamples) < MAX_COUNTEREXAMPLES:
            out.counterexamples.append({"instance": inst, "verdict": verdict, "detail": detail})
    if out.failed or out.errors:
        out.status = "fail"
    elif not instances:
        out.status, out.reason = "skipped", "no instances in scope"
    out.seconds = time.perf_counter() - start
    return out


def run_laws(config: ScopeConfig | None = None, only: Iterable[str] | None = None,
             workers: int = 1) -> Report:
    """Check the selected laws (all by default) in id order."""
    config = config or ScopeConfig()
    ids = sorted(REGISTRY) if only is None else sorted(set(only))
    for law_id in ids:
        get_law(law_id)   # unknown ids fail before any work
    excluded = config.excluded()
    for law_id in excluded:
        get_law(law_id)
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            outcomes = [_run_law(i, config, excluded, pool) for i in ids]
    else:
        outcomes = [_run_law(i, config, excluded, None) for i in ids]
    return Report(config, outcomes)


__all__ = ["SCHEMA", "LawOutcome", "Report", "run_laws"]
