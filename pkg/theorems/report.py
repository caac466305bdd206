"""theorems/report.py — VerificationReport and the Probe every engine records into."""
import time
from dataclasses import dataclass, field

from core.digraph import Digraph
from core.formats import to_digraph6
from core.utils import BudgetExceeded, log, sanitize


@dataclass
class VerificationReport:
    theorem:           str
    params:            dict
    instances_checked: int = 0
    violations:        list = field(default_factory=list)   # [(digraph6, detail)]
    seed:              int = None
    elapsed_ms:        int = 0
    provenance:        str = "exhaustive"   # exhaustive | pruned | family | random
    notes:             list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return sanitize({
            "theorem":           self.theorem,
            "params":            self.params,
            "instances_checked": self.instances_checked,
            "violations":        [{"digraph6": d6, "detail": detail}
                                  for d6, detail in sorted(self.violations, key=lambda v: v[0])],
            "seed":              self.seed,
            "elapsed_ms":        self.elapsed_ms,
            "provenance":        self.provenance,
            "notes":             self.notes,
        })

    def summary(self) -> str:
        verdict = "OK" if self.ok else f"{len(self.violations)} VIOLATION(S)"
        return (f"{self.theorem}: {verdict}: {self.instances_checked} instances "
                f"({self.provenance}, {self.elapsed_ms} ms)")


class Probe:
    """Collects checks for one verification run and enforces the time budget."""

    def __init__(self, theorem: str, params: dict, seed: int, budget_seconds: int):
        self.report = VerificationReport(theorem, dict(params), seed=seed)
        self._start = time.monotonic()
        self._budget = budget_seconds

    def tick(self):
        if time.monotonic() - self._start > self._budget:
            raise BudgetExceeded(f"{self.report.theorem}: exceeded the {self._budget}s budget")

    def check(self, G: Digraph, holds: bool, detail) -> bool:
        self.report.instances_checked += 1
        if not holds:
            code = to_digraph6(G) if G is not None else "-"
            self.report.violations.append((code, detail))
            log("VERIFY", f"{self.report.theorem} violated on {code}: {detail}")
        return holds

    def note(self, text: str):
        if text not in self.report.notes:
            self.report.notes.append(text)

    def provenance(self, kind: str):
        order = ["exhaustive", "family", "random", "pruned"]
        if order.index(kind) > order.index(self.report.provenance):
            self.report.provenance = kind

    def finish(self) -> VerificationReport:
        self.report.elapsed_ms = int((time.monotonic() - self._start) * 1000)
        log("VERIFY", self.report.summary())
        return self.report
