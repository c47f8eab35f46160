from dataclasses import dataclass, field
from typing import Any, Literal, NamedTuple, Optional

from models.json_types import CheckResultDTO, ReportDTO

Verdict = Literal["pass", "fail", "inconclusive"]
Answer = Literal["yes", "no", "unknown"]


class CheckResult(NamedTuple):
    name: str
    verdict: Verdict
    detail: dict

    def as_dict(self) -> CheckResultDTO:
        return {"name": self.name, "verdict": self.verdict, "detail": self.detail}


@dataclass(frozen=True)
class Decision:
    """Three-valued answer with the evidence that produced it."""
    answer: Answer
    witness: Optional[Any] = None
    certificate: Optional[dict] = None
    reason: str = ""

    @property
    def is_yes(self) -> bool:
        return self.answer == "yes"

    @property
    def is_no(self) -> bool:
        return self.answer == "no"


@dataclass
class Report:
    """An ordered collection of check results."""
    title: str
    results: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def add(self, name: str, verdict: Verdict, **detail) -> CheckResult:
        result = CheckResult(name, verdict, detail)
        self.results.append(result)
        return result

    @property
    def verdict(self) -> Verdict:
        verdicts = [r.verdict for r in self.results]
        if "fail" in verdicts:
            return "fail"
        if "inconclusive" in verdicts:
            return "inconclusive"
        return "pass"

    @property
    def failures(self) -> list:
        return [r for r in self.results if r.verdict == "fail"]

    def as_dict(self) -> ReportDTO:
        return {
            "title": self.title,
            "verdict": self.verdict,
            "results": [r.as_dict() for r in self.results],
            "notes": list(self.notes),
        }
