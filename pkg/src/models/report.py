"""Report models for verification and Simpson runs."""

from datetime import datetime, timezone
from typing import Any, Dict, List

from pydantic import BaseModel, Field, computed_field


class VerificationCase(BaseModel):
    """A single checked identity, keyed for order-independent aggregation."""

    key: str
    passed: bool
    detail: str = ""
    data: Dict[str, Any] = Field(default_factory=dict)


class VerificationReport(BaseModel):
    """{suite, params, cases, failures}; cases are sorted by key."""

    suite: str
    params: Dict[str, Any] = Field(default_factory=dict)
    cases: List[VerificationCase] = Field(default_factory=list)
    created_at: datetime = Field(default_factory=lambda: datetime.now(timezone.utc))

    @computed_field
    @property
    def failures(self) -> int:
        return sum(1 for c in self.cases if not c.passed)

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def sorted(self) -> "VerificationReport":
        return self.model_copy(update={"cases": sorted(self.cases, key=lambda c: c.key)})

    def summary(self) -> Dict[str, Any]:
        """The report without timestamps, as emitted by the CLI."""
        return self.model_dump(mode="json", exclude={"created_at"})


class TableReport(BaseModel):
    """A named table of rows, as printed by ``qbinom``, ``frob-coeffs`` and ``center``."""

    name: str
    params: Dict[str, Any] = Field(default_factory=dict)
    columns: List[str]
    rows: List[Dict[str, Any]] = Field(default_factory=list)

    def summary(self) -> Dict[str, Any]:
        return self.model_dump(mode="json")
