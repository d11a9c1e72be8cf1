"""Validated run configuration shared by every subcommand."""

from enum import Enum
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..rings import RingDescriptor


class OutputFormat(str, Enum):
    """Table and report formats."""

    JSON = "json"
    CSV = "csv"
    TEXT = "text"


class Subcommand(str, Enum):
    QBINOM = "qbinom"
    FROB_COEFFS = "frob-coeffs"
    VERIFY = "verify"
    CENTER = "center"
    SIMPSON = "simpson"


class RunConfig(BaseModel):
    """
    One CLI invocation after parsing.

    Bounds are nonnegative integers; the ring descriptor is kept as the
    user typed it and parsed on access. Suites that sweep several
    rings run only the given one when a ring is set.
    """

    model_config = ConfigDict(use_enum_values=False, frozen=True)

    subcommand: Subcommand
    ring: Optional[str] = None
    nmax: int = Field(default=4, ge=0)
    pmax: int = Field(default=5, ge=2)
    p: Optional[int] = Field(default=None, ge=2)
    trunc: int = Field(default=8, ge=0)
    degree: int = Field(default=6, ge=0)
    suite: Optional[str] = None
    format: OutputFormat = OutputFormat.JSON
    out: Optional[Path] = None
    seed: int = 20240601
    record: bool = False

    @field_validator("ring")
    @classmethod
    def _ring_parses(cls, value: Optional[str]) -> Optional[str]:
        if value is not None:
            RingDescriptor.parse(value)
        return value

    @property
    def descriptor(self) -> RingDescriptor:
        """The chosen ring, Zt when none was given."""
        return RingDescriptor.parse(self.ring or "Zt")

    def params(self) -> dict:
        """Parameters echoed into reports."""
        data = self.model_dump(mode="json", exclude={"subcommand", "format", "out", "record"})
        return {k: v for k, v in data.items() if v is not None}
