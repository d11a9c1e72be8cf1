"""Coefficient ring descriptors and their compact text form."""

from enum import Enum
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator
from sympy import Symbol, isprime, symbols

from ..errors import DescriptorParseError

T, S = symbols("t s")


class RingKind(str, Enum):
    """Supported coefficient ring families."""

    GENERIC_ZT = "Zt"
    GENERIC_ZTS = "Zts"
    CYCLOTOMIC_FIELD = "CycF"
    CYCLOTOMIC_RING = "CycR"
    PRIME_FIELD = "Fp"


_NEEDS_P = {RingKind.CYCLOTOMIC_FIELD, RingKind.CYCLOTOMIC_RING, RingKind.PRIME_FIELD}
_NEEDS_PRIME = {RingKind.CYCLOTOMIC_RING, RingKind.PRIME_FIELD}


class RingDescriptor(BaseModel):
    """A coefficient ring R with its distinguished q (and h on Zts).

    q is always the class of t; on PrimeField that class is 1.
    """

    model_config = ConfigDict(frozen=True)

    kind: RingKind
    p: Optional[int] = Field(default=None, ge=2, description="Order of q where applicable")

    @model_validator(mode="after")
    def _check_p(self) -> "RingDescriptor":
        if self.kind in _NEEDS_P and self.p is None:
            raise ValueError(f"{self.kind.value} requires p")
        if self.kind not in _NEEDS_P and self.p is not None:
            raise ValueError(f"{self.kind.value} takes no p")
        if self.kind in _NEEDS_PRIME and not isprime(self.p):
            raise ValueError(f"{self.kind.value} requires a prime p, got {self.p}")
        return self

    @classmethod
    def parse(cls, text: str) -> "RingDescriptor":
        """Parse `Zt`, `Zts`, `CycF:p`, `CycR:p` or `Fp:p`."""
        head, _, tail = text.strip().partition(":")
        try:
            kind = RingKind(head)
        except ValueError:
            raise DescriptorParseError(f"unknown ring family {head!r} in {text!r}") from None
        if kind in _NEEDS_P:
            if not tail.isdigit():
                raise DescriptorParseError(f"{head} needs an integer order, as in {head}:3")
            p = int(tail)
        elif tail:
            raise DescriptorParseError(f"{head} does not take an order")
        else:
            p = None
        try:
            return cls(kind=kind, p=p)
        except ValueError as exc:
            raise DescriptorParseError(str(exc)) from None

    def __str__(self) -> str:
        return self.kind.value if self.p is None else f"{self.kind.value}:{self.p}"

    @property
    def declared_q_char(self) -> int:
        """The q-characteristic the family promises (0 for the generic rings)."""
        return self.p or 0

    @property
    def is_field(self) -> bool:
        return self.kind in (RingKind.CYCLOTOMIC_FIELD, RingKind.PRIME_FIELD)

    @property
    def has_h(self) -> bool:
        """Only the two-variable generic ring carries a nonzero h."""
        return self.kind is RingKind.GENERIC_ZTS

    @property
    def gens(self) -> Tuple[Symbol, ...]:
        return (T, S) if self.has_h else (T,)
