"""The twisted Weyl algebra D = A<d> with d z = sigma(z) d + d(z)."""

from functools import lru_cache
from typing import Dict, Sequence, Tuple, Union

from ..errors import DescriptorMismatchError
from ..rings import RingElem
from ..twisted import AElem, TwistedAlgebra

Coefficient = Union[AElem, RingElem, int]


class WeylElem:
    """sum_k z_k d^k with coefficients on the left."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: TwistedAlgebra, coeffs: Sequence[Coefficient] = ()):
        values = [c if isinstance(c, AElem) else AElem.scalar(algebra, c) for c in coeffs]
        while values and values[-1].is_zero:
            values.pop()
        self.algebra = algebra
        self.coeffs: Tuple[AElem, ...] = tuple(values)

    @classmethod
    def d(cls, algebra: TwistedAlgebra, power: int = 1) -> "WeylElem":
        return cls(algebra, [0] * power + [1])

    @classmethod
    def monomial(cls, algebra: TwistedAlgebra, a: int, k: int, c: Union[RingElem, int] = 1) -> "WeylElem":
        """c x^a d^k."""
        return cls(algebra, [0] * k + [AElem.monomial(algebra, a, c)])

    @classmethod
    def scalar(cls, algebra: TwistedAlgebra, z: Coefficient) -> "WeylElem":
        return cls(algebra, [z])

    @classmethod
    def from_terms(cls, algebra: TwistedAlgebra, terms: Dict[Tuple[int, int], RingElem]) -> "WeylElem":
        """Build sum c x^a d^k from ``{(a, k): c}``."""
        by_k: Dict[int, Dict[int, RingElem]] = {}
        for (a, k), c in terms.items():
            by_k.setdefault(k, {})[a] = c
        top = max(by_k, default=-1)
        return cls(algebra, [AElem.from_coeffs(algebra, by_k.get(k, {})) for k in range(top + 1)])

    @property
    def degree(self) -> int:
        """Order in d, -1 for zero."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> AElem:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.algebra.zero()

    def terms(self) -> Dict[Tuple[int, int], RingElem]:
        """``{(a, k): c}`` for the nonzero terms c x^a d^k."""
        out = {}
        for k, z in enumerate(self.coeffs):
            for a, c in z.terms().items():
                out[(a, k)] = c
        return out

    def _check(self, other: "WeylElem") -> None:
        if other.algebra != self.algebra:
            raise DescriptorMismatchError(f"cannot combine operators over {self.algebra} and {other.algebra}")

    def __add__(self, other: "WeylElem") -> "WeylElem":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return WeylElem(self.algebra, [self.coefficient(k) + other.coefficient(k) for k in range(n)])

    def __neg__(self) -> "WeylElem":
        return WeylElem(self.algebra, [-c for c in self.coeffs])

    def __sub__(self, other: "WeylElem") -> "WeylElem":
        return self + (-other)

    def __mul__(self, other: Union["WeylElem", Coefficient]) -> "WeylElem":
        if isinstance(other, WeylElem):
            return weyl_mul(self, other)
        return weyl_mul(self, WeylElem.scalar(self.algebra, other))

    def __rmul__(self, other: Coefficient) -> "WeylElem":
        """Left multiplication by an element of A."""
        return WeylElem(self.algebra, [other * c for c in self.coeffs])

    def __pow__(self, n: int) -> "WeylElem":
        result = WeylElem.scalar(self.algebra, 1)
        for _ in range(n):
            result = weyl_mul(result, self)
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeylElem):
            return NotImplemented
        return self.algebra == other.algebra and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.algebra, self.coeffs))

    def to_data(self) -> list:
        return [[k, c.to_data()] for k, c in enumerate(self.coeffs) if not c.is_zero]

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero:
                continue
            mono = "" if k == 0 else ("d" if k == 1 else f"d^{k}")
            if not mono:
                parts.append(str(c))
            elif c.is_one:
                parts.append(mono)
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"WeylElem({self.algebra}, {self})"


@lru_cache(maxsize=None)
def _d_power_times(z: AElem, j: int) -> Tuple[AElem, ...]:
    """Coefficients of d^j z, by j-fold use of d w = sigma(w) d + d(w)."""
    if j == 0:
        return (z,)
    prev = _d_power_times(z, j - 1)
    out = [z.algebra.zero()] * (len(prev) + 1)
    for l, w in enumerate(prev):
        if w.is_zero:
            continue
        out[l + 1] = out[l + 1] + w.sigma(1)
        out[l] = out[l] + w.derive()
    return tuple(out)


def weyl_mul(a: WeylElem, b: WeylElem) -> WeylElem:
    """The Ore product."""
    a._check(b)
    alg = a.algebra
    if a.is_zero or b.is_zero:
        return WeylElem(alg)
    out = [alg.zero()] * (a.degree + b.degree + 1)
    for j, aj in enumerate(a.coeffs):
        if aj.is_zero:
            continue
        for k, bk in enumerate(b.coeffs):
            if bk.is_zero:
                continue
            for l, w in enumerate(_d_power_times(bk, j)):
                if not w.is_zero:
                    out[l + k] = out[l + k] + aj * w
    return WeylElem(alg, out)


def weyl_apply(op: WeylElem, z: AElem) -> AElem:
    """sum_k z_k d^k(z)."""
    result = z.algebra.zero()
    current = z
    for k, c in enumerate(op.coeffs):
        if k:
            current = current.derive()
        if not c.is_zero:
            result = result + c * current
    return result


def commutator(a: WeylElem, b: WeylElem) -> WeylElem:
    return weyl_mul(a, b) - weyl_mul(b, a)
