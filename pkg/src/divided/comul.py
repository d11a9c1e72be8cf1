"""Comultiplication on divided powers, A[theta] and the pairing between them.

A DPTensorElem stores sum z_ij xi^[i] (x)' xi^[j] with every coefficient in
the left factor. Moving a coefficient s across the primed tensor product
multiplies the left factor by Theta(s).
"""

from typing import Dict, Sequence, Tuple, Union

from ..errors import DescriptorMismatchError, PreconditionError
from ..rings import RingElem, q_char
from ..twisted import AElem, TwistedAlgebra
from .pmap import mod_xi_reduce
from .ring import DividedPowerRing, DPElem, dp_mul, structure_constant
from .taylor import taylor0

Index = Tuple[int, int]
Coefficient = Union[AElem, RingElem, int]


class DPTensorElem:
    """Truncated element of A<xi> (x)'_A A<xi>."""

    __slots__ = ("ring", "trunc", "table")

    def __init__(self, ring: DividedPowerRing, trunc: Index, table: Dict[Index, AElem] = None):
        self.ring = ring
        self.trunc = trunc
        N, M = trunc
        self.table: Dict[Index, AElem] = {
            (i, j): c for (i, j), c in (table or {}).items() if i <= N and j <= M and not c.is_zero
        }

    @classmethod
    def pure(cls, ring: DividedPowerRing, trunc: Index, i: int, j: int, c: Coefficient = 1) -> "DPTensorElem":
        """c xi^[i] (x) xi^[j]."""
        value = c if isinstance(c, AElem) else AElem.scalar(ring.algebra, c)
        return cls(ring, trunc, {(i, j): value})

    def coefficient(self, i: int, j: int) -> AElem:
        return self.table.get((i, j), self.ring.algebra.zero())

    @property
    def is_zero(self) -> bool:
        return not self.table

    def _check(self, other: "DPTensorElem") -> None:
        if other.ring != self.ring or other.trunc != self.trunc:
            raise DescriptorMismatchError("tensor operands differ in ring or truncation")

    def __add__(self, other: "DPTensorElem") -> "DPTensorElem":
        self._check(other)
        table = dict(self.table)
        zero = self.ring.algebra.zero()
        for key, c in other.table.items():
            table[key] = table.get(key, zero) + c
        return DPTensorElem(self.ring, self.trunc, table)

    def __neg__(self) -> "DPTensorElem":
        return DPTensorElem(self.ring, self.trunc, {k: -c for k, c in self.table.items()})

    def __sub__(self, other: "DPTensorElem") -> "DPTensorElem":
        return self + (-other)

    def __mul__(self, other: "DPTensorElem") -> "DPTensorElem":
        self._check(other)
        ring = self.ring
        N, M = self.trunc
        out = DPTensorElem(ring, self.trunc)
        for (i, j), a in self.table.items():
            for (k, l), b in other.table.items():
                left = dp_mul(ring.basis(i, N), ring.basis(k, N)) * (a * b)
                for n in range(max(j, l), min(j + l, M) + 1):
                    s = structure_constant(ring, j, l, j + l - n)
                    if s.is_zero:
                        continue
                    out = out + _place(left, _move_left(ring, s, N), n, M)
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DPTensorElem):
            return NotImplemented
        return self.ring == other.ring and self.trunc == other.trunc and self.table == other.table

    def __hash__(self) -> int:
        return hash((self.ring, self.trunc, tuple(sorted(self.table.items()))))

    def to_data(self) -> dict:
        return {
            "trunc": list(self.trunc),
            "coeffs": [[i, j, c.to_data()] for (i, j), c in sorted(self.table.items())],
        }

    def __repr__(self) -> str:
        terms = " + ".join(f"({c})*[{i}](x)[{j}]" for (i, j), c in sorted(self.table.items()))
        return f"DPTensorElem({terms or '0'})"


def _move_left(ring: DividedPowerRing, s: AElem, trunc: int) -> DPElem:
    """The left-factor image of a coefficient s sitting in the right factor."""
    if s.is_scalar():
        return DPElem.scalar(ring, s, trunc)
    if ring != DividedPowerRing.standard(ring.algebra):
        raise PreconditionError(f"moving {s} across the tensor product needs the Taylor structure of A<xi>_(q, y)")
    return taylor0(s, trunc)


def _place(left: DPElem, factor: DPElem, j: int, trunc_right: int) -> DPTensorElem:
    product = dp_mul(left, factor)
    return DPTensorElem(
        left.ring, (left.trunc, trunc_right), {(i, j): c for i, c in enumerate(product.coeffs) if not c.is_zero}
    )


def tensor(a: DPElem, b: DPElem) -> DPTensorElem:
    """a (x)' b = sum_j a Theta(b_j) (x) xi^[j]."""
    if a.ring != b.ring:
        raise DescriptorMismatchError("tensor factors live in different divided power rings")
    out = DPTensorElem(a.ring, (a.trunc, b.trunc))
    for j in b.support():
        out = out + _place(a, _move_left(a.ring, b.coeffs[j], a.trunc), j, b.trunc)
    return out


def dp_comul(a: DPElem) -> DPTensorElem:
    """delta(z xi^[n]) = z sum_i xi^[n-i] (x)' xi^[i]."""
    table: Dict[Index, AElem] = {}
    zero = a.ring.algebra.zero()
    for n in a.support():
        for i in range(n + 1):
            table[(n - i, i)] = table.get((n - i, i), zero) + a.coeffs[n]
    return DPTensorElem(a.ring, (a.trunc, a.trunc), table)


def comul_left(t: DPTensorElem) -> Dict[Tuple[int, int, int], AElem]:
    """(delta (x) 1) applied to t, as a table over triples."""
    out: Dict[Tuple[int, int, int], AElem] = {}
    zero = t.ring.algebra.zero()
    for (i, j), c in t.table.items():
        for k in range(i + 1):
            out[(i - k, k, j)] = out.get((i - k, k, j), zero) + c
    return {k: v for k, v in out.items() if not v.is_zero}


def comul_right(t: DPTensorElem) -> Dict[Tuple[int, int, int], AElem]:
    """(1 (x) delta) applied to t, as a table over triples."""
    out: Dict[Tuple[int, int, int], AElem] = {}
    zero = t.ring.algebra.zero()
    for (i, j), c in t.table.items():
        for k in range(j + 1):
            out[(i, j - k, k)] = out.get((i, j - k, k), zero) + c
    return {k: v for k, v in out.items() if not v.is_zero}


def is_coassociative(a: DPElem) -> bool:
    t = dp_comul(a)
    return comul_left(t) == comul_right(t)


def mod_xi_reduce_tensor(t: DPTensorElem) -> DPTensorElem:
    """Reduce both factors modulo (xi): xi^[ip] (x) xi^[jp] -> omega^[i] (x) omega^[j]."""
    alg = t.ring.algebra
    p = q_char(alg.ring)
    if p == 0:
        raise PreconditionError(f"{alg.ring} has q-characteristic 0")
    if t.ring != DividedPowerRing.standard(alg):
        raise PreconditionError(f"reduction modulo (xi) expects A<xi>_(q, y), got {t.ring}")
    N, M = t.trunc
    table = {(i // p, j // p): c for (i, j), c in t.table.items() if i % p == 0 and j % p == 0}
    return DPTensorElem(DividedPowerRing.omega(alg, p), (N // p, M // p), table)


def reduction_commutes_with_comul(algebra: TwistedAlgebra, k: int) -> bool:
    """Reduction modulo (xi) commutes with delta on xi^[kp]."""
    p = q_char(algebra.ring)
    a = DividedPowerRing.standard(algebra).basis(k * p, k * p)
    w = mod_xi_reduce(a)
    return mod_xi_reduce_tensor(dp_comul(a)) == dp_comul(w)


class ThetaPoly:
    """sum_m f_m theta^m in A[theta]."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: TwistedAlgebra, coeffs: Sequence[Coefficient] = ()):
        values = [c if isinstance(c, AElem) else AElem.scalar(algebra, c) for c in coeffs]
        while values and values[-1].is_zero:
            values.pop()
        self.algebra = algebra
        self.coeffs: Tuple[AElem, ...] = tuple(values)

    @classmethod
    def theta(cls, algebra: TwistedAlgebra, power: int = 1, c: Coefficient = 1) -> "ThetaPoly":
        return cls(algebra, [0] * power + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, m: int) -> AElem:
        if 0 <= m < len(self.coeffs):
            return self.coeffs[m]
        return self.algebra.zero()

    def __add__(self, other: "ThetaPoly") -> "ThetaPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return ThetaPoly(self.algebra, [self.coefficient(k) + other.coefficient(k) for k in range(n)])

    def __neg__(self) -> "ThetaPoly":
        return ThetaPoly(self.algebra, [-c for c in self.coeffs])

    def __sub__(self, other: "ThetaPoly") -> "ThetaPoly":
        return self + (-other)

    def __mul__(self, other: Union["ThetaPoly", Coefficient]) -> "ThetaPoly":
        if not isinstance(other, ThetaPoly):
            return ThetaPoly(self.algebra, [c * other for c in self.coeffs])
        if self.is_zero or other.is_zero:
            return ThetaPoly(self.algebra)
        out = [self.algebra.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return ThetaPoly(self.algebra, out)

    def __pow__(self, n: int) -> "ThetaPoly":
        result = ThetaPoly(self.algebra, [1])
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ThetaPoly):
            return NotImplemented
        return self.algebra == other.algebra and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.algebra, self.coeffs))

    def to_data(self) -> list:
        return [c.to_data() for c in self.coeffs]

    def __repr__(self) -> str:
        terms = " + ".join(f"({c})*theta^{m}" for m, c in enumerate(self.coeffs) if not c.is_zero)
        return f"ThetaPoly({terms or '0'})"


def pairing(f: ThetaPoly, g: DPElem) -> AElem:
    """<f, g> = sum_m f_m g_m; coefficients of f beyond the truncation of g pair to zero."""
    total = g.ring.algebra.zero()
    for m in range(min(f.degree, g.trunc) + 1):
        total = total + f.coeffs[m] * g.coeffs[m]
    return total


def pairing_tensor(f: ThetaPoly, g: ThetaPoly, t: DPTensorElem) -> AElem:
    """<f (x) g, t> = sum_ij f_i g_j t_ij."""
    total = t.ring.algebra.zero()
    for (i, j), c in t.table.items():
        total = total + f.coefficient(i) * g.coefficient(j) * c
    return total


def pairing_table(table: Dict[Index, AElem], a: DPElem, b: DPElem) -> AElem:
    """Pair an element of A[theta] (x) A[theta] with a (x) b, coefficientwise."""
    total = a.ring.algebra.zero()
    for (i, j), c in table.items():
        total = total + c * a.coefficient(i) * b.coefficient(j)
    return total


def theta_comul(f: ThetaPoly, ring: DividedPowerRing) -> Dict[Index, AElem]:
    """Multiplicative extension of theta -> 1 (x) theta + theta (x) 1 - Y theta (x) theta.

    Needs Q = 1 for ``ring``, whose Y enters the rule.
    """
    if not ring.qbase == 1:
        raise PreconditionError(f"the comultiplication of A[theta] needs q = 1, got {ring.qbase}")
    y = ring.y
    image: Dict[Index, AElem] = {(0, 1): y.algebra.one(), (1, 0): y.algebra.one(), (1, 1): -y}
    out: Dict[Index, AElem] = {}
    power: Dict[Index, AElem] = {(0, 0): y.algebra.one()}
    for m, c in enumerate(f.coeffs):
        if m:
            power = _table_mul(power, image)
        if c.is_zero:
            continue
        for key, v in power.items():
            out[key] = out.get(key, y.algebra.zero()) + c * v
    return {k: v for k, v in out.items() if not v.is_zero}


def _table_mul(a: Dict[Index, AElem], b: Dict[Index, AElem]) -> Dict[Index, AElem]:
    out: Dict[Index, AElem] = {}
    for (i, j), u in a.items():
        for (k, l), v in b.items():
            key = (i + k, j + l)
            out[key] = out[key] + u * v if key in out else u * v
    return out
