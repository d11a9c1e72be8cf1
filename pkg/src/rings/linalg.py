"""Exact dense linear algebra over RingElem or AElem entries.

Over fields pivots are normalized to one. Over other domains elimination is
fraction-free, so ranks and kernels are those over the fraction field.
"""

from itertools import permutations
from typing import List, Sequence, Tuple, TypeVar

E = TypeVar("E")
Matrix = List[List[E]]


def _normalize(row: List[E], pivot: E) -> List[E]:
    inverse = pivot.try_invert()
    return [inverse * v for v in row]


def echelon(rows: Sequence[Sequence[E]], field: bool) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form and its pivot columns."""
    work = [list(r) for r in rows if any(not v.is_zero for v in r)]
    pivots: List[int] = []
    if not work:
        return [], pivots
    ncols = len(work[0])
    r = 0
    for c in range(ncols):
        pick = next((i for i in range(r, len(work)) if not work[i][c].is_zero), None)
        if pick is None:
            continue
        work[r], work[pick] = work[pick], work[r]
        if field:
            work[r] = _normalize(work[r], work[r][c])
        piv = work[r][c]
        for i in range(len(work)):
            if i == r or work[i][c].is_zero:
                continue
            a = work[i][c]
            if field:
                work[i] = [x - a * y for x, y in zip(work[i], work[r])]
            else:
                work[i] = [piv * x - a * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rank(rows: Sequence[Sequence[E]], field: bool) -> int:
    return len(echelon(rows, field)[1])


def kernel(rows: Sequence[Sequence[E]], ncols: int, field: bool, zero: E, one: E) -> Matrix:
    """A basis of {v : M v = 0}, one vector per free column."""
    reduced, pivots = echelon(rows, field)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        involved = [r for r in range(len(pivots)) if not reduced[r][f].is_zero]
        vec = [zero] * ncols
        scale = one
        for r in involved:
            scale = scale * reduced[r][pivots[r]]
        vec[f] = scale
        for r in involved:
            others = one
            for s in involved:
                if s != r:
                    others = others * reduced[s][pivots[s]]
            vec[pivots[r]] = -(reduced[r][f] * others)
        basis.append(vec)
    return basis


def same_span(a: Sequence[Sequence[E]], b: Sequence[Sequence[E]], field: bool) -> bool:
    ra, rb = rank(a, field), rank(b, field)
    return ra == rb == rank(list(a) + list(b), field)


def in_span(vectors: Sequence[Sequence[E]], v: Sequence[E], field: bool) -> bool:
    return rank(list(vectors) + [v], field) == rank(vectors, field)


def mat_mul(a: Sequence[Sequence[E]], b: Sequence[Sequence[E]], zero: E) -> Matrix:
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        new_row = []
        for j in range(cols):
            acc = zero
            for k in range(inner):
                if not row[k].is_zero and not b[k][j].is_zero:
                    acc = acc + row[k] * b[k][j]
            new_row.append(acc)
        out.append(new_row)
    return out


def identity(n: int, zero: E, one: E) -> Matrix:
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mat_pow(a: Sequence[Sequence[E]], k: int, zero: E, one: E) -> Matrix:
    result = identity(len(a), zero, one)
    for _ in range(k):
        result = mat_mul(result, a, zero)
    return result


def is_zero_matrix(a: Sequence[Sequence[E]]) -> bool:
    return all(v.is_zero for row in a for v in row)


def _sign(perm: Tuple[int, ...]) -> int:
    sign = 1
    seen = list(perm)
    for i in range(len(seen)):
        while seen[i] != i:
            j = seen[i]
            seen[i], seen[j] = seen[j], seen[i]
            sign = -sign
    return sign


def determinant(a: Sequence[Sequence[E]], zero: E, one: E) -> E:
    """Leibniz expansion; meant for the small ranks of the module suites."""
    n = len(a)
    total = zero
    for perm in permutations(range(n)):
        term = one
        for i, j in enumerate(perm):
            term = term * a[i][j]
            if term.is_zero:
                break
        if not term.is_zero:
            total = total + term if _sign(perm) > 0 else total - term
    return total


def adjugate(a: Sequence[Sequence[E]], zero: E, one: E) -> Matrix:
    n = len(a)
    if n == 1:
        return [[one]]
    adj = [[zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[a[r][c] for c in range(n) if c != j] for r in range(n) if r != i]
            cofactor = determinant(minor, zero, one)
            adj[j][i] = cofactor if (i + j) % 2 == 0 else -cofactor
    return adj
