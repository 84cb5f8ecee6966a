"""Hessenberg-determinant and composition-sum forms of L_n (q = 1).

Both forms are driven by the B_{n,m} coefficients of the full-history
recurrence.  The determinant is evaluated through the leading principal
minors of a unit-superdiagonal lower Hessenberg matrix, in O(n^2) polynomial
products.  The composition sum walks all 2^(n-1) compositions of n depth-first
and shares prefix products between siblings.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .exceptions import CompositionTooLargeError, ParameterError
from .laguerre import LaguerreResult, Method, Params
from .poly import ONE, ZERO, Poly, poly_add, poly_mul, poly_scale
from .recurrence import CoeffTable, require_q1

__all__ = [
    "DEFAULT_COMPOSITION_CAP",
    "HessenbergMatrix",
    "build_matrix",
    "build_prefix_matrix",
    "hessenberg_det",
    "laguerre_det",
    "compositions",
    "a_term",
    "composition_expansion",
    "laguerre_composition",
]

DEFAULT_COMPOSITION_CAP = 14


@dataclass(frozen=True)
class HessenbergMatrix:
    """Square lower Hessenberg matrix of polynomials with unit superdiagonal.

    ``entries[i][j]`` is 0-indexed.  Construction checks the structure the
    determinant recurrence relies on: zeros above the superdiagonal and ones
    on it.
    """

    entries: tuple[tuple[Poly, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.entries)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("HessenbergMatrix needs a non-empty square array")
        for i in range(n):
            for j in range(i + 1, n):
                want = ONE if j == i + 1 else ZERO
                if rows[i][j] != want:
                    raise ValueError(
                        f"entry ({i + 1},{j + 1}) must be {want}, got {rows[i][j]}"
                    )
        object.__setattr__(self, "entries", rows)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> Poly:
        i, j = ij
        return self.entries[i][j]

    def z_only_on_diagonal(self) -> bool:
        """Every entry has degree <= 1 and only diagonal entries involve z."""
        for i, row in enumerate(self.entries):
            for j, p in enumerate(row):
                if p.degree > 1:
                    return False
                if i != j and p.degree == 1:
                    return False
        return True


def build_matrix(params: Params, n: int, table: CoeffTable | None = None) -> HessenbergMatrix:
    """Matrix whose determinant is L_n.

    Column j (1-indexed) carries B_{n-j+1,1} - z/(n-j+1) on the diagonal and
    B_{n-j+1, i-j+1} in row i below it.
    """
    require_q1(params, "the determinant form")
    if n < 1:
        raise ParameterError(f"matrix order must be positive, got {n}")
    table = table or CoeffTable(params)
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            col_n = n - j + 1
            if j == i:
                row.append(Poly([table.B(col_n, 1), Fraction(-1, col_n)]))
            elif j == i + 1:
                row.append(ONE)
            elif j > i + 1:
                row.append(ZERO)
            else:
                row.append(Poly([table.B(col_n, i - j + 1)]))
        rows.append(row)
    return HessenbergMatrix(rows)


def hessenberg_det(m: HessenbergMatrix) -> Poly:
    """Determinant from leading principal minors.

    With ones on the superdiagonal, d_0 = 1 and
    d_i = sum_{j=1}^{i} (-1)^(i-j) M(i,j) d_{j-1}.
    """
    minors = [ONE]
    for i in range(1, m.n + 1):
        acc = ZERO
        for j in range(1, i + 1):
            term = poly_mul(m[i - 1, j - 1], minors[j - 1])
            acc = poly_add(acc, term if (i - j) % 2 == 0 else -term)
        minors.append(acc)
    return minors[-1]


def laguerre_det(params: Params, n: int) -> LaguerreResult:
    require_q1(params, "the determinant form")
    if n < 0:
        raise ParameterError(f"n must be nonnegative, got {n}")
    poly = ONE if n == 0 else hessenberg_det(build_matrix(params, n))
    return LaguerreResult(params, n, poly, Method.DETERMINANT)


def compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All k-part compositions of n, lexicographically; nothing if k is out of range."""
    if n < 1 or not 1 <= k <= n:
        return
    if k == 1:
        yield (n,)
        return
    # first part leaves room for k-1 parts of size >= 1
    for first in range(1, n - k + 2):
        for rest in compositions(n - first, k - 1):
            yield (first,) + rest


def a_term(params: Params, j: int, ell: int, n: int | None = None,
           table: CoeffTable | None = None) -> Poly:
    """a_j^(ell) = B_{ell+j, ell} - z/(j+1) [ell == 1].

    ``j`` runs up to n-1 (not n-2): a_{n-1}^(1) is the last factor of the
    all-ones composition.  When ``n`` is given, ``ell + j <= n`` is enforced.
    """
    require_q1(params, "a_j^(l)")
    if j < 0 or ell < 1 or (n is not None and ell + j > n):
        raise ParameterError(f"a_j^(l) index out of range: j={j}, l={ell}, n={n}")
    table = table or CoeffTable(params)
    b = table.B(ell + j, ell)
    if ell == 1:
        return Poly([b, Fraction(-1, j + 1)])
    return Poly([b])


def composition_expansion(params: Params, n: int,
                          table: CoeffTable | None = None) -> tuple[Poly, int]:
    """Signed sum over compositions of n of a_0^(t1) a_{t1}^(t2) ...

    Returns the polynomial together with the number of composition terms
    visited, which is 2^(n-1) for n >= 1.
    """
    require_q1(params, "the composition form")
    if n == 0:
        return ONE, 0
    table = table or CoeffTable(params)
    factors = {
        (j, ell): a_term(params, j, ell, n, table)
        for j in range(n)
        for ell in range(1, n - j + 1)
    }
    # per-depth accumulators; a k-part composition carries sign (-1)^(n-k)
    by_parts = [ZERO] * (n + 1)
    count = 0

    stack: list[tuple[int, int, Poly]] = [(0, 0, ONE)]
    while stack:
        pos, k, prefix = stack.pop()
        if pos == n:
            by_parts[k] = poly_add(by_parts[k], prefix)
            count += 1
            continue
        for ell in range(n - pos, 0, -1):
            stack.append((pos + ell, k + 1, poly_mul(prefix, factors[pos, ell])))

    total = ZERO
    for k in range(1, n + 1):
        total = poly_add(total, poly_scale(-1 if (n - k) % 2 else 1, by_parts[k]))
    return total, count


def laguerre_composition(params: Params, n: int,
                         cap: int = DEFAULT_COMPOSITION_CAP) -> LaguerreResult:
    require_q1(params, "the composition form")
    if n < 0:
        raise ParameterError(f"n must be nonnegative, got {n}")
    if n > cap:
        raise CompositionTooLargeError(n, cap)
    poly, _ = composition_expansion(params, n)
    return LaguerreResult(params, n, poly, Method.COMPOSITION)


def build_prefix_matrix(params: Params, n: int, table: CoeffTable | None = None) -> HessenbergMatrix:
    """The a_j^(l) matrix: entry (i, j) = a_{j-1}^{(i-j+1)} for i >= j (1-indexed).

    Its determinant equals the composition sum; it is the index-reversed
    counterpart of :func:`build_matrix`.
    """
    require_q1(params, "the composition form")
    if n < 1:
        raise ParameterError(f"matrix order must be positive, got {n}")
    table = table or CoeffTable(params)
    rows = []
    for i in range(1, n + 1):
        row: list[Poly] = []
        for j in range(1, n + 1):
            if j <= i:
                row.append(a_term(params, j - 1, i - j + 1, n, table))
            else:
                row.append(ONE if j == i + 1 else ZERO)
        rows.append(row)
    return HessenbergMatrix(rows)


def det_from_rows(rows: Sequence[Sequence[Poly]]) -> Poly:
    """Convenience wrapper: validate ``rows`` as a Hessenberg matrix and take its determinant."""
    return hessenberg_det(HessenbergMatrix(rows))
