"""Full-history recurrence (q = 1) and the classical three-term recurrence."""
from __future__ import annotations

import math
import threading
from fractions import Fraction

from .exceptions import ParameterError, UnsupportedParameterError
from .laguerre import LaguerreResult, Method, Params, laguerre_closed
from .poly import ONE, Poly, poly_add, poly_mul, poly_scale
from .scalar import falling_factorial

__all__ = [
    "coeff_C",
    "coeff_B",
    "CoeffTable",
    "recurrence_step",
    "laguerre_recurrence",
    "three_term",
]


def require_q1(params: Params, what: str) -> None:
    if params.q != 1:
        raise UnsupportedParameterError(f"{what} is defined only for q = 1 (got q={params.q})")


def _check_nm(n: int, m: int) -> None:
    if n < 1 or not 1 <= m <= n:
        raise ParameterError(f"need 1 <= m <= n, got n={n}, m={m}")


def coeff_C(params: Params, n: int, m: int) -> Fraction:
    """C_{n,m} = 1/(m! n) * sum_j (-1)^j binom(m,j) (n-j) (alpha(n-j)+beta)_alpha.

    For alpha = 1 the summand is quadratic in j, so C_{n,m} vanishes for m >= 3.
    """
    require_q1(params, "C_{n,m}")
    _check_nm(n, m)
    a, b = params.alpha, params.beta
    total = Fraction(0)
    for j in range(m + 1):
        term = math.comb(m, j) * (n - j) * falling_factorial(a * (n - j) + b, a)
        total += -term if j % 2 else term
    return total / (math.factorial(m) * n)


def coeff_B(params: Params, n: int, m: int) -> Fraction:
    """B_{n,m} = (alpha(n-1)+beta)_{(m-1)alpha} * C_{n,m}."""
    c = coeff_C(params, n, m)
    return falling_factorial(params.alpha * (n - 1) + params.beta, (m - 1) * params.alpha) * c


class CoeffTable:
    """Memoized C_{n,m} / B_{n,m} for one parameter set.

    Reads are lock-free; writes are serialized.  A fully built table can be
    shared between threads.
    """

    def __init__(self, params: Params):
        require_q1(params, "CoeffTable")
        self.params = params
        self._C: dict[tuple[int, int], Fraction] = {}
        self._B: dict[tuple[int, int], Fraction] = {}
        self._lock = threading.Lock()

    def C(self, n: int, m: int) -> Fraction:
        key = (n, m)
        v = self._C.get(key)
        if v is None:
            v = coeff_C(self.params, n, m)
            with self._lock:
                self._C.setdefault(key, v)
        return v

    def B(self, n: int, m: int) -> Fraction:
        key = (n, m)
        v = self._B.get(key)
        if v is None:
            p = self.params
            v = falling_factorial(p.alpha * (n - 1) + p.beta, (m - 1) * p.alpha) * self.C(n, m)
            with self._lock:
                self._B.setdefault(key, v)
        return v

    def fill(self, nmax: int) -> CoeffTable:
        for n in range(1, nmax + 1):
            for m in range(1, n + 1):
                self.B(n, m)
        return self

    @property
    def entries(self) -> dict[tuple[int, int], Fraction]:
        """Snapshot of the C values computed so far."""
        return dict(self._C)


def recurrence_step(table: CoeffTable, n: int, previous: list[Poly]) -> Poly:
    """L_n = -(z/n) L_{n-1} + sum_m (-1)^(m-1) B_{n,m} L_{n-m}.

    ``previous`` holds L_0 .. L_{n-1}.
    """
    acc = poly_mul(Poly([0, Fraction(-1, n)]), previous[n - 1])
    for m in range(1, n + 1):
        b = table.B(n, m)
        if b == 0:
            continue
        acc = poly_add(acc, poly_scale(b if m % 2 else -b, previous[n - m]))
    return acc


def laguerre_recurrence(params: Params, nmax: int, seed: int = 3) -> list[LaguerreResult]:
    """L_0 .. L_nmax, with the first ``seed`` entries taken from the closed form.

    The recurrence is only asserted for n >= 3, hence the default seed of 3.
    Smaller seeds are accepted so the low orders can be checked.
    """
    require_q1(params, "the full-history recurrence")
    if nmax < 0:
        raise ParameterError(f"nmax must be nonnegative, got {nmax}")
    if seed < 1:
        raise ParameterError("at least L_0 must be seeded")
    table = CoeffTable(params)
    polys = [laguerre_closed(params, n).poly for n in range(min(seed, nmax + 1))]
    for n in range(len(polys), nmax + 1):
        polys.append(recurrence_step(table, n, polys))
    return [LaguerreResult(params, n, p, Method.RECURRENCE) for n, p in enumerate(polys)]


def three_term(beta, nmax: int) -> list[LaguerreResult]:
    """Classical L_n = ((2n-1+beta-z) L_{n-1} - (n-1+beta) L_{n-2}) / n."""
    params = Params(1, beta, 1)
    b = params.beta
    if nmax < 0:
        raise ParameterError(f"nmax must be nonnegative, got {nmax}")
    polys = [ONE, Poly([1 + b, -1])][: nmax + 1]
    for n in range(2, nmax + 1):
        first = poly_mul(Poly([2 * n - 1 + b, -1]), polys[n - 1])
        second = poly_scale(-(n - 1 + b), polys[n - 2])
        polys.append(poly_scale(Fraction(1, n), poly_add(first, second)))
    return [LaguerreResult(params, n, p, Method.RECURRENCE) for n, p in enumerate(polys)]

