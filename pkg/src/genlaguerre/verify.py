"""Cross-method equality sweep.

Every applicable constructor is compared, coefficient vector against
coefficient vector, with a reference method (the defining series unless it
is excluded).  Agreement means exact rational equality.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .laguerre import Method, Params, Q1_ONLY
from .methods import construct_range
from .poly import Poly
from .scalar import format_rational, parse_rational

__all__ = [
    "DEFAULT_ALPHAS",
    "DEFAULT_BETAS",
    "DEFAULT_NMAX",
    "DEFAULT_VERIFY_COMPOSITION_CAP",
    "Corruption",
    "Discrepancy",
    "PointStatus",
    "VerifyReport",
    "run_verify",
]

DEFAULT_ALPHAS = (1, 2, 3)
DEFAULT_BETAS = (Fraction(0), Fraction(1, 2), Fraction(-1, 3), Fraction(7, 2))
DEFAULT_NMAX = 12
DEFAULT_VERIFY_COMPOSITION_CAP = 10


@dataclass(frozen=True)
class Corruption:
    """Fault injection: add ``delta`` to coefficient ``k`` of one constructor output."""

    method: Method
    alpha: int
    beta: Fraction
    n: int
    k: int
    delta: Fraction = Fraction(1)

    def apply(self, method: Method, params: Params, n: int, poly: Poly) -> Poly:
        if (method, params.alpha, params.beta, n) != (self.method, self.alpha, self.beta, self.n):
            return poly
        coeffs = list(poly.coeffs) + [Fraction(0)] * max(0, self.k + 1 - len(poly.coeffs))
        coeffs[self.k] += self.delta
        return Poly(coeffs)

    @classmethod
    def parse(cls, text: str) -> Corruption:
        """``METHOD:ALPHA:BETA:N:K``, e.g. ``determinant:2:1/2:7:3``."""
        parts = text.split(":")
        if len(parts) != 5:
            raise ValueError(f"expected METHOD:ALPHA:BETA:N:K, got {text!r}")
        method, alpha, beta, n, k = parts
        return cls(Method(method), int(alpha), parse_rational(beta), int(n), int(k))


@dataclass(frozen=True)
class Discrepancy:
    params: Params
    n: int
    reference: Method
    method: Method
    index: int
    expected: Fraction
    actual: Fraction

    def to_dict(self) -> dict:
        return {
            "alpha": self.params.alpha,
            "beta": format_rational(self.params.beta),
            "q": self.params.q,
            "n": self.n,
            "pair": [self.reference.value, self.method.value],
            "index": self.index,
            "expected": format_rational(self.expected),
            "actual": format_rational(self.actual),
        }


@dataclass
class PointStatus:
    params: Params
    n: int
    pairs: dict[tuple[Method, Method], bool] = field(default_factory=dict)
    discrepancies: list[Discrepancy] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.pairs.values())

    def to_dict(self) -> dict:
        return {
            "alpha": self.params.alpha,
            "beta": format_rational(self.params.beta),
            "q": self.params.q,
            "n": self.n,
            "pairs": {f"{a.value}~{b.value}": ("pass" if ok else "fail")
                      for (a, b), ok in self.pairs.items()},
        }


@dataclass
class VerifyReport:
    methods: tuple[Method, ...]
    points: list[PointStatus]

    @property
    def ok(self) -> bool:
        return all(p.ok for p in self.points)

    @property
    def grid(self) -> list[tuple[int, Fraction, int, int]]:
        return [(p.params.alpha, p.params.beta, p.params.q, p.n) for p in self.points]

    @property
    def first_discrepancy(self) -> Discrepancy | None:
        for p in self.points:
            if p.discrepancies:
                return p.discrepancies[0]
        return None

    @property
    def comparisons(self) -> int:
        return sum(len(p.pairs) for p in self.points)

    def to_dict(self) -> dict:
        first = self.first_discrepancy
        return {
            "status": "pass" if self.ok else "fail",
            "methods": [m.value for m in self.methods],
            "points": len(self.points),
            "comparisons": self.comparisons,
            "failures": sum(1 for p in self.points for ok in p.pairs.values() if not ok),
            "first_discrepancy": first.to_dict() if first else None,
            "grid": [p.to_dict() for p in self.points],
        }


def _first_difference(a: Poly, b: Poly) -> int:
    for i in range(max(len(a.coeffs), len(b.coeffs))):
        if a.coeff(i) != b.coeff(i):
            return i
    raise ValueError("polynomials are equal")


def _sweep_group(params: Params, nmax: int, methods: Sequence[Method],
                 composition_cap: int, corruption: Corruption | None) -> list[PointStatus]:
    usable = [m for m in methods if params.q == 1 or m not in Q1_ONLY]
    outputs: dict[Method, list[Poly]] = {}
    for m in usable:
        top = min(nmax, composition_cap) if m is Method.COMPOSITION else nmax
        if top < 0:
            continue
        polys = [r.poly for r in construct_range(m, params, top, composition_cap=composition_cap)]
        if corruption is not None:
            polys = [corruption.apply(m, params, n, p) for n, p in enumerate(polys)]
        outputs[m] = polys

    points = []
    for n in range(nmax + 1):
        status = PointStatus(params, n)
        present = [m for m in usable if m in outputs and n < len(outputs[m])]
        if present:
            ref = present[0]
            for m in present[1:]:
                a, b = outputs[ref][n], outputs[m][n]
                same = a == b
                status.pairs[(ref, m)] = same
                if not same:
                    i = _first_difference(a, b)
                    status.discrepancies.append(
                        Discrepancy(params, n, ref, m, i, a.coeff(i), b.coeff(i)))
        points.append(status)
    return points


def run_verify(alphas: Iterable[int] = DEFAULT_ALPHAS,
               betas: Iterable = DEFAULT_BETAS,
               qs: Iterable[int] = (1,),
               nmax: int = DEFAULT_NMAX,
               methods: Iterable[Method | str] = tuple(Method),
               composition_cap: int = DEFAULT_VERIFY_COMPOSITION_CAP,
               corruption: Corruption | None = None,
               jobs: int = 1) -> VerifyReport:
    """Compare all requested constructors on the grid alphas x betas x qs x [0, nmax].

    Methods needing q = 1 are skipped at q > 1 points; the composition
    form is only run up to ``composition_cap``.  The report lists points in
    grid order regardless of ``jobs``.
    """
    methods = tuple(dict.fromkeys(Method(m) for m in methods))
    groups = [Params(a, b, q) for a, b, q in itertools.product(alphas, betas, qs)]

    def work(params: Params) -> list[PointStatus]:
        return _sweep_group(params, nmax, methods, composition_cap, corruption)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(work, groups))
    else:
        chunks = [work(g) for g in groups]
    return VerifyReport(methods, [p for chunk in chunks for p in chunk])
