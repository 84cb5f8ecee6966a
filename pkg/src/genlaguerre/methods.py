"""Uniform access to the five constructors."""
from __future__ import annotations

from .detform import DEFAULT_COMPOSITION_CAP, laguerre_composition, laguerre_det
from .exceptions import UnsupportedParameterError
from .laguerre import Q1_ONLY, LaguerreResult, Method, Params, laguerre_closed, laguerre_series
from .recurrence import laguerre_recurrence

__all__ = ["ALL_METHODS", "applicable", "construct", "construct_range"]

ALL_METHODS = tuple(Method)


def applicable(method: Method, params: Params) -> bool:
    return params.q == 1 or method not in Q1_ONLY


def construct(method: Method | str, params: Params, n: int,
              composition_cap: int = DEFAULT_COMPOSITION_CAP) -> LaguerreResult:
    method = Method(method)
    if not applicable(method, params):
        raise UnsupportedParameterError(f"method {method.value} requires q = 1 (got q={params.q})")
    if method is Method.SERIES:
        return laguerre_series(params, n)
    if method is Method.CLOSED:
        return laguerre_closed(params, n)
    if method is Method.RECURRENCE:
        return laguerre_recurrence(params, n)[n]
    if method is Method.DETERMINANT:
        return laguerre_det(params, n)
    return laguerre_composition(params, n, cap=composition_cap)


def construct_range(method: Method | str, params: Params, nmax: int,
                    composition_cap: int = DEFAULT_COMPOSITION_CAP) -> list[LaguerreResult]:
    """L_0 .. L_nmax by one method; the recurrence builds them in a single pass."""
    method = Method(method)
    if method is Method.RECURRENCE:
        if not applicable(method, params):
            raise UnsupportedParameterError(f"method {method.value} requires q = 1 (got q={params.q})")
        return laguerre_recurrence(params, nmax)
    return [construct(method, params, n, composition_cap) for n in range(nmax + 1)]
