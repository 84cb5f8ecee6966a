"""
Command-line interface for genlaguerre.

Usage:
    genlaguerre coeffs --alpha 2 --beta 1/2 --n 5 --method determinant
    genlaguerre table --alpha 1 --beta 0 --nmax 6 --format csv
    genlaguerre eval --alpha 1 --beta 0 --n 2 --z 2
    genlaguerre eval --alpha 1.5 --beta 0 --n 3 --z 1 --float
    genlaguerre verify                  # default five-method grid
    genlaguerre bench --nmax 12 --format csv

Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.
"""
from __future__ import annotations

import csv
import io
import json
import math
import sys
import time

import click

from .detform import DEFAULT_COMPOSITION_CAP
from .exceptions import ParameterError
from .laguerre import Method, Params
from .methods import ALL_METHODS, applicable, construct, construct_range
from .numeric import laguerre_eval_float
from .poly import poly_eval
from .scalar import format_rational, parse_rational
from .verify import (
    DEFAULT_ALPHAS,
    DEFAULT_BETAS,
    DEFAULT_NMAX,
    DEFAULT_VERIFY_COMPOSITION_CAP,
    Corruption,
    run_verify,
)

__all__ = ["cli", "main"]

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

FORMATS = click.Choice(["json", "csv", "plain"])
METHOD_CHOICE = click.Choice([m.value for m in Method])


def _int_list(text: str, name: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {text!r}", param_hint=name)


def _rational_list(text: str, name: str):
    # betas like "1/2" contain no commas, so a plain split is enough
    try:
        return [parse_rational(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint=name)


def _method_list(text: str, name: str) -> list[Method]:
    try:
        return [Method(t.strip()) for t in text.split(",") if t.strip()]
    except ValueError:
        valid = ", ".join(m.value for m in Method)
        raise click.BadParameter(f"unknown method in {text!r}; choose from {valid}", param_hint=name)


def _exact_params(alpha: str, beta: str, q: int) -> Params:
    try:
        a = int(alpha)
    except ValueError:
        raise click.UsageError(
            f"--alpha {alpha!r} is not an integer; the exact path needs integer alpha "
            "(use eval --float for real alpha)")
    try:
        return Params(a, parse_rational(beta), q)
    except (ParameterError, ValueError) as exc:
        raise click.UsageError(str(exc))


def _build(method: Method, params: Params, n: int, cap: int):
    if not applicable(method, params):
        raise click.UsageError(f"method {method.value} is only defined for q = 1 (got --q {params.q})")
    try:
        return construct(method, params, n, composition_cap=cap)
    except ParameterError as exc:
        raise click.UsageError(str(exc))


def _emit(text: str) -> None:
    click.echo(text.rstrip("\n"))


def _csv(header: list[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _float_json(x: float):
    # json has no inf; keep the field present and machine-readable
    return x if math.isfinite(x) else "inf"


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def cli():
    """Exact generalized Laguerre polynomials by five independent constructions."""


def _param_options(f):
    f = click.option("--q", "q", type=int, default=1, show_default=True, help="Index divisor q >= 1.")(f)
    f = click.option("--beta", default="0", show_default=True, help="beta > -1 as p/q, integer or decimal.")(f)
    f = click.option("--alpha", default="1", show_default=True, help="Positive integer alpha.")(f)
    return f


@cli.command()
@_param_options
@click.option("--n", "n", type=click.IntRange(min=0), required=True)
@click.option("--method", type=METHOD_CHOICE, default="closed", show_default=True)
@click.option("--format", "fmt", type=FORMATS, default="json", show_default=True)
@click.option("--composition-cap", type=click.IntRange(min=0), default=DEFAULT_COMPOSITION_CAP,
              show_default=True)
def coeffs(alpha, beta, q, n, method, fmt, composition_cap):
    """Coefficients of L_{floor(n/q)}^{(alpha,beta)}(z), constant term first."""
    params = _exact_params(alpha, beta, q)
    result = _build(Method(method), params, n, composition_cap)
    if fmt == "json":
        _emit(json.dumps(result.to_dict()))
    elif fmt == "csv":
        _emit(_csv(["k", "coeff"], enumerate(result.poly.to_strings())))
    else:
        _emit(str(result.poly))


@cli.command()
@_param_options
@click.option("--nmax", type=click.IntRange(min=0), required=True)
@click.option("--method", type=METHOD_CHOICE, default="closed", show_default=True)
@click.option("--format", "fmt", type=FORMATS, default="json", show_default=True)
@click.option("--composition-cap", type=click.IntRange(min=0), default=DEFAULT_COMPOSITION_CAP,
              show_default=True)
def table(alpha, beta, q, nmax, method, fmt, composition_cap):
    """Coefficient vectors for n = 0..nmax."""
    params = _exact_params(alpha, beta, q)
    method = Method(method)
    _build(method, params, 0, composition_cap)
    if method is Method.COMPOSITION and nmax > composition_cap:
        raise click.UsageError(f"--nmax {nmax} exceeds --composition-cap {composition_cap}")
    results = construct_range(method, params, nmax, composition_cap=composition_cap)
    if fmt == "json":
        _emit(json.dumps([r.to_dict() for r in results]))
    elif fmt == "csv":
        rows = [(r.n, k, c) for r in results for k, c in enumerate(r.poly.to_strings())]
        _emit(_csv(["n", "k", "coeff"], rows))
    else:
        for r in results:
            click.echo(f"{r.n}\t{r.poly}")


@cli.command("eval")
@_param_options
@click.option("--n", "n", type=click.IntRange(min=0), required=True)
@click.option("--z", "z", required=True, help="Evaluation point (p/q or decimal; real with --float).")
@click.option("--method", type=METHOD_CHOICE, default="closed", show_default=True)
@click.option("--float", "use_float", is_flag=True, help="Double-precision path; allows real alpha.")
@click.option("--format", "fmt", type=FORMATS, default="plain", show_default=True)
def eval_cmd(alpha, beta, q, n, z, method, use_float, fmt):
    """Evaluate L_{floor(n/q)}^{(alpha,beta)} at z."""
    if use_float:
        try:
            fa, fb, fz = (float(parse_rational(t)) for t in (alpha, beta, z))
        except ValueError as exc:
            raise click.UsageError(str(exc))
        try:
            res = laguerre_eval_float(fa, fb, q, n, fz)
        except ParameterError as exc:
            raise click.UsageError(str(exc))
        if fmt == "json":
            out = {"alpha": fa, "beta": fb, "q": q, "n": n, "z": fz}
            out.update({k: _float_json(v) for k, v in res.to_dict().items()})
            _emit(json.dumps(out))
        elif fmt == "csv":
            _emit(_csv(["value", "abs_term_sum", "condition"],
                       [(repr(res.value), repr(res.abs_term_sum), repr(res.condition))]))
        else:
            click.echo(f"value {res.value!r}")
            click.echo(f"abs_term_sum {res.abs_term_sum!r}")
            click.echo(f"condition {res.condition!r}")
        return

    params = _exact_params(alpha, beta, q)
    try:
        zr = parse_rational(z)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    value = poly_eval(_build(Method(method), params, n, DEFAULT_COMPOSITION_CAP).poly, zr)
    if fmt == "json":
        _emit(json.dumps({"alpha": params.alpha, "beta": format_rational(params.beta), "q": q,
                          "n": n, "z": format_rational(zr), "method": method,
                          "value": format_rational(value)}))
    elif fmt == "csv":
        _emit(_csv(["value"], [(format_rational(value),)]))
    else:
        click.echo(format_rational(value))


@cli.command()
@click.option("--alphas", default=",".join(map(str, DEFAULT_ALPHAS)), show_default=True)
@click.option("--betas", default=",".join(map(format_rational, DEFAULT_BETAS)), show_default=True)
@click.option("--qs", default="1", show_default=True)
@click.option("--nmax", type=click.IntRange(min=0), default=DEFAULT_NMAX, show_default=True)
@click.option("--methods", default=",".join(m.value for m in ALL_METHODS), show_default=True)
@click.option("--composition-cap", type=click.IntRange(min=0), default=DEFAULT_VERIFY_COMPOSITION_CAP,
              show_default=True, help="Composition form is compared only up to this n.")
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--format", "fmt", type=FORMATS, default="json", show_default=True)
@click.option("--inject-fault", default=None, hidden=True, metavar="METHOD:ALPHA:BETA:N:K",
              help="Add 1 to one coefficient of one constructor output (self-test hook).")
@click.pass_context
def verify(ctx, alphas, betas, qs, nmax, methods, composition_cap, jobs, fmt, inject_fault):
    """Check that every constructor yields identical coefficients on a grid."""
    alpha_list = _int_list(alphas, "--alphas")
    beta_list = _rational_list(betas, "--betas")
    q_list = _int_list(qs, "--qs")
    method_list = _method_list(methods, "--methods")
    if not method_list:
        raise click.BadParameter("no methods given", param_hint="--methods")
    corruption = None
    if inject_fault:
        try:
            corruption = Corruption.parse(inject_fault)
        except ValueError as exc:
            raise click.BadParameter(str(exc), param_hint="--inject-fault")
    try:
        report = run_verify(alpha_list, beta_list, q_list, nmax, method_list,
                            composition_cap=composition_cap, corruption=corruption, jobs=jobs)
    except ParameterError as exc:
        raise click.UsageError(str(exc))

    if fmt == "json":
        _emit(json.dumps(report.to_dict()))
    elif fmt == "csv":
        rows = []
        for p in report.points:
            for (a, b), ok in p.pairs.items():
                rows.append((p.params.alpha, format_rational(p.params.beta), p.params.q, p.n,
                             f"{a.value}~{b.value}", "pass" if ok else "fail"))
        _emit(_csv(["alpha", "beta", "q", "n", "pair", "status"], rows))
    else:
        d = report.to_dict()
        click.echo(f"status {d['status']}: {d['comparisons']} comparisons over {d['points']} points, "
                   f"{d['failures']} failed")
        if d["first_discrepancy"]:
            fd = d["first_discrepancy"]
            click.echo(f"first discrepancy: alpha={fd['alpha']} beta={fd['beta']} q={fd['q']} "
                       f"n={fd['n']} {fd['pair'][0]} vs {fd['pair'][1]} at z^{fd['index']}: "
                       f"{fd['expected']} != {fd['actual']}")
    ctx.exit(EXIT_OK if report.ok else EXIT_VERIFY_FAILED)


def _time_call(fn, repeat: int) -> int:
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter_ns()
        fn()
        dt = time.perf_counter_ns() - t0
        best = dt if best is None else min(best, dt)
    return best


@cli.command()
@_param_options
@click.option("--nmax", type=click.IntRange(min=0), default=DEFAULT_NMAX, show_default=True)
@click.option("--methods", default=",".join(m.value for m in ALL_METHODS), show_default=True)
@click.option("--repeat", type=click.IntRange(min=1), default=3, show_default=True,
              help="Report the fastest of this many runs.")
@click.option("--composition-cap", type=click.IntRange(min=0), default=DEFAULT_COMPOSITION_CAP,
              show_default=True)
@click.option("--format", "fmt", type=FORMATS, default="csv", show_default=True)
def bench(alpha, beta, q, nmax, methods, repeat, composition_cap, fmt):
    """Wall time per method and n (best of --repeat runs), in nanoseconds."""
    params = _exact_params(alpha, beta, q)
    method_list = _method_list(methods, "--methods")
    for m in method_list:
        if not applicable(m, params):
            raise click.UsageError(f"method {m.value} is only defined for q = 1 (got --q {q})")
    if Method.COMPOSITION in method_list and nmax > composition_cap:
        raise click.UsageError(f"--nmax {nmax} exceeds --composition-cap {composition_cap} "
                               "for the composition method")
    rows = []
    for m in method_list:
        for n in range(nmax + 1):
            nanos = _time_call(lambda: construct(m, params, n, composition_cap), repeat)
            rows.append((m.value, n, nanos))
    if fmt == "csv":
        _emit(_csv(["method", "n", "nanos"], rows))
    elif fmt == "json":
        _emit(json.dumps([{"method": m, "n": n, "nanos": t} for m, n, t in rows]))
    else:
        for m, n, t in rows:
            click.echo(f"{m:<12} {n:>4} {t:>14}")


def main(argv=None) -> int:
    try:
        cli.main(args=argv, prog_name="genlaguerre", standalone_mode=True)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
