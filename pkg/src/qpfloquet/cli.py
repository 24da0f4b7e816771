"""Command-line front end.

Problem files are JSON::

    {"coefficients": {"a": SEQ, "b": SEQ, "c": SEQ},
     "sweep": {"lo": -3, "hi": 3, "steps": 61, "potential": [0.0, 1.0]}}

with ``SEQ = {"period": p, "ratio": [re, im], "base": [[re, im], ...]}``.
The ``coefficients`` wrapper may be omitted.  Data goes to stdout,
diagnostics to stderr; exit status is 0 on success, 2 for bad input and 3
when a size limit is exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any, Optional, Sequence

import numpy as np

from . import chebyshev, floquet, monodromy, multiindex
from .errors import CapacityError, InvalidInputError
from .qpseq import EquationCoefficients, NonVanishingQPSequence, QPSequence, _complex

EXIT_INPUT = 2
EXIT_CAPACITY = 3
METHODS = ("closed", "recurrence", "oracle")


# -- formatting -----------------------------------------------------------------

def fmt(x: float) -> str:
    """17 significant digits; ``-0`` is printed as ``0``."""
    x = float(x)
    if x == 0:
        x = 0.0
    return format(x, ".17g")


def dumps(obj: Any) -> str:
    """Deterministic JSON with fixed key order and 17-digit floats."""
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return fmt(obj)
    if isinstance(obj, complex):
        return dumps([obj.real, obj.imag])
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {dumps(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def write_csv(out, header: Sequence[str], rows) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt(v) if isinstance(v, float) else v for v in row])


def parse_complex(text: str) -> complex:
    """``"RE,IM"`` or a bare real ``"RE"``."""
    parts = [t.strip() for t in text.split(",")]
    try:
        if len(parts) == 1:
            return _complex(float(parts[0]), "value")
        if len(parts) == 2:
            return _complex([float(parts[0]), float(parts[1])], "value")
    except ValueError as exc:
        raise InvalidInputError(f"cannot parse complex value {text!r}") from exc
    raise InvalidInputError(f"cannot parse complex value {text!r}")


# -- problem files --------------------------------------------------------------

def read_problem(path: Optional[str]) -> dict:
    if path is None or path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InvalidInputError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"malformed JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InvalidInputError("problem file must hold a JSON object")
    return data


def coefficients_of(data: dict, require_b: bool = True) -> EquationCoefficients:
    block = data.get("coefficients", data)
    if not isinstance(block, dict):
        raise InvalidInputError("'coefficients' must be an object")
    if not require_b and "b" not in block and "a" in block:
        a = NonVanishingQPSequence.from_dict(block["a"])
        block = dict(block, b=QPSequence(a.period, a.ratio, [0] * a.period).to_dict())
    return EquationCoefficients.from_dict(block)


# -- subcommands ----------------------------------------------------------------

def _by_method(coeffs: EquationCoefficients, method: str) -> floquet.FloquetResult:
    if method == "closed":
        return floquet.q_closed_form(coeffs)
    if method == "recurrence":
        return floquet.q_by_recurrence(coeffs)
    if method == "oracle":
        return monodromy.q_oracle(coeffs)
    raise InvalidInputError(f"unknown method {method!r}")


def _record(res: floquet.FloquetResult) -> dict:
    return {"method": res.method.value, "q": res.q, "gamma": res.gamma}


def cmd_param(args, out) -> None:
    coeffs = coefficients_of(read_problem(args.file))
    methods = METHODS if args.method == "all" else (args.method,)
    results = [_by_method(coeffs, m) for m in methods]
    if args.output == "csv":
        write_csv(
            out,
            ["method", "q_re", "q_im", "gamma_re", "gamma_im"],
            [[r.method.value, r.q.real, r.q.imag, r.gamma.real, r.gamma.imag] for r in results],
        )
        return
    if args.method != "all":
        out.write(dumps(_record(results[0])) + "\n")
        return
    deltas = {}
    for i in range(len(results)):
        for j in range(i + 1, len(results)):
            key = f"{results[i].method.value}-{results[j].method.value}"
            deltas[key] = abs(results[i].q - results[j].q)
    record = {"method": "all", "period": coeffs.period, "results": [_record(r) for r in results], "deltas": deltas}
    out.write(dumps(record) + "\n")


def cmd_solve(args, out) -> None:
    coeffs = coefficients_of(read_problem(args.file))
    traj = monodromy.propagate(coeffs, args.m, parse_complex(args.z0), parse_complex(args.z1), args.lo, args.hi)
    rows = [(k, complex(v)) for k, v in zip(traj.indices, traj.values)]
    if args.output == "json":
        out.write(dumps({"start": traj.start, "values": [v for _, v in rows]}) + "\n")
        return
    write_csv(out, ["k", "re", "im"], [[k, v.real, v.imag] for k, v in rows])


def cmd_check(args, out) -> None:
    coeffs = coefficients_of(read_problem(args.file))
    r_hat = parse_complex(args.rhat)
    if r_hat == 0:
        raise InvalidInputError("--rhat must be nonzero")
    lhs, rhs = floquet.qp_criterion(coeffs, r_hat)
    holds = floquet.has_qp_solutions(coeffs, r_hat, args.tol)
    ratios = list(floquet.qp_ratios(coeffs))
    out.write(dumps({"holds": holds, "rhat": r_hat, "lhs": lhs, "rhs": rhs, "ratios": ratios}) + "\n")


BAND_TOL = 1e-9


def cmd_sweep(args, out) -> None:
    data = read_problem(args.file)
    sweep = data.get("sweep")
    if not isinstance(sweep, dict):
        raise InvalidInputError("problem file has no 'sweep' block")
    coeffs = coefficients_of(data, require_b=False)
    a, c = coeffs.a, coeffs.c
    if not (a.is_real() and c.is_real() and a.base == c.base and coeffs.ratio == 1):
        raise InvalidInputError("sweep needs symmetric real coefficients (a = c real, ratio 1)")
    try:
        lo, hi, steps = float(sweep["lo"]), float(sweep["hi"]), int(sweep["steps"])
        potential = [float(v) for v in sweep.get("potential", [0.0] * a.period)]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInputError(f"bad sweep block: {exc}") from exc
    if steps < 0:
        raise InvalidInputError("steps must be non-negative")
    if len(potential) != a.period:
        raise InvalidInputError(f"potential has {len(potential)} values, period is {a.period}")
    method = "closed" if args.method == "all" else args.method
    rows = []
    for energy in np.linspace(lo, hi, steps):
        b = QPSequence(a.period, 1, [energy - v for v in potential])
        q = _by_method(EquationCoefficients(a, b, c), method).q
        bounded = abs(q.imag) <= BAND_TOL and abs(q.real) - 1 <= BAND_TOL
        rows.append((float(energy), q, bounded))
    if args.output == "json":
        out.write(dumps([{"E": e, "q": q, "bounded": f} for e, q, f in rows]) + "\n")
        return
    write_csv(out, ["E", "q_re", "q_im", "bounded"], [[e, q.real, q.imag, str(f).lower()] for e, q, f in rows])


def cmd_enumerate(args, out) -> None:
    for alpha in multiindex.enumerate_lambda(args.p, args.j):
        out.write(str(alpha) + "\n")


def cmd_chebyshev(args, out) -> None:
    value = chebyshev.cheb_eval(chebyshev.ChebKind.parse(args.kind), args.k, parse_complex(args.x))
    if args.output == "csv":
        write_csv(out, ["re", "im"], [[value.real, value.imag]])
        return
    out.write(dumps({"kind": chebyshev.ChebKind.parse(args.kind).value, "k": args.k, "value": value}) + "\n")


# -- entry point ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qpfloquet",
        description="Floquet parameters of second-order difference equations with quasi-periodic coefficients.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_file(p):
        p.add_argument("file", nargs="?", default=None, help="problem JSON (default: stdin)")
        return p

    p = with_file(sub.add_parser("param", help="Floquet parameter q"))
    p.add_argument("--method", choices=METHODS + ("all",), default="closed")
    p.add_argument("--output", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_param)

    p = with_file(sub.add_parser("solve", help="propagate a solution"))
    p.add_argument("--m", type=int, default=0, help="index of the first seed value")
    p.add_argument("--z0", default="1", help="z(m) as RE,IM")
    p.add_argument("--z1", default="1", help="z(m+1) as RE,IM")
    p.add_argument("--lo", type=int, default=0)
    p.add_argument("--hi", type=int, default=20)
    p.add_argument("--output", choices=("json", "csv"), default="csv")
    p.set_defaults(func=cmd_solve)

    p = with_file(sub.add_parser("check", help="existence of quasi-periodic solutions"))
    p.add_argument("--rhat", default="1", help="ratio as RE,IM (default 1: periodic)")
    p.add_argument("--tol", type=float, default=floquet.DEFAULT_TOL)
    p.add_argument("--output", choices=("json",), default="json")
    p.set_defaults(func=cmd_check)

    p = with_file(sub.add_parser("sweep", help="q(E) over a grid of spectral parameters"))
    p.add_argument("--method", choices=METHODS + ("all",), default="closed")
    p.add_argument("--output", choices=("json", "csv"), default="csv")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("enumerate", help="list the multi-indices of order p and weight j")
    p.add_argument("p", type=int)
    p.add_argument("j", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("chebyshev", help="evaluate a Chebyshev polynomial")
    p.add_argument("kind", help="T, U, V or W")
    p.add_argument("k", type=int)
    p.add_argument("x", help="argument as RE,IM or RE")
    p.add_argument("--output", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_chebyshev)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    buf = io.StringIO()
    try:
        args.func(args, buf)
    except CapacityError as exc:
        print(f"qpfloquet: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except InvalidInputError as exc:
        print(f"qpfloquet: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(buf.getvalue())
    return 0


if __name__ == "__main__":
    sys.exit(main())
