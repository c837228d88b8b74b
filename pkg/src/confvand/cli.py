"""Command-line front end.

    confvand COMMAND [--float] [--format json|csv] [--input FILE] [--tolerance X]

The payload is read as JSON from ``--input`` or standard input.  Exit codes:
0 success, 2 invalid input, 3 numeric failure (float realization only),
64 usage error.  Nothing is written to stdout on failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence

import jsonschema

from . import serialize as ser
from .companion import companion_matrix, expand_monic, jordan_form, verify_similarity
from .hermite import hermite_basis, partial_fractions, recombine
from .matrix import Matrix, identity_residual
from .scalar import EXACT, FLOAT
from .vandermonde import (
    build_confluent,
    build_rs,
    build_usual,
    default_tolerance,
    invert_confluent,
    invert_rs,
    invert_usual,
    solve_confluent,
    solve_usual,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NUMERIC = 3
EXIT_USAGE = 64

COMMANDS = tuple(ser.SCHEMAS)


class UsageError(Exception):
    pass


class NumericFailure(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)

    def exit(self, status=0, message=None):
        # only reached for --help
        raise _HelpExit(message or "")


class _HelpExit(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="confvand", description="Exact confluent Vandermonde inversion toolkit.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--float", dest="use_float", action="store_true", help="use binary64 instead of exact rationals")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--input", metavar="FILE", help="payload file (default: stdin)")
    p.add_argument("--tolerance", type=float, metavar="X", help="residual budget (float realization only)")
    return p


class _Result:
    """What a command produced: a JSON object plus a CSV rendering."""

    def __init__(self, obj, csv: str, residual: float | None = None, n: int = 1):
        self.obj = obj
        self.csv = csv
        self.residual = residual
        self.n = n


def _matrix_csv(m: Matrix, field) -> str:
    return ser.csv_rows([ser.vector_to_json(r, field) for r in m.entries])


def _vector_residual(lhs, rhs) -> float:
    return max((abs(float(a) - float(b)) for a, b in zip(lhs, rhs)), default=0.0)


def _cmd_invert(payload, field):
    system = ser.node_system_from_json(payload["nodes"], field)
    inv = invert_confluent(system)
    res = identity_residual(build_confluent(system) @ inv) if not field.exact else None
    return _Result(ser.matrix_to_json(inv, field), _matrix_csv(inv, field), res, system.n)


def _cmd_invert_rs(payload, field):
    system = ser.node_system_from_json(payload["nodes"], field)
    table = payload["exponents"]
    inv = invert_rs(system, table)
    res = identity_residual(build_rs(system, table) @ inv) if not field.exact else None
    return _Result(ser.matrix_to_json(inv, field), _matrix_csv(inv, field), res, system.n)


def _cmd_invert_usual(payload, field):
    alphas = [ser.scalar_in(a, field) for a in payload["alphas"]]
    inv = invert_usual(alphas, field)
    res = identity_residual(build_usual(alphas, field) @ inv) if not field.exact else None
    return _Result(ser.matrix_to_json(inv, field), _matrix_csv(inv, field), res, len(alphas))


def _cmd_solve(payload, field):
    system = ser.node_system_from_json(payload["nodes"], field)
    u = [ser.scalar_in(c, field) for c in payload["rhs"]]
    x = solve_confluent(system, u)
    res = _vector_residual(build_confluent(system) @ x, u) if not field.exact else None
    out = ser.vector_to_json(x, field)
    return _Result({"solution": out}, ser.csv_rows([[c] for c in out]), res, system.n)


def _cmd_solve_usual(payload, field):
    alphas = [ser.scalar_in(a, field) for a in payload["alphas"]]
    u = [ser.scalar_in(c, field) for c in payload["rhs"]]
    x = solve_usual(alphas, u, field)
    res = _vector_residual(build_usual(alphas, field) @ x, u) if not field.exact else None
    out = ser.vector_to_json(x, field)
    return _Result({"solution": out}, ser.csv_rows([[c] for c in out]), res, len(alphas))


def _cmd_partfrac(payload, field):
    system = ser.node_system_from_json(payload["nodes"], field)
    terms = partial_fractions(system)
    res = None
    if not field.exact:
        defect = recombine(terms, system) - 1
        res = max((abs(c) for c in defect.coeffs), default=0.0)
    obj = ser.partial_fractions_to_json(terms, field)
    csv = ser.csv_rows([["node", "exponent", "coefficient"]] + [[str(t["node"]), str(t["exponent"]), t["coefficient"]] for t in obj])
    return _Result(obj, csv, res, system.n)


def _cmd_basis(payload, field):
    system = ser.node_system_from_json(payload["nodes"], field)
    basis = hermite_basis(system)
    polys = basis.in_block_order()
    res = None
    if not field.exact:
        res = identity_residual(build_confluent(system) @ invert_confluent(system, basis))
    obj = [ser.polynomial_to_json(p, field) for p in polys]
    csv = ser.csv_rows([ser.vector_to_json(p.padded(system.n), field) for p in polys])
    return _Result(obj, csv, res, system.n)


def _cmd_companion(payload, field, tol=None):
    system = ser.node_system_from_json(payload["nodes"], field)
    cp = companion_matrix(expand_monic(system))
    j = jordan_form(system)
    vg = build_confluent(system)
    tol = 0.0 if field.exact else (tol if tol is not None else default_tolerance(system.n))
    report = verify_similarity(system, tol=tol)
    obj = {
        "companion": ser.matrix_to_json(cp, field),
        "jordan": ser.matrix_to_json(j, field),
        "vandermonde": ser.matrix_to_json(vg, field),
        "similarity_ok": report.ok,
    }
    csv = "".join(f"# {name}\n" + _matrix_csv(m, field) for name, m in (("companion", cp), ("jordan", j), ("vandermonde", vg)))
    return _Result(obj, csv, None if field.exact else report.residual, system.n)


_HANDLERS = {
    "invert": _cmd_invert,
    "invert-rs": _cmd_invert_rs,
    "invert-usual": _cmd_invert_usual,
    "solve": _cmd_solve,
    "solve-usual": _cmd_solve_usual,
    "partfrac": _cmd_partfrac,
    "basis": _cmd_basis,
    "companion": _cmd_companion,
}


def _execute(args, raw: bytes) -> str:
    field = FLOAT if args.use_float else EXACT
    try:
        payload = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ValueError(f"malformed JSON: {exc}") from None
    try:
        jsonschema.validate(payload, ser.SCHEMAS[args.command])
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise ValueError(f"payload does not match the {args.command} schema at {where}: {exc.message}") from None

    handler = _HANDLERS[args.command]
    if args.command == "companion":
        result = handler(payload, field, args.tolerance)
    else:
        result = handler(payload, field)

    if not field.exact:
        tol = args.tolerance if args.tolerance is not None else default_tolerance(result.n)
        if result.residual is not None and not (math.isfinite(result.residual) and result.residual <= tol):
            raise NumericFailure(f"residual {result.residual!r} exceeds tolerance {tol!r}")
        if args.command == "companion" and not result.obj["similarity_ok"]:
            raise NumericFailure("companion similarity failed within tolerance")

    if args.format == "csv":
        return result.csv
    obj = result.obj
    if not field.exact:
        obj = dict(obj) if isinstance(obj, dict) else {"result": obj}
        obj["residual"] = result.residual
    return ser.dumps(obj)


def run(argv: Sequence[str], stdin=b"") -> tuple:
    """Run one command; returns ``(exit_code, stdout_bytes, stderr_bytes)``.

    ``stdin`` is bytes or a binary stream; a stream is read only once the
    arguments have parsed and no ``--input`` file was given.
    """
    try:
        args = build_parser().parse_args(list(argv))
        if args.tolerance is not None and not args.use_float:
            raise UsageError("--tolerance only applies together with --float")
        if args.tolerance is not None and not args.tolerance > 0:
            raise UsageError("--tolerance must be positive")
    except _HelpExit as exc:
        return EXIT_OK, build_parser().format_help().encode(), str(exc).encode()
    except UsageError as exc:
        return EXIT_USAGE, b"", f"usage error: {exc}\n{build_parser().format_usage()}".encode()

    try:
        if args.input:
            with open(args.input, "rb") as fh:
                raw = fh.read()
        else:
            raw = stdin.read() if hasattr(stdin, "read") else stdin
    except OSError as exc:
        return EXIT_INPUT, b"", f"error: cannot read input: {exc}\n".encode()

    try:
        out = _execute(args, raw)
    except NumericFailure as exc:
        return EXIT_NUMERIC, b"", f"numeric failure: {exc}\n".encode()
    except (ZeroDivisionError, OverflowError) as exc:
        code = EXIT_NUMERIC if args.use_float else EXIT_INPUT
        return code, b"", f"error: {exc}\n".encode()
    except (ValueError, TypeError, KeyError, IndexError) as exc:
        return EXIT_INPUT, b"", f"invalid input: {exc}\n".encode()
    return EXIT_OK, out.encode(), b""


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    code, out, err = run(argv, sys.stdin.buffer)
    sys.stdout.buffer.write(out)
    sys.stdout.flush()
    sys.stderr.buffer.write(err)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
