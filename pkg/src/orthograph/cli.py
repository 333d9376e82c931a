"""Command-line front end.

Subcommands: gen (graph generators to DIMACS), solve (exact parameters with
JSON certificates), reduce (CNF to gadget graph), index-code (build and
simulate a linear index code), verify (re-check a certificate against its
graph), selftest (run the full verification battery).

Exit codes: 0 success; 1 verified-infeasible answer or failed verification;
2 usage error; 3 size/dimension cap exceeded.  Output is deterministic for
fixed inputs and seeds.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional, Sequence

from . import acceptance
from .coloring import (
    CapExceededError,
    ImproperColoringError,
    chromatic_number,
    coloring_locality,
    local_chromatic_number,
    num_colors,
)
from .fields import PrimeField, field_from_name
from .graphs import (
    DimacsParseError,
    Graph,
    complement,
    complete_graph,
    cycle_graph,
    empty_graph,
    kneser,
    read_dimacs,
    schrijver,
    write_dimacs,
)
from .indexcoding import IndexCode, check_representing, code_by_method, simulate
from .linalg import FieldTooSmallError, Matrix
from .ortho import (
    Representation,
    independence_violations,
    local_orthogonality_dimension,
    minrank,
    orthogonality_dimension,
    orthogonality_violations,
    rep_locality,
)
from .reduction import build_g, build_g_k, build_g_prime, parse_dimacs_cnf

SCHEMA = 1

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_USAGE = 2
EXIT_CAP = 3


class UsageError(ValueError):
    pass


def _write_output(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _load_graph(path: str) -> Graph:
    with open(path) as fh:
        return read_dimacs(fh.read())


def _prime_field(name: str) -> PrimeField:
    field = field_from_name(name)
    if not isinstance(field, PrimeField):
        raise UsageError("this command needs a finite prime field, not Q")
    return field


# -- gen ----------------------------------------------------------------------


def cmd_gen(args) -> int:
    params = args.params
    try:
        if args.family == "kneser":
            g = kneser(*_ints(params, 2))
        elif args.family == "schrijver":
            g = schrijver(*_ints(params, 2))
        elif args.family == "complete":
            g = complete_graph(*_ints(params, 1))
        elif args.family == "empty":
            g = empty_graph(*_ints(params, 1))
        elif args.family == "cycle":
            g = cycle_graph(*_ints(params, 1))
        else:
            raise UsageError(f"unknown family {args.family!r}")
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _write_output(write_dimacs(g), args.output)
    return EXIT_OK


def _ints(params: Sequence[str], want: int) -> list[int]:
    if len(params) != want:
        raise UsageError(f"expected {want} integer parameter(s), got {len(params)}")
    try:
        return [int(p) for p in params]
    except ValueError:
        raise UsageError(f"non-integer parameter in {params}") from None


# -- solve --------------------------------------------------------------------


def _solve_certificate(param: str, g: Graph, field: Optional[PrimeField], dim_cap: Optional[int]) -> dict:
    cert: dict = {"schema": SCHEMA, "command": f"solve {param}", "param": param}
    if param == "chi":
        res = chromatic_number(g)
        cert.update(value=res.value, exact=True, witness={"coloring": list(res.witness)})
    elif param == "chi-local":
        res = local_chromatic_number(g)
        cert.update(value=res.value, exact=True, witness={"coloring": list(res.witness)})
    elif param == "od":
        res = orthogonality_dimension(g, field)
        cert.update(
            value=res.value,
            exact=True,
            field=field.name,
            witness={"t": res.value, "vectors": [list(v) for v in res.witness]},
        )
    elif param == "od-local":
        res = local_orthogonality_dimension(g, field, dim_cap=dim_cap)
        cert.update(
            value=res.value,
            exact=res.exact_under_cap,
            exactUnderCap=res.exact_under_cap,
            field=field.name,
            witness={
                "t": res.witness.t,
                "vectors": [list(v) for v in res.witness.vectors],
                "dimCap": res.dim_cap,
            },
        )
    elif param == "minrank":
        res = minrank(g, field)
        cert.update(
            value=res.value,
            exact=True,
            field=field.name,
            witness={"t": res.value, "vectors": [list(v) for v in res.witness]},
        )
    else:
        raise UsageError(f"unknown parameter {param!r}")
    cert["lowerBoundReason"] = getattr(res, "lower_bound_reason", "")
    return cert


def cmd_solve(args) -> int:
    g = _load_graph(args.graph)
    field = None
    if args.param in ("od", "od-local", "minrank"):
        field = _prime_field(args.field)
    start = time.monotonic()
    cert = _solve_certificate(args.param, g, field, args.dim_cap)
    cert["wallTime"] = round(time.monotonic() - start, 6)
    errors = _verify_certificate(cert, g)
    cert["verified"] = not errors
    if errors:
        print("certificate failed self-verification: " + "; ".join(errors), file=sys.stderr)
        return EXIT_INFEASIBLE
    if args.json or args.output:
        _write_output(json.dumps(cert, indent=2, sort_keys=True), args.output)
    else:
        print(f"{args.param} = {cert['value']}")
    return EXIT_OK


# -- verify -------------------------------------------------------------------


def _verify_certificate(cert: dict, g: Graph) -> list[str]:
    """Re-check a solve certificate against its graph; empty list means valid."""
    param = cert.get("param")
    value = cert.get("value")
    witness = cert.get("witness", {})
    out: list[str] = []
    try:
        if param in ("chi", "chi-local"):
            colors = witness["coloring"]
            measured = num_colors(colors) if param == "chi" else coloring_locality(g, colors)
            if param == "chi":
                coloring_locality(g, colors)  # properness check
            if measured != value:
                out.append(f"witness achieves {measured}, certificate claims {value}")
        elif param in ("od", "od-local", "minrank"):
            field = field_from_name(cert["field"])
            t = witness["t"]
            rep_kind = "independent" if param == "minrank" else "orthogonal"
            rep = Representation(field, t, tuple(tuple(v) for v in witness["vectors"]), kind=rep_kind)
            if param == "od":
                out.extend(orthogonality_violations(g, rep))
                if t != value:
                    out.append(f"dimension {t} != value {value}")
            elif param == "od-local":
                bad = orthogonality_violations(g, rep)
                out.extend(bad)
                if not bad and rep_locality(g, rep) != value:
                    out.append(f"witness locality {rep_locality(g, rep)} != value {value}")
            else:
                out.extend(independence_violations(complement(g), rep))
                if t != value:
                    out.append(f"dimension {t} != value {value}")
        else:
            out.append(f"unrecognized certificate parameter {param!r}")
    except (KeyError, ValueError, ImproperColoringError) as exc:
        out.append(str(exc))
    return out


def _verify_index_code(cert: dict, g: Graph) -> list[str]:
    out: list[str] = []
    try:
        field = _prime_field(cert["field"])
        m = Matrix(field, tuple(tuple(r) for r in cert["representingMatrix"]))
        check_representing(g, m)
        b = Matrix(field, tuple(tuple(r) for r in cert["encodeMatrix"]))
        coeffs = tuple(tuple(c) for c in cert["decodeCoeffs"])
        for i in range(g.n):
            recon = tuple(
                field.inner(coeffs[i], col) for col in zip(*b.rows)
            ) if b.rows else (field.zero,) * g.n
            if recon != m.rows[i]:
                out.append(f"decode coefficients of receiver {i} do not reconstruct row {i}")
        code = IndexCode(field, g, m, b, coeffs)
        report = simulate(code, 20, seed=0)
        if report.failures:
            out.append(f"{report.failures} decode failures in 20 simulated rounds")
    except (KeyError, ValueError) as exc:
        out.append(str(exc))
    return out


def cmd_verify(args) -> int:
    with open(args.certificate) as fh:
        cert = json.load(fh)
    g = _load_graph(args.graph)
    if "param" in cert:
        errors = _verify_certificate(cert, g)
    elif "representingMatrix" in cert:
        errors = _verify_index_code(cert, g)
    else:
        print("unrecognized certificate layout", file=sys.stderr)
        return EXIT_USAGE
    if errors:
        for e in errors:
            print(f"verify: {e}", file=sys.stderr)
        print("verification FAILED")
        return EXIT_INFEASIBLE
    print("verification ok")
    return EXIT_OK


# -- reduce -------------------------------------------------------------------


def cmd_reduce(args) -> int:
    with open(args.cnf) as fh:
        cnf = parse_dimacs_cnf(fh.read())
    if args.stage == "G":
        gg = build_g(cnf)
    elif args.stage == "Gprime":
        gg = build_g_prime(cnf)
    else:
        if args.k < 4:
            raise UsageError("--stage Gk requires --k >= 4")
        gg = build_g_k(cnf, args.k)
    _write_output(write_dimacs(gg.graph), args.output)
    if args.roles:
        payload = {
            "schema": SCHEMA,
            "stage": args.stage,
            "n": gg.graph.n,
            "roles": [list(r) for r in gg.roles],
        }
        _write_output(json.dumps(payload, indent=2, sort_keys=True), args.roles)
    return EXIT_OK


# -- index-code ---------------------------------------------------------------


def cmd_index_code(args) -> int:
    g = _load_graph(args.graph)
    field = _prime_field(args.field)
    code = code_by_method(g, field, args.method, seed=args.seed)
    payload = {
        "schema": SCHEMA,
        "command": "index-code",
        "method": args.method,
        "field": field.name,
        "seed": args.seed,
        "n": code.n,
        "length": code.length,
        "encodeMatrix": [list(r) for r in code.encode_matrix.rows],
        "representingMatrix": [list(r) for r in code.matrix.rows],
        "decodeCoeffs": [list(c) for c in code.decode_coeffs],
    }
    if args.simulate:
        report = simulate(code, args.simulate, seed=args.seed)
        payload["simulation"] = {
            "trials": report.trials,
            "failures": report.failures,
            "length": report.length,
        }
        if report.failures:
            print(f"simulation reported {report.failures} failures", file=sys.stderr)
            return EXIT_INFEASIBLE
    _write_output(json.dumps(payload, indent=2, sort_keys=True), args.output)
    return EXIT_OK


# -- selftest -----------------------------------------------------------------


def cmd_selftest(args) -> int:
    return EXIT_OK if acceptance.run_all() else EXIT_INFEASIBLE


# -- entry point --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orthograph",
        description="Exact graph parameters, SAT reduction, and index coding toolkit.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("gen", help="generate a graph in DIMACS edge format")
    p.add_argument("family", choices=["kneser", "schrijver", "complete", "empty", "cycle"])
    p.add_argument("params", nargs="*")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="compute an exact parameter with a certificate")
    p.add_argument("param", choices=["chi", "chi-local", "od", "od-local", "minrank"])
    p.add_argument("graph")
    p.add_argument("--field", default="2", help="prime field order, default 2")
    p.add_argument("--dim-cap", type=int, default=None)
    p.add_argument("--threads", type=int, default=1, help="accepted for compatibility; results are deterministic regardless")
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("reduce", help="build the gadget graph of a DIMACS CNF formula")
    p.add_argument("cnf")
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--stage", choices=["G", "Gprime", "Gk"], default="Gprime")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--roles", default=None, help="write the JSON role map here")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("index-code", help="build a linear index code for a side-information graph")
    p.add_argument("graph")
    p.add_argument("--field", required=True)
    p.add_argument("--method", choices=["minrank", "local", "compress"], default="minrank")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--simulate", type=int, default=0, metavar="N")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_index_code)

    p = sub.add_parser("verify", help="re-check a JSON certificate against its graph")
    p.add_argument("certificate")
    p.add_argument("graph")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("selftest", help="run the full verification battery")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except FieldTooSmallError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (UsageError, DimacsParseError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RuntimeError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE


if __name__ == "__main__":
    raise SystemExit(main())
