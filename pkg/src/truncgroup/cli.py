"""Command-line interface: ``truncgroup <command> ...`` (or ``python -m truncgroup``).

Series are read from and written to JSON files (see :mod:`truncgroup.serialize`).
Exit status is 0 on success, 1 on a mathematical/domain error and 2 when an
input cannot be parsed.  Diagnostics go to stderr as ``error[code]: message``.
"""

import argparse
import json
import sys

from . import serialize
from .errors import ParseError, TruncGroupError
from .group import GroupElement, dim_G, invert, order_of, power
from .periodic import (DiagonalSpec, build_conjugator, check_periodic, gen_periodic_conjugate,
                       gen_periodic_diagonal, gen_periodic_scalar)
from .series import SquareMatrix, compose
from .symbolic import c_sequence, format_growth, growth_diagnostic, relation_table
from .verify import SUITES, run_suite


def _int_list(text):
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _emit_series(phi, fmt):
    s = phi.series if isinstance(phi, GroupElement) else phi
    if fmt == "text":
        return str(s) + "\n"
    return serialize.dumps(s)


def _load(path):
    try:
        return serialize.load_series(path)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc


def _load_seeds(args):
    try:
        with open(args.seeds, encoding="utf-8") as fh:
            doc = json.loads(fh.read())
    except OSError as exc:
        raise ParseError(f"cannot read {args.seeds}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {args.seeds}: {exc.msg}") from exc
    return serialize.seeds_from_dict(doc, args.p, args.lam, args.n)


def cmd_compose(args):
    return _emit_series(compose(_load(args.a), _load(args.b)), args.format)


def cmd_invert(args):
    return _emit_series(invert(_load(args.a)), args.format)


def cmd_power(args):
    return _emit_series(power(_load(args.a), args.m), args.format)


def cmd_order(args):
    t = order_of(_load(args.a), args.bound)
    if args.format == "json":
        return json.dumps({"order": t}) + "\n"
    return f"{t}\n"


def cmd_check_period(args):
    ok = check_periodic(_load(args.a), args.p)
    if args.format == "json":
        return json.dumps({"p": args.p, "periodic": ok}) + "\n"
    return ("periodic" if ok else "not periodic") + "\n"


def cmd_gen_periodic(args):
    if args.mode == "scalar":
        _, n, domain, seeds = _load_seeds(args)
        phi = gen_periodic_scalar(args.p, n, seeds, args.order, domain)
        return _emit_series(phi, args.format)
    spec, n, domain, seeds = _load_seeds(args)
    if spec is None:
        raise ParseError(f"--mode {args.mode} needs --lambda or a \"lambda\" entry")
    if args.mode == "diag":
        phi = gen_periodic_diagonal(spec, seeds, args.order, domain)
    else:
        # the seed terms are the nonlinear part of the conjugating series
        psi = SquareMatrix.identity(n, domain).to_series(args.order)
        for d, part in seeds.items():
            if d < 2:
                raise ParseError("conjugating series seeds must have degree >= 2")
            if d <= args.order:
                psi = psi.with_part(d, part)
        phi = gen_periodic_conjugate(spec, psi, domain)
    return _emit_series(phi, args.format)


def cmd_conjugator(args):
    phi = _load(args.a)
    try:
        spec = DiagonalSpec(args.p, args.lam)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    return _emit_series(build_conjugator(phi, spec), args.format)


def cmd_relations(args):
    table = relation_table(args.p, args.max_degree)
    if args.format == "json":
        return table.to_json()
    if args.format == "csv":
        return table.to_csv()
    return table.to_text()


def cmd_c_seq(args):
    cs = c_sequence(args.count)
    if args.format == "json":
        out = json.dumps(cs) + "\n"
    else:
        out = "".join(f"c_{k} = {c}\n" for k, c in enumerate(cs, start=1))
    if args.growth:
        out += format_growth(growth_diagnostic(cs))
    return out


def cmd_dims(args):
    d = dim_G(args.k, args.m, args.n)
    if args.format == "json":
        return json.dumps({"k": args.k, "m": args.m, "n": args.n, "dim": d}) + "\n"
    return f"{d}\n"


def cmd_verify(args):
    results = run_suite(args.suite, args.seed)
    if args.format == "json":
        doc = [{"criterion": r.number, "name": r.name, "passed": r.passed, "detail": r.detail}
               for r in results]
        out = json.dumps(doc, indent=2) + "\n"
    else:
        out = "".join(r.line() + "\n" for r in results)
    return out, 0 if all(r.passed for r in results) else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="truncgroup", description="Exact arithmetic in groups of truncated formal power series.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, fmts=("json", "text"), default=None):
        p = sub.add_parser(name, help=help)
        p.add_argument("-o", "--output", help="write to this file instead of stdout")
        p.add_argument("--format", choices=fmts, default=default or fmts[0])
        p.set_defaults(func=func)
        return p

    p = add("compose", cmd_compose, "compose two series: A o B")
    p.add_argument("a")
    p.add_argument("b")
    p = add("invert", cmd_invert, "compositional inverse")
    p.add_argument("a")
    p = add("power", cmd_power, "m-th compositional power (m may be negative)")
    p.add_argument("a")
    p.add_argument("m", type=int)
    p = add("order", cmd_order, "order of an element", ("text", "json"))
    p.add_argument("a")
    p.add_argument("--bound", type=int, default=1000)
    p = add("check-period", cmd_check_period, "test whether A has exact period p", ("text", "json"))
    p.add_argument("a")
    p.add_argument("p", type=int)
    p = add("gen-periodic", cmd_gen_periodic, "generate a periodic series from seeds")
    p.add_argument("--mode", choices=("scalar", "diag", "conjugate"), required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=_int_list)
    p.add_argument("--seeds", required=True, help="JSON seed document")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--n", type=int)
    p = add("conjugator", cmd_conjugator, "psi with psi o A = diag(w^lambda) o psi")
    p.add_argument("a")
    p.add_argument("--lambda", dest="lam", type=_int_list, required=True)
    p.add_argument("--p", type=int, required=True)
    p = add("relations", cmd_relations, "forced-coefficient table for n = 1", ("text", "json", "csv"))
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--max-degree", type=int)
    p = add("c-seq", cmd_c_seq, "integer sequence c_k", ("text", "json"))
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--growth", action="store_true", help="append |c_k|^(1/k) diagnostic")
    p = add("dims", cmd_dims, "dimension of G_(k,m)(n, K)", ("text", "json"))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p = add("verify", cmd_verify, "run acceptance suites", ("text", "json"))
    p.add_argument("--suite", choices=("all",) + tuple(SUITES), default="all")
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except ParseError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 2
    except TruncGroupError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error[invalid_argument]: {exc}", file=sys.stderr)
        return 1
    status = 0
    if isinstance(out, tuple):
        out, status = out
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
