"""Command-line front end. Every subcommand prints a JSON report on stdout.

Exit codes: 0 all verdicts pass, 2 parse error, 3 validation failure,
4 verification failure, 5 budget exhausted.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import __version__
from .algebra import validate_algebra
from .errors import (InvalidArgument, NotHeytingAlgebra, ParseError, RankOverflow, ResourceLimit,
                     VerificationFailure)
from .izf.axioms import AXIOMS, DEFAULT_INSTANCES, SCHEMATA, AxiomOptions, check_axiom
from .izf.formula import parse_formula
from .izf.interp import interpret, satisfies
from .izf.realizers import encode_core_realizers, verify_core_realizers
from .io import InvalidAlgebra, fingerprint, load_algebra
from .terms import check_sequent, encode, parse_judgement, parse_term, show
from .tripos import FiniteFunction, Predicate, run_law_suite
from .universe import DEFAULT_BUDGET, build_universe

EXIT_OK, EXIT_PARSE, EXIT_INVALID, EXIT_VERIFY, EXIT_BUDGET = 0, 2, 3, 4, 5


class CommandFailed(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _labels(value, alg):
    """Element indices inside witnesses, rendered as labels."""
    if isinstance(value, Predicate):
        return {"index": list(value.index), "values": [alg.label(v) for v in value.values]}
    if isinstance(value, FiniteFunction):
        return {"source": list(value.source), "images": list(value.images)}
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return alg.label(value)
    if isinstance(value, (tuple, list)):
        return [_labels(v, alg) for v in value]
    return str(value)


def _load(path):
    try:
        return load_algebra(path)
    except ParseError as exc:
        raise CommandFailed(EXIT_PARSE, str(exc)) from None
    except (InvalidAlgebra, NotHeytingAlgebra, InvalidArgument) as exc:
        raise CommandFailed(EXIT_INVALID, str(exc)) from None


def _header(command: str, alg) -> dict:
    return {"tool": "implicative", "version": __version__, "command": command,
            "algebra": {"name": alg.name, "fingerprint": fingerprint(alg), "size": alg.size}}


def _universe(alg, depth, budget):
    try:
        return build_universe(alg, depth, budget)
    except ResourceLimit as exc:
        raise CommandFailed(EXIT_BUDGET, str(exc)) from None


# -- subcommands ----------------------------------------------------------------

def cmd_validate(args) -> tuple[dict, int]:
    try:
        alg = load_algebra(args.file)
    except InvalidAlgebra as exc:
        violations = [{"law": law, "witness": list(w)} for law, w in exc.report.violations]
        return {"tool": "implicative", "version": __version__, "command": "validate",
                "checks": [{"name": "complete-lattice", "verdict": "fail", "violations": violations}]}, EXIT_INVALID
    except ParseError as exc:
        raise CommandFailed(EXIT_PARSE, str(exc)) from None
    except (NotHeytingAlgebra, InvalidArgument) as exc:
        raise CommandFailed(EXIT_INVALID, str(exc)) from None
    report = validate_algebra(alg)
    out = _header("validate", alg)
    out["checks"] = [
        {"name": "complete-lattice", "verdict": "pass"},
        {"name": "implicative-algebra", "verdict": "pass" if report.ok else "fail",
         "violations": [{"law": law, "witness": _labels(w, alg)} for law, w in report.violations]},
    ]
    out["K"], out["S"] = alg.label(alg.K), alg.label(alg.S)
    out["separator"] = [alg.label(a) for a in sorted(alg.separator)]
    out["classical"] = alg.classical
    return out, EXIT_OK if report.ok else EXIT_INVALID


def cmd_eval_term(args):
    alg = _load(args.file)
    try:
        term = parse_term(args.term, alg)
    except ParseError as exc:
        raise CommandFailed(EXIT_PARSE, str(exc)) from None
    if term.free:
        raise CommandFailed(EXIT_PARSE, f"term has free variables {sorted(term.free)}")
    value = encode(term, alg)
    out = _header("eval-term", alg)
    out.update(term=show(term, alg.lattice.labels), value=alg.label(value),
               in_separator=value in alg.separator)
    return out, EXIT_OK


def cmd_check(args):
    alg = _load(args.file)
    try:
        j = parse_judgement(args.judgement, alg)
    except (ParseError, InvalidArgument) as exc:
        raise CommandFailed(EXIT_PARSE, str(exc)) from None
    holds = check_sequent(j, alg)
    out = _header("check", alg)
    out["checks"] = [{"name": args.judgement.strip(), "verdict": "pass" if holds else "fail"}]
    return out, EXIT_OK if holds else EXIT_VERIFY


def cmd_tripos(args):
    alg = _load(args.file)
    exhaustive = args.exhaustive if args.exhaustive is not None else alg.size <= 2
    results = run_law_suite(alg, args.size_bound, exhaustive=exhaustive, samples=args.samples, seed=args.seed)
    out = _header("tripos", alg)
    out.update(size_bound=args.size_bound, mode="exhaustive" if exhaustive else "sampled", seed=args.seed)
    out["checks"] = [{"name": r.name, "verdict": "pass" if r.ok else "fail", "cases": r.cases,
                      "failures": r.failures, "witnesses": _labels(r.witnesses[:3], alg)} for r in results]
    ok = all(r.ok for r in results)
    return out, EXIT_OK if ok else EXIT_VERIFY


def cmd_model(args):
    alg = _load(args.file)
    U = _universe(alg, args.depth, args.budget)
    out = _header("model", alg)
    out["depth"] = args.depth
    out["stratum_sizes"] = U.stratum_sizes
    core = encode_core_realizers(alg)
    out["core_realizers"] = {k: alg.label(v) for k, v in core.as_dict().items()}
    checks = verify_core_realizers(U, core)
    out["checks"] = [dict(c.as_dict(alg), verdict="pass" if c.ok else "fail") for c in checks]
    queries = [("mem", U.mem_value, q) for q in args.mem or []] + [("eq", U.eq_value, q) for q in args.eq or []]
    if queries:
        out["values"] = []
    for kind, fn, (a, b) in queries:
        try:
            x, y = U.parse_handle(a), U.parse_handle(b)
        except InvalidArgument as exc:
            raise CommandFailed(EXIT_PARSE, str(exc)) from None
        out["values"].append({"relation": kind, "left": U.describe(x), "right": U.describe(y),
                              "value": alg.label(fn(x, y))})
    return out, EXIT_OK if all(c.ok for c in checks) else EXIT_VERIFY


def cmd_eval_formula(args):
    alg = _load(args.file)
    try:
        cf = parse_formula(args.formula)
    except ParseError as exc:
        raise CommandFailed(EXIT_PARSE, str(exc)) from None
    U = _universe(alg, args.depth, args.budget)
    out = _header("eval-formula", alg)
    out.update(depth=args.depth, formula=str(cf), mode=args.mode)
    if args.args:
        try:
            handles = [U.parse_handle(a) for a in args.args]
            value = interpret(cf, handles, U, args.mode)
        except InvalidArgument as exc:
            raise CommandFailed(EXIT_PARSE, str(exc)) from None
        out["arguments"] = {x: U.describe(h) for x, h in zip(cf.context, handles)}
        out["value"] = alg.label(value)
    s = satisfies(cf, U, args.mode)
    out["checks"] = [{"name": "satisfies", "verdict": "pass" if s.holds else "fail", "value": alg.label(s.value)}]
    return out, EXIT_OK if s.holds else EXIT_VERIFY


def _instances(path):
    if path is None:
        return DEFAULT_INSTANCES
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise CommandFailed(EXIT_PARSE, f"cannot read instances file: {exc}") from None
    if not isinstance(data, dict) or set(data) - set(SCHEMATA):
        raise CommandFailed(EXIT_PARSE, f"instances file must map a subset of {list(SCHEMATA)} to formula lists")
    try:
        return {k: [parse_formula(t) for t in v] for k, v in data.items()}
    except ParseError as exc:
        raise CommandFailed(EXIT_PARSE, str(exc)) from None


def cmd_check_axioms(args):
    alg = _load(args.file)
    instances = _instances(args.instances)
    U = _universe(alg, args.depth, args.budget)
    options = AxiomOptions(inf_bound=args.inf_bound, full_model=not args.no_model)
    names = args.axiom or list(AXIOMS)
    unknown = [n for n in names if n not in AXIOMS]
    if unknown:
        raise CommandFailed(EXIT_PARSE, f"unknown axioms {unknown}; expected names from {list(AXIOMS)}")
    reports = []
    for name in names:
        if name in SCHEMATA:
            for inst in instances.get(name, []):
                cf = inst if not isinstance(inst, str) else parse_formula(inst)
                reports.append(_timed(args, lambda: check_axiom(name, U, cf, options)))
        else:
            reports.append(_timed(args, lambda: check_axiom(name, U, options=options)))
    out = _header("check-axioms", alg)
    out.update(depth=args.depth, stratum_sizes=U.stratum_sizes, inf_bound=args.inf_bound)
    out["checks"] = []
    for rep, elapsed in reports:
        entry = rep.as_dict(alg)
        entry["verdict"] = "pass" if rep.status == "verified" else ("budget" if rep.status == "budget" else "fail")
        if elapsed is not None:
            entry["wall_time_s"] = round(elapsed, 3)
        out["checks"].append(entry)
    statuses = {rep.status for rep, _ in reports}
    if "failed" in statuses:
        return out, EXIT_VERIFY
    if "budget" in statuses:
        return out, EXIT_BUDGET
    return out, EXIT_OK


def _timed(args, fn):
    start = time.perf_counter()
    result = fn()
    return result, (time.perf_counter() - start) if args.timings else None


# -- entry point ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="implicative", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--report", metavar="PATH", help="also write the JSON report to PATH")
    parser.add_argument("--timings", action="store_true", help="include wall times (breaks byte-identical reports)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="algebra JSON file, or the name of a shipped algebra")
        p.set_defaults(fn=fn)
        return p

    def add_depth(p):
        p.add_argument("depth", type=int, help="truncation depth N")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="maximum number of universe elements (env IMPLICATIVE_BUDGET)")

    add("validate", cmd_validate, "check the lattice and implicative-algebra laws")
    p = add("eval-term", cmd_eval_term, "encode a closed λ-term")
    p.add_argument("term")
    p = add("check", cmd_check, "decide a sequent 'x:a, ... |- t : b'")
    p.add_argument("judgement")
    p = add("tripos", cmd_tripos, "run the tripos law suite")
    p.add_argument("--size-bound", type=int, default=3)
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", dest="exhaustive", action="store_true", default=None)
    mode.add_argument("--sampled", dest="exhaustive", action="store_false")
    p = add("model", cmd_model, "build W_N and verify the core realizers")
    add_depth(p)
    p.add_argument("--mem", nargs=2, action="append", metavar=("A", "B"), help="report the value of A in B")
    p.add_argument("--eq", nargs=2, action="append", metavar=("A", "B"), help="report the value of A = B")
    p = add("eval-formula", cmd_eval_formula, "interpret a formula in context on W_N")
    add_depth(p)
    p.add_argument("formula", help="e.g. '[x, y] |- x in y'")
    p.add_argument("args", nargs="*", help="W-element handles such as w3, one per context variable")
    p.add_argument("--mode", choices=("direct", "bounded"), default="direct")
    p = add("check-axioms", cmd_check_axioms, "run the axiom verification suite")
    add_depth(p)
    p.add_argument("--instances", metavar="PATH", help="JSON file mapping Sep/Ind/Col to formula lists")
    p.add_argument("--axiom", action="append", help="restrict to this axiom (repeatable)")
    p.add_argument("--inf-bound", type=int, default=4)
    p.add_argument("--no-model", action="store_true", help="skip the informational full-model satisfaction")
    return parser


def render(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, code = args.fn(args)
    except CommandFailed as exc:
        report, code = {"tool": "implicative", "version": __version__, "command": args.command,
                        "error": str(exc)}, exc.code
    except (ResourceLimit, RankOverflow) as exc:
        report, code = {"tool": "implicative", "version": __version__, "command": args.command,
                        "error": str(exc)}, EXIT_BUDGET
    except VerificationFailure as exc:
        report, code = {"tool": "implicative", "version": __version__, "command": args.command,
                        "error": str(exc)}, EXIT_VERIFY
    report["exit_code"] = code
    text = render(report)
    sys.stdout.write(text)
    if args.report:
        Path(args.report).write_text(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
