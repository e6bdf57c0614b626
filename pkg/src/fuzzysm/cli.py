"""Command line interface.

Subcommands:
  parse        check a formula file and print its canonical form
  eval         evaluate a formula under an interpretation
  reduct       print the reduct of a formula by an interpretation
  check        stability verdict for one interpretation
  enumerate    all stable models over a finite lattice
  translate    rewrites: nneg, embed, choice, star, guard, fasp
  equilibrium  interval-based equilibrium checking and enumeration
  props        run the randomized invariant suites

Exit codes: 0 on success, 1 for a negative verdict under --fail-on-unstable
(and for any failing suite), 2 for usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .algebra import (
    CONJUNCTIONS,
    DISJUNCTIONS,
    IMPLICATIONS,
    NEGATIONS,
    ONE,
    Lattice,
    ResourceLimitError,
    TruthError,
    UnknownOperatorError,
    format_truth,
    parse_truth,
)
from .equilibrium import (
    enumerate_equilibrium,
    equilibrium_verdict_to_json,
    format_valuation,
    is_equilibrium,
    parse_valuation,
    valuation_of,
    valuation_to_json,
)
from .semantics import (
    SignatureError,
    StrongNegationError,
    evaluate,
    format_interpretation,
    fuzzy_reduct,
    interpretation_to_json,
    parse_interpretation,
)
from .stable import (
    Exhaustive,
    Sampled,
    check_stable,
    check_stable_via_star,
    enumerate_stable,
    shadow_names,
    star_transform,
    verdict_to_json,
    y_to_one,
)
from .suites import run_all, run_suite, suite_names
from .syntax import (
    ParseError,
    atoms,
    parse_fasp_program,
    parse_formula,
    print_formula,
    program_to_formula,
    signature_of,
)
from .transforms import OpSelection, boolean_embed, choice, nneg


class UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _source_path(args) -> str | None:
    """Resolve the formula file from the positional slot or --formula."""
    named = getattr(args, "formula", None)
    if named is not None and args.source is not None:
        raise UsageError("give the file once (positional or --formula)")
    return named if named is not None else args.source


def _load_formula(args):
    path = _source_path(args)
    if getattr(args, "expr", None) is not None:
        if path is not None:
            raise UsageError("give a file or --expr, not both")
        return parse_formula(args.expr)
    if path is None:
        raise UsageError("no formula: give a file, --formula, or --expr")
    return parse_formula(_read_text(path))


def _load_interpretation(args):
    spec = getattr(args, "interp", None)
    path = getattr(args, "interp_file", None)
    if spec is not None and spec.startswith("@"):
        spec, path = None, spec[1:]
        if not path:
            raise UsageError("--interp @FILE needs a file name after '@'")
    if path:
        if spec:
            raise UsageError("give --interp or --interp-file, not both")
        return parse_interpretation(_read_text(path))
    if spec:
        return parse_interpretation(spec)
    raise UsageError("an interpretation is required (--interp or --interp-file)")


def _parse_minimize(text: str | None) -> tuple[str, ...] | None:
    if text is None:
        return None
    if text == "none":
        return ()
    parts = tuple(a.strip() for a in text.split(",") if a.strip())
    if not parts:
        raise UsageError("--minimize got no atom names (use 'none' for the "
                         "empty set)")
    return parts


def _parse_strategy(text: str, seed: int, jobs: int):
    if text == "exhaustive":
        return Exhaustive(jobs=jobs)
    if text.startswith("sampled:"):
        try:
            n = int(text.split(":", 1)[1])
        except ValueError:
            raise UsageError(f"bad sample count in {text!r}") from None
        if n <= 0:
            raise UsageError("the sample count must be positive")
        return Sampled(samples=n, seed=seed)
    raise UsageError(
        f"unknown strategy {text!r}: use 'exhaustive' or 'sampled:N'")


def _emit(data) -> None:
    print(json.dumps(data, indent=2))


# subcommands ---------------------------------------------------------


def _cmd_parse(args) -> int:
    f = _load_formula(args)
    if args.json:
        _emit({"formula": print_formula(f), "atoms": list(atoms(f))})
    else:
        print(print_formula(f))
    return 0


def _cmd_eval(args) -> int:
    f = _load_formula(args)
    i = _load_interpretation(args)
    value = evaluate(f, i)
    if args.json:
        _emit({"value": str(value)})
    else:
        print(format_truth(value, decimal=args.decimal))
    return 0


def _cmd_reduct(args) -> int:
    f = _load_formula(args)
    i = _load_interpretation(args)
    r = fuzzy_reduct(f, i, simplified=not args.full)
    if args.json:
        _emit({"reduct": print_formula(r)})
    else:
        print(print_formula(r))
    return 0


def _cmd_check(args) -> int:
    f = _load_formula(args)
    i = _load_interpretation(args)
    minimized = _parse_minimize(args.minimize)
    threshold = parse_truth(args.threshold)
    lattice = Lattice(args.denominator)
    if args.engine == "star":
        if threshold != ONE:
            raise UsageError("the star engine only checks threshold 1")
        if args.strategy != "exhaustive":
            raise UsageError("the star engine is exhaustive only")
        verdict = check_stable_via_star(f, i, minimized, lattice, cap=args.cap)
    else:
        strategy = _parse_strategy(args.strategy, args.seed, args.jobs)
        verdict = check_stable(f, i, minimized, threshold, lattice,
                               strategy, cap=args.cap)
    if args.json:
        _emit(verdict_to_json(verdict))
    else:
        print(f"status: {verdict.status}")
        if verdict.witness is not None:
            print(f"witness: {format_interpretation(verdict.witness)}")
        if verdict.note:
            print(f"note: {verdict.note}")
    if args.fail_on_unstable and verdict.status != "stable":
        return 1
    return 0


def _cmd_enumerate(args) -> int:
    f = _load_formula(args)
    minimized = _parse_minimize(args.minimize)
    threshold = parse_truth(args.threshold)
    lattice = Lattice(args.denominator)
    models = enumerate_stable(f, minimized, threshold, lattice,
                              jobs=args.jobs, cap=args.cap)
    if args.json:
        _emit({"count": len(models),
               "models": [interpretation_to_json(m) for m in models]})
    elif args.count:
        print(len(models))
    else:
        for m in models:
            print(format_interpretation(m))
    return 0


def _cmd_translate(args) -> int:
    mode = args.mode
    if mode == "choice":
        if not args.atoms:
            raise UsageError("translate choice needs --atoms")
        names = tuple(a.strip() for a in args.atoms.split(",") if a.strip())
        f = choice(names, args.conj or "&m")
        _print_translation(args, f)
        return 0
    if mode == "fasp":
        path = _source_path(args)
        if path is None and args.expr is None:
            raise UsageError("translate fasp needs a program file or --expr")
        if args.conj is None:
            raise UsageError("translate fasp needs --conj for rule bodies")
        text = args.expr if args.expr is not None else _read_text(path)
        rules = parse_fasp_program(text, args.conj)
        f = program_to_formula(rules, args.join or args.conj)
        _print_translation(args, f)
        return 0
    f = _load_formula(args)
    if mode == "nneg":
        result = nneg(f)
        if args.json:
            _emit({"formula": print_formula(result.formula),
                   "complements": dict(result.complements),
                   "signature": list(result.signature)})
        else:
            for a, na in result.complements.items():
                print(f"# complement of {a}: {na}")
            print(print_formula(result.formula))
        return 0
    if mode == "embed":
        selection = OpSelection(
            neg=args.neg or "not_s",
            conj=args.conj or "&m",
            disj=args.disj or "|m",
            impl=args.impl or "->s",
        )
        _print_translation(args, boolean_embed(f, selection))
        return 0
    if mode == "star":
        minimized = _parse_minimize(args.minimize)
        if minimized is None:
            minimized = signature_of(f)
        fresh = shadow_names(signature_of(f), minimized)
        star = star_transform(f, minimized, fresh)
        if args.json:
            _emit({"formula": print_formula(star),
                   "shadows": {a: fresh[a] for a in minimized}})
        else:
            for a in minimized:
                print(f"# shadow of {a}: {fresh[a]}")
            print(print_formula(star))
        return 0
    if mode == "guard":
        threshold = parse_truth(args.threshold)
        _print_translation(args, y_to_one(f, threshold, args.impl or "->r"))
        return 0
    raise UsageError(f"unknown translate mode {mode!r}")


def _print_translation(args, f) -> None:
    if args.json:
        _emit({"formula": print_formula(f)})
    else:
        print(print_formula(f))


def _cmd_equilibrium(args) -> int:
    f = _load_formula(args)
    lattice = Lattice(args.denominator)
    if args.enumerate:
        sig = None
        if args.signature:
            sig = tuple(a.strip() for a in args.signature.split(",") if a.strip())
        models = enumerate_equilibrium(f, lattice, signature=sig, cap=args.cap)
        if args.json:
            _emit({"count": len(models),
                   "models": [valuation_to_json(v) for v in models]})
        elif args.count:
            print(len(models))
        else:
            for v in models:
                print(format_valuation(v))
        return 0
    if args.valuation_file:
        v = parse_valuation(_read_text(args.valuation_file))
    elif args.valuation:
        v = parse_valuation(args.valuation)
    elif args.interp or args.interp_file:
        v = valuation_of(_load_interpretation(args))
    else:
        raise UsageError("give --valuation, --valuation-file, --interp, "
                         "or --enumerate")
    verdict = is_equilibrium(v, f, lattice, cap=args.cap)
    if args.json:
        _emit(equilibrium_verdict_to_json(verdict))
    else:
        print(f"status: {verdict.status}")
        if verdict.counter is not None:
            print(f"counter: {format_valuation(verdict.counter)}")
        if verdict.note:
            print(f"note: {verdict.note}")
    if args.fail_on_unstable and verdict.status != "equilibrium":
        return 1
    return 0


def _cmd_props(args) -> int:
    if args.list:
        for name in suite_names():
            print(name)
        return 0
    lattice = Lattice(args.denominator)
    if args.suite:
        reports = [run_suite(args.suite, args.trials, args.seed, lattice)]
    else:
        reports = run_all(args.trials, args.seed, lattice)
    if args.json:
        _emit([{"suite": r.suite, "passed": r.passed, "trials": r.trials,
                "counterexample": r.counterexample, "note": r.note}
               for r in reports])
    else:
        for r in reports:
            if r.passed:
                print(f"PASS {r.suite}")
            else:
                print(f"FAIL {r.suite}")
                print(f"  counterexample: {r.counterexample}")
        failed = sum(1 for r in reports if not r.passed)
        print(f"{len(reports)} suites, {len(reports) - failed} passed")
    return 1 if any(not r.passed for r in reports) else 0


# parser wiring --------------------------------------------------------


def _add_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("source", nargs="?", default=None,
                   help="formula file ('-' for stdin)")
    p.add_argument("--formula", default=None, metavar="FILE",
                   help="formula file ('-' for stdin); same slot as the "
                        "positional argument")
    p.add_argument("--expr", default=None, help="inline formula text")


def _add_interp(p: argparse.ArgumentParser) -> None:
    p.add_argument("--interp", default=None,
                   help="interpretation, e.g. 'p=0.3, q=7/10' or JSON; "
                        "'@FILE' reads it from a file")
    p.add_argument("--interp-file", default=None,
                   help="file holding the interpretation")


def _add_json(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="machine output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzysm",
        description="Exact stable-model reasoning for fuzzy propositional "
                    "formulas.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="print the canonical form")
    _add_source(p)
    _add_json(p)
    p.set_defaults(fn=_cmd_parse)

    p = sub.add_parser("eval", help="evaluate under an interpretation")
    _add_source(p)
    _add_interp(p)
    p.add_argument("--decimal", action="store_true",
                   help="print a decimal when it is exact")
    _add_json(p)
    p.set_defaults(fn=_cmd_eval)

    p = sub.add_parser("reduct", help="print the reduct")
    _add_source(p)
    _add_interp(p)
    p.add_argument("--full", action="store_true",
                   help="keep the caps on conjunctions and disjunctions")
    _add_json(p)
    p.set_defaults(fn=_cmd_reduct)

    p = sub.add_parser("check", help="stability verdict")
    _add_source(p)
    _add_interp(p)
    p.add_argument("--minimize", default=None,
                   help="comma-separated atoms ('none' for the empty set); "
                        "default: every atom")
    p.add_argument("--threshold", default="1", help="default 1")
    p.add_argument("--denominator", type=int, default=10,
                   help="lattice granularity D for 0, 1/D, ..., 1 "
                        "(default 10)")
    p.add_argument("--strategy", default="exhaustive",
                   help="'exhaustive' or 'sampled:N'")
    p.add_argument("--seed", type=int, default=0, help="sampling seed")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers")
    p.add_argument("--cap", type=int, default=10 ** 7,
                   help="candidate limit before the search refuses to run")
    p.add_argument("--engine", choices=("direct", "star"), default="direct",
                   help="'star' cross-checks through the shadow rewrite")
    p.add_argument("--fail-on-unstable", action="store_true",
                   help="exit 1 unless the verdict is 'stable'")
    _add_json(p)
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("enumerate", help="all stable models on the lattice")
    _add_source(p)
    p.add_argument("--minimize", default=None)
    p.add_argument("--threshold", default="1")
    p.add_argument("--denominator", type=int, default=10)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cap", type=int, default=10 ** 7)
    p.add_argument("--count", action="store_true", help="print only the count")
    _add_json(p)
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser(
        "translate",
        help="rewrites: nneg, embed, choice, star, guard, fasp")
    p.add_argument("mode",
                   choices=("nneg", "embed", "choice", "star", "guard", "fasp"))
    _add_source(p)
    p.add_argument("--atoms", default=None,
                   help="choice: comma-separated atom names")
    p.add_argument("--minimize", default=None, help="star: atoms to shadow")
    p.add_argument("--threshold", default="1", help="guard: the threshold")
    p.add_argument("--conj", default=None, choices=CONJUNCTIONS,
                   help="embed/choice/fasp: conjunction token")
    p.add_argument("--disj", default=None, choices=DISJUNCTIONS,
                   help="embed: disjunction token")
    p.add_argument("--impl", default=None, choices=IMPLICATIONS,
                   help="embed/guard: implication token")
    p.add_argument("--neg", default=None, choices=NEGATIONS,
                   help="embed: negation token")
    p.add_argument("--join", default=None, choices=CONJUNCTIONS,
                   help="fasp: conjunction joining the rules "
                        "(default: same as --conj)")
    _add_json(p)
    p.set_defaults(fn=_cmd_translate)

    p = sub.add_parser("equilibrium", help="interval-based cross-check")
    _add_source(p)
    _add_interp(p)
    p.add_argument("--valuation", default=None,
                   help="e.g. 'h:p=[0.2,0.7]; t:p=[0.2,0.7]' or JSON")
    p.add_argument("--valuation-file", default=None)
    p.add_argument("--enumerate", action="store_true",
                   help="list every equilibrium model instead of checking one")
    p.add_argument("--count", action="store_true",
                   help="with --enumerate: print only the count")
    p.add_argument("--signature", default=None,
                   help="with --enumerate: comma-separated atoms to range over")
    p.add_argument("--denominator", type=int, default=10)
    p.add_argument("--cap", type=int, default=10 ** 7)
    p.add_argument("--fail-on-unstable", action="store_true",
                   help="exit 1 unless the verdict is 'equilibrium'")
    _add_json(p)
    p.set_defaults(fn=_cmd_equilibrium)

    p = sub.add_parser("props", help="run the invariant suites")
    p.add_argument("--suite", default=None, help="run one suite by name")
    p.add_argument("--list", action="store_true", help="list suite names")
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--denominator", type=int, default=4)
    _add_json(p)
    p.set_defaults(fn=_cmd_props)

    return parser


_INPUT_ERRORS = (
    UsageError, ParseError, TruthError, SignatureError, StrongNegationError,
    UnknownOperatorError, ResourceLimitError, ValueError, OSError,
    json.JSONDecodeError,
)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
