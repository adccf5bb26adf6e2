"""Command-line interface: ``pisotexp <subcommand> ...``.

Exit status is 0 on success, 1 on a domain error (the error type is printed)
and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Sequence

from . import alpha_adic, beta, rational_psi, transducer
from .algebra import FieldElement, PisotSpec, make_spec
from .errors import PisotError
from .reference import reference_checks
from .words import FiniteWord, parse_word, word_to_json


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# Argument helpers
# ---------------------------------------------------------------------------


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _load_spec(args) -> PisotSpec:
    alpha_index = getattr(args, "alpha_index", 0) or 0
    if getattr(args, "coeffs", None):
        return make_spec(_int_list(args.coeffs), alpha_index)
    if getattr(args, "spec", None):
        text = args.spec
        if os.path.exists(text):
            with open(text) as fh:
                text = fh.read()
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"--spec is neither a file nor JSON: {exc}") from None
        coeffs = obj["coeffs"] if isinstance(obj, dict) else obj
        return make_spec(coeffs, obj.get("alpha_index", alpha_index) if isinstance(obj, dict) else alpha_index)
    if getattr(args, "a", None) is not None:
        return make_spec([1, args.a])
    raise UsageError("give the base with --coeffs, --spec or --a")


def _parse_value(text: str, spec: PisotSpec) -> FieldElement:
    try:
        parts = [Fraction(p) for p in text.replace(" ", "").split(",")]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"value must be p/q or coordinates c0,c1,...: {text!r}") from None
    if len(parts) > spec.degree:
        raise UsageError(f"at most {spec.degree} coordinates for this base")
    return spec.element(parts)


def _parse_word(text: str, side: str | None = None):
    try:
        return parse_word(text, side)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _add_spec_args(p: argparse.ArgumentParser, with_a: bool = True) -> None:
    g = p.add_argument_group("base")
    g.add_argument("--coeffs", help="a_0,...,a_(d-1) of x^d - a_(d-1)x^(d-1) - ... - a_0")
    g.add_argument("--spec", help='JSON {"coeffs": [...]} or a path to such a file')
    if with_a:
        g.add_argument("--a", type=int, help="shorthand for x^2 - a x - 1")
    g.add_argument("--alpha-index", type=int, default=0, help="which conjugate is alpha")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--budget", type=int, help="iteration budget (default from PISOT_BUDGET or 100000)")

    parser = argparse.ArgumentParser(
        prog="pisotexp",
        description="Beta-expansions and alpha-adic expansions in Pisot bases.",
        epilog="Negative values are passed as --value=-1,1 or --value -4.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spec-check", parents=[common], help="certify a Pisot base")
    _add_spec_args(p)

    p = sub.add_parser("renyi", parents=[common], help="Renyi expansion of 1")
    _add_spec_args(p)

    p = sub.add_parser("beta-expand", parents=[common], help="greedy beta-expansion")
    _add_spec_args(p)
    p.add_argument("--value", required=True)

    p = sub.add_parser("alpha-expand", parents=[common], help="an alpha-adic expansion")
    _add_spec_args(p)
    p.add_argument("--value", required=True)
    p.add_argument(
        "--variant",
        type=int,
        default=0,
        help="for negatives with a finite opposite: which expansion of -1 to borrow",
    )

    p = sub.add_parser("alpha-enumerate", parents=[common], help="all expansions within bounds")
    _add_spec_args(p)
    p.add_argument("--value", required=True)
    p.add_argument("--head-bound", type=int, default=6)
    p.add_argument("--fraction-bound", type=int, default=6)

    p = sub.add_parser("rational-adic", parents=[common], help="psi-iteration for a rational")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--normalize", action="store_true", help="return a weakly admissible expansion")
    p.add_argument("--trace", action="store_true", help="print the step table")

    p = sub.add_parser("normalize", parents=[common], help="renormalize a signed-digit pre-period")
    _add_spec_args(p)
    p.add_argument("--word", required=True, help="finite word, digits like {-1} allowed")

    p = sub.add_parser("transducer", help="build or run the normalizing transducer")
    tsub = p.add_subparsers(dest="action", required=True)
    b = tsub.add_parser("build", parents=[common])
    b.add_argument("--a", type=int, required=True)
    grp = b.add_mutually_exclusive_group()
    grp.add_argument("--den", type=int, help="derive the run bound from a denominator")
    grp.add_argument("--C", type=int, dest="C", help="run bound")
    b.add_argument("--export", choices=("dot", "json"), default="json")
    r = tsub.add_parser("run", parents=[common])
    r.add_argument("--a", type=int, required=True)
    r.add_argument("--C", type=int, dest="C", required=True)
    r.add_argument("--word", required=True)

    sub.add_parser("verify-paper", parents=[common], help="check the reference examples")
    return parser


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def _emit(args, text: str, payload: dict) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, default=str))
    else:
        print(text)


def _word_payload(w) -> dict:
    return {"word": str(w), **word_to_json(w)}


def _cmd_spec_check(args) -> int:
    spec = _load_spec(args)
    info = spec.describe()
    text = "\n".join(f"{k}: {v}" for k, v in info.items())
    _emit(args, text, info)
    return 0


def _cmd_renyi(args) -> int:
    spec = _load_spec(args)
    d = beta.renyi_d(spec, args.budget)
    star = beta.renyi_d_star(spec)
    _emit(args, str(d), {"d": str(d), "finite": d.is_finite, "ell": d.ell, "d_star": str(star)})
    return 0


def _cmd_beta_expand(args) -> int:
    spec = _load_spec(args)
    w = beta.beta_expand(_parse_value(args.value, spec), args.budget)
    _emit(args, str(w), _word_payload(w))
    return 0


def _cmd_alpha_expand(args) -> int:
    spec = _load_spec(args)
    x = _parse_value(args.value, spec)
    if args.variant and x.sign() < 0 and beta.beta_expand(-x, args.budget).is_finite:
        w = alpha_adic.alpha_expand_negative(x, args.variant)
    else:
        w = alpha_adic.alpha_expand(x)
    _emit(args, str(w), _word_payload(w))
    return 0


def _cmd_alpha_enumerate(args) -> int:
    spec = _load_spec(args)
    x = _parse_value(args.value, spec)
    found = alpha_adic.enumerate_expansions(x, args.head_bound, args.fraction_bound)
    payload = {
        "target": [str(c) for c in x.coords],
        "expansions": [_word_payload(w) for w in found],
        "search_bound": list(found.search_bound),
        "period_candidates": ["".join(map(str, p)) or "-" for p in found.period_candidates],
        "heuristic": found.heuristic,
    }
    _emit(args, "\n".join(str(w) for w in found) or "(none)", payload)
    return 0


def _cmd_rational_adic(args) -> int:
    spec = make_spec([1, args.a])
    try:
        q = Fraction(args.q)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--q must be a rational p/r, got {args.q!r}") from None
    lines = []
    payload: dict = {"a": args.a, "q": str(q)}
    if args.trace:
        tr = rational_psi.psi_trace(q, args.a, args.budget)
        lines.append(tr.table())
        payload["steps"] = [
            {"step": s.index, "before": [str(v) for v in s.before], "after": [str(v) for v in s.after]}
            for s in tr.steps
        ]
        payload["period_start"] = tr.period_start
        payload["period_len"] = tr.period_len
    if args.normalize:
        w = rational_psi.rational_alpha_expand(q, spec, args.budget)
    else:
        w = rational_psi.rational_alpha_represent(q, spec, args.budget)
    lines.append(str(w))
    payload.update(_word_payload(w))
    _emit(args, "\n".join(lines), payload)
    return 0


def _cmd_normalize(args) -> int:
    spec = _load_spec(args)
    w = _parse_word(args.word)
    if not isinstance(w, FiniteWord):
        raise UsageError("normalize takes a finite word")
    out, unfolds = alpha_adic.normalize_preperiod(w, spec)
    _emit(args, f"{out} (unfolded blocks: {unfolds})", {"word": str(out), "unfolds": unfolds})
    return 0


def _cmd_transducer(args) -> int:
    if args.action == "build":
        if args.C is not None:
            bound = args.C
        elif args.den is not None:
            bound = transducer.consecutive_a_bound(args.a, args.den)
        else:
            raise UsageError("give --C or --den")
        t = transducer.build_normalization_transducer(args.a, bound)
        print(transducer.export(t, args.export), end="" if args.export == "dot" else "\n")
        return 0
    t = transducer.build_normalization_transducer(args.a, args.C)
    w = _parse_word(args.word, side="left")
    out = transducer.run_right_sequential(t, w)
    _emit(args, str(out), _word_payload(out))
    return 0


def _cmd_verify(args) -> int:
    checks = reference_checks()
    if args.format == "json":
        print(
            json.dumps(
                [{"name": c.name, "expected": c.expected, "actual": c.actual, "pass": c.passed} for c in checks],
                indent=2,
            )
        )
    else:
        width = max(len(c.name) for c in checks)
        for c in checks:
            status = "PASS" if c.passed else "FAIL"
            extra = "" if c.passed else f"   (got {c.actual})"
            print(f"{status}  {c.name:<{width}}  {c.expected}{extra}")
    return 0 if all(c.passed for c in checks) else 1


_COMMANDS = {
    "spec-check": _cmd_spec_check,
    "renyi": _cmd_renyi,
    "beta-expand": _cmd_beta_expand,
    "alpha-expand": _cmd_alpha_expand,
    "alpha-enumerate": _cmd_alpha_enumerate,
    "rational-adic": _cmd_rational_adic,
    "normalize": _cmd_normalize,
    "transducer": _cmd_transducer,
    "verify-paper": _cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "budget", None) is not None and args.budget < 1:
        parser.print_usage(sys.stderr)
        print("pisotexp: error: --budget must be positive", file=sys.stderr)
        return 2
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"pisotexp: error: {exc}", file=sys.stderr)
        return 2
    except PisotError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
