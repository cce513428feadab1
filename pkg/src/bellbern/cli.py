"""Command-line interface.

Exit codes: 0 success, 1 verification failure or path disagreement,
2 usage or parse error. Rationals are always printed as ``p/q`` strings.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Any, Sequence

from .bell_poly import BellPolynomial, bell_eval_recurrence, bell_symbolic
from .bernoulli import BernoulliCache, bernoulli_numbers, generalized_bernoulli, generalized_bernoulli_oracle
from .identities import IDENTITIES, run_identity
from .numeric import DomainError, format_rational, parse_rational
from .report import VerificationReport

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _latex_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    sign = "-" if x < 0 else ""
    return f"{sign}\\frac{{{abs(x.numerator)}}}{{{x.denominator}}}"


def _tex_escape(s: str) -> str:
    return s.replace("_", r"\_")


def _braced(s: str) -> str:
    return s if len(s) == 1 else "{" + s + "}"


def render_plain(p: BellPolynomial) -> str:
    """``10*x1^3*x2 + ...`` in partition order; ``1`` for Y_0."""
    out = []
    for e, c in p.terms:
        factors = [f"x{j}" + (f"^{ej}" if ej > 1 else "") for j, ej in enumerate(e, 1) if ej]
        if c != 1 or not factors:
            factors.insert(0, str(c))
        out.append("*".join(factors))
    return " + ".join(out)


def render_latex(p: BellPolynomial) -> str:
    out = []
    for e, c in p.terms:
        body = "".join(
            f"x_{_braced(str(j))}" + (f"^{_braced(str(ej))}" if ej > 1 else "")
            for j, ej in enumerate(e, 1)
            if ej
        )
        out.append((str(c) if c != 1 or not body else "") + body)
    return " + ".join(out)


def render_terms_json(p: BellPolynomial) -> list[dict[str, Any]]:
    return [{"coefficient": str(c), "exponents": list(e)} for e, c in p.terms]


def report_latex(report: VerificationReport) -> str:
    rows = [
        ("identity", report.identity),
        ("range", f"{report.lo}..{report.hi}"),
        ("status", "pass" if report.passed else "fail"),
        ("checks", str(report.checked)),
    ]
    rows += [(k, str(v)) for k, v in report.details.items()]
    if report.counterexample is not None:
        c = report.counterexample
        rows += [("index", str(c.index)), ("lhs", f"${_latex_rational(c.lhs)}$"), ("rhs", f"${_latex_rational(c.rhs)}$")]
    body = "\n".join(f"{_tex_escape(k)} & {v if v.startswith('$') else _tex_escape(v)} \\\\" for k, v in rows)
    return "\\begin{tabular}{ll}\n" + body + "\n\\end{tabular}"


def _parse_vector(text: str) -> list[Fraction]:
    return [parse_rational(t) for t in text.split(",")] if text.strip() else []


def _document(op: str, params: dict[str, Any], result: Any, report: Any = None) -> str:
    return json.dumps({"op": op, "params": params, "result": result, "report": report}, indent=2)


def cmd_bell(args: argparse.Namespace, cache: BernoulliCache | None) -> tuple[str, int]:
    r = args.r
    if r < 0:
        raise DomainError("--r must be nonnegative")
    if args.eval is not None:
        xs = _parse_vector(args.eval)
        value = bell_eval_recurrence(r, xs)
        params = {"r": r, "eval": [format_rational(x) for x in xs]}
        if args.format == "json":
            return _document("bell", params, format_rational(value)), EXIT_OK
        if args.format == "latex":
            return f"Y_{_braced(str(r))} = {_latex_rational(value)}", EXIT_OK
        return format_rational(value), EXIT_OK
    p = bell_symbolic(r)
    if args.format == "json":
        return _document("bell", {"r": r}, render_terms_json(p)), EXIT_OK
    if args.format == "latex":
        return render_latex(p), EXIT_OK
    return render_plain(p), EXIT_OK


def cmd_bernoulli(args: argparse.Namespace, cache: BernoulliCache | None) -> tuple[str, int]:
    if args.n < 0:
        raise DomainError("--n must be nonnegative")
    values = bernoulli_numbers(args.n, cache)
    if args.format == "json":
        return _document("bernoulli", {"n": args.n}, [format_rational(b) for b in values]), EXIT_OK
    if args.format == "latex":
        return "\n".join(f"B_{_braced(str(n))} = {_latex_rational(b)}" for n, b in enumerate(values)), EXIT_OK
    return "\n".join(f"{n:>4}  {format_rational(b)}" for n, b in enumerate(values)), EXIT_OK


def cmd_gbernoulli(args: argparse.Namespace, cache: BernoulliCache | None) -> tuple[str, int]:
    if args.n < 0:
        raise DomainError("--n must be nonnegative")
    alpha = parse_rational(args.alpha)
    params = {"n": args.n, "alpha": format_rational(alpha)}
    label = f"B_{_braced(str(args.n))}^{{({_latex_rational(alpha)})}}"

    if args.both:
        bell = generalized_bernoulli(args.n, alpha, cache)
        oracle = generalized_bernoulli_oracle(args.n, alpha)
        agree = bell == oracle
        code = EXIT_OK if agree else EXIT_FAIL
        if args.format == "json":
            report = {"bell": format_rational(bell), "oracle": format_rational(oracle), "agree": agree}
            return _document("gbernoulli", params, format_rational(bell), report), code
        if args.format == "latex":
            rel = "=" if agree else "\\neq"
            return f"{label} = {_latex_rational(bell)} {rel} {_latex_rational(oracle)}", code
        return (
            f"bell: {format_rational(bell)}\noracle: {format_rational(oracle)}\nagree: {'yes' if agree else 'no'}",
            code,
        )

    if args.oracle:
        value = generalized_bernoulli_oracle(args.n, alpha)
    else:
        value = generalized_bernoulli(args.n, alpha, cache)
    if args.format == "json":
        params["path"] = "oracle" if args.oracle else "bell"
        return _document("gbernoulli", params, format_rational(value)), EXIT_OK
    if args.format == "latex":
        return f"{label} = {_latex_rational(value)}", EXIT_OK
    return format_rational(value), EXIT_OK


def cmd_verify(args: argparse.Namespace, cache: BernoulliCache | None) -> tuple[str, int]:
    report = run_identity(args.identity, args.max, args.seed, cache)
    code = EXIT_OK if report.passed else EXIT_FAIL
    if args.format == "json":
        params = {"identity": args.identity, "max": args.max, "seed": args.seed}
        return _document("verify", params, "pass" if report.passed else "fail", report.to_json()), code
    if args.format == "latex":
        return report_latex(report), code
    return report.to_text(), code


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "json", "latex"), default="plain")
    common.add_argument("--out", metavar="PATH", help="also write the output to PATH")

    parser = argparse.ArgumentParser(
        prog="bellbern",
        description="Exact Bell polynomials, Bernoulli and generalized Bernoulli numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bell", parents=[common], help="complete Bell polynomial Y_r")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--eval", metavar="X1,X2,...", help="evaluate at comma-separated rationals")
    p.set_defaults(func=cmd_bell)

    p = sub.add_parser("bernoulli", parents=[common], help="table B_0..B_n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_bernoulli)

    p = sub.add_parser("gbernoulli", parents=[common], help="generalized Bernoulli number B_n^(alpha)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", required=True, help="rational p/q, e.g. 7/3 or -1/2")
    path = p.add_mutually_exclusive_group()
    path.add_argument("--oracle", action="store_true", help="use the power-series path")
    path.add_argument("--both", action="store_true", help="compute both paths and compare")
    p.set_defaults(func=cmd_gbernoulli)

    p = sub.add_parser("verify", parents=[common], help="check an identity over a range")
    p.add_argument("--identity", required=True, help=f"one of {', '.join(IDENTITIES)}")
    p.add_argument("--max", type=int, required=True, help="largest index (or order) to check")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized identities")
    p.set_defaults(func=cmd_verify)
    return parser


_VALUE_OPTIONS = ("--eval", "--alpha")
_NEGATIVE_VALUE = re.compile(r"^-\d+(/-?\d+)?(,.*)?$")


def _join_negative_values(argv: Sequence[str]) -> list[str]:
    """Rewrite ``--alpha -1/2`` as ``--alpha=-1/2`` so argparse does not read a flag."""
    out: list[str] = []
    it = iter(argv)
    for token in it:
        if token in _VALUE_OPTIONS:
            nxt = next(it, None)
            if nxt is not None and _NEGATIVE_VALUE.match(nxt):
                out.append(f"{token}={nxt}")
                continue
            out.append(token)
            if nxt is not None:
                out.append(nxt)
            continue
        out.append(token)
    return out


def main(argv: Sequence[str] | None = None, *, cache: BernoulliCache | None = None) -> int:
    """Run the CLI and return the exit code.

    ``cache`` substitutes the Bernoulli table; tests use it to inject a corrupted one.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_values(sys.argv[1:] if argv is None else argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, code = args.func(args, cache)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text += "\n"
    sys.stdout.write(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return code


def run() -> None:
    sys.exit(main())
