"""Command-line interface.

One subcommand per capability:

    monomial   multiplier ideal of a monomial ideal at a weight
    poly       multiplier ideal of a nondegenerate polynomial at a weight
    classify   per-face nondegeneracy report
    lct        log canonical threshold of a monomial ideal
    jumps      jumping numbers of an ideal (--gens) or polynomial (--f)
    oracle     dimension-2 resolution data (fan, divisor orders), optional
               multiplier ideal recomputed through the resolution
    selftest   run the built-in example corpus

Output is deterministic: generators are emitted in descending lexicographic
order and rationals as exact ``p/q`` strings.  Exit codes: 0 success,
1 usage or input errors, 2 degenerate input, 3 inconclusive computation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .errors import (
    DegenerateInputError,
    InconclusiveError,
    InvalidInputError,
    MultidealError,
    ParseError,
)
from .expr import parse_polynomial
from .groebner import DEFAULT_PAIR_LIMIT
from .ideals import MonomialIdeal, minimalize, term_ideal
from .multiplier import (
    jumping_numbers,
    jumping_numbers_poly,
    lct,
    multiplier_monomial,
    multiplier_poly,
)
from .nondeg import Verdict, classify
from .polynomial import Polynomial
from .toric import divisor_data, multiplier_via_resolution, smooth_subdivision


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _parse_vars(text: str) -> tuple[str, ...]:
    names = tuple(v.strip() for v in text.split(",") if v.strip())
    if not names:
        raise InvalidInputError("--vars must declare at least one variable")
    return names


def _parse_gens(text: str, variables) -> MonomialIdeal:
    pieces = [piece.strip() for piece in text.split(",") if piece.strip()]
    if not pieces:
        raise InvalidInputError("--gens must list at least one monomial")
    exponents = []
    for piece in pieces:
        poly = parse_polynomial(piece, variables)
        if not poly.is_single_term():
            raise InvalidInputError(f"generator {piece!r} is not a single monomial")
        exponents.append(next(iter(poly.terms)))
    return minimalize(len(variables), exponents)


def _parse_rational(text: str, flag: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InvalidInputError(f"{flag} expects a rational like 5/6, got {text!r}")
    return value


def _monomial_text(e, variables) -> str:
    if not any(e):
        return "1"
    return "*".join(
        name if k == 1 else f"{name}^{k}" for name, k in zip(variables, e) if k
    )


def _json_out(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(", ", ": ")) + "\n"


def _ideal_text(ideal: MonomialIdeal, variables) -> str:
    gens = ", ".join(_monomial_text(g, variables) for g in ideal.sorted_gens())
    return f"generators: {gens if gens else '(zero ideal)'}\n"


# ---------------------------------------------------------------------------
# handlers


def _cmd_monomial(args) -> str:
    variables = _parse_vars(args.vars)
    ideal = _parse_gens(args.gens, variables)
    result = multiplier_monomial(ideal, _parse_rational(args.r, "--r"))
    if args.format == "json":
        return _json_out(result.to_json_dict())
    return _ideal_text(result, variables)


def _cmd_poly(args) -> str:
    variables = _parse_vars(args.vars)
    f = parse_polynomial(args.f, variables)
    mode = args.mode.replace("-", "_")
    result = multiplier_poly(
        f, _parse_rational(args.r, "--r"), mode, pair_limit=args.pair_limit
    )
    if args.format == "json":
        return _json_out(result.to_json_dict())
    gens = ", ".join(
        _monomial_text(g, variables) for g in result.monomial_part.sorted_gens()
    )
    return (
        f"principal: ({result.base.render()})^{result.exponent}\n"
        f"monomial generators: {gens}\n"
    )


def _cmd_classify(args) -> str:
    variables = _parse_vars(args.vars)
    f = parse_polynomial(args.f, variables)
    report = classify(f, pair_limit=args.pair_limit)
    if args.format == "json":
        return _json_out(report.to_json_dict())
    lines = [
        f"overall: {report.overall.value}",
        f"principal_part: {report.principal_part.value}",
    ]
    if report.witnesses:
        lines.append("degenerate faces:")
        for w in report.witnesses:
            lines.append(
                f"  active={sorted(w.face.active)} dim={w.face.dim} "
                f"compact={str(w.face.compact).lower()} terms: {w.face_polynomial.render()}"
            )
    return "\n".join(lines) + "\n"


def _cmd_lct(args) -> str:
    variables = _parse_vars(args.vars)
    ideal = _parse_gens(args.gens, variables)
    value = lct(ideal)
    text = "infinity" if value is None else str(value)
    if args.format == "json":
        return _json_out({"lct": text})
    return f"lct: {text}\n"


def _cmd_jumps(args) -> str:
    variables = _parse_vars(args.vars)
    bound = _parse_rational(args.bound, "--bound")
    if (args.gens is None) == (args.f is None):
        raise InvalidInputError("jumps needs exactly one of --gens or --f")
    if args.gens is not None:
        jumps = jumping_numbers(_parse_gens(args.gens, variables), bound)
    else:
        f = parse_polynomial(args.f, variables)
        jumps = jumping_numbers_poly(f, bound, pair_limit=args.pair_limit)
    if args.format == "json":
        return _json_out({"jumps": [str(j) for j in jumps]})
    return "jumps: " + (", ".join(str(j) for j in jumps) if jumps else "(none)") + "\n"


def _cmd_oracle(args) -> str:
    variables = _parse_vars(args.vars)
    ideal = _parse_gens(args.gens, variables)
    fan = smooth_subdivision(ideal)
    data = divisor_data(ideal, fan)
    payload: dict = {
        "rays": [list(v) for v in fan.rays],
        "divisors": [d.to_json_dict() for d in data],
    }
    if args.r is not None:
        result = multiplier_via_resolution(ideal, _parse_rational(args.r, "--r"))
        payload["multiplier"] = result.to_json_dict()
    if args.format == "json":
        return _json_out(payload)
    lines = ["rays: " + ", ".join(f"({v[0]},{v[1]})" for v in fan.rays)]
    for d in data:
        lines.append(f"  ray ({d.ray[0]},{d.ray[1]}): ord={d.ideal_order} k_rel={d.k_rel}")
    if args.r is not None:
        lines.append(_ideal_text(result, variables).rstrip())
    return "\n".join(lines) + "\n"


def _cmd_selftest(args) -> str:
    from fractions import Fraction as F

    lines = []
    failures = []

    def check(label, ok):
        lines.append(f"{'ok' if ok else 'FAIL'} - {label}")
        if not ok:
            failures.append(label)

    xy = ("x", "y")
    cases = [
        ("y^2 - y*(x-1)^2", Verdict.DEGENERATE, Verdict.NONDEGENERATE),
        ("(x*y - 1)^9", Verdict.DEGENERATE, Verdict.NONDEGENERATE),
        ("(x+y)^2 - (x-y)^5", Verdict.DEGENERATE, Verdict.DEGENERATE),
        ("x^2 + y^3", Verdict.NONDEGENERATE, Verdict.NONDEGENERATE),
    ]
    for text, overall, principal in cases:
        report = classify(parse_polynomial(text, xy))
        check(
            f"classify {text}: {overall.value} / principal {principal.value}",
            report.overall is overall and report.principal_part is principal,
        )

    cube2 = minimalize(2, [(3, 0), (0, 3)])
    check(
        "multiplier ideal of (x^3, y^3) at 1 is (x, y)^2",
        multiplier_monomial(cube2, 1)
        == minimalize(2, [(2, 0), (1, 1), (0, 2)]),
    )
    cube3 = minimalize(3, [(3, 0, 0), (0, 3, 0), (0, 0, 3)])
    check(
        "multiplier ideal of (x^3, y^3, z^3) at 1 is (x, y, z)",
        multiplier_monomial(cube3, 1)
        == minimalize(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)]),
    )
    check("lct (x^2, y^3) = 5/6", lct(minimalize(2, [(2, 0), (0, 3)])) == F(5, 6))
    check("lct (x^3, y^3, z^3) = 1", lct(cube3) == F(1))

    import random

    rng = random.Random(20240915)
    agree = True
    for _ in range(25):
        k = rng.randint(1, 4)
        ideal = minimalize(
            2, [(rng.randint(0, 8), rng.randint(0, 8)) for _ in range(k)]
        )
        r = F(rng.randint(1, 36), rng.randint(1, 12))
        while r > 3:
            r = F(rng.randint(1, 36), rng.randint(1, 12))
        if multiplier_monomial(ideal, r) != multiplier_via_resolution(ideal, r):
            agree = False
            break
    check("interior test agrees with toric resolution on 25 random inputs", agree)

    if failures:
        raise InvalidInputError(f"selftest failed: {failures}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# parser assembly


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="multideal",
        description="Multiplier ideals of monomial ideals and nondegenerate polynomials.",
    )
    parser.add_argument("--version", action="version", version=f"multideal {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_vars=True):
        if needs_vars:
            p.add_argument("--vars", required=True, help="comma-separated variable names")
        p.add_argument(
            "--format", choices=("text", "json"), default="text", help="output format"
        )
        p.add_argument(
            "--pair-limit",
            type=int,
            default=DEFAULT_PAIR_LIMIT,
            help="resource cap for the nondegeneracy engine",
        )

    p = sub.add_parser("monomial", help="multiplier ideal of a monomial ideal")
    common(p)
    p.add_argument("--gens", required=True, help="comma-separated monomial generators")
    p.add_argument("--r", required=True, help="positive rational weight")
    p.set_defaults(handler=_cmd_monomial)

    p = sub.add_parser("poly", help="multiplier ideal of a nondegenerate polynomial")
    common(p)
    p.add_argument("--f", required=True, help="polynomial expression")
    p.add_argument("--r", required=True, help="positive rational weight")
    p.add_argument(
        "--mode",
        choices=("strict", "principal-part", "principal_part"),
        default="strict",
        help="required nondegeneracy (principal-part answers are local at the origin)",
    )
    p.set_defaults(handler=_cmd_poly)

    p = sub.add_parser("classify", help="per-face nondegeneracy report")
    common(p)
    p.add_argument("--f", required=True, help="polynomial expression")
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("lct", help="log canonical threshold of a monomial ideal")
    common(p)
    p.add_argument("--gens", required=True, help="comma-separated monomial generators")
    p.set_defaults(handler=_cmd_lct)

    p = sub.add_parser("jumps", help="jumping numbers up to a bound")
    common(p)
    p.add_argument("--gens", help="comma-separated monomial generators")
    p.add_argument("--f", help="polynomial expression (nondegenerate)")
    p.add_argument("--bound", required=True, help="positive rational bound")
    p.set_defaults(handler=_cmd_jumps)

    p = sub.add_parser("oracle", help="dimension-2 toric resolution data")
    common(p)
    p.add_argument("--gens", required=True, help="comma-separated monomial generators")
    p.add_argument("--r", help="optionally recompute the multiplier ideal at this weight")
    p.set_defaults(handler=_cmd_oracle)

    p = sub.add_parser("selftest", help="run the built-in example corpus")
    common(p, needs_vars=False)
    p.set_defaults(handler=_cmd_selftest)

    return parser


def _report_error(code: str, message: str) -> None:
    print(f"error[{code}]: {message}", file=sys.stderr)


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as e:
        _report_error("usage", str(e))
        return 1
    try:
        sys.stdout.write(args.handler(args))
        return 0
    except DegenerateInputError as e:
        _report_error(e.code, str(e))
        return 2
    except InconclusiveError as e:
        _report_error(e.code, str(e))
        return 3
    except (ParseError, InvalidInputError) as e:
        _report_error(e.code, str(e))
        return 1
    except MultidealError as e:
        _report_error(e.code, str(e))
        return 1


if __name__ == "__main__":
    sys.exit(main())
