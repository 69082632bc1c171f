"""Command-line interface.

Every invocation prints one JSON record (or a plain-text rendering with
``--plain``) and exits 0 for an affirmative result, 1 for a negative one
and 2 for usage, precondition or budget errors.
"""

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .arith import DEFAULT_FACTOR_BUDGET
from . import arith
from .certificate import (Certificate, certificate_record, unit_coeff_criterion,
                          verify_certificate)
from .colouring import (DEFAULT_LIFT_BUDGET, DEFAULT_SEARCH_CEILING, PeriodicColouring,
                        check_periodic_avoidance, enumerate_mono_solutions, load_periodic,
                        load_table, parse_builtin, search_avoiding_colouring)
from .constructors import (DEFAULT_SCAN_BUDGET, construct_cz2, construct_czp, construct_general,
                           construct_power, construct_scaled_cz2, construct_solution_in_class)
from .errors import BudgetExceeded, HypothesisUnsatisfied, PreconditionError, RamseyCertError
from .poly import EquationSpec, IntPolynomial

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR = 0, 1, 2

METHODS = ("auto", "general", "power", "czp", "cz2", "scaled-cz2")


class Outcome:
    def __init__(self, code, payload):
        self.code = code
        self.payload = payload


def _equation(args):
    return EquationSpec(args.a, args.b, IntPolynomial.parse(args.poly))


def _eq_dict(eq):
    return {"a": eq.a, "b": eq.b, "poly": eq.p.to_text()}


def _monomial(p):
    """``(c, q)`` if ``p = c*z**q``, else None."""
    if any(p.coeffs[:-1]) or p.degree < 1:
        return None
    return p.leading, p.degree


def _try_method(method, eq, args):
    """Run one recipe; returns ``(chain, ConstructionResult)``."""
    a, b, p = eq.a, eq.b, eq.p
    if method == "general":
        return None, construct_general(a, b, p)
    mono = _monomial(p)
    if method == "power":
        if mono is None or mono[0] != 1:
            raise PreconditionError("power needs p = z^n")
        if b == 1:
            return None, construct_power(a, mono[1], args.alpha_prime)
        if a == 1:
            res = construct_power(b, mono[1], args.alpha_prime)
            return None, type(res)(res.certificate, True, res.method, res.equation)
        raise PreconditionError("power needs a = 1 or b = 1")
    if mono is None:
        raise PreconditionError(f"{method} needs p = c*z^q")
    c, q = mono
    if method == "czp":
        return None, construct_czp(a, b, c, q, budget=args.scan_budget)
    if q != 2:
        raise PreconditionError(f"{method} needs p = c*z^2")
    if method == "cz2":
        return None, construct_cz2(a, b, c)
    return construct_scaled_cz2(a, b, c)


def _auto_methods(eq):
    methods = ["general"]
    mono = _monomial(eq.p)
    if mono is not None:
        c, q = mono
        if c == 1 and 1 in (eq.a, eq.b):
            methods.append("power")
        if q == 2:
            methods += ["cz2", "scaled-cz2"]
        else:
            methods.append("czp")
    return methods


def cmd_certify(args):
    eq = _equation(args)
    record = {"command": "certify", "equation": _eq_dict(eq)}
    if args.method == "auto" and eq.a == eq.b == 1:
        p1, p2 = eq.p(1), eq.p(2)
        ramsey = unit_coeff_criterion(eq.p)
        record.update({
            "status": "2-ramsey" if ramsey else "not-2-ramsey",
            "method": "unit-coefficient criterion",
            "p(1)p(2)": p1 * p2,
            "message": (f"a=b=1: {'2-Ramsey' if ramsey else 'not 2-Ramsey'} by parity criterion, "
                        f"p(1)p(2)={p1 * p2} {'even' if ramsey else 'odd'}; no certificate emitted"),
        })
        return Outcome(EXIT_OK if ramsey else EXIT_NEGATIVE, record)
    methods = _auto_methods(eq) if args.method == "auto" else [args.method]
    first_error = None
    unsatisfied = None
    for method in methods:
        try:
            chain, res = _try_method(method, eq, args)
        except HypothesisUnsatisfied as exc:
            unsatisfied = unsatisfied or exc
            continue
        except PreconditionError as exc:
            first_error = first_error or f"{method}: {exc}"
            continue
        report = verify_certificate(res.equation, res.certificate)
        record.update({
            "status": "verified" if report.passed else "failed",
            "method": res.method,
            "swapped": res.swapped,
            "certificate": certificate_record(res.equation, res.certificate),
        })
        if chain is not None:
            record["reduction"] = chain.as_dict()
        record["report"] = report.as_dict()
        return Outcome(EXIT_OK if report.passed else EXIT_NEGATIVE, record)
    if unsatisfied is not None and first_error is None:
        record.update({"status": "hypothesis-unsatisfied", "message": str(unsatisfied)})
        return Outcome(EXIT_NEGATIVE, record)
    record.update({"status": "error", "message": first_error or str(unsatisfied)})
    return Outcome(EXIT_ERROR, record)


def cmd_verify(args):
    eq = _equation(args)
    cert = Certificate(args.d, args.u, args.t, args.v)
    report = verify_certificate(eq, cert)
    record = {
        "command": "verify",
        "status": "verified" if report.passed else "failed",
        "certificate": certificate_record(eq, cert),
        "report": report.as_dict(),
    }
    return Outcome(EXIT_OK if report.passed else EXIT_NEGATIVE, record)


def _load_colouring(spec, allow_table=False):
    if spec.startswith("builtin:"):
        return parse_builtin(spec[len("builtin:"):])
    if spec.startswith("table:"):
        if not allow_table:
            raise PreconditionError("table colourings are not periodic")
        return load_table(_read(spec[len("table:"):]))
    return load_periodic(_read(spec))


def _read(path):
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise PreconditionError(f"cannot read colouring file {path}: {exc.strerror}") from None


def cmd_check_colouring(args):
    eq = _equation(args)
    col = _load_colouring(args.colouring)
    verdict = check_periodic_avoidance(eq, col, K=args.min, lift_budget=args.lift_budget)
    record = {
        "command": "check-colouring",
        "equation": _eq_dict(eq),
        "colouring": {"modulus": col.modulus, "signs": col.to_text()},
        **verdict.as_dict(),
    }
    return Outcome(EXIT_OK if verdict.avoids else EXIT_NEGATIVE, record)


def cmd_search_colouring(args):
    eq = _equation(args)
    if args.max_mod > args.ceiling:
        raise PreconditionError(f"--max-mod {args.max_mod} exceeds ceiling {args.ceiling}")
    record = {"command": "search-colouring", "equation": _eq_dict(eq), "max_mod": args.max_mod}
    for m in range(1, args.max_mod + 1):
        col = search_avoiding_colouring(eq, m, ceiling=args.ceiling)
        if col is not None:
            record.update({"status": "found", "colouring": {"modulus": m, "signs": col.to_text()}})
            return Outcome(EXIT_OK, record)
    record.update({"status": "none", "message": f"none up to {args.max_mod}"})
    return Outcome(EXIT_NEGATIVE, record)


def cmd_solutions(args):
    eq = _equation(args)
    col = _load_colouring(args.colouring, allow_table=True)
    if not isinstance(col, PeriodicColouring) and args.max > col.size:
        raise PreconditionError(f"--max {args.max} exceeds table size {col.size}")
    sols = enumerate_mono_solutions(eq, col, args.max)
    record = {
        "command": "solutions",
        "equation": _eq_dict(eq),
        "max": args.max,
        "status": "found" if sols else "none",
        "count": len(sols),
        "solutions": [s.as_dict() for s in sols],
    }
    return Outcome(EXIT_OK if sols else EXIT_NEGATIVE, record)


def cmd_construct_solution(args):
    eq = _equation(args)
    x, y, z = construct_solution_in_class(eq, args.d, args.t, args.min)
    lhs = eq.a * x + eq.b * y
    record = {
        "command": "construct-solution",
        "equation": _eq_dict(eq),
        "status": "constructed",
        "solution": {"x": x, "y": y, "z": z},
        "check": f"{eq.a}*{x} + {eq.b}*{y} = {lhs} = p({z}) = {eq.p(z)}",
    }
    return Outcome(EXIT_OK, record)


def _render_plain(payload, indent=0):
    pad = "  " * indent
    lines = []
    for key, value in payload.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.extend(_render_plain(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.append(f"{pad}  - " + ", ".join(f"{k}={_flat(v)}" for k, v in item.items()))
        else:
            lines.append(f"{pad}{key}: {_flat(value)}")
    return lines


def _flat(value):
    if isinstance(value, list):
        return "[" + ", ".join(_flat(v) for v in value) + "]"
    return str(value)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ramseycert",
        description="Certificates and colourings for a*x + b*y = p(z)")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--a", type=int, required=True)
        sp.add_argument("--b", type=int, required=True)
        sp.add_argument("--poly", required=True,
                        help='coefficients low-to-high ("2,3,1") or "z^2+3*z+2"')
        sp.add_argument("--plain", action="store_true", help="human-readable output")
        sp.add_argument("--factor-budget", type=int, default=DEFAULT_FACTOR_BUDGET)
        sp.set_defaults(func=func)
        return sp

    sp = common("certify", cmd_certify, "construct and verify a certificate")
    sp.add_argument("--method", choices=METHODS, default="auto")
    sp.add_argument("--alpha-prime", type=int, default=None, help="override for the power recipe")
    sp.add_argument("--scan-budget", type=int, default=DEFAULT_SCAN_BUDGET)

    sp = common("verify", cmd_verify, "verify a certificate")
    for flag in ("--d", "--u", "--t", "--v"):
        sp.add_argument(flag, type=int, required=True)

    sp = common("check-colouring", cmd_check_colouring, "check a periodic colouring")
    sp.add_argument("--colouring", required=True, help="file path or builtin:NAME[:PARAMS]")
    sp.add_argument("--lift-budget", type=int, default=DEFAULT_LIFT_BUDGET)
    sp.add_argument("--min", type=int, default=1, help="lower bound for lifted solutions")

    sp = common("search-colouring", cmd_search_colouring, "search for an avoiding colouring")
    sp.add_argument("--max-mod", type=int, required=True)
    sp.add_argument("--ceiling", type=int, default=DEFAULT_SEARCH_CEILING)

    sp = common("solutions", cmd_solutions, "list monochromatic solutions up to N")
    sp.add_argument("--colouring", required=True,
                    help="file path, table:PATH or builtin:NAME[:PARAMS]")
    sp.add_argument("--max", type=int, required=True)

    sp = common("construct-solution", cmd_construct_solution, "solution inside a residue class")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--min", type=int, default=1)
    return parser


_SIGNED_OPTS = ("--poly", "--t", "--v")


def _glue_signed(argv):
    # argparse mistakes "--poly -1,0,1" for two options
    out, i = [], 0
    while i < len(argv):
        if argv[i] in _SIGNED_OPTS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def run(argv=None):
    """Parse ``argv`` and execute; returns an :class:`Outcome`."""
    argv = _glue_signed(list(sys.argv[1:] if argv is None else argv))
    args = build_parser().parse_args(argv)
    arith.DEFAULT_FACTOR_BUDGET = args.factor_budget
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        return Outcome(EXIT_ERROR, {"command": args.command, "status": "budget-exhausted",
                                    "message": str(exc)})
    except RamseyCertError as exc:
        return Outcome(EXIT_ERROR, {"command": args.command, "status": "error",
                                    "message": str(exc)})


def main(argv=None):
    args_plain = "--plain" in (sys.argv[1:] if argv is None else argv)
    outcome = run(argv)
    outcome.payload["exit_code"] = outcome.code
    if args_plain:
        print("\n".join(_render_plain(outcome.payload)))
    else:
        print(json.dumps(outcome.payload, indent=2))
    return outcome.code


if __name__ == "__main__":
    sys.exit(main())
