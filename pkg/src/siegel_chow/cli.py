"""Command line front end: ``siegel-chow {present,chern,verify,table}``."""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Callable

from . import bundles, chowring, intersection
from .polycore import format_rational

MAX_G = 6
MAX_G_SYMM = 10

PASS, FAIL, ERROR = "pass", "fail", "error"
EXIT_CODES = {PASS: 0, FAIL: 1, ERROR: 2}


class ReportError(ValueError):
    pass


def make_report(command: str, params: dict, status: str, result, timing: float | None = None) -> dict:
    rep = {"command": command, "params": params, "status": status, "result": result}
    if timing is not None:
        rep["timing_s"] = round(timing, 3)
    return rep


def _check_g(g: int, limit: int = MAX_G) -> None:
    if g < 1 or g > limit:
        raise ReportError(f"g={g} outside the supported range 1..{limit}")


def cmd_present(g: int, space: str = "siegel") -> dict:
    _check_g(g)
    P = chowring.space(g, space)
    return make_report("present", {"g": g, "space": space}, PASS, P.report())


def cmd_chern(g: int, bundle: str) -> dict:
    _check_g(g)
    B = bundles.bundle(g, bundle)
    result = B.report()
    target = chowring.levi_space(g) if bundle in ("normal", "levi_tangent") else chowring.siegel_space(g)
    result["reduced_in"] = target.label
    result["reduced_chern_classes"] = [
        str(target.normal_form(c)) for c in bundles.chern_polynomial(B)
    ]
    return make_report("chern", {"g": g, "bundle": bundle}, PASS, result)


def _verify_theorem(g: int) -> tuple[str, dict]:
    try:
        res = intersection.verify_theorem(g)
    except intersection.PreconditionError as exc:
        return ERROR, {"error": str(exc)}
    except intersection.TheoremCheckError as exc:
        return FAIL, {"error": str(exc)}
    return PASS, intersection.theorem_report(res)


def _verify_chern(g: int) -> tuple[str, dict]:
    ok, trace = intersection.chern_vanishing(g)
    return (PASS if ok else FAIL), trace


def _verify_symm(g: int) -> tuple[str, dict]:
    checks = {}
    for l in range(1, g):
        checks[str(l)] = chowring.verify_symmetric_identity(g, l)
    status = PASS if all(checks.values()) else FAIL
    return status, {"levels": checks}


def _verify_kernel(g: int) -> tuple[str, dict]:
    amb, sub = chowring.siegel_space(g), chowring.levi_space(g)
    kernel = chowring.kernel_generator_check(amb, sub)
    surj = [chowring.pullback_is_surjective(amb, sub, d) for d in range(amb.top_degree + 1)]
    status = PASS if kernel and all(surj) else FAIL
    return status, {"kernel_is_lambda_g": kernel, "surjective_by_degree": surj}


_CHECKS: dict[str, Callable[[int], tuple[str, dict]]] = {
    "theorem": _verify_theorem,
    "chern-vanishing": _verify_chern,
    "symm-lemma": _verify_symm,
    "kernel": _verify_kernel,
}


def cmd_verify(g: int, which: str = "all") -> dict:
    _check_g(g, MAX_G_SYMM if which == "symm-lemma" else MAX_G)
    if which != "all" and which not in _CHECKS:
        raise ReportError(f"unknown check {which!r}")
    names = list(_CHECKS) if which == "all" else [which]
    results, statuses = {}, []
    for name in names:
        status, payload = _CHECKS[name](g)
        results[name] = {"status": status, **payload}
        statuses.append(status)
    if ERROR in statuses:
        overall = ERROR
    elif FAIL in statuses:
        overall = FAIL
    else:
        overall = PASS
    return make_report("verify", {"g": g, "which": which}, overall, results)


def cmd_table(gmax: int) -> dict:
    if not 2 <= gmax <= MAX_G:
        raise ReportError(f"gmax={gmax} outside the supported range 2..{MAX_G}")
    rows = []
    status = PASS
    for g in range(2, gmax + 1):
        try:
            res = intersection.verify_theorem(g)
        except intersection.TheoremCheckError as exc:
            rows.append({"g": g, "error": str(exc), "sign_check": FAIL})
            status = FAIL
            continue
        rows.append(
            {
                "g": g,
                "dim_G/P_I": res.details["dim_G/P_I"],
                "a_lambda": format_rational(res.a),
                "a_JG": format_rational(res.a_hodge),
                "sign_check": PASS if res.sign_ok else FAIL,
            }
        )
    return make_report("table", {"gmax": gmax}, status, {"rows": rows})


# -- rendering -------------------------------------------------------------------


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def _text_lines(value, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.extend(_text_lines(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, (dict, list)):
                sub = _text_lines(v, indent + 1)
                if sub:
                    sub[0] = f"{pad}- {sub[0].lstrip()}"
                lines.extend(sub)
            else:
                lines.append(f"{pad}- {v}")
    else:
        lines.append(f"{pad}{value}")
    return lines


def render_text(report: dict) -> str:
    if report["command"] == "table" and "rows" in report["result"]:
        head = f"{'g':>3}  {'dim':>4}  {'a_lambda':>9}  {'a_JG':>6}  sign"
        lines = [head]
        for r in report["result"]["rows"]:
            if "error" in r:
                lines.append(f"{r['g']:>3}  error: {r['error']}")
                continue
            lines.append(
                f"{r['g']:>3}  {r['dim_G/P_I']:>4}  {r['a_lambda']:>9}  {r['a_JG']:>6}  {r['sign_check']}"
            )
    else:
        lines = _text_lines(report["result"])
    lines.append(f"status: {report['status']}")
    if "timing_s" in report:
        lines.append(f"time: {report['timing_s']} s")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="siegel-chow",
        description="Exact Chow-ring computations for the Siegel flag variety of GSp_2g.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.add_argument("--timing", action="store_true", help="include wall time (breaks byte-identical output)")

    p = sub.add_parser("present", help="presentation of a Chow ring")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--space", choices=["siegel", "levi", "full"], default="siegel")
    common(p)

    p = sub.add_parser("chern", help="Chern classes of a homogeneous bundle")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--bundle", choices=["tangent", "normal", "hodge", "levi_tangent"], required=True)
    common(p)

    p = sub.add_parser("verify", help="check the lemmas and the theorem at rank g")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--which", choices=["theorem", "chern-vanishing", "symm-lemma", "kernel", "all"], default="all")
    common(p)

    p = sub.add_parser("table", help="tabulate a_{J,g} for g = 2..gmax")
    p.add_argument("--gmax", type=int, required=True)
    common(p)
    return parser


def run(argv: list[str] | None = None) -> tuple[dict, str]:
    args = build_parser().parse_args(argv)
    t0 = time.perf_counter()
    params = {k: v for k, v in vars(args).items() if k not in ("command", "format", "timing")}
    try:
        if args.command == "present":
            report = cmd_present(args.g, args.space)
        elif args.command == "chern":
            report = cmd_chern(args.g, args.bundle)
        elif args.command == "verify":
            report = cmd_verify(args.g, args.which)
        else:
            report = cmd_table(args.gmax)
    except (ReportError, chowring.PresentationError, bundles.BundleError) as exc:
        report = make_report(args.command, params, ERROR, {"error": str(exc)})
    if args.timing:
        report["timing_s"] = round(time.perf_counter() - t0, 3)
    text = render_json(report) if args.format == "json" else render_text(report)
    return report, text


def main(argv: list[str] | None = None) -> int:
    report, text = run(argv)
    sys.stdout.write(text)
    return EXIT_CODES[report["status"]]


if __name__ == "__main__":
    sys.exit(main())
