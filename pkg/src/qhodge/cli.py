"""Command-line front end.

Every subcommand builds one JSON-ready payload; ``--format text`` is a
rendering of that same payload.  Exit codes: 0 success, 2 bad input,
3 mathematical precondition not met, 4 internal invariant breached.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional

from .bernstein import assemble_bs, bs_polynomial, jump_data, microlocal_assembly, microlocal_jumps_check
from .errors import InvariantBreach, NotWeightedHomogeneous, PreconditionError
from .hodge import (
    QDivisor,
    generating_level_empirical,
    generating_level_formula,
    hodge_ideal_direct,
    hodge_ideal_recursive,
)
from .localring import EQUAL, compare
from .microlocal import compare_chains, conjecture_sweep, microlocal_ideal
from .newton import build_polyhedron, report as newton_report
from .parse import ParseError, VariableContext, parse_polynomial, parse_rational
from .poly import Polynomial, format_rational
from .weights import detect_weights, validate_weights

EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION, EXIT_BREACH = 0, 2, 3, 4

COMMANDS = {
    "analyze": "Milnor data, b-function and generating levels over an alpha grid",
    "hodge": "Hodge ideals I_0..I_k by the recursive and direct methods",
    "microlocal": "microlocal ideals up to level k",
    "compare": "level-by-level comparison of the Hodge and microlocal chains",
    "bernstein": "Bernstein-Sato polynomial by three independent routes",
    "newton": "Newton polyhedron, facets and face non-degeneracy",
    "conjecture": "sweep the power-of-m criterion over an alpha grid",
}
NEEDS_ALPHA = {"hodge", "microlocal", "compare"}
NEEDS_K = {"hodge", "microlocal", "compare"}
DEFAULT_GRID = 6


class InputError(ValueError):
    pass


def farey_grid(q: int) -> list[Fraction]:
    """All p/r in (0, 1] with r <= q, increasing."""
    return sorted({Fraction(p, r) for r in range(1, q + 1) for p in range(1, r + 1)})


def parse_alpha_grid(text: str) -> list[Fraction]:
    text = text.strip()
    if text.startswith("farey:"):
        try:
            q = int(text[len("farey:"):])
        except ValueError:
            raise InputError(f"bad grid {text!r}") from None
        if q < 1:
            raise InputError("farey grid needs a positive bound")
        return farey_grid(q)
    if not text:
        return []
    return [parse_rational(t) for t in text.split(",")]


class Job:
    """Validated command-line request."""

    def __init__(self, args: argparse.Namespace):
        self.command = args.command
        self.format = args.format
        self.mode = args.mode
        self.workers = args.workers
        try:
            self.ctx = VariableContext(args.vars)
        except ValueError as exc:
            raise InputError(f"--vars: {exc}") from None
        self.f = parse_polynomial(args.f, self.ctx)
        self.alpha = parse_rational(args.alpha) if args.alpha is not None else None
        self.k = args.k
        self.weights = [parse_rational(t) for t in args.weights.split(",")] if args.weights else None
        if self.weights is not None and len(self.weights) != self.ctx.n:
            raise InputError("--weights must have one entry per variable")
        self.alpha_grid = parse_alpha_grid(args.alpha_grid) if args.alpha_grid is not None else None
        if self.command in NEEDS_ALPHA and self.alpha is None:
            raise InputError(f"{self.command} needs --alpha")
        if self.command in NEEDS_K and self.k is None:
            raise InputError(f"{self.command} needs --k")
        if self.k is not None and self.k < 0:
            raise InputError("--k must be non-negative")
        if self.alpha is not None and not 0 < self.alpha <= 1:
            raise InputError("--alpha must satisfy 0 < alpha <= 1")
        if self.command == "conjecture" and self.alpha_grid is None:
            raise InputError("conjecture needs --alpha-grid")
        if self.f.is_zero() or self.f.constant_term():
            raise InputError("f must be nonzero and vanish at the origin")

    @property
    def names(self):
        return self.ctx.names

    def render(self, p: Polynomial) -> str:
        return p.render(self.names)

    def ideal(self, I) -> list[str]:
        return [self.render(g) for g in I.minimal_generators()]

    def divisor(self, alpha, allow_newton: bool) -> QDivisor:
        if self.mode == "newton":
            if not allow_newton:
                raise PreconditionError(f"{self.command} needs weighted mode")
            return QDivisor.newton(self.f, alpha)
        try:
            return QDivisor.weighted(self.f, alpha, self.weights)
        except NotWeightedHomogeneous as first:
            if self.mode == "weighted" or not allow_newton:
                raise
            try:
                return QDivisor.newton(self.f, alpha)
            except PreconditionError:
                raise first from None

    def header(self, d: Optional[QDivisor] = None) -> dict:
        out = {"command": self.command, "f": self.render(self.f), "vars": list(self.names)}
        if d is not None:
            out["mode"] = d.mode
            out["weights"] = [format_rational(x) for x in d.weights] if d.weights is not None else None
        return out


def _fr(x) -> str:
    return format_rational(x)


def cmd_analyze(job: Job) -> dict:
    d = job.divisor(job.alpha or 1, allow_newton=True)
    jd = d.jacobian
    out = job.header(d)
    out["milnor_number"] = jd.milnor_number
    basis = [job.render(Polynomial.monomial(e)) for e in jd.basis]
    if d.weights is None:
        out["basis"] = [{"monomial": b} for b in basis]
        out["newton_facets"] = len(d.polyhedron.facets)
        return out
    out["basis"] = [{"monomial": b, "weight": _fr(r)} for b, r in zip(basis, jd.weights)]
    out["minimal_exponent"] = _fr(d.weights.sigma)
    grid = job.alpha_grid if job.alpha_grid is not None else (
        [job.alpha] if job.alpha is not None else farey_grid(DEFAULT_GRID))
    rows = []
    for a in grid:
        da = d.with_alpha(a)
        formula = generating_level_formula(da)
        emp = generating_level_empirical(da, formula + 2)
        rows.append({"alpha": _fr(a), "formula": formula, "empirical": emp.level,
                     "agree": formula == emp.level})
    out["generating_levels"] = rows
    return out


def cmd_hodge(job: Job) -> dict:
    d = job.divisor(job.alpha, allow_newton=True)
    out = job.header(d)
    out.update(alpha=_fr(d.alpha), k=job.k)
    direct = hodge_ideal_direct(d, job.k)
    out["truncation_degree"] = direct.M
    chains = {}
    if d.weights is not None:
        recursive = hodge_ideal_recursive(d, job.k, direct.M)
        chains["recursive"] = [job.ideal(I) for I in recursive.ideals]
        agree = [compare(a, b) == EQUAL for a, b in zip(recursive.ideals, direct.ideals)]
        out["methods_agree"] = all(agree)
    chains["direct"] = [job.ideal(I) for I in direct.ideals]
    out["chains"] = chains
    return out


def cmd_microlocal(job: Job) -> dict:
    d = job.divisor(job.alpha, allow_newton=False)
    chain = microlocal_ideal(d, job.k)
    out = job.header(d)
    out.update(alpha=_fr(d.alpha), k=job.k, truncation_degree=chain.M)
    out["chain"] = [job.ideal(I) for I in chain.ideals]
    return out


def cmd_compare(job: Job) -> dict:
    d = job.divisor(job.alpha, allow_newton=False)
    rep = compare_chains(d, job.k)
    out = job.header(d)
    out.update(rep.to_json(job.names))
    out["k"] = job.k
    out["hodge"] = [job.ideal(I) for I in rep.hodge.ideals]
    out["microlocal"] = [job.ideal(I) for I in rep.microlocal.ideals]
    return out


def cmd_bernstein(job: Job) -> dict:
    d = job.divisor(1, allow_newton=False)
    product = bs_polynomial(job.f, d.weights, d.jacobian)
    jd = jump_data(job.f, d.weights, d.jacobian)
    assembled = assemble_bs(jd)
    micro = microlocal_assembly(jd)
    if not (product == assembled == micro and microlocal_jumps_check(jd, d.weights, d.n, product)):
        raise InvariantBreach("the three Bernstein-Sato routes disagree")
    out = job.header(d)
    out["bernstein_sato"] = product.to_json()
    out["routes"] = {"product": product.render(), "jumps": assembled.render(),
                     "microlocal": micro.render()}
    out["jump_data"] = jd.to_json()
    return out


def cmd_newton(job: Job) -> dict:
    np_ = build_polyhedron(job.f)
    out = job.header()
    out.update(newton_report(np_, job.f))
    return out


def cmd_conjecture(job: Job) -> dict:
    if job.mode == "newton":
        raise PreconditionError("conjecture needs weighted mode")
    w = detect_weights(job.f) if job.weights is None else validate_weights(job.f, job.weights)
    k = job.k if job.k is not None else 2
    reports = conjecture_sweep(job.f, job.alpha_grid, k, w, workers=job.workers)
    out = job.header()
    out["mode"] = "weighted"
    out["weights"] = [_fr(x) for x in w]
    out["k"] = k
    out["reports"] = [r.to_json(job.names) for r in reports]
    out["counterexamples"] = sum(len(r.counterexamples) for r in reports)
    return out


HANDLERS = {
    "analyze": cmd_analyze,
    "hodge": cmd_hodge,
    "microlocal": cmd_microlocal,
    "compare": cmd_compare,
    "bernstein": cmd_bernstein,
    "newton": cmd_newton,
    "conjecture": cmd_conjecture,
}


def _ideal_text(gens) -> str:
    return "(" + ", ".join(gens) + ")"


def render_text(payload: dict) -> str:
    lines = [f"f = {payload['f']}"]
    if payload.get("mode"):
        lines.append(f"mode: {payload['mode']}")
    if payload.get("weights"):
        lines.append("weights: " + ", ".join(payload["weights"]))
    cmd = payload["command"]
    if cmd == "analyze":
        lines.append(f"milnor number: {payload['milnor_number']}")
        for b in payload["basis"]:
            lines.append(f"  {b['monomial']}" + (f"  rho = {b['weight']}" if "weight" in b else ""))
        if "minimal_exponent" in payload:
            lines.append(f"minimal exponent: {payload['minimal_exponent']}")
            lines.append("generating level (alpha: formula / empirical)")
            for r in payload["generating_levels"]:
                mark = "" if r["agree"] else "  MISMATCH"
                lines.append(f"  {r['alpha']}: {r['formula']} / {r['empirical']}{mark}")
        else:
            lines.append(f"compact facets: {payload['newton_facets']}")
    elif cmd == "hodge":
        lines.append(f"alpha = {payload['alpha']}, truncation degree {payload['truncation_degree']}")
        for name, chain in payload["chains"].items():
            lines.append(f"{name}:")
            lines += [f"  I_{k} = {_ideal_text(g)}" for k, g in enumerate(chain)]
        if "methods_agree" in payload:
            lines.append("recursive and direct: " + ("agree" if payload["methods_agree"] else "DISAGREE"))
    elif cmd == "microlocal":
        lines.append(f"alpha = {payload['alpha']}, truncation degree {payload['truncation_degree']}")
        lines += [f"  Ĩ_{k} = {_ideal_text(g)}" for k, g in enumerate(payload["chain"])]
    elif cmd == "compare":
        lines.append(f"alpha = {payload['alpha']}, truncation degree {payload['truncation_degree']}")
        for lv, I, J in zip(payload["levels"], payload["hodge"], payload["microlocal"]):
            power = lv["hodge_power_of_maximal"]
            lines.append(f"k = {lv['k']}: I = {_ideal_text(I)}  Ĩ = {_ideal_text(J)}")
            lines.append(f"  relation {lv['relation']}; mod f equal {lv['mod_f_equal']}; "
                         f"I power of m: {'m^%d' % power if power is not None else 'no'}; "
                         f"criterion fired {lv['criterion_fired']}; "
                         f"next level {lv['conjecture_next_level'] or '-'}")
    elif cmd == "bernstein":
        lines.append(f"b_f(s) = {payload['bernstein_sato']['rendered']}")
        for name, r in payload["routes"].items():
            lines.append(f"  {name}: {r}")
        jd = payload["jump_data"]
        lines.append("E = {" + ", ".join(jd["E"]) + "}")
        for k, v in jd["E_k"].items():
            lines.append(f"E_{k} = " + "{" + ", ".join(v) + "}")
        lines.append("N = {" + ", ".join(jd["N"]) + "}")
        lines.append("microlocal jumps: " + ", ".join(jd["microlocal_jumps"]))
    elif cmd == "newton":
        lines.append("points: " + " ".join(str(tuple(p)) for p in payload["points"]))
        for F in payload["facets"]:
            lines.append(f"facet normal ({', '.join(F['normal'])}) |B| = {F['size']} support {F['support']}")
        lines.append(f"convenient: {payload['convenient']}")
        lines.append(f"nondegenerate: {payload['nondegenerate']}")
        for face in payload["faces"]:
            pts = " ".join(str(tuple(payload["points"][i])) for i in face["support"])
            verdict = face.get("nondegenerate")
            tag = "" if verdict is None else ("  ok" if verdict else "  DEGENERATE")
            lines.append(f"  face dim {face['dimension']}: {pts}{tag}")
    elif cmd == "conjecture":
        lines.append(f"k = {payload['k']}; counterexamples: {payload['counterexamples']}")
        for r in payload["reports"]:
            if "error" in r:
                lines.append(f"  alpha {r['alpha']}: error: {r['error']}")
                continue
            rel = " ".join(lv["relation"] for lv in r["levels"])
            bad = [lv["k"] + 1 for lv in r["levels"] if lv["conjecture_next_level"] == "counterexample"]
            lines.append(f"  alpha {r['alpha']}: {rel}" + (f"  COUNTEREXAMPLE at {bad}" if bad else ""))
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--f", required=True, help="polynomial, e.g. 'x^2+y^3'")
    common.add_argument("--vars", required=True, help="comma-separated variable names")
    common.add_argument("--alpha", help="rational coefficient of the divisor, 0 < alpha <= 1")
    common.add_argument("--k", type=int, help="top Hodge level")
    common.add_argument("--weights", help="explicit comma-separated weights")
    common.add_argument("--mode", choices=("auto", "weighted", "newton"), default="auto")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--alpha-grid", help="comma-separated alphas, or farey:N")
    common.add_argument("--workers", type=int, default=1, help="processes for conjecture sweeps")
    parser = argparse.ArgumentParser(
        prog="qhodge", description="Exact Hodge ideals and Bernstein-Sato polynomials of alpha*Z.",
        epilog="exit codes: 0 ok, 2 bad input, 3 precondition not met, 4 invariant breached")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, text in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=text, description=text)
    return parser


def _emit_error(fmt: str, code: int, exc: BaseException) -> int:
    message = exc.message if isinstance(exc, ParseError) else str(exc)
    if fmt == "json":
        body = {"error": {"exit_code": code, "type": type(exc).__name__, "message": message}}
        if isinstance(exc, ParseError):
            body["error"]["position"] = exc.position
        print(json.dumps(body, indent=2, ensure_ascii=False))
    print(f"qhodge: {exc}", file=sys.stderr)
    return code


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        job = Job(args)
        payload = HANDLERS[job.command](job)
    except InvariantBreach as exc:
        return _emit_error(args.format, EXIT_BREACH, exc)
    except PreconditionError as exc:
        return _emit_error(args.format, EXIT_PRECONDITION, exc)
    except (ParseError, InputError, ValueError) as exc:
        return _emit_error(args.format, EXIT_INPUT, exc)
    if args.format == "json":
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(render_text(payload))
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
