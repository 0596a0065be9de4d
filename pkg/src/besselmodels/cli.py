"""Command-line front end.

Every command emits a report ``{"op", "inputs", "value", "scalar", "checks"}``.
For model values the full value is ``scalar * value``: ``value`` is the
Laurent-polynomial part and ``scalar`` the factor depending only on ``v``.
Exit status: 0 on success, 1 when a requested check fails, 2 on bad usage.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import __version__
from .algebra import LaurentPoly, RationalFn, SatakeNumeric, Scaled, substitute
from .bessel import (
    NONSPLIT,
    SPLIT,
    BesselIndex,
    h_value,
    recursion_check,
    rank1_dictionary,
    nonsplit_region,
    split_region,
    table_for,
)
from .checks import SUITES, VerifyConfig, indices, run_suite
from .euler import EulerInput, local_euler_factor, norm_factor_check, ratio_check, verify_local_identity
from .gsp4 import find_dictionary, h_gsp4, pull_back
from .waldspurger import macdonald_rank1, oracle_wa_integral, wa_region, wa_normalizer, wa_value
from .weyl import alpha_names, enumerate_omega, is_invariant, is_invariant4, weyl_denominator_forms

FORMATS = ("json", "csv", "pretty")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    fmt: str = "json"
    n: int | None = None
    k: tuple[int, ...] | None = None
    case: str = NONSPLIT
    numeric: tuple[Fraction, ...] | None = None
    seed: int = 7
    options: dict = field(default_factory=dict)


@dataclass
class Report:
    op: str
    inputs: dict
    value: object = None
    scalar: object = "1"
    checks: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {"op": self.op, "inputs": self.inputs, "value": self.value,
               "scalar": self.scalar, "checks": self.checks}
        out.update(self.extra)
        return out

    @property
    def failed(self) -> bool:
        return any(not c["pass"] for c in self.checks)


# -- parsing helpers -------------------------------------------------------------

def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _int_range(text: str) -> list[int]:
    """``5`` or ``0:5`` (inclusive)."""
    try:
        if ":" in text:
            lo, hi = text.split(":")
            return list(range(int(lo), int(hi) + 1))
        return [int(text)]
    except ValueError:
        raise UsageError(f"expected an integer or lo:hi, got {text!r}") from None


def _rationals(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(x.strip()) for x in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"expected comma-separated rationals, got {text!r}") from None


def _numeric_point(values: tuple[Fraction, ...], names: Sequence[str]) -> SatakeNumeric:
    if len(values) != len(names) + 1:
        raise UsageError(f"--numeric needs q,{','.join(names)} ({len(names) + 1} values)")
    if any(x == 0 for x in values[1:]):
        raise UsageError("parameters must be nonzero")
    try:
        return SatakeNumeric(values[0], dict(zip(names, values[1:])))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _point_inputs(pt: SatakeNumeric) -> dict:
    return {"q": str(pt.q), **{k: str(x) for k, x in pt.values.items()}}


def _check(name: str, passed: bool, **witness) -> dict:
    return {"name": name, "pass": bool(passed), "witness": witness}


def _rational_json(f: RationalFn) -> dict:
    return {"num": f.num.to_dict(), "den": f.den.to_dict()}


def _scaled_fields(s: Scaled, pt: SatakeNumeric | None) -> tuple[object, object, dict]:
    if pt is not None:
        total = s.eval(pt.as_point())
        return str(s.poly.eval(pt.as_point())), str(s.scalar.eval(pt.as_point())), {"total": str(total)}
    s = s.simplified()
    extra = {}
    if s.scalar != 1:
        extra["rational"] = _rational_json(s.value)
    return s.poly.to_dict(), str(s.scalar), extra


# -- commands ----------------------------------------------------------------------

def cmd_waldspurger(cfg: RunConfig) -> list[Report]:
    pt = _numeric_point(cfg.numeric, ("g1", "g2", "t")) if cfg.numeric else None
    oracle = cfg.options.get("oracle", False)
    if oracle and pt is None:
        raise UsageError("--oracle needs --numeric q,g1,g2,t")
    if oracle and not wa_region(pt):
        raise UsageError("point is outside the convergence region |g1/t|, |t/g2| < q^(1/2)")
    reports = []
    for k in cfg.options["ks"]:
        if k < 0:
            raise UsageError("k must be nonnegative")
        s = wa_value(k)
        value, scalar, extra = _scaled_fields(s, pt)
        inputs = {"k": k, **(_point_inputs(pt) if pt else {})}
        rep = Report("waldspurger", inputs, value, scalar, extra=extra)
        if oracle:
            formula = s.eval(pt.as_point())
            integral = oracle_wa_integral(k, pt) * wa_normalizer().eval(pt.as_point())
            rep.extra["oracle"] = str(integral)
            rep.extra["formula"] = str(formula)
            rep.checks.append(_check("oracle == formula", integral == formula,
                                     oracle=str(integral), formula=str(formula)))
        reports.append(rep)
    return reports


def _bessel_names(n: int, case: str) -> tuple[str, ...]:
    return alpha_names(n) + (("b",) if case == SPLIT else ())


def _bessel_checks(k: tuple[int, ...], case: str, which: str) -> list[dict]:
    n = len(k)
    s = h_value(k, case)
    if which == "invariance":
        return [_check("Omega-invariance", is_invariant(n, s.poly), k=list(k))]
    if which == "recursion":
        if case != SPLIT:
            raise UsageError("--check recursion applies to --case split")
        if k[0] == 0:
            raise UsageError("--check recursion needs k1 > 0")
        return [_check("H/B recursion", recursion_check(k), k=list(k))]
    if which == "rank1":
        if n != 1:
            raise UsageError("--check rank1 needs --n 1")
        t = table_for(1, case)
        if case == SPLIT:
            wa = wa_value(k[0]).value
            d = rank1_dictionary(t)
            other = substitute(wa.num, d, t) / substitute(wa.den, d, t)
            return [_check("h_split == wa_value under (a1, 1/a1, b)", s.value == other, k=list(k))]
        other = macdonald_rank1(k[0], table=t).value
        return [_check("h_nonsplit == macdonald_rank1", s.value == other, k=list(k))]
    raise UsageError(f"unknown check {which!r}")


def cmd_bessel(cfg: RunConfig) -> list[Report]:
    n = cfg.n
    if n is None or n < 1:
        raise UsageError("--n must be a positive integer")
    if cfg.k is not None:
        if len(cfg.k) != n:
            raise UsageError(f"--k needs {n} entries")
        ks = [cfg.k]
    elif cfg.options.get("max_total") is not None:
        ks = list(indices(n, cfg.options["max_total"]))
    else:
        raise UsageError("give --k or --max-total")
    for k in ks:
        if any(x < 0 for x in k):
            raise UsageError("index entries must be nonnegative")
    names = _bessel_names(n, cfg.case)
    pt = _numeric_point(cfg.numeric, names) if cfg.numeric else None
    reports = []
    for k in ks:
        s = h_value(BesselIndex(k), cfg.case)
        value, scalar, extra = _scaled_fields(s, pt)
        inputs = {"n": n, "k": list(k), "case": cfg.case, **(_point_inputs(pt) if pt else {})}
        rep = Report("bessel", inputs, value, scalar, extra=extra)
        if pt is not None:
            region = split_region(pt, n) if cfg.case == SPLIT else nonsplit_region(pt, n)
            rep.extra["in_convergence_region"] = region
        for which in cfg.options.get("checks") or ():
            rep.checks.extend(_bessel_checks(k, cfg.case, which))
        reports.append(rep)
    return reports


def cmd_gsp4(cfg: RunConfig) -> list[Report]:
    if cfg.options.get("find_dictionary"):
        found = find_dictionary(cfg.case, seed=cfg.seed)
        checks = []
        for i, cand in enumerate(found):
            agrees = pull_back(cand, h_gsp4(1, 1, cfg.case), cfg.case) == h_value(
                cand.so5_index(1, 1), cfg.case).value
            checks.append(_check(f"candidate {i}: symbolic agreement at (k, l) = (1, 1)", agrees, **cand.describe()))
        rep = Report("gsp4.find_dictionary", {"case": cfg.case, "seed": cfg.seed},
                     [c.describe() for c in found], "1", checks)
        if not found:
            rep.checks.append(_check("some dictionary matches", False))
        return [rep]
    k, l = cfg.options.get("k"), cfg.options.get("l")
    if k is None or l is None:
        raise UsageError("give --k and --l, or --find-dictionary")
    if k < 0 or l < 0:
        raise UsageError("k and l must be nonnegative")
    names = ("a1", "a2", "a3") + (("b1",) if cfg.case == SPLIT else ())
    pt = _numeric_point(cfg.numeric, names) if cfg.numeric else None
    s = h_gsp4(k, l, cfg.case)
    value, scalar, extra = _scaled_fields(s, pt)
    inputs = {"k": k, "l": l, "case": cfg.case, **(_point_inputs(pt) if pt else {})}
    rep = Report("gsp4", inputs, value, scalar, extra=extra)
    if "invariance" in (cfg.options.get("checks") or ()):
        rep.checks.append(_check("Omega4-invariance", is_invariant4(s.poly), k=k, l=l))
    return [rep]


def cmd_euler(cfg: RunConfig) -> list[Report]:
    n, eta = cfg.n, cfg.options.get("eta")
    if n is None or n < 1:
        raise UsageError("--n must be a positive integer")
    inp = EulerInput(n, eta)
    f = local_euler_factor(inp)
    rep = Report("euler", {"n": n, "eta": eta}, _rational_json(f), "1", extra={"pretty": str(f)})
    if cfg.options.get("verify"):
        rep.checks.append(_check("local factor == prefactor * H(1)", verify_local_identity(inp), n=n, eta=eta))
        rep.checks.append(_check("local factor / prefactor == H(1)", ratio_check(inp), n=n, eta=eta))
        rep.checks.append(_check("H(1) == 1/normalizing factor", norm_factor_check(inp), n=n, eta=eta))
    return [rep]


def cmd_weyl(cfg: RunConfig) -> list[Report]:
    n = cfg.options.get("check_identity")
    if n is not None:
        if n < 1:
            raise UsageError("rank must be at least 1")
        alt, prod = weyl_denominator_forms(n)
        rep = Report("weyl.check_identity", {"n": n},
                     {"alternator": alt.to_dict(), "product": prod.to_dict()}, "1",
                     [_check("alternator form == product form", alt == prod, n=n)],
                     extra={"pretty": {"alternator": str(alt), "product": str(prod)}})
        return [rep]
    n = cfg.options.get("enumerate")
    if n is None:
        raise UsageError("give --check-identity N or --enumerate N")
    if n < 1:
        raise UsageError("rank must be at least 1")
    elems = [{"element": str(w), "length": w.length, "sign": w.sign} for w in enumerate_omega(n)]
    return [Report("weyl.enumerate", {"n": n}, elems, "1")]


def cmd_verify(cfg: RunConfig) -> list[Report]:
    suite = cfg.options["suite"]
    if suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    vcfg = VerifyConfig(max_n=cfg.n or 3, seed=cfg.seed)
    checks = []
    for number, results in run_suite(suite, vcfg):
        for r in results:
            d = r.to_dict()
            d["name"] = f"[{number}] {d['name']}"
            checks.append(d)
    rep = Report("verify", {"suite": suite, "max_n": vcfg.max_n, "seed": vcfg.seed},
                 None, "1", checks)
    return [rep]


COMMANDS = {
    "waldspurger": cmd_waldspurger,
    "bessel": cmd_bessel,
    "gsp4": cmd_gsp4,
    "euler": cmd_euler,
    "weyl": cmd_weyl,
    "verify": cmd_verify,
}


# -- output ----------------------------------------------------------------------

def _short(x) -> str:
    if isinstance(x, dict) and "terms" in x:
        return str(LaurentPoly.from_dict(x))
    if isinstance(x, dict) and set(x) == {"num", "den"}:
        num, den = LaurentPoly.from_dict(x["num"]), LaurentPoly.from_dict(x["den"])
        return f"({num})/({den})"
    if isinstance(x, (dict, list)):
        return json.dumps(x, sort_keys=False)
    return "" if x is None else str(x)


def render(reports: list[Report], fmt: str) -> str:
    if fmt == "json":
        body = [r.to_dict() for r in reports]
        return json.dumps(body[0] if len(body) == 1 else body, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["op", "inputs", "value", "scalar", "checks_passed"])
        for r in reports:
            w.writerow([r.op, json.dumps(r.inputs), _short(r.value), _short(r.scalar),
                        all(c["pass"] for c in r.checks)])
        return buf.getvalue().rstrip("\n")
    lines = []
    for r in reports:
        lines.append(f"{r.op} {json.dumps(r.inputs)}")
        if "pretty" in r.extra and isinstance(r.extra["pretty"], dict):
            for key, val in r.extra["pretty"].items():
                lines.append(f"  {key}: {val}")
        elif "pretty" in r.extra:
            lines.append(f"  value: {r.extra['pretty']}")
        elif r.value is not None:
            scalar, body = _short(r.scalar), _short(r.value)
            if scalar != "1":
                body = f"{scalar} * ({body})"
            lines.append(f"  value: {body}")
        for key in ("oracle", "formula", "total"):
            if key in r.extra:
                lines.append(f"  {key}: {r.extra[key]}")
        for c in r.checks:
            lines.append(f"  [{'PASS' if c['pass'] else 'FAIL'}] {c['name']}")
    return "\n".join(lines)


def failure_report(reports: list[Report]) -> dict:
    failed = [c for r in reports for c in r.checks if not c["pass"]]
    return {"status": "fail", "failed": failed}


# -- argument parsing ------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="besselmodels", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="json")
    common.add_argument("--seed", type=int, default=7)
    sub = p.add_subparsers(dest="command", required=True)

    w = sub.add_parser("waldspurger", parents=[common], help="GL(2) split Waldspurger values")
    w.add_argument("--k", required=True, help="index k, or a range lo:hi")
    w.add_argument("--numeric", help="q,g1,g2,t")
    w.add_argument("--oracle", action="store_true", help="compare with the shell-by-shell integral")

    b = sub.add_parser("bessel", parents=[common], help="SO(2n+1) spherical Bessel values")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--k", help="k1,...,kn")
    b.add_argument("--max-total", type=int, help="tabulate every k with k1+...+kn <= T")
    b.add_argument("--case", choices=(SPLIT, NONSPLIT), default=NONSPLIT)
    b.add_argument("--numeric", help="q,a1,...,an[,b]")
    b.add_argument("--check", action="append", choices=("recursion", "invariance", "rank1"))

    g = sub.add_parser("gsp4", parents=[common], help="GSp(4) Bessel values")
    g.add_argument("--k", type=int)
    g.add_argument("--l", type=int)
    g.add_argument("--case", choices=(SPLIT, NONSPLIT), default=NONSPLIT)
    g.add_argument("--numeric", help="q,a1,a2,a3[,b1]")
    g.add_argument("--check", action="append", choices=("invariance",))
    g.add_argument("--find-dictionary", action="store_true",
                   help="search monomial SO(5) <-> GSp(4) parameter dictionaries")

    e = sub.add_parser("euler", parents=[common], help="local Euler factor identity")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--eta", type=int, choices=(1, -1), required=True)
    e.add_argument("--verify", action="store_true")

    y = sub.add_parser("weyl", parents=[common], help="type C_n Weyl group utilities")
    y.add_argument("--check-identity", type=int, metavar="N")
    y.add_argument("--enumerate", type=int, metavar="N")

    v = sub.add_parser("verify", parents=[common], help="run the verification suites")
    v.add_argument("--suite", default="all", choices=tuple(SUITES))
    v.add_argument("--max-n", type=int, default=3)
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(ns.command, fmt=ns.format, seed=ns.seed)
    if ns.command == "waldspurger":
        cfg.options = {"ks": _int_range(ns.k), "oracle": ns.oracle}
    elif ns.command == "bessel":
        cfg.n = ns.n
        cfg.case = ns.case
        cfg.k = _int_list(ns.k) if ns.k else None
        cfg.options = {"max_total": ns.max_total, "checks": ns.check}
    elif ns.command == "gsp4":
        cfg.case = ns.case
        cfg.options = {"k": ns.k, "l": ns.l, "checks": ns.check, "find_dictionary": ns.find_dictionary}
    elif ns.command == "euler":
        cfg.n = ns.n
        cfg.options = {"eta": ns.eta, "verify": ns.verify}
    elif ns.command == "weyl":
        cfg.options = {"check_identity": ns.check_identity, "enumerate": ns.enumerate}
    elif ns.command == "verify":
        cfg.n = ns.max_n
        cfg.options = {"suite": ns.suite}
    if getattr(ns, "numeric", None):
        cfg.numeric = _rationals(ns.numeric)
    return cfg


def run(cfg: RunConfig) -> tuple[int, str]:
    reports = COMMANDS[cfg.command](cfg)
    out = render(reports, cfg.fmt)
    if any(r.failed for r in reports):
        return 1, out + "\n" + json.dumps(failure_report(reports), indent=2)
    return 0, out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        status, out = run(config_from_args(ns))
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    print(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
