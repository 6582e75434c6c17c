"""Command-line front end.

    twistforge verify twist --algebra A2 --twist jordanian --t-order 3
    twistforge verify identity --name heine --t-order 6
    twistforge verify suite
    twistforge expand --algebra A2 "qexp(q^2; t/(1-q^2); e1)"
    twistforge specialize --algebra A2 "(k1 - 1)/(q - 1)"

Exit codes: 0 pass, 1 verification failure, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from dataclasses import asdict, dataclass

from .expr import EvalError, ExprSyntaxError, UnknownGenerator, evaluate, parse_scalar
from .hopf import NotInvertible
from .ncalg import BudgetExceeded
from .qgroups.integral import NotRegular

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

SUPPORTED_RANKS = {"A": (1, 2, 3), "B": (2,), "C": (2,), "D": (4,)}
EXTRA_ALGEBRAS = {"sl3'": "U'q(sl3)", "H1'": "H1'", "Dq": "D_q", "D1": "D_1"}

# twist name -> (default algebra, allowed algebras or None for the A-D family, default order)
TWISTS = {
    "jordanian": ("A2", None, 4),
    "identity": ("A1", "any", 4),
    "cg-hat": ("sl3'", ("sl3'",), 3),
    "cg": ("sl3'", ("sl3'",), 3),
    "jordanian-l1": ("sl3'", ("sl3'",), 3),
    "fq": ("sl3'", ("sl3'",), 3),
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunConfig:
    command: str
    algebra: str | None = None
    twist: str | None = None
    t_order: int | None = None
    identity: str | None = None
    expr: str | None = None
    out: str | None = None
    seed: int = 0
    zeta: str = "1"
    criteria: list | None = None
    timing: bool = False

    def validate(self):
        if self.t_order is not None and not 1 <= self.t_order <= 6:
            raise UsageError(f"--t-order must be between 1 and 6, got {self.t_order}")
        if self.algebra is not None:
            parse_algebra(self.algebra)
        if self.twist is not None and self.twist not in TWISTS:
            raise UsageError(f"unknown twist {self.twist!r}; known: {', '.join(sorted(TWISTS))}")
        bad = [c for c in self.criteria or () if not 1 <= c <= 12]
        if bad:
            raise UsageError(f"criteria are numbered 1..12, got {bad}")
        try:
            parse_scalar(self.zeta)
        except (ExprSyntaxError, UnknownGenerator, EvalError) as exc:
            raise UsageError(f"--zeta: {exc}") from None


def parse_algebra(label: str):
    """"A2" -> ("A", 2); the extra labels map to themselves."""
    if label in EXTRA_ALGEBRAS:
        return label, None
    m = re.fullmatch(r"([A-Da-d])(\d+)", label)
    if not m:
        raise UsageError(f"unknown algebra {label!r}; use A1-A3, B2, C2, D4, " + ", ".join(EXTRA_ALGEBRAS))
    typ, rank = m.group(1).upper(), int(m.group(2))
    if rank not in SUPPORTED_RANKS[typ]:
        raise UsageError(f"{typ}{rank} is outside the supported ranks (A1-A3, B2, C2, D4)")
    return typ, rank


def algebra_context(label: str):
    """(hopf presentation, classical target or None)."""
    typ, rank = parse_algebra(label)
    if rank is not None:
        from .qgroups import classical_algebra, quantum_group

        return quantum_group(typ, rank).hopf, classical_algebra(typ, rank)
    from .qgroups import classical_sl3_weights, uq_prime_sl3
    from .twists import cm

    if typ == "sl3'":
        return uq_prime_sl3().hopf, classical_sl3_weights()
    if typ == "Dq":
        return cm.dq_algebra(), cm.dq_to_d1_map()
    return {"H1'": cm.h1_prime(), "D1": cm.d1_algebra()}[typ], None


def render_report(report: dict) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def emit_report(report: dict, path: str | None) -> None:
    text = render_report(report)
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _series_json(S) -> list:
    return [{"t_degree": n, "terms": c.serialize()} for n, c in enumerate(S.coeffs) if c is not None]


# ---------------------------------------------------------------------------
# commands


def _verify_twist(cfg: RunConfig) -> dict:
    from .qgroups import classical_algebra, classical_sl3_weights
    from .twists import cg, jordanian
    from .twists.core import Twist, TwistedHopf, classical_recheck, cocycle_check, identity_twist, specialize_twist

    name = cfg.twist or "jordanian"
    default_alg, allowed, default_order = TWISTS[name]
    cfg.twist = name
    cfg.algebra = cfg.algebra or default_alg
    cfg.t_order = cfg.t_order or default_order
    typ, rank = parse_algebra(cfg.algebra)
    if allowed is None and rank is None:
        raise UsageError(f"twist {name!r} needs an algebra of type A-D, not {cfg.algebra}")
    if allowed not in (None, "any") and cfg.algebra not in allowed:
        raise UsageError(f"twist {name!r} lives in {', '.join(allowed)}, not {cfg.algebra}")
    zeta = parse_scalar(cfg.zeta)
    order = cfg.t_order
    regular = None
    recheck = None
    if name == "identity":
        hopf, _ = algebra_context(cfg.algebra)
        F = identity_twist(hopf, order)
    elif name == "jordanian":
        U = classical_algebra(typ, rank)
        try:
            F = jordanian.jordanian_twist(typ, rank, order, check=True)
            regular = True
        except NotRegular:
            F = jordanian.jordanian_twist(typ, rank, order, check=False)
            regular = False
        if regular:
            recheck = classical_recheck(specialize_twist(F, U), order)
    else:
        U = classical_sl3_weights()
        if name == "cg-hat":
            F = cg.cg_hat_twist(zeta, order)
        elif name == "cg":
            F = cg.cg_regular_twist(order, zeta, check=False)
        elif name == "jordanian-l1":
            F = cg.jordanian_l1_twist(order)
        else:
            F = cg.fq_twist(order)
        regular = not cg._check_regular(F)
        if regular:
            ctx = U.hopf
            if name == "fq":
                ctx = TwistedHopf(U.hopf, cg.specialize_sl3(cg.jordanian_l1_twist(order).series))
            recheck = classical_recheck(Twist(cg.specialize_sl3(F.series), ctx, F.name + "_bar"), order)
    rep = cocycle_check(F, order)
    ok = rep.passed and regular is not False and (recheck is None or recheck.passed)
    return {
        "pass": ok,
        "cocycle": rep.to_json(cfg.timing),
        "regular": regular,
        "classical_recheck": None if recheck is None else recheck.to_json(cfg.timing),
    }


def _verify_identity(cfg: RunConfig) -> dict:
    from .twists.identities import IDENTITY_NAMES, run_identity

    name = cfg.identity or "all"
    names = IDENTITY_NAMES if name == "all" else (name,)
    if any(n not in IDENTITY_NAMES for n in names):
        raise UsageError(f"unknown identity {name!r}; known: all, {', '.join(IDENTITY_NAMES)}")
    zeta = parse_scalar(cfg.zeta)
    results = []
    for n in names:
        results.extend(run_identity(n, cfg.t_order, zeta))
    return {"pass": all(r.passed for r in results), "results": [r.to_json() for r in results]}


def _verify_suite(cfg: RunConfig) -> dict:
    from .suite import run_suite, suite_report

    results = run_suite(cfg.criteria)
    for r in results:
        print(r.line(), file=sys.stderr)
    return suite_report(results)


def _expand(cfg: RunConfig, classical: bool) -> dict:
    if not cfg.expr:
        raise UsageError("an expression is required")
    cfg.algebra = cfg.algebra or "A2"
    cfg.t_order = cfg.t_order or 4
    hopf, target = algebra_context(cfg.algebra)
    value = evaluate(cfg.expr, hopf, cfg.t_order, target)
    out = {"pass": True, "algebra": hopf.name, "expansion": _series_json(value)}
    if classical:
        if target is None:
            raise UsageError(f"no classical limit is defined for {cfg.algebra}")
        from .qgroups.integral import specialize_element

        try:
            out["specialization"] = _series_json(specialize_element(value, target))
        except NotRegular as exc:
            out["pass"] = False
            out["error"] = str(exc)
    return out


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--algebra", help="A1-A3, B2, C2, D4, sl3', H1', Dq, D1")
    common.add_argument("--t-order", type=int, dest="t_order")
    common.add_argument("--out", help="write the JSON report here (default: stdout)")
    common.add_argument("--seed", type=int)
    common.add_argument("--zeta", help="rational function of q; zeta = c t for the CG twists")
    common.add_argument("--config", help="JSON file whose keys mirror the flags")
    common.add_argument("--timing", action="store_true", default=None, help="record wall-clock times")

    p = _Parser(prog="twistforge", description="Exact verification of Drinfeld twists.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    verify = sub.add_parser("verify", help="run a verification")
    vsub = verify.add_subparsers(dest="what", required=True, parser_class=_Parser)
    t = vsub.add_parser("twist", parents=[common])
    t.add_argument("--twist", help=", ".join(sorted(TWISTS)))
    i = vsub.add_parser("identity", parents=[common])
    i.add_argument("--identity", "--name", dest="identity", help="heine, heine2, dilog, five_term or all")
    s = vsub.add_parser("suite", parents=[common])
    s.add_argument("--criteria", type=int, nargs="*", help="subset of criteria 1..12")
    for name in ("expand", "specialize"):
        e = sub.add_parser(name, parents=[common])
        e.add_argument("expr", nargs="?")
        e.add_argument("--expr", dest="expr_flag")
    return p


def _config_from(ns) -> RunConfig:
    command = ns.command if ns.command != "verify" else f"verify {ns.what}"
    data = {}
    if getattr(ns, "config", None):
        try:
            with open(ns.config, encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {ns.config}: {exc}") from None
        if not isinstance(data, dict):
            raise UsageError("config file must hold a JSON object")
        data = {k.replace("-", "_"): v for k, v in data.items()}
        known = set(RunConfig.__dataclass_fields__) - {"command"}
        unknown = set(data) - known
        if unknown:
            raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
    flags = {k: v for k, v in vars(ns).items() if v is not None and k in RunConfig.__dataclass_fields__ and k != "command"}
    if getattr(ns, "expr_flag", None):
        flags["expr"] = ns.expr_flag
    merged = {**data, **flags}
    try:
        cfg = RunConfig(command=command, **merged)
    except TypeError as exc:
        raise UsageError(str(exc)) from None
    if cfg.t_order is not None and not isinstance(cfg.t_order, int):
        raise UsageError("t_order must be an integer")
    cfg.validate()
    return cfg


def run_command(argv) -> int:
    try:
        ns = build_parser().parse_args(argv)
        cfg = _config_from(ns)
    except UsageError as exc:
        print(f"twistforge: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    t0 = time.perf_counter()
    try:
        if cfg.command == "verify twist":
            body = _verify_twist(cfg)
        elif cfg.command == "verify identity":
            body = _verify_identity(cfg)
        elif cfg.command == "verify suite":
            body = _verify_suite(cfg)
        else:
            body = _expand(cfg, cfg.command == "specialize")
    except UsageError as exc:
        print(f"twistforge: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ExprSyntaxError, UnknownGenerator, EvalError) as exc:
        print(f"twistforge: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NotRegular, NotInvertible, BudgetExceeded) as exc:
        body = {"pass": False, "error": f"{type(exc).__name__}: {exc}"}
    report = {"config": {k: v for k, v in asdict(cfg).items() if k != "timing"}, **body}
    if cfg.timing:
        report["elapsed_ms"] = round((time.perf_counter() - t0) * 1000, 1)
    try:
        emit_report(report, cfg.out)
    except OSError as exc:
        print(f"twistforge: error: cannot write report: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK if report.get("pass") else EXIT_FAIL


def main(argv=None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
