"""Command-line entry point: ``verify`` suites, ``compute`` values, ``relation`` search."""
from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from typing import Any, Sequence

import mpmath

from . import exact_series, finite_mpl, numeric, relations, symmetric
from .indices import VarIndex, dagger, format_index, parse_index, vee
from .report import FAIL, INCONCLUSIVE, jsonable
from .suites import SUITES, ConfigError, RunConfig, load_config, run_suite, summarize
from .values import parse_value

log = logging.getLogger("mpldual")

# CLI flag -> RunConfig field, for flags shared by every verify suite
_CONFIG_FLAGS = ("digits", "mod_exp", "max_weight", "max_depth", "max_n", "t_order", "height", "workers",
                 "output", "order", "symbolic", "index", "args", "indices", "alpha", "instance_file", "backend",
                 "seed")


def parse_primes(text: str) -> tuple[int, int]:
    """``"11..101"`` or ``"11-101"`` or a single prime ``"13"``."""
    for sep in ("..", "-", ":"):
        if sep in text:
            lo, hi = text.split(sep, 1)
            return int(lo), int(hi)
    p = int(text)
    return p, p


def _parse_args_list(text: str) -> list[Any]:
    sep = ";" if ";" in text else ","
    return [parse_value(a.strip()) for a in text.split(sep) if a.strip()]


def _varindex(index: str, args: str | None) -> VarIndex:
    k = parse_index(index)
    zs = _parse_args_list(args) if args else [parse_value("1")] * len(k)
    return VarIndex.of(zs, k)


def build_config(ns: argparse.Namespace) -> RunConfig:
    """Defaults, then the config file, then explicit flags."""
    data: dict[str, Any] = load_config(ns.config) if ns.config else {}
    if "primes" in data:
        data["p_min"], data["p_max"] = parse_primes(str(data.pop("primes")))
    for name in _CONFIG_FLAGS:
        value = getattr(ns, name, None)
        if value is not None and value is not False:
            data[name] = value
    if getattr(ns, "primes", None):
        data["p_min"], data["p_max"] = parse_primes(ns.primes)
    return RunConfig.from_mapping(data).validate()


def cmd_verify(ns: argparse.Namespace) -> int:
    cfg = build_config(ns)
    sink = open(cfg.output, "w", encoding="utf-8") if cfg.output else None
    reports = []
    start = time.perf_counter()
    try:
        for report in run_suite(cfg, ns.suite):
            reports.append(report)
            line = report.human() if ns.human else report.to_json()
            print(line, flush=True)
            if sink:
                sink.write(report.to_json() + "\n")
    finally:
        if sink:
            sink.close()
    counts = summarize(reports)
    summary = {"suite": ns.suite, "checks": len(reports), "counts": counts,
               "wall_time": round(time.perf_counter() - start, 3)}
    print(json.dumps(summary, sort_keys=True), file=sys.stderr)
    if counts[INCONCLUSIVE]:
        log.warning("%d inconclusive checks (not counted as failures)", counts[INCONCLUSIVE])
    return 1 if counts[FAIL] else 0


def _digits(ns: argparse.Namespace, default: int = 30) -> int:
    if ns.digits is not None:
        return ns.digits
    from .suites import env_digits

    return env_digits() or default


def compute(kind: str, ns: argparse.Namespace) -> str:
    """The printed value for one ``compute`` kind."""
    if kind == "dual":
        return format_index(dagger(parse_index(ns.index)))
    if kind == "vee":
        return format_index(vee(parse_index(ns.index)))
    digits = _digits(ns)
    if kind == "mzv":
        return mpmath.nstr(numeric.mzv(parse_index(ns.index), digits), digits)
    if kind == "mzv-sh":
        return mpmath.nstr(numeric.mzv_sh(parse_index(ns.index), digits), digits)
    if kind == "li":
        v = _varindex(ns.index, ns.args)
        value = numeric.li_sh(v, digits) if ns.regularized else numeric.li_series(v, digits)
        return mpmath.nstr(value, digits)
    if kind == "li-truncated":
        v = _varindex(ns.index, ns.args)
        return str(exact_series.li_truncated(ns.n, v, star=ns.star))
    if kind == "fmpl":
        v = _varindex(ns.index, ns.args)
        if ns.curly:
            return str(finite_mpl.curly_L_A_truncated(ns.p, ns.mod_exp, v))
        return str(finite_mpl.li_truncated_mod(ns.p, ns.mod_exp, v, ns.star))
    if kind == "zeta-s":
        k = parse_index(ns.index)
        fn = symmetric.zeta_S_star if ns.star else symmetric.zeta_S_sh
        coeffs = fn(k, ns.t_order, digits).strings(digits)
        return " + ".join(f"({c})*t^{i}" if i else f"({c})" for i, c in enumerate(coeffs))
    raise ValueError(f"unknown kind {kind!r}")


def cmd_compute(ns: argparse.Namespace) -> int:
    print(compute(ns.kind, ns))
    return 0


def cmd_relation(ns: argparse.Namespace) -> int:
    """Search an integer relation among the values in a JSON list of decimal strings."""
    with open(ns.values_file, encoding="utf-8") as fh:
        raw = json.load(fh)
    if isinstance(raw, dict):
        raw = raw["values"]
    digits = _digits(ns, 60)
    with mpmath.workdps(numeric.working_dps(digits)):
        values = [mpmath.mpmathify(str(v)) for v in raw]
        rel = relations.find_relation(values, digits, ns.height)
        residual = None if rel is None else abs(mpmath.fsum(c * v for c, v in zip(rel, values)))
    out = {"status": relations.FOUND if rel else relations.NOT_FOUND,
           "relation": list(rel) if rel else None,
           "residual": None if residual is None else mpmath.nstr(residual, 5),
           "digits": digits, "height_bound": ns.height}
    print(json.dumps(jsonable(out), sort_keys=True))
    return 0


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--digits", type=int, help="decimal digits (default: $MPLDUAL_DIGITS or per command)")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="human", action="store_false", help="JSON lines output (default)")
    fmt.add_argument("--human", dest="human", action="store_true", help="human-readable output")
    p.set_defaults(human=False)
    p.add_argument("-v", "--verbose", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mpldual", description="Multiple polylogarithm dualities: "
                                     "compute values and verify identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=SUITES)
    _common(v)
    v.add_argument("--config", help="JSON or YAML file with RunConfig fields")
    v.add_argument("--primes", help="prime window, e.g. 11..101")
    v.add_argument("--mod-exp", type=int)
    v.add_argument("--max-weight", type=int)
    v.add_argument("--max-depth", type=int)
    v.add_argument("--max-n", type=int)
    v.add_argument("--t-order", type=int)
    v.add_argument("--height", type=int)
    v.add_argument("--workers", type=int)
    v.add_argument("--output", help="also write JSON lines to this file")
    v.add_argument("--order", type=int, help="X-order for genfun")
    v.add_argument("--symbolic", action="store_true", default=None, help="symbolic z for finite-duality")
    v.add_argument("--index", help='single index, e.g. "1,2"')
    v.add_argument("--indices", help='d indices, e.g. "(1);(2)"')
    v.add_argument("--args", help='arguments, e.g. "1/2,1/3" or "1;1"')
    v.add_argument("--alpha", type=int)
    v.add_argument("--instance-file")
    v.add_argument("--backend", choices=("python", "cython"))
    v.add_argument("--seed", type=int)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("compute", help="print one value")
    c.add_argument("kind", choices=("mzv", "mzv-sh", "li", "li-truncated", "fmpl", "zeta-s", "dual", "vee"))
    _common(c)
    c.add_argument("--index", required=True)
    c.add_argument("--args")
    c.add_argument("--n", type=int, default=10, help="truncation N for li-truncated")
    c.add_argument("--p", type=int, default=11, help="prime for fmpl")
    c.add_argument("--mod-exp", type=int, default=2)
    c.add_argument("--t-order", type=int, default=3)
    c.add_argument("--star", action="store_true")
    c.add_argument("--curly", action="store_true", help="fmpl: the combined finite polylog")
    c.add_argument("--regularized", action="store_true", help="li: shuffle-regularized value")
    c.set_defaults(func=cmd_compute)

    r = sub.add_parser("relation", help="integer relation among decimal values")
    _common(r)
    r.add_argument("--values-file", required=True, help="JSON list of decimal strings")
    r.add_argument("--height", type=int, default=10 ** 6)
    r.set_defaults(func=cmd_relation)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return ns.func(ns)
    except (ConfigError, relations.PrecisionError) as exc:
        parser.error(str(exc))
    except (ValueError, ArithmeticError, numeric.NotConvergentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
