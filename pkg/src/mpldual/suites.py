"""Run configuration and the named verification suites.

A suite expands into a list of independent tasks ``(name, kwargs)``; tasks run
in a bounded process pool and their reports come back in task order.
"""
from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from itertools import product
from typing import Any, Callable, Iterator, Sequence

from . import exact_series, finite_mpl, numeric, symmetric
from .exact_series import symbols
from .finite_mpl import primes_between
from .indices import VarIndex, indices_up_to, parse_index
from .report import FAIL, INCONCLUSIVE, PASS, UNSUPPORTED, VerificationReport
from .values import format_value, parse_value
from .words import mzv_word

DIGITS_ENV = "MPLDUAL_DIGITS"

SUITES = ("ss", "star-expansion", "genfun", "finite-duality", "fmzv-duality", "mzv-duality",
          "mpl-duality", "smzv-duality", "main", "crosschecks")


class ConfigError(ValueError):
    pass


SUITE_DIGITS = {"smzv-duality": 60, "main": 60}


def env_digits() -> int | None:
    raw = os.environ.get(DIGITS_ENV)
    return int(raw) if raw else None


@dataclass
class RunConfig:
    """Parameters shared by every suite; ``None`` means the suite's own default."""

    digits: int | None = field(default_factory=env_digits)
    p_min: int = 11
    p_max: int = 101
    mod_exp: int = 2
    max_weight: int | None = None
    max_depth: int | None = None
    max_n: int | None = None
    t_order: int = 3
    height: int = 10 ** 6
    workers: int = 1
    output: str | None = None
    order: int = 15
    symbolic: bool = False
    index: str | None = None
    args: str | None = None
    indices: str | None = None
    alpha: int = 0
    instance_file: str | None = None
    backend: str | None = None
    seed: int = 0

    def validate(self) -> "RunConfig":
        if self.p_min < 3:
            raise ConfigError("p_min must be at least 3 (p = 2 is excluded)")
        if self.p_max < self.p_min:
            raise ConfigError("p_max must be at least p_min")
        if self.digits is not None and self.digits < 20:
            raise ConfigError("digits must be at least 20")
        for name in ("mod_exp", "t_order", "height", "workers", "order"):
            if getattr(self, name) < 1:
                raise ConfigError(f"{name} must be positive")
        for name in ("max_weight", "max_depth", "max_n"):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise ConfigError(f"{name} must be positive")
        return self

    @classmethod
    def from_mapping(cls, data: dict[str, Any]) -> "RunConfig":
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError(f"unknown config keys: {', '.join(unknown)}")
        return cls(**data)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def digits_for(self, suite: str) -> int:
        return self.digits if self.digits is not None else SUITE_DIGITS.get(suite, 40)


def load_config(path: str) -> dict[str, Any]:
    """Read a JSON (or, with PyYAML installed, YAML) mapping of RunConfig fields."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith((".yaml", ".yml")):
        try:
            import yaml
        except ImportError as exc:  # pragma: no cover - depends on the environment
            raise ConfigError("YAML configs need PyYAML; use JSON instead") from exc
        data = yaml.safe_load(text)
    else:
        data = json.loads(text)
    if not isinstance(data, dict):
        raise ConfigError("config must be a mapping")
    return data


# -- tasks -------------------------------------------------------------------

def _varindex(index: Sequence[int], args: Sequence[str]) -> VarIndex:
    return VarIndex.of([parse_value(a) for a in args], index)


def _task_ss(k, N):
    return exact_series.check_ss_identity(k, N)


def _task_star(k, N):
    return exact_series.check_star_nonstar(N, VarIndex.of(symbols(len(k)), k))


def _task_genfun(index, args, order):
    return exact_series.check_generating_function(_varindex(index, args), order)


def _task_finite(p, M, ks, zs, backend):
    return finite_mpl.check_fmpl_duality(p, M, ks, [parse_value(z) for z in zs], backend=backend)


def _task_fmzv(p, M, k, backend):
    return finite_mpl.check_fmzv_duality(p, M, k, backend=backend)


def _task_mzv(k, digits):
    return numeric.check_mzv_duality(k, digits)


def _task_mpl(instance, digits):
    return numeric.check_mpl_duality(numeric.MplDualityInstance.from_dict(instance), digits)


def _task_smzv(k, M, digits, height):
    return symmetric.check_smzv_duality(k, M, digits, height)


def _task_main(alpha, ks, zs, M, digits, height):
    return symmetric.check_main_theorem(alpha, ks, [parse_value(z) for z in zs], M, digits, height)


def _task_methods(w, digits):
    return numeric.check_methods([parse_value(a) for a in w], digits)


def _task_interior(index, args, digits):
    return numeric.check_interior(_varindex(index, args), digits)


def _task_shuffle(w1, w2, digits):
    return numeric.check_shuffle_product([parse_value(a) for a in w1], [parse_value(a) for a in w2], digits)


TASKS: dict[str, Callable[..., VerificationReport]] = {
    "ss": _task_ss, "star": _task_star, "genfun": _task_genfun, "finite": _task_finite,
    "fmzv": _task_fmzv, "mzv": _task_mzv, "mpl": _task_mpl, "smzv": _task_smzv, "main": _task_main,
    "methods": _task_methods, "interior": _task_interior, "shuffle": _task_shuffle,
}

Task = tuple[str, dict[str, Any]]


def run_task(task: Task) -> VerificationReport:
    """Run one task; errors become reports instead of aborting the sweep."""
    name, kwargs = task
    start = time.perf_counter()
    try:
        return TASKS[name](**kwargs)
    except (numeric.NotConvergentError, symmetric.UnsupportedDomainError, numeric.HypothesisError) as exc:
        status = UNSUPPORTED
        witness = f"{type(exc).__name__}: {exc}"
    except (numeric.PrecisionUnreachableError, numeric.StepUnderflowError) as exc:
        status = INCONCLUSIVE
        witness = f"{type(exc).__name__}: {exc}"
    except Exception as exc:  # noqa: BLE001 - any other error is a failed check with its message as witness
        status = FAIL
        witness = f"{type(exc).__name__}: {exc}"
    report = VerificationReport(name, _plain(kwargs), status, witness=witness)
    report.wall_time = time.perf_counter() - start
    return report


def _plain(x: Any) -> Any:
    if isinstance(x, dict):
        return {k: _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    return x if isinstance(x, (int, str, bool, type(None))) else str(x)


# -- suite expansion ---------------------------------------------------------

GENFUN_SAMPLES: list[tuple[tuple[int, ...], tuple[str, ...]]] = [
    ((2,), ("1",)), ((1, 1), ("1/2", "1/3")), ((1,), ("z1",)), ((1, 2), ("z1", "z2")),
    ((3,), ("-1",)), ((2, 1), ("1/2", "-1")), ((1, 1, 1), ("z1", "z2", "z3")),
    ((1, 2), ("2", "1/3")), ((2, 2), ("z1", "1")), ((1, 1, 2), ("1", "-1/2", "3")),
]


def _parse_groups(text: str) -> list[tuple[int, ...]]:
    """``"(1);(2,1)"`` or ``"1;2,1"`` to a list of indices."""
    return [parse_index(part.strip().strip("()")) for part in text.split(";")]


def _parse_args(text: str) -> list[str]:
    sep = ";" if ";" in text else ","
    return [a.strip() for a in text.split(sep)]


def finite_groups(max_weight: int, max_d: int) -> list[tuple[tuple[int, ...], ...]]:
    """Tuples of nonempty indices ``(k_1, ..., k_d)`` with ``d <= max_d`` and total weight ``<= max_weight``."""
    out = []
    base = indices_up_to(max_weight)
    for d in range(1, max_d + 1):
        for ks in product(base, repeat=d):
            if sum(sum(k) for k in ks) <= max_weight:
                out.append(ks)
    return out


def expand(suite: str, cfg: RunConfig) -> list[Task]:
    if suite not in SUITES:
        raise ConfigError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    return list(_expand(suite, cfg))


def _expand(suite: str, cfg: RunConfig) -> Iterator[Task]:
    digits = cfg.digits_for(suite)
    if suite == "ss":
        W, D, N = cfg.max_weight or 6, cfg.max_depth or 3, cfg.max_n or 12
        for k in indices_up_to(W, D):
            for n in range(1, N + 1):
                yield "ss", {"k": k, "N": n}
    elif suite == "star-expansion":
        W, N = cfg.max_weight or 5, cfg.max_n or 20
        for k in indices_up_to(W, cfg.max_depth):
            for n in range(1, N + 1):
                yield "star", {"k": k, "N": n}
    elif suite == "genfun":
        if cfg.index:
            samples = [(parse_index(cfg.index), tuple(_parse_args(cfg.args or "")))]
        else:
            samples = GENFUN_SAMPLES
        for index, args in samples:
            yield "genfun", {"index": index, "args": args, "order": cfg.order}
    elif suite == "finite-duality":
        primes = primes_between(cfg.p_min, cfg.p_max)
        if cfg.indices:
            ks = _parse_groups(cfg.indices)
            zs = _parse_args(cfg.args) if cfg.args else [f"z{i + 1}" for i in range(len(ks))]
            groups = [(tuple(ks), tuple(zs))]
        elif cfg.symbolic:
            groups = [(ks, tuple(f"z{i + 1}" for i in range(len(ks))))
                      for ks in finite_groups(cfg.max_weight or 3, cfg.max_depth or 2)]
        else:
            groups = [(ks, zs) for ks in finite_groups(cfg.max_weight or 4, 1) for zs in
                      (("0",), ("1",), ("2",), ("-1",), ("1/2",))]
        for ks, zs in groups:
            for p in primes:
                yield "finite", {"p": p, "M": cfg.mod_exp, "ks": ks, "zs": zs, "backend": cfg.backend}
    elif suite == "fmzv-duality":
        ks = [parse_index(cfg.index)] if cfg.index else indices_up_to(cfg.max_weight or 4, cfg.max_depth)
        for k in ks:
            for p in primes_between(cfg.p_min, cfg.p_max):
                yield "fmzv", {"p": p, "M": cfg.mod_exp, "k": k, "backend": cfg.backend}
    elif suite == "mzv-duality":
        ks = [parse_index(cfg.index)] if cfg.index else numeric.mzv_duality_indices(cfg.max_weight or 8)
        for k in ks:
            yield "mzv", {"k": k, "digits": digits}
    elif suite == "mpl-duality":
        insts = (numeric.load_instances(cfg.instance_file) if cfg.instance_file
                 else numeric.default_instances())
        for inst in insts:
            yield "mpl", {"instance": inst.to_dict(), "digits": digits}
    elif suite == "smzv-duality":
        ks = [parse_index(cfg.index)] if cfg.index else indices_up_to(cfg.max_weight or 5, cfg.max_depth)
        for k in ks:
            yield "smzv", {"k": k, "M": cfg.t_order, "digits": digits, "height": cfg.height}
    elif suite == "main":
        if cfg.indices:
            ks = _parse_groups(cfg.indices)
            zs = _parse_args(cfg.args) if cfg.args else ["1"] * len(ks)
            cases = [(tuple(ks), tuple(zs))]
        else:
            cases = [(ks, zs) for ks in finite_groups(cfg.max_weight or 3, cfg.max_depth or 2)
                     for zs in product(("0", "1"), repeat=len(ks))]
        for ks, zs in cases:
            yield "main", {"alpha": cfg.alpha, "ks": ks, "zs": zs, "M": cfg.t_order,
                           "digits": digits, "height": cfg.height}
    elif suite == "crosschecks":
        for k in numeric.mzv_duality_indices(cfg.max_weight or 6):
            yield "methods", {"w": [format_value(a) for a in mzv_word(k)], "digits": digits}
        for v in numeric.interior_points():
            yield "interior", {"index": v.index, "args": [format_value(z) for z in v.args], "digits": digits}
        for w1, w2 in numeric.random_convergent_words(20, cfg.seed):
            yield "shuffle", {"w1": [format_value(a) for a in w1], "w2": [format_value(a) for a in w2], "digits": digits}


def run_tasks(tasks: Sequence[Task], workers: int = 1) -> Iterator[VerificationReport]:
    """Reports in task order; ``workers > 1`` fans out to a process pool."""
    if workers <= 1 or len(tasks) <= 1:
        for t in tasks:
            yield run_task(t)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(run_task, tasks, chunksize=max(1, len(tasks) // (8 * workers)))


def run_suite(cfg: RunConfig, suite: str) -> Iterator[VerificationReport]:
    cfg.validate()
    yield from run_tasks(expand(suite, cfg), cfg.workers)


def summarize(reports: Sequence[VerificationReport]) -> dict[str, int]:
    counts = {s: 0 for s in (PASS, FAIL, INCONCLUSIVE, UNSUPPORTED)}
    for r in reports:
        counts[r.status] += 1
    return counts
