"""Backend selection for the modular nested-sum kernel.

The compiled extension is used when it imports and the modulus fits its
int64 arithmetic; set ``MPLDUAL_PURE_PYTHON=1`` to force the interpreted twin.
"""
from __future__ import annotations

import os
from types import ModuleType

from . import _kernels_py

try:
    from . import _kernels as _compiled  # type: ignore[attr-defined]
except ImportError:  # extension not built
    _compiled = None

COMPILED_LIMIT = 2 ** 31

if _compiled is not None and os.environ.get("MPLDUAL_PURE_PYTHON", "") not in ("1", "true", "yes"):
    BACKEND = "cython"
else:
    BACKEND = "python"


def available_backends() -> list[str]:
    return ["python"] + (["cython"] if _compiled is not None else [])


def backend_module(name: str | None = None) -> ModuleType:
    name = name or BACKEND
    if name == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernel is not built; run `pip install -e . --no-build-isolation`")
        return _compiled
    if name == "python":
        return _kernels_py
    raise ValueError(f"unknown backend {name!r}")


def nested_sum_mod(ks, consts, variables, coefs, nvars, N, modulus, star, backend=None):
    name = backend or BACKEND
    if name == "cython" and modulus >= COMPILED_LIMIT:
        name = "python"
    return backend_module(name).nested_sum_mod(
        list(ks), list(consts), list(variables), list(coefs), nvars, N, modulus, bool(star))
