"""Complex, finite and t-adic symmetric multiple polylogarithms with their duality checks."""
from __future__ import annotations

from .indices import VarIndex, dagger, star_expansion, vee
from .kernels import BACKEND
from .numeric import chen_ode, holder, li_series, li_sh, mzv, mzv_sh
from .relations import RelationCertificate, find_relation, zeta2_membership
from .report import VerificationReport
from .suites import RunConfig, run_suite

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "RelationCertificate", "RunConfig", "VarIndex", "VerificationReport", "chen_ode", "dagger",
    "find_relation", "holder", "li_series", "li_sh", "mzv", "mzv_sh", "run_suite", "star_expansion", "vee",
    "zeta2_membership",
]
