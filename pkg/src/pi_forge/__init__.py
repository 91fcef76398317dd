"""
pi-forge

High-precision evaluation and exact verification of a gamma-quotient
expansion, the family of 1/π series it generates, and the binomial
identity behind its terminating cases.

Features:
- Exact rational kernels and a precision-controlled gamma function
- Certified summation of the 1/π family and of normalized combinations
- Optimal-truncation diagnostics for the formal gamma-quotient expansion
- Heaviside's exponential series and a Bessel Wronskian cross-check
- Exact certificates for the binomial identity over parameter sweeps

Example:
    >>> from pi_forge import FamilyParams, eval_family, verify_iv2
    >>>
    >>> report = eval_family(FamilyParams(m=0, k=2), "1e-20")
    >>> print(report.to_record()["value"][:12])
    0.3183098861
    >>> verify_iv2(3, 4).holds
    True

For more information, see the README.md or run:
    $ pi-forge --help
"""

__version__ = "0.1.0"

from pi_forge.arith import NuParam, PrecisionContext
from pi_forge.config.settings import Settings, get_settings
from pi_forge.errors import PiForgeError
from pi_forge.family import CombinationSpec, FamilyParams, eval_combination, eval_family
from pi_forge.identities import sweep, verify_iv1, verify_iv2, verify_iv3
from pi_forge.models import EvaluationReport, IdentityReport, OutputRecord, SweepResult
from pi_forge.series import gamma_quotient_expansion, heaviside_exp, wronskian_check

__all__ = [
    "CombinationSpec",
    "EvaluationReport",
    "FamilyParams",
    "IdentityReport",
    "NuParam",
    "OutputRecord",
    "PiForgeError",
    "PrecisionContext",
    "Settings",
    "SweepResult",
    "__version__",
    "eval_combination",
    "eval_family",
    "gamma_quotient_expansion",
    "get_settings",
    "heaviside_exp",
    "sweep",
    "verify_iv1",
    "verify_iv2",
    "verify_iv3",
    "wronskian_check",
]
