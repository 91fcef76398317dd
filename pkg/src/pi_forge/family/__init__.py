"""
The two-parameter family of 1/π series and its normalized combinations.

Example:
    >>> from pi_forge.family import CombinationSpec, FamilyParams, eval_combination, eval_family
    >>>
    >>> report = eval_family(FamilyParams(m=1, k=3), "1e-20")
    >>> spec = CombinationSpec.parse("2:1+5i,4:-3")
    >>> combined = eval_combination(spec, "1e-20")
"""

from pi_forge.family.evaluate import eval_combination, eval_family
from pi_forge.family.summation import AveragedSum, averaged_sum, leibniz_violations
from pi_forge.family.terms import (
    CombinationSpec,
    FamilyParams,
    Weight,
    central_cube,
    combination_g,
    combination_term,
    f_k,
    family_prefactor,
    family_ratio,
    family_stream,
    family_term,
    leibniz_check,
    tail_completely_monotone,
)

__all__ = [
    "AveragedSum",
    "CombinationSpec",
    "FamilyParams",
    "Weight",
    "averaged_sum",
    "central_cube",
    "combination_g",
    "combination_term",
    "eval_combination",
    "eval_family",
    "f_k",
    "family_prefactor",
    "family_ratio",
    "family_stream",
    "family_term",
    "leibniz_check",
    "leibniz_violations",
    "tail_completely_monotone",
]
