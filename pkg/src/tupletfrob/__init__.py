"""Numerical semigroups of prime constellations.

A library for the coin problem on prime k-tuplets: a general
numerical-semigroup engine (Apéry sets, Frobenius number, genus,
pseudo-Frobenius numbers), a prime-constellation sieve, closed-form family
formulas for triplets through septuplets, and cross-validation tooling that
checks the formulas against independent brute force.
"""

from . import errors
from .core import (
    AperySet,
    GeneratorSet,
    NumericalSemigroup,
    SemigroupInvariants,
    make_semigroup,
)
from .families import (
    FAMILIES,
    FamilyDescriptor,
    QuadraticPoly,
    apery_closed_form,
    apery_grouped,
    apery_grouped_text,
    classify,
    classify_tuplet,
    family_registry,
    frobenius_from_p,
    invariants_closed_form,
    lemma_identities,
    type_from_family,
)
from .tuplets import (
    AdmissibilityReport,
    OffsetPattern,
    PrimeTuplet,
    find_tuplets,
    is_admissible,
    is_prime,
    smallest_diameter,
)
from .verification import (
    ConjectureFit,
    OracleResult,
    SweepEntry,
    SweepReport,
    fit_conjecture,
    oracle_frobenius,
    sweep_family,
)

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityReport",
    "AperySet",
    "ConjectureFit",
    "FAMILIES",
    "FamilyDescriptor",
    "GeneratorSet",
    "NumericalSemigroup",
    "OffsetPattern",
    "OracleResult",
    "PrimeTuplet",
    "QuadraticPoly",
    "SemigroupInvariants",
    "SweepEntry",
    "SweepReport",
    "apery_closed_form",
    "apery_grouped",
    "apery_grouped_text",
    "classify",
    "classify_tuplet",
    "errors",
    "family_registry",
    "find_tuplets",
    "fit_conjecture",
    "frobenius_from_p",
    "invariants_closed_form",
    "is_admissible",
    "is_prime",
    "lemma_identities",
    "make_semigroup",
    "oracle_frobenius",
    "smallest_diameter",
    "sweep_family",
    "type_from_family",
]
