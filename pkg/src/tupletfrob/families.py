"""Closed forms for the constellation semigroup families.

Twelve parametric families are registered, keyed by offset pattern and the
residue class of the first generator p.  The triplet and quadruplet families
(T1, T2, Q1, Q2) carry full Apéry index sets and polynomial invariants; the
quintuplet through septuplet families carry the quadratic Frobenius formula
in p and the tabulated type.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .core import AperySet, GeneratorSet, SemigroupInvariants
from .errors import KBelowMinimumError, ResidueMismatchError, UnsupportedPatternError
from .tuplets import OffsetPattern, PrimeTuplet

__all__ = [
    "FAMILIES",
    "FamilyDescriptor",
    "QuadraticPoly",
    "apery_closed_form",
    "apery_grouped",
    "apery_grouped_text",
    "classify",
    "classify_tuplet",
    "family_registry",
    "frobenius_from_p",
    "invariants_closed_form",
    "lemma_identities",
    "type_from_family",
]


@dataclass(frozen=True)
class QuadraticPoly:
    """F(p) = a2*p**2 + a1*p + a0 with exact rational coefficients."""

    a2: Fraction
    a1: Fraction
    a0: Fraction

    def __call__(self, p: int) -> Fraction:
        return self.a2 * p * p + self.a1 * p + self.a0

    def eval_int(self, p: int) -> int:
        """Evaluate and insist on an integer result."""
        value = self(p)
        if value.denominator != 1:
            raise ArithmeticError(f"{self} is not integral at p={p}")
        return int(value)

    def compose_linear(self, m: int, r: int) -> "QuadraticPoly":
        """Coefficients of this polynomial evaluated at p = m*k + r, in k."""
        return QuadraticPoly(
            self.a2 * m * m,
            2 * self.a2 * m * r + self.a1 * m,
            self.a2 * r * r + self.a1 * r + self.a0,
        )

    def as_json(self) -> dict:
        return {
            "a2": [self.a2.numerator, self.a2.denominator],
            "a1": [self.a1.numerator, self.a1.denominator],
            "a0": [self.a0.numerator, self.a0.denominator],
        }


def _eval_poly(coeffs: tuple[int, int, int], k: int) -> int:
    c2, c1, c0 = coeffs
    return c2 * k * k + c1 * k + c0


@dataclass(frozen=True)
class FamilyDescriptor:
    """One parametric family: residue class, formulas, and validity thresholds."""

    id: str
    pattern: OffsetPattern
    p_modulus: int
    p_residue: int
    k_min: int                      # validity of the Apéry index set / invariant polynomials
    f_from_p: QuadraticPoly
    f_k_min: int                    # validity of f_from_p
    type_value: int
    type_k_min: int                 # validity of type_value
    f_in_k: tuple[int, int, int] | None = None
    g_in_k: tuple[int, int, int] | None = None
    pf_in_k: tuple[tuple[int, int, int], ...] | None = None

    @property
    def has_apery_form(self) -> bool:
        return self.f_in_k is not None

    def p_of_k(self, k: int) -> int:
        return self.p_modulus * k + self.p_residue

    def generators(self, k: int) -> tuple[int, ...]:
        p = self.p_of_k(k)
        return tuple(p + b for b in self.pattern.offsets)


def _q(num: int, den: int = 1) -> Fraction:
    return Fraction(num, den)


FAMILIES: dict[str, FamilyDescriptor] = {d.id: d for d in (
    FamilyDescriptor(
        "T1", OffsetPattern((0, 2, 6)), 6, 5, 0,
        QuadraticPoly(_q(1, 3), _q(4, 3), _q(-2)), 0, 2, 0,
        f_in_k=(12, 28, 13), g_in_k=(6, 16, 8),
        pf_in_k=((12, 28, 9), (12, 28, 13))),
    FamilyDescriptor(
        "T2", OffsetPattern((0, 4, 6)), 6, 7, 0,
        QuadraticPoly(_q(1, 3), _q(5, 3), _q(2)), 0, 2, 0,
        f_in_k=(12, 38, 30), g_in_k=(6, 20, 16),
        pf_in_k=((12, 32, 15), (12, 38, 30))),
    FamilyDescriptor(
        "Q1", OffsetPattern((0, 2, 6, 8)), 4, 5, 1,
        QuadraticPoly(_q(1, 4), _q(3, 4), _q(-2)), 1, 5, 1,
        f_in_k=(4, 13, 8), g_in_k=(2, 8, 7),
        pf_in_k=((0, 4, 9), (4, 13, 2), (4, 13, 4), (4, 13, 6), (4, 13, 8))),
    FamilyDescriptor(
        "Q2", OffsetPattern((0, 2, 6, 8)), 4, 7, 0,
        QuadraticPoly(_q(1, 4), _q(5, 4), _q(-2)), 0, 3, 0,
        f_in_k=(4, 19, 19), g_in_k=(2, 10, 12),
        pf_in_k=((0, 4, 11), (4, 19, 17), (4, 19, 19))),
    FamilyDescriptor(
        "Quin1", OffsetPattern((0, 2, 6, 8, 12)), 30, 11, 0,
        QuadraticPoly(_q(1, 6), _q(7, 6), _q(-2)), 0, 6, 0),
    FamilyDescriptor(
        "Quin2", OffsetPattern((0, 4, 6, 10, 12)), 30, 7, 0,
        QuadraticPoly(_q(1, 6), _q(11, 6), _q(2)), 0, 4, 1),
    FamilyDescriptor(
        "Sex7", OffsetPattern((0, 4, 6, 10, 12, 16)), 120, 7, 0,
        QuadraticPoly(_q(1, 8), _q(9, 8), _q(2)), 0, 9, 1),
    FamilyDescriptor(
        "Sex37", OffsetPattern((0, 4, 6, 10, 12, 16)), 120, 37, 0,
        QuadraticPoly(_q(1, 8), _q(11, 8), _q(2)), 0, 7, 0),
    FamilyDescriptor(
        "Sex67", OffsetPattern((0, 4, 6, 10, 12, 16)), 120, 67, 0,
        QuadraticPoly(_q(1, 8), _q(13, 8), _q(2)), 0, 5, 0),
    FamilyDescriptor(
        "Sex97", OffsetPattern((0, 4, 6, 10, 12, 16)), 120, 97, 0,
        QuadraticPoly(_q(1, 8), _q(15, 8), _q(2)), 0, 5, 0),
    FamilyDescriptor(
        "Sep1", OffsetPattern((0, 2, 6, 8, 12, 18, 20)), 30, 11, 1,
        QuadraticPoly(_q(1, 10), _q(9, 10), _q(-2)), 1, 13, 1),
    FamilyDescriptor(
        "Sep2", OffsetPattern((0, 2, 8, 12, 14, 18, 20)), 30, 29, 0,
        QuadraticPoly(_q(1, 10), _q(11, 10), _q(-2)), 0, 11, 0),
)}


def _family(family_id: str) -> FamilyDescriptor:
    try:
        return FAMILIES[family_id]
    except KeyError:
        raise UnsupportedPatternError(f"unknown family {family_id!r}") from None


def _apery_family(family_id: str) -> FamilyDescriptor:
    d = _family(family_id)
    if not d.has_apery_form:
        raise UnsupportedPatternError(
            f"family {family_id} has no closed-form Apéry set (only F(p) and the type)")
    return d


def classify(p: int, pattern: OffsetPattern) -> tuple[str, int]:
    """Match (p, pattern) to a registered family and solve p = modulus*k + residue."""
    matching = [d for d in FAMILIES.values() if d.pattern == pattern]
    if not matching:
        raise UnsupportedPatternError(f"no registered family for pattern {pattern}")
    for d in matching:
        k, rem = divmod(p - d.p_residue, d.p_modulus)
        if rem == 0 and k >= 0:
            return d.id, k
    raise ResidueMismatchError(
        f"p={p} violates the residue condition of every family with pattern {pattern}")


def classify_tuplet(tuplet: PrimeTuplet) -> tuple[str, int]:
    """Classify a verified prime tuplet."""
    family_id, k = classify(tuplet.p, tuplet.pattern)
    if tuplet.pattern.size == 4 and tuplet.p > 3:
        # first members of genuine prime quadruplets avoid the classes divisible by 3
        assert tuplet.p % 12 in (5, 11)
    return family_id, k


# --- generator identities backing the index sets ---------------------------

def _identities_t1(k: int) -> list[tuple[int, int]]:
    n1, n2, n3 = 6 * k + 5, 6 * k + 7, 6 * k + 11
    return [
        (3 * n2, 2 * n1 + n3),
        ((2 * k + 2) * n3, (2 * k + 3) * n1 + n2),
        (2 * n2 + (2 * k + 1) * n3, (2 * k + 5) * n1),
    ]


def _identities_t2(k: int) -> list[tuple[int, int]]:
    n1, n2, n3 = 6 * k + 7, 6 * k + 11, 6 * k + 13
    return [
        (3 * n2, n1 + 2 * n3),
        ((2 * k + 3) * n3, (2 * k + 4) * n1 + n2),
        (2 * n2 + (2 * k + 1) * n3, (2 * k + 5) * n1),
    ]


def _identities_q1(k: int) -> list[tuple[int, int]]:
    n1, n2, n3, n4 = 4 * k + 5, 4 * k + 7, 4 * k + 11, 4 * k + 13
    return [
        (3 * n2, 2 * n1 + n3),
        (3 * n3, n2 + 2 * n4),
        ((k + 2) * n4, (k + 3) * n1 + n3),
        (n2 + n3, n1 + n4),
        (n2 + (k + 1) * n4, (k + 4) * n1),
        (2 * n2 + n4, n1 + 2 * n3),
        (n3 + (k + 1) * n4, (k + 2) * n1 + 2 * n2),
        (2 * n3 + k * n4, (k + 3) * n1 + n2),
    ]


def _identities_q2(k: int) -> list[tuple[int, int]]:
    n1, n2, n3, n4 = 4 * k + 7, 4 * k + 9, 4 * k + 13, 4 * k + 15
    return [
        (3 * n2, 2 * n1 + n3),
        (3 * n3, n2 + 2 * n4),
        ((k + 2) * n4, (k + 3) * n1 + n2),
        (n2 + n3, n1 + n4),
        (2 * n2 + n4, n1 + 2 * n3),
        (n3 + (k + 1) * n4, (k + 4) * n1),
    ]


_IDENTITIES = {
    "T1": _identities_t1,
    "T2": _identities_t2,
    "Q1": _identities_q1,
    "Q2": _identities_q2,
}


def lemma_identities(family_id: str, k: int) -> bool:
    """Evaluate both sides of every generator identity of the family at k."""
    d = _apery_family(family_id)
    if k < d.k_min:
        raise KBelowMinimumError(f"{family_id} identities need k >= {d.k_min}, got {k}")
    return all(lhs == rhs for lhs, rhs in _IDENTITIES[family_id](k))


# --- Apéry index sets -------------------------------------------------------
#
# Each index set is a union of coordinate boxes minus explicit exclusions.
# A box is a tuple of ranges (one per coefficient); the same description
# drives both enumeration and the arithmetic cardinality.

def _index_pieces(family_id: str, k: int) -> list[tuple[tuple[range, ...], frozenset]]:
    if family_id == "T1":
        return [((range(3), range(2 * k + 2)), frozenset({(2, 2 * k + 1)}))]
    if family_id == "T2":
        return [((range(3), range(2 * k + 3)),
                 frozenset({(2, 2 * k + 1), (2, 2 * k + 2)}))]
    if family_id == "Q1":
        return [
            ((range(1, 2), range(1), range(k + 1)), frozenset()),
            ((range(2, 3), range(1), range(1)), frozenset()),
            ((range(1), range(1, 3), range(k + 1)), frozenset({(0, 2, k)})),
            ((range(1), range(1), range(k + 2)), frozenset()),
        ]
    if family_id == "Q2":
        return [
            ((range(1, 2), range(1), range(k + 2)), frozenset()),
            ((range(2, 3), range(1), range(1)), frozenset()),
            ((range(1), range(1, 3), range(k + 1)), frozenset()),
            ((range(1), range(1), range(k + 2)), frozenset()),
        ]
    raise UnsupportedPatternError(f"family {family_id} has no Apéry index set")


def _index_set(family_id: str, k: int) -> list[tuple[int, ...]]:
    """Coefficient tuples over the generators other than the multiplicity."""
    out = []
    for box, excluded in _index_pieces(family_id, k):
        out.extend(combo for combo in product(*box) if combo not in excluded)
    return out


def _index_set_size(family_id: str, k: int) -> int:
    """Cardinality of the index set, from the box dimensions."""
    total = 0
    for box, excluded in _index_pieces(family_id, k):
        total += math.prod(len(r) for r in box)
        total -= sum(1 for combo in excluded if all(c in r for c, r in zip(combo, box)))
    return total


def apery_closed_form(family_id: str, k: int) -> AperySet:
    """Materialize the family's Apéry set at parameter k."""
    d = _apery_family(family_id)
    if k < d.k_min:
        raise KBelowMinimumError(f"{family_id} closed forms need k >= {d.k_min}, got {k}")
    gens = d.generators(k)
    modulus = gens[0]
    combos = _index_set(family_id, k)
    assert len(combos) == modulus, "index set cardinality must equal the modulus"
    table: list[int | None] = [None] * modulus
    for combo in combos:
        value = sum(c * g for c, g in zip(combo, gens[1:]))
        slot = value % modulus
        assert table[slot] is None, "index set hit a residue class twice"
        table[slot] = value
    return AperySet(modulus, tuple(table))  # type: ignore[arg-type]


# Hard-coded small case: <5,7,11,13> does not follow the generic polynomials.
# The largest gap is 9, forced by the Apéry maximum 14 and by max(PF).
_Q1_K0_INVARIANTS = SemigroupInvariants(
    frobenius=9, genus=7, pseudo_frobenius=(6, 8, 9), type_=3,
    embedding_dimension=4, minimal_generators=GeneratorSet((5, 7, 11, 13)))
_Q1_K0_APERY = AperySet(5, (0, 11, 7, 13, 14))


def invariants_closed_form(family_id: str, k: int) -> SemigroupInvariants:
    """Frobenius number, genus, pseudo-Frobenius numbers, and type from the polynomials."""
    d = _apery_family(family_id)
    if family_id == "Q1" and k == 0:
        return _Q1_K0_INVARIANTS
    if k < d.k_min:
        raise KBelowMinimumError(f"{family_id} closed forms need k >= {d.k_min}, got {k}")
    assert d.f_in_k and d.g_in_k and d.pf_in_k
    pf = tuple(sorted(_eval_poly(c, k) for c in d.pf_in_k))
    gens = d.generators(k)
    return SemigroupInvariants(
        frobenius=_eval_poly(d.f_in_k, k),
        genus=_eval_poly(d.g_in_k, k),
        pseudo_frobenius=pf,
        type_=len(pf),
        embedding_dimension=len(gens),
        minimal_generators=GeneratorSet(gens),
    )


def frobenius_from_p(p: int, pattern: OffsetPattern) -> int:
    """Frobenius number of <p+b : b in pattern> from the family quadratic in p.

    The members need not be prime; only the residue class of p matters.
    """
    family_id, k = classify(p, pattern)
    d = FAMILIES[family_id]
    if k < d.f_k_min:
        raise KBelowMinimumError(
            f"the {family_id} quadratic needs p >= {d.p_of_k(d.f_k_min)}, got p={p}")
    return d.f_from_p.eval_int(p)


def type_from_family(family_id: str, k: int) -> int:
    """Tabulated type of the family at parameter k."""
    d = _family(family_id)
    if k < d.type_k_min:
        raise KBelowMinimumError(
            f"the {family_id} type value needs k >= {d.type_k_min}, got {k}")
    return d.type_value


# --- grouped (pretty-printed) Apéry listings --------------------------------

def apery_grouped(family_id: str, k: int) -> list[list[int]]:
    """Apéry elements in increasing order, grouped the way the closed form clusters them.

    Rewriting the index-set elements against the largest generator yields
    blocks of consecutive near-multiples; this returns those blocks.
    """
    d = _apery_family(family_id)
    if family_id == "Q1" and k == 0:
        return [[0], [7, 11, 13], [14]]
    if k < d.k_min:
        raise KBelowMinimumError(f"{family_id} closed forms need k >= {d.k_min}, got {k}")
    if family_id == "T1":
        n2, n3 = 6 * k + 7, 6 * k + 11
        groups = [[0], [n2, n3]]
        groups += [[m * n3 - 8, m * n3 - 4, m * n3] for m in range(2, 2 * k + 2)]
        groups.append([(2 * k + 2) * n3 - 8, (2 * k + 2) * n3 - 4])
    elif family_id == "T2":
        n2, n3 = 6 * k + 11, 6 * k + 13
        groups = [[0], [n2, n3]]
        groups += [[m * n3 - 4, m * n3 - 2, m * n3] for m in range(2, 2 * k + 3)]
        groups.append([(2 * k + 3) * n3 - 2])
    elif family_id == "Q1":
        n2, n3, n4 = 4 * k + 7, 4 * k + 11, 4 * k + 13
        groups = [[0], [n2, n3, n4], [2 * n2]]
        groups += [[m * n4 - 6, m * n4 - 4, m * n4 - 2, m * n4] for m in range(2, k + 2)]
    else:  # Q2
        n2, n3, n4 = 4 * k + 9, 4 * k + 13, 4 * k + 15
        groups = [[0], [n2, n3, n4], [2 * n2]]
        groups += [[m * n4 - 6, m * n4 - 4, m * n4 - 2, m * n4] for m in range(2, k + 2)]
        groups.append([(k + 2) * n4 - 6, (k + 2) * n4 - 4])
    return groups


def apery_grouped_text(family_id: str, k: int) -> str:
    """Grouped listing as text, blocks separated by semicolons."""
    return "; ".join(
        ", ".join(str(v) for v in group) for group in apery_grouped(family_id, k))


def family_registry() -> list[dict]:
    """JSON-ready rows describing every registered family."""
    rows = []
    for d in FAMILIES.values():
        rows.append({
            "id": d.id,
            "pattern": list(d.pattern.offsets),
            "p_modulus": d.p_modulus,
            "p_residue": d.p_residue,
            "k_min": d.k_min,
            "frobenius_in_p": d.f_from_p.as_json(),
            "frobenius_in_p_k_min": d.f_k_min,
            "type": d.type_value,
            "type_k_min": d.type_k_min,
            "frobenius_in_k": list(d.f_in_k) if d.f_in_k else None,
            "genus_in_k": list(d.g_in_k) if d.g_in_k else None,
            "pseudo_frobenius_in_k": [list(c) for c in d.pf_in_k] if d.pf_in_k else None,
        })
    return rows
