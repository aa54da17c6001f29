"""Numerical semigroups: membership, Apéry sets, and the classical invariants.

A numerical semigroup is an additive submonoid of the non-negative integers
with finite complement, i.e. the set of all non-negative integer
combinations of a generating set whose gcd is 1.  The Apéry set with respect
to a nonzero element n (the least member of each residue class mod n) is the
workhorse: membership, the Frobenius number, the genus, and the
pseudo-Frobenius numbers all read off from it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    EmptyInputError,
    GcdNotOneError,
    ModulusNotInSemigroupError,
    NonPositiveElementError,
    SemigroupIsNaturalsError,
)

__all__ = [
    "AperySet",
    "GeneratorSet",
    "NumericalSemigroup",
    "SemigroupInvariants",
    "make_semigroup",
]


@dataclass(frozen=True)
class GeneratorSet:
    """Strictly increasing positive integers with overall gcd 1."""

    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.elements:
            raise EmptyInputError("need at least one generator")
        for x in self.elements:
            if not isinstance(x, int) or x < 1:
                raise NonPositiveElementError(f"bad generator {x!r}: must be a positive integer")
        if any(a >= b for a, b in zip(self.elements, self.elements[1:])):
            raise ValueError("generators must be strictly increasing (sorted, no duplicates)")
        g = math.gcd(*self.elements)
        if g != 1:
            raise GcdNotOneError(g)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class AperySet:
    """Residue-indexed table: table[i] is the least member congruent to i mod modulus."""

    modulus: int
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.modulus
        if n < 1 or len(self.table) != n:
            raise ValueError("table length must equal the modulus")
        if self.table[0] != 0:
            raise ValueError("the residue class of 0 must hold 0")
        for i, w in enumerate(self.table):
            if w % n != i:
                raise ValueError(f"table[{i}] = {w} is not congruent to {i} mod {n}")
        # one entry per residue class forces all n values distinct

    @property
    def elements(self) -> tuple[int, ...]:
        """The table values in increasing order."""
        return tuple(sorted(self.table))

    def max_element(self) -> int:
        return max(self.table)


@dataclass(frozen=True)
class SemigroupInvariants:
    frobenius: int
    genus: int
    pseudo_frobenius: tuple[int, ...]
    type_: int
    embedding_dimension: int
    minimal_generators: GeneratorSet

    def __post_init__(self) -> None:
        if self.frobenius != max(self.pseudo_frobenius):
            raise ValueError("the Frobenius number must be the largest pseudo-Frobenius number")
        if self.type_ != len(self.pseudo_frobenius):
            raise ValueError("the type must count the pseudo-Frobenius numbers")


def _residue_table(n: int, gens: tuple[int, ...]) -> tuple[int, ...]:
    """Least reachable element of every residue class mod n.

    Round-robin relaxation: for one generator a, each orbit of +a on Z_n is
    swept once starting from its currently-minimal entry, which closes the
    table under adding a.  Any combination of generators can be reordered so
    that equal steps are consecutive, hence a single pass over the generators
    reaches the global fixed point.
    """
    if n == 1:
        return (0,)
    w: list = [0] + [math.inf] * (n - 1)
    for a in gens:
        step = a % n
        if step == 0:
            continue
        cycle_len = n // math.gcd(step, n)
        for r in range(math.gcd(step, n)):
            pos = r
            best_pos, best = r, w[r]
            for _ in range(cycle_len - 1):
                pos = (pos + step) % n
                if w[pos] < best:
                    best_pos, best = pos, w[pos]
            cur = best_pos
            for _ in range(cycle_len - 1):
                nxt = (cur + step) % n
                cand = w[cur] + a
                if cand < w[nxt]:
                    w[nxt] = cand
                cur = nxt
    assert all(x != math.inf for x in w), "gcd 1 guarantees every class is reachable"
    return tuple(w)


@dataclass(frozen=True)
class NumericalSemigroup:
    """All non-negative integer combinations of the generators."""

    generators: GeneratorSet

    @property
    def multiplicity(self) -> int:
        """Smallest nonzero element; the natural Apéry modulus."""
        return self.generators.elements[0]

    @cached_property
    def _table(self) -> tuple[int, ...]:
        # Apéry table at the multiplicity; backs membership and the invariants.
        # cached_property writes straight into __dict__, so the frozen
        # dataclass stays immutable from the caller's point of view.
        return _residue_table(self.multiplicity, self.generators.elements)

    def contains(self, x: int) -> bool:
        """Membership test; negative integers are never members."""
        if x < 0:
            return False
        return x >= self._table[x % self.multiplicity]

    def __contains__(self, x: int) -> bool:
        return self.contains(x)

    def apery_set(self, n: int | None = None) -> AperySet:
        """Apéry set with respect to n, a nonzero element (default: multiplicity)."""
        if n is None or n == self.multiplicity:
            return AperySet(self.multiplicity, self._table)
        if n < 1 or not self.contains(n):
            raise ModulusNotInSemigroupError(f"{n} is not a nonzero element of the semigroup")
        return AperySet(n, _residue_table(n, self.generators.elements))

    def frobenius_number(self) -> int:
        """Largest integer outside the semigroup; -1 when there are no gaps."""
        return max(self._table) - self.multiplicity

    def genus(self) -> int:
        """Number of gaps, in exact integer arithmetic."""
        m = self.multiplicity
        twice = 2 * sum(self._table) - m * (m - 1)
        assert twice % (2 * m) == 0, "the gap count is always an integer"
        return twice // (2 * m)

    def pseudo_frobenius(self) -> tuple[int, ...]:
        """Sorted gaps x such that x plus any nonzero member is a member.

        These are the maximal Apéry elements (for the divisibility order of
        the semigroup) shifted down by the modulus.  An element w fails to be
        maximal iff w plus a single generator is still in the Apéry set: any
        witness w' = w + s admits a generator prefix of s, and stripping the
        rest of s keeps the defining property.
        """
        m = self.multiplicity
        if m == 1:
            raise SemigroupIsNaturalsError(
                "every non-negative integer is a member; no pseudo-Frobenius numbers exist")
        table = self._table
        gens = self.generators.elements
        out = [w - m for i, w in enumerate(table)
               if all(table[(i + a) % m] != w + a for a in gens)]
        out.sort()
        return tuple(out)

    def type(self) -> int:
        """Number of pseudo-Frobenius numbers."""
        return len(self.pseudo_frobenius())

    def minimal_generators(self) -> GeneratorSet:
        """The unique minimal generating set.

        A stored generator is redundant iff it is a sum of two nonzero
        members, which happens iff subtracting some smaller generator lands
        back in the semigroup.
        """
        gens = self.generators.elements
        keep = tuple(g for g in gens
                     if not any(0 < g - a and self.contains(g - a) for a in gens))
        return GeneratorSet(keep)

    def embedding_dimension(self) -> int:
        return len(self.minimal_generators())

    def invariants(self) -> SemigroupInvariants:
        """All classical invariants in one bundle (undefined for <1>)."""
        pf = self.pseudo_frobenius()
        msg = self.minimal_generators()
        return SemigroupInvariants(
            frobenius=self.frobenius_number(),
            genus=self.genus(),
            pseudo_frobenius=pf,
            type_=len(pf),
            embedding_dimension=len(msg),
            minimal_generators=msg,
        )


def make_semigroup(candidates) -> NumericalSemigroup:
    """Build a numerical semigroup from an iterable of positive integers.

    The input is deduplicated and sorted; the gcd of the survivors must be 1.
    """
    items = list(candidates)
    if not items:
        raise EmptyInputError("need at least one generator")
    for x in items:
        if not isinstance(x, int) or x < 1:
            raise NonPositiveElementError(f"bad generator {x!r}: must be a positive integer")
    return NumericalSemigroup(GeneratorSet(tuple(sorted(set(items)))))
