"""Cross-validation: reachability oracle, family sweeps, and quadratic fits.

The oracle deliberately shares no code with the Apéry engine: it marks a
plain boolean reachability table and reads the largest unmarked index.  The
sweep machinery pits the closed forms against the engine and the oracle; the
conjecture fitter recovers F(p) quadratics with exact rational arithmetic.
"""

from __future__ import annotations

import math
import os
import time
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import make_semigroup
from .errors import (
    BoundExceededError,
    GcdNotOneError,
    InsufficientSamplesError,
    NonPositiveElementError,
)
from .families import (
    FAMILIES,
    QuadraticPoly,
    apery_closed_form,
    frobenius_from_p,
    invariants_closed_form,
    type_from_family,
    _Q1_K0_APERY,
    _family,
)
from .tuplets import OffsetPattern, is_prime

__all__ = [
    "ConjectureFit",
    "OracleResult",
    "SweepEntry",
    "SweepReport",
    "fit_conjecture",
    "oracle_frobenius",
    "sweep_family",
]

DEFAULT_BOUND_LIMIT = 10 ** 9
# Oracle comparisons inside sweeps are skipped above this reachability bound
# to keep memory flat; the Apéry engine still covers those rows.
SWEEP_ORACLE_LIMIT = 10 ** 8

THREADS_ENV_VAR = "TUPLETFROB_THREADS"


@dataclass(frozen=True)
class OracleResult:
    frobenius: int
    genus: int
    gaps: tuple[int, ...] | None = None


def oracle_frobenius(gens, *, with_gaps: bool = True,
                     bound_limit: int = DEFAULT_BOUND_LIMIT) -> OracleResult:
    """Frobenius number and genus by brute-force reachability over [0, n1*ne].

    The table is closed under each generator by shift-or doubling.  n1*ne
    bounds the largest gap whenever the first and last generators are
    coprime; rather than rely on that, the top window of length n1 is checked
    to be fully reachable and the bound doubled otherwise.
    """
    items = sorted(set(gens))
    if not items:
        raise NonPositiveElementError("need at least one generator")
    for x in items:
        if not isinstance(x, int) or x < 1:
            raise NonPositiveElementError(f"bad generator {x!r}: must be a positive integer")
    g = math.gcd(*items)
    if g != 1:
        raise GcdNotOneError(g)
    if items == [1]:
        return OracleResult(-1, 0, () if with_gaps else None)
    n1 = items[0]
    bound = n1 * items[-1]
    if bound > bound_limit:
        raise BoundExceededError(
            f"reachability bound {n1}*{items[-1]} = {bound} exceeds {bound_limit}")
    while True:
        size = bound + 1
        reachable = np.zeros(size, dtype=bool)
        reachable[0] = True
        for a in items:
            shift = a
            while shift < size:
                reachable[shift:] |= reachable[:-shift]
                shift <<= 1
        if bool(reachable[size - n1:].all()):
            break
        bound *= 2
        if bound > bound_limit:
            raise BoundExceededError(
                f"grown reachability bound {bound} exceeds {bound_limit}")
    gaps = np.flatnonzero(~reachable)
    if gaps.size == 0:
        return OracleResult(-1, 0, () if with_gaps else None)
    return OracleResult(
        frobenius=int(gaps[-1]),
        genus=int(gaps.size),
        gaps=tuple(int(x) for x in gaps) if with_gaps else None,
    )


@dataclass(frozen=True)
class SweepEntry:
    k: int
    status: str                       # "match" or "mismatch"
    detail: dict | None = None        # mismatches carry both sides; informational otherwise

    def to_json_dict(self) -> dict:
        return {"k": self.k, "status": self.status, "detail": self.detail}


@dataclass(frozen=True)
class SweepReport:
    family: str
    k_lo: int
    k_hi: int
    entries: tuple[SweepEntry, ...]
    wall_time_s: float

    @property
    def all_match(self) -> bool:
        return all(e.status == "match" for e in self.entries)

    @property
    def mismatches(self) -> tuple[SweepEntry, ...]:
        return tuple(e for e in self.entries if e.status != "match")

    def to_json_dict(self, include_timing: bool = True) -> dict:
        out = {
            "family": self.family,
            "k_lo": self.k_lo,
            "k_hi": self.k_hi,
            "all_match": self.all_match,
            "entries": [e.to_json_dict() for e in self.entries],
        }
        if include_timing:
            out["wall_time_s"] = round(self.wall_time_s, 3)
        return out


def _jsonable(value):
    if isinstance(value, tuple):
        return list(value)
    return value


def _check_k(family_id: str, k: int, oracle_limit: int) -> SweepEntry:
    d = FAMILIES[family_id]
    gens = d.generators(k)
    semigroup = make_semigroup(gens)
    engine_f = semigroup.frobenius_number()
    engine_g = semigroup.genus()
    engine_pf = semigroup.pseudo_frobenius()

    mismatch: dict = {}
    info: dict = {}

    def compare(name, closed, engine):
        if closed != engine:
            mismatch[name] = {"closed": _jsonable(closed), "engine": _jsonable(engine)}

    if d.has_apery_form:
        inv = invariants_closed_form(family_id, k)
        compare("frobenius", inv.frobenius, engine_f)
        compare("genus", inv.genus, engine_g)
        compare("pseudo_frobenius", inv.pseudo_frobenius, engine_pf)
        compare("type", inv.type_, len(engine_pf))
        closed_apery = (apery_closed_form(family_id, k) if k >= d.k_min
                        else _Q1_K0_APERY)
        compare("apery", closed_apery.table, semigroup.apery_set().table)
    else:
        if k >= d.f_k_min:
            compare("frobenius", frobenius_from_p(d.p_of_k(k), d.pattern), engine_f)
        else:
            info["observed_frobenius"] = engine_f
        if k >= d.type_k_min:
            compare("type", type_from_family(family_id, k), len(engine_pf))
        else:
            info["observed_type"] = len(engine_pf)

    if gens[0] * gens[-1] <= oracle_limit:
        oracle = oracle_frobenius(gens, with_gaps=False)
        if oracle.frobenius != engine_f:
            mismatch["oracle_frobenius"] = {"oracle": oracle.frobenius, "engine": engine_f}
        if oracle.genus != engine_g:
            mismatch["oracle_genus"] = {"oracle": oracle.genus, "engine": engine_g}

    if mismatch:
        return SweepEntry(k, "mismatch", mismatch)
    return SweepEntry(k, "match", info or None)


def sweep_family(family_id: str, k_lo: int, k_hi: int, *, workers: int | None = None,
                 oracle_limit: int = SWEEP_ORACLE_LIMIT) -> SweepReport:
    """Compare closed forms, the Apéry engine, and the oracle over a k range.

    Per-k checks are independent; the worker count comes from the
    TUPLETFROB_THREADS environment variable unless given explicitly, and the
    report is ordered by k either way.
    """
    d = _family(family_id)
    floor = 0 if family_id == "Q1" else d.k_min if d.has_apery_form else 0
    if k_lo < floor or k_hi < k_lo:
        raise ValueError(f"need {floor} <= k_lo <= k_hi for family {family_id}")
    start = time.perf_counter()
    ks = range(k_lo, k_hi + 1)
    if workers is None:
        workers = int(os.environ.get(THREADS_ENV_VAR, "1") or "1")
    if workers > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=workers) as pool:
            entries = tuple(pool.map(lambda k: _check_k(family_id, k, oracle_limit), ks))
    else:
        entries = tuple(_check_k(family_id, k, oracle_limit) for k in ks)
    return SweepReport(family_id, k_lo, k_hi, entries, time.perf_counter() - start)


@dataclass(frozen=True)
class ConjectureFit:
    """Quadratic fit of F(p) over one residue class of first generators."""

    pattern: OffsetPattern
    p_modulus: int
    p_residue: int
    samples: tuple[tuple[int, int], ...]
    poly: QuadraticPoly
    exact: bool
    a2_equals_2_over_q: bool
    a0_integer: bool

    def to_json_dict(self) -> dict:
        return {
            "pattern": list(self.pattern.offsets),
            "p_modulus": self.p_modulus,
            "p_residue": self.p_residue,
            "samples": [list(s) for s in self.samples],
            "poly": self.poly.as_json(),
            "exact": self.exact,
            "a2_equals_2_over_q": self.a2_equals_2_over_q,
            "a0_integer": self.a0_integer,
        }


def _quadratic_through(points) -> QuadraticPoly:
    """Exact quadratic through three points (Lagrange, rational arithmetic)."""
    (x0, y0), (x1, y1), (x2, y2) = points
    a2 = a1 = a0 = Fraction(0)
    for xi, yi, xj, xk in ((x0, y0, x1, x2), (x1, y1, x0, x2), (x2, y2, x0, x1)):
        scale = Fraction(yi, (xi - xj) * (xi - xk))
        a2 += scale
        a1 += scale * -(xj + xk)
        a0 += scale * (xj * xk)
    return QuadraticPoly(a2, a1, a0)


def fit_conjecture(pattern: OffsetPattern, p_modulus: int, p_residue: int, *,
                   max_p: int, min_p: int | None = None, primes_only: bool = False,
                   max_samples: int = 8) -> ConjectureFit:
    """Fit F(p) over the class p = modulus*k + residue and test the quadratic shape.

    The quadratic through the first three samples is computed exactly; the
    fit is exact only if every remaining sample lands on it (at least four
    samples are required).  F values come from the Apéry engine, which shares
    nothing with the family formula tables.  With primes_only, only p whose
    whole pattern lands on primes are sampled.
    """
    if min_p is None:
        min_p = p_residue
    p = min_p + (p_residue - min_p) % p_modulus
    ps = []
    while p <= max_p and len(ps) < max_samples:
        if p >= 1 and (not primes_only or all(is_prime(p + b) for b in pattern.offsets)):
            ps.append(p)
        p += p_modulus
    if len(ps) < 4:
        raise InsufficientSamplesError(
            f"need at least 4 sample points in the class, found {len(ps)}")
    samples = tuple(
        (p, make_semigroup(p + b for b in pattern.offsets).frobenius_number()) for p in ps)
    poly = _quadratic_through(samples[:3])
    exact = all(poly(p) == f for p, f in samples[3:])
    return ConjectureFit(
        pattern=pattern,
        p_modulus=p_modulus,
        p_residue=p_residue,
        samples=samples,
        poly=poly,
        exact=exact,
        a2_equals_2_over_q=poly.a2 == Fraction(2, pattern.diameter),
        a0_integer=poly.a0.denominator == 1,
    )
