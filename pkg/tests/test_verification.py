"""Oracle, sweep, and conjecture-fit tests."""

import json
import random
from fractions import Fraction

import pytest

from tupletfrob import (
    FAMILIES,
    OffsetPattern,
    QuadraticPoly,
    fit_conjecture,
    make_semigroup,
    oracle_frobenius,
    sweep_family,
)
from tupletfrob.errors import (
    BoundExceededError,
    GcdNotOneError,
    InsufficientSamplesError,
)
from tupletfrob.verification import _quadratic_through

from test_core import random_coprime_gens


class TestOracle:
    def test_triplet_example(self):
        res = oracle_frobenius([11, 13, 17])
        assert res.frobenius == 53 and res.genus == 30
        assert len(res.gaps) == 30 and res.gaps[-1] == 53

    def test_quadruplet_small_case(self):
        res = oracle_frobenius([7, 9, 13, 15])
        assert res.frobenius == 19 and res.genus == 12

    def test_naturals(self):
        assert oracle_frobenius([1]) == oracle_frobenius([1, 2, 3])
        res = oracle_frobenius([1])
        assert res.frobenius == -1 and res.genus == 0 and res.gaps == ()

    def test_gaps_match_membership(self):
        s = make_semigroup([6, 10, 15])
        res = oracle_frobenius([6, 10, 15])
        expected = tuple(x for x in range(res.frobenius + 1) if not s.contains(x))
        assert res.gaps == expected

    def test_without_gaps(self):
        assert oracle_frobenius([11, 13, 17], with_gaps=False).gaps is None

    def test_gcd_guard(self):
        with pytest.raises(GcdNotOneError):
            oracle_frobenius([4, 6])

    def test_bound_guard(self):
        with pytest.raises(BoundExceededError):
            oracle_frobenius([40_000, 40_001])

    def test_agrees_with_engine_on_randoms(self):
        rng = random.Random(12)
        for _ in range(150):
            gens = random_coprime_gens(rng)
            s = make_semigroup(gens)
            res = oracle_frobenius(gens, with_gaps=False)
            assert res.frobenius == s.frobenius_number(), gens
            assert res.genus == s.genus(), gens

    def test_non_coprime_first_last_pair(self):
        # n1 and ne share a factor; the top-window check keeps the answer honest
        res = oracle_frobenius([6, 10, 15])
        assert res.frobenius == 29 and res.genus == 15


class TestSweep:
    def test_t1_matches(self):
        report = sweep_family("T1", 0, 50)
        assert report.all_match
        assert [e.k for e in report.entries] == list(range(51))

    def test_q1_with_special_case(self):
        report = sweep_family("Q1", 0, 25)
        assert report.all_match

    def test_wide_family(self):
        report = sweep_family("Quin1", 0, 6)
        assert report.all_match

    def test_below_threshold_rows_report_observations(self):
        report = sweep_family("Sep1", 0, 2)
        first = report.entries[0]
        assert first.status == "match"
        assert first.detail == {"observed_frobenius": 27, "observed_type": 6}

    def test_json_round_trip(self):
        report = sweep_family("T2", 0, 10)
        payload = report.to_json_dict(include_timing=False)
        assert json.loads(json.dumps(payload)) == payload
        assert payload["family"] == "T2" and payload["all_match"] is True
        assert len(payload["entries"]) == 11

    def test_bad_range(self):
        with pytest.raises(ValueError):
            sweep_family("T1", 5, 3)
        with pytest.raises(ValueError):
            sweep_family("T1", -1, 3)

    def test_workers_deterministic(self):
        serial = sweep_family("T1", 0, 20, workers=1)
        threaded = sweep_family("T1", 0, 20, workers=4)
        assert serial.to_json_dict(include_timing=False) == \
            threaded.to_json_dict(include_timing=False)

    def test_env_var_worker_count(self, monkeypatch):
        monkeypatch.setenv("TUPLETFROB_THREADS", "3")
        report = sweep_family("Q2", 0, 12)
        assert report.all_match


class TestQuadraticThrough:
    def test_recovers_exact_quadratic(self):
        rng = random.Random(13)
        for _ in range(50):
            a2, a1, a0 = (Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(3))
            poly = QuadraticPoly(a2, a1, a0)
            xs = rng.sample(range(-50, 50), 3)
            fitted = _quadratic_through([(x, poly(x)) for x in xs])
            assert fitted == poly


class TestFitConjecture:
    @pytest.mark.parametrize("fid", FAMILIES)
    def test_recovers_registered_polynomials(self, fid):
        d = FAMILIES[fid]
        fit = fit_conjecture(d.pattern, d.p_modulus, d.p_residue,
                             max_p=d.p_of_k(d.f_k_min + 7), min_p=d.p_of_k(d.f_k_min))
        assert fit.exact
        assert fit.poly == d.f_from_p
        assert fit.a2_equals_2_over_q and fit.a0_integer

    def test_primes_only_mode(self):
        d = FAMILIES["T1"]
        fit = fit_conjecture(d.pattern, d.p_modulus, d.p_residue,
                             max_p=2000, primes_only=True)
        assert fit.exact and fit.poly == d.f_from_p
        assert all(p in (5, 11, 17, 41, 101, 107, 191, 227) for p, _ in fit.samples)

    def test_insufficient_samples(self):
        d = FAMILIES["T1"]
        with pytest.raises(InsufficientSamplesError):
            fit_conjecture(d.pattern, d.p_modulus, d.p_residue, max_p=20)

    def test_mixed_classes_are_not_quadratic(self):
        # sampling across different residue classes breaks the fit; this is
        # reported through exact=False rather than an exception
        fit = fit_conjecture(OffsetPattern((0, 2, 6)), 2, 5, max_p=40)
        assert not fit.exact

    def test_json_round_trip(self):
        d = FAMILIES["Q2"]
        fit = fit_conjecture(d.pattern, d.p_modulus, d.p_residue, max_p=100)
        payload = fit.to_json_dict()
        assert json.loads(json.dumps(payload)) == payload
        assert payload["poly"] == {"a2": [1, 4], "a1": [5, 4], "a0": [-2, 1]}

    def test_samples_cross_checked_against_oracle(self):
        d = FAMILIES["Quin2"]
        fit = fit_conjecture(d.pattern, d.p_modulus, d.p_residue, max_p=400)
        for p, f in fit.samples:
            assert oracle_frobenius([p + b for b in d.pattern.offsets],
                                    with_gaps=False).frobenius == f

    def test_octuplet_class_with_minus_four(self):
        # the octuplet-hosting class p = 2730k + 1271 (p = 10 mod 13, which
        # contains the constellation at 182403491) fits exactly with a0 = -4
        pattern = OffsetPattern((0, 2, 6, 8, 12, 18, 20, 26))
        fit = fit_conjecture(pattern, 2730, 1271, max_p=2730 * 8, max_samples=6)
        assert fit.exact
        assert fit.poly.a2 == Fraction(2, 26)
        assert fit.poly.a0 == -4
