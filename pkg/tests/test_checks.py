"""Theorem checks and sweep machinery."""

import json

import pytest

from spectral_delta import (
    FieldSpec,
    Q,
    Z,
    full_simplex,
    make_complex,
)
from spectral_delta.checks import (
    CHECK_IDS,
    CheckOutcome,
    check_alexander_duality,
    check_delta_iso_nerve,
    check_depth_vanishing,
    check_few_facets,
    check_generator_count,
    check_hartshorne,
    check_nerve,
    check_uct,
    enumerate_complexes,
    random_complexes,
    resolve_threads,
    run_instance,
    sweep,
)

from oracles import count_antichains, count_nonvoid_complexes

F2 = FieldSpec.prime(2)
F3 = FieldSpec.prime(3)


def test_enumeration_counts_match_both_oracles():
    for n in (1, 2, 3):
        got = sum(1 for _ in enumerate_complexes(n))
        assert got == count_nonvoid_complexes(n)
        assert got == count_antichains(n)
    assert sum(1 for _ in enumerate_complexes(1)) == 2
    assert sum(1 for _ in enumerate_complexes(2)) == 5
    assert sum(1 for _ in enumerate_complexes(3)) == 19
    assert sum(1 for _ in enumerate_complexes(4)) == count_antichains(4) == 167


def test_enumeration_is_duplicate_free_and_canonical():
    seen = set()
    for K in enumerate_complexes(3):
        assert K.n == 3
        assert K.facets not in seen
        seen.add(K.facets)
        assert make_complex(3, K.facets,
                            include_empty=K.is_irrelevant) == K


def test_enumeration_starts_with_the_irrelevant_complex():
    first = next(enumerate_complexes(4))
    assert first.is_irrelevant


def test_enumeration_refuses_out_of_range():
    with pytest.raises(ValueError):
        list(enumerate_complexes(6))
    with pytest.raises(ValueError):
        list(enumerate_complexes(0))


def test_random_corpus_is_deterministic():
    a = random_complexes(8, seed=1, count=20)
    b = random_complexes(8, seed=1, count=20)
    assert a == b
    assert len(a) == 20
    assert all(K.n == 8 and not K.is_void for K in a)
    assert random_complexes(8, seed=2, count=20) != a


def test_outcome_expectation_polarity():
    good = CheckOutcome("x", "{}", "Q", passed=True)
    assert not good.unexpected
    bad = CheckOutcome("x", "{}", "Q", passed=False)
    assert bad.unexpected
    documented = CheckOutcome("x", "{}", "Z", passed=False, expect_pass=False)
    assert not documented.unexpected
    surprise_pass = CheckOutcome("x", "{}", "Z", passed=True,
                                 expect_pass=False)
    assert surprise_pass.unexpected


def test_hartshorne_examples(hollow_triangle, two_points):
    assert check_hartshorne(hollow_triangle, Q).passed
    assert check_hartshorne(two_points, Q).passed  # depth 1: vacuous
    assert check_hartshorne(full_simplex(3), F2).passed


def test_depth_vanishing_examples(rp2):
    assert check_depth_vanishing(rp2, Q).passed
    assert check_depth_vanishing(full_simplex(2), F3).passed


def test_depth_vanishing_torsion_witness_is_an_expected_failure(rp2):
    # depth 3 over the rationals, yet the derived complex keeps 2-torsion
    # in degree 1 <= depth - 2: the documented integer-coefficient gap.
    # The check downgrades the polarity itself on torsion-only failures.
    out = check_depth_vanishing(rp2, Z)
    assert not out.passed
    assert not out.expect_pass
    assert not out.unexpected
    assert out.witness["degree"] == 1
    assert out.witness["free"] == 0
    assert out.witness["torsion"] == [2]
    assert out.witness["depth"] == 3
    # and the same statement over any field is clean
    for F in (Q, F2, F3):
        assert check_depth_vanishing(rp2, F).passed


def test_depth_vanishing_integral_pass_keeps_positive_polarity(
        hollow_triangle):
    out = check_depth_vanishing(hollow_triangle, Z)
    assert out.passed and out.expect_pass


def test_few_facets_examples(hollow_triangle):
    assert check_few_facets(hollow_triangle, Q).passed
    assert check_few_facets(full_simplex(1), Q).passed
    assert check_few_facets(hollow_triangle, Z).passed


def test_generator_count_examples(hollow_triangle):
    assert check_generator_count(full_simplex(3), Q).passed
    assert check_generator_count(hollow_triangle, F2).passed


def test_duality_examples(hollow_triangle, two_points, rp2):
    assert check_alexander_duality(hollow_triangle, Q).passed
    assert check_alexander_duality(two_points, Q).passed
    assert check_alexander_duality(rp2, F2).passed
    with pytest.raises(ValueError):
        check_alexander_duality(full_simplex(2), Q)
    with pytest.raises(ValueError):
        check_alexander_duality(make_complex(2, [], include_empty=True), Q)


def test_nerve_and_iso_examples(hollow_triangle, rp2):
    assert check_nerve(hollow_triangle, Z).passed
    assert check_nerve(full_simplex(3), Q).passed
    assert check_nerve(rp2, Z).passed
    assert check_delta_iso_nerve(hollow_triangle).passed
    assert check_delta_iso_nerve(rp2).passed


def test_uct_examples(hollow_triangle, rp2):
    assert check_uct(rp2, 2).passed
    assert check_uct(rp2, 3).passed
    assert check_uct(hollow_triangle, F2).passed
    with pytest.raises(ValueError):
        check_uct(rp2, Q)


def test_run_instance_respects_coefficient_policies(hollow_triangle):
    outs = run_instance(hollow_triangle, CHECK_IDS, (Z, Q, F2))
    by_check = {}
    for o in outs:
        by_check.setdefault(o.check_id, []).append(o.coeff)
    # field-only statements skip the integers in sweeps; depth_vanishing
    # keeps them because its integral failures carry their own polarity
    assert by_check["depth_vanishing"] == ["Z", "Q", "F2"]
    assert by_check["alexander_duality"] == ["Q", "F2"]
    assert by_check["generator_count"] == ["Q", "F2"]
    assert by_check["hartshorne"] == ["Z", "Q", "F2"]
    assert by_check["nerve"] == ["Z", "Q", "F2"]
    assert by_check["uct"] == ["F2"]
    assert by_check["delta_iso_nerve"] == ["-"]


def test_run_instance_skips_duality_on_degenerate_complexes():
    outs = run_instance(full_simplex(2), ("alexander_duality",), (Q,))
    assert outs == []


def test_run_instance_skips_ring_checks_on_the_void_complex():
    void = make_complex(3, [])
    outs = run_instance(void, CHECK_IDS, (Z, Q, F2))
    survivors = {o.check_id for o in outs}
    assert survivors == {"few_facets", "uct"}
    assert all(o.passed for o in outs)


def test_run_instance_records_the_integral_torsion_sighting(rp2):
    outs = run_instance(rp2, ("depth_vanishing",), (Z, Q))
    by_coeff = {o.coeff: o for o in outs}
    assert not by_coeff["Z"].passed
    assert not by_coeff["Z"].unexpected
    assert by_coeff["Q"].passed


def test_sweep_with_integer_coefficients_has_no_expected_failures():
    # no complex on 4 or fewer vertices carries torsion, so even the
    # integral depth statement holds exhaustively there
    rep = sweep(4, coeffs=(Z,), check_ids=("depth_vanishing",))
    assert rep.complexes == 167
    assert rep.unexpected_failures == 0
    assert rep.tallies["depth_vanishing"] == {
        "pass": 167, "fail": 0, "expected_fail": 0}


def test_sweep_exhaustive_n3_is_clean():
    rep = sweep(3, coeffs=(Q, F2))
    assert rep.complexes == 19
    assert rep.unexpected_failures == 0
    assert rep.failures == []
    for cid in CHECK_IDS:
        assert rep.tallies[cid]["fail"] == 0
    # every complex yields one nerve outcome per coefficient system
    assert rep.tallies["nerve"]["pass"] == 38
    # duality skips the irrelevant complex and the three full simplices
    applicable = 19 - 1 - 1
    assert rep.tallies["alexander_duality"]["pass"] == applicable * 2


def test_sweep_bodies_are_reproducible():
    a = sweep(2, coeffs=(Q, F2, F3))
    b = sweep(2, coeffs=(Q, F2, F3))
    assert a.body_json() == b.body_json()
    assert json.dumps(a.body_json()) == json.dumps(b.body_json())
    assert a.elapsed >= 0.0  # timing lives outside the body


def test_sweep_random_mode_is_reproducible():
    a = sweep(6, mode="random", seed=3, count=12, coeffs=(Q,),
              check_ids=("few_facets", "nerve"))
    b = sweep(6, mode="random", seed=3, count=12, coeffs=(Q,),
              check_ids=("few_facets", "nerve"))
    assert a.body_json() == b.body_json()
    assert a.complexes == 12


def test_sweep_parallel_matches_serial():
    serial = sweep(3, coeffs=(Q,), check_ids=("nerve", "few_facets"),
                   threads=1)
    parallel = sweep(3, coeffs=(Q,), check_ids=("nerve", "few_facets"),
                     threads=2)
    assert serial.body_json() == parallel.body_json()


def test_sweep_validates_arguments():
    with pytest.raises(ValueError):
        sweep(3, check_ids=("no_such_check",))
    with pytest.raises(ValueError):
        sweep(3, mode="stochastic")
    with pytest.raises(ValueError):
        sweep(6, mode="random", seed=1)  # missing count
    with pytest.raises(ValueError):
        sweep(6)  # exhaustive beyond the cap


def test_sweep_report_text_rendering():
    rep = sweep(2, coeffs=(Q,))
    text = rep.render_text()
    assert text.splitlines()[0] == "sweep n=2 mode=exhaustive"
    assert "complexes: 5" in text
    assert "unexpected failures: 0" in text
    assert "elapsed:" in text
    assert "elapsed:" not in rep.render_text(with_timing=False)


def test_torsion_tally_counts_integer_sightings():
    rep = sweep(3, coeffs=(Z, Q))
    assert rep.torsion_sightings == 0  # none exists at this size


def test_resolve_threads_env_interaction(monkeypatch):
    monkeypatch.delenv("SPECTRAL_DELTA_THREADS", raising=False)
    assert resolve_threads(None) == 1
    assert resolve_threads(4) == 4
    monkeypatch.setenv("SPECTRAL_DELTA_THREADS", "2")
    assert resolve_threads(None) == 2
    assert resolve_threads(8) == 2
    assert resolve_threads(1) == 1
    monkeypatch.setenv("SPECTRAL_DELTA_THREADS", "zero")
    with pytest.raises(ValueError):
        resolve_threads(None)
    monkeypatch.setenv("SPECTRAL_DELTA_THREADS", "0")
    with pytest.raises(ValueError):
        resolve_threads(None)
    monkeypatch.delenv("SPECTRAL_DELTA_THREADS")
    with pytest.raises(ValueError):
        resolve_threads(0)
