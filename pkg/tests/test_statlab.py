"""Campaign protocols: perturbations, statistics, reproducibility, models."""

import json
import math

import numpy as np
import pytest
from mpmath import mp

from hanoihash import (
    CampaignConfig,
    Digest,
    HashParams,
    PerturbKind,
    birthday_bound,
    bits_to_text,
    collision_test,
    diffusion_test,
    digest,
    flip_random_bit,
    hamming,
    perturb,
    random_message,
    scaling_experiment,
    sensitivity_suite,
    theoretical_collision,
    theoretical_pair_collision_rate,
    uniform_distribution_test,
)
from hanoihash.rng import XorShift64Star


# ---------------------------------------------------------------- hamming


def test_hamming_identity_and_complement():
    d = digest("110101")
    assert hamming(d, d) == 0
    flipped = Digest(words=tuple(w ^ 0xFFFF for w in d.words), word_bits=16)
    assert hamming(d, flipped) == 256


def test_hamming_small_example():
    a = Digest(words=(0b1010,), word_bits=4)
    b = Digest(words=(0b0110,), word_bits=4)
    assert hamming(a, b) == 2


def test_hamming_rejects_mismatched_geometry():
    with pytest.raises(ValueError):
        hamming(Digest(words=(1, 2), word_bits=16), Digest(words=(1,), word_bits=16))
    with pytest.raises(ValueError):
        hamming(Digest(words=(1, 2), word_bits=8), Digest(words=(1,), word_bits=16))


# ---------------------------------------------------------------- perturbations


def test_perturb_flip_kinds():
    rng = XorShift64Star(1)
    base = "111110010011000"
    m2 = perturb(base, PerturbKind.FLIP_ONE_TO_ZERO, rng)
    assert len(m2) == len(base)
    assert int(np.sum(m2)) == base.count("1") - 1
    m3 = perturb(base, PerturbKind.FLIP_ZERO_TO_ONE, rng)
    assert int(np.sum(m3)) == base.count("1") + 1


def test_perturb_insert_delete():
    rng = XorShift64Star(2)
    base = "101"
    m4 = perturb(base, PerturbKind.INSERT_BIT, rng)
    assert len(m4) == 4
    m5 = perturb(base, PerturbKind.DELETE_BIT, rng)
    assert len(m5) == 2


def test_perturb_single_bit_delete_yields_empty():
    rng = XorShift64Star(3)
    empty = perturb("1", PerturbKind.DELETE_BIT, rng)
    assert empty.size == 0
    with pytest.raises(ValueError):
        digest(empty)  # rejected downstream


def test_perturb_domain_errors():
    rng = XorShift64Star(4)
    with pytest.raises(ValueError):
        perturb("0000", PerturbKind.FLIP_ONE_TO_ZERO, rng)
    with pytest.raises(ValueError):
        perturb("1111", PerturbKind.FLIP_ZERO_TO_ONE, rng)
    with pytest.raises(ValueError):
        perturb("", PerturbKind.INSERT_BIT, rng)


def test_perturb_edit_is_single_position():
    rng = XorShift64Star(5)
    base = "110010111000110"
    for kind in (PerturbKind.FLIP_ONE_TO_ZERO, PerturbKind.FLIP_ZERO_TO_ONE):
        for _ in range(20):
            edited = perturb(base, kind, rng)
            diffs = [i for i, (a, b) in enumerate(zip(base, bits_to_text(edited))) if a != b]
            assert len(diffs) == 1


def test_flip_random_bit():
    rng = XorShift64Star(6)
    m1 = random_message(24, rng)
    m2, pos = flip_random_bit(m1, rng)
    assert m1[pos] != m2[pos]
    assert int(np.sum(m1 != m2)) == 1


# ---------------------------------------------------------------- config


def test_campaign_config_validation():
    with pytest.raises(ValueError):
        CampaignConfig(trials=0)
    with pytest.raises(ValueError):
        CampaignConfig(trials=10, message_bits=0)


# ---------------------------------------------------------------- diffusion


def test_diffusion_report_invariants():
    rep = diffusion_test(CampaignConfig(trials=50, seed=13))
    assert 0 <= rep.b_min <= rep.b_mean <= rep.b_max <= rep.digest_bits
    assert rep.p == rep.b_mean / rep.digest_bits
    assert rep.delta_p == rep.delta_b / rep.digest_bits
    assert len(rep.b_values) == 50
    assert rep.b_min == min(rep.b_values)
    assert rep.b_max == max(rep.b_values)
    mean = sum(rep.b_values) / 50
    assert rep.b_mean == pytest.approx(mean, abs=1e-12)
    var = sum((b - mean) ** 2 for b in rep.b_values) / 49
    assert rep.delta_b == pytest.approx(math.sqrt(var), rel=1e-9)


def test_diffusion_needs_two_trials():
    with pytest.raises(ValueError):
        diffusion_test(CampaignConfig(trials=1))


def test_diffusion_workers_do_not_change_report():
    cfg = CampaignConfig(trials=40, seed=99)
    a = diffusion_test(cfg, workers=1)
    b = diffusion_test(cfg, workers=4)
    assert a == b
    assert json.dumps(a.to_json_dict()) == json.dumps(b.to_json_dict())


# ---------------------------------------------------------------- uniformity


def test_uniformity_counts_are_complementary():
    cfg = CampaignConfig(trials=30, seed=21)
    rep = uniform_distribution_test(cfg)
    assert len(rep.t) == rep.digest_bits == 256
    for ti, tti in zip(rep.t, rep.t_tilde):
        assert ti + tti == 30
    assert rep.dev == abs(rep.t_mean - 15.0)


def test_uniformity_matches_diffusion_totals():
    # sum of per-position flip counts == sum of per-trial Hamming distances
    cfg = CampaignConfig(trials=25, seed=8)
    diff = diffusion_test(cfg)
    uni = uniform_distribution_test(cfg)
    assert sum(uni.t) == sum(diff.b_values)


# ---------------------------------------------------------------- collision


def test_collision_histogram_conserved():
    cfg = CampaignConfig(trials=60, seed=17)
    rep = collision_test(cfg)
    assert sum(rep.w_e) == 60
    assert len(rep.w_e) == 17
    assert len(rep.omega_values) == 60
    assert rep.collision_rate == 1.0 - rep.w_e[0] / 60


def test_identical_and_disjoint_digest_omega():
    d1 = Digest(words=tuple(range(16)), word_bits=16)
    d2 = Digest(words=tuple(range(16, 32)), word_bits=16)
    assert int(np.count_nonzero(np.equal(d1.words, d1.words))) == 16
    assert int(np.count_nonzero(np.equal(d1.words, d2.words))) == 0


def test_theoretical_collision_default_table():
    reals, ints = theoretical_collision(10000, 16, 16)
    assert ints[0] == 9997
    assert ints[1] == 2
    assert ints[2] == 0
    assert reals[0] == pytest.approx(9997.5589, abs=5e-4)
    assert reals[1] == pytest.approx(2.4408, abs=5e-4)
    assert abs(sum(reals) - 10000) < 1e-9 * 10000


def test_theoretical_collision_limits():
    reals, ints = theoretical_collision(5000, 16, 60)  # huge word space: no collisions
    assert ints[0] == 4999 or ints[0] == 5000
    assert reals[0] == pytest.approx(5000, rel=1e-9)
    reals1, _ = theoretical_collision(1 << 20, 1, 16)
    assert reals1[1] == pytest.approx((1 << 20) * 2**-16, rel=1e-12)
    with pytest.raises(ValueError):
        theoretical_collision(0, 16, 16)


def test_theoretical_pair_rate_against_high_precision():
    with mp.workdps(40):
        want = float(1 - (1 - mp.mpf(2) ** -16) ** 32)
    assert theoretical_pair_collision_rate(32, 16) == pytest.approx(want, rel=1e-12)
    assert 0.000487 < theoretical_pair_collision_rate(32, 16) < 0.000489


# ---------------------------------------------------------------- scaling


def test_scaling_rows_and_message_lengths():
    cfg = CampaignConfig(trials=20, seed=5, params=HashParams(precision=7))
    rep = scaling_experiment([4, 5], cfg)
    assert [r.n_vertices for r in rep.rows] == [16, 32]
    assert [r.message_bits for r in rep.rows] == [24, 48]
    for r in rep.rows:
        assert 0 <= r.experimental_rate <= 1
        assert r.theoretical_rate == theoretical_pair_collision_rate(r.n_vertices, 16)


# ---------------------------------------------------------------- sensitivity


def test_sensitivity_suite_shape():
    rep = sensitivity_suite("111110010011000", seed=3)
    labels = [r.label for r in rep.rows]
    assert labels == ["m1", "m2", "m3", "m4", "m5"]
    assert rep.rows[0].message == "111110010011000"
    assert len(rep.rows[3].message) == 16  # one bit inserted
    assert len(rep.rows[4].message) == 14  # one bit deleted
    assert len(rep.hamming_pairs) == 10
    # single edits must still push the digest far away from every variant
    assert rep.min_distance >= 0.35 * 256
    assert rep.max_distance <= 0.65 * 256


def test_sensitivity_deterministic():
    a = sensitivity_suite("111110010011000", seed=3)
    b = sensitivity_suite("111110010011000", seed=3)
    assert a == b


def test_sensitivity_propagates_perturb_errors():
    with pytest.raises(ValueError):
        sensitivity_suite("1111", seed=1)  # no zero bit to flip


# ---------------------------------------------------------------- birthday


def test_birthday_bound_values():
    assert birthday_bound(256) == "340282366920938463463374607431768211456"
    assert birthday_bound(2) == "2"
    assert birthday_bound(512) == str(2**256)


def test_birthday_bound_domain():
    with pytest.raises(ValueError):
        birthday_bound(255)
    with pytest.raises(ValueError):
        birthday_bound(0)


# ---------------------------------------------------------------- serialization


def test_report_json_schemas():
    cfg = CampaignConfig(trials=10, seed=1)
    diff = diffusion_test(cfg).to_json_dict()
    assert set(diff) == {
        "suite", "config", "digest_bits", "b_min", "b_max", "b_mean", "p",
        "delta_b", "delta_p", "b_values",
    }
    assert set(diff["config"]) == {"trials", "message_bits", "seed", "params"}
    uni = uniform_distribution_test(cfg).to_json_dict()
    assert set(uni) == {
        "suite", "config", "digest_bits", "t_mean", "dev", "delta_t", "t", "t_tilde",
    }
    coll = collision_test(cfg).to_json_dict()
    assert set(coll) == {
        "suite", "config", "n_vertices", "collision_rate", "w_e", "w_t_real",
        "w_t_int", "omega_values",
    }
    scal = scaling_experiment([4], cfg).to_json_dict()
    assert set(scal) == {"suite", "config", "rows"}
    assert set(scal["rows"][0]) == {
        "n", "n_vertices", "message_bits", "trials", "w_e0",
        "experimental_rate", "theoretical_rate",
    }
    sens = sensitivity_suite("1100101", seed=2).to_json_dict()
    assert set(sens) == {
        "suite", "seed", "params", "rows", "hamming", "min_distance", "max_distance",
    }
    # all JSON-serializable
    for payload in (diff, uni, coll, scal, sens):
        json.dumps(payload)


def test_report_csv_shapes():
    cfg = CampaignConfig(trials=10, seed=1)
    assert diffusion_test(cfg).to_csv_text().count("\n") == 2
    assert uniform_distribution_test(cfg).to_csv_text().count("\n") == 257
    assert collision_test(cfg).to_csv_text().count("\n") == 18
    assert scaling_experiment([4], cfg).to_csv_text().count("\n") == 2
    assert sensitivity_suite("1100101", seed=2).to_csv_text().count("\n") == 6
