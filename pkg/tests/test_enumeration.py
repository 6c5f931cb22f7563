import random

import numpy as np
import pytest

import oracle
from ternrep import (
    NotPositiveDefinite,
    QuadForm,
    Vector3,
    named_form,
    primitive_representations,
    rep_count,
    representations,
    represented_mask,
    represented_set,
    scale,
    theta,
)

SUM_OF_SQUARES = QuadForm(1, 1, 1, 0, 0, 0)


def test_representations_worked_values(s4):
    f, g = s4
    assert representations(f, 0) == [Vector3(0, 0, 0)]
    assert Vector3(1, 4, 2) in representations(g, 392)
    assert Vector3(4, 5, 1) in representations(f, 392)


def test_representations_sorted_and_exact(s4):
    f, _ = s4
    reps = representations(f, 392)
    assert reps == sorted(reps)
    assert len(reps) == len(set(reps))
    from ternrep import evaluate

    assert all(evaluate(f, v) == 392 for v in reps)


def test_representations_against_triple_loop(s4):
    f, g = s4
    for n in (8, 14, 18, 32, 50):
        assert representations(f, n) == oracle.triple_loop_reps(f, n, 6)
        assert representations(g, n) == oracle.triple_loop_reps(g, n, 6)


def test_rep_count_values(s4):
    f, g = s4
    assert rep_count(f, 0) == 1
    assert rep_count(f, 8) == 2  # exactly +-(1,0,0)
    assert rep_count(g, 14) == 4  # +-(0,1,0), +-(0,0,1)
    assert representations(f, 8) == [Vector3(-1, 0, 0), Vector3(1, 0, 0)]


def test_represented_set_small(s4):
    f, g = s4
    assert list(represented_set(f, 20)) == [0, 8, 14, 18]
    assert list(represented_set(g, 20)) == [0, 8, 14, 18]
    assert list(represented_set(f, 0)) == [0]


def test_primitive_representations(s4):
    f, _ = s4
    assert primitive_representations(f, 8) == [Vector3(-1, 0, 0), Vector3(1, 0, 0)]
    assert primitive_representations(f, 32) == []  # only +-(2,0,0)
    assert primitive_representations(f, 0) == []


def test_theta_sum_of_three_squares():
    series = theta(SUM_OF_SQUARES, 3)
    assert list(series.coeffs) == [1, 6, 12, 8]
    assert series[0] == 1


def test_theta_consistency(s4):
    f, _ = s4
    series = theta(f, 20)
    assert [n for n in range(21) if series[n]] == [0, 8, 14, 18]
    assert all(series[n] == rep_count(f, n) for n in range(21))
    assert all(series[n] % 2 == 0 for n in range(1, 21))


def test_theta_primitive_counts(s4):
    f, _ = s4
    series = theta(f, 40, primitive=True)
    assert series[0] == 0
    assert series[8] == 2
    assert series[32] == 0  # imprimitive value
    full = theta(f, 40)
    assert all(series[n] <= full[n] for n in range(41))


def test_mask_matches_oracle_midsize():
    for name in ("S4f", "S4g", "S3a", "S15d"):
        form = named_form(name)
        assert np.array_equal(represented_mask(form, 3000), oracle.value_mask(form, 3000))


def test_theta_matches_oracle_counts():
    for name in ("S4f", "S2b", "S13c"):
        form = named_form(name)
        assert np.array_equal(theta(form, 1500).coeffs, oracle.value_counts(form, 1500))


def test_primitive_mask_matches_filtered_oracle():
    from math import gcd

    form = named_form("S8f")
    bound = 800
    mask = represented_mask(form, bound, primitive=True)
    expected = np.zeros(bound + 1, dtype=bool)
    B = oracle.box_radius(form, bound)
    from ternrep import evaluate

    for x in range(-B, B + 1):
        for y in range(-B, B + 1):
            for z in range(-B, B + 1):
                n = evaluate(form, (x, y, z))
                if n <= bound and gcd(gcd(abs(x), abs(y)), abs(z)) == 1:
                    expected[n] = True
    assert np.array_equal(mask, expected)


def test_scaling_law():
    form = named_form("S6a")
    base = represented_mask(form, 500)
    doubled = represented_mask(scale(form, 2), 1000)
    expected = np.zeros(1001, dtype=bool)
    expected[2 * np.flatnonzero(base)] = True
    assert np.array_equal(doubled, expected)


def test_membership_matches_rep_count(s4):
    _, g = s4
    members = represented_set(g, 300)
    rng = random.Random(17)
    for n in rng.sample(range(301), 40):
        assert (n in members) == (rep_count(g, n) > 0)


def test_rejects_indefinite_forms():
    bad = QuadForm(1, 1, 1, 0, 0, 3)
    with pytest.raises(NotPositiveDefinite):
        representations(bad, 5)
    with pytest.raises(NotPositiveDefinite):
        represented_set(bad, 5)


def test_repset_equality_and_contains(s4):
    f, g = s4
    assert represented_set(f, 20) == represented_set(g, 20)
    assert represented_set(f, 20) != represented_set(f, 19)
    assert 14 in represented_set(f, 20)
    assert 15 not in represented_set(f, 20)
