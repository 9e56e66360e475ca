"""Smoke tests for the sspenum extension module."""

import math

import pytest

import sspenum


def test_bounds():
    assert sspenum.max_sum(10) == 55
    assert sspenum.mid_sum(10) == 27
    assert sspenum.min_sum_for_length(10, 3) == 6
    assert sspenum.max_sum_for_length(10, 3) == 27
    with pytest.raises(ValueError):
        sspenum.max_sum(0)
    with pytest.raises(ValueError):
        sspenum.min_sum_for_length(4, 9)


def test_encode_decode():
    assert sspenum.encode([2, 9, 10]) == 770
    assert sspenum.decode(770) == [2, 9, 10]
    assert sspenum.encode([]) == 0
    assert sspenum.decode(0) == []
    with pytest.raises(ValueError):
        sspenum.encode([3, 2])


def test_counts():
    assert sspenum.sd_count(10, 15) == 20
    assert sspenum.sd_count(5, 99) == 0
    assert sspenum.ld_count(5, 8, 3) == 2
    assert sspenum.ed_count(10, 15, 10) == 3
    assert sspenum.ed_row(10, 15) == [9, 9, 8, 8, 8, 6, 5, 5, 4, 3]

    row = sspenum.sd_row(15)
    assert row[60] == 722
    assert sum(row) == 2**15

    # Exact counts stay exact far beyond 64 bits.
    assert sspenum.sd_count(250, 500) == 732839540340934
    big = sspenum.sd_count(120, sspenum.mid_sum(120))
    assert big > 2**100


def test_enumerate_matches_oracle():
    oracle = {tuple(s) for s in sspenum.oracle_enumerate(10, 15)}
    assert len(oracle) == 20
    for name in sspenum.algorithms():
        run = sspenum.enumerate(name, 10, 15)
        assert run["outcome"] == "complete"
        assert run["emitted"] == 20
        assert run["explored"] >= run["emitted"]
        assert {tuple(s) for s in run["subsets"]} == oracle


def test_seeds():
    assert sspenum.maximal_subset(10, 21, 3) == [6, 7, 8]
    assert sspenum.minimal_subset(10, 21, 3) == [2, 9, 10]
    with pytest.raises(ValueError):
        sspenum.maximal_subset(10, 28, 3)


def test_peak_estimate():
    estimate = sspenum.peak_estimate(15)
    assert math.isclose(722.0 / estimate, 0.926, abs_tol=1e-3)


def test_scale_guard():
    with pytest.raises(RuntimeError):
        sspenum.oracle_enumerate(26, 10)
