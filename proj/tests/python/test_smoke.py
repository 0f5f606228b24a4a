import math

import pytest

import chainfib as cf


def test_gcd_convention():
    assert cf.gcd0(0, 5) == 5
    assert cf.gcd0(4, 6) == 2
    assert cf.gcd0(0, 0) == 0


def test_primitivity():
    assert cf.is_primitive([1, 1, 0])
    assert not cf.is_primitive([4, 4, 2])


def test_magic_classification():
    assert cf.magic_norm(5, 5, 3) == 7
    assert cf.magic_boundaries(5, 5, 3) == 3
    s = cf.magic_classify(5, 5, 3)
    assert (s.genus, s.punctures) == (3, 3)
    with pytest.raises(ValueError):
        cf.magic_norm(1, 0, 0)


def test_chain_classification():
    assert cf.chain_norm([2, 2, 2, 1, 1, 1]) == 9
    assert cf.chain_boundaries([2, 2, 2, 1, 1, 1]) == 7
    s = cf.chain_classify([2, 2, 2, 1, 1, 1])
    assert (s.genus, s.punctures) == (2, 7)


def test_stretch_factor():
    s = cf.monodromy_stretch(6)
    assert (s.exact_p, s.exact_q) == (8, 60)
    assert s.value == pytest.approx(4 + math.sqrt(15), abs=1e-12)
    word = cf.classify_word("A B'", cf.mu([[1, 1, 1, 1, 1, 1]]))
    assert word["kind"] == "hyperbolic"
    assert word["stretch"].value == pytest.approx(s.value, abs=1e-12)


def test_families_and_targets():
    assert cf.magic_family("3b3", 2) == [7, 7, 5]
    with pytest.raises(ValueError):
        cf.magic_family("3b3", 4)
    assert cf.chain_sequence(1, 1, 1) == [2, 2, 2, 1, 1, 1]
    assert cf.solve_target(5, 2, 6) == [2, 2, 1, 1, 1, 1]


def test_bounds():
    assert cf.chi_abs(2, 6) == 8
    upper, witness = cf.upper_bound(5, 2, 6)
    assert upper == pytest.approx(12 * math.log(8) / 8, abs=1e-12)
    assert witness == [2, 2, 1, 1, 1, 1]
    assert cf.lower_bound(5, 2, 6) < upper
    assert cf.corollary_bounds(5, 2, 6) == pytest.approx(upper, abs=1e-12)
    assert cf.corollary_bounds(2, 2, 6) is None
    exact, cap = cf.normalized_entropy_cap(1, 1, 1)
    assert exact < cap
