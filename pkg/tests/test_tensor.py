import itertools

import pytest

from satake import multiplicities as mult
from satake import root_datum as rd
from satake import tensor as tn
from satake.root_datum import DatumError

from conftest import datum


def clebsch_gordan(a, b):
    return {(a + b - 2 * k,): 1 for k in range(min(a, b) + 1)}


def test_clebsch_gordan(a1ad):
    for a, b in itertools.product(range(13), repeat=2):
        assert dict(tn.tensor_decompose(a1ad, (a,), (b,)).entries) == clebsch_gordan(a, b)


def test_unit_object():
    for name in ["A2-sc", "B2-ad", "G2-sc"]:
        d = datum(name)
        zero = (0,) * d.rank
        for lam in rd.dominant_coweights(d, 10):
            assert dict(tn.tensor_decompose(d, lam, zero).entries) == {lam: 1}
            assert dict(tn.tensor_decompose(d, zero, lam).entries) == {lam: 1}


def test_a2_adjoint_squared(a2sc):
    t = tn.tensor_decompose(a2sc, (1, 1), (1, 1))
    assert dict(t.entries) == {(0, 0): 1, (1, 1): 2, (1, 2): 1, (2, 1): 1, (2, 2): 1}
    assert sum(n * mult.weyl_dimension(a2sc, eta) for eta, n in t.entries.items()) == 64
    assert t == tn.tensor_by_characters(a2sc, (1, 1), (1, 1))


def test_wall_contributions_vanish(a1ad):
    # weight -2 of L(2 omega) shifted by omega + rho lands on the wall
    x = tuple(2 * (-2 + 1) + r for r in a1ad.two_rho_check)
    assert x == (0,)
    assert dict(tn.tensor_decompose(a1ad, (2,), (1,)).entries) == {(3,): 1, (1,): 1}


@pytest.mark.parametrize("name", ["A2-ad", "B2-sc", "G2-ad"])
def test_commutative_and_dimension(name):
    d = datum(name)
    lams = rd.dominant_coweights(d, 8)
    for lam, mu in itertools.combinations(lams, 2):
        t = tn.tensor_decompose(d, lam, mu)
        assert t == tn.tensor_decompose(d, mu, lam)
        assert sum(n * mult.weyl_dimension(d, e) for e, n in t.entries.items()) == (
            mult.weyl_dimension(d, lam) * mult.weyl_dimension(d, mu))
        assert tn.verify_support_and_top(d, t).passed


def test_adversarial_table_fails(a2sc):
    lam, mu = (1, 1), (1, 1)
    good = tn.tensor_decompose(a2sc, lam, mu)
    entries = dict(good.entries)
    above = rd._add(rd._add(lam, mu), a2sc.simple_coroots[0])
    entries[above] = 1
    report = tn.verify_support_and_top(a2sc, tn.TensorTable((lam, mu), entries))
    assert not report.passed
    assert any("not <=" in v for v in report.violations)
    entries = dict(good.entries)
    entries[(2, 2)] = 2
    assert not tn.verify_support_and_top(a2sc, tn.TensorTable((lam, mu), entries)).passed


def test_component_additivity():
    d = datum("A2-ad")
    a, b = rd.coweight_from_labels(d, (1, 0)), rd.coweight_from_labels(d, (1, 0))
    t = tn.tensor_decompose(d, a, b)
    assert sorted(d.labels(e) for e in t.entries) == [(0, 1), (2, 0)]
    assert tn.verify_support_and_top(d, t).passed


def test_semismall_examples(a1sc):
    r = tn.semismall_estimate_check(a1sc, (1,), (1,), (0,))
    assert r.passed
    assert r.details == {"nu": [0], "pairs": 3, "max_height": 2, "bound": 2}
    r = tn.semismall_estimate_check(a1sc, (1,), (1,), (2,))
    assert r.passed and r.details["nu"] == [-2] and r.details["pairs"] == 1


@pytest.mark.parametrize("name", ["A2-sc", "B2-ad"])
def test_semismall_exhaustive_small(name):
    d = datum(name)
    lams = rd.dominant_coweights(d, 6)
    for lam, mu in itertools.product(lams, repeat=2):
        for nu in mult.dominant_weights(d, rd._add(lam, mu)):
            assert tn.semismall_estimate_check(d, lam, mu, nu).passed


def test_associativity(a2sc):
    d = datum("A2-ad")
    w1, w2 = rd.coweight_from_labels(d, (1, 0)), rd.coweight_from_labels(d, (0, 1))
    r = tn.associativity_check(d, rd._add(w1, w2), w1, w2)
    assert r.passed and r.details["terms"] > 0
    r = tn.associativity_check(a2sc, (1, 1), (0, 0), (1, 1))
    assert r.passed


def test_compose_with_unit(a2sc):
    first = dict(tn.tensor_decompose(a2sc, (1, 1), (1, 1)).entries)
    assert tn.compose(a2sc, first, (0, 0)) == first
    assert tn.compose(a2sc, first, (0, 0), left=False) == first


def test_decompose_rejects_non_invariant(a2sc):
    with pytest.raises(ArithmeticError):
        tn.decompose_character(a2sc, {(1, 0): 1})


def test_non_dominant_factor(a2sc):
    with pytest.raises(DatumError):
        tn.tensor_decompose(a2sc, (-1, 0), (0, 0))


def test_gl_tensor():
    gl = rd.general_linear(3)
    t = tn.tensor_decompose(gl, (1, 0, 0), (1, 0, 0))
    assert dict(t.entries) == {(2, 0, 0): 1, (1, 1, 0): 1}
    assert t == tn.tensor_by_characters(gl, (1, 0, 0), (1, 0, 0))
    assert tn.verify_support_and_top(gl, t).passed


def test_table_json(a1ad):
    t = tn.tensor_decompose(a1ad, (1,), (1,))
    assert t.to_json() == {"factors": [[1], [1]],
                           "entries": [{"highest_weight": [0], "multiplicity": 1},
                                       {"highest_weight": [2], "multiplicity": 1}]}
