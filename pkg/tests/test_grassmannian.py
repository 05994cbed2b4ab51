import itertools

import pytest

from satake import grassmannian as gr
from satake import multiplicities as mult
from satake import root_datum as rd
from satake.root_datum import DatumError

from conftest import datum


def test_orbit_dim_examples(a1sc, a1ad, a2sc):
    assert gr.orbit_dim(a1sc, (1,)) == 2
    assert gr.orbit_dim(a1ad, (1,)) == 1  # Gr^omega for PGL_2 is P^1
    assert gr.orbit_dim(a2sc, (1, 1)) == 4
    with pytest.raises(DatumError):
        gr.orbit_dim(a1sc, (-1,))


def test_closure_examples(a1sc, a2sc):
    assert gr.closure_contains(a1sc, (2,), (1,))
    assert gr.closure_contains(a1sc, (2,), (0,))
    assert not gr.closure_contains(a1sc, (1,), (2,))
    assert gr.closure_contains(a2sc, (1, 1), (0, 0))


def test_components_a1(a1sc, a1ad):
    assert gr.component_group(a1sc).is_trivial
    assert gr.component_of(a1sc, (5,)).is_identity
    assert gr.component_of(a1ad, (1,)) != gr.component_of(a1ad, (0,))
    assert gr.component_of(a1ad, (3,)) == gr.component_of(a1ad, (1,))
    assert gr.component_parity(a1ad, gr.component_of(a1ad, (1,)), (1,)) == 1
    assert gr.component_parity(a1ad, gr.component_of(a1ad, (0,))) == 0


@pytest.mark.parametrize("n", [2, 3, 4])
def test_gl_component_is_degree(n):
    d = rd.general_linear(n)
    for v in itertools.product(range(-2, 3), repeat=n):
        label = gr.component_of(d, v)
        assert label.torsion == ()
        assert abs(label.free[0]) == abs(sum(v))
    same = gr.component_of(d, (1,) + (0,) * (n - 1))
    assert gr.component_of(d, (0,) * (n - 1) + (1,)) == same


@pytest.mark.parametrize("name", ["A2-ad", "A3-ad", "B2-ad", "D4-ad", "G2-ad", "C3-ad"])
def test_component_labels_are_classes(name):
    d = datum(name)
    order = gr.component_group(d).torsion_order
    seen = set()
    for v in itertools.product(range(-2, 3), repeat=d.rank):
        c = gr.component_of(d, v)
        seen.add(c)
        for cor in d.simple_coroots:
            assert gr.component_of(d, rd._add(v, cor)) == c
        rep = gr.component_representative(d, c)
        assert gr.component_of(d, rep) == c
        assert gr.component_parity(d, c) == rd.height2(d, v) % 2
    assert len(seen) == order


def test_add_components():
    d = datum("A2-ad")
    vs = list(itertools.product(range(-1, 2), repeat=2))
    for a, b in itertools.product(vs, vs):
        ca, cb = gr.component_of(d, a), gr.component_of(d, b)
        total = gr.add_components(d, ca, cb)
        assert total == gr.component_of(d, rd._add(a, b))
        assert gr.component_parity(d, total) == (gr.component_parity(d, ca) + gr.component_parity(d, cb)) % 2


def test_bad_parity_representative(a1ad):
    with pytest.raises(DatumError):
        gr.component_parity(a1ad, gr.component_of(a1ad, (0,)), (1,))


def test_s_closure_set(a1sc, a2sc):
    assert gr.s_closure_set(a1sc, (0,), 4) == {(0,), (-1,), (-2,)}
    s = gr.s_closure_set(a2sc, (0, 0), 2)
    assert s == {(0, 0), (-1, 0), (0, -1)}
    for y in gr.s_closure_set(a2sc, (1, 1), 6):
        assert rd.dominance_leq(a2sc, y, (1, 1))


def test_intersection_examples(a1sc, a2sc):
    assert gr.sv_intersection_dim(a2sc, (1, 1), (0, 0)) == 2
    assert gr.tv_intersection_dim(a2sc, (1, 1), (0, 0)) == 2
    assert gr.sv_intersection_dim(a2sc, (1, 1), (1, 1)) == 4
    assert gr.tv_intersection_dim(a2sc, (1, 1), (1, 1)) == 0
    assert gr.sv_intersection_dim(a1sc, (1,), (-1,)) == 0
    assert gr.sv_intersection_dim(a1sc, (1,), (2,)) is None
    assert gr.tv_intersection_dim(a1sc, (1,), (5,)) is None


@pytest.mark.parametrize("name", ["A2-sc", "B2-ad", "G2-sc"])
def test_dimensions_monotone_and_complementary(name):
    d = datum(name)
    for lam in rd.dominant_coweights(d, 10):
        weights = mult.weight_diagram(d, lam)
        assert weights == {v for v in weights if gr.is_weight(d, lam, v)}
        for nu in weights:
            s, t = gr.sv_intersection_dim(d, lam, nu), gr.tv_intersection_dim(d, lam, nu)
            assert s + t == gr.orbit_dim(d, lam)
            for c in d.simple_coroots:
                lower = rd._sub(nu, c)
                if lower in weights:
                    assert gr.sv_intersection_dim(d, lam, lower) == s - rd.height2(d, c) // 2
        # support agreement with the multiplicity table
        assert set(mult.kostant_table(d, lam).support) == set(weights)


def test_fixed_point_bound(a2sc):
    pts = mult.weight_diagram(a2sc, (1, 1))
    assert gr.fixed_point_dim_bound(a2sc, (1, 1), pts) == 4
    assert gr.fixed_point_dim_bound(a2sc, (1, 1), [(0, 0), (-1, -1)]) == 2
    with pytest.raises(DatumError):
        gr.fixed_point_dim_bound(a2sc, (1, 1), [(2, 2)])
    with pytest.raises(DatumError):
        gr.fixed_point_dim_bound(a2sc, (1, 1), [])


def test_closure_poset(a1sc, a2sc):
    nodes, edges = gr.closure_poset(a1sc, 6)
    assert nodes == [(0,), (1,), (2,), (3,)]
    assert edges == [((0,), (1,)), ((1,), (2,)), ((2,), (3,))]
    nodes, edges = gr.closure_poset(a2sc, 8)
    assert ((0, 0), (1, 1)) in edges
    # covering edges are transitively irreducible
    for lo, hi in edges:
        assert not any(rd.dominance_leq(a2sc, lo, m) and rd.dominance_leq(a2sc, m, hi)
                       for m in nodes if m not in (lo, hi))
