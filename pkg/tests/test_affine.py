import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import knots
from vknot.affine import ChengColoring, affine_index_polynomial, cheng_coloring, crossing_weights
from vknot.biquandle import circuit_weight, relation_matrix
from vknot.diagram import mirror, reverse
from vknot.laurent import ZERO, T, parse_poly, substitute
from vknot.moves import r1_insert


def t_inverse(p):
    return substitute(p, "t", T**-1)


def test_trefoil_coloring(trefoil):
    c = cheng_coloring(trefoil, "a", 0)
    assert dict(c.labels) == {"a": 0, "b": -1, "c": -2, "d": -1}
    assert c.is_valid_for(trefoil)


def test_classical_coloring(classical):
    c = cheng_coloring(classical, "e6", 0)
    assert dict(c.labels) == {"e1": -1, "e2": 0, "e3": -1, "e4": 0, "e5": -1, "e6": 0}


def test_base_label_shift(trefoil):
    a = cheng_coloring(trefoil, "c", 0).labels
    b = cheng_coloring(trefoil, "c", 7).labels
    assert all(b[e] == a[e] + 7 for e in a)


def test_coloring_rejects_bad_input(trefoil, unknot):
    with pytest.raises(KeyError):
        cheng_coloring(trefoil, "z")
    with pytest.raises(ValueError):
        cheng_coloring(unknot)


def test_trefoil_weights(trefoil):
    ws = crossing_weights(trefoil)
    assert [w.w for w in ws] == [1, -1]
    assert all(w.w_minus == -w.w_plus for w in ws)


def test_classical_weights_vanish(classical):
    assert [w.w for w in crossing_weights(classical)] == [0, 0, 0]


@pytest.mark.parametrize("sign", [1, -1])
@pytest.mark.parametrize("chirality", ["A", "B"])
def test_kink_weight_zero(trefoil, sign, chirality):
    d = r1_insert(trefoil, "b", sign, chirality)
    assert crossing_weights(d)[-1].w == 0


def test_affine_examples(trefoil, classical, unknot):
    assert affine_index_polynomial(trefoil) == parse_poly("t + t^-1 - 2")
    assert affine_index_polynomial(classical) == ZERO
    assert affine_index_polynomial(unknot) == ZERO


def test_mirror_and_reverse_examples(trefoil):
    assert affine_index_polynomial(mirror(trefoil)) == parse_poly("2 - t - t^-1")
    assert affine_index_polynomial(reverse(trefoil)) == parse_poly("t + t^-1 - 2")


@settings(max_examples=300, deadline=None)
@given(knots(8), st.data())
def test_base_independence(d, data):
    edge = data.draw(st.sampled_from(sorted(d.edges)))
    label = data.draw(st.integers(-50, 50))
    coloring = cheng_coloring(d, edge, label)
    assert coloring.is_valid_for(d)
    assert affine_index_polynomial(d, coloring) == affine_index_polynomial(d)


@settings(max_examples=300, deadline=None)
@given(knots(8))
def test_mirror_and_reverse_laws(d):
    p = affine_index_polynomial(d)
    assert affine_index_polynomial(mirror(d)) == -t_inverse(p)
    assert affine_index_polynomial(reverse(d)) == t_inverse(p)


@settings(max_examples=300, deadline=None)
@given(knots(8))
def test_vanishes_at_one_and_matches_writhe(d):
    p = affine_index_polynomial(d)
    assert p.evaluate(t=1) == 0
    ws = crossing_weights(d)
    assert p == sum((w.sign * T**w.w for w in ws), ZERO) - d.writhe


@settings(max_examples=300, deadline=None)
@given(knots(8))
def test_reverse_label_duality(d):
    lam = cheng_coloring(d)
    mu = ChengColoring({e: -v for e, v in lam.labels.items()}, lam.base_edge, -lam.base_label)
    assert mu.is_valid_for(reverse(d))


@settings(max_examples=300, deadline=None)
@given(knots(8))
def test_weights_match_circuit_oracle(d):
    matrix = relation_matrix(d)
    for i, cw in enumerate(crossing_weights(d)):
        assert circuit_weight(d, i, matrix) == cw.w
