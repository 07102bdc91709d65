import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import knots
from vknot.affine import affine_index_polynomial, crossing_weights
from vknot.biquandle import gamma_at_unity, mellor_check, sawollek
from vknot.diagram import Crossing, Diagram, isomorphic, random_knot, validate
from vknot.errors import NotAKink, NotAnR2Pair, SameEdge, UnknownEdge
from vknot.laurent import ZERO, eq_up_to_unit
from vknot.moves import (
    ANTIPARALLEL,
    PARALLEL,
    MoveKind,
    kinks,
    r1_insert,
    r1_remove,
    r2_form,
    r2_insert,
    r2_pairs,
    r2_remove,
    random_move_sequence,
)

FORMS = (PARALLEL, ANTIPARALLEL)


def test_r1_on_unknot(unknot):
    for sign in (1, -1):
        for chirality in "AB":
            d = r1_insert(unknot, None, sign, chirality)
            validate(d)
            assert d.m == 1
            assert affine_index_polynomial(d) == ZERO
            assert sawollek(d) == ZERO
            assert r1_remove(d, 0) == Diagram(())


def test_r1_errors(trefoil):
    with pytest.raises(UnknownEdge):
        r1_insert(trefoil, "zz", 1)
    with pytest.raises(ValueError):
        r1_insert(trefoil, "a", 1, "C")
    with pytest.raises(NotAKink):
        r1_remove(trefoil, 0)


@pytest.mark.parametrize("sign", [1, -1])
@pytest.mark.parametrize("chirality", ["A", "B"])
def test_r1_shapes(trefoil, sign, chirality):
    d = r1_insert(trefoil, "b", sign, chirality)
    validate(d)
    assert d.writhe == trefoil.writhe + sign
    c = d.crossings[-1]
    if chirality == "A":
        assert c.l_in == "b" and c.r_in == c.r_out
    else:
        assert c.r_in == "b" and c.l_in == c.l_out
    assert kinks(d) == [2]
    assert isomorphic(r1_remove(d, 2), trefoil)


def test_r2_errors(trefoil):
    with pytest.raises(SameEdge):
        r2_insert(trefoil, "a", "a", 1)
    with pytest.raises(UnknownEdge):
        r2_insert(trefoil, "a", "zz", 1)
    with pytest.raises(NotAnR2Pair):
        r2_remove(trefoil, 0, 1)
    with pytest.raises(NotAnR2Pair):
        r2_remove(trefoil, 0, 0)


def test_r2_same_sign_is_not_a_pair(trefoil):
    d = r2_insert(trefoil, "a", "c", 1)
    c1, c2 = d.crossings[2:]
    flipped = Diagram(d.crossings[:3] + (Crossing(c1.sign, c2.l_in, c2.r_in, c2.r_out, c2.l_out),))
    with pytest.raises(NotAnR2Pair):
        r2_remove(flipped, 2, 3)


@pytest.mark.parametrize("form", FORMS)
@pytest.mark.parametrize("sign", [1, -1])
def test_r2_shapes(trefoil, form, sign):
    d = r2_insert(trefoil, "a", "c", sign, form)
    validate(d)
    assert d.writhe == trefoil.writhe
    assert r2_form(d.crossings[2], d.crossings[3]) == form
    assert (2, 3) in r2_pairs(d)
    assert isomorphic(r2_remove(d, 2, 3), trefoil)
    w = crossing_weights(d)
    assert w[2].w == w[3].w


# -- symbolic R2 cancellation ------------------------------------------------

s, t, g = sympy.symbols("s t G")
g_bar = -g / (s * t)


def _relations(c: Crossing, v):
    """Outgoing labels forced by one crossing's relation rows."""
    if c.sign > 0:
        return [sympy.Eq(v[c.r_out], t * v[c.l_in] + g * v[c.r_in]), sympy.Eq(v[c.l_out], s * v[c.r_in])]
    return [sympy.Eq(v[c.l_out], v[c.r_in] / t + g_bar * v[c.l_in]), sympy.Eq(v[c.r_out], v[c.l_in] / s)]


@pytest.mark.parametrize("form", FORMS)
@pytest.mark.parametrize("sign", [1, -1])
def test_r2_cancels_symbolically(form, sign):
    """With G formal, the labels leaving the bigon equal the labels entering it."""
    base = Diagram((Crossing(1, "e", "f", "f", "e"),))
    d = r2_insert(base, "e", "f", sign, form)
    c1, c2 = d.crossings[1:]
    names = sorted(set(c1.inputs + c1.outputs + c2.inputs + c2.outputs))
    v = {n: sympy.Symbol(f"v_{n}") for n in names}
    eqs = _relations(c1, v) + _relations(c2, v)
    inner = [v[n] for n in names if n not in ("e", "f")]
    (sol,) = sympy.solve(eqs, inner, dict=True)
    e_out = c2.l_out
    f_out = c2.r_out if form == PARALLEL else c1.l_out
    assert sympy.simplify(sol[v[e_out]] - v["e"]) == 0
    assert sympy.simplify(sol[v[f_out]] - v["f"]) == 0


def test_r2_weight_contributions_cancel():
    for seed in range(30):
        d = random_knot(5, seed)
        for form in FORMS:
            e, f = sorted(d.edges)[:2]
            d2 = r2_insert(d, e, f, 1, form)
            w = crossing_weights(d2)
            assert w[-2].w == w[-1].w and w[-2].sign == -w[-1].sign
            assert affine_index_polynomial(d2) == affine_index_polynomial(d)


# -- round trips and invariance --------------------------------------------


@settings(max_examples=300, deadline=None)
@given(knots(6), st.data())
def test_round_trips(d, data):
    edges = sorted(d.edges)
    e = data.draw(st.sampled_from(edges))
    sign = data.draw(st.sampled_from([1, -1]))
    chirality = data.draw(st.sampled_from("AB"))
    assert isomorphic(r1_remove(r1_insert(d, e, sign, chirality), d.m), d)
    f = data.draw(st.sampled_from([x for x in edges if x != e]))
    form = data.draw(st.sampled_from(FORMS))
    assert isomorphic(r2_remove(r2_insert(d, e, f, sign, form), d.m, d.m + 1), d)


def _move(kind, d, seed):
    rnd = random.Random(seed)
    edges = sorted(d.edges)
    sign = rnd.choice((1, -1))
    if kind.startswith("r1"):
        return r1_insert(d, rnd.choice(edges), sign, kind[-1])
    e, f = rnd.sample(edges, 2)
    return r2_insert(d, e, f, sign, PARALLEL if kind == "r2-parallel" else ANTIPARALLEL)


MOVE_KINDS = ["r1-A", "r1-B", "r2-parallel", "r2-antiparallel"]
TRIALS = [(m, seed) for seed in range(100) for m in (2, 4, 6)][:250]


@pytest.mark.parametrize("kind", MOVE_KINDS)
def test_affine_and_sawollek_invariant(kind):
    for m, seed in TRIALS:
        d = random_knot(m, seed)
        after = _move(kind, d, seed)
        assert affine_index_polynomial(after) == affine_index_polynomial(d)
        assert eq_up_to_unit(sawollek(after), sawollek(d))
        assert mellor_check(after).equal_up_to_unit


@pytest.mark.parametrize("kind", MOVE_KINDS)
def test_gamma_invariant(kind):
    bad = []
    for m, seed in TRIALS:
        d = random_knot(m, seed)
        after = _move(kind, d, seed)
        if not eq_up_to_unit(gamma_at_unity(after), gamma_at_unity(d)):
            bad.append((m, seed, str(gamma_at_unity(d)), str(gamma_at_unity(after))))
    assert not bad, f"{len(bad)}/{len(TRIALS)} moves changed Gamma(st=1), first: {bad[0]}"


def test_trefoil_plus_kink_gamma(trefoil):
    # one positive kink on the virtual trefoil
    assert gamma_at_unity(trefoil) == ZERO
    assert gamma_at_unity(r1_insert(trefoil, "a", 1, "A")) == ZERO


def test_random_move_sequence(trefoil):
    assert random_move_sequence(trefoil, 0, 5) == (trefoil, [])
    d, records = random_move_sequence(trefoil, 12, 5)
    validate(d)
    assert len(records) == 12
    assert d.m <= trefoil.m + 2 * 12
    assert random_move_sequence(trefoil, 12, 5) == (d, records)
    assert {r.kind for r in records} <= set(MoveKind)
    with pytest.raises(ValueError):
        random_move_sequence(trefoil, -1, 5)


@settings(max_examples=100, deadline=None)
@given(knots(5), st.integers(0, 10**6))
def test_sequences_preserve_p_and_s(d, seed):
    p, sw = affine_index_polynomial(d), sawollek(d)
    after, _ = random_move_sequence(d, 8, seed)
    validate(after)
    assert affine_index_polynomial(after) == p
    assert eq_up_to_unit(sawollek(after), sw)
