from itertools import product

import numpy as np
import pytest
from hypothesis import given, strategies as st

from yhklr import linalg as la
from yhklr import symmetric_groups as sg
from yhklr.errors import ConfigError, InfeasibleSize
from yhklr.scalars import Weight, make_field_cfg
from yhklr.yokonuma import (YContext, associativity_check, build_context, check_presentation,
                            closure_rank, divided_difference, e_projector, normal_form,
                            parse_word, X_element, word_matrix)

from oracles import FiniteYHOracle, IwahoriHeckeOracle


def ctx_of(p, d, q, n, w="0:1", deg=False):
    cfg = make_field_cfg(p, d, q)
    return build_context(cfg, n, Weight.parse(w, cfg.e), deg)


def coords(ctx, word):
    el = normal_form(ctx, word)
    return {ctx.labels[i]: c for i, c in el.coeffs.items()}


@pytest.mark.parametrize("args,dim", [
    ((5, 2, 2, 2), 8), ((5, 1, 2, 3), 6), ((7, 3, 1, 2, "0:1", True), 18),
    ((5, 2, 2, 3), 48), ((13, 2, 3, 3), 48), ((5, 1, 2, 4, "0:1,1:1"), 384),
])
def test_dimension_and_independence(args, dim):
    ctx = ctx_of(*args)
    assert ctx.dim == dim == len(ctx.labels)
    assert ctx.independent


def test_closure_rank_equals_dim():
    ctx = ctx_of(5, 2, 2, 2, "0:1,1:1")
    assert closure_rank(ctx) == ctx.dim == 32


@pytest.mark.parametrize("args", [
    (5, 2, 2, 3), (13, 2, 3, 3), (7, 3, 1, 2, "0:1", True), (7, 2, 1, 2, "0:1", True),
    (5, 1, 2, 3, "0:1,1:1"), (13, 2, 3, 2, "0:2,1:1"), (7, 2, 1, 3, "1:2", True),
])
def test_presentation(args):
    rep = check_presentation(ctx_of(*args))
    assert rep.ok, rep.to_text()


def test_fault_injection_pinpoints_relation():
    ctx = ctx_of(5, 2, 2, 3)
    gens = dict(ctx.gens)
    bad = gens[("g", 2)].copy()
    bad[0, 0] = (bad[0, 0] + 1) % 5
    gens[("g", 2)] = bad
    rep = check_presentation(ctx, gens)
    assert not rep.ok
    name, label = rep.first_failure()
    assert "g_a" in name and "a=2" in label


def test_normal_form_examples():
    p, q = 5, 2
    ctx = ctx_of(p, 1, q, 2)
    g1 = (sg.s(1, 2), (0, 0), (0, 0))
    one = (sg.identity(2), (0, 0), (0, 0))
    assert coords(ctx, "g1*g1") == {one: q, g1: q - 1}
    ctx2 = ctx_of(p, 2, q, 2)
    assert coords(ctx2, "t1*g1") == {(sg.s(1, 2), (0, 0), (0, 1)): 1}
    for i0 in range(4):
        c = ctx_of(p, 2, q, 2, "%d:1" % i0)
        assert coords(c, "X1*X1") == {(sg.identity(2), (0, 0), (0, 0)): pow(q, 2 * i0, p)}


def test_normal_form_idempotent_on_basis():
    ctx = ctx_of(13, 2, 3, 2, "0:1,1:1")
    for i, lab in enumerate(ctx.labels):
        el = ctx.element(ctx.basis_matrix(i))
        assert el.coeffs == {i: 1}


def test_X_element_examples():
    p, q = 13, 3
    for i0 in range(3):
        ctx = ctx_of(p, 1, q, 2, "%d:1" % i0)
        c = pow(q, i0 - 1, p) if i0 else pow(q, p - 2, p)
        expect = normal_form(ctx, "g1*g1").scale(c)
        assert X_element(ctx, 2) == expect
        assert X_element(ctx, 1) == normal_form(ctx, "1").scale(pow(q, i0, p))
    for i0 in range(3):
        ctx = ctx_of(7, 1, 1, 2, "%d:1" % i0, True)
        assert X_element(ctx, 2) == normal_form(ctx, "1").scale(i0) + normal_form(ctx, "f1")


def test_e_projector():
    ctx = ctx_of(5, 1, 2, 2)
    assert e_projector(ctx, 1) == normal_form(ctx, "1")
    ctx = ctx_of(5, 2, 2, 2)
    half = pow(2, 3, 5)
    e1 = e_projector(ctx, 1)
    assert e1 == (normal_form(ctx, "1") + normal_form(ctx, "t1*t2")).scale(half)
    assert e1 * e1 == e1


def test_regular_rep_is_homomorphism():
    ctx = ctx_of(5, 2, 2, 2)
    a = normal_form(ctx, "g1*X1*t2")
    b = normal_form(ctx, "t1*g1*X2")
    assert ((a.matrix() @ b.matrix()) % 5 == (a * b).matrix()).all()
    assert (normal_form(ctx, "1").matrix() == la.eye(ctx.dim)).all()
    t1 = ctx_of(5, 2, 2, 1).t(1)
    assert not (t1 == la.eye(2)).all() and (la.matpow(t1, 2, 5) == la.eye(2)).all()


@pytest.mark.parametrize("args", [(5, 2, 2, 3), (7, 3, 1, 2, "0:1", True), (13, 2, 3, 2, "0:1,2:1")])
def test_associativity(args):
    assert associativity_check(ctx_of(*args), samples=200, seed=1).ok


words = st.lists(st.one_of(st.tuples(st.just("g"), st.integers(1, 2)),
                           st.tuples(st.just("t"), st.integers(1, 3))), max_size=8)


@pytest.mark.parametrize("p,d,q,deg", [(5, 2, 2, False), (7, 3, 1, True), (13, 3, 3, False)])
@given(word=words)
def test_level_one_matches_finite_oracle(p, d, q, deg, word):
    # at level one X_1 is a scalar and the algebra is the finite Yokonuma-Hecke algebra
    ctx = ctx_of(p, d, q, 3, "0:1", deg)
    oracle = FiniteYHOracle(p, d, q, 3, deg)
    ours = coords(ctx, "*".join("%s%d" % w for w in word) or "1")
    # convert g_w t^v to t^{w.v} g_w
    conv = {}
    for (w, u, v), c in ours.items():
        conv[(sg.act(w, v), w)] = c
    assert conv == oracle.evaluate(word)


def test_d1_matches_iwahori_hecke():
    p, q, n = 13, 3, 3
    ctx = ctx_of(p, 1, q, n)
    H = IwahoriHeckeOracle(p, q, n)
    for w in H.perms:
        F = {w: 1}
        for a in range(1, n):
            ref = H.lmul(a, F)
            got = normal_form(ctx, "g%d*%s" % (a, "*".join("g%d" % b for b in sg.canonical_word(w)) or "1"))
            assert {ctx.labels[i][0]: c for i, c in got.coeffs.items()} == ref


def test_divided_difference():
    # (u^a v^b - u^b v^a) = (v - u) * dd, checked by expanding polynomials
    for a, b in product(range(4), repeat=2):
        dd = divided_difference(a, b)
        poly = {}
        for (x, y), c in dd.items():
            poly[(x, y + 1)] = poly.get((x, y + 1), 0) + c
            poly[(x + 1, y)] = poly.get((x + 1, y), 0) - c
        target = {}
        target[(a, b)] = target.get((a, b), 0) + 1
        target[(b, a)] = target.get((b, a), 0) - 1
        clean = lambda P: {k: v for k, v in P.items() if v}
        assert clean(poly) == clean(target)


def test_parse_word_and_errors():
    assert parse_word("g1*t2^-1*X1") == [("g", 1, 1), ("t", 2, -1), ("X", 1, 1)]
    ctx = ctx_of(5, 2, 2, 2)
    with pytest.raises(ConfigError):
        word_matrix(ctx, "g2")
    with pytest.raises(ConfigError):
        parse_word("h1")
    assert (la.matmul(word_matrix(ctx, "X1^-1"), ctx.X(1), 5) == la.eye(8)).all()
    with pytest.raises(ConfigError):
        YContext(make_field_cfg(5, 2, 2), 2, Weight.parse("0:1"), degenerate=True)
    with pytest.raises(InfeasibleSize):
        YContext(make_field_cfg(5, 2, 2), 6, Weight.parse("0:1"), max_dim=100)


def test_mixed_contexts_rejected():
    a = normal_form(ctx_of(5, 2, 2, 2), "g1")
    b = normal_form(ctx_of(13, 2, 3, 2), "g1")
    with pytest.raises(ValueError):
        a * b
