"""End-to-end acceptance checks, one marked test (or parametrized group) per criterion."""
import random
import time
from itertools import product
from math import factorial, prod

import pytest

from yhklr import klr_model as km
from yhklr import symmetric_groups as sg
from yhklr.decomp import cyclotomic_decompose, diagram_check, level_one_vanishing
from yhklr.klr_model import KlrModel, grading_audit, roundtrip_check
from yhklr.klr_symbolic import (KlrElement, Straightener, decomp_maps, e_of_tuple, generator,
                                psi_pi, psi_pi_inverse, vertices_of)
from yhklr.quiver import cyclic_quiver
from yhklr.scalars import Weight, make_field_cfg
from yhklr.yokonuma import build_context, check_presentation, closure_rank

MAIN = [(5, 2, 2, 3), (13, 2, 3, 3)]
_cache = {}


def ctx(p, d, q, n, weight="0:1"):
    key = (p, d, q, n, weight)
    if key not in _cache:
        cfg = make_field_cfg(p, d, q)
        _cache[key] = build_context(cfg, n, Weight.parse(weight, cfg.e), q == 1)
    return _cache[key]


def model(*args):
    key = ("model",) + args
    if key not in _cache:
        _cache[key] = KlrModel(ctx(*args))
    return _cache[key]


@pytest.mark.criterion(1, "presentation suite at dim 48")
@pytest.mark.parametrize("args", MAIN)
def test_presentation(args):
    t0 = time.time()
    Y = ctx(*args)
    rep = check_presentation(Y)
    assert Y.dim == 48
    assert rep.ok, rep.first_failure()
    assert time.time() - t0 < 60


@pytest.mark.criterion(2, "rank equals l^n d^n n!")
@pytest.mark.parametrize("args,level", [(MAIN[0], 1), (MAIN[1], 1), ((5, 1, 2, 4, "0:1,1:1"), 2)])
def test_dimension_identity(args, level):
    Y = ctx(*args)
    n, d = Y.n, Y.d
    expected = level ** n * d ** n * factorial(n)
    assert Y.independent
    assert closure_rank(Y) == Y.dim == expected
    if n == 4:
        assert expected == 384


@pytest.mark.criterion(3, "idempotent suite")
@pytest.mark.parametrize("args", MAIN)
def test_idempotents(args):
    m = model(*args)
    rep = km.check_idempotents(m.idem, m.data)
    names = {s.name for s in rep.suites}
    assert {"sum of e(k) is 1", "e(k) e(k') = delta e(k)", "e(alpha) central",
            "e(i) e(j) = e(i,j)"} <= names
    assert rep.ok, rep.first_failure()


@pytest.mark.criterion(4, "KLR relations and reconstructed Yokonuma-Hecke relations")
@pytest.mark.parametrize("args", MAIN)
def test_klr_and_yh_relations(args):
    t0 = time.time()
    m = model(*args)
    rep = km.verify_klr_relations(m)
    km.lemma_checks(m, rep)
    rep.extend(km.verify_yh_relations(m))
    assert rep.ok, rep.first_failure()
    assert time.time() - t0 < 120


@pytest.mark.criterion(5, "round trip sigma o rho and rho o sigma")
@pytest.mark.parametrize("args", MAIN)
def test_round_trip(args):
    rep = roundtrip_check(ctx(*args), model=model(*args))
    assert rep.ok, rep.first_failure()
    assert len(rep.suites) >= 2


@pytest.mark.criterion(6, "degenerate suite at p=7, d=2, n=2")
def test_degenerate():
    t0 = time.time()
    args = (7, 2, 1, 2)
    Y = ctx(*args)
    assert Y.degenerate and Y.cfg.e == 7
    m = model(*args)
    rep = check_presentation(Y)
    km.verify_klr_relations(m, rep)
    km.lemma_checks(m, rep)
    rep.extend(km.verify_yh_relations(m))
    rep.extend(roundtrip_check(Y, model=m))
    names = {s.name for s in rep.suites}
    assert "eigenvalues of x_a lie in I" in names
    assert rep.ok, rep.first_failure()
    assert time.time() - t0 < 60


@pytest.mark.criterion(7, "grading audit")
@pytest.mark.parametrize("args", MAIN + [(7, 2, 1, 2)])
def test_grading(args):
    rep = grading_audit(model(*args))
    assert rep.ok, rep.first_failure()


# criterion 8: the symbolic engine ----------------------------------------

def _engine(e, d, n):
    return Straightener(cyclic_quiver(e, d), n)


def _random_basis(rng, E, left=None):
    w = tuple(rng.sample(range(1, E.n + 1), E.n))
    r = tuple(rng.randrange(3) for _ in range(E.n))
    k = tuple(rng.choice(E.spec.vertices) for _ in range(E.n)) if left is None \
        else sg.act(sg.inverse(w), left)
    return KlrElement.basis(E, w, r, k), k


@pytest.mark.criterion(8, "symbolic engine")
def test_symbolic_engine():
    t0 = time.time()
    rng = random.Random(7)
    checked = 0
    for E in (_engine(2, 2, 3), _engine(4, 1, 3), _engine(1, 3, 3), _engine(2, 1, 2)):
        assert len(E.spec.vertices) <= 4
        for _ in range(130):
            c, kc = _random_basis(rng, E)
            b, kb = _random_basis(rng, E, left=kc if rng.random() < 0.8 else None)
            a, _ = _random_basis(rng, E, left=kb if rng.random() < 0.8 else None)
            assert (a * b) * c == a * (b * c)
            checked += 1
    assert checked >= 500

    # reduced-word independence and inversion, every t for n <= 4, d <= 3
    for n, d in product(range(1, 5), range(1, 4)):
        E = _engine(1 if d == 3 else 2, d, n)
        for t in product(range(1, d + 1), repeat=n):
            pi = sg.min_coset_rep(t, d)
            ref, ref_inv = psi_pi(E, t), psi_pi_inverse(E, t)
            assert all(psi_pi(E, t, w) == ref for w in sg.all_reduced_words(pi))
            assert all(psi_pi_inverse(E, t, w) == ref_inv
                       for w in sg.all_reduced_words(sg.inverse(pi)))
            tl = sg.shape(t, d).t_lambda()
            assert ref_inv * ref == e_of_tuple(E, t)
            assert ref * ref_inv == e_of_tuple(E, tl)

    # y through psi_pi, and psi_a across and within cosets, every t for n <= 3
    for n, d in product(range(1, 4), range(1, 4)):
        E = _engine(1 if d == 3 else 2, d, n)
        for t in product(range(1, d + 1), repeat=n):
            pi = sg.min_coset_rep(t, d)
            pinv = sg.inverse(pi)
            tl = sg.shape(t, d).t_lambda()
            P, Pinv, et = psi_pi(E, t), psi_pi_inverse(E, t), e_of_tuple(E, t)
            for a in range(1, n + 1):
                ya = generator(E, "y", a)
                assert ya * P == P * generator(E, "y", pinv[a - 1]) * et
                assert ya * Pinv == Pinv * generator(E, "y", pi[a - 1]) * e_of_tuple(E, tl)
            for a in range(1, n):
                psa = generator(E, "psi", a)
                if t[a - 1] != t[a]:
                    assert Pinv * psi_pi(E, sg.swap(t, a)) == et * psa
                else:
                    w = sg.rmul_s(pi, a)
                    forms = set()
                    for word in sg.all_reduced_words(w):
                        x = KlrElement(E)
                        for k in vertices_of(E.spec, t):
                            x = x + E.straighten([("psi", b) for b in word], k)
                        forms.add(x)
                    assert len(forms) == 1
                    assert P * psa * et == generator(E, "psi", pi[a - 1]) * P
    assert time.time() - t0 < 300


@pytest.mark.criterion(9, "decomposition into matrix algebras")
@pytest.mark.parametrize("n,total", [(2, 8), (3, 48)])
def test_decomposition(n, total):
    Y = ctx(5, 2, 2, n)
    blocks, rep = cyclotomic_decompose(Y)
    assert rep.ok, rep.first_failure()
    lhs = sum(sg.m_lambda(B.lam) ** 2 * prod(B.factor_dims) for B in blocks.values())
    assert lhs == total == Y.dim
    psi_phi = [s for s in rep.suites if s.name.startswith("Phi_lambda(Psi_lambda")]
    assert psi_phi and all(s.status == "pass" for s in psi_phi)
    # the symbolic side (non-cyclotomic, two residues to stay within the vertex cap)
    E = _engine(2, 2, n)
    for lam in sg.compositions(n, 2):
        maps = decomp_maps(E, lam)
        eb = maps.e_lam
        for kind, a in [("y", b) for b in range(1, n + 1)] + [("psi", b) for b in range(1, n)]:
            x = eb * generator(E, kind, a) * eb
            assert maps.Phi(maps.Psi(x)) == x


@pytest.mark.criterion(10, "BK-tilde equals Phi o BK o JPA")
def test_diagram():
    t0 = time.time()
    Y = ctx(13, 2, 3, 2)
    assert Y.cfg.sqrt_q == 4
    rep = diagram_check(Y, KlrModel(Y, symmetric_f=True))
    assert rep.meta["diagram"]["comparable"]
    assert rep.suites and all(s.status == "pass" for s in rep.suites)
    assert time.time() - t0 < 60


@pytest.mark.criterion(11, "level-one weight forces constant j-component")
@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("j0", [1, 2])
def test_level_one(n, j0):
    rep = level_one_vanishing(make_field_cfg(5, 2, 2), n, 0, j0)
    assert rep.ok, rep.first_failure()
    surv = rep.meta["level_one"]["surviving"]
    assert surv and all(j == j0 for k in surv for _, j in k)


@pytest.mark.criterion(12, "equal (d, e, weight) profiles give equal results")
def test_equal_profiles():
    order = next(k for k in range(1, 13) if pow(5, k, 13) == 1)
    assert order == 4
    runs = []
    for p, q in [(5, 2), (13, 5)]:
        Y = ctx(p, 2, q, 3)
        assert Y.cfg.e == 4
        m = model(p, 2, q, 3)
        rep = check_presentation(Y)
        km.check_idempotents(m.idem, m.data, rep)
        km.verify_klr_relations(m, rep)
        rep.extend(km.verify_yh_relations(m))
        rep.extend(roundtrip_check(Y, model=m))
        assert rep.ok, rep.first_failure()
        runs.append((Y.dim, closure_rank(Y), len(m.ks)))
    assert runs[0] == runs[1]
