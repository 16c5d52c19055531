import pytest
from hypothesis import given, strategies as st

from yhklr.errors import BadModulus, ConfigError, NoPrimitiveRoot
from yhklr.scalars import Weight, make_field_cfg, quantum_char

PRIMES = [3, 5, 7, 11, 13, 17, 19]


def brute_order(a, p):
    return next(m for m in range(1, p) if pow(a, m, p) == 1)


@pytest.mark.parametrize("p,d,q,xi,e,sq", [
    (5, 2, 2, 4, 4, None),
    (7, 3, 1, 2, 7, 1),
    (13, 2, 3, 12, 3, 4),
])
def test_make_field_cfg_examples(p, d, q, xi, e, sq):
    cfg = make_field_cfg(p, d, q)
    assert (cfg.xi, cfg.e) == (xi, e)
    if sq is None:
        assert cfg.sqrt_q is None
    else:
        assert cfg.sqrt_q * cfg.sqrt_q % p == q


@pytest.mark.parametrize("q,p,e", [(1, 5, 5), (2, 5, 4), (3, 13, 3)])
def test_quantum_char_examples(q, p, e):
    assert quantum_char(q, p) == e


def test_errors():
    with pytest.raises(NoPrimitiveRoot):
        make_field_cfg(5, 3, 2)
    with pytest.raises(BadModulus):
        make_field_cfg(9, 2, 2)
    with pytest.raises(BadModulus):
        make_field_cfg(3, 3, 2)
    with pytest.raises(ConfigError):
        make_field_cfg(5, 2, 5)


@given(st.sampled_from(PRIMES), st.integers(1, 100))
def test_quantum_char_is_order(p, q):
    q %= p
    if q == 0:
        return
    e = quantum_char(q, p)
    if q == 1:
        assert e == p
    else:
        assert e == brute_order(q, p)
        assert pow(q, e, p) == 1


@given(st.sampled_from(PRIMES), st.integers(1, 6))
def test_xi_distinct_powers(p, d):
    if (p - 1) % d:
        return
    cfg = make_field_cfg(p, d, 2 % p or 1)
    assert len({pow(cfg.xi, j, p) for j in range(d)}) == d
    # smallest primitive root
    assert all(brute_order(x, p) != d for x in range(1, cfg.xi))


def test_weight_parse():
    w = Weight.parse("0:1,2:2", e=4)
    assert w.level == 3 and w[0] == 1 and w[2] == 2 and w[1] == 0
    assert w.residues() == [0, 2, 2]
    assert Weight.parse("5:1", e=4)[1] == 1
    with pytest.raises(ConfigError):
        Weight.parse("0:0")
    with pytest.raises(ConfigError):
        Weight.parse("a:b")
