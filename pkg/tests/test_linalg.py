import numpy as np
import pytest
from hypothesis import given, strategies as st

from yhklr import linalg as la
from yhklr.errors import DuplicateEigenvalue, NotNilpotent, SingularInCorner, SpectrumIncomplete


def mats(n, p):
    return st.lists(st.integers(0, p - 1), min_size=n * n, max_size=n * n).map(
        lambda xs: np.array(xs, dtype=np.int64).reshape(n, n))


def naive_mul(A, B, p):
    return np.array([[sum(int(A[i, k]) * int(B[k, j]) for k in range(A.shape[1])) % p
                      for j in range(B.shape[1])] for i in range(A.shape[0])], dtype=np.int64)


@given(mats(4, 13), mats(4, 13))
def test_matmul_matches_naive(A, B):
    assert (la.matmul(A, B, 13) == naive_mul(A, B, 13)).all()


def test_matmul_large_prime_chunked():
    p = 2 ** 31 - 1
    rng = np.random.default_rng(0)
    A = rng.integers(0, p, (5, 5))
    B = rng.integers(0, p, (5, 5))
    assert (la.matmul(A, B, p) == naive_mul(A, B, p)).all()


@given(mats(4, 7))
def test_inverse_or_singular(A):
    r = la.rank(A, 7)
    if r == 4:
        Ai = la.inverse(A, 7)
        assert (la.matmul(A, Ai, 7) == la.eye(4)).all()
    else:
        with pytest.raises(ZeroDivisionError):
            la.inverse(A, 7)


@given(mats(3, 5), st.lists(st.integers(0, 4), min_size=3, max_size=3))
def test_solve(A, x):
    b = la.matmul(A, np.array(x, dtype=np.int64).reshape(3, 1), 5)
    sol = la.solve(A, b, 5)
    assert sol is not None and (la.matmul(A, sol, 5) == b).all()


def test_eigenprojections_examples():
    p = 5
    P = la.generalized_eigenprojections(np.diag([1, 2]), [1, 2], p, N=1)
    assert (P[1] == np.diag([1, 0])).all() and (P[2] == np.diag([0, 1])).all()
    J = np.array([[2, 1], [0, 2]])
    assert (la.generalized_eigenprojections(J, [2], p, N=2)[2] == la.eye(2)).all()


def test_eigenprojections_companion():
    p = 5
    # (X-1)(X-2)^2 = X^3 - 5X^2 + 8X - 4 = X^3 + 3X + 1 mod 5
    c = la.poly_mul([-1 % p, 1], la.poly_pow([-2 % p, 1], 2, p), p)
    C = np.zeros((3, 3), dtype=np.int64)
    C[1, 0] = C[2, 1] = 1
    C[:, 2] = [(-x) % p for x in c[:3]]
    P = la.generalized_eigenprojections(C, [1, 2], p, N=2)
    I = la.eye(3)
    assert ((P[1] + P[2]) % p == I).all()
    for s, Ps in P.items():
        assert (la.matmul(Ps, Ps, p) == Ps).all()
        assert (la.matmul(C, Ps, p) == la.matmul(Ps, C, p)).all()
        nil = la.matmul((C - s * I) % p, Ps, p)
        assert not la.matpow(nil, 3, p).any()
    assert not la.matmul(P[1], P[2], p).any()
    assert la.rank(P[1], p) == 1 and la.rank(P[2], p) == 2


def test_eigenprojections_errors():
    with pytest.raises(DuplicateEigenvalue):
        la.generalized_eigenprojections(la.eye(2), [1, 6], 5)
    with pytest.raises(SpectrumIncomplete):
        la.generalized_eigenprojections(np.diag([1, 3]), [1, 2], 5)


def test_eigenprojections_escalate_N():
    # Jordan block of size 3 with too small a starting bound
    J = np.array([[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    P = la.generalized_eigenprojections(J, [1, 2], 7, N=1)
    assert (P[1] == la.eye(3)).all() and not P[2].any()
    with pytest.raises(SpectrumIncomplete):
        la.generalized_eigenprojections(J, [1, 2], 7, N=1, escalate=False)


def test_corner_inverse():
    p = 7
    E = np.diag([1, 1, 0])
    assert (la.corner_inverse(E, E, p) == E).all()
    A = np.array([[2, 3], [1, 1]])
    assert (la.corner_inverse(A, la.eye(2), p) == la.inverse(A, p)).all()
    # (1 - N) E with N nilpotent in the corner
    N = np.array([[0, 1, 0], [0, 0, 0], [0, 0, 0]])
    A = (E - la.matmul(N, E, p)) % p
    geo = (E + N + la.matmul(N, N, p)) % p
    B = la.corner_inverse(A, E, p)
    assert (B == geo).all()
    assert (la.matmul(A, B, p) == E).all() and (la.matmul(B, A, p) == E).all()
    with pytest.raises(SingularInCorner):
        la.corner_inverse(np.diag([1, 0, 0]), E, p)


def test_nilpotency_index():
    assert la.nilpotency_index(np.zeros((2, 2), dtype=np.int64), 5) == 1
    U = np.diag([1, 1], k=1)
    assert la.nilpotency_index(U, 5) == 3
    with pytest.raises(NotNilpotent):
        la.nilpotency_index(la.eye(2), 5)


def test_series_inverse():
    p = 11
    a = [3, 4, 5]
    b = la.series_inverse(a, 6, p)
    assert la.poly_mul(a, b, p)[:6] == [1, 0, 0, 0, 0, 0]


def test_triplets_roundtrip():
    M = np.array([[0, 3], [4, 0]])
    assert (la.from_triplets((2, 2), la.to_triplets(M), 5) == M).all()
