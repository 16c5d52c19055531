"""Exact dense linear algebra over F_p on int64 numpy arrays.

Matrices are plain ``np.ndarray`` of dtype int64 with entries in [0, p).
Products go through float64 BLAS whenever the accumulated dot products stay
below 2^53, which covers every desk-scale prime.
"""
from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import DuplicateEigenvalue, NotNilpotent, SingularInCorner, SpectrumIncomplete

_EXACT = 2 ** 53


def reduce(A, p: int) -> np.ndarray:
    return np.mod(np.asarray(A, dtype=np.int64), p)


def eye(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def matmul(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    k = A.shape[-1]
    if k * (p - 1) ** 2 < _EXACT:
        C = np.rint(A.astype(np.float64) @ B.astype(np.float64))
        return np.mod(C.astype(np.int64), p)
    # chunk the inner dimension so int64 never overflows
    step = max(1, (2 ** 62) // ((p - 1) ** 2))
    C = np.zeros(A.shape[:-1] + B.shape[1:], dtype=np.int64)
    for s in range(0, k, step):
        C = np.mod(C + A[..., s:s + step] @ B[s:s + step], p)
    return C


def matprod(mats: Iterable[np.ndarray], p: int) -> np.ndarray:
    it = iter(mats)
    out = next(it)
    for M in it:
        out = matmul(out, M, p)
    return out


def matpow(M: np.ndarray, k: int, p: int) -> np.ndarray:
    if k < 0:
        raise ValueError("negative exponent; invert first")
    out = eye(M.shape[0])
    base = M
    while k:
        if k & 1:
            out = matmul(out, base, p)
        k >>= 1
        if k:
            base = matmul(base, base, p)
    return out


def rref(A: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    R = reduce(A, p).copy()
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        R[r] = R[r] * pow(int(R[r, c]), p - 2, p) % p
        col = R[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            R[hit, c:] = (R[hit, c:] - np.outer(col[hit], R[r, c:])) % p
        pivots.append(c)
        r += 1
    return R, pivots


def rank(A: np.ndarray, p: int) -> int:
    A = np.asarray(A)
    if A.shape[0] > A.shape[1]:
        A = A.T
    return len(rref(A, p)[1])


def inverse(A: np.ndarray, p: int) -> np.ndarray:
    n = A.shape[0]
    R, piv = rref(np.hstack([reduce(A, p), eye(n)]), p)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular mod %d" % p)
    return R[:, n:]


def solve(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray | None:
    """One solution X of A X = B, or None when inconsistent."""
    B2 = B.reshape(B.shape[0], -1)
    m = A.shape[1]
    R, piv = rref(np.hstack([reduce(A, p), reduce(B2, p)]), p)
    if any(c >= m for c in piv):
        return None
    X = np.zeros((m, B2.shape[1]), dtype=np.int64)
    for r, c in enumerate(piv):
        X[c] = R[r, m:]
    return X.reshape((m,) + B.shape[1:])


def row_basis(A: np.ndarray, p: int) -> np.ndarray:
    R, piv = rref(A, p)
    return R[: len(piv)]


def nilpotency_index(M: np.ndarray, p: int) -> int:
    n = M.shape[0]
    P = reduce(M, p)
    for m in range(1, n + 2):
        if not P.any():
            return m
        P = matmul(P, M, p)
    raise NotNilpotent("matrix is not nilpotent")


# --- polynomials over F_p, coefficient lists low -> high -----------------

def poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def poly_pow(a: Sequence[int], k: int, p: int) -> list[int]:
    out = [1]
    for _ in range(k):
        out = poly_mul(out, a, p)
    return out


def series_inverse(a: Sequence[int], prec: int, p: int) -> list[int]:
    """Inverse of a power series with a[0] != 0, modulo Z^prec."""
    a = list(a) + [0] * prec
    inv0 = pow(a[0] % p, p - 2, p)
    out = [inv0] + [0] * (prec - 1)
    for m in range(1, prec):
        acc = sum(a[k] * out[m - k] for k in range(1, m + 1)) % p
        out[m] = (-acc * inv0) % p
    return out


def poly_eval(coeffs: Sequence[int], M: np.ndarray, p: int, shift: int = 0) -> np.ndarray:
    """Horner evaluation of sum c_m (M - shift)^m."""
    n = M.shape[0]
    B = reduce(M - shift * eye(n), p)
    out = np.zeros_like(B)
    for c in reversed(list(coeffs)):
        out = matmul(out, B, p)
        out[np.diag_indices(n)] = (out[np.diag_indices(n)] + c) % p
    return out


def crt_idempotents(spectrum: Sequence[int], N: int, p: int) -> dict[int, tuple[list[int], list[int]]]:
    """For each s: (A_s in powers of X - s, R_s in powers of X) with A_s R_s = 1 mod (X-s)^N."""
    out = {}
    for s in spectrum:
        R = [1]
        Rz = [1]
        for s2 in spectrum:
            if s2 == s:
                continue
            R = poly_mul(R, poly_pow([(-s2) % p, 1], N, p), p)
            Rz = poly_mul(Rz, poly_pow([(s - s2) % p, 1], N, p), p)[:N]
        out[s] = (series_inverse(Rz, N, p), R)
    return out


def generalized_eigenprojections(M: np.ndarray, spectrum: Sequence[int], p: int,
                                 N: int | None = None, escalate: bool = True) -> dict[int, np.ndarray]:
    """Projections onto the generalized eigenspaces of M, as polynomials in M.

    Raises SpectrumIncomplete when prod_s (M - s)^N != 0 even after raising N
    up to the dimension (if ``escalate``).
    """
    spectrum = [int(s) % p for s in spectrum]
    if len(set(spectrum)) != len(spectrum):
        raise DuplicateEigenvalue("spectrum has repeated values mod %d" % p)
    n = M.shape[0]
    N = N or n
    while True:
        factors = {s: matpow(reduce(M - s * eye(n), p), N, p) for s in spectrum}
        if not matprod(list(factors.values()) + [eye(n)], p).any():
            break
        if not escalate or N >= n:
            raise SpectrumIncomplete("eigenvalues outside the supplied spectrum")
        N = min(2 * N, n)
    out = {}
    for s, (A, _) in crt_idempotents(spectrum, N, p).items():
        R = matprod([factors[s2] for s2 in spectrum if s2 != s] + [eye(n)], p)
        out[s] = matmul(poly_eval(A, M, p, shift=s), R, p)
    return out


def corner_inverse(A: np.ndarray, E: np.ndarray, p: int) -> np.ndarray:
    """B with AB = BA = E inside the corner algebra E End E."""
    n = A.shape[0]
    comp = reduce(eye(n) - E, p)
    try:
        return reduce(inverse(reduce(A + comp, p), p) - comp, p)
    except ZeroDivisionError:
        raise SingularInCorner("element is not invertible in the corner") from None


def to_triplets(M: np.ndarray) -> list[tuple[int, int, int]]:
    """Sparse (row, col, value) view without explicit zeros."""
    r, c = np.nonzero(M)
    return [(int(a), int(b), int(M[a, b])) for a, b in zip(r, c)]


def from_triplets(shape: tuple[int, int], triplets: Iterable[Sequence[int]], p: int) -> np.ndarray:
    M = np.zeros(shape, dtype=np.int64)
    for r, c, v in triplets:
        M[r, c] = (M[r, c] + v) % p
    return M


class Echelon:
    """Incrementally grown row space kept in reduced echelon form."""

    def __init__(self, dim: int, p: int):
        self.p = p
        self.rows = np.zeros((0, dim), dtype=np.int64)
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, v: np.ndarray) -> np.ndarray:
        v = np.asarray(v, dtype=np.int64) % self.p
        if not self.pivots:
            return v
        return (v - v[self.pivots] @ self.rows) % self.p

    def add(self, v: np.ndarray) -> bool:
        """Insert v; return True when it enlarged the span."""
        r = self.reduce(v)
        nz = np.flatnonzero(r)
        if not nz.size:
            return False
        c = int(nz[0])
        r = r * pow(int(r[c]), -1, self.p) % self.p
        if self.pivots:
            self.rows = (self.rows - np.outer(self.rows[:, c], r)) % self.p
        self.rows = np.vstack([self.rows, r[None, :]])
        self.pivots.append(c)
        return True


def span_closure(mats: Sequence[np.ndarray], start: np.ndarray, p: int) -> int:
    """Dimension of the smallest subspace containing ``start`` stable under ``mats``."""
    return closure_basis(mats, [start], p).rank


def closure_basis(mats: Sequence[np.ndarray], starts: Iterable[np.ndarray], p: int) -> Echelon:
    """Echelon basis of the smallest subspace containing ``starts`` stable under ``mats``."""
    starts = [np.asarray(v) % p for v in starts]
    ech = Echelon(len(starts[0]), p)
    frontier = [v for v in starts if ech.add(v)]
    stack = np.stack([m % p for m in mats]) if len(mats) else None
    while frontier and stack is not None:
        new = []
        for v in frontier:
            for w in (stack @ v) % p:
                if ech.add(w):
                    new.append(w)
        frontier = new
    return ech
