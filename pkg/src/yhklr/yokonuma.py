"""Cyclotomic Yokonuma-Hecke algebras and their degenerate versions.

The algebra on n strands is built as a tower: Y_{m+1} is a free left
Y_m-module with basis X_{m+1}^c t_{m+1}^v g_m g_{m-1} ... g_j, so its left
regular representation is assembled from that of Y_m plus the actions of
t_{m+1}, g_m and X_{m+1}.  The g_m action uses the Bernstein-type rule

    g_m p(X_m, X_{m+1}) = (s p) g_m + c e_m D(p)

(c = q - 1 and D(p) = X_{m+1} (p - s p)/(X_{m+1} - X_m) in the
non-degenerate case, c = 1 and D(p) = (p - s p)/(x_{m+1} - x_m) otherwise),
and products of t's and g's are normalised in the finite Yokonuma-Hecke
algebra.  Everything is finally rewritten in the basis g_w X^u t^v.

Generators are keyed ('g', a), ('t', a), ('X', a); in the degenerate case
these stand for f_a, t_a, x_a.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from . import linalg as la
from . import symmetric_groups as sg
from .errors import ConfigError, InfeasibleSize
from .report import Report
from .scalars import FieldCfg, Weight

MAX_DIM = 4096

Key = tuple  # ('g', a) | ('t', a) | ('X', a)


# --------------------------------------------------------------------------
# finite Yokonuma-Hecke algebra: elements are {(v, w): coeff} meaning t^v g_w

class FiniteYH:
    def __init__(self, cfg: FieldCfg, n: int, degenerate: bool):
        self.cfg, self.n, self.degenerate = cfg, n, degenerate
        self.p, self.d = cfg.p, cfg.d
        self.inv_d = cfg.inv(cfg.d)

    def one(self) -> dict:
        return {((0,) * self.n, sg.identity(self.n)): 1}

    def _add(self, out: dict, key, c: int) -> None:
        c = (out.get(key, 0) + c) % self.p
        if c:
            out[key] = c
        else:
            out.pop(key, None)

    def lmul_t(self, a: int, F: dict, k: int = 1) -> dict:
        out: dict = {}
        for (v, w), c in F.items():
            v = list(v)
            v[a - 1] = (v[a - 1] + k) % self.d
            self._add(out, (tuple(v), w), c)
        return out

    def lmul_e(self, a: int, F: dict) -> dict:
        out: dict = {}
        for (v, w), c in F.items():
            for j in range(self.d):
                v2 = list(v)
                v2[a - 1] = (v2[a - 1] + j) % self.d
                v2[a] = (v2[a] - j) % self.d
                self._add(out, (tuple(v2), w), c * self.inv_d)
        return out

    def lmul_g(self, a: int, F: dict) -> dict:
        p, q = self.p, self.cfg.q
        out: dict = {}
        for (v, w), c in F.items():
            v2 = sg.swap(v, a)
            sw = sg.lmul_s(a, w)
            if w.index(a) < w.index(a + 1):
                self._add(out, (v2, sw), c)
            elif self.degenerate:
                self._add(out, (v2, sw), c)
            else:
                self._add(out, (v2, sw), c * q)
                for j in range(self.d):
                    v3 = list(v2)
                    v3[a - 1] = (v3[a - 1] + j) % self.d
                    v3[a] = (v3[a] - j) % self.d
                    self._add(out, (tuple(v3), w), c * (q - 1) * self.inv_d)
        return out

    def word(self, letters: Sequence[tuple], F: dict | None = None) -> dict:
        """Product of letters ('t', a, k) / ('g', a) / ('e', a) times F."""
        F = self.one() if F is None else F
        for letter in reversed(letters):
            if letter[0] == "t":
                F = self.lmul_t(letter[1], F, letter[2] if len(letter) > 2 else 1)
            elif letter[0] == "g":
                F = self.lmul_g(letter[1], F)
            else:
                F = self.lmul_e(letter[1], F)
        return F


# --------------------------------------------------------------------------
# difference operator on monomials u^a v^b (u = X_m, v = X_{m+1})

def divided_difference(a: int, b: int) -> dict[tuple[int, int], int]:
    """(u^a v^b - u^b v^a) / (v - u) as {(exp_u, exp_v): integer coeff}."""
    out: dict[tuple[int, int], int] = {}
    if a < b:
        for m in range(b - a):
            key = (a + b - a - 1 - m, a + m)
            out[key] = out.get(key, 0) + 1
    elif a > b:
        for m in range(a - b):
            key = (b + a - b - 1 - m, b + m)
            out[key] = out.get(key, 0) - 1
    return out


def bernstein_correction(a: int, b: int, degenerate: bool) -> dict[tuple[int, int], int]:
    dd = divided_difference(a, b)
    if degenerate:
        return dd
    return {(eu, ev + 1): c for (eu, ev), c in dd.items()}


# --------------------------------------------------------------------------
# the tower

@dataclass
class _Level:
    m: int
    D: int
    loc: int
    gens: dict = field(default_factory=dict)
    unit: int = 0
    _basis_L: dict = field(default_factory=dict)
    _fin: dict = field(default_factory=dict)
    _xpow: list = field(default_factory=list)


class Tower:
    def __init__(self, cfg: FieldCfg, n: int, weight: Weight, degenerate: bool):
        self.cfg, self.n, self.weight, self.degenerate = cfg, n, weight, degenerate
        self.p, self.d, self.l = cfg.p, cfg.d, weight.level
        roots = [i % self.p if degenerate else cfg.qpow(i) for i in weight.residues()]
        poly = [1]
        for r in roots:
            poly = la.poly_mul(poly, [(-r) % self.p, 1], self.p)
        self.cyclo = poly            # monic, low -> high
        self.levels = [_Level(0, 1, 1)]
        for m in range(n):
            self.levels.append(self._grow(self.levels[-1]))

    # indices ---------------------------------------------------------
    def loc_index(self, m: int, c: int, v: int, j: int) -> int:
        return (c * self.d + v) * m + (j - 1)

    def decode(self, lev: _Level, idx: int) -> tuple[int, int, int, int]:
        beta, loc = divmod(idx, lev.loc)
        cv, j0 = divmod(loc, lev.m)
        c, v = divmod(cv, self.d)
        return beta, c, v, j0 + 1

    # cached pieces ---------------------------------------------------
    def basis_matrix(self, m: int, idx: int) -> np.ndarray:
        lev = self.levels[m]
        if m == 0:
            return la.eye(1)
        if idx in lev._basis_L:
            return lev._basis_L[idx]
        beta, c, v, j = self.decode(lev, idx)
        L = np.kron(self.basis_matrix(m - 1, beta), la.eye(lev.loc))
        for M in ([lev.gens[("X", m)]] * c + [lev.gens[("t", m)]] * v
                  + [lev.gens[("g", a)] for a in range(m - 1, j - 1, -1)]):
            L = la.matmul(L, M, self.p)
        lev._basis_L[idx] = L
        return L

    def xpow(self, m: int, a: int) -> np.ndarray:
        lev = self.levels[m]
        while len(lev._xpow) <= a:
            if not lev._xpow:
                lev._xpow.append(la.eye(lev.D))
            else:
                lev._xpow.append(la.matmul(lev.gens[("X", m)], lev._xpow[-1], self.p))
        return lev._xpow[a]

    def fin_vec(self, m: int, v: tuple, w: tuple) -> np.ndarray:
        """Vector of t^v g_w in Y_m (w in S_m)."""
        lev = self.levels[m]
        key = (v, w)
        if key not in lev._fin:
            x = np.zeros(lev.D, dtype=np.int64)
            x[lev.unit] = 1
            for a in reversed(sg.canonical_word(w)):
                x = lev.gens[("g", a)] @ x % self.p
            for a, va in enumerate(v, 1):
                for _ in range(va):
                    x = lev.gens[("t", a)] @ x % self.p
            lev._fin[key] = x
        return lev._fin[key]

    # building --------------------------------------------------------
    def _grow(self, low: _Level) -> _Level:
        m = low.m          # building level m + 1
        p, d, l = self.p, self.d, self.l
        loc = l * d * (m + 1)
        new = _Level(m + 1, low.D * loc, loc)
        new.unit = low.unit * loc + self.loc_index(m + 1, 0, 0, m + 1)
        I_loc = la.eye(loc)
        for key, M in low.gens.items():
            new.gens[key] = np.kron(M, I_loc)
        # t_{m+1}: shift v
        T = np.zeros((loc, loc), dtype=np.int64)
        for c, v, j in product(range(l), range(d), range(1, m + 2)):
            T[self.loc_index(m + 1, c, (v + 1) % d, j), self.loc_index(m + 1, c, v, j)] = 1
        new.gens[("t", m + 1)] = np.kron(la.eye(low.D), T)
        self.levels.append(new)   # temporarily, so helpers can see it
        try:
            if m >= 1:
                new.gens[("g", m)] = self._g_action(low, new)
            new.gens[("X", m + 1)] = self._x_action(low, new)
        finally:
            self.levels.pop()
        return new

    def _place(self, low: _Level, new: _Level, z: np.ndarray, b: int, vb: int, j: int) -> np.ndarray:
        Z = np.zeros((low.D, new.loc), dtype=np.int64)
        Z[:, self.loc_index(new.m, b, vb, j)] = z
        return Z

    def _eval(self, low: _Level, new: _Level, a: int, b: int, F: dict) -> np.ndarray:
        """X_m^a X_{m+1}^b F as a (D_m, loc) array; F lives on m+1 strands, b < l."""
        m = low.m
        Z = np.zeros((low.D, new.loc), dtype=np.int64)
        Xa = self.xpow(m, a) if m else None
        for (v, w), c in F.items():
            jj = w.index(m + 1) + 1
            wp = w[: jj - 1] + w[jj:]
            z = self.fin_vec(m, v[:m], wp)
            if a:
                z = Xa @ z % self.p
            col = self.loc_index(m + 1, b, v[m], jj)
            Z[:, col] = (Z[:, col] + c * z) % self.p
        return Z

    def _g_action(self, low: _Level, new: _Level) -> np.ndarray:
        m, p, d, l = low.m, self.p, self.d, self.l
        fyh = FiniteYH(self.cfg, m + 1, self.degenerate)
        coef = 1 if self.degenerate else (self.cfg.q - 1) % p
        G = np.zeros((new.D, new.D), dtype=np.int64)
        lowlow = self.levels[m - 1]
        rests = []
        for (c1, v1, j1), (c, v, j) in product(
                product(range(l), range(d), range(1, m + 1)),
                product(range(l), range(d), range(1, m + 2))):
            tail = ([("g", a) for a in range(m - 1, j1 - 1, -1)]
                    + [("g", a) for a in range(m, j - 1, -1)])
            FW = fyh.word([("t", m, v1), ("t", m + 1, v)] + tail)
            Z = self._eval(low, new, c, c1, fyh.lmul_g(m, FW))
            corr = bernstein_correction(c1, c, self.degenerate)
            if corr:
                eFW = fyh.lmul_e(m, FW)
                for (eu, ev), k in corr.items():
                    Z = (Z + (k * coef) % p * self._eval(low, new, eu, ev, eFW)) % p
            rests.append((self.loc_index(m, c1, v1, j1), self.loc_index(m + 1, c, v, j), Z))
        # g_m commutes with Y_{m-1}: columns for (beta', rest) are beta' * column(1, rest)
        for bp in range(lowlow.D):
            Lb = self.basis_matrix(m - 1, bp)
            for loc1, loc2, Z in rests:
                Zr = Z.reshape(lowlow.D, low.loc * new.loc)
                col = la.matmul(Lb, Zr, p).reshape(-1) if m > 1 else Zr.reshape(-1)
                G[:, (bp * low.loc + loc1) * new.loc + loc2] = col
        return G

    def _x_action(self, low: _Level, new: _Level) -> np.ndarray:
        m, p, d, l = low.m, self.p, self.d, self.l
        X = np.zeros((new.D, new.D), dtype=np.int64)
        # X_{m+1}^l as a (D_m, loc) array
        if m == 0:
            Nl = np.zeros((1, new.loc), dtype=np.int64)
            for k in range(l):
                Nl[0, self.loc_index(1, k, 0, 1)] = (-self.cyclo[k]) % p
        else:
            fyh = FiniteYH(self.cfg, m + 1, self.degenerate)
            z = self.xpow(m, l)[:, low.unit]
            start = self._place(low, new, z, 0, 0, m).reshape(-1)
            Nl = (new.gens[("g", m)] @ start % p).reshape(low.D, new.loc)
            eg = fyh.lmul_e(m, fyh.word([("g", m)]))
            if self.degenerate:
                for k in range(l):
                    Nl = (Nl + self._eval(low, new, l - 1 - k, k, eg)) % p
            else:
                q = self.cfg.q
                for i in range(1, l):
                    Nl = (Nl + (q - 1) * self._eval(low, new, l - i, i, eg)) % p
                Nl = Nl * self.cfg.inv(q) % p
        # right multiplication of X_{m+1}^l by t_{m+1}^v g_m ... g_j
        fyh = FiniteYH(self.cfg, m + 1, self.degenerate)
        right = {}
        nz = [(int(r), int(c)) for r, c in zip(*np.nonzero(Nl))]
        for v, j in product(range(d), range(1, m + 2)):
            R = np.zeros((low.D, new.loc), dtype=np.int64)
            tail = [("t", m + 1, v)] + [("g", a) for a in range(m, j - 1, -1)]
            for beta, lc in nz:
                cmu, vmu, jmu = self._decode_loc(new.m, lc)
                F = fyh.word([("t", m + 1, vmu)] + [("g", a) for a in range(m, jmu - 1, -1)] + tail)
                Lb = self.basis_matrix(m, beta) if m else la.eye(1)
                part = self._eval(low, new, 0, cmu, F)
                R = (R + Nl[beta, lc] * la.matmul(Lb, part, p)) % p
            right[(v, j)] = R
        for idx in range(new.D):
            beta, lc = divmod(idx, new.loc)
            c, v, j = self._decode_loc(new.m, lc)
            if c + 1 < l:
                X[beta * new.loc + self.loc_index(new.m, c + 1, v, j), idx] = 1
            else:
                Lb = self.basis_matrix(m, beta) if m else la.eye(1)
                X[:, idx] = la.matmul(Lb, right[(v, j)], p).reshape(-1)
        return X

    def _decode_loc(self, m: int, loc: int) -> tuple[int, int, int]:
        cv, j0 = divmod(loc, m)
        c, v = divmod(cv, self.d)
        return c, v, j0 + 1


# --------------------------------------------------------------------------
# the context in the basis g_w X^u t^v

def _perm_order(n: int) -> list[tuple]:
    perms = [tuple(w) for w in __import__("itertools").permutations(range(1, n + 1))]
    return sorted(perms, key=lambda w: (sg.canonical_word(w), w))


class YContext:
    """A cyclotomic (possibly degenerate) Yokonuma-Hecke algebra on n strands."""

    def __init__(self, cfg: FieldCfg, n: int, weight: Weight, degenerate: bool = False,
                 max_dim: int = MAX_DIM):
        if degenerate and cfg.q != 1:
            raise ConfigError("the degenerate algebra needs q = 1")
        if not degenerate and cfg.q == 1:
            raise ConfigError("q = 1 requires the degenerate presentation")
        if n < 1:
            raise ConfigError("n must be positive")
        if weight.level < 1:
            raise ConfigError("weight must have level >= 1")
        l, d = weight.level, cfg.d
        dim = l ** n * d ** n * _factorial(n)
        if dim > max_dim:
            raise InfeasibleSize("dimension %d exceeds the cap %d" % (dim, max_dim))
        self.cfg, self.n, self.weight, self.degenerate = cfg, n, weight, degenerate
        self.p, self.d, self.l, self.dim = cfg.p, d, l, dim
        self.labels = [(w, u, v) for w in _perm_order(n)
                       for u in product(range(l), repeat=n)
                       for v in product(range(d), repeat=n)]
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        self.unit = self.index[(sg.identity(n), (0,) * n, (0,) * n)]
        self.tower = Tower(cfg, n, weight, degenerate)
        top = self.tower.levels[n]
        C = np.zeros((dim, dim), dtype=np.int64)
        for s, (w, u, v) in enumerate(self.labels):
            idx = 0
            for m in range(1, n + 1):
                idx = idx * self.tower.levels[m].loc + self.tower.loc_index(m, u[m - 1], v[m - 1], m)
            x = np.zeros(dim, dtype=np.int64)
            x[idx] = 1
            for a in reversed(sg.canonical_word(w)):
                x = top.gens[("g", a)] @ x % self.p
            C[:, s] = x
        self.independent = la.rank(C, self.p) == dim
        if not self.independent:
            raise ArithmeticError("the spanning family g_w X^u t^v is not a basis")
        Ci = la.inverse(C, self.p)
        self.gens: dict[Key, np.ndarray] = {
            key: la.matmul(Ci, la.matmul(M, C, self.p), self.p) for key, M in top.gens.items()}
        self.one = la.eye(dim)
        self._basis_L: dict[int, np.ndarray] = {}

    # generators ------------------------------------------------------
    @property
    def gname(self) -> str:
        return "f" if self.degenerate else "g"

    @property
    def xname(self) -> str:
        return "x" if self.degenerate else "X"

    def g(self, a: int) -> np.ndarray:
        return self.gens[("g", a)]

    def t(self, a: int, k: int = 1) -> np.ndarray:
        return la.matpow(self.gens[("t", a)], k % self.d, self.p)

    def X(self, a: int) -> np.ndarray:
        return self.gens[("X", a)]

    @property
    def X1_inv(self) -> np.ndarray:
        if not hasattr(self, "_x1inv"):
            self._x1inv = la.inverse(self.X(1), self.p)
        return self._x1inv

    def e(self, a: int) -> np.ndarray:
        """e_a = (1/d) sum_j t_a^j t_{a+1}^{-j}."""
        acc = np.zeros_like(self.one)
        for j in range(self.d):
            acc = acc + la.matmul(self.t(a, j), self.t(a + 1, -j), self.p)
        return acc * self.cfg.inv(self.d) % self.p

    def mul(self, *mats: np.ndarray) -> np.ndarray:
        return la.matprod(mats, self.p)

    def scalar(self, c: int) -> np.ndarray:
        return (c % self.p) * self.one

    # basis -----------------------------------------------------------
    def basis_matrix(self, i: int) -> np.ndarray:
        """Left multiplication by the i-th basis element."""
        if i not in self._basis_L:
            w, u, v = self.labels[i]
            mats = [self.g(a) for a in sg.canonical_word(w)]
            for a, ua in enumerate(u, 1):
                mats += [self.X(a)] * ua
            for a, va in enumerate(v, 1):
                mats += [self.gens[("t", a)]] * va
            self._basis_L[i] = la.matprod([self.one] + mats, self.p)
        return self._basis_L[i]

    def vector(self, M: np.ndarray) -> np.ndarray:
        """Coordinates of the element whose left action is M."""
        return M[:, self.unit].copy()

    def matrix(self, vec: np.ndarray) -> np.ndarray:
        acc = np.zeros_like(self.one)
        for i in np.nonzero(vec)[0]:
            acc = (acc + int(vec[i]) * self.basis_matrix(int(i))) % self.p
        return acc

    def element(self, M_or_vec: np.ndarray) -> "AlgElement":
        arr = np.asarray(M_or_vec)
        vec = self.vector(arr) if arr.ndim == 2 else arr % self.p
        return AlgElement(self, vec)

    def struct_const(self, i: int, j: int) -> dict[int, int]:
        col = self.basis_matrix(i)[:, j]
        return {int(k): int(col[k]) for k in np.nonzero(col)[0]}

    def label_str(self, i: int) -> str:
        w, u, v = self.labels[i]
        parts = ["%s%d" % (self.gname, a) for a in sg.canonical_word(w)]
        parts += ["%s%d^%d" % (self.xname, a, k) if k > 1 else "%s%d" % (self.xname, a)
                  for a, k in enumerate(u, 1) if k]
        parts += ["t%d^%d" % (a, k) if k > 1 else "t%d" % a for a, k in enumerate(v, 1) if k]
        return "*".join(parts) or "1"

    def describe(self) -> dict:
        return {"n": self.n, "weight": str(self.weight), "level": self.l,
                "degenerate": self.degenerate, "dim": self.dim}


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


@lru_cache(maxsize=32)
def build_context(cfg: FieldCfg, n: int, weight: Weight, degenerate: bool = False) -> YContext:
    return YContext(cfg, n, weight, degenerate)


@dataclass(eq=False)
class AlgElement:
    ctx: YContext
    vec: np.ndarray

    @property
    def coeffs(self) -> dict[int, int]:
        return {int(i): int(self.vec[i]) for i in np.nonzero(self.vec)[0]}

    def matrix(self) -> np.ndarray:
        return self.ctx.matrix(self.vec)

    def __mul__(self, other: "AlgElement") -> "AlgElement":
        self._same(other)
        return AlgElement(self.ctx, self.matrix() @ other.vec % self.ctx.p)

    def __add__(self, other: "AlgElement") -> "AlgElement":
        self._same(other)
        return AlgElement(self.ctx, (self.vec + other.vec) % self.ctx.p)

    def __sub__(self, other: "AlgElement") -> "AlgElement":
        self._same(other)
        return AlgElement(self.ctx, (self.vec - other.vec) % self.ctx.p)

    def scale(self, c: int) -> "AlgElement":
        return AlgElement(self.ctx, self.vec * (c % self.ctx.p) % self.ctx.p)

    def __eq__(self, other) -> bool:
        return isinstance(other, AlgElement) and other.ctx is self.ctx and (self.vec == other.vec).all()

    def _same(self, other: "AlgElement") -> None:
        if other.ctx is not self.ctx:
            raise ValueError("elements of different contexts cannot be combined")

    def __str__(self) -> str:
        terms = ["%d*%s" % (c, self.ctx.label_str(i)) for i, c in sorted(self.coeffs.items())]
        return " + ".join(terms) or "0"


# --------------------------------------------------------------------------
# words in the generators

_TOKEN = re.compile(r"^([gftXxe])(\d+)(?:\^(-?\d+))?$")


def parse_word(text: str) -> list[tuple[str, int, int]]:
    """'g1*t2^-1*X1' -> [('g', 1, 1), ('t', 2, -1), ('X', 1, 1)]."""
    out = []
    for tok in text.replace(" ", "").split("*"):
        if not tok or tok == "1":
            continue
        m = _TOKEN.match(tok)
        if not m:
            raise ConfigError("cannot parse generator %r" % tok)
        sym, a, k = m.group(1), int(m.group(2)), int(m.group(3) or 1)
        sym = {"f": "g", "x": "X"}.get(sym, sym)
        out.append((sym, a, k))
    return out


def word_matrix(ctx: YContext, word: Iterable[tuple[str, int, int]] | str) -> np.ndarray:
    if isinstance(word, str):
        word = parse_word(word)
    mats = [ctx.one]
    for sym, a, k in word:
        if sym == "t":
            if not 1 <= a <= ctx.n:
                raise ConfigError("t%d out of range" % a)
            mats.append(ctx.t(a, k))
            continue
        if sym == "g":
            if not 1 <= a < ctx.n:
                raise ConfigError("%s%d out of range" % (ctx.gname, a))
            if k < 0:
                raise ConfigError("negative powers of %s are not supported" % ctx.gname)
            base = ctx.g(a)
        elif sym == "e":
            if not 1 <= a < ctx.n:
                raise ConfigError("e%d out of range" % a)
            base = ctx.e(a)
        else:
            if not 1 <= a <= ctx.n:
                raise ConfigError("%s%d out of range" % (ctx.xname, a))
            if k < 0:
                base, k = (la.inverse(ctx.X(a), ctx.p), -k)
            else:
                base = ctx.X(a)
        mats.append(la.matpow(base, k, ctx.p))
    return la.matprod(mats, ctx.p)


def normal_form(ctx: YContext, word) -> AlgElement:
    """The product of a generator word expanded in the basis g_w X^u t^v."""
    return ctx.element(word_matrix(ctx, word))


def X_element(ctx: YContext, a: int) -> AlgElement:
    return ctx.element(ctx.X(a))


x_element = X_element


def e_projector(ctx: YContext, a: int) -> AlgElement:
    return ctx.element(ctx.e(a))


def regular_rep(ctx: YContext, x: AlgElement) -> np.ndarray:
    return x.matrix()


# --------------------------------------------------------------------------
# verification of the defining relations

def check_relations(gens: dict, cfg: FieldCfg, n: int, weight: Weight, degenerate: bool,
                    derived: bool = True, report: Report | None = None) -> Report:
    """Check every relation instance on matrices keyed ('g'|'t'|'X', a).

    Works for any representation, not only the regular one.
    """
    p, d, q = cfg.p, cfg.d, cfg.q
    rep = report or Report()
    D = next(iter(gens.values())).shape[0]
    I = la.eye(D)
    mm = lambda *ms: la.matprod(ms, p)
    eq = lambda A, B: bool((np.mod(A - B, p) == 0).all())
    g = lambda a: gens[("g", a)]
    t = lambda a, k=1: la.matpow(gens[("t", a)], k % d, p)
    X = lambda a: gens[("X", a)]
    inv_d = cfg.inv(d)

    def e(a):
        return sum(mm(t(a, j), t(a + 1, -j)) for j in range(d)) * inv_d % p

    G, Xn = ("f", "x") if degenerate else ("g", "X")
    s = rep.suite("t_a^d = 1")
    for a in range(1, n + 1):
        s.check(eq(la.matpow(gens[("t", a)], d, p), I), "a=%d" % a)
    s = rep.suite("t_a t_b = t_b t_a")
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            s.check(eq(mm(t(a), t(b)), mm(t(b), t(a))), "a=%d b=%d" % (a, b))
    s = rep.suite("t_b %s_a = %s_a t_{s_a(b)}" % (G, G))
    for a in range(1, n):
        for b in range(1, n + 1):
            sb = a + 1 if b == a else a if b == a + 1 else b
            s.check(eq(mm(t(b), g(a)), mm(g(a), t(sb))), "a=%d b=%d" % (a, b))
    s = rep.suite("quadratic relation for %s_a" % G)
    for a in range(1, n):
        rhs = I if degenerate else (q * I + (q - 1) * mm(g(a), e(a))) % p
        s.check(eq(mm(g(a), g(a)), rhs), "a=%d" % a)
    s = rep.suite("%s_a %s_b = %s_b %s_a, |a-b|>1" % (G, G, G, G))
    for a in range(1, n):
        for b in range(a + 2, n):
            s.check(eq(mm(g(a), g(b)), mm(g(b), g(a))), "a=%d b=%d" % (a, b))
    s = rep.suite("braid relation for %s" % G)
    for a in range(1, n - 1):
        s.check(eq(mm(g(a + 1), g(a), g(a + 1)), mm(g(a), g(a + 1), g(a))), "a=%d" % a)
    if degenerate:
        s = rep.suite("x_a x_b = x_b x_a")
        for a in range(1, n + 1):
            for b in range(a + 1, n + 1):
                s.check(eq(mm(X(a), X(b)), mm(X(b), X(a))), "a=%d b=%d" % (a, b))
        s = rep.suite("f_a x_{a+1} = x_a f_a + e_a")
        for a in range(1, n):
            s.check(eq(mm(g(a), X(a + 1)), mm(X(a), g(a)) + e(a)), "a=%d" % a)
        s = rep.suite("f_a x_b = x_b f_a, b != a,a+1")
        for a in range(1, n):
            for b in range(1, n + 1):
                if b not in (a, a + 1):
                    s.check(eq(mm(g(a), X(b)), mm(X(b), g(a))), "a=%d b=%d" % (a, b))
        s = rep.suite("x_a t_b = t_b x_a")
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                s.check(eq(mm(X(a), t(b)), mm(t(b), X(a))), "a=%d b=%d" % (a, b))
    else:
        s = rep.suite("X_1 g_1 X_1 g_1 = g_1 X_1 g_1 X_1")
        if n > 1:
            s.check(eq(mm(X(1), g(1), X(1), g(1)), mm(g(1), X(1), g(1), X(1))), "")
        s = rep.suite("X_1 g_a = g_a X_1, a>1")
        for a in range(2, n):
            s.check(eq(mm(X(1), g(a)), mm(g(a), X(1))), "a=%d" % a)
        s = rep.suite("X_1 t_b = t_b X_1")
        for b in range(1, n + 1):
            s.check(eq(mm(X(1), t(b)), mm(t(b), X(1))), "b=%d" % b)
    s = rep.suite("cyclotomic relation on %s_1" % Xn)
    acc = I
    for i in weight.residues():
        root = i % p if degenerate else cfg.qpow(i)
        acc = mm(acc, (X(1) - root * I) % p)
    s.check(not acc.any(), "")
    if not derived:
        return rep
    # consequences
    if degenerate:
        s = rep.suite("x_{a+1} = f_a x_a f_a + f_a e_a")
        for a in range(1, n):
            s.check(eq(X(a + 1), mm(g(a), X(a), g(a)) + mm(g(a), e(a))), "a=%d" % a)
        s = rep.suite("x_{a+1} f_a = f_a x_a + e_a")
        for a in range(1, n):
            s.check(eq(mm(X(a + 1), g(a)), mm(g(a), X(a)) + e(a)), "a=%d" % a)
        s = rep.suite("f_a x_a^u x_{a+1}^v closed forms")
        for a in range(1, n):
            xa, xb = X(a), X(a + 1)
            for u in range(4):
                for v in range(4):
                    lhs = mm(g(a), la.matpow(xa, u, p), la.matpow(xb, v, p))
                    rhs = mm(la.matpow(xa, v, p), la.matpow(xb, u, p), g(a))
                    if u <= v:
                        for m in range(v - u):
                            rhs = rhs + mm(e(a), la.matpow(xa, u + m, p), la.matpow(xb, v - 1 - m, p))
                    else:
                        for m in range(u - v):
                            rhs = rhs - mm(e(a), la.matpow(xa, u - 1 - m, p), la.matpow(xb, v + m, p))
                    s.check(eq(lhs, rhs), "a=%d u=%d v=%d" % (a, u, v))
    else:
        s = rep.suite("q X_{a+1} = g_a X_a g_a")
        for a in range(1, n):
            s.check(eq(q * X(a + 1), mm(g(a), X(a), g(a))), "a=%d" % a)
        s = rep.suite("g_a X_b = X_b g_a, b != a,a+1")
        for a in range(1, n):
            for b in range(1, n + 1):
                if b not in (a, a + 1):
                    s.check(eq(mm(g(a), X(b)), mm(X(b), g(a))), "a=%d b=%d" % (a, b))
        s = rep.suite("g_a X_{a+1} = X_a g_a + (q-1) X_{a+1} e_a")
        for a in range(1, n):
            s.check(eq(mm(g(a), X(a + 1)), mm(X(a), g(a)) + (q - 1) * mm(X(a + 1), e(a))), "a=%d" % a)
        s = rep.suite("X_{a+1} g_a = g_a X_a + (q-1) X_{a+1} e_a")
        for a in range(1, n):
            s.check(eq(mm(X(a + 1), g(a)), mm(g(a), X(a)) + (q - 1) * mm(X(a + 1), e(a))), "a=%d" % a)
    s = rep.suite("{%s_a, t_b} commute" % Xn)
    mats = [X(a) for a in range(1, n + 1)] + [t(a) for a in range(1, n + 1)]
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            s.check(eq(mm(mats[i], mats[j]), mm(mats[j], mats[i])), "%d,%d" % (i, j))
    s = rep.suite("e_a idempotent and commutes with %s_a" % G)
    for a in range(1, n):
        s.check(eq(mm(e(a), e(a)), e(a)) and eq(mm(e(a), g(a)), mm(g(a), e(a))), "a=%d" % a)
    if not degenerate:
        s = rep.suite("X_1 invertible")
        s.check(la.rank(X(1), p) == D, "")
    return rep


def check_presentation(ctx: YContext, gens: dict | None = None) -> Report:
    rep = Report(meta={"field_cfg": ctx.cfg.as_dict(), "context": ctx.describe()})
    check_relations(gens or ctx.gens, ctx.cfg, ctx.n, ctx.weight, ctx.degenerate, report=rep)
    s = rep.suite("basis g_w %s^u t^v is linearly independent" % ctx.xname)
    s.check(ctx.independent and len(ctx.labels) == ctx.dim, "dim=%d" % ctx.dim)
    rep.meta["dims"] = {"expected": ctx.dim, "rank": ctx.dim if ctx.independent else None}
    return rep


def associativity_check(ctx: YContext, samples: int = 200, seed: int = 0) -> Report:
    """(b_i b_j) b_k = b_i (b_j b_k) on random basis triples via structure constants."""
    rng = np.random.default_rng(seed)
    rep = Report()
    s = rep.suite("associativity of structure constants")
    for _ in range(samples):
        i, j, k = (int(x) for x in rng.integers(0, ctx.dim, 3))
        left = ctx.matrix(ctx.basis_matrix(i)[:, j]) @ ctx.basis_matrix(k)[:, ctx.unit] % ctx.p
        right = ctx.basis_matrix(i) @ ctx.basis_matrix(j)[:, k] % ctx.p
        s.check(bool((left == right).all()), "(%d,%d,%d)" % (i, j, k))
    return rep


def closure_rank(ctx: YContext) -> int:
    """Rank of the span of all words in the generators applied to 1."""
    start = np.zeros(ctx.dim, dtype=np.int64)
    start[ctx.unit] = 1
    return la.span_closure(list(ctx.gens.values()), start, ctx.p)


# --------------------------------------------------------------------------
# export / import of structure constants

def export_structure(ctx: YContext) -> dict:
    """Basis labels, generator matrices and all structure constants, JSON-ready."""
    consts = []
    for i in range(ctx.dim):
        for r, c, v in la.to_triplets(ctx.basis_matrix(i)):
            consts.append([i, c, r, v])     # b_i b_c = sum_r v b_r
    return {
        "field_cfg": ctx.cfg.as_dict(),
        "context": ctx.describe(),
        "basis": [ctx.label_str(i) for i in range(ctx.dim)],
        "unit": ctx.unit,
        "generators": {"%s%d" % key: [list(t) for t in la.to_triplets(M)]
                       for key, M in sorted(ctx.gens.items())},
        "structure_constants": consts,
    }


def regular_rep_from_export(data: dict) -> tuple[list[np.ndarray], dict]:
    """Left multiplication matrices of every basis element, and the generators."""
    dim, p = data["context"]["dim"], data["field_cfg"]["p"]
    mats = [np.zeros((dim, dim), dtype=np.int64) for _ in range(dim)]
    for i, c, r, v in data["structure_constants"]:
        mats[i][r, c] = (mats[i][r, c] + v) % p
    gens = {}
    for name, trip in data["generators"].items():
        gens[(name[0], int(name[1:]))] = la.from_triplets((dim, dim), trip, p)
    return mats, gens
