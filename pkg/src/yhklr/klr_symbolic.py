"""Symbolic quiver Hecke algebra H_n(Q) with straightening onto the PBW basis.

A basis element psi_w y^r e(k) is stored as the key (w, r, k) with w a
permutation (psi_w is read along its canonical word), r an exponent vector and
k a tuple of vertices.  Coefficients are Python integers.

Left multiplication by a generator on a basis element is the only primitive.
Two facts make it finite:

* canonical words are prefix closed, so psi_w = psi_u psi_b exactly when b is
  the last letter of the canonical word of w; this lets y_a travel through
  psi_w one crossing at a time;
* any two reduced words of w are joined by commutation and braid moves, and a
  braid move changes psi_W e(k) only by a term of smaller psi-length.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from . import symmetric_groups as sg
from .errors import InfeasibleSize, NonTerminating, SupportOutsideBlock
from .quiver import QuiverSpec, braid_quotient

MAX_N, MAX_VERTICES = 5, 6
Key = tuple  # (w, r, k)


def _add(acc: dict, key, c: int) -> None:
    if c:
        v = acc.get(key, 0) + c
        if v:
            acc[key] = v
        else:
            acc.pop(key, None)


def _divided_difference(r: tuple, b: int) -> dict:
    """(f - s_b f) / (y_{b+1} - y_b) for the monomial f = y^r."""
    m, n_ = r[b - 1], r[b]
    out: dict = {}
    if m == n_:
        return out
    lo, hi = min(m, n_), max(m, n_)
    sign = -1 if m > n_ else 1
    for s in range(hi - lo):
        e = list(r)
        e[b - 1], e[b] = lo + s, lo + (hi - lo - 1 - s)
        _add(out, tuple(e), sign)
    return out


def _bump(r: tuple, a: int, by: int = 1) -> tuple:
    r = list(r)
    r[a - 1] += by
    return tuple(r)


class Straightener:
    """Rewriting engine for H_n(Q), one per (quiver, n)."""

    def __init__(self, spec: QuiverSpec, n: int, step_limit: int = 10 ** 7,
                 check_caps: bool = True):
        if check_caps and (n > MAX_N or len(spec.vertices) > MAX_VERTICES):
            raise InfeasibleSize("n <= %d and at most %d vertices" % (MAX_N, MAX_VERTICES))
        self.spec, self.n = spec, n
        self.id = sg.identity(n)
        self.zero_r = (0,) * n
        self.step_limit, self.steps = step_limit, 0
        self._y: dict = {}
        self._psi: dict = {}
        self._canon: dict = {}
        self._paths: dict = {}

    def _tick(self) -> None:
        self.steps += 1
        if self.steps > self.step_limit:
            raise NonTerminating("straightening exceeded %d steps" % self.step_limit)

    # basic products on keys; every result is a dict key -> coefficient
    def lmul_e(self, kk, key: Key) -> dict:
        w, r, k = key
        return {key: 1} if sg.act(w, k) == tuple(kk) else {}

    def lmul_y(self, a: int, key: Key) -> dict:
        w, r, k = key
        if w == self.id:
            return {(w, _bump(r, a), k): 1}
        return self._shift(self._y_core(a, w, k), r)

    def lmul_psi(self, a: int, key: Key) -> dict:
        w, r, k = key
        return self._shift(self._psi_core(a, w, k), r)

    def _shift(self, d: dict, r: tuple) -> dict:
        if not any(r):
            return d
        return {(w, tuple(x + y for x, y in zip(r2, r)), k): c for (w, r2, k), c in d.items()}

    def _y_core(self, a: int, w, k) -> dict:
        """y_a psi_w e(k)."""
        key = (a, w, k)
        if key in self._y:
            return self._y[key]
        self._tick()
        word = sg.canonical_word(w)
        b = word[-1]
        u = sg.rmul_s(w, b)
        kb = sg.swap(k, b)
        out: dict = {}
        for (u2, r2, _), c in self.lmul_y(a, (u, self.zero_r, kb)).items():
            # psi_{u2} y^{r2} psi_b e(k) = psi_{u2} psi_b y^{s_b r2} e(k) + delta psi_{u2} d(y^{r2}) e(k)
            head = self.word(sg.canonical_word(u2) + (b,), k)
            for key2, c2 in self._shift(head, sg.swap(r2, b)).items():
                _add(out, key2, c * c2)
            if k[b - 1] == k[b]:
                for r3, c3 in _divided_difference(r2, b).items():
                    _add(out, (u2, r3, k), c * c3)
        self._y[key] = out
        return out

    def _psi_core(self, a: int, w, k) -> dict:
        """psi_a psi_w e(k)."""
        key = (a, w, k)
        if key in self._psi:
            return self._psi[key]
        self._tick()
        sw = sg.lmul_s(a, w)
        if sg.length(sw) > sg.length(w):
            out = self.word((a,) + sg.canonical_word(w), k)
        else:
            # psi_w e(k) = psi_a psi_v e(k) - corr, with corr shorter than w
            v = sw
            corr = dict(self.word((a,) + sg.canonical_word(v), k))
            _add(corr, (w, self.zero_r, k), -1)
            kv = sg.act(v, k)
            out = {}
            start = {(v, self.zero_r, k): 1}
            for (m1, m2), c in self.spec.Q[(kv[a - 1], kv[a])].items():
                cur = start
                for _ in range(m1):
                    cur = self.lmul_dict(("y", a), cur)
                for _ in range(m2):
                    cur = self.lmul_dict(("y", a + 1), cur)
                for key2, c2 in cur.items():
                    _add(out, key2, c * c2)
            for key2, c2 in self.lmul_dict(("psi", a), corr).items():
                _add(out, key2, -c2)
        self._psi[key] = out
        return out

    def lmul(self, letter, key: Key) -> dict:
        kind, arg = letter
        if kind == "y":
            return self.lmul_y(arg, key)
        if kind == "psi":
            return self.lmul_psi(arg, key)
        return self.lmul_e(arg, key)

    def lmul_dict(self, letter, d: dict) -> dict:
        out: dict = {}
        for key, c in d.items():
            for key2, c2 in self.lmul(letter, key).items():
                _add(out, key2, c * c2)
        return out

    def lmul_word(self, letters: Sequence, d: dict) -> dict:
        for letter in reversed(letters):
            d = self.lmul_dict(letter, d)
        return d

    # reduced words
    def _path(self, W: tuple) -> list[tuple]:
        """Words from W to the canonical word, one elementary move apart."""
        w = sg.from_word(W, self.n)
        target = sg.canonical_word(w)
        if w not in self._paths:
            parent = {target: None}
            queue = deque([target])
            while queue:
                cur = queue.popleft()
                for nb in _neighbours(cur):
                    if nb not in parent:
                        parent[nb] = cur
                        queue.append(nb)
            self._paths[w] = parent
        parent = self._paths[w]
        out = [W]
        while out[-1] != target:
            out.append(parent[out[-1]])
        return out

    def word(self, W: Sequence[int], k) -> dict:
        """psi_W e(k) in normal form; W must be a reduced word."""
        W, k = tuple(W), tuple(k)
        key = (W, k)
        if key in self._canon:
            return self._canon[key]
        self._tick()
        w = sg.from_word(W, self.n)
        if len(W) != sg.length(w):
            # not reduced: multiply letter by letter
            out = self.lmul_word([("psi", b) for b in W], {(self.id, self.zero_r, k): 1})
            self._canon[key] = out
            return out
        path = self._path(W)
        if len(path) == 1:
            out = {(w, self.zero_r, k): 1}
        else:
            nxt = path[1]
            out = dict(self.word(nxt, k))
            for key2, c in self._braid_correction(W, nxt, k).items():
                _add(out, key2, c)
        self._canon[key] = out
        return out

    def _braid_correction(self, W: tuple, V: tuple, k) -> dict:
        """psi_W e(k) - psi_V e(k) for words differing by one move."""
        i = next(x for x in range(len(W)) if W[x] != V[x])
        if i + 2 >= len(W) or W[i] != W[i + 2] or abs(W[i] - W[i + 1]) != 1:
            return {}          # commutation move
        b = min(W[i], W[i + 1])
        X, Z = W[:i], W[i + 3:]
        kz = sg.act(sg.from_word(Z, self.n), k)
        if kz[b - 1] != kz[b + 1]:
            return {}
        sign = 1 if W[i] == b + 1 else -1
        C = braid_quotient(self.spec.Q[(kz[b - 1], kz[b])])
        out: dict = {}
        base = self.word(Z, k) if Z else {(self.id, self.zero_r, k): 1}
        for (m0, m1, m2), c in C.items():
            letters = [("psi", x) for x in X]
            letters += [("y", b)] * m0 + [("y", b + 1)] * m1 + [("y", b + 2)] * m2
            for key2, c2 in self.lmul_word(letters, base).items():
                _add(out, key2, sign * c * c2)
        return out

    def straighten(self, letters: Sequence, k=None) -> "KlrElement":
        """Normal form of a word in the generators, with e(k) on the right
        (or summed over all k when k is None)."""
        ks = [tuple(k)] if k is not None else list(product(self.spec.vertices, repeat=self.n))
        out: dict = {}
        for kk in ks:
            for key, c in self.lmul_word(list(letters), {(self.id, self.zero_r, kk): 1}).items():
                _add(out, key, c)
        return KlrElement(self, out)

    # degrees
    def degree(self, key: Key) -> int:
        w, r, k = key
        cur, deg = k, 2 * sum(r)
        for b in reversed(sg.canonical_word(w)):
            deg -= self.spec.cartan(cur[b - 1], cur[b])
            cur = sg.swap(cur, b)
        return deg


def _neighbours(W: tuple) -> Iterable[tuple]:
    for i in range(len(W) - 1):
        if abs(W[i] - W[i + 1]) > 1:
            yield W[:i] + (W[i + 1], W[i]) + W[i + 2:]
    for i in range(len(W) - 2):
        if W[i] == W[i + 2] and abs(W[i] - W[i + 1]) == 1:
            yield W[:i] + (W[i + 1], W[i], W[i + 1]) + W[i + 3:]


def word_degree(spec: QuiverSpec, letters: Sequence, k) -> int | None:
    """Degree of a generator word with e(k) on the right, None when it is zero."""
    cur, deg = tuple(k), 0
    for kind, arg in reversed(list(letters)):
        if kind == "y":
            deg += 2
        elif kind == "e":
            if tuple(arg) != cur:
                return None
        else:
            deg -= spec.cartan(cur[arg - 1], cur[arg])
            cur = sg.swap(cur, arg)
    return deg


def _sort_key(key: Key):
    w, r, k = key
    return (sg.length(w), sg.canonical_word(w), r, tuple(map(repr, k)))


class KlrElement:
    """A finite combination of PBW basis elements psi_w y^r e(k)."""

    def __init__(self, engine: Straightener, terms: dict | None = None):
        self.engine = engine
        self.terms = {key: c for key, c in (terms or {}).items() if c}

    # construction helpers
    @classmethod
    def basis(cls, engine: Straightener, w, r, k) -> "KlrElement":
        return cls(engine, {(tuple(w), tuple(r), tuple(k)): 1})

    def _same(self, other: "KlrElement") -> None:
        if other.engine is not self.engine:
            raise ValueError("elements of different algebras")

    def __add__(self, other: "KlrElement") -> "KlrElement":
        self._same(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            _add(out, key, c)
        return KlrElement(self.engine, out)

    def __sub__(self, other: "KlrElement") -> "KlrElement":
        return self + other.scale(-1)

    def scale(self, c: int) -> "KlrElement":
        return KlrElement(self.engine, {key: c * v for key, v in self.terms.items()})

    def __mul__(self, other: "KlrElement") -> "KlrElement":
        self._same(other)
        eng = self.engine
        out: dict = {}
        for (w, r, k), c in self.terms.items():
            letters = [("psi", b) for b in sg.canonical_word(w)]
            letters += [("y", a) for a, m in enumerate(r, 1) for _ in range(m)]
            letters.append(("e", k))
            for key, c2 in eng.lmul_word(letters, other.terms).items():
                _add(out, key, c * c2)
        return KlrElement(eng, out)

    def __eq__(self, other) -> bool:
        return isinstance(other, KlrElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {self.engine.degree(key) for key in self.terms}

    def sorted_terms(self) -> list[tuple[Key, int]]:
        return sorted(self.terms.items(), key=lambda kv: _sort_key(kv[0]))

    def as_json(self) -> list[dict]:
        return [{"word": list(sg.canonical_word(w)), "r": list(r),
                 "k": [list(x) if isinstance(x, tuple) else x for x in k], "coeff": c}
                for (w, r, k), c in self.sorted_terms()]

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (w, r, k), c in self.sorted_terms():
            mono = ["psi%d" % b for b in sg.canonical_word(w)]
            mono += ["y%d^%d" % (a, m) if m > 1 else "y%d" % a for a, m in enumerate(r, 1) if m]
            mono.append("e%s" % (k,))
            parts.append("%d*%s" % (c, "*".join(mono)))
        return " + ".join(parts)


# elements attached to J-tuples ------------------------------------------------

def vertices_of(spec: QuiverSpec, t: Sequence[int]) -> list[tuple]:
    """K^t: vertex tuples whose a-th entry lies in part t_a."""
    parts = spec.parts or (spec.vertices,)
    return list(product(*[parts[x - 1] for x in t]))


def e_of_tuple(engine: Straightener, t: Sequence[int]) -> KlrElement:
    return KlrElement(engine, {(engine.id, engine.zero_r, k): 1 for k in vertices_of(engine.spec, t)})


def _psi_word(engine: Straightener, word: Sequence[int], ks: Iterable) -> KlrElement:
    out: dict = {}
    for k in ks:
        for key, c in engine.word(tuple(word), k).items():
            _add(out, key, c)
    return KlrElement(engine, out)


def _checked_word(word, w, n) -> tuple:
    word = tuple(word)
    if sg.check_reduced(word, n) != w:
        raise ValueError("word %s does not spell %s" % (word, w))
    return word


def psi_pi(engine: Straightener, t: Sequence[int], word: Sequence[int] | None = None) -> KlrElement:
    """psi_{pi_t} e(t), read along ``word`` (the canonical word by default)."""
    n, d = engine.n, len(engine.spec.parts) or 1
    pi = sg.min_coset_rep(t, d)
    word = sg.canonical_word(pi) if word is None else _checked_word(word, pi, n)
    return _psi_word(engine, word, vertices_of(engine.spec, t))


def psi_pi_inverse(engine: Straightener, t: Sequence[int], word: Sequence[int] | None = None) -> KlrElement:
    """e(t) psi_{pi_t^{-1}} = psi_{pi_t^{-1}} e(t^lambda) restricted to K^t on the left."""
    n, d = engine.n, len(engine.spec.parts) or 1
    pi = sg.min_coset_rep(t, d)
    pinv = sg.inverse(pi)
    word = sg.canonical_word(pinv) if word is None else _checked_word(word, pinv, n)
    return _psi_word(engine, word, [sg.act(pi, k) for k in vertices_of(engine.spec, t)])


def block_idempotent_lambda(engine: Straightener, lam: sg.Composition) -> KlrElement:
    out: dict = {}
    for t in lam.tuples():
        for key, c in e_of_tuple(engine, t).terms.items():
            _add(out, key, c)
    return KlrElement(engine, out)


def generator(engine: Straightener, kind: str, arg=None, k=None) -> KlrElement:
    """psi_a, y_a or e(k), optionally with e(k) on the right; summed over k otherwise."""
    if kind == "e":
        return KlrElement.basis(engine, engine.id, engine.zero_r, arg)
    return engine.straighten([(kind, arg)], k)


# the block decomposition -------------------------------------------------------

@dataclass
class BlockMaps:
    """Psi: e(lambda) H_n(Q) -> Mat_{m_lambda}(e_lambda H e_lambda) and its inverse Phi."""
    engine: Straightener
    lam: sg.Composition

    def __post_init__(self):
        self.ts = self.lam.tuples()
        self.tl = self.lam.t_lambda()
        self.e_lam = block_idempotent_lambda(self.engine, self.lam)
        self.e_t = {t: e_of_tuple(self.engine, t) for t in self.ts}
        self.fwd = {t: psi_pi(self.engine, t) for t in self.ts}
        self.bwd = {t: psi_pi_inverse(self.engine, t) for t in self.ts}

    def Psi(self, x: KlrElement) -> dict:
        if not (self.e_lam * x == x and x * self.e_lam == x):
            raise SupportOutsideBlock("element is not supported on e(lambda)")
        out = {}
        for t2, t in product(self.ts, repeat=2):
            entry = self.fwd[t2] * (self.e_t[t2] * x * self.e_t[t]) * self.bwd[t]
            if not entry.is_zero():
                out[(t2, t)] = entry
        return out

    def Phi(self, M: dict) -> KlrElement:
        acc = KlrElement(self.engine)
        for (t2, t), v in M.items():
            acc = acc + self.bwd[t2] * v * self.fwd[t]
        return acc

    def matmul(self, M: dict, N: dict) -> dict:
        out: dict = {}
        for (a, b), v in M.items():
            for (b2, c), u in N.items():
                if b == b2:
                    cur = out.get((a, c), KlrElement(self.engine)) + v * u
                    if cur.is_zero():
                        out.pop((a, c), None)
                    else:
                        out[(a, c)] = cur
        return out

    def in_subalgebra(self, v: KlrElement) -> bool:
        """All terms are psi_w y^r e(k) with w in S_lambda and k in K^{t^lambda}."""
        kl = set(vertices_of(self.engine.spec, self.tl))
        return all(sg.in_young_subgroup(w, self.lam) and k in kl for (w, r, k) in v.terms)


def decomp_maps(engine: Straightener, lam: sg.Composition) -> BlockMaps:
    return BlockMaps(engine, lam)


# a small prefix expression language ---------------------------------------------

_TOKEN = re.compile(r"\(|\)|[^\s()]+")


def parse_expr(engine: Straightener, text: str) -> KlrElement:
    """Prefix expressions: (* a b ...), (+ a b ...), (- a b), integers,
    psiN, yN and e:v1,v2,... with vertices written i.j (or i for plain vertices).
    Bare psiN and yN are summed over all idempotents."""
    tokens = _TOKEN.findall(text)
    pos = 0

    def atom(tok: str) -> KlrElement:
        if re.fullmatch(r"-?\d+", tok):
            return _one(engine).scale(int(tok))
        m = re.fullmatch(r"(psi|y)(\d+)", tok)
        if m:
            a = int(m.group(2))
            hi = engine.n - 1 if m.group(1) == "psi" else engine.n
            if not 1 <= a <= hi:
                raise ValueError("index out of range in %r" % tok)
            return generator(engine, m.group(1), a)
        if tok.startswith("e:"):
            k = tuple(_vertex(v) for v in tok[2:].split(","))
            if len(k) != engine.n or any(v not in engine.spec.vertices for v in k):
                raise ValueError("bad idempotent %r" % tok)
            return generator(engine, "e", k)
        raise ValueError("unknown token %r" % tok)

    def expr() -> KlrElement:
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError("unexpected end of expression")
        tok = tokens[pos]
        pos += 1
        if tok != "(":
            if tok == ")":
                raise ValueError("unbalanced parenthesis")
            return atom(tok)
        op = tokens[pos]
        pos += 1
        args = []
        while pos < len(tokens) and tokens[pos] != ")":
            args.append(expr())
        if pos >= len(tokens):
            raise ValueError("missing ')'")
        pos += 1
        if not args:
            raise ValueError("operator %r needs arguments" % op)
        acc = args[0]
        for x in args[1:]:
            acc = acc * x if op == "*" else acc + x if op == "+" else acc - x if op == "-" else None
            if acc is None:
                raise ValueError("unknown operator %r" % op)
        return acc

    out = expr()
    if pos != len(tokens):
        raise ValueError("trailing tokens")
    return out


def _one(engine: Straightener) -> KlrElement:
    return KlrElement(engine, {(engine.id, engine.zero_r, k): 1
                               for k in product(engine.spec.vertices, repeat=engine.n)})


def _vertex(text: str):
    parts = tuple(int(x) for x in text.split("."))
    return parts[0] if len(parts) == 1 else parts
