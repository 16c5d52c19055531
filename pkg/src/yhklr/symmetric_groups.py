"""Permutations, canonical reduced words, compositions and coset representatives.

Permutations are 1-based one-line tuples; ``mul(v, w)`` is the composite
x -> v(w(x)).  ``s(a, n)`` is the adjacent transposition (a, a+1).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Iterator, Sequence

from .errors import NotReduced

Perm = tuple[int, ...]
Word = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def s(a: int, n: int) -> Perm:
    if not 1 <= a < n:
        raise ValueError("s_%d is not in S_%d" % (a, n))
    w = list(range(1, n + 1))
    w[a - 1], w[a] = w[a], w[a - 1]
    return tuple(w)


def mul(v: Perm, w: Perm) -> Perm:
    return tuple(v[x - 1] for x in w)


def inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for a, x in enumerate(w, 1):
        out[x - 1] = a
    return tuple(out)


def length(w: Perm) -> int:
    n = len(w)
    return sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])


def lmul_s(a: int, w: Perm) -> Perm:
    """s_a * w: swap the values a and a+1."""
    return tuple(a + 1 if x == a else a if x == a + 1 else x for x in w)


def rmul_s(w: Perm, a: int) -> Perm:
    """w * s_a: swap positions a and a+1."""
    w = list(w)
    w[a - 1], w[a] = w[a], w[a - 1]
    return tuple(w)


def from_word(word: Sequence[int], n: int) -> Perm:
    w = identity(n)
    for a in reversed(word):
        w = lmul_s(a, w)
    return w


def is_reduced(word: Sequence[int], n: int) -> bool:
    return length(from_word(word, n)) == len(word)


def act(w: Perm, x: Sequence) -> tuple:
    """(w . x)_a = x_{w^{-1}(a)}."""
    if len(w) != len(x):
        raise ValueError("length mismatch: %d vs %d" % (len(w), len(x)))
    out = [None] * len(x)
    for a, xa in enumerate(x):
        out[w[a] - 1] = xa
    return tuple(out)


def swap(x: Sequence, a: int) -> tuple:
    """s_a . x (swap entries a, a+1)."""
    x = list(x)
    x[a - 1], x[a] = x[a], x[a - 1]
    return tuple(x)


@lru_cache(maxsize=None)
def canonical_word(w: Perm) -> Word:
    """Canonical reduced word: peel off the largest value.

    With j = w^{-1}(n) we have w = w' s_{n-1} ... s_j where w' fixes n, so the
    word is word(w') followed by (n-1, ..., j).  Elements of a Young subgroup
    get the concatenation of the words of their components, since the last
    block is stripped first and never touches the earlier ones.
    """
    n = len(w)
    if n <= 1:
        return ()
    j = w.index(n) + 1
    rest = w[: j - 1] + w[j:]
    return canonical_word(rest) + tuple(range(n - 1, j - 1, -1))


def canonical_reduced_word(w: Perm, lam: "Composition | None" = None) -> Word:
    word = canonical_word(tuple(w))
    if lam is not None and in_young_subgroup(w, lam):
        parts = []
        for c0, c1 in zip(lam.cumulative, lam.cumulative[1:]):
            comp = tuple(x - c0 for x in w[c0:c1])
            parts.extend(a + c0 for a in canonical_word(comp))
        assert tuple(parts) == word
    return word


@lru_cache(maxsize=None)
def all_reduced_words(w: Perm) -> tuple[Word, ...]:
    n = len(w)
    if length(w) == 0:
        return ((),)
    out = []
    for a in range(1, n):
        if w[a - 1] > w[a]:
            out.extend(u + (a,) for u in all_reduced_words(rmul_s(w, a)))
    return tuple(sorted(set(out)))


def check_reduced(word: Sequence[int], n: int) -> Perm:
    w = from_word(word, n)
    if length(w) != len(word):
        raise NotReduced("word %s is not reduced" % (tuple(word),))
    return w


@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...]

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def d(self) -> int:
        return len(self.parts)

    @property
    def cumulative(self) -> tuple[int, ...]:
        acc = [0]
        for c in self.parts:
            acc.append(acc[-1] + c)
        return tuple(acc)

    def t_lambda(self) -> tuple[int, ...]:
        """The sorted J-tuple 1^{l_1} 2^{l_2} ... of this shape."""
        return tuple(j for j, c in enumerate(self.parts, 1) for _ in range(c))

    def tuples(self) -> list[tuple[int, ...]]:
        """J^lambda in lexicographic order."""
        return sorted(set(permutations(self.t_lambda())))


def shape(t: Sequence[int], d: int) -> Composition:
    return Composition(tuple(sum(1 for x in t if x == j) for j in range(1, d + 1)))


def compositions(n: int, d: int) -> Iterator[Composition]:
    if d == 1:
        yield Composition((n,))
        return
    for c in range(n, -1, -1):
        for rest in compositions(n - c, d - 1):
            yield Composition((c,) + rest.parts)


def m_lambda(lam: Composition) -> int:
    out = factorial(lam.n)
    for c in lam.parts:
        out //= factorial(c)
    return out


def in_young_subgroup(w: Perm, lam: Composition) -> bool:
    cum = lam.cumulative
    return all(cum[b] < w[a] <= cum[b + 1]
               for b in range(lam.d) for a in range(cum[b], cum[b + 1]))


def min_coset_rep(t: Sequence[int], d: int | None = None) -> Perm:
    """pi_t(a) = lambda_{t_a - 1} + #{b <= a : t_b = t_a}; pi_t . t = t^lambda."""
    d = d or max(t, default=1)
    cum = shape(t, d).cumulative
    seen = [0] * (d + 1)
    out = []
    for x in t:
        seen[x] += 1
        out.append(cum[x - 1] + seen[x])
    return tuple(out)


@dataclass(frozen=True)
class SameCoset:
    b: int


@dataclass(frozen=True)
class NewCoset:
    pass


def coset_step(t: Sequence[int], a: int, d: int | None = None) -> SameCoset | NewCoset:
    """Classify pi_t s_a: s_b pi_t when t_a = t_{a+1}, else pi_{s_a . t}."""
    if not 1 <= a < len(t):
        raise IndexError("a=%d out of range for n=%d" % (a, len(t)))
    if t[a - 1] == t[a]:
        return SameCoset(min_coset_rep(t, d)[a - 1])
    return NewCoset()
