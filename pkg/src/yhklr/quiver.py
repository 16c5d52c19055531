"""Quivers, their Q-matrices and small integer polynomials in the y's.

A polynomial is a dict {exponent tuple: integer coefficient}.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Hashable, Iterable, Sequence

from .errors import InvalidQuiver

Poly = dict


def padd(*ps: Poly) -> Poly:
    out: Poly = {}
    for P in ps:
        for k, c in P.items():
            out[k] = out.get(k, 0) + c
    return {k: c for k, c in out.items() if c}


def pscale(P: Poly, c: int) -> Poly:
    return {k: v * c for k, v in P.items() if v * c}


def pmul(P: Poly, R: Poly) -> Poly:
    out: Poly = {}
    for k1, c1 in P.items():
        for k2, c2 in R.items():
            k = tuple(a + b for a, b in zip(k1, k2))
            out[k] = out.get(k, 0) + c1 * c2
    return {k: c for k, c in out.items() if c}


def degree(P: Poly) -> set[int]:
    return {sum(k) for k in P}


def swap_vars(P: Poly) -> Poly:
    """Q(u, v) -> Q(v, u) for bivariate polynomials."""
    return {(b, a): c for (a, b), c in P.items()}


def braid_quotient(P: Poly) -> Poly:
    """(P(y_a, y_{a+1}) - P(y_{a+2}, y_{a+1})) / (y_a - y_{a+2}).

    Input is bivariate in (u, v); output is trivariate in (y_a, y_{a+1}, y_{a+2}).
    The quotient is exact: (u^m - w^m)/(u - w) = sum_s u^s w^(m-1-s).
    """
    out: Poly = {}
    for (m, r), c in P.items():
        for s in range(m):
            k = (s, r, m - 1 - s)
            out[k] = out.get(k, 0) + c
    return {k: c for k, c in out.items() if c}


@dataclass
class QuiverSpec:
    """A finite vertex set with a Q-matrix of bivariate polynomials.

    ``parts`` partitions the vertices; Q must be 1 across distinct parts.
    ``edges`` is kept when the matrix comes from a quiver, so that the
    Cartan matrix and the adjacency names are available.
    """
    vertices: tuple
    Q: dict
    parts: tuple = ()
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        self.validate()
        self._part_of = {}
        for idx, part in enumerate(self.parts or (self.vertices,)):
            for k in part:
                self._part_of[k] = idx

    @classmethod
    def from_quiver(cls, vertices: Iterable[Hashable], edges: Iterable[tuple],
                    parts: Sequence[Sequence[Hashable]] = ()) -> "QuiverSpec":
        vertices = tuple(vertices)
        edges = frozenset(edges)
        Q = {}
        for k, k2 in product(vertices, repeat=2):
            Q[(k, k2)] = cls._quiver_poly(k, k2, edges)
        return cls(vertices, Q, tuple(tuple(p) for p in parts), edges)

    @staticmethod
    def _quiver_poly(k, k2, edges) -> Poly:
        if k == k2:
            return {}
        fwd, back = (k, k2) in edges, (k2, k) in edges
        if fwd and back:            # -(u - v)^2
            return {(2, 0): -1, (1, 1): 2, (0, 2): -1}
        if fwd:                     # v - u
            return {(0, 1): 1, (1, 0): -1}
        if back:                    # u - v
            return {(1, 0): 1, (0, 1): -1}
        return {(0, 0): 1}

    def validate(self) -> None:
        vs = set(self.vertices)
        for k, k2 in product(self.vertices, repeat=2):
            P = self.Q.get((k, k2))
            if P is None:
                raise InvalidQuiver("missing Q entry for %r" % ((k, k2),))
            if k == k2 and P:
                raise InvalidQuiver("Q_{k,k} must vanish")
            if padd(P, pscale(swap_vars(self.Q[(k2, k)]), -1)):
                raise InvalidQuiver("Q_{k,k'}(u,v) != Q_{k',k}(v,u) for %r" % ((k, k2),))
        if self.parts:
            flat = [k for part in self.parts for k in part]
            if sorted(map(repr, flat)) != sorted(map(repr, vs)) or len(flat) != len(vs):
                raise InvalidQuiver("parts do not partition the vertices")
            where = {k: i for i, part in enumerate(self.parts) for k in part}
            for k, k2 in product(self.vertices, repeat=2):
                if where[k] != where[k2] and self.Q[(k, k2)] != {(0, 0): 1}:
                    raise InvalidQuiver("Q must be 1 across distinct parts")

    def part(self, k) -> int:
        return self._part_of[k]

    def relation(self, k, k2) -> str:
        """'same', 'none', 'to' (k -> k2), 'from' (k <- k2) or 'both'."""
        if k == k2:
            return "same"
        fwd, back = (k, k2) in self.edges, (k2, k) in self.edges
        return "both" if fwd and back else "to" if fwd else "from" if back else "none"

    def cartan(self, k, k2) -> int:
        if k == k2:
            return 2
        return -((k, k2) in self.edges) - ((k2, k) in self.edges)


def cyclic_quiver(e: int, d: int = 1) -> QuiverSpec:
    """d disjoint copies of the cyclic quiver on Z/e; vertices (i, j) with j in 1..d."""
    vertices = [(i, j) for j in range(1, d + 1) for i in range(e)]
    edges = [((i, j), ((i + 1) % e, j)) for (i, j) in vertices]
    parts = [[(i, j) for i in range(e)] for j in range(1, d + 1)]
    return QuiverSpec.from_quiver(vertices, edges, parts)
