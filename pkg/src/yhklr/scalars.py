"""Prime-field arithmetic and the parameter pack (p, d, xi, q, e, Lambda)."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .errors import BadModulus, ConfigError, NoPrimitiveRoot


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def inv(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError("0 has no inverse mod %d" % p)
    return pow(a, p - 2, p)


def mult_order(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ValueError("0 has no multiplicative order")
    x, m = a, 1
    while x != 1:
        x = x * a % p
        m += 1
    return m


def quantum_char(q: int, p: int) -> int:
    """Smallest e >= 1 with 1 + q + ... + q^(e-1) = 0 in F_p."""
    q %= p
    if q == 0:
        raise ValueError("q must be nonzero")
    s, term, e = 0, 1, 0
    while True:
        s = (s + term) % p
        term = term * q % p
        e += 1
        if s == 0:
            return e


def sqrt_mod(a: int, p: int) -> int | None:
    a %= p
    for s in range(p):
        if s * s % p == a:
            return s
    return None


def primitive_root_of_unity(d: int, p: int) -> int:
    if (p - 1) % d:
        raise NoPrimitiveRoot("no primitive %d-th root of unity mod %d" % (d, p))
    for x in range(1, p):
        if mult_order(x, p) == d:
            return x
    raise NoPrimitiveRoot("no primitive %d-th root of unity mod %d" % (d, p))


@dataclass(frozen=True)
class FieldCfg:
    p: int
    d: int
    xi: int
    q: int
    e: int
    sqrt_q: int | None = None

    @property
    def degenerate(self) -> bool:
        return self.q == 1

    @property
    def I(self) -> range:
        return range(self.e)

    @property
    def J(self) -> range:
        # J = {1..d}, j carries the eigenvalue xi^j (so j = d means 1)
        return range(1, self.d + 1)

    @property
    def K(self) -> list[tuple[int, int]]:
        return [(i, j) for i in self.I for j in self.J]

    def inv(self, a: int) -> int:
        return inv(a, self.p)

    def qpow(self, i: int) -> int:
        return pow(self.q, i % self.e, self.p) if self.q != 1 else 1

    def xipow(self, j: int) -> int:
        return pow(self.xi, j % self.d, self.p)

    def as_dict(self) -> dict:
        return {"p": self.p, "d": self.d, "xi": self.xi, "q": self.q,
                "e": self.e, "sqrt_q": self.sqrt_q}


def make_field_cfg(p: int, d: int, q: int) -> FieldCfg:
    if not is_prime(p):
        raise BadModulus("%d is not prime" % p)
    if d < 1:
        raise ConfigError("d must be positive")
    if d % p == 0:
        raise BadModulus("p=%d divides d=%d" % (p, d))
    q %= p
    if q == 0:
        raise ConfigError("q must be nonzero mod p")
    xi = primitive_root_of_unity(d, p)
    e = quantum_char(q, p)
    return FieldCfg(p=p, d=d, xi=xi, q=q, e=e, sqrt_q=sqrt_mod(q, p))


@dataclass(frozen=True)
class Weight:
    """Lambda as a map I -> multiplicity; the K-weight is constant in j."""
    entries: tuple[tuple[int, int], ...] = field(default=())

    @classmethod
    def from_map(cls, m: Mapping[int, int], e: int | None = None) -> "Weight":
        acc: dict[int, int] = {}
        for i, c in m.items():
            if c < 0:
                raise ConfigError("negative multiplicity in weight")
            i = i % e if e else i
            acc[i] = acc.get(i, 0) + c
        w = cls(tuple(sorted((i, c) for i, c in acc.items() if c)))
        if w.level < 1:
            raise ConfigError("weight must have level >= 1")
        return w

    @classmethod
    def parse(cls, text: str, e: int | None = None) -> "Weight":
        m: dict[int, int] = {}
        try:
            for part in text.split(","):
                part = part.strip()
                if not part:
                    continue
                i, _, c = part.partition(":")
                m[int(i)] = m.get(int(i), 0) + (int(c) if c else 1)
        except ValueError as exc:
            raise ConfigError("bad weight syntax %r, expected i:mult,..." % text) from exc
        return cls.from_map(m, e)

    def __getitem__(self, i: int) -> int:
        return dict(self.entries).get(i, 0)

    @property
    def level(self) -> int:
        return sum(c for _, c in self.entries)

    def residues(self) -> list[int]:
        """Residues with multiplicity, i.e. the roots of the cyclotomic polynomial."""
        return [i for i, c in self.entries for _ in range(c)]

    def __str__(self) -> str:
        return ",".join("%d:%d" % ic for ic in self.entries)
