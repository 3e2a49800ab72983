"""Virtual representations of cyclic p-groups.

A VirtualRep is a finitely supported integer vector of multiplicities over
the characters chi^0, ..., chi^(p^k - 1) of the cyclic group of order p^k.
The module also houses the two constructions the certificate pipeline needs:
prescribing all p Chern-character values of a virtual representation of C_p
at once (a Vandermonde system over F_p), and averaging a representation into
one with the conjugation symmetry required of a surgery obstruction.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError, InternalConsistencyError
from .scalars import FpScalar, is_prime


class VirtualRep:
    """Integer multiplicities m_r of the characters chi^r of C_{p^k}."""

    __slots__ = ("p", "k", "mults")

    def __init__(self, p: int, k: int, mults: dict):
        if k < 1:
            raise DomainError("level exponent k must be >= 1")
        if p == 2 or not is_prime(p):
            raise DomainError("group order must be a power of an odd prime")
        self.p = p
        self.k = k
        order = p ** k
        clean = {}
        for r, m in mults.items():
            m = int(m)
            if m:
                r = int(r) % order
                clean[r] = clean.get(r, 0) + m
        self.mults = {r: m for r, m in clean.items() if m}

    @property
    def order(self) -> int:
        return self.p ** self.k

    @classmethod
    def character(cls, p: int, k: int, r: int) -> "VirtualRep":
        return cls(p, k, {r: 1})

    def multiplicity(self, r: int) -> int:
        return self.mults.get(r % self.order, 0)

    def dim(self) -> int:
        return sum(self.mults.values())

    def _coerce(self, other):
        if not isinstance(other, VirtualRep):
            return NotImplemented
        if (other.p, other.k) != (self.p, self.k):
            raise DomainError("representations live over different groups")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.mults)
        for r, m in other.mults.items():
            out[r] = out.get(r, 0) + m
        return VirtualRep(self.p, self.k, out)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return VirtualRep(self.p, self.k, {r: -m for r, m in self.mults.items()})

    def __mul__(self, c: int):
        if not isinstance(c, int):
            return NotImplemented
        return VirtualRep(self.p, self.k, {r: c * m for r, m in self.mults.items()})

    __rmul__ = __mul__

    def conjugate(self) -> "VirtualRep":
        return VirtualRep(self.p, self.k,
                          {-r: m for r, m in self.mults.items()})

    def __eq__(self, other):
        return (isinstance(other, VirtualRep)
                and (self.p, self.k) == (other.p, other.k)
                and self.mults == other.mults)

    def __hash__(self):
        return hash((self.p, self.k, frozenset(self.mults.items())))

    def serialize(self) -> list:
        """Sorted [r, m_r] pairs, zero multiplicities omitted."""
        return [[r, self.mults[r]] for r in sorted(self.mults)]

    def __repr__(self):
        if not self.mults:
            return "VirtualRep(%d, %d, 0)" % (self.p, self.k)
        body = " + ".join("%d*chi^%d" % (m, r) for r, m in sorted(self.mults.items()))
        return "VirtualRep(%d, %d, %s)" % (self.p, self.k, body)


def restrict(xi: VirtualRep) -> VirtualRep:
    """Restriction along C_{p^(k-1)} <= C_{p^k}: chi^r -> chi^(r mod p^(k-1))."""
    if xi.k < 2:
        raise DomainError("restriction needs level k >= 2")
    sub = xi.p ** (xi.k - 1)
    out = {}
    for r, m in xi.mults.items():
        out[r % sub] = out.get(r % sub, 0) + m
    return VirtualRep(xi.p, xi.k - 1, out)


def solve_chern_targets(p: int, targets) -> VirtualRep:
    """The unique multiplicity vector in [0, p)^p with prescribed ch_j mod p.

    ch_j(chi^r) = r^j / j! in H^(2j)(BC_p; F_p), so multiplicities must solve
    the Vandermonde system sum_r m_r r^j = j! * target_j for 0 <= j <= p-1
    (0^0 = 1).  Solved by exact Gaussian elimination over F_p; the nodes
    0, ..., p-1 are distinct mod p, so the system is uniquely solvable.
    """
    if p == 2 or not is_prime(p):
        raise DomainError("p must be an odd prime")
    targets = list(targets)
    if len(targets) != p:
        raise DomainError("need exactly %d Chern targets, got %d"
                          % (p, len(targets)))
    rhs = []
    fact = 1
    for j, t in enumerate(targets):
        if isinstance(t, FpScalar):
            if t.p != p:
                raise DomainError("target %d lives mod %d, not mod %d"
                                  % (j, t.p, p))
            t = t.val
        if j:
            fact = fact * j % p
        rhs.append(int(t) * fact % p)

    a = np.empty((p, p + 1), dtype=np.int64)
    base = np.arange(p, dtype=np.int64)
    row = np.ones(p, dtype=np.int64)  # top row is all ones since 0^0 = 1
    a[0, :p] = row
    for j in range(1, p):
        row = row * base % p
        a[j, :p] = row
    a[:, p] = np.asarray(rhs, dtype=np.int64)

    for col in range(p):
        piv = col
        while piv < p and a[piv, col] % p == 0:
            piv += 1
        if piv == p:
            raise InternalConsistencyError("Vandermonde matrix is singular")
        if piv != col:
            a[[col, piv]] = a[[piv, col]]
        inv = pow(int(a[col, col]), -1, p)
        a[col, col:] = a[col, col:] * inv % p
        for other in range(p):
            if other != col and a[other, col]:
                a[other, col:] = (a[other, col:]
                                  - a[other, col] * a[col, col:]) % p

    mults = {r: int(a[r, p]) % p for r in range(p)}
    return VirtualRep(p, 1, mults)


def symmetrize(xi: VirtualRep, n: int) -> VirtualRep:
    """m * (xi + (-1)^n conj(xi)), with m the least positive 2m = 1 mod p.

    The result satisfies conj = (-1)^n * itself as an exact integer identity,
    and has the same Chern characters mod p as xi in degrees of the parity
    of n.
    """
    m = (xi.p + 1) // 2
    sign = -1 if n % 2 else 1
    return m * (xi + sign * xi.conjugate())
