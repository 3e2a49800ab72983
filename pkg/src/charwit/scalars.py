"""Exact scalar arithmetic: rationals, Bernoulli numbers, prime fields,
and real cyclotomic numbers with certified signs.

Rationals are ``fractions.Fraction`` throughout; nothing in the package
touches floating point except the interval arithmetic used to certify the
sign of a provably nonzero cyclotomic real, and that never feeds back into
exact data.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd

from mpmath.ctx_iv import MPIntervalContext

from .errors import (DomainError, InternalConsistencyError,
                     InvariantViolation, ParseError)

Rational = Fraction


def rational_to_string(x: Fraction) -> str:
    """Canonical "num/den" form, denominator always present and positive."""
    x = Fraction(x)
    return "%d/%d" % (x.numerator, x.denominator)


def rational_from_string(text: str) -> Fraction:
    text = text.strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError("bad rational literal %r: %s" % (text, exc))


_bernoulli_cache = [Fraction(1), Fraction(-1, 2)]


def bernoulli(m: int) -> Fraction:
    """The Bernoulli number B_m, with the convention B_1 = -1/2.

    Computed from the defining recurrence sum_{j<=m} C(m+1, j) B_j = 0.
    """
    if m < 0:
        raise DomainError("Bernoulli numbers are indexed by m >= 0")
    while len(_bernoulli_cache) <= m:
        n = len(_bernoulli_cache)
        acc = sum((comb(n + 1, j) * _bernoulli_cache[j] for j in range(n)),
                  Fraction(0))
        _bernoulli_cache.append(-acc / (n + 1))
    return _bernoulli_cache[m]


# ---------------------------------------------------------------------------
# primes and prime fields


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n < 3,215,031,751."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7):
        if n % q == 0:
            return n == q
    if n >= 3215031751:
        raise DomainError("primality test not certified for n >= 3215031751")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def odd_primes_above(n: int):
    """Yield the odd primes strictly greater than n, in increasing order."""
    q = max(n + 1, 3)
    if q % 2 == 0:
        q += 1
    while True:
        if is_prime(q):
            yield q
        q += 2


def largest_prime_factor(n: int) -> int:
    """Largest prime factor of |n|; returns 1 for n in {-1, 0, 1}."""
    n = abs(n)
    best = 1
    d = 2
    while d * d <= n:
        while n % d == 0:
            best = d
            n //= d
        d += 1 if d == 2 else 2
    return max(best, n) if n > 1 else best


_checked_primes: set[int] = set()


def _check_odd_prime(p: int) -> None:
    if p not in _checked_primes:
        if p == 2 or not is_prime(p):
            raise DomainError("modulus %r is not an odd prime" % (p,))
        _checked_primes.add(p)


class FpScalar:
    """An integer mod p, p an odd prime.  Canonical representative in [0, p)."""

    __slots__ = ("p", "val")

    def __init__(self, p: int, val: int):
        _check_odd_prime(p)
        self.p = p
        self.val = val % p

    def _coerce(self, other):
        if isinstance(other, FpScalar):
            if other.p != self.p:
                raise DomainError("mixed moduli %d and %d" % (self.p, other.p))
            return other
        if isinstance(other, int):
            return FpScalar(self.p, other)
        if isinstance(other, Fraction):
            return from_rational(self.p, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpScalar(self.p, self.val + other.val)

    __radd__ = __add__

    def __neg__(self):
        return FpScalar(self.p, -self.val)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpScalar(self.p, self.val - other.val)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpScalar(self.p, self.val * other.val)

    __rmul__ = __mul__

    def inverse(self):
        if self.val == 0:
            raise ZeroDivisionError("0 is not invertible mod %d" % self.p)
        return FpScalar(self.p, pow(self.val, -1, self.p))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return FpScalar(self.p, pow(self.val, e, self.p))

    def __eq__(self, other):
        if isinstance(other, int):
            other = FpScalar(self.p, other)
        return (isinstance(other, FpScalar)
                and self.p == other.p and self.val == other.val)

    def __hash__(self):
        return hash((self.p, self.val))

    def __bool__(self):
        return self.val != 0

    def __repr__(self):
        return "FpScalar(%d, %d)" % (self.p, self.val)


def from_rational(p: int, x) -> FpScalar:
    """Reduce a rational mod p.  The denominator must be a unit mod p."""
    x = Fraction(x)
    if x.denominator % p == 0:
        raise DomainError(
            "denominator of %s vanishes mod %d" % (x, p))
    return FpScalar(p, x.numerator * pow(x.denominator % p, -1, p))


# ---------------------------------------------------------------------------
# cyclotomic arithmetic
#
# Q(zeta_L) for L = p^k an odd prime power (or L = 1) is represented as
# Q[x]/Phi_L(x), elements stored as coefficient tuples of length phi(L).
# Conjugation is x -> x^(L-1) = x^(-1); inverses come from the extended
# Euclidean algorithm in Q[x].


def _prime_power_split(L: int):
    if L == 1:
        return (1, 0)
    for p in range(3, L + 1, 2):
        if L % p == 0:
            k = 0
            m = L
            while m % p == 0:
                m //= p
                k += 1
            if m != 1:
                break
            _check_odd_prime(p)
            return (p, k)
    raise DomainError("level %r is not an odd prime power" % (L,))


class _Level:
    """Cached structure constants of Q[x]/Phi_{p^k}(x)."""

    def __init__(self, L: int):
        p, k = _prime_power_split(L)
        self.L = L
        self.p = p
        self.k = k
        if L == 1:
            self.phi = 1
            self.modulus = [Fraction(-1), Fraction(1)]  # x - 1
        else:
            m = L // p
            self.phi = (p - 1) * m
            mod = [Fraction(0)] * (self.phi + 1)
            for j in range(p):
                mod[j * m] = Fraction(1)
            self.modulus = mod


_levels: dict[int, _Level] = {}


def _level(L: int) -> _Level:
    if L not in _levels:
        _levels[L] = _Level(L)
    return _levels[L]


def _poly_trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def _poly_rem(a, mod):
    """Remainder of a modulo the monic polynomial mod, in place."""
    dm = len(mod) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            a[i] = Fraction(0)
            for j in range(dm):
                if mod[j]:
                    a[i - dm + j] -= c * mod[j]
    del a[dm:]
    return a


def _poly_divmod(a, b):
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    q = [Fraction(0)] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            c = c / lead
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    return _poly_trim(q), _poly_trim(a[:db])


def _poly_xgcd(a, b):
    """(g, s) with s*a = g mod b and g the monic gcd of a, b."""
    r0, r1 = list(a), list(b)
    s0, s1 = [Fraction(1)], []
    while _poly_trim(r1):
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        prod = _poly_mul(q, s1)
        s0, s1 = s1, _poly_trim([x - y for x, y in
                                 _zip_pad(s0, prod)])
    if not r0:
        raise ZeroDivisionError("gcd of zero polynomials")
    lead = r0[-1]
    return [c / lead for c in r0], [c / lead for c in s0]


def _zip_pad(a, b):
    n = max(len(a), len(b))
    za = a + [Fraction(0)] * (n - len(a))
    zb = b + [Fraction(0)] * (n - len(b))
    return zip(za, zb)


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


class CyclotomicNumber:
    """An element of Q(zeta_L), L an odd prime power."""

    __slots__ = ("L", "coeffs")

    def __init__(self, L: int, coeffs):
        lev = _level(L)
        c = list(coeffs)
        if len(c) > lev.phi:
            _poly_rem(c, lev.modulus)
        c = [Fraction(x) for x in c]
        c += [Fraction(0)] * (lev.phi - len(c))
        self.L = L
        self.coeffs = tuple(c)

    @classmethod
    def from_exponents(cls, L: int, pairs) -> "CyclotomicNumber":
        """Build sum c_m * zeta^m from (exponent, coefficient) pairs."""
        raw = [Fraction(0)] * L if L > 1 else [Fraction(0)]
        for m, c in pairs:
            raw[m % L] += Fraction(c)
        return cls(L, raw)

    @classmethod
    def zeta(cls, L: int) -> "CyclotomicNumber":
        return cls.from_exponents(L, [(1 % L, 1)])

    @classmethod
    def rational(cls, L: int, x) -> "CyclotomicNumber":
        return cls(L, [Fraction(x)])

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.L != self.L:
                raise DomainError("mixed cyclotomic levels %d and %d"
                                  % (self.L, other.L))
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.rational(self.L, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CyclotomicNumber(
            self.L, [x + y for x, y in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.L, [-x for x in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CyclotomicNumber(
            self.L, [x - y for x, y in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        prod = _poly_mul(list(self.coeffs), list(other.coeffs))
        return CyclotomicNumber(self.L, prod)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        lev = _level(self.L)
        g, s = _poly_xgcd(_poly_trim(list(self.coeffs)), lev.modulus)
        if len(g) != 1:
            raise InvariantViolation("modulus not coprime to element")
        return CyclotomicNumber(self.L, [c / g[0] for c in s])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def conjugate(self) -> "CyclotomicNumber":
        """Complex conjugation, zeta -> zeta^(-1)."""
        if self.L == 1:
            return self
        return CyclotomicNumber.from_exponents(
            self.L, [((-m) % self.L, c)
                     for m, c in enumerate(self.coeffs) if c])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise DomainError("element is irrational")
        return self.coeffs[0]

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.L, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return "CyclotomicNumber(%d, %r)" % (self.L, list(self.coeffs))


class CyclotomicReal:
    """A conjugation-fixed cyclotomic number together with a real embedding.

    The embedding sends zeta to exp(2 pi i r / L); being fixed by
    conjugation, the element lands on the real line, so it has a
    well-defined sign.  Determining that sign is exact: zero is decided
    from the reduced coordinate vector, and a nonzero value is certified
    by interval arithmetic at increasing precision, which terminates
    because the value is provably nonzero.
    """

    __slots__ = ("number", "embedding")

    def __init__(self, number: CyclotomicNumber, embedding: int = 1):
        if not isinstance(number, CyclotomicNumber):
            raise DomainError("CyclotomicReal wraps a CyclotomicNumber")
        if gcd(embedding, number.L) != 1:
            raise DomainError(
                "embedding index %d not invertible mod %d"
                % (embedding, number.L))
        if number.conjugate() != number:
            raise InvariantViolation(
                "element is not fixed by conjugation, so not real")
        self.number = number
        self.embedding = embedding % max(number.L, 1)

    def sign(self) -> int:
        num = self.number
        if num.is_zero():
            return 0
        if num.is_rational():
            v = num.coeffs[0]
            return 1 if v > 0 else -1
        L = num.L
        r = self.embedding
        prec = 64
        while prec <= (1 << 20):
            ctx = MPIntervalContext()
            ctx.prec = prec
            two_pi = 2 * ctx.pi
            total = ctx.mpf(0)
            for m, c in enumerate(num.coeffs):
                if c:
                    coeff = ctx.mpf(c.numerator) / ctx.mpf(c.denominator)
                    total += coeff * ctx.cos(two_pi * ((r * m) % L) / L)
            if total > 0:
                return 1
            if total < 0:
                return -1
            prec *= 2
        raise InternalConsistencyError(
            "sign of nonzero cyclotomic real undecided at %d bits" % prec)


def sign_of(x: CyclotomicReal) -> int:
    """The sign, in {-1, 0, +1}, of a conjugation-fixed cyclotomic number."""
    return x.sign()
