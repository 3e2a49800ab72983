"""Graded polynomials, the Hirzebruch L-polynomials, and their inversion.

A GradedPolynomial is a sparse polynomial over Q in named variables, each
carrying an integer weight (half the cohomological degree).  The L-table
machinery expands the multiplicative sequence of t/tanh(t) in formal Chern
roots, rewrites each homogeneous piece in elementary symmetric polynomials,
and substitutes Pontryagin variables, yielding

    L_1 = 1/3*p1,   L_2 = 7/45*p2 - 1/45*p1^2,   ...

together with the triangular inverse polynomials P_i expressing p_i in the
L_j.  The same expansion evaluated in Chern roots directly gives the
symmetric forms ell_i used on the cyclic-group side.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import factorial

from .errors import DomainError, InternalConsistencyError
from .scalars import bernoulli


def _name_key(name: str):
    # natural sort: alphabetic prefix, then numeric suffix; "e" sorts last
    i = 0
    while i < len(name) and not name[i].isdigit():
        i += 1
    prefix, suffix = name[:i], name[i:]
    return (name == "e", prefix, int(suffix) if suffix.isdigit() else -1, name)


class GradedPolynomial:
    """Sparse polynomial over Q with weighted variables.

    Variables are (name, weight) pairs; the monomial weight is the sum of
    exponent times variable weight.  The canonical form sorts variables by
    natural name order (with "e" last) and prints terms in increasing
    (weight, exponent-tuple) order, which reproduces the customary way of
    writing L-polynomials.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, variables, terms):
        vars_ = []
        seen = {}
        for name, w in variables:
            if name in seen:
                if seen[name] != w:
                    raise DomainError("variable %r declared with weights %d and %d"
                                      % (name, seen[name], w))
            else:
                seen[name] = w
                vars_.append((name, int(w)))
        clean = {}
        for mono, c in terms.items():
            c = Fraction(c)
            if len(mono) != len(vars_):
                raise DomainError("exponent tuple of wrong length")
            if c:
                mono = tuple(int(e) for e in mono)
                if any(e < 0 for e in mono):
                    raise DomainError("negative exponent")
                clean[mono] = clean.get(mono, Fraction(0)) + c
        clean = {m: c for m, c in clean.items() if c}
        # prune unused variables, then sort canonically
        used = [i for i in range(len(vars_))
                if any(m[i] for m in clean)]
        vars_ = [vars_[i] for i in used]
        order = sorted(range(len(vars_)), key=lambda i: _name_key(vars_[i][0]))
        self.vars = tuple(vars_[i] for i in order)
        remap = {}
        for mono, c in clean.items():
            kept = tuple(mono[used[i]] for i in order)
            remap[kept] = c
        self.terms = remap

    # --- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> "GradedPolynomial":
        return cls((), {})

    @classmethod
    def constant(cls, c) -> "GradedPolynomial":
        c = Fraction(c)
        return cls((), {(): c} if c else {})

    @classmethod
    def variable(cls, name: str, weight: int) -> "GradedPolynomial":
        return cls(((name, weight),), {(1,): Fraction(1)})

    # --- structure --------------------------------------------------------

    def variables(self) -> tuple:
        return tuple(name for name, _ in self.vars)

    def var_weight(self, name: str) -> int:
        for n, w in self.vars:
            if n == name:
                return w
        raise DomainError("no variable %r" % (name,))

    def is_zero(self) -> bool:
        return not self.terms

    def monomial_weight(self, mono) -> int:
        return sum(e * w for e, (_, w) in zip(mono, self.vars))

    def is_homogeneous(self) -> bool:
        weights = {self.monomial_weight(m) for m in self.terms}
        return len(weights) <= 1

    def weight(self) -> int:
        """Common weight of all terms; 0 for the zero polynomial."""
        weights = {self.monomial_weight(m) for m in self.terms}
        if len(weights) > 1:
            raise DomainError("polynomial is not homogeneous")
        return weights.pop() if weights else 0

    def coefficient(self, mono: dict) -> Fraction:
        """Coefficient of the monomial given as {name: exponent}."""
        names = self.variables()
        for n in mono:
            if n not in names and mono[n]:
                return Fraction(0)
        key = tuple(mono.get(n, 0) for n in names)
        return self.terms.get(key, Fraction(0))

    def constant_value(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if self.vars:
            raise DomainError("polynomial is not constant")
        return self.terms[()]

    # --- arithmetic -------------------------------------------------------

    def _align(self, other: "GradedPolynomial"):
        if self.vars == other.vars:
            return self.vars, self.terms, other.terms
        merged = dict(self.vars)
        for name, w in other.vars:
            if merged.setdefault(name, w) != w:
                raise DomainError("variable %r carries two weights" % (name,))
        names = sorted(merged, key=_name_key)
        vars_ = tuple((n, merged[n]) for n in names)
        pos = {n: i for i, n in enumerate(names)}

        def remap(poly):
            idx = [pos[n] for n, _ in poly.vars]
            out = {}
            for mono, c in poly.terms.items():
                key = [0] * len(names)
                for i, e in zip(idx, mono):
                    key[i] = e
                out[tuple(key)] = c
            return out

        return vars_, remap(self), remap(other)

    def _coerce(self, other):
        if isinstance(other, GradedPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return GradedPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        vars_, a, b = self._align(other)
        out = dict(a)
        for mono, c in b.items():
            out[mono] = out.get(mono, Fraction(0)) + c
        return GradedPolynomial(vars_, out)

    __radd__ = __add__

    def __neg__(self):
        return GradedPolynomial(self.vars,
                                {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        vars_, a, b = self._align(other)
        out = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                key = tuple(x + y for x, y in zip(m1, m2))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return GradedPolynomial(vars_, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise DomainError("polynomial powers take nonnegative integers")
        result = GradedPolynomial.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        _, a, b = self._align(other)
        return a == b

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # --- substitution and evaluation ---------------------------------------

    def substitute(self, assignment: dict, check_weights: bool = False
                   ) -> "GradedPolynomial":
        """Replace variables by polynomials (or constants).

        Every key of the assignment must be a variable of this polynomial;
        with check_weights=True each image must be homogeneous of the same
        weight as the variable it replaces.
        """
        names = self.variables()
        unknown = set(assignment) - set(names)
        if unknown:
            raise DomainError("assignment mentions unknown variable%s %s"
                              % ("s" if len(unknown) > 1 else "",
                                 ", ".join(sorted(unknown))))
        images = {}
        for name, img in assignment.items():
            if isinstance(img, (int, Fraction)):
                img = GradedPolynomial.constant(img)
            if not isinstance(img, GradedPolynomial):
                raise DomainError("image of %r is not a polynomial" % (name,))
            if check_weights and not img.is_zero():
                if not img.is_homogeneous() or img.weight() != self.var_weight(name):
                    raise DomainError(
                        "image of %r is not homogeneous of weight %d"
                        % (name, self.var_weight(name)))
            images[name] = img
        power_cache = {}

        def image_power(name, e):
            key = (name, e)
            if key not in power_cache:
                power_cache[key] = images[name] ** e
            return power_cache[key]

        total = GradedPolynomial.zero()
        for mono, c in self.terms.items():
            term = GradedPolynomial.constant(c)
            for (name, w), e in zip(self.vars, mono):
                if not e:
                    continue
                if name in images:
                    term = term * image_power(name, e)
                else:
                    term = term * GradedPolynomial(((name, w),), {(e,): Fraction(1)})
            total = total + term
        return total

    def evaluate(self, point: dict) -> Fraction:
        """Evaluate at rational coordinates; every variable must be assigned."""
        names = self.variables()
        missing = set(names) - set(point)
        if missing:
            raise DomainError("no value for variable%s %s"
                              % ("s" if len(missing) > 1 else "",
                                 ", ".join(sorted(missing))))
        unknown = set(point) - set(names)
        if unknown:
            raise DomainError("value supplied for unknown variable%s %s"
                              % ("s" if len(unknown) > 1 else "",
                                 ", ".join(sorted(unknown))))
        total = Fraction(0)
        for mono, c in self.terms.items():
            v = c
            for name, e in zip(names, mono):
                if e:
                    v *= Fraction(point[name]) ** e
            total += v
        return total

    # --- printing ----------------------------------------------------------

    def _sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda kv: (self.monomial_weight(kv[0]), kv[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for mono, c in self._sorted_terms():
            factors = []
            for (name, _), e in zip(self.vars, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append("%s^%d" % (name, e))
            mag = abs(c)
            if factors and mag == 1:
                body = "*".join(factors)
            else:
                coeff = str(mag.numerator) if mag.denominator == 1 \
                    else "%d/%d" % (mag.numerator, mag.denominator)
                body = "*".join([coeff] + factors)
            pieces.append((c < 0, body))
        first_neg, first = pieces[0]
        out = ("-" if first_neg else "") + first
        for neg, body in pieces[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __repr__(self):
        return "<GradedPolynomial %s>" % self


# ---------------------------------------------------------------------------
# the multiplicative sequence of t/tanh(t)


def _f_series(order: int) -> list[Fraction]:
    """Coefficients of u^i, u = t^2, in t/tanh(t) = cosh(t) / (sinh(t)/t)."""
    cosh = [Fraction(1, factorial(2 * i)) for i in range(order + 1)]
    sinh_over_t = [Fraction(1, factorial(2 * i + 1)) for i in range(order + 1)]
    quot = []
    for i in range(order + 1):
        acc = cosh[i]
        for s in range(i):
            acc -= quot[s] * sinh_over_t[i - s]
        quot.append(acc)  # sinh_over_t[0] == 1
    return quot


def l_leading_coefficient(i: int) -> Fraction:
    """Coefficient of p_i in L_i: 2^{2i} (2^{2i-1} - 1) |B_{2i}| / (2i)!."""
    if i < 1:
        raise DomainError("L-polynomials are indexed from 1")
    return (Fraction(2 ** (2 * i) * (2 ** (2 * i - 1) - 1), factorial(2 * i))
            * abs(bernoulli(2 * i)))


def _dict_mul(a: dict, b: dict) -> dict:
    out = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            key = tuple(x + y for x, y in zip(m1, m2))
            out[key] = out.get(key, 0) + c1 * c2
    return {m: c for m, c in out.items() if c}


class _ESymCache:
    """Expansions of products of elementary symmetric polynomials in n variables.

    Coefficients here are plain ints; they only meet Fractions at the point
    of subtraction in the rewrite loop.
    """

    def __init__(self, n: int):
        self.n = n
        self.single = {}
        self.products = {(): {(0,) * n: 1}}

    def elementary(self, j: int) -> dict:
        if j not in self.single:
            out = {}
            for subset in combinations(range(self.n), j):
                mono = [0] * self.n
                for t in subset:
                    mono[t] = 1
                out[tuple(mono)] = 1
            self.single[j] = out
        return self.single[j]

    def product(self, partition: tuple) -> dict:
        if partition not in self.products:
            head = self.product(partition[1:])
            self.products[partition] = _dict_mul(self.elementary(partition[0]), head)
        return self.products[partition]


def _conjugate_partition(lam: list[int]) -> tuple:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part >= t)
                 for t in range(1, lam[0] + 1))


def _rewrite_in_elementary(poly: dict, cache: _ESymCache) -> dict:
    """Express a symmetric polynomial as {partition: coefficient}.

    Greedy leading-term elimination: the lex-leading monomial of a symmetric
    polynomial is a partition lambda, and the product of elementary symmetric
    polynomials indexed by the conjugate partition has that same leading
    monomial with coefficient one.
    """
    poly = dict(poly)
    out = {}
    prev_lead = None
    while poly:
        lead = max(poly)
        if prev_lead is not None and lead >= prev_lead:
            raise InternalConsistencyError("leading terms failed to decrease")
        prev_lead = lead
        lam = [e for e in lead if e]
        if any(lead[t] < lead[t + 1] for t in range(len(lead) - 1)):
            raise InternalConsistencyError(
                "leading monomial of a symmetric polynomial is not a partition")
        coeff = poly[lead]
        mu = _conjugate_partition(lam)
        for mono, c in cache.product(mu).items():
            nv = poly.get(mono, Fraction(0)) - coeff * c
            if nv:
                poly[mono] = nv
            else:
                poly.pop(mono, None)
        out[mu] = out.get(mu, Fraction(0)) + coeff
    return out


class LTable:
    """L-polynomials L_1..L_M in the p_i and their inverses P_1..P_M in x_i."""

    def __init__(self, max_index: int, l_polys, p_polys):
        self.max_index = max_index
        self._l = list(l_polys)
        self._p = list(p_polys)

    def l(self, i: int) -> GradedPolynomial:
        if not 1 <= i <= self.max_index:
            raise DomainError("index %d outside table range 1..%d"
                              % (i, self.max_index))
        return self._l[i - 1]

    def p(self, i: int) -> GradedPolynomial:
        if not 1 <= i <= self.max_index:
            raise DomainError("index %d outside table range 1..%d"
                              % (i, self.max_index))
        return self._p[i - 1]


_l_table_cache: dict[int, LTable] = {}


def l_table(max_index: int) -> LTable:
    """Compute L_1..L_M and the inverse polynomials P_1..P_M.

    The expansion uses n = 2M formal Chern roots, one guard term beyond the
    requested order, and rewrites each coefficient in elementary symmetric
    polynomials of the squared roots before substituting e_j -> p_j.
    """
    M = int(max_index)
    if M < 1:
        raise DomainError("l_table wants max_index >= 1")
    if M in _l_table_cache:
        return _l_table_cache[M]
    for bigger in sorted(_l_table_cache):
        if bigger > M:
            big = _l_table_cache[bigger]
            table = LTable(M, big._l[:M], big._p[:M])
            _l_table_cache[M] = table
            return table

    n = 2 * M
    order = M + 1  # one guard coefficient beyond the requested order
    f = _f_series(order)
    # coefficient of u^i in prod_j (1 + f_1 b_j u + f_2 b_j^2 u^2 + ...)
    coeffs = [{(0,) * n: Fraction(1)}] + [{} for _ in range(order)]
    for j in range(n):
        new = [dict(c) for c in coeffs]
        for i in range(1, order + 1):
            for s in range(1, i + 1):
                if not f[s]:
                    continue
                for mono, c in coeffs[i - s].items():
                    shifted = list(mono)
                    shifted[j] += s
                    shifted = tuple(shifted)
                    tgt = new[i]
                    nv = tgt.get(shifted, Fraction(0)) + c * f[s]
                    if nv:
                        tgt[shifted] = nv
                    else:
                        tgt.pop(shifted, None)
        coeffs = new

    # the guard coefficient is computed but never consumed; sanity-check it
    guard = coeffs[order]
    assert all(sum(m) == order for m in guard), "guard term has wrong degree"
    swapped = {(m[1], m[0]) + m[2:]: c for m, c in guard.items()}
    assert swapped == guard, "guard term is not symmetric"

    cache = _ESymCache(n)
    l_polys = []
    for i in range(1, M + 1):
        in_e = _rewrite_in_elementary(coeffs[i], cache)
        vars_ = tuple(("p%d" % j, 2 * j) for j in range(1, i + 1))
        terms = {}
        for partition, c in in_e.items():
            if partition and partition[0] > i:
                raise InternalConsistencyError("e-index exceeds weight")
            mono = [0] * i
            for part in partition:
                mono[part - 1] += 1
            terms[tuple(mono)] = c
        l_polys.append(GradedPolynomial(vars_, terms))

    p_polys = []
    for i in range(1, M + 1):
        li = l_polys[i - 1]
        ci = li.coefficient({"p%d" % i: 1})
        if not ci:
            raise InternalConsistencyError("L_%d has no p_%d term" % (i, i))
        pi_var = GradedPolynomial.variable("p%d" % i, 2 * i)
        qi = li - ci * pi_var
        assign = {"p%d" % j: p_polys[j - 1] for j in range(1, i)
                  if "p%d" % j in qi.variables()}
        xi = GradedPolynomial.variable("x%d" % i, 2 * i)
        p_polys.append((xi - qi.substitute(assign, check_weights=True))
                       * (Fraction(1) / ci))

    table = LTable(M, l_polys, p_polys)
    _l_table_cache[M] = table
    return table


def ell_polynomial(i: int, n: int) -> GradedPolynomial:
    """The symmetric form ell_i(a_1..a_n): L_i with p_j -> e_j(a_1^2..a_n^2).

    Stable once n >= 2i; elementary symmetric polynomials of index beyond n
    are zero, which is how small n truncates the answer.
    """
    if i < 1 or n < 1:
        raise DomainError("ell_polynomial wants i >= 1 and n >= 1")
    li = l_table(i).l(i)
    avars = tuple(("a%d" % j, 1) for j in range(1, n + 1))
    esubs = {}
    for j in range(1, i + 1):
        name = "p%d" % j
        if name not in li.variables():
            continue
        terms = {}
        for subset in combinations(range(n), j):
            mono = [0] * n
            for t in subset:
                mono[t] = 2
            terms[tuple(mono)] = Fraction(1)
        esubs[name] = GradedPolynomial(avars, terms)  # zero when j > n
    return li.substitute(esubs, check_weights=False)
