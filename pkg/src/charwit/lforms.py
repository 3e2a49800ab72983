"""Hermitian and skew-hermitian forms over integral group rings of cyclic
p-groups, and their character-by-character signatures.

A form is a square matrix Lambda over Z[C_{p^k}] with Lambda* = eps Lambda,
eps in {+1, -1}, sesquilinear in the first slot: lambda(x a, y b) =
conj(a) lambda(x, y) b.  Evaluating the group generator at a character
chi^r gives a complex (skew-)hermitian matrix H_r; the multisignature
records signature(H_r) for every r (for skew forms, signature(i H_r)),
packaged as a virtual character.  All of this is computed exactly: the
evaluations live in cyclotomic fields, diagonalization is by congruence,
and pivot signs are certified through the scalars module.

Skew forms carry a quadratic refinement mu, one group-ring value per basis
vector modulo the relations g - eps g^(-1); only its coefficient at the
identity (the Arf datum) survives to the integer invariants, but the full
values are kept so that congruences transport the refinement exactly.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import DomainError, InternalConsistencyError, InvariantViolation
from .repring import VirtualRep
from .scalars import CyclotomicNumber, CyclotomicReal, is_prime


class GroupRingElement:
    """An element of Z[C_{p^k}], coefficients indexed by exponents of g."""

    __slots__ = ("p", "k", "coeffs")

    def __init__(self, p: int, k: int, coeffs: dict):
        if k < 1:
            raise DomainError("level exponent k must be >= 1")
        if p == 2 or not is_prime(p):
            raise DomainError("group order must be a power of an odd prime")
        order = p ** k
        clean = {}
        for r, c in coeffs.items():
            c = int(c)
            if c:
                r = int(r) % order
                clean[r] = clean.get(r, 0) + c
        self.p = p
        self.k = k
        self.coeffs = {r: c for r, c in clean.items() if c}

    @property
    def order(self) -> int:
        return self.p ** self.k

    @classmethod
    def zero(cls, p: int, k: int) -> "GroupRingElement":
        return cls(p, k, {})

    @classmethod
    def one(cls, p: int, k: int) -> "GroupRingElement":
        return cls(p, k, {0: 1})

    @classmethod
    def generator_power(cls, p: int, k: int, r: int) -> "GroupRingElement":
        return cls(p, k, {r: 1})

    def _coerce(self, other):
        if isinstance(other, GroupRingElement):
            if (other.p, other.k) != (self.p, self.k):
                raise DomainError("mixed group rings")
            return other
        if isinstance(other, int):
            return GroupRingElement(self.p, self.k, {0: other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.coeffs)
        for r, c in other.coeffs.items():
            out[r] = out.get(r, 0) + c
        return GroupRingElement(self.p, self.k, out)

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElement(self.p, self.k,
                                {r: -c for r, c in self.coeffs.items()})

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
        out = {}
        for r, c in self.coeffs.items():
            for s, d in other.coeffs.items():
                key = (r + s) % self.order
                out[key] = out.get(key, 0) + c * d
        return GroupRingElement(self.p, self.k, out)

    __rmul__ = __mul__

    def conjugate(self) -> "GroupRingElement":
        return GroupRingElement(self.p, self.k,
                                {-r: c for r, c in self.coeffs.items()})

    def coefficient(self, r: int) -> int:
        return self.coeffs.get(r % self.order, 0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def evaluate(self, d: int) -> CyclotomicNumber:
        """Image under g -> zeta_d, for d dividing the group order."""
        if d < 1 or self.order % d != 0:
            raise DomainError("%d does not divide the group order %d"
                              % (d, self.order))
        return CyclotomicNumber.from_exponents(
            d, [(r % d, c) for r, c in self.coeffs.items()])

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.k, frozenset(self.coeffs.items())))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return "GroupRingElement(%d, %d, %r)" % (self.p, self.k, self.coeffs)

    def __str__(self):
        return format_group_ring(self)


def format_group_ring(x: GroupRingElement) -> str:
    """Canonical text form "c0 + c1*g + c2*g^2 + ..." with zeros omitted."""
    if x.is_zero():
        return "0"
    pieces = []
    for r in sorted(x.coeffs):
        c = x.coeffs[r]
        if r == 0:
            body = str(abs(c))
        elif abs(c) == 1:
            body = "g" if r == 1 else "g^%d" % r
        else:
            body = "%d*g" % abs(c) if r == 1 else "%d*g^%d" % (abs(c), r)
        pieces.append((c < 0, body))
    neg, first = pieces[0]
    out = ("-" if neg else "") + first
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out


def parse_group_ring(text: str, p: int, k: int) -> GroupRingElement:
    """Inverse of format_group_ring; also accepts explicit 1* coefficients."""
    from .errors import ParseError

    coeffs = {}
    pos = 0
    n = len(text)
    sign = 1
    expect_term = True
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            if expect_term:
                raise ParseError("expected a term", offset=pos)
            break
        ch = text[pos]
        if not expect_term:
            if ch == "+":
                sign, expect_term, pos = 1, True, pos + 1
                continue
            if ch == "-":
                sign, expect_term, pos = -1, True, pos + 1
                continue
            raise ParseError("expected '+' or '-'", offset=pos)
        if ch == "-":
            sign, pos = -sign, pos + 1
            continue
        coeff = 1
        have_coeff = False
        if ch.isdigit():
            start = pos
            while pos < n and text[pos].isdigit():
                pos += 1
            coeff = int(text[start:pos])
            have_coeff = True
            while pos < n and text[pos].isspace():
                pos += 1
            if pos < n and text[pos] == "*":
                pos += 1
                while pos < n and text[pos].isspace():
                    pos += 1
            elif pos < n and text[pos] == "g":
                raise ParseError("missing '*' between coefficient and g",
                                 offset=pos)
        exponent = 0
        if pos < n and text[pos] == "g":
            pos += 1
            exponent = 1
            if pos < n and text[pos] == "^":
                pos += 1
                start = pos
                if pos < n and text[pos] == "-":
                    pos += 1
                while pos < n and text[pos].isdigit():
                    pos += 1
                if start == pos or text[start:pos] == "-":
                    raise ParseError("expected exponent digits", offset=pos)
                exponent = int(text[start:pos])
        elif not have_coeff:
            raise ParseError("expected a coefficient or g", offset=pos)
        coeffs[exponent] = coeffs.get(exponent, 0) + sign * coeff
        sign = 1
        expect_term = False
    return GroupRingElement(p, k, coeffs)


def reduce_refinement(x: GroupRingElement, parity: int) -> GroupRingElement:
    """Canonical representative modulo the relations g^s = eps * g^(-s).

    Exponents above half the group order are folded down; for eps = -1 the
    identity coefficient additionally lives mod 2.
    """
    L = x.order
    out = {}
    for r, c in x.coeffs.items():
        if r > L // 2:
            out[L - r] = out.get(L - r, 0) + parity * c
        else:
            out[r] = out.get(r, 0) + c
    if parity == -1:
        out[0] = out.get(0, 0) % 2
    return GroupRingElement(x.p, x.k, out)


class HermitianForm:
    """A nonsingular eps-hermitian form over Z[C_{p^k}], with refinement.

    matrix[a][b] = lambda(v_a, v_b); the parity axiom lambda(y, x) =
    eps * conj(lambda(x, y)) makes the matrix equal to eps times its
    conjugate transpose.  Skew forms (eps = -1) carry the quadratic
    refinement values mu(v_a), reduced mod g - eps g^(-1); hermitian forms
    carry none, their refinement quotient being trivial.
    """

    def __init__(self, p: int, k: int, parity: int, matrix, refinement=None):
        if parity not in (1, -1):
            raise DomainError("parity must be +1 or -1")
        rows = []
        for row in matrix:
            rows.append(tuple(self._entry(p, k, x) for x in row))
        q = len(rows)
        if any(len(row) != q for row in rows):
            raise DomainError("matrix must be square")
        self.p = p
        self.k = k
        self.parity = parity
        self.matrix = tuple(rows)
        self.rank = q
        for a in range(q):
            for b in range(q):
                if self.matrix[b][a] != parity * self.matrix[a][b].conjugate():
                    raise InvariantViolation(
                        "matrix is not %s-symmetric at (%d, %d)"
                        % ("hermitian" if parity == 1 else "skew", a, b))
        if parity == 1:
            if refinement is not None:
                raise DomainError("hermitian forms carry no refinement data")
            self.refinement = None
        else:
            if refinement is None:
                refinement = [GroupRingElement.zero(p, k)] * q
            ref = [reduce_refinement(self._entry(p, k, x), parity)
                   for x in refinement]
            if len(ref) != q:
                raise DomainError("refinement needs one value per basis vector")
            for a in range(q):
                lhs = self.matrix[a][a]
                rhs = ref[a] + parity * ref[a].conjugate()
                if lhs != rhs:
                    raise InvariantViolation(
                        "refinement incompatible with the form at index %d" % a)
            self.refinement = tuple(ref)

    @staticmethod
    def _entry(p, k, x):
        if isinstance(x, GroupRingElement):
            if (x.p, x.k) != (p, k):
                raise DomainError("entry lives in the wrong group ring")
            return x
        if isinstance(x, int):
            return GroupRingElement(p, k, {0: x})
        if isinstance(x, str):
            return parse_group_ring(x, p, k)
        raise DomainError("matrix entries must be group-ring elements")

    @property
    def order(self) -> int:
        return self.p ** self.k

    def arf_vector(self):
        """Identity coefficients of the refinement, mod 2."""
        if self.refinement is None:
            return None
        return tuple(mu.coefficient(0) % 2 for mu in self.refinement)

    def __eq__(self, other):
        return (isinstance(other, HermitianForm)
                and (self.p, self.k, self.parity) == (other.p, other.k, other.parity)
                and self.matrix == other.matrix
                and self.refinement == other.refinement)

    def __repr__(self):
        return ("HermitianForm(p=%d, k=%d, parity=%+d, rank=%d)"
                % (self.p, self.k, self.parity, self.rank))


def hyperbolic(p: int, k: int, parity: int, half_rank: int) -> HermitianForm:
    """Orthogonal sum of half_rank standard (skew-)hyperbolic planes."""
    if half_rank < 1:
        raise DomainError("need at least one hyperbolic plane")
    q = 2 * half_rank
    zero = GroupRingElement.zero(p, k)
    one = GroupRingElement.one(p, k)
    rows = [[zero] * q for _ in range(q)]
    for h in range(half_rank):
        rows[2 * h][2 * h + 1] = one
        rows[2 * h + 1][2 * h] = parity * one
    refinement = None if parity == 1 else [zero] * q
    return HermitianForm(p, k, parity, rows, refinement)


def direct_sum(f1: HermitianForm, f2: HermitianForm) -> HermitianForm:
    if (f1.p, f1.k, f1.parity) != (f2.p, f2.k, f2.parity):
        raise DomainError("forms are not over the same ring and parity")
    zero = GroupRingElement.zero(f1.p, f1.k)
    q1, q2 = f1.rank, f2.rank
    rows = []
    for a in range(q1):
        rows.append(list(f1.matrix[a]) + [zero] * q2)
    for b in range(q2):
        rows.append([zero] * q1 + list(f2.matrix[b]))
    refinement = None
    if f1.parity == -1:
        refinement = list(f1.refinement) + list(f2.refinement)
    return HermitianForm(f1.p, f1.k, f1.parity, rows, refinement)


def congruence(form: HermitianForm, change) -> HermitianForm:
    """The form E Lambda E* in the new basis, refinement transported exactly.

    The rows of E express the new basis through conjugated coordinates, so
    mu'(u_a) = sum_c E_ac conj(E_ac) mu_c + sum_{c<d} E_ac Lambda_cd conj(E_ad).
    """
    p, k, q = form.p, form.k, form.rank
    e = [[HermitianForm._entry(p, k, x) for x in row] for row in change]
    if len(e) != q or any(len(row) != q for row in e):
        raise DomainError("change of basis must be %d x %d" % (q, q))
    lam = form.matrix
    zero = GroupRingElement.zero(p, k)
    half = []
    for a in range(q):
        half.append([sum((e[a][c] * lam[c][d] for c in range(q)), zero)
                     for d in range(q)])
    new = []
    for a in range(q):
        new.append([sum((half[a][d] * e[b][d].conjugate() for d in range(q)),
                        zero) for b in range(q)])
    refinement = None
    if form.parity == -1:
        refinement = []
        for a in range(q):
            acc = zero
            for c in range(q):
                acc = acc + e[a][c] * e[a][c].conjugate() * form.refinement[c]
            for c in range(q):
                for d in range(c + 1, q):
                    acc = acc + e[a][c] * lam[c][d] * e[a][d].conjugate()
            refinement.append(acc)
    return HermitianForm(p, k, form.parity, new, refinement)


# ---------------------------------------------------------------------------
# multisignature


def _diagonalize(mat, level: int, parity: int):
    """Congruence-diagonalize a (skew-)hermitian matrix over Q(zeta_level).

    Returns the list of pivots; raises InvariantViolation when the matrix
    is singular.  For parity -1 the pivots are purely imaginary, for
    parity +1 fixed by conjugation.
    """
    q = len(mat)
    a = [list(row) for row in mat]
    zeta = CyclotomicNumber.zeta(level)

    def add_basis(i, j, lam):
        # v_i <- v_i + v_j * lam
        lam_bar = lam.conjugate()
        for b in range(q):
            a[i][b] = a[i][b] + lam_bar * a[j][b]
        for c in range(q):
            a[c][i] = a[c][i] + a[c][j] * lam

    pivots = []
    for step in range(q):
        piv = None
        for i in range(step, q):
            if not a[i][i].is_zero():
                piv = i
                break
        if piv is None:
            found = None
            for i in range(step, q):
                for j in range(i + 1, q):
                    if not a[i][j].is_zero():
                        found = (i, j)
                        break
                if found:
                    break
            if found is None:
                raise InvariantViolation(
                    "form is singular at a character of order %d" % level)
            i, j = found
            for lam in (CyclotomicNumber.rational(level, 1), zeta):
                probe = lam * a[i][j] + parity * (lam * a[i][j]).conjugate()
                if not probe.is_zero():
                    add_basis(i, j, lam)
                    break
            else:
                raise InternalConsistencyError(
                    "could not create a nonzero diagonal entry")
            piv = i
        if piv != step:
            a[step], a[piv] = a[piv], a[step]
            for row in a:
                row[step], row[piv] = row[piv], row[step]
        pivot = a[step][step]
        for below in range(step + 1, q):
            if a[below][step].is_zero():
                continue
            lam = -(a[below][step] / pivot).conjugate()
            add_basis(below, step, lam)
        pivots.append(pivot)
    return pivots


def multisignature(form: HermitianForm) -> VirtualRep:
    """Signatures of the form at every character, as a virtual character.

    The multiplicity of chi^r is the signature of the complex matrix
    Lambda(zeta^r) for hermitian forms, of i * Lambda(zeta^r) for skew
    ones.  Characters of the same order are Galois conjugates of a single
    exact evaluation, so the form is diagonalized once per divisor of the
    group order and only the pivot signs depend on r.  A singular
    evaluation at any character means the form was not unimodular and
    raises.
    """
    p, k, q = form.p, form.k, form.rank
    L = form.order
    mults = {}
    for j in range(k + 1):
        d = p ** j
        mat = [[form.matrix[a][b].evaluate(d) for b in range(q)]
               for a in range(q)]
        if form.parity == -1 and d == 1:
            _check_nonsingular_rational(mat)
            mults[0] = 0  # i H_0 pairs eigenvalues symmetrically
            continue
        pivots = _diagonalize(mat, d, form.parity)
        if any(x.is_zero() for x in pivots):
            raise InvariantViolation(
                "form is singular at a character of order %d" % d)
        if form.parity == -1:
            u = CyclotomicNumber.zeta(d) - CyclotomicNumber.zeta(d).conjugate()
            pivots = [x / u for x in pivots]
        if d == 1:
            sig = sum(1 if x.rational_value() > 0 else -1 for x in pivots)
            mults[0] = sig
            continue
        for t in range(1, d):
            if t % p == 0:
                continue
            r = (L // d) * t
            sig = 0
            for x in pivots:
                s = CyclotomicReal(x, t).sign()
                if form.parity == -1:
                    # sign of i*(zeta^t - zeta^-t) is -sign(sin(2 pi t / d))
                    s = -s if t < d / 2 else s
                sig += s
            mults[r] = sig
    return VirtualRep(p, k, mults)


def _check_nonsingular_rational(mat):
    """Rank check over Q for the skew evaluation at the trivial character."""
    q = len(mat)
    a = [[x.rational_value() for x in row] for row in mat]
    for col in range(q):
        piv = None
        for i in range(col, q):
            if a[i][col]:
                piv = i
                break
        if piv is None:
            raise InvariantViolation("form is singular at the trivial character")
        a[col], a[piv] = a[piv], a[col]
        inv = Fraction(1) / a[col][col]
        for i in range(col + 1, q):
            if a[i][col]:
                f = a[i][col] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]


# ---------------------------------------------------------------------------
# transfer to the subgroup of index p


def _trace(x: GroupRingElement) -> GroupRingElement:
    """Z[C_{p^k}] -> Z[C_{p^(k-1)}], keeping only the subgroup's coefficients."""
    p = x.p
    return GroupRingElement(
        p, x.k - 1,
        {r // p: c for r, c in x.coeffs.items() if r % p == 0})


def transfer(form: HermitianForm) -> HermitianForm:
    """Restriction of scalars to Z[C_{p^(k-1)}].

    The module keeps its lambda and mu but is viewed over the subgroup,
    with basis v_a, v_a g, ..., v_a g^(p-1); entries are traces
    Tr(lambda_ab g^(j-i)), and the refinement of v_a g^i is Tr(mu_a).
    """
    if form.k < 2:
        raise DomainError("transfer needs level k >= 2")
    p, k, q = form.p, form.k, form.rank
    rows = []
    for a in range(q):
        for i in range(p):
            row = []
            for b in range(q):
                for j in range(p):
                    shifted = form.matrix[a][b] * \
                        GroupRingElement.generator_power(p, k, j - i)
                    row.append(_trace(shifted))
            rows.append(row)
    refinement = None
    if form.parity == -1:
        refinement = []
        for a in range(q):
            traced = _trace(form.refinement[a])
            refinement.extend([traced] * p)
    return HermitianForm(p, k - 1, form.parity, rows, refinement)


# ---------------------------------------------------------------------------
# integer forms: coefficient form, regular expansion, signature, Arf


class IntegerForm:
    """An integer (skew-)symmetric matrix, optionally with mod-2 refinement."""

    def __init__(self, parity: int, matrix, refinement=None):
        if parity not in (1, -1):
            raise DomainError("parity must be +1 or -1")
        rows = tuple(tuple(int(x) for x in row) for row in matrix)
        q = len(rows)
        if any(len(row) != q for row in rows):
            raise DomainError("matrix must be square")
        for a in range(q):
            for b in range(q):
                if rows[a][b] != parity * rows[b][a]:
                    raise InvariantViolation("matrix parity violated")
        self.parity = parity
        self.matrix = rows
        self.rank = q
        if refinement is None:
            self.refinement = None
        else:
            self.refinement = tuple(int(x) % 2 for x in refinement)
            if len(self.refinement) != q:
                raise DomainError("refinement needs one bit per basis vector")

    def __repr__(self):
        return "IntegerForm(parity=%+d, rank=%d)" % (self.parity, self.rank)


def coefficient_form(form: HermitianForm) -> IntegerForm:
    """The identity-coefficient matrix b(x, y) = coeff_1(lambda(x, y))."""
    rows = [[form.matrix[a][b].coefficient(0) for b in range(form.rank)]
            for a in range(form.rank)]
    return IntegerForm(form.parity, rows, form.arf_vector())


def integer_expansion(form: HermitianForm) -> IntegerForm:
    """The coefficient form of the underlying Z-module, rank q * p^k.

    Basis v_a g^i; the entry at ((a,i), (b,j)) is the coefficient of
    g^(i-j) in lambda_ab.  Its signature (for hermitian forms) equals the
    sum of all multisignature values.
    """
    L = form.order
    q = form.rank
    rows = []
    for a in range(q):
        for i in range(L):
            row = []
            for b in range(q):
                lam = form.matrix[a][b]
                for j in range(L):
                    row.append(lam.coefficient(i - j))
            rows.append(row)
    refinement = None
    if form.parity == -1:
        refinement = []
        for a in range(q):
            refinement.extend([form.refinement[a].coefficient(0) % 2] * L)
    return IntegerForm(form.parity, rows, refinement)


def random_form(p: int, k: int, parity: int, rank: int, seed: int) -> HermitianForm:
    """A seeded unimodular test form of the given rank.

    Starts from a hyperbolic form, or for parity +1 possibly a diagonal of
    units, then applies one to six elementary congruences I + alpha e_cd
    whose off-diagonal entry has group-ring support at most three and
    coefficients in [-2, 2].  Transvections are invertible over the group
    ring, so the result stays unimodular.
    """
    rng = random.Random(seed)
    if parity == -1 and rank % 2:
        raise DomainError("skew forms have even rank")
    if parity == 1 and (rank % 2 or rng.random() < 0.5):
        diag = [rng.choice((1, -1)) for _ in range(rank)]
        rows = [[diag[a] if a == b else 0 for b in range(rank)]
                for a in range(rank)]
        form = HermitianForm(p, k, 1, rows)
    else:
        form = hyperbolic(p, k, parity, rank // 2)
    order = p ** k
    for _ in range(rng.randint(1, 6)):
        e = [[GroupRingElement(p, k, {0: 1 if a == b else 0})
              for b in range(rank)] for a in range(rank)]
        c = rng.randrange(rank)
        if rank == 1:
            # no transvections in rank one; rescale by a trivial unit
            e[0][0] = GroupRingElement(p, k,
                                       {rng.randrange(order): rng.choice((1, -1))})
        else:
            d = rng.randrange(rank - 1)
            if d >= c:
                d += 1
            alpha = GroupRingElement(p, k, {
                rng.randrange(order): rng.randint(-2, 2)
                for _ in range(rng.randint(1, 3))})
            e[c][d] = e[c][d] + alpha
        form = congruence(form, e)
    return form


def signature_int(b: IntegerForm) -> int:
    """Signature of a nondegenerate symmetric integer matrix, exactly."""
    if b.parity != 1:
        raise DomainError("signature is for symmetric forms")
    q = b.rank
    a = [[Fraction(x) for x in row] for row in b.matrix]
    sig = 0
    for step in range(q):
        piv = None
        for i in range(step, q):
            if a[i][i]:
                piv = i
                break
        if piv is None:
            found = None
            for i in range(step, q):
                for j in range(i + 1, q):
                    if a[i][j]:
                        found = (i, j)
                        break
                if found:
                    break
            if found is None:
                raise InvariantViolation("matrix is degenerate")
            i, j = found
            for b_ in range(q):
                a[i][b_] += a[j][b_]
            for c in range(q):
                a[c][i] += a[c][j]
            piv = i
        if piv != step:
            a[step], a[piv] = a[piv], a[step]
            for row in a:
                row[step], row[piv] = row[piv], row[step]
        pivot = a[step][step]
        sig += 1 if pivot > 0 else -1
        for below in range(step + 1, q):
            if a[below][step]:
                f = -a[below][step] / pivot
                for b_ in range(q):
                    a[below][b_] += f * a[step][b_]
                for c in range(q):
                    a[c][below] += f * a[c][step]
    return sig


def arf(b: IntegerForm) -> int:
    """Arf invariant of the mod-2 quadratic form attached to a skew form.

    The bilinear form mod 2 must be nondegenerate (it is symplectic, since
    integer skew matrices have even diagonal); the quadratic form on the
    lattice is determined by the refinement bits via
    q(x + y) = q(x) + q(y) + b(x, y).
    """
    if b.parity != -1:
        raise DomainError("the Arf invariant is for skew forms")
    if b.refinement is None:
        raise DomainError("Arf needs the mod-2 refinement vector")
    q = b.rank
    gram = [[x % 2 for x in row] for row in b.matrix]
    qvec = list(b.refinement)
    remaining = list(range(q))
    total = 0
    while remaining:
        i = remaining[0]
        j = None
        for cand in remaining[1:]:
            if gram[i][cand]:
                j = cand
                break
        if j is None:
            raise InvariantViolation("mod-2 form is degenerate")
        total += qvec[i] * qvec[j]
        rest = [l for l in remaining if l not in (i, j)]
        for l in rest:
            alpha = gram[l][j]
            beta = gram[l][i]
            if alpha or beta:
                qvec[l] = (qvec[l] + alpha * qvec[i] + beta * qvec[j]
                           + alpha * beta) % 2
                for m_ in range(q):
                    gram[l][m_] = (gram[l][m_] + alpha * gram[i][m_]
                                   + beta * gram[j][m_]) % 2
                for m_ in range(q):
                    gram[m_][l] = (gram[m_][l] + alpha * gram[m_][i]
                                   + beta * gram[m_][j]) % 2
        remaining = rest
    return total % 2
