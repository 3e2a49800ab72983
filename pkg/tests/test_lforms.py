import random
from fractions import Fraction

import pytest

from charwit.errors import DomainError, InvariantViolation, ParseError
from charwit.lforms import (GroupRingElement, HermitianForm, IntegerForm, arf,
                            coefficient_form, congruence, direct_sum,
                            format_group_ring, hyperbolic, integer_expansion,
                            multisignature, parse_group_ring, random_form,
                            reduce_refinement, signature_int, transfer)
from charwit.repring import VirtualRep, restrict


def gre(text, p=3, k=1):
    return parse_group_ring(text, p, k)


def e8_form(p=3, k=1):
    m = [[0] * 8 for _ in range(8)]
    for i, j in ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)):
        m[i][j] = m[j][i] = -1
    for i in range(8):
        m[i][i] = 2
    return HermitianForm(p, k, 1, m)


def leading_minors(matrix):
    """Sylvester oracle: determinants of leading principal blocks."""
    out = []
    for s in range(1, len(matrix) + 1):
        a = [[Fraction(matrix[i][j]) for j in range(s)] for i in range(s)]
        det = Fraction(1)
        for c in range(s):
            piv = next((i for i in range(c, s) if a[i][c]), None)
            if piv is None:
                det = Fraction(0)
                break
            if piv != c:
                a[c], a[piv] = a[piv], a[c]
                det = -det
            det *= a[c][c]
            for i in range(c + 1, s):
                f = a[i][c] / a[c][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
        out.append(det)
    return out


# ---------------------------------------------------------------------------
# group ring


def test_group_ring_arithmetic():
    x = gre("2 + g - 3*g^2")
    y = gre("g")
    assert x * y == gre("2*g + g^2 - 3")
    assert x + y == gre("2 + 2*g - 3*g^2")
    assert x - x == GroupRingElement.zero(3, 1)
    assert (x * GroupRingElement.one(3, 1)) == x
    assert 2 * y == gre("2*g")
    assert x.coefficient(1) == 1 and x.coefficient(-1) == -3


def test_group_ring_conjugation():
    x = gre("2 + g - 3*g^2")
    assert x.conjugate() == gre("2 + g^2 - 3*g")
    assert x.conjugate().conjugate() == x
    y = gre("1 + 2*g")
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()


def test_group_ring_format_round_trip():
    for text in ("0", "1", "-1", "g", "-g", "2 + g - 3*g^2"):
        assert format_group_ring(gre(text)) == text
    for text in ("g^2 - g", "1*g + 0*g^2", "g + g + g"):
        assert gre(format_group_ring(gre(text))) == gre(text)
    assert format_group_ring(gre("1*g + 0*g^2")) == "g"
    assert format_group_ring(GroupRingElement(3, 1, {2: -1})) == "-g^2"


def test_group_ring_parse_errors():
    with pytest.raises(ParseError) as err:
        gre("2g")
    assert "offset 1" in str(err.value)
    with pytest.raises(ParseError):
        gre("g^")
    with pytest.raises(ParseError):
        gre("")
    with pytest.raises(ParseError):
        gre("g + + g")
    with pytest.raises(ParseError):
        gre("h")


def test_group_ring_levels():
    x = GroupRingElement(3, 2, {10: 1})
    assert x.coefficient(1) == 1  # 10 mod 9
    with pytest.raises(DomainError):
        gre("g") + GroupRingElement(3, 2, {0: 1})
    with pytest.raises(DomainError):
        GroupRingElement(4, 1, {0: 1})
    with pytest.raises(DomainError):
        GroupRingElement(3, 1, {0: 1}).evaluate(2)


def test_reduce_refinement():
    # g^2 = -g^(-2) = -g under the skew relation at order 3
    assert reduce_refinement(gre("g^2"), -1) == gre("-g")
    assert reduce_refinement(gre("g^2"), 1) == gre("g")
    assert reduce_refinement(gre("2"), -1) == GroupRingElement.zero(3, 1)
    assert reduce_refinement(gre("3"), -1) == gre("1")


# ---------------------------------------------------------------------------
# forms and their invariants


def test_form_validation():
    with pytest.raises(DomainError):
        HermitianForm(3, 1, 1, [[1, 0]])
    with pytest.raises(InvariantViolation):
        HermitianForm(3, 1, 1, [["g", "0"], ["0", "0"]])  # g not conj-fixed
    with pytest.raises(InvariantViolation):
        HermitianForm(3, 1, -1, [["0", "1"], ["1", "0"]])
    with pytest.raises(DomainError):
        HermitianForm(3, 1, 1, [[1]], refinement=["0"])
    with pytest.raises(InvariantViolation):
        HermitianForm(3, 1, -1, [["0", "1"], ["-1", "0"]],
                      refinement=["g", "0"])  # g + g^2 != 0


def test_multisignature_rank_one():
    sign = multisignature(HermitianForm(3, 1, 1, [[1]]))
    assert sign.serialize() == [[0, 1], [1, 1], [2, 1]]
    sign = multisignature(HermitianForm(3, 1, 1, [[-2]]))
    assert sign.serialize() == [[0, -1], [1, -1], [2, -1]]
    sign = multisignature(HermitianForm(3, 1, 1, [["2 + g + g^2"]]))
    assert sign.serialize() == [[0, 1], [1, 1], [2, 1]]


def test_multisignature_hyperbolic_vanishes():
    for p, k in ((3, 1), (5, 1), (3, 2)):
        for parity in (1, -1):
            assert multisignature(hyperbolic(p, k, parity, 2)).serialize() == []


def test_multisignature_e8():
    sign = multisignature(e8_form())
    assert sign.serialize() == [[0, 8], [1, 8], [2, 8]]
    sign = multisignature(e8_form(5, 1))
    assert all(m == 8 for _, m in sign.serialize())


def test_multisignature_skew_hand_value():
    """u = g - g^2 maps to 2i sin(2 pi r/3) at chi^r, so i*u*I_2 + the
    off-diagonal hyperbolic part gives signature -2 at r = 1 and +2 at
    r = 2, zero at the trivial character."""
    form = HermitianForm(3, 1, -1,
                         [["g - g^2", "1"], ["-1", "g - g^2"]],
                         refinement=["g", "g"])
    sign = multisignature(form)
    assert sign.serialize() == [[1, -2], [2, 2]]


def test_multisignature_conjugation_symmetry():
    for parity in (1, -1):
        for seed in range(10):
            f = random_form(5, 1, parity, 4, 500 + seed)
            sign = multisignature(f)
            for r in range(5):
                assert sign.multiplicity(-r) == parity * sign.multiplicity(r)


def test_multisignature_additive():
    for parity in (1, -1):
        a = random_form(3, 1, parity, 2, 61)
        b = random_form(3, 1, parity, 4, 67)
        assert multisignature(direct_sum(a, b)) \
            == multisignature(a) + multisignature(b)


def test_multisignature_congruence_invariance():
    for p in (3, 5):
        for parity in (1, -1):
            for seed in range(5):
                f = random_form(p, 1, parity, 4, 700 + seed)
                g = random_form(p, 1, parity, 4, 700 + seed)
                # same seed, same form; roughed up further it keeps its sign
                assert multisignature(f) == multisignature(g)
                e = [[1 if a == b else 0 for b in range(4)] for a in range(4)]
                e[1][3] = GroupRingElement(p, 1, {1: 2, 0: -1})
                assert multisignature(congruence(f, e)) == multisignature(f)


def test_singular_forms_rejected():
    norm = "1 + g + g^2"
    with pytest.raises(InvariantViolation):
        multisignature(HermitianForm(3, 1, 1, [[norm]]))
    with pytest.raises(InvariantViolation):
        multisignature(HermitianForm(3, 1, 1, [[0]]))
    skew_zero = HermitianForm(3, 1, -1, [["0", "g - g^2"], ["g - g^2", "0"]])
    with pytest.raises(InvariantViolation):
        multisignature(skew_zero)  # singular at the trivial character


def test_congruence_transport_frozen():
    h = hyperbolic(3, 1, -1, 1)
    moved = congruence(h, [["1", "g"], ["0", "1"]])
    assert moved.matrix[0][0] == gre("-g + g^2")
    assert moved.matrix[0][1] == gre("1")
    assert moved.refinement[0] == gre("-g")
    assert moved.refinement[1] == GroupRingElement.zero(3, 1)


def test_congruence_preserves_refinement_consistency():
    form = hyperbolic(3, 1, -1, 2)
    for seed in range(10):
        form = congruence(form, _random_transvection(3, 1, 4, seed))
        for a in range(form.rank):
            lhs = form.matrix[a][a]
            mu = form.refinement[a]
            assert lhs == mu - mu.conjugate()


def _random_transvection(p, k, rank, seed):
    rng = random.Random(seed)
    e = [[1 if a == b else 0 for b in range(rank)] for a in range(rank)]
    c = rng.randrange(rank)
    d = (c + rng.randrange(1, rank)) % rank
    e[c][d] = GroupRingElement(p, k, {rng.randrange(p ** k): rng.randint(-2, 2)
                                      for _ in range(2)})
    return e


# ---------------------------------------------------------------------------
# transfer


def test_transfer_of_unit_form():
    f = HermitianForm(3, 2, 1, [["1"]])
    t = transfer(f)
    assert (t.p, t.k, t.rank) == (3, 1, 3)
    one = GroupRingElement.one(3, 1)
    zero = GroupRingElement.zero(3, 1)
    for a in range(3):
        for b in range(3):
            assert t.matrix[a][b] == (one if a == b else zero)


def test_transfer_requires_deeper_level():
    with pytest.raises(DomainError):
        transfer(HermitianForm(3, 1, 1, [["1"]]))


def test_transfer_intertwines_restriction():
    for p, k, parity, rank, seed in ((3, 2, 1, 2, 1), (3, 2, -1, 2, 2),
                                     (5, 2, 1, 1, 3), (3, 2, 1, 3, 4)):
        f = random_form(p, k, parity, rank, seed)
        assert restrict(multisignature(f)) == multisignature(transfer(f))


def test_transfer_carries_refinement():
    f = random_form(3, 2, -1, 2, 99)
    t = transfer(f)
    assert t.parity == -1 and len(t.refinement) == 6
    for a in range(2):
        traced = reduce_refinement(
            GroupRingElement(3, 1,
                             {r // 3: c for r, c in f.refinement[a].coeffs.items()
                              if r % 3 == 0}), -1)
        for i in range(3):
            assert t.refinement[3 * a + i] == traced


# ---------------------------------------------------------------------------
# integer forms


def test_coefficient_form_frozen():
    f = HermitianForm(3, 1, 1, [["2 + g + g^2"]])
    assert coefficient_form(f).matrix == ((2,),)
    skew = HermitianForm(3, 1, -1,
                         [["g - g^2", "1"], ["-1", "g - g^2"]],
                         refinement=["1 + g", "g"])
    b = coefficient_form(skew)
    assert b.matrix == ((0, 1), (-1, 0))
    assert b.refinement == (1, 0)


def test_integer_expansion_sums_multisignature():
    for seed in (3, 5, 8):
        f = random_form(3, 1, 1, 2, seed)
        sign = multisignature(f)
        total = sum(m for _, m in sign.serialize())
        assert signature_int(integer_expansion(f)) == total


def test_signature_e8_with_minor_oracle():
    matrix = [list(row) for row in e8_form().matrix]
    ints = [[x.coefficient(0) for x in row] for row in matrix]
    minors = leading_minors(ints)
    assert all(d > 0 for d in minors) and minors[-1] == 1
    assert signature_int(IntegerForm(1, ints)) == 8


def test_signature_basics():
    assert signature_int(IntegerForm(1, [[0, 1], [1, 0]])) == 0
    assert signature_int(IntegerForm(1, [[2, 0], [0, -3]])) == 0
    assert signature_int(IntegerForm(1, [[1]])) == 1
    with pytest.raises(InvariantViolation):
        signature_int(IntegerForm(1, [[1, 1], [1, 1]]))
    with pytest.raises(DomainError):
        signature_int(IntegerForm(-1, [[0, 1], [-1, 0]]))


def test_arf_fixtures():
    assert arf(IntegerForm(-1, [[0, 1], [-1, 0]], [0, 0])) == 0
    assert arf(IntegerForm(-1, [[0, 1], [-1, 0]], [1, 1])) == 1
    assert arf(IntegerForm(-1, [[0, 1], [-1, 0]], [1, 0])) == 0
    # block sum adds Arf invariants
    block = [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]
    assert arf(IntegerForm(-1, block, [1, 1, 0, 0])) == 1
    assert arf(IntegerForm(-1, block, [1, 1, 1, 1])) == 0


def test_arf_degenerate_rejected():
    with pytest.raises(InvariantViolation):
        arf(IntegerForm(-1, [[0, 2], [-2, 0]], [0, 0]))
    with pytest.raises(DomainError):
        arf(IntegerForm(-1, [[0, 1], [-1, 0]]))
    with pytest.raises(DomainError):
        arf(IntegerForm(1, [[1, 0], [0, 1]], [0, 0]))


def test_random_form_is_deterministic():
    a = random_form(3, 1, -1, 4, 123)
    b = random_form(3, 1, -1, 4, 123)
    assert a == b
    assert a.rank == 4 and a.parity == -1
    with pytest.raises(DomainError):
        random_form(3, 1, -1, 3, 1)
