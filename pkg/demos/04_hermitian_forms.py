"""
Multisignature, transfer, and Arf over cyclic group rings
=========================================================

Equivariant (skew-)hermitian forms over Z[C_{p^k}], their character-by-
character signatures, and the integral shadows of that data.
"""

from charwit import (HermitianForm, IntegerForm, arf, coefficient_form,
                     congruence, hyperbolic, integer_expansion,
                     multisignature, parse_group_ring, random_form, restrict,
                     signature_int, transfer)

# group ring arithmetic: g generates C_3, conjugation sends g to g^-1
x = parse_group_ring("2 + g - 3*g^2", 3, 1)
print("x =", x)
print("x conjugate =", x.conjugate())
print("x * x conjugate =", x * x.conjugate())

# the unit form is positive at every character
unit = HermitianForm(3, 1, 1, [["1"]])
print("multisignature of <1>:", multisignature(unit).serialize())

# hyperbolic forms vanish identically, skew or not
for parity in (1, -1):
    sign = multisignature(hyperbolic(3, 1, parity, 2))
    assert sign.serialize() == []
print("hyperbolic forms have zero multisignature")

# a skew form with quadratic refinement; u = g - g^2 is purely imaginary
# at every nontrivial character, so the two embeddings split +2 / -2
skew = HermitianForm(3, 1, -1,
                     [["g - g^2", "1"], ["-1", "g - g^2"]],
                     refinement=["g", "g"])
print("skew multisignature:", multisignature(skew).serialize())

# congruence moves the matrix and the refinement together and never
# changes the multisignature
moved = congruence(skew, [["1", "g"], ["0", "1"]])
assert multisignature(moved) == multisignature(skew)
print("congruent matrix:", [[str(v) for v in row] for row in moved.matrix])
print("transported refinement:", [str(v) for v in moved.refinement])

# E_8, the classical positive unimodular lattice of rank 8
e8 = [[0] * 8 for _ in range(8)]
for i, j in ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)):
    e8[i][j] = e8[j][i] = -1
for i in range(8):
    e8[i][i] = 2
print("signature of E8:", signature_int(IntegerForm(1, e8)))

# Arf invariants of the two rank-2 quadratic refinements
print("Arf [0,0]:", arf(IntegerForm(-1, [[0, 1], [-1, 0]], [0, 0])))
print("Arf [1,1]:", arf(IntegerForm(-1, [[0, 1], [-1, 0]], [1, 1])))

# transfer down one level of the cyclic tower intertwines restriction
form = random_form(3, 2, 1, 2, seed=7)
down = transfer(form)
assert restrict(multisignature(form)) == multisignature(down)
print("transfer of a rank-%d form at level 2 has rank %d; restriction"
      " of the multisignature agrees" % (form.rank, down.rank))

# the full integral expansion sums the multisignature, a useful cross-check
total = sum(m for _, m in multisignature(form).serialize())
assert signature_int(integer_expansion(form)) == total
print("integer expansion signature = sum of multisignature =", total)

# the identity-coefficient form remembers the Arf data of a skew form
b = coefficient_form(skew)
print("coefficient form:", b.matrix, "refinement bits:", b.refinement)
