import random

import pytest

from charwit.cyclic_coh import chern_character
from charwit.errors import DomainError
from charwit.repring import (VirtualRep, restrict, solve_chern_targets,
                             symmetrize)
from charwit.scalars import FpScalar


def test_virtual_rep_canonicalization():
    xi = VirtualRep(5, 1, {7: 2, 2: -2, -1: 3})
    assert xi.serialize() == [[4, 3]]
    assert xi.multiplicity(4) == 3
    assert xi.multiplicity(-1) == 3
    assert xi.multiplicity(0) == 0
    assert xi.dim() == 3
    assert xi.order == 5


def test_virtual_rep_arithmetic():
    a = VirtualRep.character(7, 1, 2)
    b = VirtualRep.character(7, 1, 5)
    assert (a + b).serialize() == [[2, 1], [5, 1]]
    assert (a - a).serialize() == []
    assert (3 * a).dim() == 3
    assert a.conjugate() == b
    assert (-a).multiplicity(2) == -1
    with pytest.raises(DomainError):
        a + VirtualRep.character(5, 1, 1)
    with pytest.raises(DomainError):
        VirtualRep(4, 1, {})
    with pytest.raises(DomainError):
        VirtualRep(3, 0, {})


def test_restrict():
    xi = VirtualRep(3, 2, {3: 1, 4: 2})
    down = restrict(xi)
    assert down.k == 1
    assert down.multiplicity(0) == 1
    assert down.multiplicity(1) == 2
    with pytest.raises(DomainError):
        restrict(down)


def test_solver_roundtrip_frozen():
    xi = solve_chern_targets(5, [0, 1, 0, 0, 0])
    for j in range(5):
        assert chern_character(xi, j).coefficient.val == (1 if j == 1 else 0)


def test_solver_roundtrip_seeded():
    rng = random.Random(13)
    for p in (5, 7, 11, 13, 17):
        for _ in range(20):
            targets = [rng.randrange(p) for _ in range(p)]
            xi = solve_chern_targets(p, targets)
            for j in range(p):
                assert chern_character(xi, j).coefficient.val == targets[j]


def test_solver_accepts_fp_scalars():
    targets = [FpScalar(5, t) for t in (1, 2, 3, 4, 0)]
    xi = solve_chern_targets(5, targets)
    assert chern_character(xi, 0).coefficient.val == 1


def test_solver_validation():
    with pytest.raises(DomainError):
        solve_chern_targets(4, [0, 0, 0, 0])
    with pytest.raises(DomainError):
        solve_chern_targets(5, [0, 0, 0])
    with pytest.raises(DomainError):
        solve_chern_targets(5, [FpScalar(7, 1), 0, 0, 0, 0])


def test_symmetrize_frozen():
    assert symmetrize(VirtualRep.character(5, 1, 1), 2).serialize() \
        == [[1, 3], [4, 3]]
    assert symmetrize(VirtualRep.character(7, 1, 1), 3).serialize() \
        == [[1, 4], [6, -4]]


def test_symmetrize_properties():
    rng = random.Random(17)
    for p in (5, 11):
        for n in (2, 3, 4, 5):
            sign = -1 if n % 2 else 1
            for _ in range(10):
                xi = VirtualRep(p, 1, {rng.randrange(p): rng.randint(-3, 3)
                                       for _ in range(3)})
                sym = symmetrize(xi, n)
                assert sym.conjugate() == sign * sym
                for j in range(n % 2, p, 2):
                    assert chern_character(sym, j) == chern_character(xi, j)
