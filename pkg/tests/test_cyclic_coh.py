import pytest

from charwit.cyclic_coh import (CpClass, LinearRepData, chern_character,
                                euler_class, l_class_linear,
                                pullback_l_nonlinear)
from charwit.errors import DomainError
from charwit.repring import VirtualRep
from charwit.scalars import FpScalar


def test_cpclass_basics():
    a = CpClass(7, 2, FpScalar(7, 3))
    assert a.degree() == 4
    assert a == CpClass(7, 2, FpScalar(7, 3))
    assert a != CpClass(7, 3, FpScalar(7, 3))


def test_linear_rep_data_canonicalizes():
    rho = LinearRepData(5, (7, -2))
    assert rho.residues == (2, 3)
    assert rho.n == 2
    with pytest.raises(DomainError):
        LinearRepData(5, (5,))
    with pytest.raises(DomainError):
        LinearRepData(4, (1,))


def test_euler_class_frozen():
    e = euler_class(LinearRepData(5, (2, 3)))
    assert e.coefficient.val == 1 and e.degree() == 4
    e = euler_class(LinearRepData(7, (1, 2, 3)))
    assert e.coefficient.val == 6 and e.degree() == 6


def test_l_class_linear_frozen():
    v = l_class_linear(LinearRepData(7, (1, 1)), 1)
    assert v.coefficient.val == 3 and v.degree() == 4
    v = l_class_linear(LinearRepData(11, (2,)), 2)
    assert v.coefficient.val == 6 and v.degree() == 8


def test_l_class_linear_prime_bound():
    """L_i has denominator primes up to 2i + 1, so p must exceed that."""
    with pytest.raises(DomainError):
        l_class_linear(LinearRepData(5, (1, 2)), 2)
    v = l_class_linear(LinearRepData(7, (1, 2)), 2)
    assert v.degree() == 8


def test_chern_character_frozen():
    v = chern_character(VirtualRep.character(5, 1, 2), 2)
    assert v.coefficient.val == 2 and v.degree() == 4
    v = chern_character(VirtualRep(5, 1, {0: 3}), 0)
    assert v.coefficient.val == 3  # ch_0 is the dimension, 0^0 = 1


def test_chern_character_bounds():
    xi = VirtualRep.character(5, 1, 1)
    assert chern_character(xi, 4).degree() == 8
    with pytest.raises(DomainError):
        chern_character(xi, 5)
    with pytest.raises(DomainError):
        chern_character(VirtualRep.character(3, 2, 1), 1)


def test_pullback_nonlinear_hand_value():
    """p = 11, n = 2, weights (1, 2), i = 2, xi = chi^1 - chi^0.

    l_2(1, 2) = (7*e2 - e1^2)/45 at e1 = 5, e2 = 4 is 1/15 = 3 mod 11;
    the correction 2^4 * E * ch_2(xi) = 16 * 2 * (1/2) = 16 = 5 mod 11;
    3 - 5 = 9 mod 11.
    """
    rho = LinearRepData(11, (1, 2))
    xi = VirtualRep(11, 1, {1: 1, 0: -1})
    v = pullback_l_nonlinear(rho, xi, 2, 2)
    assert v.coefficient.val == 9 and v.degree() == 8


def test_pullback_linear_branch():
    rho = LinearRepData(11, (1, 2, 3))
    xi = VirtualRep(11, 1, {})
    assert pullback_l_nonlinear(rho, xi, 3, 1) == l_class_linear(rho, 1)


def test_pullback_validates_rank():
    rho = LinearRepData(11, (1, 2))
    xi = VirtualRep(11, 1, {})
    with pytest.raises(DomainError):
        pullback_l_nonlinear(rho, xi, 3, 2)
    with pytest.raises(DomainError):
        pullback_l_nonlinear(rho, VirtualRep(7, 1, {}), 2, 2)
