import random

import pytest

from oracles import normal_form_oracle
from qsteen.equivariant import (
    NonMember,
    QuotientDescriptor,
    ZeroThroughOrder,
    in_normal_basis,
    is_homogeneous,
    kernel_element,
    member,
    multiplication_diagnostic,
    ps,
    reconstruct,
    reduce,
    reduce_with_witness,
)
from qsteen.errors import NotInBasis, RingMismatch, UnsupportedTwist
from qsteen.novikov import NovikovScalar
from qsteen.quantum_ring import QHElement, RingDescriptor
from qsteen.quantum_steenrod import EqElement, qs_element, qs_power

R4 = RingDescriptor(4)
Q4 = QuotientDescriptor(R4, 32)


def E(terms, ring=R4, order=None):
    return EqElement.from_terms(ring, terms, order)


def random_series(rng, ring, order, n=8, xmax=None, tmin=-3, tmax=3):
    xmax = ring.m if xmax is None else xmax
    terms = [(rng.randint(0, order), rng.randint(0, xmax), rng.randint(tmin, tmax)) for _ in range(n)]
    return E(terms, ring, order)


def oracle_reduce(f, q):
    nf, mus = normal_form_oracle(f.coeffs, q.generator.coeffs, q.ring.m, q.truncation_order, q.ring)
    return EqElement(q.ring, nf, q.truncation_order), mus


def test_descriptor_checks_generator():
    g = Q4.generator
    assert g.coeff(0) == QHElement(R4, [(4, 1), (0, 2)])
    assert g.degree() == 16
    with pytest.raises(UnsupportedTwist):
        QuotientDescriptor(RingDescriptor(5, 3))


def test_reduce_examples():
    assert reduce(Q4.generator, Q4).is_zero()
    assert reduce(qs_power(4, R4), Q4) == E([(0, 0, 2)], order=32)
    want = E([(0, 0, 1), (2, 3, 0), (6, 1, 0), (8, 0, 0), (10, 3, -1)], order=10)
    assert reduce(qs_power(2, R4), Q4).truncate(10) == want


def test_reduce_example_matches_oracle():
    q = QuotientDescriptor(R4, 10)
    nf, _ = oracle_reduce(qs_power(2, R4), q)
    assert nf == E([(0, 0, 1), (2, 3, 0), (6, 1, 0), (8, 0, 0), (10, 3, -1)], order=10)


def test_member_examples():
    assert member(Q4.generator, Q4) == ZeroThroughOrder(32)
    lam = NovikovScalar([0, 1])
    f = qs_element(kernel_element(R4).scale(lam))
    assert f == Q4.generator * NovikovScalar([0, 2])
    assert member(f, Q4) == ZeroThroughOrder(32)
    assert member(EqElement.constant(QHElement.x_power(R4, 1)), Q4) == NonMember(0)


def test_ps_examples():
    x = QHElement.x_power(R4, 1)
    assert ps(x, Q4) == E([(0, 2, 0), (2, 1, 0)], order=32)
    assert ps(QHElement(R4, [(0, 1)]), Q4) == E([(0, 0, 2)], order=32)
    want = E([(0, 2, 1), (4, 0, 1), (8, 2, 0), (10, 1, 0)], order=10)
    assert ps(QHElement.x_power(R4, 3), Q4).truncate(10) == want
    with pytest.raises(NotInBasis):
        ps(QHElement.x_power(R4, 4), Q4)
    with pytest.raises(RingMismatch):
        ps(QHElement.x_power(RingDescriptor(3), 1), Q4)


def test_ps_x3_matches_oracle():
    q = QuotientDescriptor(R4, 10)
    nf, _ = oracle_reduce(qs_power(3, R4), q)
    assert nf == E([(0, 2, 1), (4, 0, 1), (8, 2, 0), (10, 1, 0)], order=10)


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_reduce_agrees_with_oracle(m):
    ring = RingDescriptor(m)
    q = QuotientDescriptor(ring, 20)
    rng = random.Random(100 + m)
    for _ in range(25):
        f = random_series(rng, ring, 20, xmax=2 * m)
        red = reduce_with_witness(f, q)
        nf, mus = oracle_reduce(f, q)
        assert red.normal_form == nf
        assert red.multipliers == mus


@pytest.mark.parametrize("m", [1, 3, 4, 6])
def test_reduce_laws(m):
    ring = RingDescriptor(m)
    q = QuotientDescriptor(ring, 24)
    rng = random.Random(m)
    for _ in range(40):
        f = random_series(rng, ring, 24)
        g = random_series(rng, ring, 24)
        nf = reduce(f, q)
        assert in_normal_basis(nf)
        assert reduce(nf, q) == nf
        assert reduce(f + g, q) == nf + reduce(g, q)
        lam = NovikovScalar([rng.randint(-2, 2) for _ in range(3)])
        assert reduce(f * lam, q) == nf * lam
        j = rng.randint(0, 5)
        assert reduce(f.shift_h(j), q) == reduce(nf.shift_h(j), q)
        red = reduce_with_witness(f, q)
        assert f + red.normal_form == reconstruct(red, q)


@pytest.mark.parametrize("m", range(1, 7))
def test_kernel_law(m):
    ring = RingDescriptor(m)
    q = QuotientDescriptor(ring, 32)
    rng = random.Random(7 * m)
    for _ in range(20):
        lam = NovikovScalar(rng.sample(range(-5, 6), rng.randint(1, 5)))
        assert member(qs_element(kernel_element(ring).scale(lam)), q) == ZeroThroughOrder(32)


@pytest.mark.parametrize("m", range(1, 11))
def test_reduce_qs_xm_is_T_squared(m):
    ring = RingDescriptor(m)
    q = QuotientDescriptor(ring, 32)
    assert reduce(qs_power(m, ring), q) == E([(0, 0, 2)], ring, 32)


@pytest.mark.parametrize("m", [2, 4, 5])
def test_ps_well_defined_and_homogeneous(m):
    ring = RingDescriptor(m)
    q = QuotientDescriptor(ring, 28)
    rng = random.Random(m)
    for a in range(m):
        for e in (-1, 0, 2):
            s = QHElement.x_power(ring, a, e)
            out = ps(s, q)
            assert is_homogeneous(out, 2 * s.degree())
            lam = NovikovScalar([rng.randint(-3, 3) for _ in range(3)])
            lifted = s + kernel_element(ring).scale(lam)
            assert reduce(qs_element(lifted), q) == out


def test_multiplication_diagnostic():
    x = QHElement.x_power(R4, 1)
    assert Q4.generator * x == E([(2, 4, 1), (4, 3, 1), (6, 2, 1), (8, 1, 1)])
    assert not multiplication_diagnostic(Q4).is_zero()
