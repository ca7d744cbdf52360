import pytest

from oracles import pascal_mod2
from qsteen.errors import ExponentRange
from qsteen.quantum_ring import QHElement, RingDescriptor
from qsteen.steenrod import (
    HSeriesClassical,
    SphereClass,
    binom_mod2,
    sphere_sq,
    total_sq_projective,
)

R4 = RingDescriptor(4)
PASCAL = pascal_mod2(64)


def X(a, ring=R4):
    return QHElement.x_power(ring, a)


def test_binom_examples():
    assert binom_mod2(4, 2) == 0
    assert all(binom_mod2(n, 0) == 1 for n in range(50))
    assert binom_mod2(3, 1) == 1


def test_binom_matches_pascal():
    for n in range(65):
        for j in range(65):
            want = PASCAL[n][j] if j <= n else 0
            assert binom_mod2(n, j) == want, (n, j)


def test_total_sq_examples():
    assert total_sq_projective(1, R4) == HSeriesClassical({0: X(2), 2: X(1)})
    assert total_sq_projective(2, R4) == HSeriesClassical({0: X(4), 4: X(2)})
    assert total_sq_projective(0, R4) == HSeriesClassical({0: X(0)})
    with pytest.raises(ExponentRange):
        total_sq_projective(5, R4)


def test_total_sq_truncates_classically():
    # Sq(x^3) in CP^4: x^6 and x^5 die, only x^3 h^6 ... and C(3,1) x^4 h^4 survive
    assert total_sq_projective(3, R4) == HSeriesClassical({4: X(4), 6: X(3)})


def test_sphere_sq():
    assert sphere_sq(3) == HSeriesClassical({3: SphereClass(3, 3)})
    assert sphere_sq(1) == HSeriesClassical({1: SphereClass(1, 1)})
    assert sphere_sq(5, degree=0) == HSeriesClassical({0: SphereClass(5, 0)})
    with pytest.raises(ExponentRange):
        SphereClass(3, 2)


@pytest.mark.parametrize("m", range(1, 11))
def test_classical_cartan(m):
    ring = RingDescriptor(m)
    for i in range(m + 1):
        for j in range(m + 1 - i):
            prod = total_sq_projective(i, ring).cup(total_sq_projective(j, ring), ring)
            assert prod == total_sq_projective(i + j, ring), (i, j)


@pytest.mark.parametrize("m", range(1, 11))
def test_top_coefficient_law(m):
    ring = RingDescriptor(m)
    for i in range(m + 1):
        sq = total_sq_projective(i, ring)
        r = 2 * (2 * i - m)
        present = r >= 0 and (m, 0) in sq.coeffs.get(r, QHElement.zero(ring)).terms
        assert int(present) == binom_mod2(i, m - i)


def test_even_h_exponents():
    for m in range(1, 8):
        ring = RingDescriptor(m)
        for i in range(m + 1):
            assert all(r % 2 == 0 and r >= 0 for r in total_sq_projective(i, ring).coeffs)
