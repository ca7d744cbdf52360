"""Equivariant symplectic cohomology of Tot(O(-1) -> CP^m) as a quotient.

SH*_eq(M) = QH*(M)[[h]] / g Lambda[[h]] with g = QS(x^m + T).  The h^0 term
of g is T (x^m + T), and {1, ..., x^{m-1}, x^m + T} is a Lambda-basis of QH,
so every coefficient splits uniquely into a part in span{1, ..., x^{m-1}}
plus a multiple of x^m + T.  Clearing those multiples one h-degree at a time
gives a canonical normal form.

Everything here is exact only through h^truncation_order.  Only the
Lambda[[h]]-module structure of the quotient is modelled; there is no
multiplication on it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotInBasis, RingMismatch, UnsupportedTwist
from .novikov import NovikovScalar
from .quantum_ring import Inhomogeneous, QHElement, RingDescriptor
from .quantum_steenrod import EqElement, qs_element

DEFAULT_ORDER = 32


@dataclass(frozen=True)
class QuotientDescriptor:
    ring: RingDescriptor
    truncation_order: int = DEFAULT_ORDER
    generator: EqElement = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.ring.k != 1:
            raise UnsupportedTwist("the equivariant quotient is modelled for k = 1 only")
        ring = self.ring
        g = qs_element(kernel_element(ring))
        lead = kernel_element(ring).shift_T(1)
        if g.coeff(0) != lead:
            raise AssertionError(f"h^0 term of generator is {g.coeff(0)}, expected {lead}")
        if g.degree() != 4 * ring.m:
            raise AssertionError(f"generator has degree {g.degree()}, expected {4 * ring.m}")
        object.__setattr__(self, "generator", g)


def kernel_element(ring: RingDescriptor) -> QHElement:
    """x^m + T, which spans ker r for k = 1."""
    return QHElement(ring, [(ring.m, 0), (0, 1)])


@dataclass(frozen=True)
class Reduction:
    """Normal form plus multipliers: f - normal_form = sum_j multipliers[j] h^j g."""

    normal_form: EqElement
    multipliers: dict


def reduce_with_witness(f: EqElement, q: QuotientDescriptor) -> Reduction:
    if f.ring != q.ring:
        raise RingMismatch(f"{f.ring} vs {q.ring}")
    m = q.ring.m
    order = q.truncation_order
    f = f.truncate(order)
    g = q.generator
    t_inv = NovikovScalar.monomial(-1)
    multipliers = {}
    # leading-degree elimination; later degrees see earlier subtractions
    for j in range(order + 1):
        lam = f.coeff(j).coeff(m)
        if not lam:
            continue
        mu = lam * t_inv
        multipliers[j] = mu
        f = f + (g * mu).shift_h(j).truncate(order)
    return Reduction(f.truncate(order), multipliers)


def reduce(f: EqElement, q: QuotientDescriptor) -> EqElement:
    """Canonical representative of f modulo g Lambda[[h]], through h^order."""
    return reduce_with_witness(f, q).normal_form


def reconstruct(red: Reduction, q: QuotientDescriptor) -> EqElement:
    """sum_j multipliers[j] h^j g, truncated at the quotient's order."""
    out = EqElement(q.ring, truncation_order=q.truncation_order)
    for j, mu in red.multipliers.items():
        out = out + (q.generator * mu).shift_h(j).truncate(q.truncation_order)
    return out


def in_normal_basis(f: EqElement) -> bool:
    """True when every coefficient lies in span{1, ..., x^{m-1}}."""
    m = f.ring.m
    return all(a < m for _, a, _ in f.terms())


@dataclass(frozen=True)
class ZeroThroughOrder:
    order: int


@dataclass(frozen=True)
class NonMember:
    h_degree: int


def member(f: EqElement, q: QuotientDescriptor):
    """Membership in g Lambda[[h]], decided through the truncation order."""
    nf = reduce(f, q)
    if nf.is_zero():
        return ZeroThroughOrder(q.truncation_order)
    return NonMember(nf.valuation())


def ps(s: QHElement, q: QuotientDescriptor) -> EqElement:
    """The symplectic square of a class given in the basis 1, ..., x^{m-1}."""
    if s.ring != q.ring:
        raise RingMismatch(f"{s.ring} vs {q.ring}")
    if any(a >= q.ring.m for a, _ in s.terms):
        raise NotInBasis(f"{s} involves x^{q.ring.m}; express it in 1, ..., x^{q.ring.m - 1}")
    # the canonical section sends basis monomials to themselves
    return reduce(qs_element(s), q)


def is_homogeneous(f: EqElement, deg: int) -> bool:
    d = f.degree()
    return d is None or (d is not Inhomogeneous and d == deg)


def multiplication_diagnostic(q: QuotientDescriptor) -> EqElement:
    """Normal form of x * g.

    Nonzero output means g Lambda[[h]] is not closed under multiplication
    by x, so the quotient has no induced ring structure in this model.
    """
    x = QHElement.x_power(q.ring, 1)
    return reduce(q.generator * x, q)
