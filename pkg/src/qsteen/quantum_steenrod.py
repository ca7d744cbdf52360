"""The quantum Steenrod square on QH*(Tot(O(-1) -> CP^m)).

QS(x^{i+1}) = QS(x^i) * QS(x) + correction(i), starting from QS(1) = 1 and
QS(x) = x * x + x h^2.  The corrections are the closed forms for the twist
k = 1; other twists raise :class:`UnsupportedTwist`.  On scalars QS is
Frobenius-semilinear: QS(x^a T^b) = QS(x^a) T^{2b}.
"""

from __future__ import annotations

import threading
from typing import Iterable

from .errors import (
    NegativeHExponent,
    NotInvertibleConstantTerm,
    RingMismatch,
    UnsupportedTwist,
)
from .novikov import NovikovScalar
from .quantum_ring import Inhomogeneous, QHElement, RingDescriptor, qmul
from .steenrod import binom_mod2


def _min_order(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class EqElement:
    """A power series sum_c f_c h^c with f_c in QH*(M).

    ``truncation_order`` is the largest h-exponent kept, or ``None`` when the
    series is an exact finite sum.
    """

    __slots__ = ("ring", "_coeffs", "truncation_order")

    def __init__(self, ring: RingDescriptor, coeffs: dict | None = None, truncation_order=None):
        self.ring = ring
        self.truncation_order = truncation_order
        out = {}
        for c, f in (coeffs or {}).items():
            if c < 0:
                raise NegativeHExponent(f"h^{c}")
            if truncation_order is not None and c > truncation_order:
                continue
            if f.ring != ring:
                raise RingMismatch(f"{f.ring} vs {ring}")
            if f:
                out[c] = f
        self._coeffs = out

    @classmethod
    def from_terms(cls, ring, terms: Iterable[tuple[int, int, int]], truncation_order=None):
        """Build from monomials ``(h, a, e)`` meaning x^a T^e h^c (repeats cancel)."""
        by_h = {}
        for c, a, e in terms:
            by_h.setdefault(c, []).append((a, e))
        return cls(ring, {c: QHElement(ring, t) for c, t in by_h.items()}, truncation_order)

    @classmethod
    def constant(cls, f: QHElement, truncation_order=None):
        return cls(f.ring, {0: f}, truncation_order)

    @classmethod
    def one(cls, ring, truncation_order=None):
        return cls.constant(QHElement.one(ring), truncation_order)

    @property
    def coeffs(self) -> dict:
        return dict(sorted(self._coeffs.items()))

    def coeff(self, c: int) -> QHElement:
        return self._coeffs.get(c) or QHElement.zero(self.ring)

    def h_exponents(self):
        return sorted(self._coeffs)

    def terms(self) -> frozenset:
        return frozenset(
            (c, a, e) for c, f in self._coeffs.items() for a, e in f.terms
        )

    def valuation(self):
        return min(self._coeffs) if self._coeffs else None

    def is_zero(self):
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    def _same(self, other):
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    def __eq__(self, other):
        if not isinstance(other, EqElement):
            return NotImplemented
        return (
            self.ring == other.ring
            and self._coeffs == other._coeffs
            and self.truncation_order == other.truncation_order
        )

    def equal_through(self, other: "EqElement", order: int) -> bool:
        """Equality of the coefficients of h^0 .. h^order."""
        self._same(other)
        return all(self.coeff(c) == other.coeff(c) for c in range(order + 1))

    def __hash__(self):
        return hash((self.ring, self.terms(), self.truncation_order))

    def __add__(self, other):
        if not isinstance(other, EqElement):
            return NotImplemented
        self._same(other)
        order = _min_order(self.truncation_order, other.truncation_order)
        out = dict(self._coeffs)
        for c, f in other._coeffs.items():
            out[c] = out[c] + f if c in out else f
        return EqElement(self.ring, out, order)

    __sub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, EqElement):
            return eq_mul(self, other)
        if isinstance(other, (QHElement, NovikovScalar)):
            return EqElement(
                self.ring, {c: f * other for c, f in self._coeffs.items()}, self.truncation_order
            )
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (QHElement, NovikovScalar)):
            return self * other
        return NotImplemented

    def shift_h(self, j: int) -> "EqElement":
        """Multiply by h^j (the truncation order stays put)."""
        return EqElement(
            self.ring, {c + j: f for c, f in self._coeffs.items()}, self.truncation_order
        )

    def truncate(self, order) -> "EqElement":
        return EqElement(self.ring, self._coeffs, _min_order(order, self.truncation_order))

    def t_part(self, e: int = 0) -> "EqElement":
        """The part of the series carrying exactly T^e."""
        return EqElement.from_terms(
            self.ring,
            ((c, a, f) for c, a, f in self.terms() if f == e),
            self.truncation_order,
        )

    def degree(self):
        """Common total degree 2a + |T| e + c, ``None`` for zero, else Inhomogeneous."""
        td = self.ring.T_degree
        degs = {2 * a + td * e + c for c, a, e in self.terms()}
        if not degs:
            return None
        if len(degs) > 1:
            return Inhomogeneous
        return degs.pop()

    def __repr__(self):
        return f"EqElement({format_eq(self)})"

    def __str__(self):
        return format_eq(self)


def sorted_terms(f: EqElement):
    """Monomials ordered by h-exponent, then x-exponent, then T-exponent."""
    return sorted(f.terms())


def format_eq(f: EqElement) -> str:
    from .quantum_ring import _monomial_str

    terms = sorted_terms(f)
    if not terms:
        return "0"
    return " + ".join(_monomial_str(a, e, c) for c, a, e in terms)


def eq_mul(a: EqElement, b: EqElement) -> EqElement:
    """Cauchy product in h with quantum multiplication on coefficients."""
    a._same(b)
    order = _min_order(a.truncation_order, b.truncation_order)
    acc = {}
    for c1, f1 in a._coeffs.items():
        for c2, f2 in b._coeffs.items():
            c = c1 + c2
            if order is not None and c > order:
                continue
            p = qmul(f1, f2)
            acc[c] = acc[c] + p if c in acc else p
    return EqElement(a.ring, acc, order)


def eq_invert(a: EqElement, order: int) -> EqElement:
    """Inverse through h^order of a series whose h^0 term is a T-monomial.

    Write a = u (1 + b) with u = T^s and b divisible by h; then
    a^{-1} = u^{-1} sum_k b^k, and b^k starts at h^k.
    """
    ring = a.ring
    lead = a.coeff(0)
    if len(lead.terms) != 1 or next(iter(lead.terms))[0] != 0:
        raise NotInvertibleConstantTerm(f"h^0 coefficient {lead} is not a T-monomial")
    (_, s), = lead.terms
    u_inv = NovikovScalar.monomial(-s)
    b = EqElement(ring, {c: f for c, f in a._coeffs.items() if c > 0}, order) * u_inv
    one = EqElement.one(ring, order)
    total = one
    power = one
    for _ in range(order):
        power = eq_mul(power, b)
        if not power:
            break
        total = total + power
    return total * u_inv


def _require_k1(ring):
    if ring.k != 1:
        raise UnsupportedTwist(f"closed forms exist only for k = 1, got k = {ring.k}")


def correction(i: int, ring: RingDescriptor) -> EqElement:
    """Correction term in QS(x^{i+1}) = QS(x^i) * QS(x) + correction(i)."""
    _require_k1(ring)
    m = ring.m
    if not 1 <= i <= m:
        raise ValueError(f"need 1 <= i <= m, got i={i}")
    terms = []
    c = 2 + 4 * i - 2 * m
    if binom_mod2(i, m - i):
        if c < 0:
            raise NegativeHExponent(f"nonzero correction at h^{c} (i={i}, m={m})")
        terms.append((c, 1, 1))
    if i == m:
        # degree-2 spheres contribute only at the top power
        terms.append((2, 1, 2))
    return EqElement.from_terms(ring, terms)


_memo: dict = {}
_memo_lock = threading.Lock()


def _qs_table(ring: RingDescriptor) -> tuple:
    table = _memo.get(ring)
    if table is not None:
        return table
    with _memo_lock:
        table = _memo.get(ring)
        if table is None:
            x = QHElement.x_power(ring, 1)
            base = EqElement(ring, {0: qmul(x, x), 2: x})
            rows = [EqElement.one(ring), base]
            for i in range(1, ring.m + 1):
                rows.append(eq_mul(rows[i], base) + correction(i, ring))
            table = tuple(rows)
            _memo[ring] = table
    return table


def qs_power(i: int, ring: RingDescriptor) -> EqElement:
    """QS(x^i) for 0 <= i <= m + 1."""
    _require_k1(ring)
    if not 0 <= i <= ring.m + 1:
        raise ValueError(f"need 0 <= i <= m + 1, got i={i}")
    return _qs_table(ring)[i]


def qs_element(f: QHElement) -> EqElement:
    """QS extended additively, with T^b -> T^{2b} on scalars."""
    ring = f.ring
    _require_k1(ring)
    out = EqElement(ring)
    for a, e in f.terms:
        out = out + qs_power(a, ring) * NovikovScalar.monomial(2 * e)
    return out


def closed_form_qsxm(ring: RingDescriptor) -> EqElement:
    """x^m h^{2m} + T sum_{i=1}^m x^i h^{2m-2i}."""
    _require_k1(ring)
    m = ring.m
    terms = [(2 * m, m, 0)] + [(2 * m - 2 * i, i, 1) for i in range(1, m + 1)]
    return EqElement.from_terms(ring, terms)
