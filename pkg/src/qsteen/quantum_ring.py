"""Quantum cohomology of Tot(O(-k) -> CP^m) and the map r.

The ring is Lambda[x]/(x^{m+1} + T x^k) with |x| = 2.  Homogeneity of the
relation fixes |T| = 2(m + 1 - k).  ``k = 0`` is accepted as the closed CP^m
variant (relation x^{m+1} = T), which is handy for unit tests.

Elements are stored as a set of monomials x^a T^e with a <= m.  Because the
relation has a single term on each side, reducing a monomial always yields a
single monomial, so multiplication never needs to expand sums.

The literature sometimes writes the kernel generator of r as x^n + T; here the
base dimension is always called m.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, NamedTuple

from . import linalg
from .errors import ExponentRange, RingMismatch
from .novikov import NovikovScalar, _check


class _Inhomogeneous:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Inhomogeneous"

    def __bool__(self):
        return False


#: Marker returned by degree functions for mixed-degree elements.
Inhomogeneous = _Inhomogeneous()


@dataclass(frozen=True)
class RingDescriptor:
    m: int
    k: int = 1

    def __post_init__(self):
        if self.m < 1:
            raise ExponentRange(f"m must be >= 1, got {self.m}")
        if not 0 <= self.k <= self.m:
            raise ExponentRange(f"need 0 <= k <= m, got k={self.k}, m={self.m}")

    @classmethod
    def closed_projective(cls, m: int) -> "RingDescriptor":
        return cls(m, 0)

    @property
    def T_degree(self) -> int:
        return 2 * (self.m + 1 - self.k)

    @property
    def x_degree(self) -> int:
        return 2

    @property
    def step(self) -> int:
        """How far one application of the relation lowers the x-exponent."""
        return self.m + 1 - self.k

    def reduce_monomial(self, a: int, e: int) -> tuple[int, int]:
        if a > self.m:
            t = -(-(a - self.m) // self.step)
            a -= t * self.step
            e += t
        return a, e

    def to_json(self) -> dict:
        return {"m": self.m, "k": self.k}


class QHElement:
    """An element of QH*(M) in the reduced basis 1, x, ..., x^m."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: RingDescriptor, terms: Iterable[tuple[int, int]] = ()):
        acc = set()
        for a, e in terms:
            if a < 0:
                raise ExponentRange(f"negative x-exponent {a}")
            acc ^= {ring.reduce_monomial(a, e)}
        _check(e for _, e in acc)
        self.ring = ring
        self._terms = frozenset(acc)
        self._hash = None

    @classmethod
    def _raw(cls, ring, terms):
        obj = cls.__new__(cls)
        obj.ring = ring
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, ring):
        return cls._raw(ring, frozenset())

    @classmethod
    def one(cls, ring):
        return cls._raw(ring, frozenset({(0, 0)}))

    @classmethod
    def x_power(cls, ring, a, e=0):
        return cls(ring, [(a, e)])

    @classmethod
    def from_coeffs(cls, ring, coeffs: dict) -> "QHElement":
        return reduce_poly(coeffs, ring)

    @property
    def terms(self) -> frozenset:
        """Set of monomials ``(x-exponent, T-exponent)``."""
        return self._terms

    @property
    def coeffs(self) -> dict:
        out = {}
        for a, e in self._terms:
            out.setdefault(a, []).append(e)
        return {a: NovikovScalar(es) for a, es in sorted(out.items())}

    def coeff(self, a: int) -> NovikovScalar:
        return NovikovScalar(e for b, e in self._terms if b == a)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def _same(self, other):
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    def __eq__(self, other):
        if not isinstance(other, QHElement):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self._terms))
        return self._hash

    def __add__(self, other):
        if not isinstance(other, QHElement):
            return NotImplemented
        self._same(other)
        return QHElement._raw(self.ring, self._terms ^ other._terms)

    __sub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, NovikovScalar):
            return self.scale(other)
        if not isinstance(other, QHElement):
            return NotImplemented
        return qmul(self, other)

    def __rmul__(self, other):
        if isinstance(other, NovikovScalar):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: NovikovScalar) -> "QHElement":
        acc = set()
        for a, e in self._terms:
            for f in c.exponents:
                acc ^= {(a, e + f)}
        _check(e for _, e in acc)
        return QHElement._raw(self.ring, frozenset(acc))

    def shift_T(self, s: int) -> "QHElement":
        out = frozenset((a, e + s) for a, e in self._terms)
        _check(e for _, e in out)
        return QHElement._raw(self.ring, out)

    def degree(self):
        return degree(self)

    def __repr__(self):
        return f"QHElement({format_qh(self)})"

    def __str__(self):
        return format_qh(self)

    def to_json(self) -> dict:
        return {
            "ring": self.ring.to_json(),
            "terms": [{"x": a, "T": e} for a, e in sorted(self._terms)],
        }

    @classmethod
    def from_json(cls, data: dict) -> "QHElement":
        ring = RingDescriptor(**data["ring"])
        return cls(ring, [(t["x"], t.get("T", 0)) for t in data.get("terms", [])])


def _monomial_str(a, e, h=0):
    parts = []
    if a:
        parts.append("x" if a == 1 else f"x^{a}")
    if e:
        parts.append("T" if e == 1 else f"T^{e}")
    if h:
        parts.append("h" if h == 1 else f"h^{h}")
    return " ".join(parts) if parts else "1"


def format_qh(f: QHElement) -> str:
    if not f._terms:
        return "0"
    return " + ".join(_monomial_str(a, e) for a, e in sorted(f._terms))


def reduce_poly(raw, ring: RingDescriptor) -> QHElement:
    """Reduce ``sum coeff_a x^a`` modulo x^{m+1} = T x^k.

    ``raw`` maps x-exponents to :class:`NovikovScalar` coefficients.
    """
    terms = []
    for a, c in raw.items():
        if a < 0:
            raise ExponentRange(f"negative x-exponent {a}")
        terms.extend((a, e) for e in c.exponents)
    return QHElement(ring, terms)


def qmul(a: QHElement, b: QHElement) -> QHElement:
    a._same(b)
    ring = a.ring
    acc = set()
    for xa, ea in a._terms:
        for xb, eb in b._terms:
            acc ^= {ring.reduce_monomial(xa + xb, ea + eb)}
    _check(e for _, e in acc)
    return QHElement._raw(ring, frozenset(acc))


def degree(f: QHElement):
    """Common degree 2a + |T| e of the terms; ``None`` for zero."""
    degs = {2 * a + f.ring.T_degree * e for a, e in f._terms}
    if not degs:
        return None
    if len(degs) > 1:
        return Inhomogeneous
    return degs.pop()


def seidel_r(f: QHElement) -> QHElement:
    """Quantum multiplication by the symplectic class x."""
    return qmul(QHElement.x_power(f.ring, 1), f)


# -- linear algebra on the basis 1, x, ..., x^m -----------------------------

def to_vector(f: QHElement) -> list:
    return [f.coeff(a) for a in range(f.ring.m + 1)]


def from_vector(ring: RingDescriptor, vec) -> QHElement:
    return reduce_poly({a: c for a, c in enumerate(vec) if c}, ring)


def r_power_matrix(ring: RingDescriptor, j: int) -> list:
    """Matrix of r^j; column a holds the coordinates of x^{a+j}."""
    cols = [to_vector(QHElement.x_power(ring, a + j)) for a in range(ring.m + 1)]
    n = ring.m + 1
    return [[cols[c][r] for c in range(n)] for r in range(n)]


def kernel_basis(ring: RingDescriptor, j: int) -> list:
    """Lambda-basis of ker r^j."""
    return [from_vector(ring, v) for v in linalg.kernel(r_power_matrix(ring, j), ring.m + 1)]


def ker_r_power(ring: RingDescriptor) -> tuple[QHElement, int]:
    """Kernel generator x^{m-k+1} + T and the exponent where ker r^j stabilises.

    The stabilisation is computed from kernel dimensions, not assumed.
    """
    n = ring.m + 1
    prev = 0  # dim ker r^0
    stable = 0
    for j in range(1, n + 2):
        dim = n - linalg.rank(r_power_matrix(ring, j))
        if dim == prev:
            break
        prev = dim
        stable = j
    gen = QHElement(ring, [(ring.m - ring.k + 1, 0), (0, 1)])
    return gen, stable


class ShQuotient(NamedTuple):
    basis: list
    project: Callable[[QHElement], QHElement]


def sh_quotient(ring: RingDescriptor) -> ShQuotient:
    """QH / ker r^s with s the stable exponent.

    Kernel vectors are echelonised on descending x-exponent so each one
    eliminates its largest monomial; the remaining monomials form the basis.
    """
    _, stable = ker_r_power(ring)
    kern = kernel_basis(ring, stable)
    m = ring.m
    order = list(range(m, -1, -1))
    rows = [[to_vector(v)[a] for a in order] for v in kern]
    rows, pivots, _ = linalg.rref(rows, m + 1) if rows else ([], [], [])
    rules = []
    for row, p in zip(rows, pivots):
        lead = order[p]
        vec = [None] * (m + 1)
        for idx, a in enumerate(order):
            vec[a] = row[idx]
        rules.append((lead, from_vector(ring, vec)))
    leads = {lead for lead, _ in rules}
    basis = [QHElement.x_power(ring, a) for a in range(m + 1) if a not in leads]

    def project(f: QHElement) -> QHElement:
        if f.ring != ring:
            raise RingMismatch(f"{f.ring} vs {ring}")
        # rref rows are fully reduced, so one pass suffices
        for lead, rel in rules:
            c = f.coeff(lead)
            if c:
                f = f + rel.scale(c)
        return f

    return ShQuotient(basis, project)
