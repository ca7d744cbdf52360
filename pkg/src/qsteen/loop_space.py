"""SH*(T*S^n) = Z/2[x]/(x^2) (x) Z/2[y] and chain-level prefixes of PS.

Gradings: |x| = n, |y| = 1 - n.  Only the leading h-coefficients that the
symplectic Cartan relation pins down are computed; everything past the
first unknown module-action component is left as an explicit unknown tail.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .errors import DimensionMismatch, UnsupportedClass
from .quantum_ring import Inhomogeneous


class LoopRingElement:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Iterable[tuple[int, int]] = ()):
        if n < 2:
            raise UnsupportedClass(f"sphere dimension must be >= 2, got {n}")
        acc = set()
        for xe, ye in terms:
            if xe < 0 or ye < 0:
                raise ValueError("exponents must be nonnegative")
            if xe > 1:
                continue  # x^2 = 0
            acc ^= {(xe, ye)}
        self.n = n
        self.terms = frozenset(acc)

    @classmethod
    def monomial(cls, n, xe, ye):
        return cls(n, [(xe, ye)])

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, LoopRingElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, self.terms))

    def __add__(self, other):
        if not isinstance(other, LoopRingElement):
            return NotImplemented
        if other.n != self.n:
            raise DimensionMismatch(f"S^{self.n} vs S^{other.n}")
        return LoopRingElement(self.n, self.terms ^ other.terms)

    def __mul__(self, other):
        if not isinstance(other, LoopRingElement):
            return NotImplemented
        return loop_mul(self, other)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for xe, ye in sorted(self.terms):
            parts = ["x"] if xe else []
            if ye:
                parts.append("y" if ye == 1 else f"y^{ye}")
            out.append(" ".join(parts) or "1")
        return " + ".join(out)

    def __repr__(self):
        return f"LoopRingElement(n={self.n}, {self})"


def loop_mul(a: LoopRingElement, b: LoopRingElement) -> LoopRingElement:
    if a.n != b.n:
        raise DimensionMismatch(f"S^{a.n} vs S^{b.n}")
    acc = []
    for xa, ya in a.terms:
        for xb, yb in b.terms:
            acc.append((xa + xb, ya + yb))
    return LoopRingElement(a.n, acc)


def loop_degree(a: LoopRingElement):
    degs = {a.n * xe + (1 - a.n) * ye for xe, ye in a.terms}
    if not degs:
        return None
    if len(degs) > 1:
        return Inhomogeneous
    return degs.pop()


class Tail(enum.Enum):
    UNKNOWN = "unknown"
    ZERO = "zero"


@dataclass(frozen=True)
class KnownPrefix:
    """Coefficients of h^r for r < bound; nothing is claimed beyond unless tail is ZERO."""

    known: dict
    bound: int
    tail: Tail = Tail.UNKNOWN

    def __getitem__(self, r):
        if r < self.bound:
            return self.known[r]
        if self.tail is Tail.ZERO:
            return None
        raise KeyError(f"h^{r} is beyond the known prefix (bound {self.bound})")


class Verdict(enum.Enum):
    NONZERO_CERTIFIED = "NonzeroCertified"
    UNKNOWN = "Unknown"
    ZERO = "Zero"


def _classify(a: LoopRingElement):
    """Return (x-exponent, y-exponent) of a supported generator class."""
    if len(a.terms) != 1:
        raise UnsupportedClass(f"{a} is not a monomial generator class")
    (xe, ye), = a.terms
    return xe, ye


def module_action(j: int, a: LoopRingElement, b: LoopRingElement):
    """Chain-level component PS'_j(a; b), or None when no value is known.

    Only PS'_0(a; b) = a^2 b and PS'_j(a; 0) = 0 are available.
    """
    if not b:
        return LoopRingElement(a.n)
    if j == 0:
        return loop_mul(loop_mul(a, a), b)
    return None


def cartan_combination(a: LoopRingElement, prefix: KnownPrefix) -> KnownPrefix:
    """PS_r(a * z) = sum_{k<=r} PS'_{r-k}(a; PS_k(z)), given a prefix of PS(z).

    Stops at the first r where some summand is unknown.
    """
    known = {}
    r = 0
    while r < prefix.bound:
        acc = LoopRingElement(a.n)
        for k in range(r + 1):
            part = module_action(r - k, a, prefix.known[k])
            if part is None:
                return KnownPrefix(known, r, Tail.UNKNOWN)
            acc = acc + part
        known[r] = acc
        r += 1
    return KnownPrefix(known, r, Tail.UNKNOWN)


def ps_prefix(a: LoopRingElement) -> KnownPrefix:
    """Known leading h-coefficients of PS(a) for a = y^i, x or x y^i."""
    n = a.n
    xe, ye = _classify(a)
    if xe == 0:
        # PS_0(y^i) represents y^i * y^i
        return KnownPrefix({0: loop_mul(a, a)}, 1, Tail.UNKNOWN)
    x = LoopRingElement.monomial(n, 1, 0)
    zero = LoopRingElement(n)
    # Sq(x_n) = x_n h^n, and c*_eq = c* + O(h)
    px = KnownPrefix({**{r: zero for r in range(n)}, n: x}, n + 1, Tail.UNKNOWN)
    if ye == 0:
        return px
    return cartan_combination(LoopRingElement.monomial(n, 0, ye), px)


def nonvanishing(a: LoopRingElement) -> Verdict:
    """A nonzero h^0 term cannot be equivariantly exact, so it certifies PS(a) != 0."""
    if not a:
        return Verdict.ZERO
    pre = ps_prefix(a)
    if pre.bound > 0 and pre.known[0]:
        return Verdict.NONZERO_CERTIFIED
    return Verdict.UNKNOWN
