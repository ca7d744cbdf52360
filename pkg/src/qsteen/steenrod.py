"""Classical Steenrod squares over Z/2, packaged as power series in h.

Convention: the coefficient of h^r in Sq(a) is Sq^{|a| - r}(a).  So for
x in H^2(CP^m), Sq(x) = x^2 + x h^2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ExponentRange
from .quantum_ring import QHElement, RingDescriptor


def binom_mod2(n: int, j: int) -> int:
    """C(n, j) mod 2 by Lucas: odd iff the bits of j are a subset of those of n."""
    if n < 0 or j < 0:
        raise ExponentRange("binom_mod2 takes nonnegative arguments")
    return 1 if (j & n) == j else 0


@dataclass(frozen=True)
class SphereClass:
    """Cohomology class of S^n: the unit (degree 0) or the generator x_n."""

    n: int
    degree: int

    def __post_init__(self):
        if self.degree not in (0, self.n):
            raise ExponentRange(f"H^{self.degree}(S^{self.n}) = 0")

    def __str__(self):
        return "1" if self.degree == 0 else f"x_{self.n}"


class HSeriesClassical:
    """Finite series sum_r c_r h^r with classical cohomology coefficients."""

    def __init__(self, coeffs: dict):
        self.coeffs = {r: c for r, c in coeffs.items() if c}
        if any(r < 0 for r in self.coeffs):
            raise ExponentRange("h-exponents must be nonnegative")

    def __eq__(self, other):
        if not isinstance(other, HSeriesClassical):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self):
        body = " + ".join(f"({c}) h^{r}" for r, c in sorted(self.coeffs.items()))
        return f"HSeriesClassical({body or '0'})"

    def terms(self) -> frozenset:
        """Projective case: the set of monomials ``(h, a, e)``."""
        return frozenset(
            (r, a, e) for r, c in self.coeffs.items() for a, e in c.terms
        )

    def cup(self, other: "HSeriesClassical", ring: RingDescriptor) -> "HSeriesClassical":
        """Product in H*(CP^m)[h]: cup product with x^{m+1} = 0."""
        acc = {}
        for r1, c1 in self.coeffs.items():
            for r2, c2 in other.coeffs.items():
                for a1, e1 in c1.terms:
                    for a2, e2 in c2.terms:
                        if a1 + a2 > ring.m:
                            continue
                        acc.setdefault(r1 + r2, set()).symmetric_difference_update(
                            {(a1 + a2, e1 + e2)}
                        )
        return HSeriesClassical({r: QHElement(ring, t) for r, t in acc.items()})


def total_sq_projective(i: int, ring: RingDescriptor) -> HSeriesClassical:
    """Sq(x^i) = sum_j C(i, j) x^{i+j} h^{2(i-j)} in H*(CP^m)."""
    if not 0 <= i <= ring.m:
        raise ExponentRange(f"need 0 <= i <= m, got i={i}, m={ring.m}")
    coeffs = {}
    for j in range(i + 1):
        if binom_mod2(i, j) and i + j <= ring.m:
            coeffs[2 * (i - j)] = QHElement.x_power(ring, i + j)
    return HSeriesClassical(coeffs)


def sphere_sq(n: int, degree: int | None = None) -> HSeriesClassical:
    """Sq on H*(S^n).  The generator gives x_n h^n since x_n^2 = 0; the unit gives 1."""
    if n < 1:
        raise ExponentRange("sphere dimension must be >= 1")
    if degree is None:
        degree = n
    cls = SphereClass(n, degree)
    if degree == 0:
        return HSeriesClassical({0: cls})
    return HSeriesClassical({n: cls})
