"""Recover constraints on the equivariant map r_eq = sum_i h^{2i} r_i.

Each r_i : QH* -> QH*^{+4-2i} is an unknown graded Lambda-linear map with
r_0 = r^2 fixed.  Grading pins every matrix entry of r_i to a single
monomial x^b T^e, so each entry is one unknown bit and the identities

    r_eq(QS(x^i)) = QS(x^{i+1})    for 0 <= i <= m
    r_eq(QS(x^m + T)) = 0

become a linear system over GF(2), compared monomial by monomial in
(h, x, T).  By default entries are restricted to T^e with e >= 0, as
geometric contributions carry nonnegative powers of T; ``nonneg_T=False``
drops that restriction (for m <= 7 the solution is the same either way).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InconsistentSystem, UnsupportedTwist
from .equivariant import kernel_element
from .quantum_ring import QHElement, RingDescriptor
from .quantum_steenrod import EqElement, qs_element, qs_power


def gf2_rref(rows: list[int], nvars: int):
    """Reduce augmented rows (bit ``nvars`` is the right-hand side).

    Returns ``(rows, pivots)``; raises InconsistentSystem on a 0 = 1 row.
    """
    rows = [r for r in rows if r]
    pivots = []
    rank = 0
    for col in range(nvars):
        bit = 1 << col
        p = next((i for i in range(rank, len(rows)) if rows[i] & bit), None)
        if p is None:
            continue
        rows[rank], rows[p] = rows[p], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i] & bit:
                rows[i] ^= rows[rank]
        pivots.append(col)
        rank += 1
    rhs = 1 << nvars
    for r in rows[rank:]:
        if r == rhs:
            raise InconsistentSystem("constraint system has no solution")
    return rows[:rank], pivots


@dataclass
class EntryReport:
    i: int
    a: int
    status: str  # "fixed", "determined" or "undetermined"
    value: QHElement | None
    free: list = field(default_factory=list)  # undetermined (b, e) components


@dataclass
class SolverReport:
    ring: RingDescriptor
    entries: list
    n_unknowns: int
    n_equations: int
    rank: int

    def entry(self, i: int, a: int) -> EntryReport:
        for e in self.entries:
            if e.i == i and e.a == a:
                return e
        raise KeyError((i, a))

    def value(self, i: int, a: int):
        """r_i(x^a) when determined, else None."""
        return self.entry(i, a).value


def _unknowns(ring: RingDescriptor, imax: int, nonneg_T: bool):
    td = ring.T_degree
    out = []
    for i in range(1, imax + 1):
        for a in range(ring.m + 1):
            for b in range(ring.m + 1):
                num = 2 * a + 4 - 2 * i - 2 * b
                if num % td:
                    continue
                e = num // td
                if nonneg_T and e < 0:
                    continue
                out.append((i, a, b, e))
    return out


def req_constraint_solver(ring: RingDescriptor, nonneg_T: bool = True) -> SolverReport:
    if ring.k != 1:
        raise UnsupportedTwist("the r_eq solver is set up for k = 1 only")
    m = ring.m
    # r_i = 0 once 2i > dim_R M + 4 = 2m + 6
    imax = m + 3
    unknowns = _unknowns(ring, imax, nonneg_T)
    by_entry = {}
    for n, (i, a, b, e) in enumerate(unknowns):
        by_entry.setdefault((i, a), []).append((n, b, e))
    nvars = len(unknowns)
    rhs_bit = 1 << nvars

    r0 = {a: QHElement.x_power(ring, a + 2) for a in range(m + 1)}

    def equations(source: EqElement, target: EqElement):
        eqs = {}

        def flip(key, bits):
            eqs[key] = eqs.get(key, 0) ^ bits

        for c, a, e0 in source.terms():
            for b, e in r0[a].terms:
                flip((c, b, e + e0), rhs_bit)
            for i in range(1, imax + 1):
                for n, b, e in by_entry.get((i, a), ()):
                    flip((c + 2 * i, b, e + e0), 1 << n)
        for key in target.terms():
            flip(key, rhs_bit)
        return [v for v in eqs.values() if v]

    rows = []
    for i in range(m + 1):
        rows += equations(qs_power(i, ring), qs_power(i + 1, ring))
    rows += equations(qs_element(kernel_element(ring)), EqElement(ring))

    reduced, pivots = gf2_rref(rows, nvars)
    free_mask = 0
    pivot_set = set(pivots)
    for n in range(nvars):
        if n not in pivot_set:
            free_mask |= 1 << n
    solved = {}
    for row, p in zip(reduced, pivots):
        if not row & free_mask:
            solved[p] = 1 if row & rhs_bit else 0

    entries = [
        EntryReport(0, a, "fixed", r0[a]) for a in range(m + 1)
    ]
    for i in range(1, imax + 1):
        for a in range(m + 1):
            comps = by_entry.get((i, a), [])
            free = [(b, e) for n, b, e in comps if n not in solved]
            if free:
                entries.append(EntryReport(i, a, "undetermined", None, free))
            else:
                terms = [(b, e) for n, b, e in comps if solved[n]]
                entries.append(EntryReport(i, a, "determined", QHElement(ring, terms)))
    return SolverReport(ring, entries, nvars, len(rows), len(pivots))
