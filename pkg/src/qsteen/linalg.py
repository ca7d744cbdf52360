"""Row reduction of matrices over the Laurent polynomial ring GF(2)[T, T^-1].

Only T-monomials are ever inverted.  All matrices met by the engine admit a
monomial pivot in every nonzero column; anything else raises
:class:`NoMonomialPivot` rather than silently leaving the ring.
"""

from __future__ import annotations

from .errors import NoMonomialPivot
from .novikov import NovikovScalar

ZERO = NovikovScalar.zero()
ONE = NovikovScalar.one()


def _copy(matrix):
    return [list(row) for row in matrix]


def rref(matrix, ncols=None):
    """Reduced row echelon form.

    Returns ``(rows, pivots, pivot_entries)`` where ``pivots[i]`` is the pivot
    column of ``rows[i]`` and ``pivot_entries`` lists the monomials that were
    divided out (their product is the determinant for square input).
    """
    rows = _copy(matrix)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pivots = []
    pivot_entries = []
    r = 0
    for col in range(ncols):
        if r == len(rows):
            break
        found = None
        nonzero = False
        for i in range(r, len(rows)):
            entry = rows[i][col]
            if entry:
                nonzero = True
                if entry.is_monomial():
                    found = i
                    break
        if found is None:
            if nonzero:
                raise NoMonomialPivot(f"column {col} has no T-monomial pivot")
            continue
        rows[r], rows[found] = rows[found], rows[r]
        piv = rows[r][col]
        inv = piv.monomial_inverse()
        rows[r] = [inv * e for e in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a + f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        pivot_entries.append(piv)
        r += 1
    return rows[:r], pivots, pivot_entries


def rank(matrix) -> int:
    return len(rref(matrix)[1])


def kernel(matrix, ncols=None):
    """Basis of ``{v : matrix @ v == 0}`` as a list of coordinate lists."""
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    rows, pivots, _ = rref(matrix, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for row, p in zip(rows, pivots):
            # char 2: moving the free column across the equation keeps the sign
            v[p] = row[f]
        basis.append(v)
    return basis


def det(matrix) -> NovikovScalar:
    """Determinant of a square matrix (signs are irrelevant in characteristic 2)."""
    n = len(matrix)
    _, pivots, entries = rref(matrix, n)
    if len(pivots) < n:
        return ZERO
    out = ONE
    for e in entries:
        out = out * e
    return out


def mat_vec(matrix, vec):
    out = []
    for row in matrix:
        acc = ZERO
        for a, b in zip(row, vec):
            if a and b:
                acc = acc + a * b
        out.append(acc)
    return out


def mat_mul(a, b):
    ncols = len(b[0]) if b else 0
    out = []
    for row in a:
        new = []
        for j in range(ncols):
            acc = ZERO
            for k, e in enumerate(row):
                if e and b[k][j]:
                    acc = acc + e * b[k][j]
            new.append(acc)
        out.append(new)
    return out
