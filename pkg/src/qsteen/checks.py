"""Built-in invariant suite behind ``qsteen check``.

Each check returns True/False; ranges are kept small enough to run in a few
seconds.  The pytest suite covers the same ground more thoroughly.
"""

from __future__ import annotations

import random

from .equivariant import (
    QuotientDescriptor,
    ZeroThroughOrder,
    in_normal_basis,
    kernel_element,
    member,
    ps,
    reduce,
)
from .loop_space import LoopRingElement, Verdict, nonvanishing, ps_prefix
from .novikov import NovikovScalar
from .quantum_ring import QHElement, RingDescriptor, qmul
from .quantum_steenrod import EqElement, closed_form_qsxm, qs_element, qs_power
from .req_solver import req_constraint_solver
from .steenrod import binom_mod2, total_sq_projective


def _pascal(nmax):
    rows = [[1]]
    for n in range(1, nmax + 1):
        prev = rows[-1]
        rows.append([1] + [(prev[j - 1] + prev[j]) % 2 for j in range(1, n)] + [1])
    return rows


def check_table():
    R = RingDescriptor(4, 1)
    want = {
        1: [(0, 2, 0), (2, 1, 0)],
        2: [(0, 4, 0), (4, 2, 0)],
        3: [(0, 2, 1), (4, 4, 0), (6, 3, 0)],
        4: [(0, 4, 1), (2, 3, 1), (4, 2, 1), (6, 1, 1), (8, 4, 0)],
        5: [(0, 2, 2), (2, 1, 2)],
    }
    return all(qs_power(i, R) == EqElement.from_terms(R, t) for i, t in want.items())


def check_closed_form():
    return all(qs_power(m, RingDescriptor(m)) == closed_form_qsxm(RingDescriptor(m)) for m in range(1, 11))


def check_semilinearity():
    return all(
        qs_power(m + 1, RingDescriptor(m)) == qs_element(QHElement(RingDescriptor(m), [(1, 1)]))
        for m in range(1, 11)
    )


def check_degrees():
    for m in range(1, 11):
        R = RingDescriptor(m)
        for i in range(m + 2):
            if qs_power(i, R).degree() not in (4 * i, None):
                return False
    return True


def check_classical_limit():
    pas = _pascal(64)
    if any(binom_mod2(n, j) != pas[n][j] for n in range(65) for j in range(n + 1)):
        return False
    for m in range(1, 11):
        R = RingDescriptor(m)
        for i in range(m // 2 + 1):
            if qs_power(i, R).t_part(0).terms() != total_sq_projective(i, R).terms():
                return False
    return True


def check_kernel_law(seed=0, trials=10):
    rng = random.Random(seed)
    for m in range(1, 5):
        R = RingDescriptor(m)
        q = QuotientDescriptor(R, 16)
        for _ in range(trials):
            lam = NovikovScalar(rng.sample(range(-4, 5), rng.randint(1, 4)))
            if not isinstance(member(qs_element(kernel_element(R).scale(lam)), q), ZeroThroughOrder):
                return False
    return True


def check_final_example():
    R = RingDescriptor(4)
    q = QuotientDescriptor(R, 32)
    x = QHElement.x_power(R, 1)
    T = QHElement(R, [(0, 1)])
    return (
        ps(x, q) == EqElement.from_terms(R, [(0, 2, 0), (2, 1, 0)], 32)
        and ps(T, q) == EqElement.from_terms(R, [(0, 0, 2)], 32)
        and reduce(qs_power(4, R), q) == EqElement.from_terms(R, [(0, 0, 2)], 32)
    )


def check_solver():
    for m in range(2, 7):
        R = RingDescriptor(m)
        rep = req_constraint_solver(R)
        zero = QHElement.zero(R)
        if rep.value(2, 0) != zero or rep.value(2, m) != zero:
            return False
        if any(rep.value(i + 2, i) != zero for i in range(1, m + 1)):
            return False
        if rep.value(1, m - 1) != QHElement.x_power(R, m):
            return False
    return True


def check_closing_remark():
    for m in range(1, 10):
        for k in range(1, m + 1, 2):
            if 2 * k > m + 1:
                continue
            R = RingDescriptor(m, k)
            g = QHElement(R, [(m - k + 1, 0), (0, 1)])
            if qmul(g, g) != g.shift_T(1):
                return False
    return True


def check_loop_prefixes():
    for n in range(2, 7):
        for i in range(6):
            y = LoopRingElement.monomial(n, 0, i)
            xy = LoopRingElement.monomial(n, 1, i)
            if ps_prefix(y).known[0] != y * y:
                return False
            p = ps_prefix(xy)
            if any(p.known[r] for r in range(n)) or p.known[n] != LoopRingElement.monomial(n, 1, 2 * i):
                return False
            if nonvanishing(y) is not Verdict.NONZERO_CERTIFIED or nonvanishing(xy) is not Verdict.UNKNOWN:
                return False
    return True


def check_normal_forms(seed=1, trials=20):
    rng = random.Random(seed)
    R = RingDescriptor(4)
    q = QuotientDescriptor(R, 32)
    for _ in range(trials):
        terms = [(rng.randint(0, 32), rng.randint(0, 4), rng.randint(-3, 3)) for _ in range(6)]
        f = EqElement.from_terms(R, terms, 32)
        nf = reduce(f, q)
        if not in_normal_basis(nf) or reduce(nf, q) != nf:
            return False
    return True


CHECKS = [
    ("QS table for m = 4", check_table),
    ("closed form QS(x^m), m = 1..10", check_closed_form),
    ("QS(x^{m+1}) = QS(xT), m = 1..10", check_semilinearity),
    ("QS(x^i) has degree 4i", check_degrees),
    ("classical limit and Lucas vs Pascal", check_classical_limit),
    ("QS(lambda (x^m + T)) lies in the ideal", check_kernel_law),
    ("PS of x and T at m = 4", check_final_example),
    ("r_eq solver conclusions, m = 2..6", check_solver),
    ("(x^{m-k+1} + T)^2 = T (x^{m-k+1} + T)", check_closing_remark),
    ("loop-space prefixes, n = 2..6", check_loop_prefixes),
    ("normal forms are confined and idempotent", check_normal_forms),
]


def run_checks():
    return [(name, bool(fn())) for name, fn in CHECKS]
