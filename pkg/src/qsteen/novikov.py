"""Finite Laurent polynomials in T over GF(2).

These stand in for elements of the Novikov field Z/2((T)).  Since every
coefficient is 0 or 1, a scalar is just the finite set of exponents whose
coefficient is 1; addition is symmetric difference.
"""

from __future__ import annotations

from typing import Iterable

from .errors import ExponentOverflow, NotMonomial

# Guard against runaway reductions; adjustable at runtime.
EXPONENT_BOUND = 2**16


def _check(exps):
    for e in exps:
        if e > EXPONENT_BOUND or e < -EXPONENT_BOUND:
            raise ExponentOverflow(f"T-exponent {e} outside +-{EXPONENT_BOUND}")


class NovikovScalar:
    __slots__ = ("_exps", "_hash")

    def __init__(self, exponents: Iterable[int] = ()):
        # repeated exponents cancel in pairs
        acc = set()
        for e in exponents:
            acc ^= {int(e)}
        _check(acc)
        self._exps = frozenset(acc)
        self._hash = None

    @classmethod
    def _raw(cls, exps):
        obj = cls.__new__(cls)
        obj._exps = exps
        obj._hash = None
        return obj

    @classmethod
    def zero(cls):
        return _ZERO

    @classmethod
    def one(cls):
        return _ONE

    @classmethod
    def monomial(cls, e: int) -> "NovikovScalar":
        _check((e,))
        return cls._raw(frozenset((e,)))

    @property
    def exponents(self) -> frozenset:
        return self._exps

    @property
    def terms(self) -> dict:
        """Exponent -> coefficient map (coefficients are always 1)."""
        return {e: 1 for e in sorted(self._exps)}

    def is_zero(self) -> bool:
        return not self._exps

    def is_monomial(self) -> bool:
        return len(self._exps) == 1

    def valuation(self):
        return min(self._exps) if self._exps else None

    def __bool__(self):
        return bool(self._exps)

    def __eq__(self, other):
        if isinstance(other, int) and other in (0, 1):
            other = _ONE if other else _ZERO
        if not isinstance(other, NovikovScalar):
            return NotImplemented
        return self._exps == other._exps

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("NovikovScalar", self._exps))
        return self._hash

    def __add__(self, other):
        if not isinstance(other, NovikovScalar):
            return NotImplemented
        return NovikovScalar._raw(self._exps ^ other._exps)

    __sub__ = __add__
    __radd__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        if not isinstance(other, NovikovScalar):
            return NotImplemented
        if len(self._exps) == 1:
            (s,) = self._exps
            out = frozenset(s + e for e in other._exps)
        else:
            acc = set()
            for a in self._exps:
                for b in other._exps:
                    acc ^= {a + b}
            out = frozenset(acc)
        _check(out)
        return NovikovScalar._raw(out)

    def frobenius(self) -> "NovikovScalar":
        out = frozenset(2 * e for e in self._exps)
        _check(out)
        return NovikovScalar._raw(out)

    def monomial_inverse(self) -> "NovikovScalar":
        if len(self._exps) != 1:
            raise NotMonomial(f"{self} is not a single T-monomial")
        (e,) = self._exps
        return NovikovScalar.monomial(-e)

    def __repr__(self):
        return f"NovikovScalar({format_scalar(self)})"

    def __str__(self):
        return format_scalar(self)

    def to_json(self) -> dict:
        if not self._exps:
            return {}
        return {"T": [[e, 1] for e in sorted(self._exps)]}

    @classmethod
    def from_json(cls, data: dict) -> "NovikovScalar":
        return cls(e for e, c in data.get("T", []) if c % 2)


_ZERO = NovikovScalar._raw(frozenset())
_ONE = NovikovScalar._raw(frozenset((0,)))


def format_scalar(a: NovikovScalar) -> str:
    if not a._exps:
        return "0"
    parts = []
    for e in sorted(a._exps):
        if e == 0:
            parts.append("1")
        elif e == 1:
            parts.append("T")
        else:
            parts.append(f"T^{e}")
    return " + ".join(parts)


def add(a: NovikovScalar, b: NovikovScalar) -> NovikovScalar:
    return a + b


def mul(a: NovikovScalar, b: NovikovScalar) -> NovikovScalar:
    return a * b


def frobenius(a: NovikovScalar) -> NovikovScalar:
    """T -> T^2; over GF(2) this agrees with squaring."""
    return a.frobenius()


def monomial_inverse(a: NovikovScalar) -> NovikovScalar:
    return a.monomial_inverse()
