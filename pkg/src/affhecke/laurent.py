"""Exact integer Laurent polynomials in one variable v.

All scalar coefficients of the algebra live here, together with the bar
involution v -> v^-1.  Values are immutable and hashable; arithmetic is
plain dict convolution on arbitrary-precision ints, so equality is exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class LaurentPoly:
    """Finitely supported map exponent -> coefficient, zero coefficients pruned."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, int] = {}
        for exp, coef in items:
            if not isinstance(exp, int) or not isinstance(coef, int):
                raise TypeError("exponents and coefficients must be ints")
            if coef:
                c[exp] = c.get(exp, 0) + coef
                if not c[exp]:
                    del c[exp]
        self._c = c
        self._hash = None

    # -- constructors ---------------------------------------------------

    @staticmethod
    def monomial(exp: int, coef: int = 1) -> "LaurentPoly":
        return LaurentPoly({exp: coef})

    @staticmethod
    def from_int(k: int) -> "LaurentPoly":
        return LaurentPoly({0: k})

    # -- inspection ------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._c

    def coeff(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def items(self):
        return sorted(self._c.items())

    def valuation(self) -> int:
        """Smallest exponent with nonzero coefficient."""
        if not self._c:
            raise ValueError("zero polynomial has no valuation")
        return min(self._c)

    def top_exponent(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no top exponent")
        return max(self._c)

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def __bool__(self) -> bool:
        return bool(self._c)

    # -- ring structure ---------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other})
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c = dict(self._c)
        for exp, coef in o._c.items():
            c[exp] = c.get(exp, 0) + coef
            if not c[exp]:
                del c[exp]
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = c
        out._hash = None
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {exp: -coef for exp, coef in self._c.items()}
        out._hash = None
        return out

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c: dict[int, int] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in o._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + c1 * c2
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e: k for e, k in c.items() if k}
        out._hash = None
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative int")
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # -- involution and specialization -------------------------------------

    def bar(self) -> "LaurentPoly":
        """The involution v -> v^-1 (negate every exponent)."""
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {-exp: coef for exp, coef in self._c.items()}
        out._hash = None
        return out

    def specialize_q(self, q) -> Fraction:
        """Evaluate at v^-2 = q.  Requires all exponents even."""
        total = Fraction(0)
        q = Fraction(q)
        for exp, coef in self._c.items():
            if exp % 2:
                raise ValueError("odd exponent %d cannot specialize at v^-2=q" % exp)
            total += coef * q ** (-exp // 2)
        return total

    # -- rendering ----------------------------------------------------------

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for exp, coef in sorted(self._c.items()):
            mag = abs(coef)
            if exp == 0:
                body = str(mag)
            else:
                var = "v" if exp == 1 else "v^%d" % exp
                body = var if mag == 1 else "%d*%s" % (mag, var)
            sign = "-" if coef < 0 else ("" if not parts else "+")
            parts.append(sign + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return "LaurentPoly(%r)" % (dict(sorted(self._c.items())),)

    def to_json(self) -> dict[str, int]:
        return {str(exp): coef for exp, coef in sorted(self._c.items())}

    @staticmethod
    def from_json(data: Mapping[str, int]) -> "LaurentPoly":
        return LaurentPoly({int(exp): int(coef) for exp, coef in data.items()})


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
V = LaurentPoly({1: 1})
V_INV = LaurentPoly({-1: 1})
Q = LaurentPoly({-2: 1})            # the Hecke parameter q = v^-2
Q_MINUS_ONE = LaurentPoly({-2: 1, 0: -1})


def v_power(k: int) -> LaurentPoly:
    return LaurentPoly({k: 1})
