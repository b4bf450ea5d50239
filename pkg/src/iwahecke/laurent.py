"""
Exact integer Laurent polynomials in one variable ``v``.

This is the coefficient ring of the whole package.  The Hecke algebra
parameter is ``q = v**2``, so half-integral powers of ``q`` (which occur in
normalizations like ``q**(l/2)``) are honest monomials here and no rational
arithmetic is ever needed.

>>> q = LaurentPoly.q()
>>> (q - 1) * (q + 1)
LaurentPoly({4: 1, 0: -1})
>>> print((q - 1) * (q + 1))
v^4 - 1
>>> LaurentPoly.v(-3) * LaurentPoly.v(3)
LaurentPoly({0: 1})
"""

from __future__ import annotations

__all__ = ["LaurentPoly", "ZERO", "ONE", "Q", "QM1"]


class LaurentPoly:
    """Finitely supported map exponent-of-v -> integer, no zero values stored."""

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        if coeffs:
            self.c = {e: n for e, n in coeffs.items() if n}
        else:
            self.c = {}

    # -- constructors ------------------------------------------------------

    @staticmethod
    def const(n: int) -> "LaurentPoly":
        return LaurentPoly({0: n})

    @staticmethod
    def v(exp: int = 1) -> "LaurentPoly":
        return LaurentPoly({exp: 1})

    @staticmethod
    def q(exp: int = 1) -> "LaurentPoly":
        """q = v^2."""
        return LaurentPoly({2 * exp: 1})

    # -- ring structure ----------------------------------------------------

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.c == ({0: other} if other else {})
        if isinstance(other, LaurentPoly):
            return self.c == other.c
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.c)
        for e, n in other.c.items():
            m = out.get(e, 0) + n
            if m:
                out[e] = m
            else:
                out.pop(e, None)
        res = LaurentPoly.__new__(LaurentPoly)
        res.c = out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = LaurentPoly.__new__(LaurentPoly)
        res.c = {e: -n for e, n in self.c.items()}
        return res

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.c, other.c
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        for e1, n1 in a.items():
            for e2, n2 in b.items():
                e = e1 + e2
                m = out.get(e, 0) + n1 * n2
                if m:
                    out[e] = m
                else:
                    del out[e]
        res = LaurentPoly.__new__(LaurentPoly)
        res.c = out
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by v^k."""
        res = LaurentPoly.__new__(LaurentPoly)
        res.c = {e + k: n for e, n in self.c.items()}
        return res

    # -- queries -----------------------------------------------------------

    def degree(self):
        """Largest exponent of v (None for the zero polynomial)."""
        return max(self.c) if self.c else None

    def valuation(self):
        return min(self.c) if self.c else None

    def coeff(self, exp: int) -> int:
        return self.c.get(exp, 0)

    def is_even(self) -> bool:
        """True iff only even powers of v occur, i.e. the value lies in Z[q, 1/q]."""
        return all(e % 2 == 0 for e in self.c)

    def even_odd_parts(self):
        """Split as E + v*O with E, O even; returns (E, O) as polynomials in v."""
        even = {e: n for e, n in self.c.items() if e % 2 == 0}
        odd = {e - 1: n for e, n in self.c.items() if e % 2}
        return LaurentPoly(even), LaurentPoly(odd)

    def subs_v_power(self, r: int) -> "LaurentPoly":
        """The substitution v -> v^r (so q -> q^r)."""
        if r < 1:
            raise ValueError("r must be >= 1")
        return LaurentPoly({e * r: n for e, n in self.c.items()})

    def eval_q(self, q_value):
        """Evaluate at a numeric q; requires an even polynomial.

        The result is exact (integer or Fraction depending on q_value and
        on negative exponents).
        """
        from fractions import Fraction

        if not self.is_even():
            raise ValueError("odd powers of v present; value is not a "
                             "polynomial in q (half-power of q remains)")
        total = 0
        for e, n in self.c.items():
            k = e // 2
            if k >= 0:
                total += n * q_value ** k
            else:
                total += Fraction(n, q_value ** (-k))
        if isinstance(total, Fraction) and total.denominator == 1:
            return int(total)
        return total

    # -- display -----------------------------------------------------------

    def __repr__(self):
        return f"LaurentPoly({self.c!r})"

    def __str__(self):
        if not self.c:
            return "0"
        parts = []
        for e in sorted(self.c, reverse=True):
            n = self.c[e]
            if e == 0:
                term = str(abs(n))
            else:
                vpow = "v" if e == 1 else f"v^{e}"
                term = vpow if abs(n) == 1 else f"{abs(n)}*{vpow}"
            sign = "-" if n < 0 else "+"
            parts.append((sign, term))
        sign0, term0 = parts[0]
        out = ("-" if sign0 == "-" else "") + term0
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly({0: x})
    return NotImplemented


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
Q = LaurentPoly.q()
QM1 = Q - 1
