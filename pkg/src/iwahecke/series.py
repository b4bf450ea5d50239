"""
Formal Laurent series over a finite field with explicit precision tracking.

This models the local field F_q((t)) of the deep-level evaluators: a series
is either *exact* (a genuine Laurent polynomial, known at every order) or
tracked up to an absolute precision `prec` (coefficients of t^k known for
k < prec only).  Every arithmetic operation propagates the correct precision;
valuation queries answer True/False when decidable and None when the tracked
precision cannot decide, so callers (the evaluators) can fail loudly rather
than guess.

Representation invariants: `coeffs` has no leading or trailing zeros and
covers t^val .. t^(val + len - 1); a series with no known-nonzero coefficient
has val=None (exact -> the true zero; inexact -> zero modulo t^prec).
"""

from __future__ import annotations

__all__ = ["TruncatedSeries", "Matrix2"]


class TruncatedSeries:
    __slots__ = ("field", "val", "coeffs", "prec")

    def __init__(self, field, val, coeffs, prec=None):
        self.field = field
        coeffs = list(coeffs)
        # strip leading zeros
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
            val += 1
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if prec is not None:
            if coeffs and val + len(coeffs) > prec:
                coeffs = coeffs[:max(0, prec - val)]
                while coeffs and coeffs[-1] == 0:
                    coeffs.pop()
            while coeffs and coeffs[0] == 0:
                coeffs.pop(0)
                val += 1
        self.val = val if coeffs else None
        self.coeffs = tuple(coeffs)
        self.prec = prec

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(field, prec=None) -> "TruncatedSeries":
        return TruncatedSeries(field, 0, (), prec)

    @staticmethod
    def one(field, prec=None) -> "TruncatedSeries":
        return TruncatedSeries(field, 0, (1,), prec)

    @staticmethod
    def monomial(field, k: int, coeff: int = 1, prec=None) -> "TruncatedSeries":
        return TruncatedSeries(field, k, (coeff,), prec)

    @property
    def exact(self) -> bool:
        return self.prec is None

    def truncate(self, prec: int) -> "TruncatedSeries":
        newp = prec if self.prec is None else min(self.prec, prec)
        return TruncatedSeries(self.field, self.val or 0, self.coeffs, newp)

    # -- queries -------------------------------------------------------------

    def coeff_at(self, k: int):
        """Coefficient of t^k, or None when k is beyond tracked precision."""
        if self.prec is not None and k >= self.prec:
            return None
        if self.val is None:
            return 0
        if k < self.val or k >= self.val + len(self.coeffs):
            return 0
        return self.coeffs[k - self.val]

    def val_ge(self, k: int):
        """Is val >= k?  True/False, or None when undecidable at precision."""
        if self.val is not None:
            return self.val >= k
        if self.prec is None:
            return True  # exact zero
        return True if self.prec >= k else None

    def resolve_val_below(self, bound: int):
        """('lt', v) when the valuation v < bound is pinned; 'ge' when
        val >= bound is certain; None when precision cannot decide."""
        if self.val is not None:
            return ("lt", self.val) if self.val < bound else "ge"
        if self.prec is None or self.prec >= bound:
            return "ge"
        return None

    def valuation(self):
        """Exact valuation: int, 'inf' for the exact zero, None undecidable."""
        if self.val is not None:
            return self.val
        return "inf" if self.prec is None else None

    def is_known_zero(self) -> bool:
        return self.val is None and self.prec is None

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other):
        if other.field is not self.field:
            raise ValueError("series over different fields")

    def __add__(self, other):
        self._check(other)
        f = self.field
        prec = _min_prec(self.prec, other.prec)
        if self.val is None and other.val is None:
            return TruncatedSeries(f, 0, (), prec)
        lo = min(v for v in (self.val, other.val) if v is not None)
        hi = max((v + len(s.coeffs)) for v, s in
                 ((self.val, self), (other.val, other)) if v is not None)
        out = []
        for k in range(lo, hi):
            a = self.coeff_at(k) or 0
            b = other.coeff_at(k) or 0
            out.append(f.add(a, b))
        return TruncatedSeries(f, lo, out, prec)

    def __neg__(self):
        f = self.field
        return TruncatedSeries(f, self.val or 0,
                               [f.neg(c) for c in self.coeffs], self.prec)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        f = self.field
        if self.is_known_zero() or other.is_known_zero():
            return TruncatedSeries(f, 0, ())  # exactly zero times anything
        # precision of a product: min(val_a + prec_b, val_b + prec_a), where
        # an unknown-zero factor contributes its own precision as valuation
        pa = _eff_val(self)
        pb = _eff_val(other)
        cands = []
        if other.prec is not None:
            cands.append(pa + other.prec)
        if self.prec is not None:
            cands.append(pb + self.prec)
        prec = min(cands) if cands else None
        if self.val is None or other.val is None:
            # a factor with no known coefficient: product has none either
            return TruncatedSeries(f, 0, (), prec)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    if y:
                        out[i + j] = f.add(out[i + j], f.mul(x, y))
        return TruncatedSeries(f, self.val + other.val, out, prec)

    def scale(self, c: int) -> "TruncatedSeries":
        f = self.field
        if c == 0:
            return TruncatedSeries(f, 0, ())  # exact: 0 * unknown = 0
        return TruncatedSeries(f, self.val or 0,
                               [f.mul(c, x) for x in self.coeffs], self.prec)

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by t^k."""
        return TruncatedSeries(self.field, (self.val or 0) + k, self.coeffs,
                               None if self.prec is None else self.prec + k)

    def __eq__(self, other):
        return (isinstance(other, TruncatedSeries)
                and other.field is self.field and other.val == self.val
                and other.coeffs == self.coeffs and other.prec == self.prec)

    def __hash__(self):
        return hash((self.val, self.coeffs, self.prec))

    def __repr__(self):
        if self.val is None:
            body = "0"
        else:
            body = " + ".join(f"{c}*t^{self.val + i}"
                              for i, c in enumerate(self.coeffs) if c)
        tail = "" if self.prec is None else f" + O(t^{self.prec})"
        return f"<{body}{tail}>"


def _min_prec(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _eff_val(s: TruncatedSeries) -> int:
    if s.val is not None:
        return s.val
    # no known coefficient: every coefficient below prec is zero
    return s.prec if s.prec is not None else 0


class Matrix2:
    """A 2x2 matrix of truncated series (the deep-level GL_2 model)."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a, self.b, self.c, self.d = a, b, c, d

    @property
    def field(self):
        return self.a.field

    @property
    def entries(self):
        return (self.a, self.b, self.c, self.d)

    @staticmethod
    def identity(field, prec=None) -> "Matrix2":
        one = TruncatedSeries.one(field, prec)
        zero = TruncatedSeries.zero(field, prec)
        return Matrix2(one, zero, zero, one)

    def __mul__(self, other):
        if not isinstance(other, Matrix2):
            return NotImplemented
        return Matrix2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __add__(self, other):
        return Matrix2(self.a + other.a, self.b + other.b,
                       self.c + other.c, self.d + other.d)

    def __sub__(self, other):
        return Matrix2(self.a - other.a, self.b - other.b,
                       self.c - other.c, self.d - other.d)

    def scale(self, s: TruncatedSeries) -> "Matrix2":
        return Matrix2(s * self.a, s * self.b, s * self.c, s * self.d)

    def det(self) -> TruncatedSeries:
        return self.a * self.d - self.b * self.c

    def trace(self) -> TruncatedSeries:
        return self.a + self.d

    def truncate(self, prec: int) -> "Matrix2":
        return Matrix2(*(e.truncate(prec) for e in self.entries))

    def __eq__(self, other):
        return isinstance(other, Matrix2) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"Matrix2[{self.a}, {self.b}; {self.c}, {self.d}]"
