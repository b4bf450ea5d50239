"""
Kazhdan-Lusztig R-polynomials on the extended affine Weyl group, and the
closed-form expression they give for minuscule Bernstein functions.

R-polynomials are the structure constants of T-basis inverses:
(T_{y^{-1}})^{-1} = q^{-l(y)} sum_x (-1)^{l(x)+l(y)} R_{x,y}(q) T_x.  They are
computed here by the left-multiplication recursion: R_{x,x} = 1, cross
Omega-classes R vanishes, and for an affine simple s with sy < y,

    R_{x,y} = R_{sx,sy}                       if sx < x,
    R_{x,y} = (q-1) R_{x,sy} + q R_{sx,sy}    if sx > x.

For minuscule dominant mu the Bernstein function has the closed form

    q^{l(t_mu)/2} z_mu
        = (-1)^{l(t_mu)} sum_{x in Adm(mu)} (-1)^{l(x)} R_{x, t_{la(x)}}(q) T_x

where x = t_{la(x)} w is the translation/finite normal form.  This is the
independent oracle against the theta-sum route in :mod:`iwahecke.hecke`; in
the Drinfeld case GL(n), mu = (1,0^{n-1}) every coefficient collapses to
(1-q)^{l(t_mu)-l(x)}.

R-polynomials here are plain :class:`~iwahecke.laurent.LaurentPoly` values in
the variable q (nonnegative exponents only); converting into the Hecke
coefficient ring Z[v,1/v] doubles exponents.
"""

from __future__ import annotations

from .affine import AffineWeylElement, AffineWeylGroup
from .hecke import HeckeElement
from .laurent import LaurentPoly
from .rootdata import RootDatumError, is_minuscule

__all__ = ["RPolynomials", "r_polynomial", "closed_form_bernstein",
           "q_poly_to_v"]

_ZERO = LaurentPoly()
_ONE = LaurentPoly({0: 1})
_Q = LaurentPoly({1: 1})      # the variable q itself
_QM1 = LaurentPoly({1: 1, 0: -1})


def q_poly_to_v(p: LaurentPoly) -> LaurentPoly:
    """Reinterpret a polynomial in q as a Laurent polynomial in v (q = v^2)."""
    return LaurentPoly({2 * e: c for e, c in p.c.items()})


class RPolynomials:
    """Memoized R-polynomial computation over one affine Weyl group."""

    def __init__(self, W: AffineWeylGroup):
        self.W = W
        self._memo: dict = {}

    def r(self, x: AffineWeylElement, y: AffineWeylElement) -> LaurentPoly:
        return self._r(x, y)

    def _r(self, x, y) -> LaurentPoly:
        if x == y:
            return _ONE
        lx, ly = x.length(), y.length()
        if lx >= ly:
            return _ZERO
        key = (x.key, y.key)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        W = self.W
        k = W.kernel
        for slot in W._gen_order:
            if k.left_descent(slot, y.trans, y.fin):
                break
        else:  # l(y) = 0 and x != y
            return _ZERO
        label = W.gen_labels[slot]
        s = W.simple_reflection(label)
        sy = s * y
        sx = s * x
        if sx.length() < lx:
            res = self._r(sx, sy)
        else:
            res = _QM1 * self._r(x, sy) + _Q * self._r(sx, sy)
        self._memo[key] = res
        return res

    def closed_form_bernstein(self, mu) -> HeckeElement:
        """The right-hand side of the minuscule closed formula, equal to
        v^{l(t_mu)} z_mu; raises unless mu is dominant and minuscule."""
        W = self.W
        mu = tuple(mu)
        if not is_minuscule(W.rd, mu):
            raise RootDatumError(f"{mu} is not minuscule")
        lt = W.translation(mu).length()
        H = W.hecke()
        terms = {}
        for x in W.admissible_set(mu):
            t_part = W.translation(x.trans)
            rpoly = self.r(x, t_part)
            sign = -1 if (lt + x.length()) % 2 else 1
            terms[x] = q_poly_to_v(rpoly) * sign
        return H.from_terms(terms)


def r_polynomial(x: AffineWeylElement, y: AffineWeylElement) -> LaurentPoly:
    """R_{x,y} as a polynomial in q (module-level convenience wrapper)."""
    return _table(x.group).r(x, y)


def closed_form_bernstein(W: AffineWeylGroup, mu) -> HeckeElement:
    return _table(W).closed_form_bernstein(mu)


def _table(W: AffineWeylGroup) -> RPolynomials:
    if not hasattr(W, "_rpoly"):
        W._rpoly = RPolynomials(W)
    return W._rpoly
