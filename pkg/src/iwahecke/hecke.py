"""
The Iwahori-Hecke algebra of an extended affine Weyl group, over Z[v, 1/v]
with q = v^2.

T-basis: {T_x} for x in W~, with the Iwahori-Matsumoto relations

    T_s T_x = T_{sx}                     if l(sx) > l(x),
    T_s T_x = (q-1) T_x + q T_{sx}       if l(sx) < l(x),
    T_w T_x = T_{wx}                     if l(wx) = l(w) + l(x),

for affine simple reflections s and length-zero elements of Omega.  The
Bernstein elements theta_la (la any coweight) are normalized by
theta_la = v^{-l(t_la)} T_{t_la} for dominant la, and the Bernstein function
of a dominant mu is z_mu = sum of theta_la over the finite Weyl orbit of mu;
z_mu is central.
"""

from __future__ import annotations

from math import gcd

from .affine import AffineWeylElement, AffineWeylGroup
from .intlinalg import dot, solve_underdetermined
from .laurent import ONE, QM1, LaurentPoly
from .rootdata import RootDatumError, weyl_orbit

__all__ = [
    "HeckeAlgebra", "HeckeElement",
    "t_multiply", "t_inverse", "theta", "bernstein_function",
    "is_central", "parahoric_descent",
]

_Q = LaurentPoly.q()
_QINV = LaurentPoly.q(-1)
_QINV_M1 = _QINV - 1


class HeckeElement:
    """Finitely supported map W~ -> Z[v, 1/v] in the T-basis."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: "HeckeAlgebra", terms: dict):
        self.algebra = algebra
        self.terms = {x: c for x, c in terms.items() if c}

    def coeff(self, x: AffineWeylElement) -> LaurentPoly:
        return self.terms.get(x, LaurentPoly())

    def support(self) -> frozenset:
        return frozenset(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, HeckeElement)
                and (other.algebra is self.algebra
                     or other.algebra.W.rd == self.algebra.W.rd)
                and other.terms == self.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        out = dict(self.terms)
        for x, c in other.terms.items():
            _acc(out, x, c)
        return HeckeElement(self.algebra, out)

    def __neg__(self):
        return HeckeElement(self.algebra,
                            {x: -c for x, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            if other.algebra is not self.algebra:
                raise ValueError("elements of different Hecke algebras")
            return self.algebra.multiply(self, other)
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "HeckeElement":
        if isinstance(c, int):
            c = LaurentPoly.const(c)
        return HeckeElement(self.algebra,
                            {x: c * p for x, p in self.terms.items()})

    def items_sorted(self):
        W = self.algebra.W
        return sorted(self.terms.items(), key=lambda kv: W.sort_key(kv[0]))

    def __repr__(self):
        if not self.terms:
            return "HeckeElement(0)"
        bits = [f"({c})*T{x!r}" for x, c in self.items_sorted()]
        return "HeckeElement(" + " + ".join(bits) + ")"


def _acc(out: dict, x, c):
    cur = out.get(x)
    s = c if cur is None else cur + c
    if s:
        out[x] = s
    else:
        out.pop(x, None)


class HeckeAlgebra:
    """T-basis arithmetic bound to one affine Weyl group context."""

    def __init__(self, W: AffineWeylGroup):
        self.W = W
        self._theta: dict = {}
        self._z: dict = {}
        self._tinv: dict = {}

    # -- construction -------------------------------------------------------

    def zero(self) -> HeckeElement:
        return HeckeElement(self, {})

    def unit(self) -> HeckeElement:
        return HeckeElement(self, {self.W.identity: ONE})

    def t(self, x: AffineWeylElement, coeff=ONE) -> HeckeElement:
        if isinstance(coeff, int):
            coeff = LaurentPoly.const(coeff)
        return HeckeElement(self, {x: coeff})

    def from_terms(self, terms: dict) -> HeckeElement:
        return HeckeElement(self, dict(terms))

    # -- generator folds ------------------------------------------------------

    def lmul_gen(self, label: int, h: HeckeElement) -> HeckeElement:
        """T_s * h for the affine simple reflection with this label."""
        s = self.W.simple_reflection(label)
        out: dict = {}
        for y, c in h.terms.items():
            sy = s * y
            if sy.length() > y.length():
                _acc(out, sy, c)
            else:
                _acc(out, y, QM1 * c)
                _acc(out, sy, _Q * c)
        return HeckeElement(self, out)

    def rmul_gen(self, h: HeckeElement, label: int) -> HeckeElement:
        """h * T_s."""
        s = self.W.simple_reflection(label)
        out: dict = {}
        for y, c in h.terms.items():
            ys = y * s
            if ys.length() > y.length():
                _acc(out, ys, c)
            else:
                _acc(out, y, QM1 * c)
                _acc(out, ys, _Q * c)
        return HeckeElement(self, out)

    def lmul_omega(self, om: AffineWeylElement, h: HeckeElement):
        return HeckeElement(self, {om * y: c for y, c in h.terms.items()})

    def rmul_omega(self, h: HeckeElement, om: AffineWeylElement):
        return HeckeElement(self, {y * om: c for y, c in h.terms.items()})

    # -- products ------------------------------------------------------------

    def t_times(self, x: AffineWeylElement, h: HeckeElement) -> HeckeElement:
        """T_x * h via the reduced word of x."""
        word, om = self.W.reduced_word(x)
        r = self.lmul_omega(om.element, h)
        for label in reversed(word):
            r = self.lmul_gen(label, r)
        return r

    def multiply(self, a: HeckeElement, b: HeckeElement) -> HeckeElement:
        out = self.zero()
        for x, c in a.terms.items():
            out = out + self.t_times(x, b).scale(c)
        return out

    def t_inverse(self, x: AffineWeylElement) -> HeckeElement:
        """The inverse of the basis element T_x.

        With x = s_1...s_k * omega reduced, T_x^{-1} = T_{omega^{-1}} *
        T_{s_k}^{-1} ... T_{s_1}^{-1} and T_s^{-1} = q^{-1} T_s + (q^{-1}-1) T_e.
        """
        cached = self._tinv.get(x.key)
        if cached is not None:
            return cached
        word, om = self.W.reduced_word(x)
        h = self.t(om.element.inverse())
        for label in reversed(word):
            h = self.rmul_gen(h, label).scale(_QINV) + h.scale(_QINV_M1)
        self._tinv[x.key] = h
        return h

    # -- Bernstein elements ----------------------------------------------------

    def theta(self, lam) -> HeckeElement:
        """theta_lam, for an arbitrary coweight lam.

        Dominant lam: v^{-l(t_lam)} T_{t_lam}.  In general theta_lam =
        theta_{lam1} * theta_{lam2}^{-1} for any decomposition lam = lam1 -
        lam2 into dominant coweights; the result is independent of the
        decomposition.
        """
        lam = tuple(lam)
        cached = self._theta.get(lam)
        if cached is None:
            cached = self._theta_for(lam, None)
            self._theta[lam] = cached
        return cached

    def _theta_for(self, lam, lam2) -> HeckeElement:
        rd = self.W.rd
        vpow = LaurentPoly.v(-dot(lam, rd.two_rho))
        if lam2 is None:
            if rd.is_dominant(lam):
                return self.t(self.W.translation(lam), vpow)
            lam2 = _dominant_cover(rd, lam)
        lam1 = tuple(a + b for a, b in zip(lam, lam2))
        if not (rd.is_dominant(lam1) and rd.is_dominant(lam2)):
            raise RootDatumError("decomposition is not dominant")
        prod = self.t_times(self.W.translation(lam1),
                            self.t_inverse(self.W.translation(lam2)))
        return prod.scale(vpow)

    def bernstein_function(self, mu) -> HeckeElement:
        """z_mu = sum of theta_la over the finite Weyl orbit of dominant mu."""
        mu = tuple(mu)
        if not self.W.rd.is_dominant(mu):
            raise RootDatumError(f"{mu} is not dominant")
        cached = self._z.get(mu)
        if cached is None:
            cached = self.zero()
            for la in sorted(weyl_orbit(self.W.rd, mu)):
                cached = cached + self.theta(la)
            self._z[mu] = cached
        return cached

    # -- centrality and descent ---------------------------------------------

    def omega_generators(self):
        """Length-zero elements generating Omega (images of the basis e_k)."""
        W = self.W
        seen, out = set(), []
        for k in range(W.rd.rank):
            e_k = tuple(1 if i == k else 0 for i in range(W.rd.rank))
            om = W.omega_of(e_k)
            if om.rep not in seen:
                seen.add(om.rep)
                out.append(om.element)
        return out

    def is_central(self, h: HeckeElement) -> bool:
        for label in self.W.gen_labels:
            if self.lmul_gen(label, h) != self.rmul_gen(h, label):
                return False
        for om in self.omega_generators():
            if self.lmul_omega(om, h) != self.rmul_omega(h, om):
                return False
        return True

    def parahoric_subgroup(self, labels) -> list:
        """Elements of the finite subgroup W_J generated by the affine simple
        reflections in `labels`; raises unless J is of finite type."""
        labels = sorted(set(labels))
        W = self.W
        for lab in labels:
            if lab not in W.label_slot:
                raise RootDatumError(f"unknown reflection label {lab}")
        # J is finite type iff it omits a node of each affine component
        m = W.rd.n_simple
        for c, comp in enumerate(W.rd.components):
            nodes = {i + 1 for i in comp} | {0 if c == 0 else m + c}
            if nodes <= set(labels):
                raise RootDatumError(
                    f"J contains the whole affine diagram component {sorted(nodes)}")
        seen = {W.identity}
        frontier = [W.identity]
        while frontier:
            new = []
            for x in frontier:
                for lab in labels:
                    y = x * W.simple_reflection(lab)
                    if y not in seen:
                        seen.add(y)
                        new.append(y)
            frontier = new
        return sorted(seen, key=W.sort_key)

    def parahoric_descent(self, h: HeckeElement, labels):
        """(h * sum_{w in W_J} T_w, P_J) with P_J the Poincare polynomial.

        The normalized change-of-level map to the parahoric attached to J is
        the first component divided by P_J; the factor is returned separately
        to keep all arithmetic in Z[v, 1/v].
        """
        wj = self.parahoric_subgroup(labels)
        sum_t = HeckeElement(self, {x: ONE for x in wj})
        poincare = LaurentPoly()
        for x in wj:
            poincare = poincare + LaurentPoly({2 * x.length(): 1})
        return self.multiply(h, sum_t), poincare


# -- decomposition helper -------------------------------------------------------


def _dominant_cover(rd, lam) -> tuple:
    """A dominant lattice vector lam2 with <lam2, a_i> >= max(0, -<lam, a_i>),
    preferring small <lam2, 2 rho>."""
    need = [max(0, -dot(lam, a)) for a in rd.simple_roots]
    # exact fundamental-coweight combination when it is integral
    sol = solve_underdetermined([list(a) for a in rd.simple_roots], need)
    if sol is not None and all(x.denominator == 1 for x in sol):
        return tuple(int(x) for x in sol)
    # small-rank exhaustive search
    if rd.rank <= 4:
        radius = max(need) + 1
        best, best_h = None, None
        from itertools import product
        for cand in product(range(-radius, radius + 1), repeat=rd.rank):
            if all(dot(cand, a) >= c for a, c in zip(rd.simple_roots, need)):
                hgt = dot(cand, rd.two_rho)
                if best is None or hgt < best_h:
                    best, best_h = cand, hgt
        if best is not None:
            return tuple(best)
    # always-valid fallback: clear denominators of the rational solution
    if sol is not None:
        d = 1
        for x in sol:
            d = d * x.denominator // gcd(d, x.denominator)
        return tuple(int(x * d) for x in sol)
    raise RootDatumError("no dominant decomposition found")  # pragma: no cover


# -- operation-name wrappers ----------------------------------------------------


def t_multiply(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    return a * b


def t_inverse(x: AffineWeylElement) -> HeckeElement:
    return x.group.hecke().t_inverse(x)


def theta(W, lam) -> HeckeElement:
    return _algebra(W).theta(lam)


def bernstein_function(W, mu) -> HeckeElement:
    return _algebra(W).bernstein_function(mu)


def is_central(h: HeckeElement) -> bool:
    return h.algebra.is_central(h)


def parahoric_descent(h: HeckeElement, labels):
    return h.algebra.parahoric_descent(h, labels)


def _algebra(W) -> HeckeAlgebra:
    if isinstance(W, HeckeAlgebra):
        return W
    return W.hecke()
