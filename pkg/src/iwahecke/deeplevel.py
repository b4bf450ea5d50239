"""
Evaluators for the explicit deep-level central functions on GL_2 over a
truncated local field model F_q((t)), and for the pro-p Iwahori Drinfeld
formula on GL_n.

The GL_2 family phi_n (n >= 1) lives at principal congruence level
K_n = 1 + t^n M_2(O).  With l(g) = val det(1 - g) and k(g) the largest k
with g in t^k M_2(O), the function is supported on {val det g = 1,
tr g in O, g in B_{1-n}} and there takes the values

    -1 - q                   if tr(g) in t*O,
    1 - q^(2 l(g))           if tr(g) is a unit and l(g) <  n + k(g),
    1 + q^(2(n + k(g)) - 1)  if tr(g) is a unit and l(g) >= n + k(g).

The normalized member z_n = (q-1)/[K:K_n] * phi_n is central and the family
is compatible with change of level:

    sum over K_n/K_{n+1} cosets of z_{n+1}(g k)  =  z_n(g),

which :func:`level_compatibility_check` verifies pointwise by the finite
q^4-term coset sum.

Every evaluator is precision-honest: when the tracked precision of the input
cannot decide a case split, IndeterminatePrecisionError is raised rather
than a value guessed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .affine import AffineWeylElement
from .series import Matrix2, TruncatedSeries

__all__ = [
    "IndeterminatePrecisionError", "DiagonalTorusPoint",
    "ell_invariant", "k_invariant", "scholze_phi", "scholze_z",
    "gl2_level_index", "level_compatibility_check", "kn_coset_reps",
    "random_kn_element", "build_reference_corpus",
    "load_corpus", "save_corpus", "matrix_to_text", "matrix_from_text",
    "matrix_column_text",
    "drinfeld_propp_value", "default_subtorus_predicate",
]


class IndeterminatePrecisionError(ValueError):
    """The tracked precision of the input cannot decide the computation."""


# -- the two elementary invariants ----------------------------------------------


def ell_invariant(g: Matrix2):
    """val det(1 - g); 'inf' (with exactness certificate) when 1 - g is
    exactly singular.  Raises when precision cannot resolve the valuation."""
    d = (Matrix2.identity(g.field) - g).det()
    v = d.valuation()
    if v is None:
        raise IndeterminatePrecisionError(
            f"det(1-g) = 0 up to O(t^{d.prec}) but the input is not exact")
    return v


def k_invariant(g: Matrix2) -> int:
    """The unique k with g in t^k M_2(O) \\ t^(k+1) M_2(O) (min entry val)."""
    known = [e.val for e in g.entries if e.val is not None]
    bounds = [e.prec for e in g.entries
              if e.val is None and e.prec is not None]
    if not known:
        if bounds:
            raise IndeterminatePrecisionError("all entries vanish at precision")
        raise ValueError("k(g) is undefined for the zero matrix")
    k = min(known)
    if bounds and min(bounds) < k:
        raise IndeterminatePrecisionError(
            "an unresolved entry could have smaller valuation")
    return k


# -- the GL_2 family -----------------------------------------------------------


def scholze_phi(n: int, g: Matrix2) -> int:
    """phi_n(g) by the three-case formula; 0 off the support."""
    if n < 1:
        raise ValueError("level n must be >= 1")
    f = g.field
    q = f.q

    # support condition 1: val det(g) = 1 (entries may have negative val,
    # so "below order 1" really does mean every order, not just 0)
    det = g.det()
    ge1 = det.val_ge(1)
    if ge1 is None:
        raise IndeterminatePrecisionError("det(g) valuation unresolved")
    if not ge1:
        return 0
    d1 = det.coeff_at(1)
    if d1 is None:
        raise IndeterminatePrecisionError("det(g) unresolved at order 1")
    if d1 == 0:
        return 0

    # support condition 2: tr(g) integral
    tr = g.trace()
    tr_int = tr.val_ge(0)
    if tr_int is None:
        raise IndeterminatePrecisionError("tr(g) valuation unresolved")
    if not tr_int:
        return 0

    # support condition 3: g in B_{1-n}
    for e in g.entries:
        ok = e.val_ge(1 - n)
        if ok is None:
            raise IndeterminatePrecisionError("entry valuation unresolved")
        if not ok:
            return 0

    k = k_invariant(g)

    t0 = tr.coeff_at(0)
    if t0 is None:
        raise IndeterminatePrecisionError("tr(g) unresolved at order 0")
    if t0 == 0:
        return -1 - q

    # unit trace: compare l(g) with n + k(g)
    d1g = (Matrix2.identity(f) - g).det()
    res = d1g.resolve_val_below(n + k)
    if res is None:
        raise IndeterminatePrecisionError(
            f"val det(1-g) unresolved below {n + k}")
    if res == "ge":
        return 1 + q ** (2 * (n + k) - 1)
    _, ell = res
    return 1 - q ** (2 * ell)


def gl2_level_index(n: int, q: int) -> int:
    """[K : K_n] = q^(4(n-1)) (q^2-1)(q^2-q)."""
    if n < 1:
        raise ValueError("level n must be >= 1")
    return q ** (4 * (n - 1)) * (q * q - 1) * (q * q - q)


def scholze_z(n: int, g: Matrix2) -> Fraction:
    """z_n = (q-1)/[K:K_n] * phi_n, as an exact rational."""
    q = g.field.q
    return Fraction(q - 1, gl2_level_index(n, q)) * scholze_phi(n, g)


def kn_coset_reps(field, n: int):
    """Representatives 1 + t^n * lift(M), M over M_2(F_q), of K_n/K_{n+1}."""
    for quad in itertools.product(field.elements(), repeat=4):
        m = Matrix2(*(TruncatedSeries.monomial(field, n, c) if c
                      else TruncatedSeries.zero(field) for c in quad))
        yield Matrix2.identity(field) + m


def level_compatibility_check(n: int, g: Matrix2) -> bool:
    """Does sum over K_n/K_{n+1} of z_{n+1}(g k) equal z_n(g) at this g?"""
    field = g.field
    total = Fraction(0)
    for k in kn_coset_reps(field, n):
        total += scholze_z(n + 1, g * k)
    return total == scholze_z(n, g)


def random_kn_element(field, n: int, rng, depth: int = 8) -> Matrix2:
    """A random element of K_n = 1 + t^n M_2(O), with exact entries."""
    def entry():
        coeffs = [rng.randrange(field.q) for _ in range(depth)]
        return TruncatedSeries(field, n, coeffs)
    return Matrix2.identity(field) + Matrix2(entry(), entry(), entry(), entry())


# -- corpus ---------------------------------------------------------------------


def _series(field, val, coeffs):
    return TruncatedSeries(field, val, coeffs)


def build_reference_corpus(field, count: int = 200, seed: int = 20130405):
    """A deterministic list of exact test matrices for the phi_n evaluators.

    Roughly half the corpus is built on the support of some phi_n (val det
    = 1, integral trace, various k(g) and both trace cases), the rest is
    generic; everything is conjugated around by units of M_2(O) to avoid
    privileging triangular shapes.
    """
    import random
    rng = random.Random(seed)
    q = field.q
    mats = []

    def runit():
        return rng.randrange(1, q)

    def rpoly(val, deg):
        return _series(field, val, [rng.randrange(q) for _ in range(deg)])

    def z():
        return TruncatedSeries.zero(field)

    def mono(k, c=1):
        return TruncatedSeries.monomial(field, k, c)

    builders = [
        # diag(t*u1, u2): l = inf-ish case, k = 0
        lambda: Matrix2(mono(1, runit()), z(), z(), mono(0, runit())),
        # antidiag: trace 0 in t*O
        lambda: Matrix2(z(), mono(1, runit()), mono(0, runit()), z()),
        # upper triangular with val det 1
        lambda: Matrix2(mono(0, runit()), rpoly(0, 3), z(), mono(1, runit())),
        # k(g) = -1 shapes, g in B_{-1} with val det 1
        lambda: Matrix2(mono(1, runit()), mono(-1, runit()), z(),
                        mono(0, runit())),
        lambda: Matrix2(mono(0, runit()), mono(-1, runit()),
                        mono(2, runit()), mono(1, runit())),
        # unit trace with finite small l(g): 1 + t^j unit on the diagonal
        lambda: Matrix2(mono(0, 1) + mono(rng.randrange(1, 4), runit()), z(),
                        z(), mono(1, runit())),
        # scalar t * unit
        lambda: Matrix2(mono(1, runit()), z(), z(), mono(1, runit())),
        # generic (usually off support)
        lambda: Matrix2(rpoly(rng.randrange(-1, 2), 4),
                        rpoly(rng.randrange(-1, 2), 4),
                        rpoly(rng.randrange(-1, 2), 4),
                        rpoly(rng.randrange(-1, 2), 4)),
    ]

    while len(mats) < count:
        g = builders[len(mats) % len(builders)]()
        if rng.random() < 0.5:
            u = random_kn_element(field, 1, rng, depth=4)
            g = u * g
        if rng.random() < 0.5:
            g = g * random_kn_element(field, 1, rng, depth=4)
        mats.append(g)
    return mats


def matrix_to_text(g: Matrix2) -> str:
    parts = []
    for e in g.entries:
        if not e.exact:
            raise ValueError("corpus entries must be exact")
        if e.val is None:
            parts.append("z")
        else:
            parts.append(f"{e.val}:" + ",".join(str(c) for c in e.coeffs))
    return " | ".join(parts)


def matrix_column_text(g: Matrix2) -> str:
    """Display form tolerating inexact entries (a `~prec` suffix)."""
    parts = []
    for e in g.entries:
        if e.val is None:
            body = "z"
        else:
            body = f"{e.val}:" + ",".join(str(c) for c in e.coeffs)
        if not e.exact:
            body += f"~{e.prec}"
        parts.append(body)
    return " | ".join(parts)


def matrix_from_text(line: str, field, precision=None) -> Matrix2:
    chunks = [c.strip() for c in line.split("|")]
    if len(chunks) != 4:
        raise ValueError(f"expected 4 entries, got {len(chunks)}")
    entries = []
    for ch in chunks:
        if ch == "z":
            s = TruncatedSeries.zero(field)
        else:
            val_s, _, coeff_s = ch.partition(":")
            coeffs = [int(c) for c in coeff_s.split(",")] if coeff_s else []
            if any(not 0 <= c < field.q for c in coeffs):
                raise ValueError(f"coefficient out of range in {ch!r}")
            s = TruncatedSeries(field, int(val_s), coeffs)
        if precision is not None:
            s = s.truncate(precision)
        entries.append(s)
    return Matrix2(*entries)


def save_corpus(path, mats):
    with open(path, "w", encoding="utf-8") as fh:
        for g in mats:
            fh.write(matrix_to_text(g) + "\n")


def load_corpus(path, field, precision=None):
    out = []
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if line:
                out.append(matrix_from_text(line, field, precision))
    return out


# -- pro-p Iwahori Drinfeld formula ----------------------------------------------


@dataclass(frozen=True)
class DiagonalTorusPoint:
    """A point of the diagonal torus T(F_{p^r}): n nonzero field elements."""

    field: object
    entries: tuple

    def __post_init__(self):
        if any(e == 0 for e in self.entries):
            raise ValueError("torus point entries must be nonzero")
        if any(not 0 <= e < self.field.q for e in self.entries):
            raise ValueError("entry out of field range")

    def norms(self) -> tuple:
        """Componentwise norm down to the prime field F_p."""
        return tuple(self.field.norm_to_prime(e) for e in self.entries)


def default_subtorus_predicate(norms, critical) -> bool:
    """N_r(t) in T_S(F_p) with T_S = {diag : t_j = 1 for j not in S}."""
    return all(norms[j - 1] == 1 for j in range(1, len(norms) + 1)
               if j not in critical)


def drinfeld_propp_value(n: int, p: int, r: int, t: DiagonalTorusPoint,
                         w: AffineWeylElement,
                         subtorus_predicate=default_subtorus_predicate
                         ) -> Fraction:
    """The pro-p Iwahori test function of GL_n, mu = (1, 0^(n-1)), at the
    double coset indexed by (t, w); an exact rational.

    The subtorus membership test N_r(t) in T_{S(w)}(F_p) is configurable:
    `subtorus_predicate(norms, critical_indices)` receives the componentwise
    norms and the critical set S(w).  The default pins T_S as the diagonal
    subtorus with free coordinates exactly at S.
    """
    field = t.field
    if (field.p, field.r) != (p, r):
        raise ValueError("torus point lives over the wrong field")
    if len(t.entries) != n:
        raise ValueError("torus point has wrong rank")
    from .affine import _gl_size
    W = w.group
    if _gl_size(W.rd) != n:
        raise ValueError(f"w must lie in the affine Weyl group of GL({n})")
    q = p ** r

    critical = W.critical_indices(w)
    if not critical:  # w outside Adm((1, 0^{n-1}))
        return Fraction(0)
    if not subtorus_predicate(t.norms(), critical):
        return Fraction(0)
    s = len(critical)
    return Fraction((-1) ** n * (p - 1) ** (n - s), (1 - q) ** (n + 1 - s))
