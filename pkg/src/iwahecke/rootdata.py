"""
Based root data of split reductive groups.

A root datum lives on a cocharacter lattice Z^rank.  Simple roots (and all
positive roots) are stored as *character* vectors: the natural pairing of a
coweight la with a character a is the dot product of their coordinate
tuples.  Simple coroots are coweight vectors.  The finite Weyl group acts on
coweights by s_i(la) = la - <la, a_i> a_i^vee.

Builtin families:

* ``GL(n)``  lattice Z^n, type A_{n-1} roots e_i - e_{i+1};
* ``SL(n)``  lattice = coroot lattice of A_{n-1} (rank n-1) in the coroot
  basis;
* ``Sp(n)``  n = 2k, lattice Z^k, type C_k;
* ``GSp(n)`` n = 2k, lattice Z^{k+1} with last coordinate the similitude
  valuation.

Custom data come from a small key/value config file, see
:func:`load_root_datum`.

Dominance convention everywhere: la is dominant iff <la, a_i> >= 0 for all
simple roots a_i (upper-triangular Borel for GL(n)).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .intlinalg import (dot, hermite_basis, reduce_mod_lattice,
                        smith_normal_form, solve_rational)

__all__ = [
    "RootDatum", "RootDatumError", "build_root_datum", "load_root_datum",
    "levi_sub_datum", "weyl_orbit", "pair_two_rho", "is_minuscule",
]

_MAX_ROOTS = 10_000  # closure cap; exceeding it means the GCM is not finite type


class RootDatumError(ValueError):
    pass


@dataclass(frozen=True)
class RootDatum:
    """Immutable based root datum; construct via build/load functions.

    Equality is structural (rank + simple roots + simple coroots); the
    family string is a display name only.
    """

    family: str = field(compare=False)
    rank: int = 0
    simple_roots: tuple = ()   # character vectors
    simple_coroots: tuple = ()  # coweight vectors
    pos_roots: tuple = field(default=(), compare=False)
    pos_coroots: tuple = field(default=(), compare=False)
    two_rho: tuple = field(default=(), compare=False)

    # -- basic pairings ------------------------------------------------------

    @property
    def n_simple(self) -> int:
        return len(self.simple_roots)

    def pairing(self, coweight, char) -> int:
        return dot(coweight, char)

    def reflect(self, i: int, la) -> tuple:
        """Apply the simple reflection s_i (0-based) to a coweight."""
        c = dot(la, self.simple_roots[i])
        if not c:
            return tuple(la)
        av = self.simple_coroots[i]
        return tuple(x - c * y for x, y in zip(la, av))

    def reflect_char(self, i: int, a) -> tuple:
        c = dot(self.simple_coroots[i], a)
        if not c:
            return tuple(a)
        ar = self.simple_roots[i]
        return tuple(x - c * y for x, y in zip(a, ar))

    def is_dominant(self, la) -> bool:
        return all(dot(la, a) >= 0 for a in self.simple_roots)

    def dominant_rep(self, la) -> tuple:
        la = tuple(la)
        while True:
            for i, a in enumerate(self.simple_roots):
                if dot(la, a) < 0:
                    la = self.reflect(i, la)
                    break
            else:
                return la

    # -- derived structure (computed once, cached on the instance) -----------

    def _cache(self) -> dict:
        d = self.__dict__.get("_derived")
        if d is None:
            d = {}
            object.__setattr__(self, "_derived", d)
        return d

    @property
    def cartan_matrix(self):
        """C[i][j] = <a_i^vee, a_j>."""
        return tuple(tuple(dot(av, a) for a in self.simple_roots)
                     for av in self.simple_coroots)

    @property
    def components(self):
        """Connected components of the Dynkin diagram, as index lists."""
        c = self._cache()
        if "components" not in c:
            m = self.n_simple
            cm = self.cartan_matrix
            seen, comps = set(), []
            for start in range(m):
                if start in seen:
                    continue
                comp, todo = [], [start]
                while todo:
                    i = todo.pop()
                    if i in seen:
                        continue
                    seen.add(i)
                    comp.append(i)
                    todo.extend(j for j in range(m)
                                if j not in seen and cm[i][j])
                comps.append(tuple(sorted(comp)))
            c["components"] = tuple(comps)
        return c["components"]

    @property
    def highest_roots(self):
        """Per component: (root char vector, its coroot), the highest root."""
        c = self._cache()
        if "highest" not in c:
            out = []
            for comp in self.components:
                best, best_h = None, -1
                for a, av in zip(self.pos_roots, self.pos_coroots):
                    coeffs = self._simple_coords(a)
                    if any(coeffs[i] and i not in comp for i in range(self.n_simple)):
                        continue
                    h = sum(coeffs)
                    if h > best_h:
                        best, best_h = (a, av), h
                out.append(best)
            c["highest"] = tuple(out)
        return c["highest"]

    def _simple_coords(self, a):
        """Integer coordinates of the character `a` in the simple-root basis."""
        sol = solve_rational([tuple(r) for r in self.simple_roots], a)
        if sol is None:
            raise RootDatumError(f"{a} is not in the root lattice span")
        if any(x.denominator != 1 for x in sol):
            raise RootDatumError(f"{a} has non-integral root coordinates")
        return tuple(int(x) for x in sol)

    @property
    def coroot_hnf(self):
        """HNF basis of the coroot lattice, for Kottwitz reduction."""
        c = self._cache()
        if "hnf" not in c:
            c["hnf"] = tuple(hermite_basis(list(self.simple_coroots)))
        return c["hnf"]

    def kappa_reduce(self, vec) -> tuple:
        """Canonical representative of a coweight modulo the coroot lattice."""
        return reduce_mod_lattice(vec, self.coroot_hnf)

    @property
    def _omega_grading(self):
        """(V, free_cols, torsion) from the Smith form of the coroot matrix."""
        c = self._cache()
        if "snf" not in c:
            rows = [list(r) for r in self.simple_coroots]
            diag, v = smith_normal_form(rows, self.rank)
            r = len(diag)
            torsion = tuple((j, diag[j]) for j in range(r) if diag[j] > 1)
            free_cols = tuple(range(r, self.rank))
            sign = 1
            if len(free_cols) == 1 and not torsion:
                j = free_cols[0]
                for k in range(self.rank):
                    e_k = tuple(1 if t == k else 0 for t in range(self.rank))
                    g = dot(e_k, tuple(row[j] for row in v))
                    if g:
                        sign = 1 if g > 0 else -1
                        break
            c["snf"] = (v, free_cols, torsion, sign)
        return c["snf"]

    @property
    def omega_is_free_cyclic(self) -> bool:
        """True iff X_* / coroot lattice is 0 or Z (then grades are ints)."""
        _, free_cols, torsion, _ = self._omega_grading
        return not torsion and len(free_cols) <= 1

    def omega_grade(self, vec):
        """Integer grade of a coweight class when Omega is 0 or Z (else None)."""
        v, free_cols, torsion, sign = self._omega_grading
        if torsion or len(free_cols) > 1:
            return None
        if not free_cols:
            return 0
        j = free_cols[0]
        return sign * dot(vec, tuple(row[j] for row in v))

    # -- affine Weyl group handle --------------------------------------------

    def affine_weyl(self, kernel: str = "auto"):
        from .affine import shared_group
        return shared_group(self, kernel=kernel)

    def __repr__(self):
        return f"RootDatum({self.family}, rank={self.rank})"


# -- construction -------------------------------------------------------------


def _close_roots(simple_roots, simple_coroots):
    """All (root, coroot) pairs, by closing simples under simple reflections."""
    pairs = {tuple(a): tuple(av) for a, av in zip(simple_roots, simple_coroots)}
    frontier = list(pairs)
    while frontier:
        new = []
        for a in frontier:
            av = pairs[a]
            for ai, avi in zip(simple_roots, simple_coroots):
                c = dot(avi, a)
                ra = tuple(x - c * y for x, y in zip(a, ai))
                if ra not in pairs:
                    d = dot(av, ai)
                    rav = tuple(x - d * y for x, y in zip(av, avi))
                    pairs[ra] = rav
                    new.append(ra)
                    if len(pairs) > _MAX_ROOTS:
                        raise RootDatumError(
                            "root closure exceeds bound; Cartan matrix is "
                            "not of finite type")
        frontier = new
    return pairs


def _validate_and_build(family, rank, simple_roots, simple_coroots):
    simple_roots = tuple(tuple(a) for a in simple_roots)
    simple_coroots = tuple(tuple(av) for av in simple_coroots)
    if len(simple_roots) != len(simple_coroots):
        raise RootDatumError("need equally many simple roots and coroots")
    for v in simple_roots + simple_coroots:
        if len(v) != rank:
            raise RootDatumError("root/coroot length differs from rank")

    m = len(simple_roots)
    cartan = [[dot(simple_coroots[i], simple_roots[j]) for j in range(m)]
              for i in range(m)]
    for i in range(m):
        if cartan[i][i] != 2:
            raise RootDatumError(f"<a_{i}^vee, a_{i}> = {cartan[i][i]} != 2")
        for j in range(m):
            if i != j:
                if cartan[i][j] > 0:
                    raise RootDatumError("positive off-diagonal Cartan entry")
                if (cartan[i][j] == 0) != (cartan[j][i] == 0):
                    raise RootDatumError("asymmetric zero pattern in Cartan matrix")

    rd = RootDatum(family, rank, simple_roots, simple_coroots)

    if m:
        pairs = _close_roots(simple_roots, simple_coroots)
        pos = []
        for a, av in pairs.items():
            coords = rd._simple_coords(a)
            if all(x >= 0 for x in coords):
                pos.append((a, av))
            elif not all(x <= 0 for x in coords):
                raise RootDatumError(f"root {a} is neither positive nor negative")
        pos.sort(key=lambda p: (sum(rd._simple_coords(p[0])), p[0]))
        pos_roots = tuple(a for a, _ in pos)
        pos_coroots = tuple(av for _, av in pos)
    else:
        pos_roots = pos_coroots = ()

    two_rho = tuple(sum(col) for col in zip(*pos_roots)) if pos_roots \
        else (0,) * rank

    rd = RootDatum(family, rank, simple_roots, simple_coroots,
                   pos_roots, pos_coroots, two_rho)
    rd.highest_roots  # fail fast on malformed component data
    return rd


def build_root_datum(family: str, n: int) -> RootDatum:
    """Standard based root datum of GL(n), SL(n), Sp(n) or GSp(n).

    For Sp and GSp, `n` is the matrix size and must be even (type C_{n/2}).
    """
    family = family.upper()
    if family == "GL":
        if n < 1:
            raise RootDatumError("GL(n) needs n >= 1")
        e = lambda i: tuple(1 if j == i else 0 for j in range(n))
        diff = [tuple(a - b for a, b in zip(e(i), e(i + 1)))
                for i in range(n - 1)]
        return _validate_and_build(f"GL({n})", n, diff, diff)

    if family == "SL":
        if n < 2:
            raise RootDatumError("SL(n) needs n >= 2")
        rank = n - 1
        cartan = [[2 if i == j else (-1 if abs(i - j) == 1 else 0)
                   for j in range(rank)] for i in range(rank)]
        roots = [tuple(cartan[i][j] for i in range(rank)) for j in range(rank)]
        coroots = [tuple(1 if i == j else 0 for i in range(rank))
                   for j in range(rank)]
        return _validate_and_build(f"SL({n})", rank, roots, coroots)

    if family in ("SP", "GSP"):
        if n < 2 or n % 2:
            raise RootDatumError(f"{family}(n) needs even n >= 2")
        k = n // 2
        rank = k if family == "SP" else k + 1
        pad = () if family == "SP" else (0,)

        def e(i):
            return tuple(1 if j == i else 0 for j in range(k))

        roots, coroots = [], []
        for i in range(k - 1):
            d = tuple(a - b for a, b in zip(e(i), e(i + 1)))
            roots.append(d + pad)
            coroots.append(d + pad)
        long_root = tuple(2 if j == k - 1 else 0 for j in range(k))
        roots.append(long_root + ((-1,) if family == "GSP" else ()))
        coroots.append(e(k - 1) + pad)
        name = f"{'Sp' if family == 'SP' else 'GSp'}({n})"
        return _validate_and_build(name, rank, roots, coroots)

    raise RootDatumError(f"unsupported family {family!r}")


def load_root_datum(path) -> RootDatum:
    """Load a custom root datum from a key/value config file.

    Format (``#`` comments allowed)::

        name pgl2
        rank 1
        simple_roots
        1
        end
        simple_coroots
        2
        end

    ``simple_roots`` rows are character vectors, ``simple_coroots`` rows are
    coweight vectors, both of length ``rank``.  The datum is validated on
    load (finite-type Cartan matrix, consistent root closure).
    """
    name, rank = None, None
    blocks = {"simple_roots": [], "simple_coroots": []}
    current = None
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if current is not None:
                if line == "end":
                    current = None
                else:
                    try:
                        blocks[current].append(tuple(int(t) for t in line.split()))
                    except ValueError:
                        raise RootDatumError(f"bad matrix row {line!r}") from None
                continue
            if line in blocks:
                current = line
                continue
            key, _, value = line.partition(" ")
            if key == "name":
                name = value.strip()
            elif key == "rank":
                try:
                    rank = int(value)
                except ValueError:
                    raise RootDatumError(f"bad rank {value!r}") from None
            else:
                raise RootDatumError(f"unknown config key {key!r}")
    if current is not None:
        raise RootDatumError(f"unterminated block {current!r}")
    if rank is None:
        raise RootDatumError("config is missing 'rank'")
    return _validate_and_build(name or "custom", rank,
                               blocks["simple_roots"], blocks["simple_coroots"])


def levi_sub_datum(rd: RootDatum, labels) -> RootDatum:
    """The standard Levi subgroup datum for a subset of simple roots.

    `labels` are 1-based simple-root labels (matching reflection labels
    s_1..s_m).  The cocharacter lattice is unchanged; only the root system
    shrinks.
    """
    labels = sorted(set(labels))
    for lab in labels:
        if not 1 <= lab <= rd.n_simple:
            raise RootDatumError(f"not a simple root label: {lab}")
    idx = [lab - 1 for lab in labels]
    return _validate_and_build(
        f"{rd.family}|levi{labels}", rd.rank,
        [rd.simple_roots[i] for i in idx],
        [rd.simple_coroots[i] for i in idx])


# -- the module-level operations ----------------------------------------------


def weyl_orbit(rd: RootDatum, mu) -> frozenset:
    """Full orbit of a coweight under the finite Weyl group."""
    mu = tuple(mu)
    if len(mu) != rd.rank:
        raise RootDatumError("coweight length differs from rank")
    seen = {mu}
    frontier = [mu]
    while frontier:
        new = []
        for la in frontier:
            for i in range(rd.n_simple):
                r = rd.reflect(i, la)
                if r not in seen:
                    seen.add(r)
                    new.append(r)
        frontier = new
    return frozenset(seen)


def pair_two_rho(rd: RootDatum, la) -> int:
    """<la, 2*rho>, the pairing against the sum of the positive roots."""
    return dot(la, rd.two_rho)


def is_minuscule(rd: RootDatum, mu) -> bool:
    """True iff the dominant mu pairs to 0 or 1 with every positive root."""
    if not rd.is_dominant(mu):
        raise RootDatumError(f"{mu} is not dominant")
    return all(dot(mu, a) in (0, 1) for a in rd.pos_roots)
