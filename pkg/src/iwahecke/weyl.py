"""
Indexed finite Weyl groups.

The finite Weyl group of a root datum is enumerated once, breadth-first from
the identity, and every element is stored as its action matrix on the
cocharacter lattice.  All group operations used downstream (by the affine
Weyl group and the Hecke algebra) then become table lookups keyed by element
index, which is what the compiled kernel consumes.

>>> from iwahecke.rootdata import build_root_datum
>>> w = IndexedWeyl(build_root_datum("GL", 3))
>>> w.size
6
>>> w.length[w.longest]
3
>>> w.word[w.longest]   # canonical reduced word, 0-based indices
(0, 1, 0)
"""

from __future__ import annotations

from .rootdata import RootDatum, RootDatumError

__all__ = ["IndexedWeyl", "FiniteWeylElement"]

_MAX_GROUP = 500_000


def _mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n))


def _mat_apply(m, v):
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in m)


def _transpose(m):
    return tuple(tuple(m[j][i] for j in range(len(m))) for i in range(len(m)))


class IndexedWeyl:
    """Fully enumerated finite Weyl group with lookup tables."""

    def __init__(self, rd: RootDatum):
        self.rd = rd
        rank, m = rd.rank, rd.n_simple
        ident = tuple(tuple(1 if i == j else 0 for j in range(rank))
                      for i in range(rank))
        gen_mats = []
        for i in range(m):
            av, a = rd.simple_coroots[i], rd.simple_roots[i]
            gen_mats.append(tuple(
                tuple((1 if r == c else 0) - av[r] * a[c] for c in range(rank))
                for r in range(rank)))
        self.gen_mats = tuple(gen_mats)

        # breadth-first enumeration; level order gives the length function
        mats = [ident]
        index = {ident: 0}
        length = [0]
        rmul = [[0] * m]
        frontier = [0]
        while frontier:
            new = []
            for w in frontier:
                for i in range(m):
                    p = _mat_mul(mats[w], gen_mats[i])
                    j = index.get(p)
                    if j is None:
                        j = len(mats)
                        if j >= _MAX_GROUP:
                            raise RootDatumError("finite Weyl group too large")
                        mats.append(p)
                        index[p] = j
                        length.append(length[w] + 1)
                        rmul.append([0] * m)
                        new.append(j)
                    rmul[w][i] = j
            frontier = new

        self.size = len(mats)
        self.mats = tuple(mats)
        self.index = index
        self.length = tuple(length)
        self.rmul = tuple(tuple(r) for r in rmul)
        self.lmul = tuple(
            tuple(index[_mat_mul(gen_mats[i], mats[w])] for i in range(m))
            for w in range(self.size))
        self.inv = tuple(index[_mat_inverse(mt)] for mt in mats)
        self.gen_index = tuple(index[g] for g in gen_mats)
        self.longest = max(range(self.size), key=lambda w: self.length[w])

        # canonical reduced word: repeatedly strip the smallest left descent
        word = [None] * self.size
        word[0] = ()
        for w in sorted(range(self.size), key=lambda w: self.length[w]):
            if w == 0:
                continue
            for i in range(m):
                u = self.lmul[w][i]
                if self.length[u] < self.length[w]:
                    word[w] = (i,) + word[u]
                    break
        self.word = tuple(word)

        # root_sign[w][a]: is w^{-1}(alpha_a) positive?
        pos_set = set(rd.pos_roots)
        signs = []
        for mt in self.mats:
            tr = _transpose(mt)
            row = []
            for a in rd.pos_roots:
                b = _mat_apply(tr, a)
                if b in pos_set:
                    row.append(1)
                elif tuple(-x for x in b) in pos_set:
                    row.append(-1)
                else:  # pragma: no cover - closure guarantees this
                    raise RootDatumError(f"image {b} of a root is not a root")
            signs.append(tuple(row))
        self.root_sign = tuple(signs)

    def apply(self, w: int, vec):
        return _mat_apply(self.mats[w], vec)

    def mul(self, w1: int, w2: int) -> int:
        return self.index[_mat_mul(self.mats[w1], self.mats[w2])]

    def reflection_index(self, coroot, root) -> int:
        """Index of the reflection with the given (co)root pair."""
        rank = self.rd.rank
        mat = tuple(tuple((1 if r == c else 0) - coroot[r] * root[c]
                          for c in range(rank)) for r in range(rank))
        return self.index[mat]

    def element(self, w: int) -> "FiniteWeylElement":
        return FiniteWeylElement(self, w)


def _mat_inverse(m):
    # Weyl action matrices are orthogonal with respect to the root pairing
    # so invert honestly: the inverse of an
    # integer matrix of determinant +-1 via adjugate would be overkill here;
    # these matrices have finite order, so iterate.
    n = len(m)
    ident = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    acc = m
    prev = ident
    while acc != ident:
        prev = acc
        acc = _mat_mul(acc, m)
    return prev


class FiniteWeylElement:
    """A finite Weyl group element: an index plus its lookup context."""

    __slots__ = ("group", "idx")

    def __init__(self, group: IndexedWeyl, idx: int):
        self.group = group
        self.idx = idx

    @property
    def word(self):
        """Canonical reduced word, 0-based simple reflection indices."""
        return self.group.word[self.idx]

    @property
    def matrix(self):
        return self.group.mats[self.idx]

    def length(self) -> int:
        return self.group.length[self.idx]

    def apply(self, vec):
        return self.group.apply(self.idx, vec)

    def __mul__(self, other):
        if not isinstance(other, FiniteWeylElement) or other.group is not self.group:
            return NotImplemented
        return FiniteWeylElement(self.group, self.group.mul(self.idx, other.idx))

    def inverse(self):
        return FiniteWeylElement(self.group, self.group.inv[self.idx])

    def __eq__(self, other):
        return (isinstance(other, FiniteWeylElement)
                and (other.group is self.group or other.group.rd == self.group.rd)
                and other.idx == self.idx)

    def __hash__(self):
        return hash(self.idx)

    def __repr__(self):
        return f"FiniteWeylElement({'*'.join(f's{i + 1}' for i in self.word) or 'e'})"
