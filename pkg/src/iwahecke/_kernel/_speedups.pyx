# cython: language_level=3, boundscheck=False, wraparound=False
"""
Compiled kernel for extended affine Weyl group element arithmetic.

Behaviourally identical to ``_pykernel.Kernel`` (same spec bundle, same
method signatures, same results); see tests/test_kernel_parity.py.
Coordinates are stored as C long long: the coweights that arise here stay far
inside that range.
"""

from libc.stdlib cimport free, malloc

IMPL = "c"


cdef class Kernel:
    cdef long long *act          # nw * rank * rank
    cdef long long *inv_arr      # nw
    cdef long long *roots_arr    # nroots * rank
    cdef signed char *rsign      # nw * nroots
    cdef long long *gvec         # ngens * rank
    cdef long long *gk           # ngens
    cdef long long *gridx        # ngens
    cdef signed char *gflip      # ngens
    cdef long long *gtrans       # ngens * rank
    cdef long long *gfin         # ngens
    cdef long long *glrow        # ngens * nw
    cdef long long *grrow        # ngens * nw
    cdef int rank, nw, nroots, ngens
    cdef dict findex
    cdef readonly tuple gens
    cdef readonly tuple roots
    cdef readonly tuple root_sign

    def __cinit__(self, spec):
        cdef int i, j, k
        self.rank = spec["rank"]
        if self.rank > 64:
            raise ValueError("compiled kernel supports rank <= 64")
        act = spec["act"]
        self.nw = len(act)
        self.findex = dict(spec["findex"])
        self.gens = tuple(spec["gens"])
        self.roots = tuple(spec["roots"])
        self.root_sign = tuple(spec["root_sign"])
        self.nroots = len(self.roots)
        self.ngens = len(self.gens)

        cdef int r = self.rank
        self.act = <long long *>malloc(self.nw * r * r * sizeof(long long))
        self.inv_arr = <long long *>malloc(self.nw * sizeof(long long))
        self.roots_arr = <long long *>malloc(max(1, self.nroots * r) * sizeof(long long))
        self.rsign = <signed char *>malloc(max(1, self.nw * self.nroots))
        self.gvec = <long long *>malloc(max(1, self.ngens * r) * sizeof(long long))
        self.gk = <long long *>malloc(max(1, self.ngens) * sizeof(long long))
        self.gridx = <long long *>malloc(max(1, self.ngens) * sizeof(long long))
        self.gflip = <signed char *>malloc(max(1, self.ngens))
        self.gtrans = <long long *>malloc(max(1, self.ngens * r) * sizeof(long long))
        self.gfin = <long long *>malloc(max(1, self.ngens) * sizeof(long long))
        self.glrow = <long long *>malloc(max(1, self.ngens * self.nw) * sizeof(long long))
        self.grrow = <long long *>malloc(max(1, self.ngens * self.nw) * sizeof(long long))

        for i in range(self.nw):
            m = act[i]
            for j in range(r):
                row = m[j]
                for k in range(r):
                    self.act[(i * r + j) * r + k] = row[k]
        inv = spec["inv"]
        for i in range(self.nw):
            self.inv_arr[i] = inv[i]
        for i in range(self.nroots):
            root = self.roots[i]
            for j in range(r):
                self.roots_arr[i * r + j] = root[j]
        for i in range(self.nw):
            row = self.root_sign[i]
            for j in range(self.nroots):
                self.rsign[i * self.nroots + j] = row[j]
        for i in range(self.ngens):
            vec, kk, ridx, flip, gt, gf, lrow, rrow = self.gens[i]
            for j in range(r):
                self.gvec[i * r + j] = vec[j]
                self.gtrans[i * r + j] = gt[j]
            self.gk[i] = kk
            self.gridx[i] = ridx
            self.gflip[i] = 1 if flip else 0
            self.gfin[i] = gf
            for j in range(self.nw):
                self.glrow[i * self.nw + j] = lrow[j]
                self.grrow[i * self.nw + j] = rrow[j]

    def __dealloc__(self):
        free(self.act); free(self.inv_arr); free(self.roots_arr)
        free(self.rsign); free(self.gvec); free(self.gk); free(self.gridx)
        free(self.gflip); free(self.gtrans); free(self.gfin)
        free(self.glrow); free(self.grrow)

    cdef tuple _apply_c(self, int w, object vec):
        cdef int r = self.rank
        cdef long long base = w * r * r
        cdef long long s
        cdef long long tmp[64]
        cdef int i, j
        cdef long long vv[64]
        for j in range(r):
            vv[j] = vec[j]
        for i in range(r):
            s = 0
            for j in range(r):
                s += self.act[base + i * r + j] * vv[j]
            tmp[i] = s
        return tuple([tmp[i] for i in range(r)])

    def apply(self, int w, vec):
        return self._apply_c(w, vec)

    def mul(self, t1, int w1, t2, int w2):
        """(t1 w1)(t2 w2) = (t1 + w1(t2), w1 w2)."""
        cdef int r = self.rank
        cdef long long base1 = w1 * r * r
        cdef long long base2 = w2 * r * r
        cdef int i, j, k
        cdef long long s
        cdef long long vv[64]
        for j in range(r):
            vv[j] = t2[j]
        out = []
        for i in range(r):
            s = t1[i]
            for j in range(r):
                s += self.act[base1 + i * r + j] * vv[j]
            out.append(s)
        # compose the action matrices and look the product up
        comp = []
        for i in range(r):
            row = []
            for j in range(r):
                s = 0
                for k in range(r):
                    s += self.act[base1 + i * r + k] * self.act[base2 + k * r + j]
                row.append(s)
            comp.append(tuple(row))
        return tuple(out), self.findex[tuple(comp)]

    def inv(self, t, int w):
        cdef int wi = <int>self.inv_arr[w]
        cdef int r = self.rank
        cdef long long base = wi * r * r
        cdef int i, j
        cdef long long s
        cdef long long vv[64]
        for j in range(r):
            vv[j] = t[j]
        out = []
        for i in range(r):
            s = 0
            for j in range(r):
                s -= self.act[base + i * r + j] * vv[j]
            out.append(s)
        return tuple(out), wi

    def length(self, t, int w):
        cdef int r = self.rank
        cdef int a, j
        cdef long long p
        cdef long long total = 0
        cdef long long vv[64]
        for j in range(r):
            vv[j] = t[j]
        for a in range(self.nroots):
            p = 0
            for j in range(r):
                p += vv[j] * self.roots_arr[a * r + j]
            if self.rsign[w * self.nroots + a] < 0:
                p -= 1
            total += p if p >= 0 else -p
        return total

    def lmul_gen(self, int g, t, int w):
        cdef int r = self.rank
        cdef int gf = <int>self.gfin[g]
        cdef long long base = gf * r * r
        cdef int i, j
        cdef long long s
        cdef long long vv[64]
        for j in range(r):
            vv[j] = t[j]
        out = []
        for i in range(r):
            s = self.gtrans[g * r + i]
            for j in range(r):
                s += self.act[base + i * r + j] * vv[j]
            out.append(s)
        return tuple(out), self.glrow[g * self.nw + w]

    def rmul_gen(self, t, int w, int g):
        cdef int r = self.rank
        cdef long long base = w * r * r
        cdef int i, j
        cdef long long s
        cdef long long gt[64]
        for j in range(r):
            gt[j] = self.gtrans[g * r + j]
        out = []
        for i in range(r):
            s = t[i]
            for j in range(r):
                s += self.act[base + i * r + j] * gt[j]
            out.append(s)
        return tuple(out), self.grrow[g * self.nw + w]

    def left_descent(self, int g, t, int w):
        cdef int r = self.rank
        cdef long long m = self.gk[g]
        cdef int j
        for j in range(r):
            m += <long long>t[j] * self.gvec[g * r + j]
        if m != 0:
            return m < 0
        cdef signed char s = self.rsign[w * self.nroots + <int>self.gridx[g]]
        if self.gflip[g]:
            return s > 0
        return s < 0
