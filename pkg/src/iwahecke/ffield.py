"""
Small finite fields GF(p^r) with table-based arithmetic.

Elements are ints in [0, q) encoding polynomial coefficients base p
(little-endian) over GF(p), modulo a monic irreducible found by search.  All
tables are precomputed, so q is capped at a small bound; the deep-level
evaluators need q in {2, 3, 4, 9} and similar.
"""

from __future__ import annotations

from functools import lru_cache

__all__ = ["GF"]

_MAX_Q = 4096


@lru_cache(maxsize=None)
def GF(p: int, r: int = 1) -> "_Field":
    return _Field(p, r)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class _Field:
    def __init__(self, p: int, r: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if r < 1 or p ** r > _MAX_Q:
            raise ValueError(f"GF({p}^{r}) is out of supported range")
        self.p = p
        self.r = r
        self.q = p ** r
        self.modulus = self._find_irreducible() if r > 1 else (0, 1)
        self._build_tables()

    # polynomials over GF(p) as little-endian coefficient tuples
    def _poly_mul_mod(self, a, b):
        p, r = self.p, self.r
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] = (out[i + j] + x * y) % p
        # reduce modulo the monic irreducible
        m = self.modulus
        for i in range(len(out) - 1, r - 1, -1):
            c = out[i]
            if c:
                out[i] = 0
                for j in range(r):
                    out[i - r + j] = (out[i - r + j] - c * m[j]) % p
        return tuple(out[:r]) + (0,) * (r - len(out[:r]))

    def _find_irreducible(self):
        p, r = self.p, self.r
        # monic x^r + lower; irreducible iff no monic factor of degree <= r/2
        def polys(deg):
            for n in range(p ** deg):
                coeffs = []
                m = n
                for _ in range(deg):
                    coeffs.append(m % p)
                    m //= p
                yield tuple(coeffs) + (1,)

        def divides(d, f):
            f = list(f)
            while len(f) >= len(d) and any(f):
                while f and f[-1] == 0:
                    f.pop()
                if len(f) < len(d):
                    break
                c = f[-1]
                shift = len(f) - len(d)
                for i, x in enumerate(d):
                    f[shift + i] = (f[shift + i] - c * x) % p
            return not any(f)

        for cand in polys(r):
            if cand[0] == 0:
                continue  # divisible by x
            if all(not divides(d, cand)
                   for deg in range(1, r // 2 + 1) for d in polys(deg)):
                return cand[:r]  # store the low coefficients of the monic
        raise AssertionError("no irreducible polynomial found")

    def _encode(self, coeffs) -> int:
        n = 0
        for c in reversed(coeffs):
            n = n * self.p + (c % self.p)
        return n

    def _decode(self, n: int):
        out = []
        for _ in range(self.r):
            out.append(n % self.p)
            n //= self.p
        return tuple(out)

    def _build_tables(self):
        q = self.q
        self.add_table = [[0] * q for _ in range(q)]
        self.mul_table = [[0] * q for _ in range(q)]
        for a in range(q):
            pa = self._decode(a)
            for b in range(a, q):
                pb = self._decode(b)
                s = self._encode([(x + y) % self.p for x, y in zip(pa, pb)])
                self.add_table[a][b] = self.add_table[b][a] = s
                m = self._encode(self._poly_mul_mod(pa, pb))
                self.mul_table[a][b] = self.mul_table[b][a] = m
        self.neg_table = [0] * q
        self.inv_table = [0] * q
        for a in range(q):
            pa = self._decode(a)
            self.neg_table[a] = self._encode([(-x) % self.p for x in pa])
        for a in range(1, q):
            self.inv_table[a] = self.pow(a, q - 2)

    # -- public ops ---------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self.inv_table[a]

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            a, n = self.inv(a), -n
        out = 1
        while n:
            if n & 1:
                out = self.mul_table[out][a]
            a = self.mul_table[a][a]
            n >>= 1
        return out

    def norm_to_prime(self, a: int) -> int:
        """Norm GF(p^r) -> GF(p): a -> a^(1 + p + ... + p^(r-1))."""
        return self.pow(a, (self.q - 1) // (self.p - 1))

    def elements(self):
        return range(self.q)

    def units(self):
        return range(1, self.q)

    def lift_int(self, n: int) -> int:
        """Image of an integer under Z -> GF(p) subfield."""
        return n % self.p

    def __repr__(self):
        return f"GF({self.p}^{self.r})" if self.r > 1 else f"GF({self.p})"

    def __hash__(self):
        return hash((self.p, self.r))

    def __eq__(self, other):
        return isinstance(other, _Field) and (other.p, other.r) == (self.p, self.r)
