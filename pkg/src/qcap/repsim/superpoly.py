"""Polynomial superalgebra on V = q(n).

Generators are n^2 even coordinates u^{pq} and n^2 odd coordinates
xi^{pq}.  A monomial is a pair (E, O): E is the tuple of even exponents
in row-major order, O is a bitmask of odd generators present.  Odd
generators are globally ordered row-major; every product is
sign-canonicalized against that order (Koszul signs).
"""

from functools import lru_cache
from itertools import combinations
from math import comb

from qcap.scalars import QQ


def gen_index(n, p, q):
    """Row-major index of the (p,q) generator, 1-based in p, q."""
    return (p - 1) * n + (q - 1)


def mono_degree(mono):
    E, O = mono
    return sum(E) + bin(O).count("1")


def mono_parity(mono):
    return bin(mono[1]).count("1") & 1


def mono_mul(m1, m2):
    """Product of monomials: (mono, sign) or None when an odd generator
    repeats.  Sign counts the odd transpositions needed to merge the two
    bitmask sequences into global order."""
    E1, O1 = m1
    E2, O2 = m2
    if O1 & O2:
        return None
    flips = 0
    O2rest = O2
    while O2rest:
        j = (O2rest & -O2rest).bit_length() - 1
        flips += bin(O1 >> (j + 1)).count("1")
        O2rest &= O2rest - 1
    E = tuple(a + b for a, b in zip(E1, E2))
    sign = -1 if flips & 1 else 1
    return (E, O1 | O2), sign


class SuperPoly:
    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {}
        if terms:
            for m, c in terms.items():
                if c:
                    self.terms[m] = QQ(c)

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def one(cls, n):
        return cls(n, {((0,) * (n * n), 0): 1})

    @classmethod
    def gen_u(cls, n, p, q):
        E = [0] * (n * n)
        E[gen_index(n, p, q)] = 1
        return cls(n, {(tuple(E), 0): 1})

    @classmethod
    def gen_xi(cls, n, p, q):
        return cls(n, {((0,) * (n * n), 1 << gen_index(n, p, q)): 1})

    @classmethod
    def even_diagonal(cls, n, coeffs):
        """sum_i coeffs[i] * u^{ii}."""
        out = cls.zero(n)
        for i, c in enumerate(coeffs, start=1):
            out = out + cls.gen_u(n, i, i).scale(c)
        return out

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, SuperPoly)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __add__(self, other):
        t = dict(self.terms)
        for m, c in other.terms.items():
            s = t.get(m, 0) + c
            if s:
                t[m] = s
            else:
                t.pop(m, None)
        return SuperPoly(self.n, t)

    def __neg__(self):
        return SuperPoly(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = QQ(c)
        if not c:
            return SuperPoly.zero(self.n)
        return SuperPoly(self.n, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        t = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                hit = mono_mul(m1, m2)
                if hit is None:
                    continue
                m, sign = hit
                s = t.get(m, 0) + sign * c1 * c2
                if s:
                    t[m] = s
                else:
                    del t[m]
        return SuperPoly(self.n, t)

    def __pow__(self, k):
        out = SuperPoly.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def eval_at_e(self):
        """Evaluate at the base point e: u^{pq} -> delta_{pq}, xi -> 0."""
        n = self.n
        total = QQ(0)
        for (E, O), c in self.terms.items():
            if O:
                continue
            if any(E[gen_index(n, p, q)] for p in range(1, n + 1)
                   for q in range(1, n + 1) if p != q):
                continue
            total += c
        return total

    def __repr__(self):
        return "SuperPoly(%d, %d terms)" % (self.n, len(self.terms))


def deriv_u(poly, p, q):
    """d/du^{pq}."""
    idx = gen_index(poly.n, p, q)
    t = {}
    for (E, O), c in poly.terms.items():
        if E[idx]:
            Em = list(E)
            Em[idx] -= 1
            m = (tuple(Em), O)
            s = t.get(m, 0) + c * E[idx]
            if s:
                t[m] = s
            else:
                del t[m]
    return SuperPoly(poly.n, t)


def deriv_xi(poly, p, q):
    """d/dxi^{pq}; the sign counts odd generators preceding xi^{pq} in
    the global order that are present in the monomial."""
    idx = gen_index(poly.n, p, q)
    bit = 1 << idx
    t = {}
    for (E, O), c in poly.terms.items():
        if O & bit:
            sign = -1 if bin(O & (bit - 1)).count("1") & 1 else 1
            m = (E, O & ~bit)
            s = t.get(m, 0) + sign * c
            if s:
                t[m] = s
            else:
                del t[m]
    return SuperPoly(poly.n, t)


def apply_diff_mono(dmono, mono):
    """Apply the constant-coefficient monomial operator given by dmono:
    even part as iterated d/du, odd part as d/dxi applied in increasing
    global order.  Returns (mono, coeff) or None."""
    dE, dO = dmono
    E, O = mono
    if dO & ~O:
        return None
    coeff = 1
    for t in range(len(E)):
        k = dE[t]
        if k:
            if E[t] < k:
                return None
            for s in range(k):
                coeff *= E[t] - s
    sign = 1
    Ocur = O
    dOrest = dO
    while dOrest:
        j = (dOrest & -dOrest).bit_length() - 1
        if bin(Ocur & ((1 << j) - 1)).count("1") & 1:
            sign = -sign
        Ocur &= ~(1 << j)
        dOrest &= dOrest - 1
    E_out = tuple(a - b for a, b in zip(E, dE))
    return (E_out, Ocur), sign * coeff


def diff_mono_self_pairing(mono):
    """Coefficient of applying a monomial operator to its own monomial:
    the product of even factorials (the odd signs cancel in increasing
    application order)."""
    out = apply_diff_mono(mono, mono)
    return out[1]


def _compositions(d, m):
    """Weak compositions of d into m parts, first part largest first."""
    if m == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in _compositions(d - first, m - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def graded_basis(n, k):
    """All monomials of total degree k, ordered with fewer odd
    generators first, then by odd subset, then by even exponents in
    descending lexicographic order."""
    m = n * n
    out = []
    for r in range(0, min(k, m) + 1):
        for odd in combinations(range(m), r):
            O = 0
            for j in odd:
                O |= 1 << j
            for E in _compositions(k - r, m):
                out.append((E, O))
    return tuple(out)


def graded_dimension(n, k):
    m = n * n
    return sum(comb(m, r) * comb(k - r + m - 1, m - 1)
               for r in range(0, min(k, m) + 1))
