"""Sparse exact multivariate polynomials over the rationals.

Terms live in a map from exponent tuples to nonzero rational
coefficients.  The canonical (serialization and division) order is
graded lexicographic with x1 > x2 > ... ; the zero polynomial has
degree None, a deliberate sentinel distinct from every true degree.
"""

import json
from itertools import permutations

from qcap.scalars import QQ, format_rational, parse_rational


class NonDivisibleError(ArithmeticError):
    """Raised by exact_divide when the quotient would not be polynomial."""


def _monokey(e):
    return (sum(e), e)


class MultiPoly:
    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {}
        if terms:
            for e, c in terms.items():
                if c:
                    self.terms[tuple(e)] = QQ(c)

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def constant(cls, n, c):
        return cls(n, {(0,) * n: c})

    @classmethod
    def one(cls, n):
        return cls.constant(n, 1)

    @classmethod
    def variable(cls, n, i):
        """x_i, 1-based."""
        e = [0] * n
        e[i - 1] = 1
        return cls(n, {tuple(e): 1})

    @property
    def degree(self):
        """Total degree; None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, MultiPoly)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def _check(self, other):
        if self.n != other.n:
            raise ValueError("variable count mismatch: %d vs %d" % (self.n, other.n))

    def __add__(self, other):
        self._check(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            s = t.get(e, 0) + c
            if s:
                t[e] = s
            else:
                t.pop(e, None)
        return MultiPoly(self.n, t)

    def __neg__(self):
        return MultiPoly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        self._check(other)
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = t.get(e, 0) + c1 * c2
                if s:
                    t[e] = s
                else:
                    del t[e]
        return MultiPoly(self.n, t)

    __rmul__ = __mul__

    def scale(self, c):
        c = QQ(c)
        if not c:
            return MultiPoly.zero(self.n)
        return MultiPoly(self.n, {e: c * v for e, v in self.terms.items()})

    def __pow__(self, k):
        out = MultiPoly.one(self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def evaluate(self, point):
        """Exact value at a point (sequence of rationals of length n)."""
        if len(point) != self.n:
            raise ValueError("point length %d != %d variables" % (len(point), self.n))
        point = [QQ(x) for x in point]
        total = QQ(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= x**k
            total += v
        return total

    def homogeneous_part(self, d):
        """Sum of the terms of total degree exactly d."""
        return MultiPoly(self.n, {e: c for e, c in self.terms.items() if sum(e) == d})

    def substitute(self, images):
        """Compose: replace x_i by images[i-1] (MultiPolys in m variables)."""
        if len(images) != self.n:
            raise ValueError("need one image per variable")
        m = images[0].n
        out = MultiPoly.zero(m)
        for e, c in self.terms.items():
            term = MultiPoly.constant(m, c)
            for img, k in zip(images, e):
                if k:
                    term = term * img**k
            out = out + term
        return out

    def permuted(self, perm):
        """Apply x_i -> x_{perm[i-1]} (perm is a 1-based image tuple)."""
        t = {}
        for e, c in self.terms.items():
            ne = [0] * self.n
            for i, k in enumerate(e):
                ne[perm[i] - 1] = k
            t[tuple(ne)] = c
        return MultiPoly(self.n, t)

    def negate_vars(self):
        """x_i -> -x_i for every i."""
        return MultiPoly(
            self.n,
            {e: (c if sum(e) % 2 == 0 else -c) for e, c in self.terms.items()},
        )

    def leading(self):
        e = max(self.terms, key=_monokey)
        return e, self.terms[e]

    def canonical_terms(self):
        """Terms in descending graded-lex order (leading term first)."""
        return sorted(self.terms.items(), key=lambda item: _monokey(item[0]), reverse=True)

    # -- rendering and serialization -----------------------------------

    def to_text(self):
        if not self.terms:
            return "0"
        chunks = []
        for e, c in self.canonical_terms():
            factors = []
            for i, k in enumerate(e):
                if k == 1:
                    factors.append("x%d" % (i + 1))
                elif k > 1:
                    factors.append("x%d^%d" % (i + 1, k))
            mag = format_rational(abs(c))
            if factors:
                body = "*".join(([mag] if mag != "1" else []) + factors)
            else:
                body = mag
            if not chunks:
                chunks.append(body if c > 0 else "-" + body)
            else:
                chunks.append(("+ " if c > 0 else "- ") + body)
        return " ".join(chunks)

    def to_json_obj(self):
        return {
            "n": self.n,
            "terms": [
                {"e": list(e), "c": format_rational(c)}
                for e, c in self.canonical_terms()
            ],
        }

    def to_json(self):
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj):
        n = int(obj["n"])
        terms = {}
        for t in obj["terms"]:
            e = tuple(int(x) for x in t["e"])
            if len(e) != n:
                raise ValueError("exponent vector of wrong length")
            terms[e] = parse_rational(t["c"])
        return cls(n, terms)

    @classmethod
    def from_json(cls, s):
        return cls.from_json_obj(json.loads(s))

    def __repr__(self):
        return "MultiPoly(%d, %s)" % (self.n, self.to_text())


def exact_divide(p, q):
    """Exact quotient r with p = q*r; raises NonDivisibleError otherwise.

    Iterated leading-term elimination in graded-lex order; the order is
    multiplicative, so for genuinely divisible inputs the leading terms
    line up at every step.
    """
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    p._check(q)
    rem = p
    quot = MultiPoly.zero(p.n)
    qe, qc = q.leading()
    while not rem.is_zero():
        re, rc = rem.leading()
        diff = tuple(a - b for a, b in zip(re, qe))
        if any(d < 0 for d in diff):
            raise NonDivisibleError("leading monomial not divisible")
        t = MultiPoly(p.n, {diff: rc / qc})
        quot = quot + t
        rem = rem - t * q
    return quot


def is_q_symmetric(p):
    """Symmetric, and p(t,-t,x3,...,xn) free of t (vacuous for n=1)."""
    n = p.n
    for i in range(1, n):
        perm = list(range(1, n + 1))
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
        if p.permuted(tuple(perm)) != p:
            return False
    if n >= 2:
        # substitute x1 = t, x2 = -t; remaining variables shift down one slot
        m = n - 1
        images = [MultiPoly.variable(m, 1), -MultiPoly.variable(m, 1)]
        for j in range(3, n + 1):
            images.append(MultiPoly.variable(m, j - 1))
        sub = p.substitute(images)
        for e in sub.terms:
            if e[0] != 0:
                return False
    return True
