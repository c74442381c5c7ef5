"""Schur Q-functions and their factorial (shifted-parameter) relatives.

Q_lambda(x|a) is a symmetrization of products of generalized powers
(x|a)^k = (x-a_1)...(x-a_k) against a ratio of Vandermonde-like factors.
The two specializations of interest are a = 0 (Schur Q-functions) and
a = (0,1,2,...) (factorial Schur Q-functions).

The expansion never manipulates rational functions term by term: every
summand is cleared to the global Vandermonde denominator with an
orientation sign, the numerators are added, and a single exact division
recovers the polynomial.
"""

from itertools import permutations
from math import factorial

from qcap import linalg
from qcap.partitions import StrictPartition, enumerate_strict, precedes_key
from qcap.polyring import MultiPoly, exact_divide, is_q_symmetric
from qcap.scalars import QQ


class ParamSequence:
    """Parameter sequence a_1, a_2, ...; custom values extend by zero."""

    __slots__ = ("kind", "values")

    def __init__(self, kind, values=None):
        if kind not in ("zeros", "shifted", "custom"):
            raise ValueError("kind must be zeros, shifted, or custom")
        self.kind = kind
        self.values = tuple(QQ(v) for v in values) if kind == "custom" else ()

    @classmethod
    def zeros(cls):
        return cls("zeros")

    @classmethod
    def shifted(cls):
        return cls("shifted")

    @classmethod
    def custom(cls, values):
        return cls("custom", values)

    def value(self, i):
        """a_i, 1-based."""
        if i < 1:
            raise ValueError("index must be >= 1")
        if self.kind == "zeros":
            return QQ(0)
        if self.kind == "shifted":
            return QQ(i - 1)
        return self.values[i - 1] if i <= len(self.values) else QQ(0)

    def cache_key(self):
        return (self.kind, self.values)


ZEROS = ParamSequence.zeros()
SHIFTED = ParamSequence.shifted()


def generalized_power(i, n, a, k):
    """(x_i|a)^k = (x_i-a_1)...(x_i-a_k) as a polynomial in n variables."""
    if not 1 <= i <= n:
        raise ValueError("variable index out of range")
    x = MultiPoly.variable(n, i)
    out = MultiPoly.one(n)
    for j in range(1, k + 1):
        out = out * (x - MultiPoly.constant(n, a.value(j)))
    return out


def _injections(ell, n):
    return permutations(range(1, n + 1), ell)


def _injection_numerator(lam, n, a, idx):
    """Numerator of one injection summand after clearing to the full
    Vandermonde prod_{p<q}(x_p-x_q); the orientation sign is folded in."""
    ell = len(idx)
    chosen = set(idx)
    rest = [m for m in range(1, n + 1) if m not in chosen]
    sign = 1
    for k in range(ell):
        for kk in range(k + 1, ell):
            if idx[k] > idx[kk]:
                sign = -sign
        for m in rest:
            if idx[k] > m:
                sign = -sign
    num = MultiPoly.constant(n, sign)
    for k in range(ell):
        num = num * generalized_power(idx[k], n, a, lam.part(k + 1))
    for k in range(ell):
        for kk in range(k + 1, ell):
            num = num * (MultiPoly.variable(n, idx[k]) + MultiPoly.variable(n, idx[kk]))
        for m in rest:
            num = num * (MultiPoly.variable(n, idx[k]) + MultiPoly.variable(n, m))
    for ri in range(len(rest)):
        for rj in range(ri + 1, len(rest)):
            p, q = rest[ri], rest[rj]
            num = num * (MultiPoly.variable(n, p) - MultiPoly.variable(n, q))
    return num


def _vandermonde(n):
    v = MultiPoly.one(n)
    for p in range(1, n + 1):
        for q in range(p + 1, n + 1):
            v = v * (MultiPoly.variable(n, p) - MultiPoly.variable(n, q))
    return v


_expansion_cache = {}


def q_lambda_general(lam, n, a):
    """Fully expanded Q_lambda(x_1,...,x_n|a).

    Sums over ordered injections of the lam slots into the n variable
    slots; the symmetrization over unused variables cancels against the
    1/(n-l)! prefactor, so only n!/(n-l)! summands are touched.
    """
    ell = lam.length
    if ell > n:
        raise ValueError("partition longer than variable count")
    key = (lam.parts, n, a.cache_key())
    hit = _expansion_cache.get(key)
    if hit is not None:
        return hit
    if ell == 0:
        out = MultiPoly.one(n)
    else:
        total = MultiPoly.zero(n)
        for idx in _injections(ell, n):
            total = total + _injection_numerator(lam, n, a, idx)
        out = exact_divide(total, _vandermonde(n)).scale(QQ(2) ** ell)
    _expansion_cache[key] = out
    return out


def q_lambda_raw(lam, n, a):
    """Same polynomial from the literal n!-term symmetrization; slow,
    kept as an independent oracle for the injection-sum shortcut."""
    ell = lam.length
    if ell > n:
        raise ValueError("partition longer than variable count")
    if ell == 0:
        return MultiPoly.one(n)
    total = MultiPoly.zero(n)
    for sigma in permutations(range(1, n + 1)):
        total = total + _injection_numerator(lam, n, a, sigma[:ell])
    scale = QQ(2) ** ell / factorial(n - ell)
    return exact_divide(total, _vandermonde(n)).scale(scale)


def schur_q(lam, n):
    """Q_lambda, homogeneous of degree |lambda|."""
    return q_lambda_general(lam, n, ZEROS)


def factorial_schur_q(lam, n):
    """Q*_lambda, whose top homogeneous part is Q_lambda."""
    return q_lambda_general(lam, n, SHIFTED)


def eval_q_general(lam, point, n, a):
    """Exact Q_lambda(point|a).  Distinct coordinates go through the
    pointwise fraction form; repeats fall back to the expansion."""
    if len(point) != n:
        raise ValueError("point must have n coordinates")
    ell = lam.length
    if ell > n:
        raise ValueError("partition longer than variable count")
    point = [QQ(x) for x in point]
    if len(set(point)) < n:
        return q_lambda_general(lam, n, a).evaluate(point)
    if ell == 0:
        return QQ(1)
    total = QQ(0)
    for idx in _injections(ell, n):
        chosen = set(idx)
        rest = [m for m in range(1, n + 1) if m not in chosen]
        term = QQ(1)
        for k in range(ell):
            x = point[idx[k] - 1]
            for j in range(1, lam.part(k + 1) + 1):
                term *= x - a.value(j)
            for kk in range(k + 1, ell):
                y = point[idx[kk] - 1]
                term *= (x + y) / (x - y)
            for m in rest:
                y = point[m - 1]
                term *= (x + y) / (x - y)
        total += term
    return total * QQ(2) ** ell


def eval_qstar(lam, point, n):
    """Exact value of the factorial Schur Q-function at a point."""
    return eval_q_general(lam, point, n, SHIFTED)


def _point(mu, n):
    return [QQ(mu.part(i)) for i in range(1, n + 1)]


def qstar_by_interpolation(lam, n):
    """Rebuild Q*_lambda by interpolation instead of symmetrization.

    Solves eps_mu(f) = 0 for mu != lambda and eps_lambda(f) =
    Q*_lambda(lambda) over the span of the Schur Q-functions of weight
    at most |lambda|; the evaluation matrix is triangular with nonzero
    diagonal, so the system is uniquely solvable.
    """
    if lam.length > n:
        raise ValueError("partition longer than variable count")
    basis = enumerate_strict(n, lam.weight)
    mat = [
        [eval_q_general(nu, _point(mu, n), n, ZEROS) for nu in basis]
        for mu in basis
    ]
    rhs = [
        eval_qstar(lam, _point(mu, n), n) if mu == lam else QQ(0)
        for mu in basis
    ]
    coeffs = linalg.solve(mat, rhs)
    if coeffs is None:
        raise ValueError("interpolation system is singular")
    out = MultiPoly.zero(n)
    for c, nu in zip(coeffs, basis):
        if c:
            out = out + schur_q(nu, n).scale(c)
    return out


def _leading_partition(p):
    e, c = p.leading()
    parts = []
    for k in e:
        if k == 0:
            break
        parts.append(k)
    if sum(parts) != sum(e) or any(
        parts[i] <= parts[i + 1] for i in range(len(parts) - 1)
    ):
        return None, c
    return StrictPartition(tuple(parts)), c


def expand_in_basis(p, basis, n):
    """Coefficients of p in the Q or Qstar basis.

    Peels leading terms in graded-lex order: the basis element indexed
    by nu leads with 2^{l(nu)} x^nu, so each step is forced.  A leading
    monomial that is not a strict partition shape means p is outside the
    span and raises.
    """
    if basis not in ("Q", "Qstar"):
        raise ValueError("basis must be 'Q' or 'Qstar'")
    if p.n != n:
        raise ValueError("variable count mismatch")
    if not is_q_symmetric(p):
        raise ValueError("polynomial is not Q-symmetric")
    build = schur_q if basis == "Q" else factorial_schur_q
    coeffs = {}
    rem = p
    while not rem.is_zero():
        nu, c = _leading_partition(rem)
        if nu is None or nu.length > n:
            raise ValueError("polynomial is not in the span of the basis")
        coeff = c / QQ(2) ** nu.length
        coeffs[nu] = coeffs.get(nu, QQ(0)) + coeff
        rem = rem - build(nu, n).scale(coeff)
    return {nu: c for nu, c in coeffs.items() if c}
