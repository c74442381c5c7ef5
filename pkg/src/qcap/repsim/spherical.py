"""Spherical restrictions measured from the Capelli operator.

The restriction of the invariant functional to the even slice is read
off pointwise as (-1)^k (D_lambda(mu~^k))(e), where mu~ = sum_i mu_i
u^{ii} and e is the base point (u^{pq} -> delta_{pq}, xi -> 0); the
polynomial is then interpolated from an overdetermined grid, so any
inconsistency between sample points is detected by the exact solve.
"""

from itertools import product
from math import factorial

from qcap import linalg
from qcap.polyring import MultiPoly
from qcap.repsim.components import get_component
from qcap.repsim.superpoly import gen_index, graded_basis
from qcap.scalars import QQ


def _compositions(k, n):
    if n == 1:
        yield (k,)
        return
    for first in range(k, -1, -1):
        for rest in _compositions(k - first, n - 1):
            yield (first,) + rest


def _diag_mono(n, c):
    E = [0] * (n * n)
    for i, e in enumerate(c, start=1):
        E[gen_index(n, i, i)] = e
    return tuple(E), 0


def spherical_value(lam, n, point):
    """(-1)^k (D_lambda(mu~^k))(e) at the rational point mu."""
    k = lam.weight
    comp = get_component(lam, n)
    monos = graded_basis(n, k)
    index = {m: i for i, m in enumerate(monos)}
    pje = [
        sum(
            (c for i, c in vec.items()
             if _is_e_supported(monos[i], n)),
            QQ(0),
        )
        for vec in comp.basis
    ]
    total = QQ(0)
    point = [QQ(x) for x in point]
    for c in _compositions(k, n):
        idx = index[_diag_mono(n, c)]
        w = sum((p * phi[idx] for p, phi in zip(pje, comp.duals)
                 if p and idx in phi), QQ(0))
        if not w:
            continue
        coef = QQ(factorial(k))
        for e in c:
            coef /= factorial(e)
        for x, e in zip(point, c):
            if e:
                coef *= x**e
        total += coef * w
    return -total if k % 2 else total


def _is_e_supported(mono, n):
    E, O = mono
    if O:
        return False
    for p in range(1, n + 1):
        for q in range(1, n + 1):
            if p != q and E[gen_index(n, p, q)]:
                return False
    return True


def spherical_restriction(lam, n):
    """Interpolated restriction polynomial, homogeneous of degree
    |lambda| by the ansatz; the grid is larger than needed and any
    disagreement makes the linear system inconsistent."""
    k = lam.weight
    if lam.length > n:
        raise ValueError("partition longer than variable count")
    if k == 0:
        return MultiPoly.one(n)
    exps = list(_compositions(k, n))
    points = [tuple(QQ(v) for v in pt)
              for pt in product(range(1, k + 2), repeat=n)]
    mat = []
    rhs = []
    for pt in points:
        row = []
        for c in exps:
            v = QQ(1)
            for x, e in zip(pt, c):
                if e:
                    v *= x**e
            row.append(v)
        mat.append(row)
        rhs.append(spherical_value(lam, n, pt))
    coeffs = linalg.solve(mat, rhs)
    if coeffs is None:
        raise ValueError("inconsistent spherical interpolation")
    return MultiPoly(n, {c: v for c, v in zip(exps, coeffs) if v})
