"""First-order operators realizing the q(n) x q(n) action.

The second factor acts through

    b^{kl} :  sum_p u^{pk} d/du^{pl} + xi^{pk} d/dxi^{pl}
    beta^{kl}: sum_p xi^{pk} d/du^{pl} + u^{pk} d/dxi^{pl}

and the first factor through the analogous operators on the first
superscript,

    a^{kl} :  sum_p u^{lp} d/du^{kp} + xi^{lp} d/dxi^{kp}
    alpha^{kl}: sum_p -xi^{lp} d/du^{kp} + u^{lp} d/dxi^{kp}.

The slot convention for the first factor (acting on the first index,
so that the two factors commute) is validated a posteriori by the
bracket-relation and decomposition tests rather than trusted.
"""

from qcap.repsim.superpoly import SuperPoly, deriv_u, deriv_xi, graded_basis
from qcap.scalars import QQ

WHICH = ("a", "alpha", "b", "beta")


def action_terms(which, k, l, n):
    """List of (sign, mult generator, derivative generator) triples;
    generators are ('u'|'xi', p, q)."""
    out = []
    for p in range(1, n + 1):
        if which == "b":
            out.append((1, ("u", p, k), ("u", p, l)))
            out.append((1, ("xi", p, k), ("xi", p, l)))
        elif which == "beta":
            out.append((1, ("xi", p, k), ("u", p, l)))
            out.append((1, ("u", p, k), ("xi", p, l)))
        elif which == "a":
            out.append((1, ("u", l, p), ("u", k, p)))
            out.append((1, ("xi", l, p), ("xi", k, p)))
        elif which == "alpha":
            out.append((-1, ("xi", l, p), ("u", k, p)))
            out.append((1, ("u", l, p), ("xi", k, p)))
        else:
            raise ValueError("unknown generator family: %r" % (which,))
    return out


def _gen_poly(n, gen):
    kind, p, q = gen
    if kind == "u":
        return SuperPoly.gen_u(n, p, q)
    return SuperPoly.gen_xi(n, p, q)


def apply_action(which, k, l, n, poly):
    """Apply the displayed operator for the given generator to poly."""
    out = SuperPoly.zero(n)
    for sign, mult, deriv in action_terms(which, k, l, n):
        kind, p, q = deriv
        d = deriv_u(poly, p, q) if kind == "u" else deriv_xi(poly, p, q)
        if d.is_zero():
            continue
        term = _gen_poly(n, mult) * d
        out = out + (term if sign == 1 else -term)
    return out


def all_generators(n):
    """The 4n^2 generator labels of both factors."""
    return [
        (which, k, l)
        for which in WHICH
        for k in range(1, n + 1)
        for l in range(1, n + 1)
    ]


class LinearOperator:
    """Exact matrix of a degree-homogeneous operator between graded
    components, with respect to the canonical monomial bases."""

    __slots__ = ("n", "deg_in", "deg_out", "mat")

    def __init__(self, n, deg_in, deg_out, mat):
        self.n = n
        self.deg_in = deg_in
        self.deg_out = deg_out
        self.mat = mat

    @classmethod
    def from_callable(cls, fn, n, deg_in, deg_out=None):
        """Column j is fn(monomial j) in codomain coordinates."""
        if deg_out is None:
            deg_out = deg_in
        dom = graded_basis(n, deg_in)
        cod = graded_basis(n, deg_out)
        index = {m: i for i, m in enumerate(cod)}
        mat = [[QQ(0)] * len(dom) for _ in range(len(cod))]
        for j, mono in enumerate(dom):
            image = fn(SuperPoly(n, {mono: 1}))
            for m, c in image.terms.items():
                mat[index[m]][j] = c
        return cls(n, deg_in, deg_out, mat)

    @classmethod
    def identity(cls, n, d):
        dim = len(graded_basis(n, d))
        mat = [[QQ(1) if i == j else QQ(0) for j in range(dim)]
               for i in range(dim)]
        return cls(n, d, d, mat)

    def apply_coords(self, vec):
        return [
            sum((row[j] * vec[j] for j in range(len(vec)) if vec[j]), QQ(0))
            for row in self.mat
        ]

    def compose(self, other):
        """self after other."""
        if other.deg_out != self.deg_in:
            raise ValueError("degree mismatch in composition")
        cols = list(zip(*other.mat)) if other.mat else []
        mat = [
            [
                sum((r[t] * c[t] for t in range(len(r)) if r[t] and c[t]), QQ(0))
                for c in cols
            ]
            for r in self.mat
        ]
        return LinearOperator(self.n, other.deg_in, self.deg_out, mat)

    def __add__(self, other):
        if (other.deg_in, other.deg_out) != (self.deg_in, self.deg_out):
            raise ValueError("degree mismatch in sum")
        mat = [
            [a + b for a, b in zip(r1, r2)]
            for r1, r2 in zip(self.mat, other.mat)
        ]
        return LinearOperator(self.n, self.deg_in, self.deg_out, mat)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = QQ(c)
        return LinearOperator(
            self.n, self.deg_in, self.deg_out,
            [[c * x for x in row] for row in self.mat],
        )

    def __eq__(self, other):
        return (
            isinstance(other, LinearOperator)
            and (self.n, self.deg_in, self.deg_out)
            == (other.n, other.deg_in, other.deg_out)
            and self.mat == other.mat
        )

    def is_zero(self):
        return all(not x for row in self.mat for x in row)

    def commutator(self, other):
        return self.compose(other) - other.compose(self)

    def anticommutator(self, other):
        return self.compose(other) + other.compose(self)


def action_matrix(which, k, l, n, d):
    """Matrix of the displayed generator operator on the degree-d
    component (degree preserving)."""
    return LinearOperator.from_callable(
        lambda p: apply_action(which, k, l, n, p), n, d
    )
