"""Decomposition of the graded pieces into simple summands V_lambda,
dual bases in constant-coefficient operators, and measured spectra.

Vectors over a graded component are sparse maps from monomial index to
rational coefficient.  Every basis vector is homogeneous for the triple
(right weight, left weight, parity), which keeps the dual-basis solve
block diagonal.
"""

import os
from dataclasses import dataclass, field

from qcap import linalg
from qcap.partitions import StrictPartition, enumerate_strict
from qcap.repsim.actions import all_generators, apply_action
from qcap.repsim.superpoly import (
    SuperPoly,
    apply_diff_mono,
    diff_mono_self_pairing,
    graded_basis,
    graded_dimension,
    mono_parity,
)
from qcap.scalars import QQ

DEFAULT_SIZE_GUARD = 20000


class SizeGuardError(ValueError):
    """Graded component too large for the dense exact solves."""


def _check_guard(n, k):
    limit = int(os.environ.get("QCAP_SIZE_GUARD", DEFAULT_SIZE_GUARD))
    dim = graded_dimension(n, k)
    if dim > limit:
        raise SizeGuardError(
            "dim P^%d(V) = %d exceeds the size guard %d "
            "(set QCAP_SIZE_GUARD to override)" % (k, dim, limit)
        )


def _mono_weights(mono, n):
    """(right weight, left weight): counts of second and first indices."""
    E, O = mono
    rw = [0] * n
    lw = [0] * n
    for t, e in enumerate(E):
        if e:
            rw[t % n] += e
            lw[t // n] += e
    t = 0
    Ob = O
    while Ob:
        j = (Ob & -Ob).bit_length() - 1
        rw[j % n] += 1
        lw[j // n] += 1
        Ob &= Ob - 1
    return tuple(rw), tuple(lw)


def _block_key(mono, n):
    rw, lw = _mono_weights(mono, n)
    return rw, lw, mono_parity(mono)


@dataclass
class IsotypicComponent:
    lam: StrictPartition
    n: int
    k: int
    basis: list = field(default_factory=list)  # sparse coordinate vectors
    duals: list = field(default_factory=list)  # covectors, same length

    @property
    def dimension(self):
        return len(self.basis)

    def basis_polys(self):
        monos = graded_basis(self.n, self.k)
        return [
            SuperPoly(self.n, {monos[i]: c for i, c in vec.items()})
            for vec in self.basis
        ]


def _reduce(vec, pivots):
    """Reduce against the echelon set; returns (residual, pivot) or
    (None, None) if the vector lies in the span."""
    vec = dict(vec)
    while vec:
        piv = min(vec)
        if piv not in pivots:
            return vec, piv
        pv = pivots[piv]
        c = vec[piv] / pv[piv]
        for j, x in pv.items():
            s = vec.get(j, QQ(0)) - c * x
            if s:
                vec[j] = s
            else:
                vec.pop(j, None)
    return None, None


def _raising_generators(n):
    gens = []
    for k in range(1, n + 1):
        for l in range(k + 1, n + 1):
            # the left family realizes the opposite structure constants,
            # so its raising operators sit below the diagonal
            gens.extend(
                [("b", k, l), ("beta", k, l), ("a", l, k), ("alpha", l, k)]
            )
    return gens


def _highest_weight_vectors(lam, n, k):
    """Joint kernel of the raising operators inside the right-weight
    lambda subspace, computed per (left weight, parity) block so the
    resulting vectors are homogeneous."""
    monos = graded_basis(n, k)
    index = {m: i for i, m in enumerate(monos)}
    target = tuple(lam.part(i) for i in range(1, n + 1))
    blocks = {}
    for i, m in enumerate(monos):
        rw, lw = _mono_weights(m, n)
        if rw == target:
            blocks.setdefault((lw, mono_parity(m)), []).append(i)
    gens = _raising_generators(n)
    out = []
    for sub in blocks.values():
        rows = {}
        for j, i in enumerate(sub):
            mono_poly = SuperPoly(n, {monos[i]: 1})
            for g, (which, gk, gl) in enumerate(gens):
                img = apply_action(which, gk, gl, n, mono_poly)
                for m, c in img.terms.items():
                    rows.setdefault((g, index[m]), [QQ(0)] * len(sub))[j] = c
        mat = list(rows.values())
        if not mat:
            kernel = [[QQ(1) if t == j else QQ(0) for t in range(len(sub))]
                      for j in range(len(sub))]
        else:
            kernel = linalg.nullspace(mat)
        for v in kernel:
            out.append({sub[t]: QQ(v[t]) for t in range(len(sub)) if v[t]})
    return out


def _close_under_action(n, k, seeds):
    """Span closure of the seed vectors under all 4n^2 generators,
    maintained as an echelon set keyed by pivot monomial index."""
    monos = graded_basis(n, k)
    index = {m: i for i, m in enumerate(monos)}
    gens = all_generators(n)
    pivots = {}
    queue = []

    def insert(vec):
        red, piv = _reduce(vec, pivots)
        if red is None:
            return
        pivots[piv] = red
        queue.append(red)

    for s in seeds:
        insert(s)
    while queue:
        v = queue.pop()
        sp = SuperPoly(n, {monos[i]: c for i, c in v.items()})
        for which, gk, gl in gens:
            img = apply_action(which, gk, gl, n, sp)
            if not img.is_zero():
                insert({index[m]: c for m, c in img.terms.items()})
    return list(pivots.values())


def _attach_duals(n, k, comps):
    """Solve for the covectors D_j with D_j p_i = delta_{ij} across all
    components at once; the solve is exact and block diagonal in
    (right weight, left weight, parity)."""
    monos = graded_basis(n, k)
    blocks = {}
    for ci, comp in enumerate(comps):
        for vi, vec in enumerate(comp.basis):
            key = _block_key(monos[min(vec)], n)
            blocks.setdefault(key, []).append((ci, vi, vec))
    for key, entries in blocks.items():
        cols = sorted({i for _, _, vec in entries for i in vec})
        if len(cols) != len(entries):
            raise ValueError("pairing block is not square: convention bug")
        mat = [[vec.get(i, QQ(0)) for i in cols] for _, _, vec in entries]
        inv = linalg.inv(mat)
        for r, (ci, vi, _) in enumerate(entries):
            phi = {cols[t]: inv[t][r] for t in range(len(cols)) if inv[t][r]}
            comps[ci].duals[vi] = phi


_decomp_cache = {}


def decompose(n, k):
    """All isotypic components of the degree-k piece, one per strict
    partition of k with at most n parts, with dual bases attached."""
    key = (n, k)
    hit = _decomp_cache.get(key)
    if hit is not None:
        return hit
    _check_guard(n, k)
    lams = [lam for lam in enumerate_strict(n, k) if lam.weight == k]
    comps = []
    total = 0
    for lam in lams:
        seeds = _highest_weight_vectors(lam, n, k)
        if not seeds:
            raise ValueError("no highest weight vector for %s" % lam)
        basis = _close_under_action(n, k, seeds)
        comp = IsotypicComponent(lam=lam, n=n, k=k, basis=basis,
                                 duals=[None] * len(basis))
        total += len(basis)
        comps.append(comp)
    if total != graded_dimension(n, k):
        raise ValueError(
            "component dimensions sum to %d, expected %d"
            % (total, graded_dimension(n, k))
        )
    _attach_duals(n, k, comps)
    _decomp_cache[key] = comps
    return comps


def get_component(lam, n):
    for comp in decompose(n, lam.weight):
        if comp.lam == lam:
            return comp
    raise ValueError("no component for %s" % lam)


def capelli_apply(lam, n, f):
    """Apply D_lambda = sum_j p_j D_j to a SuperPoly f (homogeneous of
    degree >= |lambda|); D_j is the constant-coefficient operator
    normalized against the diagonal monomial pairing."""
    k = lam.weight
    comp = get_component(lam, n)
    monos = graded_basis(n, k)
    out = SuperPoly.zero(n)
    for pvec, phi in zip(comp.basis, comp.duals):
        dj = {}
        for i, w in phi.items():
            dmono = monos[i]
            scale = w / diff_mono_self_pairing(dmono)
            for m, cf in f.terms.items():
                hit = apply_diff_mono(dmono, m)
                if hit is None:
                    continue
                mm, cc = hit
                s = dj.get(mm, 0) + scale * cc * cf
                if s:
                    dj[mm] = s
                else:
                    del dj[mm]
        if not dj:
            continue
        pj = SuperPoly(n, {monos[i]: c for i, c in pvec.items()})
        out = out + pj * SuperPoly(n, dj)
    return out


def capelli_operator(lam, n, m):
    """Matrix of D_lambda on the degree-m component."""
    from qcap.repsim.actions import LinearOperator

    if lam.weight > m:
        raise ValueError("target degree below |lambda|")
    decompose(n, lam.weight)
    return LinearOperator.from_callable(
        lambda p: capelli_apply(lam, n, p), n, m
    )


def measured_eigenvalue(lam, mu, n):
    """The scalar by which D_lambda acts on the mu-component; raises if
    the measured action is not scalar."""
    comp = get_component(mu, n)
    monos = graded_basis(n, mu.weight)
    scalar = None
    for vec in comp.basis:
        f = SuperPoly(n, {monos[i]: c for i, c in vec.items()})
        g = capelli_apply(lam, n, f)
        if g.is_zero():
            r = QQ(0)
        else:
            piv = min(vec)
            r = g.terms.get(monos[piv], QQ(0)) / vec[piv]
            if g != f.scale(r):
                raise ValueError(
                    "D_%s does not act as a scalar on V_%s" % (lam, mu)
                )
        if scalar is None:
            scalar = r
        elif scalar != r:
            raise ValueError(
                "D_%s acts by different scalars on V_%s" % (lam, mu)
            )
    return scalar


def m_invariant_dimension(lam, n):
    """Dimension and parity of the m-invariant functionals inside the
    dual of V_lambda, for the diagonal copy of q(n).

    A functional psi in span{D_j} is invariant iff psi(x . p) = 0 for
    every diagonal generator x and every p of degree k; the parity
    prefactors of the dual action do not change that kernel.
    """
    comp = get_component(lam, n)
    k = lam.weight
    monos = graded_basis(n, k)
    index = {m: i for i, m in enumerate(monos)}
    # the left display carries the opposite structure constants, so the
    # diagonal copy of q(n) is realized by b - a and beta - alpha
    gens = []
    for gk in range(1, n + 1):
        for gl in range(1, n + 1):
            gens.append((("a", gk, gl), ("b", gk, gl)))
            gens.append((("alpha", gk, gl), ("beta", gk, gl)))
    rows = []
    for g1, g2 in gens:
        for i, mono in enumerate(monos):
            mono_poly = SuperPoly(n, {mono: 1})
            img = apply_action(*g2, n, mono_poly) - apply_action(*g1, n, mono_poly)
            if img.is_zero():
                continue
            coords = {index[m]: c for m, c in img.terms.items()}
            row = [
                sum((phi[t] * coords[t] for t in phi.keys() & coords.keys()),
                    QQ(0))
                for phi in comp.duals
            ]
            if any(row):
                rows.append(row)
    if rows:
        kernel = linalg.nullspace(rows)
    else:
        dim = len(comp.duals)
        kernel = [[QQ(1) if t == j else QQ(0) for t in range(dim)]
                  for j in range(dim)]
    parities = set()
    for v in kernel:
        support = {}
        for j, c in enumerate(v):
            if c:
                for i, w in comp.duals[j].items():
                    s = support.get(i, QQ(0)) + c * w
                    if s:
                        support[i] = s
                    else:
                        support.pop(i, None)
        parities |= {mono_parity(monos[i]) for i in support}
    if not kernel:
        parity = "none"
    elif parities == {0}:
        parity = "even"
    elif parities == {1}:
        parity = "odd"
    else:
        parity = "mixed"
    return len(kernel), parity
