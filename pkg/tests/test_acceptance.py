"""Acceptance suite: one criterion per test, one printed line per criterion.

Criterion 6 asserts exact equality between the spherical restriction and
Q_lambda / Q*_lambda(lambda).  The brute-force engine consistently measures
an extra factor of (-1)^k k! (k = |lambda|), which varies with the weight,
so neither exact equality nor a single uniform constant holds and the
criterion fails honestly; the measured factors are printed in the detail.
"""

from itertools import product
from math import comb, factorial

from conftest import record_criterion

from qcap.capelli import capelli_eigenvalue, hc_image_C
from qcap.partitions import (
    EMPTY,
    StrictPartition,
    contains,
    count_shifted_tableaux,
    enumerate_strict,
    h_lambda,
    n_lambda,
    precedes_key,
)
from qcap.polyring import MultiPoly, NonDivisibleError, exact_divide
from qcap.qfunctions import (
    eval_qstar,
    factorial_schur_q,
    qstar_by_interpolation,
    schur_q,
)
from qcap.repsim import (
    SuperPoly,
    apply_action,
    graded_basis,
    jordan_check,
    jordan_scalar,
    m_invariant_dimension,
    measured_eigenvalue,
    spherical_restriction,
)
from qcap.repsim.actions import all_generators
from qcap.repsim.components import capelli_apply
from qcap.scalars import QQ


def SP(*parts):
    return StrictPartition(parts)


def point(mu, n):
    return [QQ(mu.part(i)) for i in range(1, n + 1)]


def test_criterion_1_capelli_spectrum():
    bad = []
    for n, wmax in ((1, 6), (2, 4)):
        lams = enumerate_strict(n, wmax)
        for lam in lams:
            for mu in lams:
                if lam.weight > mu.weight:
                    continue
                got = measured_eigenvalue(lam, mu, n)
                want = capelli_eigenvalue(lam, mu, n)
                if got != want:
                    bad.append((n, lam, mu, got, want))
    record_criterion(1, "Capelli spectrum measured = Q*_l(mu)/Q*_l(l)",
                     not bad, "n=1 w<=6, n=2 w<=4")
    assert not bad


def test_criterion_2_vanishing_and_normalization():
    bad = []
    # measured, within the size guard: n<=2 full range, n=3 up to weight 3
    for n, wmax in ((1, 6), (2, 6), (3, 3)):
        lams = enumerate_strict(n, wmax)
        for lam in lams:
            for mu in lams:
                if mu == lam:
                    if measured_eigenvalue(lam, mu, n) != 1:
                        bad.append(("c=1", n, lam, mu))
                elif mu.weight <= lam.weight:
                    if measured_eigenvalue(lam, mu, n) != 0:
                        bad.append(("c=0", n, lam, mu))
    # closed form over the full stated range
    for n in (1, 2, 3):
        lams = enumerate_strict(n, 6)
        for lam in lams:
            for mu in lams:
                if not contains(lam, mu):
                    if eval_qstar(lam, point(mu, n), n) != 0:
                        bad.append(("Q*=0", n, lam, mu))
    record_criterion(2, "vanishing and normalization",
                     not bad, "measured n<=2 w<=6 and n=3 w<=3; closed form n<=3 w<=6")
    assert not bad


def test_criterion_3_top_part():
    bad = []
    for n in (1, 2, 3, 4):
        for lam in enumerate_strict(n, 6):
            top = factorial_schur_q(lam, n).homogeneous_part(lam.weight)
            if top != schur_q(lam, n):
                bad.append((n, lam))
    record_criterion(3, "top part of Q* equals Q", not bad, "w<=6, n<=4")
    assert not bad


def test_criterion_4_interpolation_uniqueness():
    bad = []
    for n in (1, 2, 3):
        for lam in enumerate_strict(n, 5):
            if qstar_by_interpolation(lam, n) != factorial_schur_q(lam, n):
                bad.append(("interp", n, lam))
        lams = enumerate_strict(n, 5)
        assert [precedes_key(l) for l in lams] == sorted(
            precedes_key(l) for l in lams
        )
        for i, mu in enumerate(lams):
            for j, nu in enumerate(lams):
                val = eval_qstar(nu, point(mu, n), n)
                if j > i and val != 0:
                    bad.append(("upper", n, mu, nu))
                if i == j and val == 0:
                    bad.append(("diag", n, mu))
    record_criterion(4, "interpolation uniqueness and triangularity",
                     not bad, "w<=5, n<=3")
    assert not bad


def test_criterion_5_tableau_count():
    bad = [lam for lam in enumerate_strict(9, 9)
           if n_lambda(lam) != count_shifted_tableaux(lam)]
    record_criterion(5, "n_lambda equals shifted tableau count", not bad, "w<=9")
    assert not bad


def test_criterion_6_spherical_polynomial():
    bad = []
    ratios = {}
    for n in (1, 2):
        for lam in enumerate_strict(n, 3):
            if m_invariant_dimension(lam, n) != (1, "even"):
                bad.append(("m-inv", n, lam))
            r = spherical_restriction(lam, n)
            if lam.weight and r != r.homogeneous_part(lam.weight):
                bad.append(("degree", n, lam))
            target = schur_q(lam, n).scale(
                QQ(1) / eval_qstar(lam, point(lam, n), n)
            )
            try:
                ratio = exact_divide(r, target)
            except NonDivisibleError:
                bad.append(("not proportional", n, lam))
                continue
            if ratio.degree != 0:
                bad.append(("not proportional", n, lam))
                continue
            c = ratio.evaluate([0] * n)
            ratios[(n, str(lam) or "()")] = c
            if c != 1:
                bad.append(("not equal", n, lam, c))
    uniform = len(set(ratios.values())) == 1
    ok = not bad or (all(b[0] not in ("m-inv", "degree", "not proportional")
                         for b in bad) and uniform)
    detail = "measured spherical/expected factors: %s; uniform=%s" % (
        {k: str(v) for k, v in sorted(ratios.items())}, uniform)
    record_criterion(6, "spherical restriction equals Q_l/Q*_l(l)", ok, detail)
    assert ok, detail


def test_criterion_7_normalization_pin():
    holds = {"doubled": True, "as-printed": True}
    for lam in enumerate_strict(6, 6):
        n = max(lam.length, 1)
        val = eval_qstar(lam, point(lam, n), n)
        for variant in holds:
            if val != h_lambda(lam, variant):
                holds[variant] = False
    winners = [v for v, ok in holds.items() if ok]
    ok = winners == ["doubled"]
    record_criterion(7, "normalization pin Q*_l(l) = H(l)", ok,
                     "uniform variant: %s" % (winners or "none"))
    assert ok


def test_criterion_8_hc_image():
    bad = []
    for n in (1, 2, 3):
        for lam in enumerate_strict(n, 5):
            top = hc_image_C(lam, n).homogeneous_part(lam.weight)
            want = schur_q(lam, n).scale(
                QQ(factorial(lam.weight)) / n_lambda(lam)
            )
            if top != want:
                bad.append((n, lam))
    record_criterion(8, "HC image top part = (|l|!/n_l) Q_l", not bad,
                     "w<=5, n<=3")
    assert not bad


def _bracket_defect(n, d, f1, f2, expected):
    """Supercommutator of two generators minus the expected combination,
    evaluated on every degree-d monomial; returns the offending monomials."""
    w1, k1, l1 = f1
    w2, k2, l2 = f2
    odd1 = w1 in ("alpha", "beta")
    odd2 = w2 in ("alpha", "beta")
    sign = 1 if (odd1 and odd2) else -1
    bad = []
    for m in graded_basis(n, d):
        p = SuperPoly(n, {m: 1})
        got = (apply_action(w1, k1, l1, n, apply_action(w2, k2, l2, n, p))
               + apply_action(w2, k2, l2, n,
                              apply_action(w1, k1, l1, n, p)).scale(sign))
        want = SuperPoly.zero(n)
        for coeff, (w, k, l) in expected:
            want = want + apply_action(w, k, l, n, p).scale(coeff)
        if got != want:
            bad.append(m)
    return bad


def test_criterion_9_structural_sanity():
    bad = []
    # q(n) x q(n) relations on all generators, n<=2, degrees <=3;
    # the left family carries the opposite structure constants
    for n in (1, 2):
        idx = range(1, n + 1)
        for d in range(4):
            for k, l, p, q in product(idx, repeat=4):
                cases = [
                    (("b", k, l), ("b", p, q),
                     ([(1, ("b", k, q))] if l == p else [])
                     + ([(-1, ("b", p, l))] if q == k else [])),
                    (("beta", k, l), ("beta", p, q),
                     ([(1, ("b", k, q))] if l == p else [])
                     + ([(1, ("b", p, l))] if q == k else [])),
                    (("b", k, l), ("beta", p, q),
                     ([(1, ("beta", k, q))] if l == p else [])
                     + ([(-1, ("beta", p, l))] if q == k else [])),
                    (("a", k, l), ("a", p, q),
                     ([(-1, ("a", k, q))] if l == p else [])
                     + ([(1, ("a", p, l))] if q == k else [])),
                    (("alpha", k, l), ("alpha", p, q),
                     ([(-1, ("a", k, q))] if l == p else [])
                     + ([(-1, ("a", p, l))] if q == k else [])),
                    (("a", k, l), ("alpha", p, q),
                     ([(-1, ("alpha", k, q))] if l == p else [])
                     + ([(1, ("alpha", p, l))] if q == k else [])),
                ]
                for wl in ("a", "alpha"):
                    for wr in ("b", "beta"):
                        cases.append(((wl, k, l), (wr, p, q), []))
                for f1, f2, expected in cases:
                    if _bracket_defect(n, d, f1, f2, expected):
                        bad.append(("bracket", n, d, f1, f2))
    # D_lambda commutes with the action
    for n, d in ((1, 3), (2, 3)):
        for lam in enumerate_strict(n, 3):
            if not lam.weight:
                continue
            for which, k, l in all_generators(n):
                for m in graded_basis(n, d):
                    f = SuperPoly(n, {m: 1})
                    lhs = capelli_apply(lam, n, apply_action(which, k, l, n, f))
                    rhs = apply_action(which, k, l, n, capelli_apply(lam, n, f))
                    if lhs != rhs:
                        bad.append(("commute", n, lam, which, k, l))
    # Jordan multiplication intertwines with one global constant
    n = 2
    I = [[1, 0], [0, 1]]
    Z = [[0, 0], [0, 0]]
    E12 = [[0, 1], [0, 0]]
    E21 = [[0, 0], [1, 0]]
    pairs = [((I, Z), (I, Z)), ((E12, Z), (E21, Z)), ((Z, E12), (Z, E21)),
             ((Z, E12), (Z, E12)), ((E12, Z), (Z, E21)),
             (([[2, 0], [0, 3]], Z), (Z, I))]
    for x, y in pairs:
        if not jordan_check(x, y, n):
            bad.append(("jordan", x, y))
    # n=1 closed form
    for k in range(1, 9):
        for m in range(9):
            mu = SP(m) if m else EMPTY
            if capelli_eigenvalue(SP(k), mu, 1) != comb(m, k):
                bad.append(("binom", k, m))
    record_criterion(9, "structural sanity", not bad,
                     "relations, commutation, jordan scalar %s, binomials"
                     % jordan_scalar())
    assert not bad
