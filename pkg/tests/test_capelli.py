from math import comb, factorial

import pytest

from qcap.capelli import (
    capelli_eigenvalue,
    eigenvalue_poly,
    hc_image_C,
    nazarov_scalar,
    record_from_json_obj,
    record_to_json_obj,
)
from qcap.partitions import EMPTY, StrictPartition, enumerate_strict, n_lambda
from qcap.polyring import MultiPoly, exact_divide
from qcap.qfunctions import eval_qstar, factorial_schur_q, schur_q
from qcap.scalars import QQ


def SP(*parts):
    return StrictPartition(parts)


def x(n, i):
    return MultiPoly.variable(n, i)


def test_eigenvalue_poly_examples():
    assert eigenvalue_poly(EMPTY, 2).q_star == MultiPoly.one(2)
    assert eigenvalue_poly(SP(1), 1).q_star == x(1, 1)
    rec = eigenvalue_poly(SP(2), 1)
    assert rec.q_star == (x(1, 1) ** 2 - x(1, 1)).scale(QQ(1, 2))
    assert rec.normalizer == 4


def test_record_invariants():
    for n in (1, 2):
        for lam in enumerate_strict(n, 4):
            rec = eigenvalue_poly(lam, n)
            pt = [QQ(lam.part(i)) for i in range(1, n + 1)]
            assert rec.q_star.evaluate(pt) == 1
            assert rec.normalizer != 0
            assert rec.q_star == factorial_schur_q(lam, n).scale(
                QQ(1) / rec.normalizer
            )


def test_capelli_eigenvalue_examples():
    for n in (1, 2):
        for lam in enumerate_strict(n, 4):
            assert capelli_eigenvalue(lam, lam, n) == 1
    assert capelli_eigenvalue(SP(1), SP(2), 1) == 2


def test_binomial_closed_form():
    for k in range(1, 9):
        for m in range(0, 9):
            mu = SP(m) if m else EMPTY
            assert capelli_eigenvalue(SP(k), mu, 1) == comb(m, k)


def test_vanishing_below_weight():
    for n in (1, 2):
        lams = enumerate_strict(n, 4)
        for lam in lams:
            for mu in lams:
                if mu.weight <= lam.weight and mu != lam:
                    assert capelli_eigenvalue(lam, mu, n) == 0


def test_scale_invariance():
    # the ratio never depends on the overall normalization of Q*
    lam, mu, n = SP(2, 1), SP(3, 1), 2
    num = eval_qstar(lam, [QQ(mu.part(i)) for i in range(1, n + 1)], n)
    den = eval_qstar(lam, [QQ(lam.part(i)) for i in range(1, n + 1)], n)
    assert capelli_eigenvalue(lam, mu, n) == num / den
    assert (num * 7) / (den * 7) == capelli_eigenvalue(lam, mu, n)


def test_nazarov_scalar():
    assert nazarov_scalar(SP(1)) == QQ(-1, 2)
    assert nazarov_scalar(SP(2)) == QQ(1, 8)
    assert nazarov_scalar(SP(2, 1)) == QQ(-1, 144)
    lam = SP(3, 1)
    expected = n_lambda(lam) ** 2 / (QQ(factorial(4)) ** 2 * 4)
    assert nazarov_scalar(lam) == expected


def test_hc_image_examples():
    assert hc_image_C(SP(1), 1) == x(1, 1).scale(2)
    assert hc_image_C(EMPTY, 2) == MultiPoly.one(2)


def test_hc_image_top_part():
    for n in (1, 2, 3):
        for lam in enumerate_strict(n, 5):
            top = hc_image_C(lam, n).homogeneous_part(lam.weight)
            expected = schur_q(lam, n).scale(
                QQ(factorial(lam.weight)) / n_lambda(lam)
            )
            assert top == expected
            if not expected.is_zero():
                ratio = exact_divide(top, schur_q(lam, n))
                assert ratio.degree == 0


def test_length_guards():
    with pytest.raises(ValueError):
        eigenvalue_poly(SP(2, 1), 1)
    with pytest.raises(ValueError):
        hc_image_C(SP(2, 1), 1)


def test_record_json_roundtrip():
    rec = eigenvalue_poly(SP(2, 1), 2)
    obj = record_to_json_obj(rec)
    assert obj["lambda"] == "2,1"
    assert obj["n"] == 2
    back = record_from_json_obj(obj)
    assert back.lam == rec.lam
    assert back.q_star == rec.q_star
    assert back.normalizer == rec.normalizer
