import pytest

from qcap.partitions import EMPTY, StrictPartition, enumerate_strict, precedes_key
from qcap.polyring import MultiPoly, is_q_symmetric
from qcap.qfunctions import (
    SHIFTED,
    ZEROS,
    ParamSequence,
    eval_qstar,
    expand_in_basis,
    factorial_schur_q,
    generalized_power,
    q_lambda_general,
    q_lambda_raw,
    qstar_by_interpolation,
    schur_q,
)
from qcap.scalars import QQ


def SP(*parts):
    return StrictPartition(parts)


def x(n, i):
    return MultiPoly.variable(n, i)


def point(mu, n):
    return [QQ(mu.part(i)) for i in range(1, n + 1)]


def test_param_sequences():
    assert ZEROS.value(5) == 0
    assert SHIFTED.value(1) == 0
    assert SHIFTED.value(4) == 3
    custom = ParamSequence.custom([QQ(1, 2), 3])
    assert custom.value(1) == QQ(1, 2)
    assert custom.value(2) == 3
    assert custom.value(7) == 0
    with pytest.raises(ValueError):
        ParamSequence("nope")


def test_generalized_power():
    assert generalized_power(1, 1, SHIFTED, 0) == MultiPoly.one(1)
    assert generalized_power(1, 1, SHIFTED, 2) == x(1, 1) * (x(1, 1) - MultiPoly.one(1))
    assert generalized_power(1, 2, ZEROS, 3) == x(2, 1) ** 3


def test_schur_q_examples():
    assert schur_q(SP(1), 2) == (x(2, 1) + x(2, 2)).scale(2)
    assert schur_q(SP(1), 1) == x(1, 1).scale(2)
    assert schur_q(SP(2), 1) == (x(1, 1) ** 2).scale(2)
    expected = (x(2, 1) * x(2, 2) * (x(2, 1) + x(2, 2))).scale(4)
    assert schur_q(SP(2, 1), 2) == expected
    assert schur_q(EMPTY, 3) == MultiPoly.one(3)


def test_factorial_examples():
    assert factorial_schur_q(SP(1), 1) == x(1, 1).scale(2)
    assert factorial_schur_q(SP(2), 1) == (x(1, 1) ** 2 - x(1, 1)).scale(2)
    assert eval_qstar(SP(2), [1], 1) == 0
    assert eval_qstar(SP(2, 1), [3, 0], 2) == 0
    assert eval_qstar(SP(1), [2, 0], 2) == 4
    assert eval_qstar(SP(2), [2], 1) == 4


def test_length_guard():
    with pytest.raises(ValueError):
        schur_q(SP(2, 1), 1)


def test_injection_sum_matches_raw():
    for n in (1, 2, 3):
        for lam in enumerate_strict(n, 3):
            for a in (ZEROS, SHIFTED):
                assert q_lambda_raw(lam, n, a) == q_lambda_general(lam, n, a)


def test_symmetry_and_degrees():
    for n in (1, 2, 3):
        for lam in enumerate_strict(n, 4):
            q = schur_q(lam, n)
            qs = factorial_schur_q(lam, n)
            assert is_q_symmetric(q)
            assert is_q_symmetric(qs)
            if lam.weight:
                assert q == q.homogeneous_part(lam.weight)
                assert qs.degree <= lam.weight
            assert qs.homogeneous_part(lam.weight) == q


def test_eval_routes_agree():
    lam = SP(3, 1)
    n = 3
    poly = factorial_schur_q(lam, n)
    for pt in ([1, 2, 3], [2, 2, 1], [0, 0, 0], [QQ(1, 2), 5, QQ(1, 2)]):
        assert eval_qstar(lam, pt, n) == poly.evaluate(pt)


def test_stability_in_extra_variable():
    for lam in (SP(2), SP(2, 1), SP(3)):
        big = factorial_schur_q(lam, 3)
        images = [MultiPoly.variable(2, 1), MultiPoly.variable(2, 2),
                  MultiPoly.zero(2)]
        assert big.substitute(images) == factorial_schur_q(lam, 2)


def test_interpolation_route():
    assert qstar_by_interpolation(EMPTY, 2) == MultiPoly.one(2)
    for n in (1, 2, 3):
        for lam in enumerate_strict(n, 4):
            assert qstar_by_interpolation(lam, n) == factorial_schur_q(lam, n)


def test_evaluation_matrix_triangular():
    for n in (1, 2, 3):
        for k in (3, 5):
            lams = enumerate_strict(n, k)
            assert [precedes_key(l) for l in lams] == sorted(
                precedes_key(l) for l in lams
            )
            for i, mu in enumerate(lams):
                for j, nu in enumerate(lams):
                    val = eval_qstar(nu, point(mu, n), n)
                    if j > i:
                        assert val == 0
                    if i == j:
                        assert val != 0


def test_expand_in_basis():
    n = 2
    p = schur_q(SP(2, 1), n)
    assert expand_in_basis(p, "Q", n) == {SP(2, 1): 1}
    got = expand_in_basis(factorial_schur_q(SP(2), 1), "Q", 1)
    assert got == {SP(2): 1, SP(1): -1}
    assert expand_in_basis(MultiPoly.zero(n), "Q", n) == {}
    # Qstar basis inverts the factorial construction
    assert expand_in_basis(factorial_schur_q(SP(3), 2), "Qstar", 2) == {SP(3): 1}
    mix = schur_q(SP(2), 2) + factorial_schur_q(SP(1), 2).scale(QQ(1, 3))
    back = expand_in_basis(mix, "Qstar", 2)
    recon = MultiPoly.zero(2)
    for nu, c in back.items():
        recon = recon + factorial_schur_q(nu, 2).scale(c)
    assert recon == mix


def test_expand_rejects_bad_input():
    n = 2
    with pytest.raises(ValueError):
        expand_in_basis(MultiPoly.variable(n, 1), "Q", n)
    with pytest.raises(ValueError):
        expand_in_basis(schur_q(SP(1), n), "other", n)
