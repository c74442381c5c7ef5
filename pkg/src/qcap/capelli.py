"""Closed-form spectral data for the Capelli operators D_lambda.

Everything here is a rational consequence of the factorial Schur
Q-function: the normalized eigenvalue polynomial q*_lambda, the
eigenvalues c_lambda(mu), the scalar tying C_lambda to Nazarov's
central elements, and the Harish-Chandra image of C_lambda.
"""

import json
from dataclasses import dataclass
from math import factorial

from qcap.partitions import StrictPartition, n_lambda
from qcap.polyring import MultiPoly
from qcap.qfunctions import eval_qstar, factorial_schur_q
from qcap.scalars import QQ, format_rational, parse_rational


@dataclass(frozen=True)
class SpectralRecord:
    lam: StrictPartition
    n: int
    q_star: MultiPoly
    normalizer: object  # Q*_lambda(lambda), nonzero


def _principal_value(lam, n):
    point = [QQ(lam.part(i)) for i in range(1, n + 1)]
    return eval_qstar(lam, point, n)


def eigenvalue_poly(lam, n):
    """q*_lambda = Q*_lambda / Q*_lambda(lambda).

    The normalizer is the directly evaluated special value, which makes
    the ratio independent of any overall scaling convention.
    """
    if lam.length > n:
        raise ValueError("partition longer than variable count")
    norm = _principal_value(lam, n)
    if not norm:
        raise ValueError("vanishing normalizer: %s" % lam)
    poly = factorial_schur_q(lam, n).scale(QQ(1) / norm)
    return SpectralRecord(lam=lam, n=n, q_star=poly, normalizer=norm)


def capelli_eigenvalue(lam, mu, n):
    """c_lambda(mu) = Q*_lambda(mu) / Q*_lambda(lambda), the eigenvalue
    of D_lambda on the summand indexed by mu."""
    if lam.length > n or mu.length > n:
        raise ValueError("partition longer than variable count")
    point = [QQ(mu.part(i)) for i in range(1, n + 1)]
    return eval_qstar(lam, point, n) / _principal_value(lam, n)


def nazarov_scalar(lam):
    """(-1)^{|lambda|} n_lambda^2 / ((|lambda|!)^2 2^{l(lambda)})."""
    k = lam.weight
    nl = n_lambda(lam)
    sign = -1 if k % 2 else 1
    return sign * nl * nl / (QQ(factorial(k)) ** 2 * QQ(2) ** lam.length)


def hc_image_C(lam, n):
    """Harish-Chandra image of C_lambda:
    ((-1)^{|lambda|} |lambda|! / n_lambda) * Q*_lambda(-x1,...,-xn)."""
    if lam.length > n:
        raise ValueError("partition longer than variable count")
    k = lam.weight
    scale = QQ(factorial(k)) / n_lambda(lam)
    if k % 2:
        scale = -scale
    return factorial_schur_q(lam, n).negate_vars().scale(scale)


def record_to_json_obj(rec):
    return {
        "lambda": str(rec.lam),
        "n": rec.n,
        "normalizer": format_rational(rec.normalizer),
        "poly": rec.q_star.to_json_obj(),
    }


def record_from_json_obj(obj):
    return SpectralRecord(
        lam=StrictPartition.parse(obj["lambda"]),
        n=int(obj["n"]),
        q_star=MultiPoly.from_json_obj(obj["poly"]),
        normalizer=parse_rational(obj["normalizer"]),
    )


def record_to_json(rec):
    return json.dumps(record_to_json_obj(rec))
