"""Verification report: measured spectra against closed-form predictions."""

from qcap.capelli import capelli_eigenvalue
from qcap.partitions import contains, enumerate_strict, h_lambda, precedes_key
from qcap.polyring import exact_divide
from qcap.qfunctions import eval_qstar, factorial_schur_q, schur_q
from qcap.repsim.components import m_invariant_dimension, measured_eigenvalue
from qcap.repsim.spherical import spherical_restriction
from qcap.scalars import QQ, format_rational


def _principal(lam, n):
    return eval_qstar(lam, [QQ(lam.part(i)) for i in range(1, n + 1)], n)


def _spherical_scalar(lam, n):
    """Measured ratio spherical_restriction / (Q_lambda / Q*_lambda(lambda)),
    or None when it is not a scalar multiple."""
    sp = spherical_restriction(lam, n)
    pred = schur_q(lam, n).scale(QQ(1) / _principal(lam, n))
    try:
        ratio = exact_divide(sp, pred)
    except ArithmeticError:
        return None
    if ratio.degree != 0:
        return None
    return ratio.evaluate([QQ(0)] * n)


def build_report(n, max_degree):
    """Measured-versus-predicted checks for all strict partitions up to
    the given weight.  Spherical checks assert proportionality to the
    Schur Q-function and record the measured scalar; the conventions
    block reports whether that scalar is uniform."""
    lams = enumerate_strict(n, max_degree)
    checks = []
    for lam in lams:
        for mu in lams:
            if mu.weight < lam.weight:
                continue
            expected = capelli_eigenvalue(lam, mu, n)
            measured = measured_eigenvalue(lam, mu, n)
            checks.append({
                "name": "capelli_spectrum",
                "lambda": str(lam),
                "mu": str(mu),
                "expected": format_rational(expected),
                "measured": format_rational(measured),
                "pass": expected == measured,
            })
    for lam in lams:
        for mu in lams:
            if contains(lam, mu):
                continue
            val = eval_qstar(lam, [QQ(mu.part(i)) for i in range(1, n + 1)], n)
            checks.append({
                "name": "vanishing_closed_form",
                "lambda": str(lam),
                "mu": str(mu),
                "expected": "0",
                "measured": format_rational(val),
                "pass": not val,
            })
    for lam in lams:
        dim, parity = m_invariant_dimension(lam, n)
        checks.append({
            "name": "m_invariant",
            "lambda": str(lam),
            "mu": "",
            "expected": "1 even",
            "measured": "%d %s" % (dim, parity),
            "pass": (dim, parity) == (1, "even"),
        })
    scalars = {}
    for lam in lams:
        scalar = _spherical_scalar(lam, n)
        scalars[lam] = scalar
        checks.append({
            "name": "spherical_proportional",
            "lambda": str(lam),
            "mu": "",
            "expected": "scalar multiple of Q_lambda",
            "measured": "none" if scalar is None else format_rational(scalar),
            "pass": scalar is not None,
        })
    hstar = None
    for variant in ("doubled", "as-printed"):
        if all(_principal(lam, n) == h_lambda(lam, variant) for lam in lams):
            hstar = variant
            break
    checks.append({
        "name": "normalization_pin",
        "lambda": "",
        "mu": "",
        "expected": "one uniform h_lambda variant",
        "measured": hstar or "none",
        "pass": hstar is not None,
    })
    checks.sort(key=lambda c: (c["name"], c["lambda"], c["mu"]))
    values = [s for s in scalars.values() if s is not None]
    uniform = len(set(values)) <= 1
    nontrivial = [lam for lam in scalars if lam.weight > 0] or list(scalars)
    base = scalars.get(min(nontrivial, key=precedes_key))
    report = {
        "n": n,
        "max_degree": max_degree,
        "checks": checks,
        "conventions": {
            "spherical_scalar": format_rational(base) if base is not None else "none",
            "spherical_scalar_uniform": uniform,
            "hstar_variant": hstar or "none",
        },
    }
    return report


def report_passed(report):
    return all(c["pass"] for c in report["checks"])
