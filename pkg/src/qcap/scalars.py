"""Exact rational scalars.

All arithmetic in this package is exact.  Internally we use gmpy2's mpq
when available (much faster than fractions.Fraction for the dense solves
in the representation engine) and fall back to Fraction otherwise.  The
two types compare equal to each other, so callers may mix them freely.
"""

from fractions import Fraction

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    QQ = Fraction

ZERO = QQ(0)
ONE = QQ(1)


def rational(num, den=1):
    return QQ(num, den)


def parse_rational(s):
    """Parse "a/b" or "a" into an exact rational."""
    s = s.strip()
    if "/" in s:
        num, den = s.split("/", 1)
        return QQ(int(num), int(den))
    return QQ(int(s))


def format_rational(x):
    """Render as "a/b", or "a" when the denominator is 1."""
    f = Fraction(x.numerator, x.denominator)
    if f.denominator == 1:
        return str(f.numerator)
    return "%d/%d" % (f.numerator, f.denominator)


def as_fraction(x):
    return Fraction(x.numerator, x.denominator)
