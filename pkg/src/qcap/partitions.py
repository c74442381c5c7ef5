"""Strict partitions: arithmetic, orders, enumeration, shifted tableaux.

A strict partition is a strictly decreasing sequence of positive
integers.  They index everything downstream: Q-functions, simple
summands of the super-polynomial module, Capelli operators.
"""

from functools import lru_cache
from math import factorial

from qcap.scalars import QQ


class StrictPartition:
    """Immutable strict partition; the empty partition is allowed."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p <= 0:
                raise ValueError("parts must be positive: %r" % (parts,))
            if i and parts[i - 1] <= p:
                raise ValueError("parts must strictly decrease: %r" % (parts,))
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, *a):
        raise AttributeError("StrictPartition is immutable")

    @property
    def weight(self):
        return sum(self.parts)

    @property
    def length(self):
        return len(self.parts)

    def part(self, i):
        """Zero-padded part access, 1-based."""
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def __eq__(self, other):
        return isinstance(other, StrictPartition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __repr__(self):
        return "StrictPartition(%r)" % (self.parts,)

    def __str__(self):
        return ",".join(str(p) for p in self.parts)

    @classmethod
    def parse(cls, text):
        """Parse "3,1" (empty string is the empty partition)."""
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(int(t) for t in text.split(",")))


EMPTY = StrictPartition(())


def delta(lam):
    """0 if the length is even, 1 if odd."""
    return lam.length % 2


def contains(mu, nu):
    """True iff mu_j <= nu_j for every j (zero-padded)."""
    if mu.length > nu.length:
        return False
    return all(mu.parts[j] <= nu.parts[j] for j in range(mu.length))


def precedes_key(lam):
    """Sort key realizing the total order used for triangular systems."""
    return (lam.weight, lam.parts)


def precedes(mu, nu):
    """Strict total order: by weight, then lexicographically on parts.

    Refines containment: mu strictly contained in nu implies mu precedes
    nu, and equal-weight distinct partitions never contain one another.
    """
    return precedes_key(mu) < precedes_key(nu)


def enumerate_strict(n, k):
    """All strict partitions with length <= n and weight <= k, sorted by
    `precedes`.  Includes the empty partition."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 0:
        raise ValueError("k must be >= 0")
    out = []

    def rec(prefix, largest_allowed, budget):
        out.append(StrictPartition(tuple(prefix)))
        if len(prefix) == n:
            return
        for p in range(min(largest_allowed, budget), 0, -1):
            prefix.append(p)
            rec(prefix, p - 1, budget - p)
            prefix.pop()

    rec([], k, k)
    out.sort(key=precedes_key)
    return out


@lru_cache(maxsize=None)
def _tableaux_count(parts):
    """Count standard fillings of the shifted diagram by removing the
    cell that holds the largest entry (always a removable corner)."""
    if not parts:
        return 1
    total = 0
    ell = len(parts)
    for i in range(ell):
        below = parts[i + 1] if i + 1 < ell else 0
        if parts[i] - 1 > below:
            smaller = parts[:i] + (parts[i] - 1,) + parts[i + 1 :]
            total += _tableaux_count(smaller)
        elif parts[i] == 1 and i == ell - 1:
            total += _tableaux_count(parts[:i])
    return total


def count_shifted_tableaux(lam):
    """Number of standard shifted tableaux of shape lam (row i occupies
    columns i..i+lam_i-1; entries increase along rows and down columns)."""
    return _tableaux_count(lam.parts)


def n_lambda(lam):
    """Closed form for the shifted tableau count:
    |lam|! / (lam_1! ... lam_l!) * prod_{i<j} (lam_i-lam_j)/(lam_i+lam_j).
    """
    p = lam.parts
    val = QQ(factorial(lam.weight))
    for part in p:
        val /= factorial(part)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            val *= QQ(p[i] - p[j], p[i] + p[j])
    return val


def h_lambda(lam, variant="doubled"):
    """Product formula for the principal special value of the factorial
    Q-function: lam! * prod_{i<j} (lam_i+lam_j)/(lam_i-lam_j).

    variant "as-printed" is the bare product; "doubled" multiplies by
    2^length and is the one matching direct evaluation of the
    symmetrized definition (pinned by the acceptance suite).
    """
    if variant not in ("as-printed", "doubled"):
        raise ValueError("variant must be 'as-printed' or 'doubled'")
    p = lam.parts
    val = QQ(1)
    for part in p:
        val *= factorial(part)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            val *= QQ(p[i] + p[j], p[i] - p[j])
    if variant == "doubled":
        val *= QQ(2) ** len(p)
    return val
