"""Brute-force representation engine for the super-polynomial module.

Builds the graded pieces of the polynomial superalgebra on V = q(n),
realizes the q(n) x q(n) action by first-order operators, decomposes
into simple summands, and measures Capelli spectra and spherical
restrictions with exact arithmetic throughout.
"""

from qcap.repsim.superpoly import SuperPoly, graded_basis, graded_dimension
from qcap.repsim.actions import LinearOperator, action_matrix, apply_action
from qcap.repsim.components import (
    IsotypicComponent,
    SizeGuardError,
    capelli_apply,
    decompose,
    m_invariant_dimension,
    measured_eigenvalue,
)
from qcap.repsim.spherical import spherical_restriction
from qcap.repsim.jordan import jordan_check, jordan_scalar
