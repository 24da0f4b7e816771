"""Floquet theory for second-order linear difference equations.

The equation ``a(k) z(k+1) - b(k) z(k) + c(k-1) z(k-1) = 0`` with
quasi-periodic coefficients is reduced to a Chebyshev equation with
parameter ``q``; the parameter is available from a combinatorial closed
form, a non-linear period reduction and a monodromy-matrix oracle.
"""
from .chebyshev import ChebKind, cheb_eval, cheb_from_seeds
from .errors import CapacityError, InvalidInputError
from .floquet import (
    FloquetResult,
    Method,
    RatioPair,
    classify_real,
    has_qp_solutions,
    q_by_recurrence,
    q_closed_form,
    q_recurrence,
    q_scaled,
    qp_ratios,
)
from .monodromy import Monodromy, Trajectory, is_qp_solution, monodromy_matrix, propagate, q_oracle
from .multiindex import BinaryMultiIndex, PartitionClass, bar, cardinality, classify, enumerate_lambda, weight
from .qpseq import EquationCoefficients, NonVanishingQPSequence, QPSequence
from .symmetrize import SymmetrizedPair, branch_gamma, phi_at, ratio_s, symmetrized

__all__ = [
    "bar",
    "BinaryMultiIndex",
    "branch_gamma",
    "CapacityError",
    "cardinality",
    "cheb_eval",
    "cheb_from_seeds",
    "ChebKind",
    "classify",
    "classify_real",
    "enumerate_lambda",
    "EquationCoefficients",
    "FloquetResult",
    "has_qp_solutions",
    "InvalidInputError",
    "is_qp_solution",
    "Method",
    "Monodromy",
    "monodromy_matrix",
    "NonVanishingQPSequence",
    "PartitionClass",
    "phi_at",
    "propagate",
    "q_by_recurrence",
    "q_closed_form",
    "q_oracle",
    "q_recurrence",
    "q_scaled",
    "qp_ratios",
    "QPSequence",
    "ratio_s",
    "RatioPair",
    "symmetrized",
    "SymmetrizedPair",
    "Trajectory",
    "weight",
]

__version__ = "0.1.0"
