"""Floquet parameter of ``a(k) z(k+1) - b(k) z(k) + c(k-1) z(k-1) = 0``.

For coefficients with period ``p`` and ratio ``r`` every period section
``k -> z(kp + m)`` of a solution is ``gamma**k`` times a solution of the
Chebyshev equation ``v(k+1) - 2 q v(k) + v(k-1) = 0``.  This module computes
``q`` from the combinatorial closed form and from the non-linear period
reduction, and answers which quasi-periodic ratios admit solutions.

``gamma`` always comes from :func:`qpfloquet.symmetrize.branch_gamma`;
changing its sign changes the sign of ``q``.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from . import chebyshev
from .errors import CapacityError, InvalidInputError
from .multiindex import bar, enumerate_lambda
from .qpseq import EquationCoefficients, QPSequence
from .symmetrize import branch_gamma, symmetrized

CLOSED_FORM_MAX_PERIOD = 16
DEFAULT_TOL = 1e-9
# branch selection in the reduction treats |b| below this (relative to the
# coefficient scale) as an exact zero
PIVOT_ZERO = 1e-12


class Method(enum.Enum):
    CLOSED_FORM = "closed"
    RECURRENCE = "recurrence"
    MONODROMY_ORACLE = "oracle"


@dataclass(frozen=True)
class FloquetResult:
    q: complex
    gamma: complex
    method: Method


@dataclass(frozen=True)
class RatioPair:
    """The two ratios ``r_hat`` for which quasi-periodic solutions exist."""

    roots: tuple[complex, complex]

    def __iter__(self):
        return iter(self.roots)


def _csum(terms) -> complex:
    terms = list(terms)
    return complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))


def floquet_sum(coeffs: EquationCoefficients, max_period: int = CLOSED_FORM_MAX_PERIOD) -> complex:
    """``S = sum_j (-1)^j sum_{alpha in Lambda(p, j)} r^{-alpha[p-1]} a^alpha b^bar(alpha) c^alpha``."""
    p = coeffs.period
    if p > max_period:
        raise CapacityError(f"closed form limited to period <= {max_period}, got {p}")
    a, b, c = coeffs.a.base, coeffs.b.base, coeffs.c.base
    inv_r = 1 / coeffs.ratio
    terms = []
    for j in range(p // 2 + 1):
        sign = -1 if j % 2 else 1
        for alpha in enumerate_lambda(p, j):
            t = complex(sign)
            for i in alpha.support:
                t *= a[i] * c[i]
            for i in bar(alpha).support:
                t *= b[i]
            if alpha[p - 1]:
                t *= inv_r
            terms.append(t)
    return _csum(terms)


def q_closed_form(
    coeffs: EquationCoefficients,
    gamma: Optional[complex] = None,
    max_period: int = CLOSED_FORM_MAX_PERIOD,
) -> FloquetResult:
    """Floquet parameter from the combinatorial sum over ``Lambda(p, j)``.

    The prefactor ``(1/2) sqrt(r / (a^pi c^pi))`` is taken as
    ``1 / (2 a^pi gamma)`` so that the branch matches the other methods.

    Raises
    ------
    CapacityError
        If the period exceeds ``max_period`` (default 16).
    """
    if gamma is None:
        gamma = branch_gamma(coeffs)
    s = floquet_sum(coeffs, max_period)
    q = s / (2 * coeffs.a.product() * gamma)
    return FloquetResult(q, complex(gamma), Method.CLOSED_FORM)


# -- non-linear period reduction ----------------------------------------------

def _q1(a: Sequence[complex], b: Sequence[complex]) -> complex:
    return b[0] / (2 * a[0])


def _q2(a: Sequence[complex], b: Sequence[complex]) -> complex:
    return (b[0] * b[1] - a[0] ** 2 - a[1] ** 2) / (2 * a[0] * a[1])


def _hat(a, b):
    # eliminate the last node; period n -> n-1, pivot b[n-1]
    n = len(a) - 1
    piv = b[n]
    ah = list(a[:n])
    ah[n - 1] = a[n - 1] * a[n] / piv
    bh = list(b[:n])
    bh[n - 1] = (b[n - 1] * piv - a[n - 1] ** 2) / piv
    bh[0] = (b[0] * piv - a[n] ** 2) / piv
    return ah, bh, piv


def _check(a, b):
    # eliminate node 0; period n -> n-1, pivot b[0]
    n = len(a) - 1
    piv = b[0]
    ac = list(a[1 : n + 1])
    ac[n - 1] = a[0] * a[n] / piv
    bc = list(b[1 : n + 1])
    bc[n - 1] = (piv * b[n] - a[n] ** 2) / piv
    bc[0] = (piv * b[1] - a[0] ** 2) / piv
    return ac, bc, piv


def _tilde(a, b):
    # b[0] = b[n] = 0: drop nodes 0 and n; period n+1 -> n-1
    n = len(a) - 1
    at = list(a[1:n])
    at[n - 2] = -a[0] * a[n - 1] / a[n]
    bt = list(b[1:n])
    return at, bt


def _reduce(a: Sequence[complex], b: Sequence[complex]) -> tuple[complex, list[complex]]:
    a = [complex(v) for v in a]
    b = [complex(v) for v in b]
    pivots: list[complex] = []
    while len(a) > 2:
        scale = max(max(abs(v) for v in a), max(abs(v) for v in b))
        zero = PIVOT_ZERO * scale
        if abs(b[-1]) > zero:
            a, b, piv = _hat(a, b)
            pivots.append(piv)
        elif abs(b[0]) > zero:
            a, b, piv = _check(a, b)
            pivots.append(piv)
        else:
            a, b = _tilde(a, b)
    q = _q1(a, b) if len(a) == 1 else _q2(a, b)
    return q, pivots


def _periodic_values(z, name: str) -> list[complex]:
    if isinstance(z, QPSequence):
        if z.ratio != 1:
            raise InvalidInputError(f"{name} must be periodic (ratio 1)")
        return list(z.base)
    return [complex(v) for v in z]


def q_recurrence(a, b) -> complex:
    """``Q_p(a; b)`` for symmetric periodic coefficients by repeated elimination.

    Each step removes one node of the cyclic chain: the last one when
    ``b[-1] != 0``, otherwise the first one when ``b[0] != 0``; if both vanish
    the two end nodes are dropped together.  Periods 1 and 2 are closed.

    Parameters
    ----------
    a, b : QPSequence or sequence of complex
        One period of the periodic coefficients, ``a`` nowhere zero.
    """
    return q_recurrence_with_pivots(a, b)[0]


def q_recurrence_with_pivots(a, b) -> tuple[complex, list[complex]]:
    """Like :func:`q_recurrence`, also returning the divisors used on the way."""
    av = _periodic_values(a, "a")
    bv = _periodic_values(b, "b")
    if len(av) != len(bv) or not av:
        raise InvalidInputError("a and b must have the same positive period")
    if any(v == 0 for v in av):
        raise InvalidInputError("a must not vanish")
    return _reduce(av, bv)


def q_by_recurrence(coeffs: EquationCoefficients, gamma: Optional[complex] = None) -> FloquetResult:
    """Route general coefficients through the symmetric periodic pair, then reduce."""
    pair = symmetrized(coeffs, gamma)
    return FloquetResult(q_recurrence(pair.a_phi, pair.b_phi), pair.gamma, Method.RECURRENCE)


def q_scaled(coeffs: EquationCoefficients, n: int) -> complex:
    """Parameter of the same equation viewed with period ``n p``: ``T_n(q)``."""
    if n < 1:
        raise InvalidInputError("n must be a positive integer")
    return chebyshev.T(n, q_closed_form(coeffs).q)


# -- existence of quasi-periodic solutions --------------------------------------

def _period_sum(coeffs: EquationCoefficients) -> complex:
    # closed form where enumeration is affordable, monodromy trace beyond it
    if coeffs.period <= CLOSED_FORM_MAX_PERIOD:
        return floquet_sum(coeffs)
    from .monodromy import monodromy_matrix

    return coeffs.a.product() * monodromy_matrix(coeffs).trace


def qp_ratios(coeffs: EquationCoefficients) -> RatioPair:
    """Roots of ``a^pi x**2 - S x + c^pi / r = 0``.

    Quasi-periodic solutions with period ``p`` and ratio ``x`` exist exactly
    for these two values.
    """
    A = coeffs.a.product()
    C = coeffs.c.product() / coeffs.ratio
    S = _period_sum(coeffs)
    d = cmath.sqrt(S * S - 4 * A * C)
    if abs(S - d) > abs(S + d):
        d = -d
    x1 = (S + d) / (2 * A)
    x2 = C / (A * x1)
    return RatioPair((x1, x2))


def qp_criterion(coeffs: EquationCoefficients, r_hat: complex) -> tuple[complex, complex]:
    """``(r_hat a^pi + c^pi / (r r_hat), S)``, the two sides of the existence test."""
    r_hat = complex(r_hat)
    if r_hat == 0:
        raise InvalidInputError("r_hat must be nonzero")
    lhs = r_hat * coeffs.a.product() + coeffs.c.product() / (coeffs.ratio * r_hat)
    return lhs, _period_sum(coeffs)


def has_qp_solutions(coeffs: EquationCoefficients, r_hat: complex, tol: float = DEFAULT_TOL) -> bool:
    """Whether solutions with ``z(k + p) = r_hat z(k)`` exist, up to ``tol``."""
    if tol <= 0:
        raise InvalidInputError("tol must be positive")
    lhs, rhs = qp_criterion(coeffs, r_hat)
    return abs(lhs - rhs) <= tol * (1 + abs(rhs))


def has_periodic_solutions(coeffs: EquationCoefficients, tol: float = DEFAULT_TOL) -> bool:
    return has_qp_solutions(coeffs, 1.0, tol)


# -- constant coefficients ------------------------------------------------------

def chebyshev_ratios(q: complex, p: int) -> tuple[complex, complex]:
    """Ratios of period-``p`` quasi-periodic Chebyshev sequences: ``T_p(q) +- sqrt(T_p(q)**2 - 1)``."""
    t = chebyshev.T(p, q)
    d = cmath.sqrt(t * t - 1)
    return t + d, t - d


def periodic_chebyshev_parameters(p: int) -> list[float]:
    """``q = cos(2 pi j / p)``, ``j = 0..ceil((p-1)/2)``: parameters with period-``p`` solutions."""
    return [math.cos(2 * math.pi * j / p) for j in range(math.ceil((p - 1) / 2) + 1)]


def geometric_ratios(a: complex, b: complex, c: complex) -> tuple[complex, complex]:
    """Ratios of geometric solutions of ``a z(k+1) - b z(k) + c z(k-1) = 0``."""
    d = cmath.sqrt(b * b - 4 * a * c)
    return (b + d) / (2 * a), (b - d) / (2 * a)


@dataclass(frozen=True)
class RealClassification:
    """Reality properties of ``q`` for real coefficients.

    Attributes
    ----------
    rs : float
        ``r * a^pi / c^pi``; ``gamma**2 == 1 / rs``.
    q : complex
    q_is_real : bool
        Only asserted when ``rs > 0``.
    reduction_parameter : float or None
        ``2 q**2 - 1`` when ``rs < 0``: the real parameter governing the
        period-``2p`` sections.
    constant_q_hat : float or None
        ``b**2/(2ac) - 1`` for constant coefficients with ``ac < 0``.
    """

    rs: float
    q: complex
    q_is_real: bool
    reduction_parameter: Optional[float]
    constant_q_hat: Optional[float]

    @property
    def sign(self) -> int:
        return 1 if self.rs > 0 else -1


def classify_real(coeffs: EquationCoefficients, tol: float = 1e-10) -> RealClassification:
    if not (coeffs.is_real() and coeffs.ratio.imag == 0):
        raise InvalidInputError("classify_real needs real coefficients and ratio")
    r = coeffs.ratio.real
    rs = r * (coeffs.a.product() / coeffs.c.product()).real
    q = _period_sum(coeffs) / (2 * coeffs.a.product() * branch_gamma(coeffs))
    scale = 1 + abs(q)
    q_is_real = abs(q.imag) <= tol * scale
    reduction = None
    q_hat = None
    if rs < 0:
        q2 = q * q
        if abs(q2.imag) > tol * (1 + abs(q2)):
            raise ArithmeticError(f"q**2 should be real for rs < 0, got {q2}")
        reduction = 2 * q2.real - 1
        if coeffs.period == 1 and r == 1:
            a0, b0, c0 = coeffs.a.base[0].real, coeffs.b.base[0].real, coeffs.c.base[0].real
            q_hat = b0 * b0 / (2 * a0 * c0) - 1
    return RealClassification(rs, q, q_is_real, reduction, q_hat)
