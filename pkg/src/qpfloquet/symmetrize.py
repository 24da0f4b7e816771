"""Reduction of a quasi-periodic equation to a symmetric periodic one.

The multiplier ``phi(a, c)`` turns ``a z(k+1) - b z(k) + c z(k-1) = 0`` into
an equation whose forward and backward coefficients coincide.  Over one
period ``phi`` picks up the factor ``s = a^pi / c^pi``.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass

from .errors import InvalidInputError
from .qpseq import EquationCoefficients, NonVanishingQPSequence, QPSequence, nonvanishing


def _check_pair(a: QPSequence, c: QPSequence) -> None:
    if a.period != c.period or a.ratio != c.ratio:
        raise InvalidInputError("a and c must share period and ratio")


def principal_sqrt(w: complex) -> complex:
    """Principal square root with ``+0j`` imposed on the negative real axis."""
    w = complex(w)
    if w.imag == 0:
        w = complex(w.real, 0.0)
    return cmath.sqrt(w)


def ratio_s(a: QPSequence, c: QPSequence) -> complex:
    """``s = prod_{j<p} a(j)/c(j)``, the ratio of ``phi(a, c)``."""
    _check_pair(a, c)
    s = 1 + 0j
    for aj, cj in zip(a.base, c.base):
        s *= aj / cj
    return s


def phi_at(a: QPSequence, c: QPSequence, k: int) -> complex:
    """Evaluate ``phi(a, c)(k)``.

    ``phi(0) = 1``, ``phi(k) = prod_{j=0}^{k-1} a(j)/c(j)`` for ``k > 0`` and
    ``phi(k) = prod_{j=k}^{-1} c(j)/a(j)`` for ``k < 0``.  The one-period
    product ``s`` is reused, so the cost is at most one period of factors.
    """
    _check_pair(a, c)
    a, c = nonvanishing(a), nonvanishing(c)
    k = int(k)
    q, m = divmod(k, a.period)
    partial = 1 + 0j
    for j in range(m):
        partial *= a.base[j] / c.base[j]
    return ratio_s(a, c) ** q * partial


def branch_gamma(coeffs: EquationCoefficients) -> complex:
    """``gamma = sqrt(c^pi / (r a^pi))`` on the principal branch.

    This is the single place where the square root is taken; every method
    that needs ``gamma`` must receive this value.
    """
    return principal_sqrt(coeffs.c.product() / (coeffs.ratio * coeffs.a.product()))


@dataclass(frozen=True)
class SymmetrizedPair:
    """Periodic symmetric coefficients ``(a_phi, b_phi)`` and the branch ``gamma``."""

    a_phi: NonVanishingQPSequence
    b_phi: QPSequence
    gamma: complex

    @property
    def period(self) -> int:
        return self.a_phi.period


def symmetrized(coeffs: EquationCoefficients, gamma: complex | None = None) -> SymmetrizedPair:
    """Build the periodic symmetric pair with the same Floquet parameter.

    ``a_phi(k) = phi(k) a(k)`` for ``k < p-1``, ``a_phi(p-1) = gamma phi(p-1) a(p-1)``
    and ``b_phi(k) = phi(k) b(k)``; both are extended periodically.  Pass
    ``gamma`` to use another branch (for instance ``gamma**n`` for a rescaled
    system).
    """
    a, b, c = coeffs.a, coeffs.b, coeffs.c
    p = coeffs.period
    if gamma is None:
        gamma = branch_gamma(coeffs)
    phi = [1 + 0j]
    for j in range(p - 1):
        phi.append(phi[-1] * a.base[j] / c.base[j])
    a_vals = [phi[k] * a.base[k] for k in range(p)]
    a_vals[-1] *= gamma
    b_vals = [phi[k] * b.base[k] for k in range(p)]
    return SymmetrizedPair(NonVanishingQPSequence(p, 1, a_vals), QPSequence(p, 1, b_vals), complex(gamma))
