"""Solutions, transfer matrices and the monodromy oracle.

The step matrix ``M(k)`` maps ``(z(k), z(k-1))`` to ``(z(k+1), z(k))``::

    M(k) = [[b(k)/a(k), -c(k-1)/a(k)],
            [1,          0          ]]

It is periodic with period ``p`` even when the coefficients carry a ratio,
since the ratio cancels in both quotients.  The one-period product
``Phi = M(p-1) ... M(0)`` has determinant ``gamma**2`` and the sections of
every solution obey ``w(k+1) - tr(Phi) w(k) + det(Phi) w(k-1) = 0``, which
gives ``q = tr(Phi) / (2 gamma)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import chebyshev
from .errors import InvalidInputError
from .floquet import FloquetResult, Method
from .qpseq import EquationCoefficients
from .symmetrize import branch_gamma


@dataclass(frozen=True)
class Trajectory:
    """Solution values on the contiguous window ``start, start+1, ...``."""

    start: int
    values: np.ndarray

    @property
    def stop(self) -> int:
        """Last index covered (inclusive)."""
        return self.start + len(self.values) - 1

    @property
    def indices(self) -> range:
        return range(self.start, self.stop + 1)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, k: int) -> complex:
        if not self.start <= k <= self.stop:
            raise IndexError(f"index {k} outside [{self.start}, {self.stop}]")
        return complex(self.values[k - self.start])

    def __iter__(self):
        return iter(self.values)

    def section(self, n: int, m: int) -> np.ndarray:
        """Available values of ``k -> z(k n + m)`` in increasing ``k``."""
        ks = [k for k in self.indices if (k - m) % n == 0]
        return np.array([self[k] for k in ks])

    def residuals(self, coeffs: EquationCoefficients) -> np.ndarray:
        """``a(k) z(k+1) - b(k) z(k) + c(k-1) z(k-1)`` at each interior index."""
        a, b, c = coeffs.a, coeffs.b, coeffs.c
        out = [
            a(k) * self[k + 1] - b(k) * self[k] + c(k - 1) * self[k - 1]
            for k in range(self.start + 1, self.stop)
        ]
        return np.array(out, dtype=complex)


def propagate(
    coeffs: EquationCoefficients,
    m: int,
    z0: complex,
    z1: complex,
    lo: int,
    hi: int,
) -> Trajectory:
    """The unique solution with ``z(m) = z0``, ``z(m+1) = z1`` on ``[lo, hi]``.

    Forward steps use ``z(k+1) = (b(k) z(k) - c(k-1) z(k-1)) / a(k)`` and
    backward steps ``z(k-1) = (b(k) z(k) - a(k) z(k+1)) / c(k-1)``.
    """
    m, lo, hi = int(m), int(lo), int(hi)
    if not (lo <= m and m + 1 <= hi):
        raise InvalidInputError(f"window [{lo}, {hi}] must contain m={m} and m+1")
    a, b, c = coeffs.a, coeffs.b, coeffs.c
    z = np.zeros(hi - lo + 1, dtype=complex)
    z[m - lo] = z0
    z[m + 1 - lo] = z1
    for k in range(m + 1, hi):
        z[k + 1 - lo] = (b(k) * z[k - lo] - c(k - 1) * z[k - 1 - lo]) / a(k)
    for k in range(m, lo, -1):
        z[k - 1 - lo] = (b(k) * z[k - lo] - a(k) * z[k + 1 - lo]) / c(k - 1)
    return Trajectory(lo, z)


def transfer_matrix(coeffs: EquationCoefficients, k: int) -> np.ndarray:
    a_k = coeffs.a(k)
    return np.array([[coeffs.b(k) / a_k, -coeffs.c(k - 1) / a_k], [1, 0]], dtype=complex)


@dataclass(frozen=True)
class Monodromy:
    """One-period transfer product ``M(p-1) ... M(0)``."""

    matrix: np.ndarray

    @property
    def trace(self) -> complex:
        return complex(self.matrix[0, 0] + self.matrix[1, 1])

    @property
    def det(self) -> complex:
        m = self.matrix
        return complex(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])

    def eigenvalues(self) -> tuple[complex, complex]:
        """Roots of ``x**2 - tr x + det``."""
        t, d = self.trace, self.det
        s = np.sqrt(complex(t * t - 4 * d))
        if abs(t - s) > abs(t + s):
            s = -s
        x1 = (t + s) / 2
        x2 = d / x1 if x1 != 0 else (t - s) / 2
        return complex(x1), complex(x2)

    def null_vector(self, value: complex) -> np.ndarray:
        """Unit vector ``v`` with ``(Phi - value I) v ~ 0``."""
        A = self.matrix - value * np.eye(2)
        rows = [A[0], A[1]]
        row = max(rows, key=lambda r: np.linalg.norm(r))
        if np.linalg.norm(row) == 0:
            return np.array([1, 0], dtype=complex)
        v = np.array([-row[1], row[0]], dtype=complex)
        return v / np.linalg.norm(v)


def monodromy_matrix(coeffs: EquationCoefficients, start: int = 0) -> Monodromy:
    """``M(start+p-1) ... M(start)``; the default starts at index 0."""
    phi = np.eye(2, dtype=complex)
    for k in range(start, start + coeffs.period):
        phi = transfer_matrix(coeffs, k) @ phi
    return Monodromy(phi)


def q_oracle(coeffs: EquationCoefficients, gamma: Optional[complex] = None) -> FloquetResult:
    """``q = tr(Phi) / (2 gamma)``, independent of the combinatorial routes."""
    if gamma is None:
        gamma = branch_gamma(coeffs)
    return FloquetResult(monodromy_matrix(coeffs).trace / (2 * gamma), complex(gamma), Method.MONODROMY_ORACLE)


def qp_seed(coeffs: EquationCoefficients, r_hat: complex) -> tuple[complex, complex]:
    """Initial values ``(z(0), z(1))`` of a solution with ``z(k+p) = r_hat z(k)``.

    Only meaningful when ``r_hat`` is an eigenvalue of the monodromy.
    """
    v = monodromy_matrix(coeffs).null_vector(r_hat)
    # Phi acts on the state (z(0), z(-1)); one step gives z(1)
    z0, zm1 = complex(v[0]), complex(v[1])
    z1 = (coeffs.b(0) * z0 - coeffs.c(-1) * zm1) / coeffs.a(0)
    return z0, z1


def is_qp_solution(traj: Trajectory, p: int, r_hat: complex, tol: float = 1e-9) -> bool:
    """``|z(k+p) - r_hat z(k)| <= tol (1 + |z(k)|)`` across the whole window."""
    if p < 1:
        raise InvalidInputError("period must be positive")
    if len(traj) < p + 2:
        raise InvalidInputError(f"trajectory of length {len(traj)} cannot test period {p}")
    z = traj.values
    head, tail = z[:-p], z[p:]
    return bool(np.all(np.abs(tail - r_hat * head) <= tol * (1 + np.abs(head))))


@dataclass(frozen=True)
class SubsequenceReport:
    n: int
    m: int
    q: complex
    parameter: complex
    max_residual: float
    samples: int


def subsequence_parameter_check(
    coeffs: EquationCoefficients,
    n: int,
    m: int,
    seeds: tuple[complex, complex] = (1.0, 0.5),
    steps: int = 40,
) -> SubsequenceReport:
    """Largest residual of ``v(k+1) - 2 T_n(q) v(k) + v(k-1)`` for ``v = z(kn + m)``.

    ``coeffs`` must be a Chebyshev equation: ``a = c = 1``, ``b = 2q``, period
    and ratio 1.  ``steps`` counts section samples.
    """
    if n < 1:
        raise InvalidInputError("n must be positive")
    if not (
        coeffs.period == 1
        and coeffs.ratio == 1
        and coeffs.a.base[0] == 1
        and coeffs.c.base[0] == 1
    ):
        raise InvalidInputError("subsequence check expects a Chebyshev equation (a = c = 1, p = r = 1)")
    q = coeffs.b.base[0] / 2
    hi = m + n * (steps - 1)
    traj = propagate(coeffs, m, seeds[0], seeds[1], min(m, hi - 1), max(hi, m + 1))
    v = np.array([traj[m + n * k] for k in range(steps)])
    t = chebyshev.T(n, q)
    res = v[2:] - 2 * t * v[1:-1] + v[:-2]
    return SubsequenceReport(n, m, q, t, float(np.max(np.abs(res))) if len(res) else 0.0, steps)
