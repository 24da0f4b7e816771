"""Chebyshev polynomials of the four kinds at complex arguments.

Every family obeys ``P[k+1] = 2x P[k] - P[k-1]`` and differs only in the
pair of seeds ``(P[-1], P[0])``:

====== ======= ========
kind    P[-1]   P[0]
====== ======= ========
T       x       1
U       0       1
V       1       1
W       -1      1
====== ======= ========

Values are always produced by running that recurrence (backward for
negative indices), never through trigonometric closed forms.

The module also carries the classical identity suite as small functions
that return ``(lhs, rhs)`` pairs; :func:`close` compares them with the
package-wide relative criterion.
"""
from __future__ import annotations

import cmath
import enum
import math
from typing import Callable, Union

from .errors import InvalidInputError

Number = Union[int, float, complex]


class ChebKind(enum.Enum):
    FIRST = "T"
    SECOND = "U"
    THIRD = "V"
    FOURTH = "W"

    @classmethod
    def parse(cls, value: Union["ChebKind", str]) -> "ChebKind":
        """Accept an enum member, a letter ``T/U/V/W`` or a name like ``"first"``."""
        if isinstance(value, cls):
            return value
        text = str(value).strip()
        for kind in cls:
            if text.upper() == kind.value or text.upper() == kind.name:
                return kind
        raise InvalidInputError(f"unknown Chebyshev kind {value!r}")


def _as_finite_complex(x: Number, name: str = "x") -> complex:
    try:
        z = complex(x)
    except (TypeError, ValueError) as exc:
        raise InvalidInputError(f"{name} is not a number: {x!r}") from exc
    if not cmath.isfinite(z):
        raise InvalidInputError(f"{name} must be finite, got {z!r}")
    return z


def seeds(kind: Union[ChebKind, str], x: Number) -> tuple[complex, complex]:
    """Return ``(P[-1](x), P[0](x))`` for the given kind."""
    kind = ChebKind.parse(kind)
    x = _as_finite_complex(x)
    pm1 = {ChebKind.FIRST: x, ChebKind.SECOND: 0j, ChebKind.THIRD: 1 + 0j, ChebKind.FOURTH: -1 + 0j}[kind]
    return pm1, 1 + 0j


def _run(pm1: complex, p0: complex, k: int, x: complex) -> complex:
    if k == 0:
        return p0
    if k == -1:
        return pm1
    two_x = 2 * x
    if k > 0:
        prev, cur = pm1, p0
        for _ in range(k):
            prev, cur = cur, two_x * cur - prev
        return cur
    # k <= -2: P[i-1] = 2x P[i] - P[i+1]
    nxt, cur = p0, pm1
    for _ in range(-k - 1):
        nxt, cur = cur, two_x * cur - nxt
    return cur


def cheb_eval(kind: Union[ChebKind, str], k: int, x: Number) -> complex:
    """k-th Chebyshev polynomial of the given kind evaluated at ``x``.

    Parameters
    ----------
    kind : ChebKind or str
        ``"T"``, ``"U"``, ``"V"`` or ``"W"`` (first to fourth kind).
    k : int
        Any integer; negative indices run the recurrence backward.
    x : complex
        Finite evaluation point.

    Returns
    -------
    complex
    """
    k = int(k)
    pm1, p0 = seeds(kind, x)
    return _run(pm1, p0, k, complex(x))


def cheb_from_seeds(p_minus1: Number, p0: Number, k: int, x: Number) -> complex:
    """Member ``k`` of the Chebyshev family seeded by ``(P[-1], P[0])``.

    Computed as ``P[0] U[k](x) - P[-1] U[k-1](x)``.
    """
    pm1 = _as_finite_complex(p_minus1, "p_minus1")
    p0 = _as_finite_complex(p0, "p0")
    x = _as_finite_complex(x)
    k = int(k)
    return p0 * cheb_eval(ChebKind.SECOND, k, x) - pm1 * cheb_eval(ChebKind.SECOND, k - 1, x)


def T(k: int, x: Number) -> complex:
    return cheb_eval(ChebKind.FIRST, k, x)


def U(k: int, x: Number) -> complex:
    return cheb_eval(ChebKind.SECOND, k, x)


def V(k: int, x: Number) -> complex:
    return cheb_eval(ChebKind.THIRD, k, x)


def W(k: int, x: Number) -> complex:
    return cheb_eval(ChebKind.FOURTH, k, x)


def close(lhs: Number, rhs: Number, tol: float = 1e-12) -> bool:
    """``|lhs - rhs| <= tol * (1 + max(|lhs|, |rhs|))``."""
    return abs(lhs - rhs) <= tol * (1.0 + max(abs(lhs), abs(rhs)))


# -- explicit sums (reference values, non-negative indices only) -----------

def second_kind_sum(k: int, x: Number) -> complex:
    """``U[k](x)`` from the binomial expansion, ``k >= 0``."""
    if k < 0:
        raise InvalidInputError("explicit sum needs k >= 0")
    x = _as_finite_complex(x)
    return sum((-1) ** j * math.comb(k - j, j) * (2 * x) ** (k - 2 * j) for j in range(k // 2 + 1))


def first_kind_sum(k: int, x: Number) -> complex:
    """``T[k](x)`` from the binomial expansion, ``k >= 1``."""
    if k < 1:
        raise InvalidInputError("explicit sum needs k >= 1")
    x = _as_finite_complex(x)
    total = sum((-1) ** j / (k - j) * math.comb(k - j, j) * (2 * x) ** (k - 2 * j) for j in range(k // 2 + 1))
    return k / 2 * total


# -- identity suite: each returns a tuple of (lhs, rhs) pairs ----------------

Pairs = tuple[tuple[complex, complex], ...]


def three_term(kind: Union[ChebKind, str], k: int, x: Number) -> Pairs:
    x = complex(x)
    return ((cheb_eval(kind, k + 1, x), 2 * x * cheb_eval(kind, k, x) - cheb_eval(kind, k - 1, x)),)


def explicit_sums(k: int, x: Number) -> Pairs:
    pairs = [(U(k, x), second_kind_sum(k, x))]
    if k >= 1:
        pairs.append((T(k, x), first_kind_sum(k, x)))
    return tuple(pairs)


def seed_combination(kind: Union[ChebKind, str], k: int, x: Number) -> Pairs:
    pm1, p0 = seeds(kind, x)
    return ((cheb_eval(kind, k, x), cheb_from_seeds(pm1, p0, k, x)),)


def flipped_shift(p: int, k: int, x: Number) -> Pairs:
    return ((U(p - k, x), U(p, x) * U(k, x) - U(p + 1, x) * U(k - 1, x)),)


def kind_relations(k: int, x: Number) -> Pairs:
    x = complex(x)
    u, u1, u2 = U(k, x), U(k - 1, x), U(k - 2, x)
    return (
        (V(k, x), u - u1),
        (W(k, x), u + u1),
        (T(k, x), u - x * u1),
        (T(k, x), (u - u2) / 2),
        (T(-k, x), T(k, x)),
        (U(-k, x), -U(k - 2, x)),
    )


def parity(k: int, x: Number) -> Pairs:
    x = complex(x)
    sign = -1 if k % 2 else 1
    return ((T(k, -x), sign * T(k, x)), (U(k, -x), sign * U(k, x)))


def doubling_second(k: int, x: Number) -> Pairs:
    x = complex(x)
    y = 2 * x * x - 1
    return ((U(2 * k, x), W(k, y)), (U(2 * k + 1, x), 2 * x * U(k, y)))


def doubling_first(k: int, x: Number) -> Pairs:
    x = complex(x)
    y = 2 * x * x - 1
    return ((T(2 * k, x), T(k, y)), (T(2 * k + 1, x), x * V(k, y)))


def products(m: int, n: int, x: Number) -> Pairs:
    return (
        (2 * T(m, x) * T(n, x), T(n + m, x) + T(m - n, x)),
        (2 * U(m, x) * T(n, x), U(n + m, x) + U(m - n, x)),
    )


def compositions(k: int, n: int, m: int, x: Number) -> Pairs:
    return (
        (T(k * n, x), T(k, T(n, x))),
        (U(2 * k * (m + 1) + m, x), U(m, x) * W(k, T(2 * (m + 1), x))),
    )


def general_doubling(k: int, m: int, n: int, x: Number) -> Pairs:
    return (
        (T(m * (2 * k + 1), x), T(m, x) * V(k, T(2 * m, x))),
        (U((k + 1) * n - 1, x), U(n - 1, x) * U(k, T(n, x))),
    )


def sections(k: int, n: int, m: int, x: Number) -> Pairs:
    """Section identities relating ``T[kn+m]`` and ``U[kn+m]`` to ``U[k](T[n])``."""
    t = T(n, x)
    uk, uk1 = U(k, t), U(k - 1, t)
    return (
        (T(k * n + m, x), T(m, x) * uk - T(m - n, x) * uk1),
        (U(k * n + m, x), U(m, x) * uk - U(m - n, x) * uk1),
    )


IDENTITIES: dict[str, Callable[..., Pairs]] = {
    "three_term": three_term,
    "explicit_sums": explicit_sums,
    "seed_combination": seed_combination,
    "flipped_shift": flipped_shift,
    "kind_relations": kind_relations,
    "parity": parity,
    "doubling_second": doubling_second,
    "doubling_first": doubling_first,
    "products": products,
    "compositions": compositions,
    "general_doubling": general_doubling,
    "sections": sections,
}
