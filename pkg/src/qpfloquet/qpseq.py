"""Quasi-periodic complex sequences.

A sequence with period ``p`` and ratio ``r`` satisfies ``z(k + p) = r z(k)``
for every integer ``k``, so it is stored as ``(p, r)`` plus the window
``z(0), ..., z(p-1)``.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Any, Iterable, Mapping, Sequence

from .errors import InvalidInputError


def _complex(value: Any, what: str) -> complex:
    """Decode a number or an ``[re, im]`` pair."""
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise InvalidInputError(f"{what}: complex pairs need exactly two entries, got {value!r}")
        re, im = value
        try:
            z = complex(float(re), float(im))
        except (TypeError, ValueError) as exc:
            raise InvalidInputError(f"{what}: not a number pair: {value!r}") from exc
    elif isinstance(value, bool):
        raise InvalidInputError(f"{what}: booleans are not numbers")
    else:
        try:
            z = complex(value)
        except (TypeError, ValueError) as exc:
            raise InvalidInputError(f"{what}: not a number: {value!r}") from exc
    if not cmath.isfinite(z):
        raise InvalidInputError(f"{what}: value must be finite")
    return z


def pair(z: complex) -> list[float]:
    """``[re, im]`` encoding of a complex value."""
    z = complex(z)
    return [z.real, z.imag]


@dataclass(frozen=True)
class QPSequence:
    """Quasi-periodic sequence ``k -> ratio**floor(k/period) * base[k % period]``."""

    period: int
    ratio: complex
    base: tuple[complex, ...]

    def __init__(self, period: int, ratio: Any, base: Iterable[Any]):
        if isinstance(period, bool) or int(period) != period or int(period) < 1:
            raise InvalidInputError(f"period must be a positive integer, got {period!r}")
        period = int(period)
        ratio = _complex(ratio, "ratio")
        if ratio == 0:
            raise InvalidInputError("ratio must be nonzero")
        values = tuple(_complex(v, "base") for v in base)
        if len(values) != period:
            raise InvalidInputError(f"base has {len(values)} values, period is {period}")
        object.__setattr__(self, "period", period)
        object.__setattr__(self, "ratio", ratio)
        object.__setattr__(self, "base", values)
        self._check()

    def _check(self) -> None:
        pass

    @classmethod
    def constant(cls, value: Any) -> "QPSequence":
        return cls(1, 1, [value])

    @classmethod
    def periodic(cls, values: Sequence[Any]) -> "QPSequence":
        return cls(len(values), 1, values)

    def __call__(self, k: int) -> complex:
        return self.value_at(k)

    def value_at(self, k: int) -> complex:
        q, m = divmod(int(k), self.period)
        return self.ratio ** q * self.base[m]

    def values(self, lo: int, hi: int) -> list[complex]:
        """Values on the closed window ``[lo, hi]``."""
        return [self.value_at(k) for k in range(lo, hi + 1)]

    def product(self) -> complex:
        """Product of one period, ``z(0) z(1) ... z(p-1)``."""
        out = 1 + 0j
        for v in self.base:
            out *= v
        return out

    def section(self, m: int) -> "QPSequence":
        """The subsequence ``k -> z(k p + m)``, a geometric sequence."""
        return type(self)(1, self.ratio, [self.value_at(m)])

    def rescale(self, n: int) -> "QPSequence":
        """Re-express with period ``n p`` and ratio ``r**n``."""
        if isinstance(n, bool) or int(n) != n or n < 1:
            raise InvalidInputError(f"rescale factor must be a positive integer, got {n!r}")
        n = int(n)
        return type(self)(n * self.period, self.ratio ** n, self.values(0, n * self.period - 1))

    def shift(self, m: int) -> "QPSequence":
        """``k -> z(k + m)``."""
        return type(self)(self.period, self.ratio, self.values(m, m + self.period - 1))

    def flip(self, m: int) -> "QPSequence":
        """``k -> z(m - k)``; the ratio becomes ``1/r``."""
        return type(self)(self.period, 1 / self.ratio, [self.value_at(m - k) for k in range(self.period)])

    def scaled(self, factor: Any) -> "QPSequence":
        factor = _complex(factor, "factor")
        return type(self)(self.period, self.ratio, [factor * v for v in self.base])

    def allclose(self, other: "QPSequence", tol: float = 1e-12) -> bool:
        """Same period and ratio, base values equal within relative ``tol``."""
        if self.period != other.period:
            return False
        if abs(self.ratio - other.ratio) > tol * (1 + abs(self.ratio)):
            return False
        return all(abs(u - v) <= tol * (1 + max(abs(u), abs(v))) for u, v in zip(self.base, other.base))

    def is_real(self) -> bool:
        return self.ratio.imag == 0 and all(v.imag == 0 for v in self.base)

    def to_dict(self) -> dict:
        return {"period": self.period, "ratio": pair(self.ratio), "base": [pair(v) for v in self.base]}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "QPSequence":
        if not isinstance(data, Mapping):
            raise InvalidInputError(f"sequence must be a JSON object, got {type(data).__name__}")
        try:
            base = data["base"]
        except KeyError as exc:
            raise InvalidInputError("sequence is missing 'base'") from exc
        if not isinstance(base, list):
            raise InvalidInputError("'base' must be a list")
        return cls(data.get("period", len(base)), data.get("ratio", 1), base)


class NonVanishingQPSequence(QPSequence):
    """Quasi-periodic sequence with no zero term."""

    def _check(self) -> None:
        if any(v == 0 for v in self.base):
            raise InvalidInputError("sequence must not vanish anywhere")


def nonvanishing(z: QPSequence) -> NonVanishingQPSequence:
    if isinstance(z, NonVanishingQPSequence):
        return z
    return NonVanishingQPSequence(z.period, z.ratio, z.base)


@dataclass(frozen=True)
class EquationCoefficients:
    """Coefficients of ``a(k) z(k+1) - b(k) z(k) + c(k-1) z(k-1) = 0``.

    ``a`` and ``c`` must be nowhere zero and all three sequences must share
    period and ratio.
    """

    a: NonVanishingQPSequence
    b: QPSequence
    c: NonVanishingQPSequence

    def __post_init__(self):
        object.__setattr__(self, "a", nonvanishing(self.a))
        object.__setattr__(self, "c", nonvanishing(self.c))
        if not isinstance(self.b, QPSequence):
            raise InvalidInputError("b must be a QPSequence")
        p, r = self.a.period, self.a.ratio
        for name, seq in (("b", self.b), ("c", self.c)):
            if seq.period != p or seq.ratio != r:
                raise InvalidInputError(
                    f"{name} has (period, ratio) = ({seq.period}, {seq.ratio}), expected ({p}, {r})"
                )

    @classmethod
    def from_values(cls, a: Sequence[Any], b: Sequence[Any], c: Sequence[Any], ratio: Any = 1) -> "EquationCoefficients":
        p = len(a)
        return cls(NonVanishingQPSequence(p, ratio, a), QPSequence(p, ratio, b), NonVanishingQPSequence(p, ratio, c))

    @property
    def period(self) -> int:
        return self.a.period

    @property
    def ratio(self) -> complex:
        return self.a.ratio

    def rescale(self, n: int) -> "EquationCoefficients":
        return EquationCoefficients(self.a.rescale(n), self.b.rescale(n), self.c.rescale(n))

    def is_real(self) -> bool:
        return self.a.is_real() and self.b.is_real() and self.c.is_real()

    def to_dict(self) -> dict:
        return {"a": self.a.to_dict(), "b": self.b.to_dict(), "c": self.c.to_dict()}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "EquationCoefficients":
        if not isinstance(data, Mapping):
            raise InvalidInputError("coefficients must be a JSON object")
        missing = [k for k in ("a", "b", "c") if k not in data]
        if missing:
            raise InvalidInputError(f"coefficients missing {', '.join(missing)}")
        return cls(
            NonVanishingQPSequence.from_dict(data["a"]),
            QPSequence.from_dict(data["b"]),
            NonVanishingQPSequence.from_dict(data["c"]),
        )


# functional spellings of the methods above

def value_at(z: QPSequence, k: int) -> complex:
    return z.value_at(k)


def section(z: QPSequence, m: int) -> QPSequence:
    return z.section(m)


def rescale(z, n: int):
    """Works on a single sequence or on :class:`EquationCoefficients`."""
    return z.rescale(n)


def shift(z: QPSequence, m: int) -> QPSequence:
    return z.shift(m)


def flip(z: QPSequence, m: int) -> QPSequence:
    return z.flip(m)
