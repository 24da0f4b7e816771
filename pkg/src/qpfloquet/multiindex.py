"""Binary multi-indices with cyclically separated support.

``Lambda(p, j)`` is the set of 0/1 tuples of length ``p`` with ``j`` ones such
that consecutive ones are at least two positions apart, and, when the first
one sits at position 0, the last one sits at position ``p - 2`` or earlier.
Read cyclically, no two ones are adjacent.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence, Union

from .errors import InvalidInputError
from .qpseq import QPSequence


@dataclass(frozen=True, order=True)
class BinaryMultiIndex:
    bits: tuple[int, ...]

    def __init__(self, bits: Iterable[int]):
        bits = tuple(int(b) for b in bits)
        if not bits:
            raise InvalidInputError("a multi-index needs at least one position")
        if any(b not in (0, 1) for b in bits):
            raise InvalidInputError(f"bits must be 0 or 1, got {bits!r}")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_string(cls, text: str) -> "BinaryMultiIndex":
        return cls(int(ch) for ch in text.strip())

    @classmethod
    def zero(cls, p: int) -> "BinaryMultiIndex":
        return cls((0,) * p)

    @classmethod
    def ones(cls, p: int) -> "BinaryMultiIndex":
        """The all-ones index ``pi_p``."""
        return cls((1,) * p)

    @property
    def order(self) -> int:
        return len(self.bits)

    @property
    def length(self) -> int:
        return sum(self.bits)

    @cached_property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, b in enumerate(self.bits) if b)

    def __len__(self) -> int:
        return len(self.bits)

    def __getitem__(self, i: int) -> int:
        return self.bits[i]

    def __str__(self) -> str:
        return "".join(map(str, self.bits))

    def extend(self, tail: Sequence[int]) -> "BinaryMultiIndex":
        return BinaryMultiIndex(self.bits + tuple(tail))


class PartitionClass(enum.Enum):
    A1 = 1
    A2 = 2
    A3 = 3
    A4 = 4
    A5 = 5


def _check_range(p: int, j: int) -> None:
    if p < 1:
        raise InvalidInputError(f"order must be positive, got {p}")
    if not 0 <= j <= p // 2:
        raise InvalidInputError(f"weight {j} out of range [0, {p // 2}] for order {p}")


def is_admissible(alpha: BinaryMultiIndex) -> bool:
    """True when ``alpha`` belongs to some ``Lambda(p, j)``."""
    s = alpha.support
    p = alpha.order
    if len(s) > p // 2:
        return False
    if any(t - u < 2 for u, t in zip(s, s[1:])):
        return False
    if len(s) >= 1 and s[0] == 0 and s[-1] > p - 2:
        return False
    return True


def _require(alpha: BinaryMultiIndex) -> None:
    if not isinstance(alpha, BinaryMultiIndex):
        alpha = BinaryMultiIndex(alpha)
    if not is_admissible(alpha):
        raise InvalidInputError(f"{alpha} is not in any Lambda set")


def enumerate_lambda(p: int, j: int) -> list[BinaryMultiIndex]:
    """All members of ``Lambda(p, j)`` in ascending lexicographic bit order.

    Supports are built position by position: after a one at ``i`` the next
    may sit no earlier than ``i + 2``, and the last one must leave room for
    the wrap-around gap back to the first.
    """
    _check_range(p, j)
    found: list[tuple[int, ...]] = []
    support: list[int] = []

    def place(start: int, left: int) -> None:
        if left == 0:
            bits = [0] * p
            for i in support:
                bits[i] = 1
            found.append(tuple(bits))
            return
        for i in range(start, p):
            first = support[0] if support else i
            # a one at position 0 forbids one at p-1 (cyclic adjacency)
            last_allowed = p - 2 if first == 0 else p - 1
            if i + 2 * (left - 1) > last_allowed:
                if first == 0 and not support:
                    continue
                break
            support.append(i)
            place(i + 2, left - 1)
            support.pop()

    place(0, j)
    found.sort()
    return [BinaryMultiIndex(b) for b in found]


def cardinality(p: int, j: int) -> int:
    """``|Lambda(p, j)| = p/(p-j) * C(p-j, j)`` in exact integer arithmetic."""
    _check_range(p, j)
    num = p * math.comb(p - j, j)
    q, rem = divmod(num, p - j)
    assert rem == 0
    return q


def bar(alpha: BinaryMultiIndex) -> BinaryMultiIndex:
    """Zero every support position and its cyclic successor; ones elsewhere."""
    if not isinstance(alpha, BinaryMultiIndex):
        alpha = BinaryMultiIndex(alpha)
    _require(alpha)
    p = alpha.order
    out = [1] * p
    for i in alpha.support:
        out[i] = 0
        out[(i + 1) % p] = 0
    return BinaryMultiIndex(out)


def classify(alpha: BinaryMultiIndex) -> PartitionClass:
    """Class ``A1`` ... ``A5`` from ``bar(alpha)[0]``, ``bar(alpha)[p-1]`` and ``alpha[0]``."""
    if not isinstance(alpha, BinaryMultiIndex):
        alpha = BinaryMultiIndex(alpha)
    bb = bar(alpha)
    first, last = bb[0], bb[alpha.order - 1]
    if first and last:
        return PartitionClass.A1
    if not first and last:
        return PartitionClass.A2
    if first and not last:
        return PartitionClass.A3
    return PartitionClass.A4 if alpha[0] == 1 else PartitionClass.A5


def partition(p: int, j: int) -> dict[PartitionClass, list[BinaryMultiIndex]]:
    out: dict[PartitionClass, list[BinaryMultiIndex]] = {cls: [] for cls in PartitionClass}
    for alpha in enumerate_lambda(p, j):
        out[classify(alpha)].append(alpha)
    return out


def weight(alpha: BinaryMultiIndex, z: Union[QPSequence, Sequence[complex]], squared: bool = False) -> complex:
    """``z^alpha = prod z(j)^alpha_j`` (or ``z^{2 alpha}``) over the base window.

    ``0**0`` counts as 1, so zeros of ``z`` outside the support are harmless.
    """
    if not isinstance(alpha, BinaryMultiIndex):
        alpha = BinaryMultiIndex(alpha)
    values = z.base if isinstance(z, QPSequence) else tuple(complex(v) for v in z)
    if len(values) != alpha.order:
        raise InvalidInputError(f"index of order {alpha.order} applied to {len(values)} values")
    out = 1 + 0j
    for i in alpha.support:
        v = values[i]
        out *= v * v if squared else v
    return out
