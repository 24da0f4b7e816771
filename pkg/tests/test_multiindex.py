import itertools
import math

import pytest

from qpfloquet import chebyshev
from qpfloquet.errors import InvalidInputError
from qpfloquet.multiindex import (
    BinaryMultiIndex,
    PartitionClass,
    bar,
    cardinality,
    classify,
    enumerate_lambda,
    is_admissible,
    partition,
    weight,
)
from qpfloquet.qpseq import QPSequence

from conftest import random_complex


def brute_force(p, j):
    """Filter all 2**p tuples by weight, gaps of at least two and the wrap rule."""
    out = []
    for bits in itertools.product((0, 1), repeat=p):
        s = [i for i, b in enumerate(bits) if b]
        if len(s) != j:
            continue
        if any(t - u < 2 for u, t in zip(s, s[1:])):
            continue
        if s and s[0] == 0 and s[-1] == p - 1 and p > 1:
            continue
        out.append(BinaryMultiIndex(bits))
    return sorted(out)


B = BinaryMultiIndex.from_string


class TestEnumerate:
    def test_order_four(self):
        assert set(enumerate_lambda(4, 2)) == {B("1010"), B("0101")}

    def test_empty_support(self):
        assert enumerate_lambda(3, 0) == [B("000")]

    def test_order_five_frozen(self):
        assert [str(a) for a in enumerate_lambda(5, 2)] == ["00101", "01001", "01010", "10010", "10100"]

    @pytest.mark.parametrize("p", range(1, 12))
    def test_matches_brute_force(self, p):
        for j in range(p // 2 + 1):
            assert sorted(enumerate_lambda(p, j)) == brute_force(p, j)

    @pytest.mark.parametrize("p, j", [(4, 3), (1, 1), (5, -1), (0, 0)])
    def test_out_of_range(self, p, j):
        with pytest.raises(InvalidInputError):
            enumerate_lambda(p, j)

    def test_all_admissible(self):
        for p in range(1, 10):
            for j in range(p // 2 + 1):
                assert all(is_admissible(a) for a in enumerate_lambda(p, j))
        assert not is_admissible(B("101"))
        assert not is_admissible(B("110"))


class TestCardinality:
    def test_weight_one(self):
        assert all(cardinality(p, 1) == p for p in range(2, 20))

    def test_half_weight(self):
        assert all(cardinality(2 * m, m) == 2 for m in range(1, 10))

    def test_seven_three(self):
        assert cardinality(7, 3) == 7 == len(enumerate_lambda(7, 3))

    @pytest.mark.parametrize("p", range(1, 17))
    def test_formula(self, p):
        for j in range(p // 2 + 1):
            assert len(enumerate_lambda(p, j)) == cardinality(p, j)
            assert cardinality(p, j) * (p - j) == p * math.comb(p - j, j)

    def test_column_sums(self):
        assert [sum(cardinality(2 * m, j) for j in range(m + 1)) for m in (1, 2, 3)] == [3, 7, 18]
        for m in range(1, 8):
            even = sum(cardinality(2 * m, j) for j in range(m + 1))
            odd = sum(cardinality(2 * m + 1, j) for j in range(m + 1))
            assert even == round((2 * chebyshev.T(m, 1.5)).real)
            assert odd == round(chebyshev.W(m, 1.5).real)


class TestBar:
    @pytest.mark.parametrize(
        "alpha, expected",
        [("000", "111"), ("1010", "0000"), ("001", "010"), ("0101", "0000"), ("01000", "10011")],
    )
    def test_examples(self, alpha, expected):
        assert bar(B(alpha)) == B(expected)

    def test_invalid(self):
        with pytest.raises(InvalidInputError):
            bar(B("11"))


class TestClassify:
    def test_zero_is_first_class(self):
        assert all(classify(BinaryMultiIndex.zero(p)) is PartitionClass.A1 for p in range(1, 8))

    def test_order_four(self):
        assert classify(B("1010")) is PartitionClass.A4
        assert classify(B("0101")) is PartitionClass.A5

    @pytest.mark.parametrize("p", range(2, 11))
    def test_partition_covers(self, p):
        for j in range(p // 2 + 1):
            parts = partition(p, j)
            flat = [a for cls in PartitionClass for a in parts[cls]]
            assert sorted(flat) == enumerate_lambda(p, j)


def _ext(items, tail):
    return {a.extend(tail) for a in items}


@pytest.mark.parametrize("p", range(4, 13))
def test_partition_recursion(p):
    A1, A2, A3, A4, A5 = PartitionClass
    for j in range(2, p // 2 + 1):
        up, cur = partition(p + 1, j), partition(p, j)
        prev, low = partition(p - 1, j - 1), partition(p, j - 1)
        assert set(up[A3]) == _ext(cur[A5], [0])
        assert set(up[A1]) == _ext(cur[A1], [0]) | _ext(cur[A3], [0])
        assert set(up[A2]) == _ext(cur[A2], [0]) | _ext(cur[A4], [0])
        assert set(up[A4]) == _ext(prev[A2], [1, 0]) | _ext(prev[A4], [1, 0])
        assert set(up[A5]) == _ext(low[A1], [1]) | _ext(low[A3], [1])


class TestWeight:
    def test_all_ones(self, rng):
        z = QPSequence(4, 1, random_complex(rng, 4))
        assert weight(BinaryMultiIndex.ones(4), z) == pytest.approx(z.product())

    def test_zero(self):
        assert weight(BinaryMultiIndex.zero(3), [0, 0, 0]) == 1

    def test_squared(self):
        assert weight(B("101"), QPSequence(3, 1, [2, 5, 3]), squared=True) == 36

    def test_mismatch(self):
        with pytest.raises(InvalidInputError):
            weight(B("10"), [1, 2, 3])


class TestSumIdentities:
    """Closed-form sums over the smallest and largest weights."""

    def _sum(self, p, j, a, b):
        return sum(weight(al, a, squared=True) * weight(bar(al), b) for al in enumerate_lambda(p, j))

    @pytest.mark.parametrize("p", range(2, 9))
    def test_first_two_weights(self, rng, p):
        a, b = random_complex(rng, p), random_complex(rng, p)
        assert self._sum(p, 0, a, b) == pytest.approx(math.prod(b))
        expected = sum(a[i] ** 2 * math.prod(b[j] for j in range(p) if j not in (i, i + 1)) for i in range(p - 1))
        expected += a[p - 1] ** 2 * math.prod(b[1 : p - 1])
        assert self._sum(p, 1, a, b) == pytest.approx(expected, rel=1e-12)

    @pytest.mark.parametrize("m", range(1, 6))
    def test_even_top_weight(self, rng, m):
        a, b = random_complex(rng, 2 * m), random_complex(rng, 2 * m)
        expected = math.prod(a[2 * j] ** 2 for j in range(m)) + math.prod(a[2 * j - 1] ** 2 for j in range(1, m + 1))
        assert self._sum(2 * m, m, a, b) == pytest.approx(expected, rel=1e-12)

    @pytest.mark.parametrize("m", range(1, 6))
    def test_odd_top_weight(self, rng, m):
        p = 2 * m + 1
        a, b = random_complex(rng, p), random_complex(rng, p)
        expected = sum(
            b[2 * i] * math.prod(a[2 * j] ** 2 for j in range(i)) * math.prod(a[2 * j - 1] ** 2 for j in range(i + 1, m + 1))
            for i in range(m + 1)
        )
        expected += sum(
            b[2 * i - 1] * math.prod(a[2 * j - 1] ** 2 for j in range(1, i)) * math.prod(a[2 * j] ** 2 for j in range(i, m + 1))
            for i in range(1, m + 1)
        )
        assert self._sum(p, m, a, b) == pytest.approx(expected, rel=1e-12)


def test_index_basics():
    a = B("01010")
    assert a.order == 5 and a.length == 2 and a.support == (1, 3)
    assert str(a) == "01010"
    assert a.extend([1]) == B("010101")
    with pytest.raises(InvalidInputError):
        BinaryMultiIndex((0, 2))
