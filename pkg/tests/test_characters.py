import math
import time
from fractions import Fraction

import pytest

from hurwitz.characters import (
    central_character,
    character_disconnected,
    character_hurwitz,
    character_table,
    frobenius_character,
    mn_character,
    simple_class,
)
from hurwitz.errors import InfeasibleError
from hurwitz.partitions import Partition, class_size, dimension, partitions_of
from hurwitz.series import connected_hurwitz
from hurwitz.symmetric_group import HurwitzInstance, class_algebra_hurwitz


def test_small_values():
    assert mn_character((2, 1), (1, 1, 1)) == 2
    assert frobenius_character((2,), (2,)) == 1
    assert frobenius_character((1, 1), (2,)) == -1
    assert simple_class(2) == (2,)
    assert simple_class(4) == (2, 1, 1)


def test_s3_table():
    table = character_table(3)
    assert table.values == ((1, 1, 1), (-1, 0, 2), (1, -1, 1))


@pytest.mark.parametrize("d", range(1, 11))
def test_trivial_sign_and_dimension(d):
    table = character_table(d)
    identity = (1,) * d
    for mu in partitions_of(d):
        assert table((d,), mu) == 1
        assert table(identity, mu) == (-1) ** (d - len(mu))
    for lam in partitions_of(d):
        assert table(lam, identity) == dimension(lam)


@pytest.mark.parametrize("d", range(1, 7))
def test_murnaghan_nakayama_equals_frobenius(d):
    table = character_table(d)
    for lam in partitions_of(d):
        for mu in partitions_of(d):
            assert frobenius_character(lam, mu) == table(lam, mu), (lam, mu)


def test_frobenius_degree_bound():
    with pytest.raises(InfeasibleError):
        frobenius_character((9,), (9,))


@pytest.mark.parametrize("d", range(1, 13))
def test_orthogonality(d):
    table = character_table(d)
    parts = table.partitions
    dfact = math.factorial(d)
    for i, lam in enumerate(parts):
        for j, rho in enumerate(parts[i:], start=i):
            row = sum(class_size(mu) * table(lam, mu) * table(rho, mu) for mu in parts)
            assert row == (dfact if i == j else 0)
    for i, mu in enumerate(parts):
        for nu in parts[i:]:
            col = sum(table(lam, mu) * table(lam, nu) for lam in parts)
            assert col == (dfact // class_size(mu) if mu == nu else 0)


@pytest.mark.parametrize("d", range(2, 13))
def test_central_character_of_C2_is_integer(d):
    for lam in partitions_of(d):
        assert central_character(lam, simple_class(d)).denominator == 1


@pytest.mark.parametrize(
    "lam, mu, expected",
    [((3,), (2, 1), 3), ((1, 1, 1), (2, 1), -3), ((2, 1), (1, 1, 1), 1), ((2, 2), (1, 1, 1, 1), 1)],
)
def test_central_character_examples(lam, mu, expected):
    assert central_character(lam, mu) == expected


def test_table_bound_and_csv():
    with pytest.raises(InfeasibleError):
        character_table(21)
    with pytest.raises(ValueError):
        character_table(0)
    csv = character_table(2).to_csv().splitlines()
    assert csv == ['lambda\\mu,"2","1,1"', '"2",1,1', '"1,1",-1,1']


def test_degree_16_table_builds_quickly():
    start = time.perf_counter()
    table = character_table(16)
    assert len(table.partitions) == 231
    assert time.perf_counter() - start < 60


@pytest.mark.parametrize(
    "g, mu, expected",
    [(1, (3,), Fraction(9)), (1, (2, 1), Fraction(81, 2)), (0, (1,), Fraction(1))],
)
def test_character_hurwitz_values(g, mu, expected):
    assert character_hurwitz(HurwitzInstance(g, Partition(mu))) == expected


@pytest.mark.parametrize("mu", [mu for d in range(1, 7) for mu in partitions_of(d)])
@pytest.mark.parametrize("g", range(0, 4))
def test_character_equals_class_algebra(mu, g):
    inst = HurwitzInstance(g, mu)
    assert character_hurwitz(inst) == class_algebra_hurwitz(inst)


@pytest.mark.parametrize("d", range(1, 7))
def test_crescimanno_taylor_after_connected_extraction(d):
    inst = HurwitzInstance(0, Partition([1] * d))
    expected = Fraction(math.factorial(2 * d - 2), math.factorial(d)) * Fraction(d) ** (d - 3)
    assert connected_hurwitz(inst, character_disconnected) == expected


def test_parity_guard():
    # w of the wrong parity can never be hit by a cover; the sum vanishes exactly
    assert character_disconnected((2, 1), 4) == 0
    assert character_disconnected((3,), 3) == 0
