import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hurwitz.characters import character_disconnected
from hurwitz.errors import InfeasibleError
from hurwitz.fock_space import (
    FockVector,
    RibbonMove,
    addable_ribbons,
    alpha_from_E,
    apply_alpha,
    apply_E,
    apply_F2,
    fock_disconnected,
    fock_hurwitz,
    inner,
    maya_diagram,
    removable_ribbons,
    vacuum_pairing_exp_alpha1,
)
from hurwitz.partitions import Partition, content_sum, dimension, partitions_of
from hurwitz.symmetric_group import HurwitzInstance

v = FockVector.basis
HALF = Fraction(1, 2)
small = [Partition()] + [lam for d in range(1, 7) for lam in partitions_of(d)]


def test_alpha3_on_543():
    # the length-3 strips of (5,4,3): heights 1, 2, 3
    assert apply_alpha(3, v((5, 4, 3))) == v((5, 4)) - v((5, 2, 2)) - v((3, 3, 3))


def test_alpha_minus3_on_31():
    # added strips of heights 1, 3, 3 and the vertical strip of height 3 has sign +
    assert apply_alpha(-3, v((3, 1))) == v((6, 1)) - v((3, 2, 2)) + v((3, 1, 1, 1, 1))


def test_ribbon_moves_are_border_strips():
    for lam in small:
        for n in range(1, 5):
            for move in removable_ribbons(lam, n):
                assert move.target.size == lam.size - n
                assert all(a >= b for a, b in zip(lam, list(move.target) + [0] * len(lam)))
                assert move.sign == (-1) ** (move.height - 1)
            for move in addable_ribbons(lam, n):
                assert move.target.size == lam.size + n
            removed = {m.target for m in removable_ribbons(lam, n)}
            for mu in partitions_of(lam.size + n) if lam.size + n <= 8 else []:
                back = {m.target for m in removable_ribbons(mu, n)}
                assert (lam in back) == (mu in {m.target for m in addable_ribbons(lam, n)})
            assert len(removed) == len(removable_ribbons(lam, n))


def test_ribbon_sign():
    assert RibbonMove(Partition([1, 1]), Partition(), 2, 2).sign == -1
    assert RibbonMove(Partition([2]), Partition(), 2, 1).sign == 1


def test_E_example():
    assert apply_E(-HALF, Fraction(7, 2), v((4, 3, 1))) == -1 * v((2, 1, 1))


@pytest.mark.parametrize("k", [Fraction(2 * p + 1, 2) for p in range(-5, 5)])
def test_E_diagonal_kills_vacuum(k):
    assert apply_E(k, k, FockVector.vacuum()) == FockVector()


def test_E_diagonal_on_partition_is_normally_ordered():
    # :psi_k psi*_k: counts an occupied positive site or an empty negative one
    lam = Partition([2])  # beads at 3/2, -3/2, -5/2, ...; gap at -1/2
    assert apply_E(Fraction(3, 2), Fraction(3, 2), v(lam)) == v(lam)
    assert apply_E(-HALF, -HALF, v(lam)) == -1 * v(lam)
    assert apply_E(HALF, HALF, v(lam)) == FockVector()


@pytest.mark.parametrize("n", [1, 2, 3, 4, -1, -2, -3, -4])
def test_alpha_is_a_sum_of_E(n):
    for lam in small:
        assert alpha_from_E(n, v(lam)) == apply_alpha(n, v(lam)), (n, lam)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_adjointness(n):
    for lam in small:
        for mu in small:
            assert inner(apply_alpha(n, v(lam)), v(mu)) == inner(v(lam), apply_alpha(-n, v(mu)))


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_commutator(m):
    for lam in small:
        u = v(lam)
        comm = apply_alpha(m, apply_alpha(-m, u)) - apply_alpha(-m, apply_alpha(m, u))
        assert comm == m * u


def test_distinct_alphas_commute():
    for lam in small:
        u = v(lam)
        assert apply_alpha(2, apply_alpha(-3, u)) == apply_alpha(-3, apply_alpha(2, u))


@pytest.mark.parametrize("lam", [lam for d in range(1, 9) for lam in partitions_of(d)])
def test_alpha1_power_counts_tableaux(lam):
    u = v(lam)
    for _ in range(lam.size):
        u = apply_alpha(1, u)
    assert u == dimension(lam) * FockVector.vacuum()
    assert vacuum_pairing_exp_alpha1(v(lam)) == Fraction(dimension(lam), math.factorial(lam.size))


def test_F2_examples():
    assert apply_F2(FockVector.vacuum()) == FockVector()
    assert apply_F2(v((3,))) == 3 * v((3,))
    assert apply_F2(v((1, 1))) == -1 * v((1, 1))


@given(st.integers(1, 10).flatmap(lambda d: st.sampled_from(partitions_of(d))))
def test_F2_eigenvalue_is_content_sum(lam):
    assert apply_F2(v(lam)) == content_sum(lam) * v(lam)


def test_alpha_minus_mu_on_vacuum_gives_characters():
    # prod alpha_{-mu_i} v_0 = sum_lam chi^lam_mu v_lam
    from hurwitz.characters import character_table

    for d in range(1, 7):
        table = character_table(d)
        for mu in partitions_of(d):
            u = FockVector.vacuum()
            for part in mu:
                u = apply_alpha(-part, u)
            assert u == FockVector({lam: table(lam, mu) for lam in partitions_of(d)})


@pytest.mark.parametrize(
    "g, mu, expected", [(1, (3,), Fraction(9)), (0, (1,), Fraction(1)), (1, (2, 1), Fraction(81, 2))]
)
def test_fock_values(g, mu, expected):
    assert fock_hurwitz(HurwitzInstance(g, Partition(mu))) == expected


@pytest.mark.parametrize("mu", [mu for d in range(1, 6) for mu in partitions_of(d)])
@pytest.mark.parametrize("g", range(0, 3))
def test_fock_equals_character(mu, g):
    inst = HurwitzInstance(g, mu)
    assert fock_hurwitz(inst) == character_disconnected(mu, inst.branch_count)


def test_fock_bound():
    with pytest.raises(InfeasibleError):
        fock_disconnected((21,), 0)


def test_maya_diagram():
    assert maya_diagram(Partition()) == "oooooo|******"
    assert maya_diagram(Partition([1])) == "ooooo*|o*****"
    assert maya_diagram(Partition([4, 3, 1, 1])) == "oo*o*o|o**o**"


def test_printed_alpha_examples_are_inconsistent():
    # a length-3 strip removed from a partition of 12 leaves a partition of 9
    assert Partition([3, 1, 1]).size != 12 - 3
    # the strip (5,4,3) -> (5,4) lies in one row, so its sign is +
    (move,) = [m for m in removable_ribbons(Partition([5, 4, 3]), 3) if m.target == (5, 4)]
    assert move.height == 1 and move.sign == 1
    # the strip (3,1) -> (3,1,1,1,1) spans three rows, so its sign is +
    (move,) = [m for m in addable_ribbons(Partition([3, 1]), 3) if m.target == (3, 1, 1, 1, 1)]
    assert move.height == 3 and move.sign == 1
