"""Closed-form Hurwitz numbers: genus zero, its classical corollaries, and small degrees."""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import UnknownProfileError
from .partitions import Partition, aut_order


def psi_correlator_genus0(ms: Sequence[int]) -> Fraction:
    """Genus-zero descendant integral ``<tau_{m_1} ... tau_{m_n}>_0``.

    >>> psi_correlator_genus0((1, 0, 0, 0))
    Fraction(1, 1)
    """
    n = len(ms)
    if n < 3:
        raise ValueError("genus-zero correlators need at least three insertions")
    if any(m < 0 for m in ms):
        raise ValueError("descendant indices must be non-negative")
    if sum(ms) != n - 3:
        return Fraction(0)
    return Fraction(math.factorial(n - 3), math.prod(math.factorial(m) for m in ms))


def _compositions(total: int, parts: int) -> Iterable[tuple[int, ...]]:
    # stars and bars
    for bars in itertools.combinations(range(total + parts - 1), parts - 1):
        prev = -1
        out = []
        for b in bars + (total + parts - 1,):
            out.append(b - prev - 1)
            prev = b
        yield tuple(out)


def _prefactor(mu: Partition) -> Fraction:
    w = mu.size + len(mu) - 2
    return Fraction(math.factorial(w), aut_order(mu)) * math.prod(
        Fraction(m**m, math.factorial(m)) for m in mu
    )


def elsv_genus0(mu: Iterable[int]) -> Fraction:
    """Genus-zero ELSV: prefactor times ``int 1/prod(1 - mu_i psi_i)`` over M_{0,n}.

    The one- and two-point unstable integrals are ``1/mu_1^2`` and ``1/(mu_1 + mu_2)``.
    """
    mu = Partition(mu)
    n = len(mu)
    if n == 0:
        raise ValueError("profile must be nonempty")
    if n == 1:
        integral = Fraction(1, mu[0] ** 2)
    elif n == 2:
        integral = Fraction(1, mu[0] + mu[1])
    else:
        integral = Fraction(0)
        for ms in _compositions(n - 3, n):
            integral += psi_correlator_genus0(ms) * math.prod(m**e for m, e in zip(mu, ms))
    return _prefactor(mu) * integral


def hurwitz_genus0(mu: Iterable[int]) -> Fraction:
    """``(n+d-2)!/|Aut mu| * prod(mu_i^mu_i / mu_i!) * d^(n-3)``, exact for ``n < 3`` too."""
    mu = Partition(mu)
    if not mu:
        raise ValueError("profile must be nonempty")
    return _prefactor(mu) * Fraction(mu.size) ** (len(mu) - 3)


def denes_count(d: int) -> int:
    """Minimal transitive factorizations of a fixed ``d``-cycle into transpositions."""
    if d < 1:
        raise ValueError("d must be positive")
    return d ** (d - 2) if d >= 2 else 1


def arnold_count(mu1: int, mu2: int) -> int:
    """Minimal transitive factorizations of a fixed permutation of type ``(mu1, mu2)``."""
    return mu1**mu1 * mu2**mu2 * math.factorial(mu1 + mu2 - 1) // (
        math.factorial(mu1 - 1) * math.factorial(mu2 - 1)
    )


def crescimanno_taylor_count(d: int) -> Fraction:
    """Minimal transitive factorizations of the identity of ``S_d`` (``2d - 2`` transpositions)."""
    return math.factorial(2 * d - 2) * Fraction(d) ** (d - 3)


def _d2(g: int) -> Fraction:
    return Fraction(1, 2)


def _d3_21(g: int) -> Fraction:
    return Fraction(3 ** (2 * g + 3) - 3, math.factorial(3))


def _d3_3(g: int) -> Fraction:
    return Fraction(3 ** (2 * g))


def _d4_211(g: int) -> Fraction:
    return Fraction((2 ** (2 * g + 4) - 4) * (3 ** (2 * g + 5) - 3), math.factorial(4))


def _degree5(g: int) -> Fraction:
    e = 2 * g + 8
    return (
        Fraction(10**e, 7200)
        - Fraction(6**e, 288)
        + Fraction(5**e, 450)
        - Fraction(4**e, 72)
        + Fraction(3**e, 18)
        + Fraction(2**e, 12)
        - Fraction(5, 9)
    )


def _degree6(g: int) -> Fraction:
    e = 2 * g + 10
    return (
        Fraction(15**e, 2 * 360**2)
        - Fraction(10**e, 7200)
        + Fraction(9**e, 2 * 72**2)
        - Fraction(7**e, 2 * 24**2)
        + Fraction(6**e, 2 * 36**2)
        - Fraction(5**e, 360)
        + Fraction(4**e, 36)
        - Fraction(19, 324) * 3**e
        - Fraction(19, 144) * 2**e
        + Fraction(727, 1152)
    )


# profile id -> (degree, labelled profile, formula); the degree-5/6 labels are
# the ones printed next to the formulas, which do not identify the profile
SMALL_DEGREE_FORMULAS: dict[str, tuple[int, Partition, Callable[[int], Fraction]]] = {
    "2": (2, Partition((2,)), _d2),
    "2,1": (3, Partition((2, 1)), _d3_21),
    "3": (3, Partition((3,)), _d3_3),
    "2,1,1": (4, Partition((2, 1, 1)), _d4_211),
    "deg5": (5, Partition((2, 1)), _degree5),
    "deg6": (6, Partition((2, 1, 1, 1, 1)), _degree6),
}

# exponent offset: every printed power is base^(2g + offset)
SMALL_DEGREE_BASES: dict[str, tuple[int, list[int]]] = {
    "deg5": (8, [10, 6, 5, 4, 3, 2, 1]),
    "deg6": (10, [15, 10, 9, 7, 6, 5, 4, 3, 2, 1]),
}


def hurwitz_small_degree(g: int, profile_id: str) -> Fraction:
    """Evaluate one of Hurwitz's explicit small-degree formulas at genus ``g``."""
    if g < 0:
        raise ValueError("genus must be non-negative")
    try:
        _, _, formula = SMALL_DEGREE_FORMULAS[profile_id]
    except KeyError:
        raise UnknownProfileError(profile_id) from None
    return formula(g)
