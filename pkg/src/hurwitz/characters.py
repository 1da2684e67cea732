"""Irreducible characters of ``S_d`` and the character-formula backend.

Production characters come from the Murnaghan-Nakayama rule on beta-sets
(bead positions of an abacus).  The Frobenius coefficient-extraction formula
is kept as a slow oracle for small degrees.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .errors import InfeasibleError
from .partitions import Partition, class_size, dimension, partitions_of
from .symmetric_group import HurwitzInstance

MAX_TABLE_DEGREE = 20
MAX_FROBENIUS_DEGREE = 8


def simple_class(d: int) -> Partition:
    """Cycle type of a transposition, ``(2, 1^{d-2})``."""
    if d < 2:
        raise ValueError("S_1 has no transpositions")
    return Partition((2,) + (1,) * (d - 2))


@lru_cache(maxsize=None)
def _mn(beta: frozenset[int], rho: tuple[int, ...]) -> int:
    if not rho:
        return 1
    n, rest = rho[0], rho[1:]
    total = 0
    for b in beta:
        target = b - n
        if target < 0 or target in beta:
            continue
        # beads jumped over = rows crossed by the rim hook, minus one
        between = sum(1 for c in beta if target < c < b)
        new_beta = (beta - {b}) | {target}
        value = _mn(frozenset(new_beta), rest)
        total += -value if between % 2 else value
    return total


def _beta_set(lam: Partition) -> frozenset[int]:
    m = len(lam)
    return frozenset(part + m - 1 - i for i, part in enumerate(lam))


def mn_character(lam: Iterable[int], mu: Iterable[int]) -> int:
    """``chi^lam_mu`` by the Murnaghan-Nakayama rule (memoised on shape and class tail)."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise ValueError("lam and mu must be partitions of the same integer")
    # strip the largest parts first; recursion depth is len(mu)
    return _mn(_beta_set(lam), tuple(mu))


@dataclass(frozen=True)
class CharacterTable:
    degree: int
    partitions: tuple[Partition, ...]
    values: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "_index", {p: i for i, p in enumerate(self.partitions)})

    def __call__(self, lam: Iterable[int], mu: Iterable[int]) -> int:
        idx = self._index  # type: ignore[attr-defined]
        return self.values[idx[Partition(lam)]][idx[Partition(mu)]]

    def to_csv(self) -> str:
        def label(p: Partition) -> str:
            return '"' + ",".join(map(str, p)) + '"'

        lines = ["lambda\\mu," + ",".join(label(p) for p in self.partitions)]
        for lam, row in zip(self.partitions, self.values):
            lines.append(label(lam) + "," + ",".join(str(v) for v in row))
        return "\n".join(lines) + "\n"


@lru_cache(maxsize=None)
def _table(d: int) -> CharacterTable:
    parts = partitions_of(d)
    values = tuple(tuple(mn_character(lam, mu) for mu in parts) for lam in parts)
    return CharacterTable(d, parts, values)


def character_table(d: int, max_degree: int = MAX_TABLE_DEGREE) -> CharacterTable:
    if d < 1:
        raise ValueError("degree must be positive")
    if d > max_degree:
        raise InfeasibleError(f"character table degree {d} exceeds bound {max_degree}")
    return _table(d)


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = defaultdict(int)
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    return {e: c for e, c in out.items() if c}


def frobenius_character(lam: Iterable[int], mu: Iterable[int]) -> int:
    """Coefficient of ``prod x_i^{lam_i + m - i}`` in ``Delta(x) p_mu(x)``, ``m = len(lam)``.

    Exact expansion of the multivariate polynomial; exponential in ``d``.
    """
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise ValueError("lam and mu must be partitions of the same integer")
    if lam.size > MAX_FROBENIUS_DEGREE:
        raise InfeasibleError(f"Frobenius expansion limited to d <= {MAX_FROBENIUS_DEGREE}")
    m = len(lam)

    def unit(i: int, k: int) -> tuple[int, ...]:
        e = [0] * m
        e[i] = k
        return tuple(e)

    poly = {(0,) * m: 1}
    for i in range(m):
        for j in range(i + 1, m):
            poly = _poly_mul(poly, {unit(i, 1): 1, unit(j, 1): -1})
    for part in mu:
        poly = _poly_mul(poly, {unit(i, part): 1 for i in range(m)})
    target = tuple(part + m - 1 - i for i, part in enumerate(lam))
    return poly.get(target, 0)


def central_character(lam: Iterable[int], mu: Iterable[int]) -> Fraction:
    """Scalar by which the class sum ``C_mu`` acts on the irreducible ``lam``."""
    lam, mu = Partition(lam), Partition(mu)
    return Fraction(class_size(mu) * mn_character(lam, mu), dimension(lam))


def character_disconnected(profile: Iterable[int], w: int, max_degree: int = MAX_TABLE_DEGREE) -> Fraction:
    """Disconnected Hurwitz number by the Burnside character sum, for any ``w >= 0``."""
    profile = Partition(profile)
    d = profile.size
    if d == 1:
        return Fraction(1 if w == 0 else 0)
    table = character_table(d, max_degree)
    simple = simple_class(d)
    dfact = math.factorial(d)
    total = Fraction(0)
    for lam in table.partitions:
        f = table(lam, (1,) * d)
        cc_mu = Fraction(class_size(profile) * table(lam, profile), f)
        cc_2 = Fraction(class_size(simple) * table(lam, simple), f)
        total += Fraction(f * f, dfact * dfact) * cc_mu * cc_2 ** w
    return total


def character_hurwitz(inst: HurwitzInstance) -> Fraction:
    return character_disconnected(inst.profile, inst.branch_count)
