"""Integer partitions: enumeration, conjugation, hooks, class sizes, contents.

Partitions are immutable tuples of weakly decreasing positive integers.  All
modules index by the reverse-lexicographic order produced by
:func:`partitions_of`.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    >>> Partition([1, 3, 1])
    Partition(3, 1, 1)
    >>> Partition((2, 2)).size, Partition((2, 2)).length
    (4, 2)
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if parts and parts[-1] <= 0:
            raise ValueError(f"partition parts must be positive, got {parts}")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition{tuple.__repr__(tuple(self))}" if len(self) != 1 else f"Partition({self[0]})"

    def __str__(self) -> str:
        return format_partition(self)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self))


def parse_partition(text: str) -> Partition:
    """Parse ``"2,1,1"`` or the exponent shorthand ``"2,1^2"``.

    An empty string (or ``"()"``) is the empty partition.
    """
    text = text.strip().strip("()[]")
    if not text:
        return Partition()
    parts: list[int] = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        m = re.fullmatch(r"(\d+)(?:\^(\d+))?", chunk)
        if m is None:
            raise ValueError(f"cannot parse partition component {chunk!r}")
        part = int(m.group(1))
        count = int(m.group(2)) if m.group(2) is not None else 1
        parts.extend([part] * count)
    return Partition(parts)


def format_partition(mu: Iterable[int]) -> str:
    return ",".join(str(p) for p in mu)


@lru_cache(maxsize=None)
def _partitions(d: int, largest: int) -> tuple[Partition, ...]:
    if d == 0:
        return (Partition(),)
    out = []
    for first in range(min(d, largest), 0, -1):
        for rest in _partitions(d - first, first):
            out.append(Partition((first,) + tuple(rest)))
    return tuple(out)


def partitions_of(d: int) -> tuple[Partition, ...]:
    """All partitions of ``d`` in reverse-lexicographic order.

    >>> [tuple(p) for p in partitions_of(3)]
    [(3,), (2, 1), (1, 1, 1)]
    """
    if d < 0:
        raise ValueError("d must be non-negative")
    return _partitions(d, d)


def partitions_up_to(dmax: int, start: int = 1) -> Iterator[Partition]:
    for d in range(start, dmax + 1):
        yield from partitions_of(d)


def aut_order(mu: Partition) -> int:
    """``prod_i m_i(mu)!``, the number of part permutations fixing ``mu``."""
    return math.prod(math.factorial(m) for m in Counter(mu).values())


def z_factor(mu: Partition) -> int:
    """Centralizer order ``prod_i i^{m_i} m_i!`` of a permutation of type ``mu``."""
    return math.prod(i ** m * math.factorial(m) for i, m in Counter(mu).items())


def class_size(mu: Partition) -> int:
    """Number of permutations in ``S_d`` with cycle type ``mu``."""
    return math.factorial(sum(mu)) // z_factor(mu)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return Partition()
    return Partition(sum(1 for part in lam if part > j) for j in range(lam[0]))


@dataclass(frozen=True)
class HookData:
    hooks: tuple[tuple[int, ...], ...]
    dimension: int


def hook_data(lam: Partition) -> HookData:
    """Hook lengths of every cell and the dimension ``f^lam = d!/prod(hooks)``.

    The empty partition has no cells and dimension 1.
    """
    lam = Partition(lam)
    lamt = conjugate(lam)
    hooks = tuple(
        tuple(lam[i] - j + lamt[j] - i - 1 for j in range(lam[i]))
        for i in range(len(lam))
    )
    prod = math.prod(h for row in hooks for h in row)
    return HookData(hooks=hooks, dimension=math.factorial(lam.size) // prod)


def dimension(lam: Partition) -> int:
    return hook_data(lam).dimension


def cells(lam: Iterable[int]) -> Iterator[tuple[int, int]]:
    for i, row in enumerate(lam):
        for j in range(row):
            yield i, j


def content_sum(lam: Partition) -> int:
    """Sum of ``j - i`` over the cells ``(i, j)`` of the Young diagram."""
    return sum(j - i for i, j in cells(lam))


def maya_positions(lam: Partition, depth: int | None = None) -> list[Fraction]:
    """The first ``len(lam) + depth`` bead positions ``lam_i - i + 1/2`` (1-based i)."""
    depth = len(lam) if depth is None else depth
    n = len(lam) + depth
    return [Fraction(2 * ((lam[i] if i < len(lam) else 0) - (i + 1)) + 1, 2) for i in range(n)]


def content_sum_maya(lam: Partition) -> Fraction:
    """Content sum from bead positions: ``sum k^2/2`` over the state, minus the vacuum's.

    Only the first ``len(lam)`` beads differ from the vacuum, so the
    regularised difference is a finite sum.
    """
    total = Fraction(0)
    for i, part in enumerate(lam, start=1):
        occupied = Fraction(2 * (part - i) + 1, 2)
        vacuum = Fraction(2 * (-i) + 1, 2)
        total += (occupied * occupied - vacuum * vacuum) / 2
    return total
