"""Permutations of ``{1..d}``, the tuple-counting backend and the class-algebra backend.

Permutations multiply right to left: ``(p * q)(x) = p(q(x))``.
"""

from __future__ import annotations

import itertools
import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import InfeasibleError
from .partitions import Partition, class_size, partitions_of

DEFAULT_WORK_BOUND = 10**8


class Permutation(tuple):
    """A bijection of ``{1..d}``, stored as the tuple of images.

    >>> p = Permutation.from_cycles(5, (1, 4))
    >>> q = Permutation.from_cycles(5, (1, 2, 3, 4, 5))
    >>> (p * q).cycles()
    [(1, 2, 3), (4, 5)]
    """

    __slots__ = ()

    def __new__(cls, images: Iterable[int]) -> "Permutation":
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, d: int) -> "Permutation":
        return cls(range(1, d + 1))

    @classmethod
    def from_cycles(cls, d: int, *cycles: Sequence[int]) -> "Permutation":
        images = list(range(1, d + 1))
        for cyc in cycles:
            cyc = list(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a - 1] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self)

    def __call__(self, x: int) -> int:
        return self[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if len(self) != len(other):
            raise ValueError("degree mismatch")
        return Permutation(self[other[i] - 1] for i in range(len(self)))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, len(self) + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            if include_fixed or len(cyc) > 1:
                out.append(tuple(cyc))
        return out


def cycle_type(p: Sequence[int]) -> Partition:
    """Cycle type of a permutation given as 1-based images (fixed points included)."""
    n = len(p)
    seen = [False] * n
    lengths = []
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j] - 1
            length += 1
        lengths.append(length)
    return Partition(lengths)


def transpositions(d: int) -> list[tuple[int, int]]:
    """All ``(a, b)`` with ``1 <= a < b <= d`` in lexicographic order."""
    return list(itertools.combinations(range(1, d + 1), 2))


def is_transitive(ts: Sequence[Sequence[int]], d: int) -> bool:
    """Whether the group generated by ``ts`` has a single orbit on ``{1..d}``.

    Generators are image tuples (or :class:`Permutation`) of degree ``d``.
    """
    parent = list(range(d + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for t in ts:
        for a, b in _cycle_edges(t):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    return len({find(x) for x in range(1, d + 1)}) <= 1


def _cycle_edges(p: Sequence[int]) -> list[tuple[int, int]]:
    return [(i + 1, p[i]) for i in range(len(p)) if p[i] != i + 1]


@dataclass(frozen=True)
class HurwitzInstance:
    """A genus and a ramification profile over infinity.

    Negative genus is allowed so that disconnected covers with several
    rational components (e.g. two sheets, ``g = -1``) can be addressed; the
    only hard requirement is a non-negative branch count.
    """

    genus: int
    profile: Partition

    def __post_init__(self) -> None:
        object.__setattr__(self, "profile", Partition(self.profile))
        if not self.profile:
            raise ValueError("profile must be a nonempty partition")
        if self.branch_count < 0:
            raise ValueError(f"negative branch count for genus {self.genus}, profile {self.profile}")

    @classmethod
    def from_branch_count(cls, profile: Iterable[int], w: int) -> "HurwitzInstance":
        profile = Partition(profile)
        twice_g = w + 2 - len(profile) - sum(profile)
        if twice_g % 2:
            raise ValueError(f"w={w} has the wrong parity for profile {profile}")
        return cls(twice_g // 2, profile)

    @property
    def degree(self) -> int:
        return sum(self.profile)

    @property
    def length(self) -> int:
        return len(self.profile)

    @property
    def branch_count(self) -> int:
        return 2 * self.genus - 2 + len(self.profile) + sum(self.profile)


def _canonical_blocks(labels: tuple[int, ...]) -> tuple[int, ...]:
    relabel: dict[int, int] = {}
    return tuple(relabel.setdefault(x, len(relabel)) for x in labels)


def brute_force_hurwitz(
    inst: HurwitzInstance,
    connected: bool,
    work_bound: int = DEFAULT_WORK_BOUND,
) -> Fraction:
    """Count ordered tuples of transpositions directly and divide by ``d!``.

    Tuples are never materialised: the count is accumulated prefix by prefix
    over states ``(partial product, orbit partition)``, so tuples sharing a
    prefix share the work.  The orbit partition is only tracked when
    ``connected`` is requested.
    """
    d, w = inst.degree, inst.branch_count
    trans = transpositions(d)
    if len(trans) ** w > work_bound:
        raise InfeasibleError(
            f"instance too large for brute force: {len(trans)}^{w} tuples exceeds bound {work_bound}"
        )
    if connected and inst.genus < 0:
        return Fraction(0)
    # swapping two images of a 0-based image tuple = right-multiplying by (a b)
    states: dict[tuple, int] = {(tuple(range(d)), tuple(range(d)) if connected else ()): 1}
    for _ in range(w):
        nxt: dict[tuple, int] = defaultdict(int)
        for (perm, blocks), count in states.items():
            for a, b in trans:
                p = list(perm)
                p[a - 1], p[b - 1] = p[b - 1], p[a - 1]
                if connected:
                    ba, bb = blocks[a - 1], blocks[b - 1]
                    nb = blocks if ba == bb else _canonical_blocks(
                        tuple(ba if x == bb else x for x in blocks)
                    )
                else:
                    nb = ()
                nxt[(tuple(p), nb)] += count
        states = nxt
    total = 0
    for (perm, blocks), count in states.items():
        if connected and len(set(blocks)) > 1:
            continue
        if cycle_type([x + 1 for x in perm]) == inst.profile:
            total += count
    return Fraction(total, math.factorial(d))


def enumerate_factorizations(inst: HurwitzInstance, connected: bool) -> int:
    """Literal enumeration of every transposition tuple; tiny instances only."""
    d, w = inst.degree, inst.branch_count
    trans = [Permutation.from_cycles(d, t) for t in transpositions(d)]
    count = 0
    for tup in itertools.product(trans, repeat=w):
        prod = Permutation.identity(d)
        for t in tup:
            prod = prod * t
        if cycle_type(prod) != inst.profile:
            continue
        if connected and not is_transitive(tup, d):
            continue
        count += 1
    return count


@dataclass(frozen=True)
class ClassVector:
    """An element of the centre of ``Q[S_d]`` in the class-sum basis."""

    degree: int
    coefficients: Mapping[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for mu, c in self.coefficients.items():
            mu = Partition(mu)
            if sum(mu) != self.degree:
                raise ValueError(f"{mu} is not a partition of {self.degree}")
            if c:
                clean[mu] = Fraction(c)
        object.__setattr__(self, "coefficients", clean)

    @classmethod
    def basis(cls, mu: Iterable[int]) -> "ClassVector":
        mu = Partition(mu)
        return cls(sum(mu), {mu: Fraction(1)})

    def __getitem__(self, mu: Iterable[int]) -> Fraction:
        return self.coefficients.get(Partition(mu), Fraction(0))

    def __add__(self, other: "ClassVector") -> "ClassVector":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        out = dict(self.coefficients)
        for mu, c in other.coefficients.items():
            out[mu] = out.get(mu, 0) + c
        return ClassVector(self.degree, out)

    def __rmul__(self, scalar) -> "ClassVector":
        return ClassVector(self.degree, {mu: scalar * c for mu, c in self.coefficients.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClassVector):
            return NotImplemented
        return self.degree == other.degree and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash((self.degree, frozenset(self.coefficients.items())))

    def as_list(self) -> list[Fraction]:
        """Coefficients in canonical partition order."""
        return [self[mu] for mu in partitions_of(self.degree)]


def _representative(mu: Partition) -> list[int]:
    images = []
    start = 1
    for part in mu:
        images.extend(range(start + 1, start + part))
        images.append(start)
        start += part
    return images


@lru_cache(maxsize=None)
def transposition_transitions(d: int) -> dict[Partition, dict[Partition, int]]:
    """For one representative of each class, how many transpositions land in each class.

    Cached per degree; the result must not be mutated.
    """
    table: dict[Partition, dict[Partition, int]] = {}
    for mu in partitions_of(d):
        rep = _representative(mu)
        counts: dict[Partition, int] = defaultdict(int)
        for a, b in transpositions(d):
            # (a b) o rep
            img = [b if x == a else a if x == b else x for x in rep]
            counts[cycle_type(img)] += 1
        table[mu] = dict(counts)
    return table


@lru_cache(maxsize=None)
def _c2_matrix(d: int) -> dict[Partition, dict[Partition, Fraction]]:
    trans = transposition_transitions(d)
    return {
        mu: {nu: Fraction(class_size(mu) * k, class_size(nu)) for nu, k in row.items()}
        for mu, row in trans.items()
    }


def multiply_by_C2(v: ClassVector) -> ClassVector:
    """Left multiplication by the sum of all transpositions."""
    if v.degree < 2:
        return ClassVector(v.degree, {})
    mat = _c2_matrix(v.degree)
    out: dict[Partition, Fraction] = defaultdict(Fraction)
    for mu, c in v.coefficients.items():
        for nu, k in mat[mu].items():
            out[nu] += c * k
    return ClassVector(v.degree, out)


def class_algebra_disconnected(profile: Iterable[int], w: int) -> Fraction:
    """``[C_e] C_mu C_2^w / d!`` for an arbitrary branch count ``w``."""
    profile = Partition(profile)
    d = sum(profile)
    if (w - (d - len(profile))) % 2:
        return Fraction(0)
    v = ClassVector.basis(profile)
    for _ in range(w):
        v = multiply_by_C2(v)
    return v[(1,) * d] / math.factorial(d)


def class_algebra_hurwitz(inst: HurwitzInstance) -> Fraction:
    """Disconnected Hurwitz number from powers of the transposition class sum."""
    return class_algebra_disconnected(inst.profile, inst.branch_count)
