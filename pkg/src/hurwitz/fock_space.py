"""Charge-zero semi-infinite wedge, truncated to finitely supported vectors.

Basis vectors ``v_lam`` are indexed by partitions; the bead positions of
``v_lam`` are ``lam_i - i + 1/2``.  Internally a position ``s`` is stored as
the integer ``s - 1/2``.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import InfeasibleError
from .partitions import Partition, class_size, conjugate, content_sum_maya
from .symmetric_group import HurwitzInstance

MAX_FOCK_DEGREE = 20
HALF = Fraction(1, 2)


@dataclass(frozen=True)
class FockVector:
    amplitudes: Mapping[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for lam, c in self.amplitudes.items():
            if c:
                clean[Partition(lam)] = Fraction(c)
        object.__setattr__(self, "amplitudes", clean)

    @classmethod
    def basis(cls, lam: Iterable[int] = ()) -> "FockVector":
        return cls({Partition(lam): Fraction(1)})

    @classmethod
    def vacuum(cls) -> "FockVector":
        return cls.basis(())

    def __getitem__(self, lam: Iterable[int]) -> Fraction:
        return self.amplitudes.get(Partition(lam), Fraction(0))

    def __iter__(self) -> Iterator[tuple[Partition, Fraction]]:
        return iter(self.amplitudes.items())

    def __add__(self, other: "FockVector") -> "FockVector":
        out = defaultdict(Fraction, self.amplitudes)
        for lam, c in other.amplitudes.items():
            out[lam] += c
        return FockVector(out)

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "FockVector":
        return FockVector({lam: scalar * c for lam, c in self.amplitudes.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.amplitudes == other.amplitudes

    def __hash__(self) -> int:
        return hash(frozenset(self.amplitudes.items()))

    def __repr__(self) -> str:
        if not self.amplitudes:
            return "0"
        return " + ".join(f"{c}*v{tuple(lam)}" for lam, c in sorted(self.amplitudes.items()))

    def support(self) -> list[Partition]:
        return sorted(self.amplitudes, key=lambda p: (p.size, [-x for x in p]))


def inner(u: FockVector, v: FockVector) -> Fraction:
    return sum((c * v[lam] for lam, c in u), Fraction(0))


def _linear(op):
    def apply(v: FockVector) -> FockVector:
        out: dict[Partition, Fraction] = defaultdict(Fraction)
        for lam, c in v:
            for mu, a in op(lam):
                out[mu] += a * c
        return FockVector(out)

    return apply


@dataclass(frozen=True)
class RibbonMove:
    source: Partition
    target: Partition
    length: int
    height: int

    @property
    def sign(self) -> int:
        return -1 if (self.height - 1) % 2 else 1


def removable_ribbons(lam: Partition, n: int) -> list[RibbonMove]:
    """Border strips of length ``n`` removable from ``lam``, one per cell with hook ``n``.

    The strip attached to cell ``(i, j)`` runs along the rim from the end of
    row ``i`` to the bottom of column ``j``.
    """
    lam = Partition(lam)
    lamt = conjugate(lam)
    moves = []
    for i, row in enumerate(lam):
        for j in range(row):
            bottom = lamt[j] - 1
            if row - j + bottom - i != n:
                continue
            new = list(lam)
            for r in range(i, bottom):
                new[r] = lam[r + 1] - 1
            new[bottom] = j
            moves.append(RibbonMove(lam, Partition(x for x in new if x), n, bottom - i + 1))
    return moves


def addable_ribbons(lam: Partition, n: int) -> list[RibbonMove]:
    """Border strips of length ``n`` that can be added to ``lam``, found by bead moves."""
    lam = Partition(lam)
    depth = len(lam) + n
    beads = [(lam[r] if r < len(lam) else 0) - (r + 1) for r in range(depth)]
    occupied = set(beads)
    moves = []
    for b in beads:
        if b + n in occupied:
            continue
        new_beads = sorted((occupied - {b}) | {b + n}, reverse=True)
        new = Partition(x for x in (p + r + 1 for r, p in enumerate(new_beads)) if x)
        padded_old = list(lam) + [0] * (len(new) - len(lam))
        height = sum(1 for a, c in zip(padded_old, list(new)) if a != c)
        moves.append(RibbonMove(lam, new, n, height))
    return moves


def apply_alpha(n: int, v: FockVector) -> FockVector:
    """Bosonic operator: remove (``n > 0``) or add (``n < 0``) ribbons of length ``|n|``.

    >>> apply_alpha(3, FockVector.basis((5, 4, 3)))
    -1*v(3, 3, 3) + -1*v(5, 2, 2) + 1*v(5, 4)
    """
    if n == 0:
        raise ValueError("alpha_0 is not used here")
    moves = removable_ribbons if n > 0 else addable_ribbons
    return _linear(lambda lam: ((m.target, m.sign) for m in moves(lam, abs(n))))(v)


def apply_F2(v: FockVector) -> FockVector:
    """Content operator, diagonal with eigenvalue the regularised ``sum k^2/2`` over beads."""
    return FockVector({lam: content_sum_maya(lam) * c for lam, c in v})


def _to_int_position(k: Fraction) -> int:
    k = Fraction(k)
    p = k - HALF
    if p.denominator != 1:
        raise ValueError(f"{k} is not a half-integer")
    return int(p)


def _beads(lam: Partition, floor: int) -> list[int]:
    """Occupied integer positions ``> floor`` in decreasing order (everything ``<= floor`` is occupied)."""
    out = []
    r = 0
    while True:
        p = (lam[r] if r < len(lam) else 0) - (r + 1)
        if p <= floor:
            return out
        out.append(p)
        r += 1


def _psi(p: int, beads: list[int]) -> tuple[int, list[int]] | None:
    if p in beads:
        return None
    above = sum(1 for b in beads if b > p)
    return (-1 if above % 2 else 1), sorted(beads + [p], reverse=True)


def _psi_star(p: int, beads: list[int]) -> tuple[int, list[int]] | None:
    if p not in beads:
        return None
    above = sum(1 for b in beads if b > p)
    return (-1 if above % 2 else 1), [b for b in beads if b != p]


def _from_beads(beads: list[int], floor: int) -> Partition:
    # charge zero: the r-th bead from the top sits at lam_r - r (1-based r)
    full = beads + list(range(floor, floor - 2, -1))
    return Partition(x for x in (p + r + 1 for r, p in enumerate(full)) if x > 0)


def _e_single(i: int, j: int, lam: Partition) -> list[tuple[Partition, int]]:
    floor = min(i, j, -len(lam) - 1) - 1
    beads = _beads(lam, floor)
    if j >= 0:
        step = _psi_star(j, beads)
        if step is None:
            return []
        s1, mid = step
        step = _psi(i, mid)
        if step is None:
            return []
        s2, out = step
        return [(_from_beads(out, floor), s1 * s2)]
    # j < 0: normal ordering, -psi*_j psi_i
    step = _psi(i, beads)
    if step is None:
        return []
    s1, mid = step
    step = _psi_star(j, mid)
    if step is None:
        return []
    s2, out = step
    return [(_from_beads(out, floor), -s1 * s2)]


def apply_E(i: Fraction, j: Fraction, v: FockVector) -> FockVector:
    """Normally ordered ``psi_i psi*_j``: move a bead from ``j`` to ``i`` with wedge signs."""
    pi, pj = _to_int_position(i), _to_int_position(j)
    return _linear(lambda lam: _e_single(pi, pj, lam))(v)


def alpha_from_E(n: int, v: FockVector) -> FockVector:
    """``sum_k E_{k-n, k}`` restricted to the finitely many nonzero terms."""
    out = FockVector()
    for lam, c in v:
        lo = -len(lam) - abs(n) - 1
        hi = (lam[0] if lam else 0) + abs(n) + 1
        for p in range(lo, hi + 1):
            k = Fraction(2 * p + 1, 2)
            out = out + c * apply_E(k - n, k, FockVector.basis(lam))
    return out


def vacuum_pairing_exp_alpha1(v: FockVector) -> Fraction:
    """``<0| e^{alpha_1} v`` by exhausting ``alpha_1``; only ``alpha_1^d / d!`` reaches degree 0."""
    total = Fraction(0)
    by_size: dict[int, dict[Partition, Fraction]] = defaultdict(dict)
    for lam, c in v:
        by_size[lam.size][lam] = c
    for d, amps in by_size.items():
        u = FockVector(amps)
        for _ in range(d):
            u = apply_alpha(1, u)
        total += u[()] / math.factorial(d)
    return total


def fock_disconnected(profile: Iterable[int], w: int, max_degree: int = MAX_FOCK_DEGREE) -> Fraction:
    """``|C_mu|/d! <e^{alpha_1} F_2^w prod alpha_{-mu_i}>``, evaluated right to left."""
    profile = Partition(profile)
    d = profile.size
    if d > max_degree:
        raise InfeasibleError(f"Fock backend degree {d} exceeds bound {max_degree}")
    v = FockVector.vacuum()
    for part in profile:
        v = apply_alpha(-part, v)
    for _ in range(w):
        v = apply_F2(v)
    return Fraction(class_size(profile), math.factorial(d)) * vacuum_pairing_exp_alpha1(v)


def fock_hurwitz(inst: HurwitzInstance) -> Fraction:
    return fock_disconnected(inst.profile, inst.branch_count)


def maya_diagram(lam: Partition, width: int = 6) -> str:
    """ASCII beads (``*``) and gaps (``o``) at positions ``width - 1/2`` down to ``-width + 1/2``.

    Positive positions are on the left, as in the usual drawing; ``|`` marks zero.
    """
    lam = Partition(lam)
    occupied = set(_beads(lam, -width - 1))
    cells = []
    for p in range(width - 1, -width - 1, -1):
        if p == -1:
            cells.append("|")
        cells.append("*" if p in occupied else "o")
    return "".join(cells)
