"""Truncated generating functions in ``t`` and ``p_1, p_2, ...``.

A term is ``c * p_mu * t^w``; ``p_i`` has weight ``i``.  Series keep only
terms with ``|mu| <= D`` and ``w <= W``.  The Hurwitz generating functions
store ``h / w!`` at ``p_mu t^w``.
"""

from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping

from .formatting import format_rational
from .partitions import Partition, partitions_of
from .symmetric_group import HurwitzInstance

Key = tuple[Partition, int]
# (profile, w) -> Hurwitz number
Source = Callable[[Partition, int], Fraction]


@dataclass(frozen=True)
class TruncatedSeries:
    D: int
    W: int
    coefficients: Mapping[Key, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean: dict[Key, Fraction] = {}
        for (mu, w), c in self.coefficients.items():
            mu = Partition(mu)
            if c and mu.size <= self.D and 0 <= w <= self.W:
                clean[(mu, w)] = Fraction(c)
        object.__setattr__(self, "coefficients", clean)

    @classmethod
    def one(cls, D: int, W: int) -> "TruncatedSeries":
        return cls(D, W, {(Partition(), 0): Fraction(1)})

    def __getitem__(self, key: tuple[Iterable[int], int]) -> Fraction:
        mu, w = key
        return self.coefficients.get((Partition(mu), w), Fraction(0))

    def __iter__(self) -> Iterator[tuple[Key, Fraction]]:
        return iter(self.coefficients.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.D, self.W, self.coefficients) == (other.D, other.W, other.coefficients)

    def __hash__(self) -> int:
        return hash((self.D, self.W, frozenset(self.coefficients.items())))

    def is_zero(self) -> bool:
        return not self.coefficients

    def constant_term(self) -> Fraction:
        return self[(), 0]

    def _check(self, other: "TruncatedSeries") -> None:
        if (self.D, self.W) != (other.D, other.W):
            raise ValueError("truncation caps differ")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        out = defaultdict(Fraction, self.coefficients)
        for k, c in other.coefficients.items():
            out[k] += c
        return TruncatedSeries(self.D, self.W, out)

    def __neg__(self) -> "TruncatedSeries":
        return (-1) * self

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __rmul__(self, scalar) -> "TruncatedSeries":
        return TruncatedSeries(self.D, self.W, {k: scalar * c for k, c in self.coefficients.items()})

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self.__rmul__(other)
        self._check(other)
        out: dict[Key, Fraction] = defaultdict(Fraction)
        for (mu, w), a in self.coefficients.items():
            for (nu, v), b in other.coefficients.items():
                if mu.size + nu.size <= self.D and w + v <= self.W:
                    out[(Partition(mu + nu), w + v)] += a * b
        return TruncatedSeries(self.D, self.W, out)

    def truncate(self, D: int, W: int) -> "TruncatedSeries":
        return TruncatedSeries(D, W, self.coefficients)

    def d_dt(self) -> "TruncatedSeries":
        return TruncatedSeries(
            self.D, self.W, {(mu, w - 1): w * c for (mu, w), c in self.coefficients.items() if w > 0}
        )

    def d_dp(self, i: int) -> "TruncatedSeries":
        out = {}
        for (mu, w), c in self.coefficients.items():
            m = mu.count(i)
            if m:
                rest = list(mu)
                rest.remove(i)
                out[(Partition(rest), w)] = m * c
        return TruncatedSeries(self.D, self.W, out)

    def times_p(self, *indices: int) -> "TruncatedSeries":
        return TruncatedSeries(
            self.D, self.W, {(Partition(mu + indices), w): c for (mu, w), c in self.coefficients.items()}
        )

    def dump(self) -> str:
        """One line per term: ``e_1,...,e_D;w;value``, ordered by weight, partition order, ``w``."""
        order = {mu: i for d in range(self.D + 1) for i, mu in enumerate(partitions_of(d))}
        lines = []
        for (mu, w), c in sorted(self.coefficients.items(), key=lambda kv: (kv[0][0].size, order[kv[0][0]], kv[0][1])):
            counts = Counter(mu)
            exps = ",".join(str(counts.get(i, 0)) for i in range(1, self.D + 1))
            lines.append(f"{exps};{w};{format_rational(c)}")
        return "\n".join(lines) + ("\n" if lines else "")


def genus_of(profile: Partition, w: int) -> Fraction:
    return Fraction(w + 2 - len(profile) - sum(profile), 2)


def assemble_series(
    source: Source,
    D: int,
    W: int,
    connected: bool,
    within: Partition | None = None,
) -> TruncatedSeries:
    """Generating function with coefficient ``h / w!`` at ``p_mu t^w``.

    Pairs ``(mu, w)`` whose genus is not an integer are skipped.  For the
    connected series negative genera are skipped too; the disconnected series
    keeps them (two sheets over a point have genus -1) and carries the
    constant term 1 of the empty cover.  ``within`` restricts the monomials
    to sub-multisets of one partition, which is all a coefficient extraction
    at that partition needs.
    """
    coeffs: dict[Key, Fraction] = {}
    allowed = Counter(within) if within is not None else None
    for d in range(1, D + 1):
        for mu in partitions_of(d):
            if allowed is not None and Counter(mu) - allowed:
                continue
            for w in range(W + 1):
                g = genus_of(mu, w)
                if g.denominator != 1 or (connected and g < 0):
                    continue
                value = source(mu, w)
                if value:
                    coeffs[(mu, w)] = value / math.factorial(w)
    if not connected:
        coeffs[(Partition(), 0)] = Fraction(1)
    return TruncatedSeries(D, W, coeffs)


def _nilpotency(s: TruncatedSeries) -> int:
    return s.D + s.W + 1


def series_exp(s: TruncatedSeries) -> TruncatedSeries:
    if s.constant_term():
        raise ValueError("series_exp needs a zero constant term")
    result = TruncatedSeries.one(s.D, s.W)
    power = TruncatedSeries.one(s.D, s.W)
    for k in range(1, _nilpotency(s)):
        power = power * s
        if power.is_zero():
            break
        result = result + Fraction(1, math.factorial(k)) * power
    return result


def series_log(s: TruncatedSeries) -> TruncatedSeries:
    if s.constant_term() != 1:
        raise ValueError("series_log needs constant term 1")
    x = s - TruncatedSeries.one(s.D, s.W)
    result = TruncatedSeries(s.D, s.W)
    power = TruncatedSeries.one(s.D, s.W)
    for k in range(1, _nilpotency(s)):
        power = power * x
        if power.is_zero():
            break
        result = result + Fraction((-1) ** (k + 1), k) * power
    return result


def connected_hurwitz(inst: HurwitzInstance, disconnected: Source) -> Fraction:
    """Connected number as ``w! [p_mu t^w] log H*`` with ``H*`` from a disconnected backend."""
    if inst.genus < 0:
        return Fraction(0)
    mu, w = inst.profile, inst.branch_count
    hdot = assemble_series(disconnected, mu.size, w, connected=False, within=mu)
    return series_log(hdot)[mu, w] * math.factorial(w)


def _pairs(D: int) -> Iterator[tuple[int, int]]:
    for i in range(1, D):
        for j in range(1, D - i + 1):
            yield i, j


def cut_and_join_residual(s: TruncatedSeries, connected: bool = False) -> TruncatedSeries:
    """``dS/dt`` minus the cut-and-join operator applied to ``S``, truncated to ``(D, W - 1)``.

    The disconnected form is linear in ``S``; the connected form adds the
    quadratic join term ``i j p_{i+j} (dS/dp_i)(dS/dp_j)``.
    """
    rhs = TruncatedSeries(s.D, s.W)
    first = {i: s.d_dp(i) for i in range(1, s.D + 1)}
    for i, j in _pairs(s.D):
        rhs = rhs + (i * j) * first[i].d_dp(j).times_p(i + j)
        rhs = rhs + (i + j) * first[i + j].times_p(i, j)
        if connected:
            rhs = rhs + (i * j) * (first[i] * first[j]).times_p(i + j)
    residual = s.d_dt() - Fraction(1, 2) * rhs
    return residual.truncate(s.D, s.W - 1)
