"""Uniform access to every backend for connected or disconnected numbers."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable

from . import characters, closed_forms, fock_space, monodromy_graphs, symmetric_group
from .errors import InfeasibleError
from .partitions import Partition
from .series import assemble_series, connected_hurwitz, series_exp
from .symmetric_group import HurwitzInstance

BACKENDS = ("brute", "character", "class", "graphs", "fock", "closed")

# (profile, w) -> disconnected number
_DISCONNECTED: dict[str, Callable[[Partition, int], Fraction]] = {
    "character": characters.character_disconnected,
    "class": symmetric_group.class_algebra_disconnected,
    "fock": fock_space.fock_disconnected,
}

_CLOSED_BY_PROFILE = {
    (2,): "2",
    (1, 1): "2",
    (2, 1): "2,1",
    (3,): "3",
    (2, 1, 1): "2,1,1",
}


def closed_connected(inst: HurwitzInstance) -> Fraction:
    if inst.genus < 0:
        return Fraction(0)
    if inst.degree == 1:
        return Fraction(1 if inst.branch_count == 0 else 0)
    if inst.genus == 0:
        return closed_forms.hurwitz_genus0(inst.profile)
    key = _CLOSED_BY_PROFILE.get(tuple(inst.profile))
    if key is None:
        raise InfeasibleError(f"no closed form for genus {inst.genus}, profile {inst.profile}")
    return closed_forms.hurwitz_small_degree(inst.genus, key)


def _brute_connected(inst: HurwitzInstance) -> Fraction:
    return symmetric_group.brute_force_hurwitz(inst, connected=True)


_CONNECTED_ONLY: dict[str, Callable[[HurwitzInstance], Fraction]] = {
    "brute": _brute_connected,
    "graphs": monodromy_graphs.monodromy_hurwitz,
    "closed": closed_connected,
}


def _connected_source(name: str) -> Callable[[Partition, int], Fraction]:
    fn = _CONNECTED_ONLY[name]

    def source(profile: Partition, w: int) -> Fraction:
        return fn(HurwitzInstance.from_branch_count(profile, w))

    return source


def compute(inst: HurwitzInstance, backend: str, connected: bool) -> Fraction:
    """Hurwitz number of ``inst`` by ``backend``; disconnected via ``exp`` for connected-only backends."""
    if backend == "auto":
        backend = choose_backend(inst)
    if backend == "brute":
        return symmetric_group.brute_force_hurwitz(inst, connected=connected)
    if backend in _DISCONNECTED:
        source = _DISCONNECTED[backend]
        if not connected:
            return source(inst.profile, inst.branch_count)
        return connected_hurwitz(inst, source)
    if backend in _CONNECTED_ONLY:
        if connected:
            return _CONNECTED_ONLY[backend](inst)
        mu, w = inst.profile, inst.branch_count
        series = assemble_series(_connected_source(backend), mu.size, w, connected=True, within=mu)
        return series_exp(series)[mu, w] * math.factorial(w)
    raise ValueError(f"unknown backend {backend!r}")


def choose_backend(inst: HurwitzInstance) -> str:
    if inst.degree <= characters.MAX_TABLE_DEGREE:
        return "character"
    trans = inst.degree * (inst.degree - 1) // 2
    if trans ** inst.branch_count <= symmetric_group.DEFAULT_WORK_BOUND:
        return "brute"
    raise InfeasibleError(f"no feasible backend for degree {inst.degree}")
