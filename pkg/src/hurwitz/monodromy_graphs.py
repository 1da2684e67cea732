"""Monodromy graphs: trivalent graphs over ``[0, w]`` recording cuts and joins of cycles.

A graph is stored as its multiset of edges ``(start, end, weight)``.  Event
vertices sit over the points ``1 .. w-1``; ``start = 0`` marks a leaf over
infinity and ``end = w`` a leaf over the last simple branch point, where the
strands must have weights ``(2, 1^{d-2})``.  Every event position carries a
single vertex, so two graphs are isomorphic over the segment exactly when
their edge multisets agree; sorting the edges gives the canonical form.

Enumeration runs over labelled strand histories (one fixed permutation of
type ``mu`` and the transpositions applied to it), merged on the fly by
canonical form of the partial graph.  A join of strands of weights ``a, b``
is realised by ``a*b`` transpositions, a cut of a weight-``l`` strand into
``{x, l - x}`` by ``l`` of them (``l/2`` when ``x = l - x``).  Summing those
counts over the histories of a class and dividing by the centraliser order
of ``mu`` gives the exact contribution of the class to ``h_{g,mu}``.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
import math
from typing import Iterable

from .errors import InfeasibleError
from .partitions import Partition, z_factor
from .symmetric_group import HurwitzInstance

MAX_DEGREE = 8
MAX_BRANCH = 10

LEFT = 0
OPEN = -1

Edge = tuple[int, int, int]


@dataclass(frozen=True)
class Event:
    position: int
    kind: str  # "join" or "cut"
    consumed: tuple[int, ...]
    produced: tuple[int, ...]


@dataclass(frozen=True)
class MonodromyGraph:
    profile: Partition
    branch_count: int
    edges: tuple[Edge, ...]
    contribution: Fraction = field(default=Fraction(0), compare=False)

    @property
    def degree(self) -> int:
        return self.profile.size

    @cached_property
    def events(self) -> tuple[Event, ...]:
        out = []
        for k in range(1, self.branch_count):
            inc = tuple(sorted((e[2] for e in self.edges if e[1] == k), reverse=True))
            outg = tuple(sorted((e[2] for e in self.edges if e[0] == k), reverse=True))
            kind = "join" if len(inc) == 2 else "cut"
            out.append(Event(k, kind, inc, outg))
        return tuple(out)

    @property
    def joins(self) -> int:
        return sum(1 for e in self.events if e.kind == "join")

    @property
    def cuts(self) -> int:
        return sum(1 for e in self.events if e.kind == "cut")

    @property
    def vertex_count(self) -> int:
        leaves = sum(1 for s, _, _ in self.edges if s == LEFT)
        leaves += sum(1 for _, t, _ in self.edges if t == self.branch_count)
        return leaves + self.branch_count - 1

    @property
    def genus(self) -> int:
        """First Betti number of the underlying graph."""
        return len(self.edges) - self.vertex_count + 1

    def is_leaf_edge(self, edge: Edge) -> bool:
        return edge[0] == LEFT or edge[1] == self.branch_count

    @property
    def interior_edges(self) -> list[Edge]:
        return [e for e in self.edges if not self.is_leaf_edge(e)]

    def _doubled(self) -> list[Edge]:
        return [e for e, m in Counter(self.edges).items() if m == 2]

    @property
    def wieners(self) -> int:
        return sum(1 for e in self._doubled() if not self.is_leaf_edge(e))

    @property
    def balanced_forks(self) -> int:
        return sum(1 for e in self._doubled() if self.is_leaf_edge(e))

    @property
    def automorphisms(self) -> int:
        return math.prod(math.factorial(m) for m in Counter(self.edges).values())

    @property
    def multiplicity(self) -> Fraction:
        """How many copies of :func:`graph_weight` the class contributes."""
        return self.contribution / graph_weight(self)

    def is_connected(self) -> bool:
        return _connected(self.edges, self.branch_count)


def _connected(edges: Iterable[Edge], w: int) -> bool:
    # leaves are distinct vertices; only event vertices can merge components
    parent: dict = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    nodes = []
    for idx, (s, t, _) in enumerate(edges):
        a = ("v", s) if 0 < s < w else ("leaf", idx, "s")
        b = ("v", t) if 0 < t < w else ("leaf", idx, "t")
        nodes += [a, b]
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return len({find(x) for x in nodes}) == 1


def graph_weight(graph: MonodromyGraph) -> Fraction:
    """Product of interior edge weights over ``|Aut| = 2^(wieners + balanced forks)``."""
    num = math.prod(e[2] for e in graph.interior_edges)
    return Fraction(num, 2 ** (graph.wieners + graph.balanced_forks))


def _terminal(d: int) -> Counter:
    return Counter((2,) + (1,) * (d - 2))


def _canonical(edges: list[Edge]) -> tuple[Edge, ...]:
    return tuple(sorted(edges))


def enumerate_graphs(
    inst: HurwitzInstance, max_degree: int = MAX_DEGREE, max_branch: int = MAX_BRANCH
) -> list[MonodromyGraph]:
    """One representative per isomorphism class of connected monodromy graphs of type ``(g, mu)``."""
    mu, w, d = inst.profile, inst.branch_count, inst.degree
    if w < 1 or d < 2:
        raise ValueError("monodromy graphs need at least one simple branch point and d >= 2")
    if d > max_degree or w > max_branch:
        raise InfeasibleError(f"monodromy enumeration bounded by d <= {max_degree}, w <= {max_branch}")
    if inst.genus < 0:
        return []
    target = _terminal(d)
    final_count = d - 1
    # partial graph -> summed transposition counts of the labelled histories reaching it
    states: dict[tuple[Edge, ...], Fraction] = {
        _canonical([(LEFT, OPEN, part) for part in mu]): Fraction(1)
    }
    for k in range(1, w):
        remaining = w - 1 - k
        nxt: dict[tuple[Edge, ...], Fraction] = defaultdict(Fraction)
        for edges, value in states.items():
            live = [i for i, e in enumerate(edges) if e[1] == OPEN]
            closed = [e for e in edges if e[1] != OPEN]

            def push(new_edges: list[Edge], factor: Fraction) -> None:
                n_live = sum(1 for e in new_edges if e[1] == OPEN)
                gap = abs(n_live - final_count)
                if gap > remaining or (remaining - gap) % 2:
                    return
                nxt[_canonical(new_edges)] += value * factor

            for a_pos, a in enumerate(live):
                for b in live[a_pos + 1:]:
                    ea, eb = edges[a], edges[b]
                    rest = [edges[i] for i in live if i not in (a, b)]
                    new = closed + [(ea[0], k, ea[2]), (eb[0], k, eb[2])] + rest
                    new.append((k, OPEN, ea[2] + eb[2]))
                    push(new, Fraction(ea[2] * eb[2]))
            for a in live:
                ea = edges[a]
                weight = ea[2]
                rest = [edges[i] for i in live if i != a]
                for x in range(1, weight // 2 + 1):
                    y = weight - x
                    new = closed + [(ea[0], k, weight)] + rest + [(k, OPEN, y), (k, OPEN, x)]
                    push(new, Fraction(weight, 2) if x == y else Fraction(weight))
        states = nxt

    z = z_factor(mu)
    graphs = []
    for edges, value in states.items():
        open_weights = Counter(e[2] for e in edges if e[1] == OPEN)
        if open_weights != target:
            continue
        final = _canonical([(s, w if t == OPEN else t, wt) for s, t, wt in edges])
        if not _connected(final, w):
            continue
        graphs.append(MonodromyGraph(mu, w, final, value / z))
    graphs.sort(key=lambda gr: gr.edges)
    return graphs


def monodromy_hurwitz(inst: HurwitzInstance) -> Fraction:
    """Connected Hurwitz number as the sum of the class contributions."""
    if inst.degree == 1:
        return Fraction(1 if inst.branch_count == 0 else 0)
    if inst.branch_count == 0:
        return Fraction(0)
    return sum((g.contribution for g in enumerate_graphs(inst)), Fraction(0))


def mirror(graph: MonodromyGraph) -> MonodromyGraph | None:
    """Reverse the segment; only a graph of the same type when ``mu = (2, 1^{d-2})``."""
    if Counter(graph.profile) != _terminal(graph.degree):
        return None
    w = graph.branch_count
    edges = _canonical([(w - t, w - s, wt) for s, t, wt in graph.edges])
    return MonodromyGraph(graph.profile, w, edges, graph.contribution)


@dataclass(frozen=True)
class SymmetryClass:
    """Graphs identified up to reversal of the segment (a row of the usual hand tally)."""

    members: tuple[MonodromyGraph, ...]

    @property
    def representative(self) -> MonodromyGraph:
        return self.members[0]

    @property
    def weight(self) -> Fraction:
        return graph_weight(self.representative)

    @property
    def contribution(self) -> Fraction:
        return sum((m.contribution for m in self.members), Fraction(0))


def symmetry_classes(graphs: Iterable[MonodromyGraph]) -> list[SymmetryClass]:
    """Pair each graph with its mirror image when the mirror is a distinct graph of the same type."""
    by_edges = {g.edges: g for g in graphs}
    seen: set = set()
    out = []
    for edges, g in sorted(by_edges.items()):
        if edges in seen:
            continue
        members = [g]
        seen.add(edges)
        m = mirror(g)
        if m is not None and m.edges in by_edges and m.edges not in seen:
            members.append(by_edges[m.edges])
            seen.add(m.edges)
        out.append(SymmetryClass(tuple(members)))
    return out


def export_dot(graph: MonodromyGraph, name: str = "monodromy") -> str:
    """Deterministic DOT digraph; ``rank=same`` groups nodes by position over the segment."""
    w = graph.branch_count
    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    nodes_by_rank: dict[int, list[str]] = defaultdict(list)
    edge_lines = []
    left = right = 0
    for s, t, wt in graph.edges:
        if s == LEFT:
            src = f"inf{left}"
            left += 1
            nodes_by_rank[0].append(src)
        else:
            src = f"e{s}"
        if t == w:
            dst = f"end{right}"
            right += 1
            nodes_by_rank[w].append(dst)
        else:
            dst = f"e{t}"
        edge_lines.append(f'  {src} -> {dst} [label="{wt}"];')
    for k in range(1, w):
        nodes_by_rank[k].append(f"e{k}")
    for rank in sorted(nodes_by_rank):
        shape = "point" if 0 < rank < w else "plaintext"
        members = " ".join(f"{n};" for n in nodes_by_rank[rank])
        lines.append(f"  {{ rank=same; node [shape={shape}]; {members} }}")
    lines.extend(edge_lines)
    lines.append("}")
    return "\n".join(lines) + "\n"
