"""Simple connected graphs and their metric decorations.

A discrete graph is a finite simple connected graph on vertices 0..V-1 with
edges stored canonically as (min, max) pairs in sorted order, so every
downstream computation iterates edges in one reproducible order.  A metric
graph attaches one positive length per edge.  Equilaterality is decided by
exact equality of the supplied length values: equal lengths select a
different analytic branch downstream, so the caller opts in deliberately
rather than through a tolerance.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import (
    Disconnected,
    DuplicateEdge,
    MissingLength,
    NonpositiveLength,
    ParseError,
    SelfLoop,
    VertexOutOfRange,
)

Edge = tuple[int, int]


@dataclass(frozen=True)
class DiscreteGraph:
    """Validated simple connected graph; immutable after construction."""

    vertex_count: int
    edges: tuple[Edge, ...]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(n)) for n in nbrs)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(n) for n in self.adjacency)

    @property
    def betti(self) -> int:
        return self.edge_count - self.vertex_count + 1

    def degree_product(self) -> int:
        out = 1
        for d in self.degrees:
            out *= d
        return out

    def is_regular(self) -> int | None:
        """The common degree if the graph is regular, else None."""
        d = self.degrees[0]
        return d if all(x == d for x in self.degrees) else None

    def is_star(self) -> bool:
        """One hub adjacent to every other vertex, all others leaves."""
        degs = sorted(self.degrees)
        return degs[:-1] == [1] * (self.vertex_count - 1) and degs[-1] == self.vertex_count - 1


@dataclass(frozen=True)
class GraphShape:
    """Structural summary: cycle count, diameter, degree data."""

    betti: int
    diameter: int
    degree_sequence: tuple[int, ...]
    max_degree: int


@dataclass(frozen=True)
class MetricGraph:
    """Discrete graph with a positive length per edge, aligned with
    graph.edges order."""

    graph: DiscreteGraph
    lengths: tuple[float, ...]

    @property
    def total_length(self) -> float:
        return sum(self.lengths)

    @property
    def min_length(self) -> float:
        return min(self.lengths)

    @property
    def max_length(self) -> float:
        return max(self.lengths)

    @property
    def spread(self) -> float:
        """Length spread max - min; zero exactly when equilateral."""
        return self.max_length - self.min_length

    @property
    def is_equilateral(self) -> bool:
        first = self.lengths[0]
        return all(x == first for x in self.lengths)

    def length_product(self) -> float:
        out = 1.0
        for x in self.lengths:
            out *= x
        return out


def _canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def build_graph(vertex_count: int, edge_list: Iterable[Sequence[int]]) -> DiscreteGraph:
    """Validate and construct a simple connected graph.

    Rejects self-loops, duplicate edges, out-of-range endpoints, and
    disconnected vertex sets.  Edges are canonicalized to sorted
    (min, max) order.
    """
    if vertex_count < 2:
        raise VertexOutOfRange(f"need at least 2 vertices, got {vertex_count}")
    seen: set[Edge] = set()
    edges: list[Edge] = []
    for raw in edge_list:
        u, v = int(raw[0]), int(raw[1])
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{vertex_count - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        e = _canonical_edge(u, v)
        if e in seen:
            raise DuplicateEdge(f"duplicate edge {e}")
        seen.add(e)
        edges.append(e)
    g = DiscreteGraph(vertex_count, tuple(sorted(edges)))
    _check_connected(g)
    return g


def _check_connected(g: DiscreteGraph) -> None:
    reached = [False] * g.vertex_count
    reached[0] = True
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if not reached[w]:
                reached[w] = True
                queue.append(w)
    missing = [v for v, r in enumerate(reached) if not r]
    if missing:
        raise Disconnected(f"vertices unreachable from 0: {missing}")


def _bfs_distances(g: DiscreteGraph, source: int) -> list[int]:
    dist = [-1] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def shape(g: DiscreteGraph) -> GraphShape:
    """Betti number E - V + 1, diameter by all-pairs BFS, degree data."""
    diameter = max(max(_bfs_distances(g, v)) for v in range(g.vertex_count))
    return GraphShape(
        betti=g.betti,
        diameter=diameter,
        degree_sequence=g.degrees,
        max_degree=max(g.degrees),
    )


def attach_lengths(
    g: DiscreteGraph,
    lengths: Mapping[Edge, float] | Sequence[float] | float,
) -> MetricGraph:
    """Attach one positive length per edge.

    Accepts a mapping keyed by edge (either endpoint order), a sequence
    aligned with g.edges, or a single value applied to every edge.
    """
    if isinstance(lengths, Mapping):
        values = []
        for e in g.edges:
            u, v = e
            if e in lengths:
                values.append(float(lengths[e]))
            elif (v, u) in lengths:
                values.append(float(lengths[(v, u)]))
            else:
                raise MissingLength(f"no length for edge {e}")
    elif isinstance(lengths, (int, float)):
        values = [float(lengths)] * g.edge_count
    else:
        values = [float(x) for x in lengths]
        if len(values) != g.edge_count:
            raise MissingLength(
                f"got {len(values)} lengths for {g.edge_count} edges"
            )
    for e, x in zip(g.edges, values):
        if not x > 0.0:
            raise NonpositiveLength(f"edge {e} has length {x}")
    return MetricGraph(g, tuple(values))


def equilateral(g: DiscreteGraph, ell: float = 1.0) -> MetricGraph:
    """Metric graph with every edge length equal to ell."""
    return attach_lengths(g, ell)


# -- line-oriented graph file format ----------------------------------------
#
#   # comment
#   V E
#   u v [length]
#
# Lengths are either present on every edge line or on none; absent lengths
# mean the graph is equilateral with the length supplied by the caller.


def parse_graph_text(text: str, default_length: float | None = None) -> MetricGraph:
    """Parse the line-oriented graph format into a MetricGraph."""
    header: tuple[int, int] | None = None
    header_line = 0
    rows: list[tuple[int, int, int, float | None]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if header is None:
            if len(tokens) != 2:
                raise ParseError("expected header 'V E'", lineno)
            try:
                header = (int(tokens[0]), int(tokens[1]))
            except ValueError:
                raise ParseError("header must be two integers", lineno) from None
            header_line = lineno
            continue
        if len(tokens) not in (2, 3):
            raise ParseError("expected 'u v' or 'u v length'", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError("endpoints must be integers", lineno) from None
        length: float | None = None
        if len(tokens) == 3:
            try:
                length = float(tokens[2])
            except ValueError:
                raise ParseError("length must be a number", lineno) from None
        rows.append((lineno, u, v, length))

    if header is None:
        raise ParseError("empty graph file", 1)
    v_count, e_count = header
    if len(rows) != e_count:
        raise ParseError(
            f"header declares {e_count} edges but file has {len(rows)}", header_line
        )
    with_length = [r for r in rows if r[3] is not None]
    if with_length and len(with_length) != len(rows):
        missing = next(r for r in rows if r[3] is None)
        raise ParseError("length present on some edges but not this one", missing[0])

    g = build_graph(v_count, [(u, v) for _, u, v, _ in rows])
    if with_length:
        length_map = {_canonical_edge(u, v): x for _, u, v, x in rows}
        return attach_lengths(g, length_map)
    return attach_lengths(g, default_length if default_length is not None else 1.0)


def load_graph_file(path, default_length: float | None = None) -> MetricGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph_text(fh.read(), default_length=default_length)
