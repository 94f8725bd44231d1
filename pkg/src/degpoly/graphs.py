"""Simple undirected graphs: construction, families, the five operations,
and exact canonical labeling for isomorphism checks.

Graphs are immutable after construction (frozen dataclass with frozenset
adjacency rows), so every operation is a pure function returning a new
graph.  Product graphs index their vertices row-major: vertex (u, v) of a
product of orders n1 x n2 gets index u*n2 + v, which keeps output stable
across runs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence

from .errors import (
    BadParamsError,
    BadVertexError,
    EdgeListFormatError,
    EmptyInputError,
    SelfLoopError,
    TooLargeError,
)

CANONICAL_FORM_MAX_N = 16


@dataclass(frozen=True)
class SimpleGraph:
    """Finite simple undirected graph over vertex indices 0..n-1."""

    n: int
    labels: tuple[str, ...]
    adj: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.n < 0 or len(self.labels) != self.n or len(self.adj) != self.n:
            raise ValueError("inconsistent graph fields")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Optional[Sequence[str]] = None,
    ) -> "SimpleGraph":
        """Build a graph; duplicate edges collapse silently, self-loops raise."""
        if labels is None:
            labels = tuple(f"v{i}" for i in range(n))
        else:
            labels = tuple(labels)
        rows: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise BadVertexError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {labels[u]}")
            rows[u].add(v)
            rows[v].add(u)
        return cls(n, labels, tuple(frozenset(r) for r in rows))

    # -- queries -------------------------------------------------------------

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.adj)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as (i, j) with i < j, sorted lexicographically."""
        return tuple(
            (u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v
        )

    @property
    def edge_count(self) -> int:
        return sum(len(r) for r in self.adj) // 2

    def isolated_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if not self.adj[v])

    def vertex_index(self, ref) -> int:
        """Resolve an int index or a label string to a vertex index."""
        if isinstance(ref, int):
            if 0 <= ref < self.n:
                return ref
            raise BadVertexError(f"no vertex {ref} in a graph of order {self.n}")
        try:
            return self.labels.index(ref)
        except ValueError:
            raise BadVertexError(f"no vertex labeled {ref!r}") from None

    def relabel(self, perm: Sequence[int]) -> "SimpleGraph":
        """Return an isomorphic copy where old vertex v becomes perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation")
        labels = [""] * self.n
        for old, new in enumerate(perm):
            labels[new] = self.labels[old]
        edges = [(perm[u], perm[v]) for u, v in self.edges()]
        return SimpleGraph.from_edges(self.n, edges, labels)

    def to_dict(self) -> dict:
        """Structured encoding: order, labels and the sorted edge list."""
        return {
            "n": self.n,
            "labels": list(self.labels),
            "edges": [list(e) for e in self.edges()],
        }


# -- edge-list text format -----------------------------------------------------


@dataclass(frozen=True)
class EdgeListResult:
    """Parsed edge list: the graph plus any collapsed duplicate edges."""

    graph: SimpleGraph
    duplicate_edges: tuple[tuple[int, int], ...]

    @property
    def had_duplicates(self) -> bool:
        return bool(self.duplicate_edges)


def from_edge_list(text: str) -> EdgeListResult:
    """Parse lines of ``u v`` token pairs into a graph.

    Vertices are created in first-appearance order; a single-token line
    declares an isolated vertex; ``#`` starts a comment.
    """
    index: dict[str, int] = {}
    labels: list[str] = []
    edges: set[tuple[int, int]] = set()
    duplicates: list[tuple[int, int]] = []

    def vertex(token: str) -> int:
        if token not in index:
            index[token] = len(labels)
            labels.append(token)
        return index[token]

    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) == 1:
            vertex(tokens[0])
            continue
        if len(tokens) != 2:
            raise EdgeListFormatError(
                f"line {line_no}: expected 1 or 2 tokens, got {line!r}"
            )
        u, v = vertex(tokens[0]), vertex(tokens[1])
        if u == v:
            raise SelfLoopError(f"line {line_no}: self-loop at vertex {tokens[0]!r}")
        key = (min(u, v), max(u, v))
        if key in edges:
            duplicates.append(key)
        else:
            edges.add(key)
    if not labels:
        raise EmptyInputError("edge list describes no vertices")
    graph = SimpleGraph.from_edges(len(labels), sorted(edges), labels)
    return EdgeListResult(graph, tuple(duplicates))


# -- families --------------------------------------------------------------------


def empty_graph(n: int, labels: Optional[Sequence[str]] = None) -> SimpleGraph:
    if n < 0:
        raise BadParamsError(f"empty graph needs n >= 0, got {n}")
    return SimpleGraph.from_edges(n, (), labels)


def complete_graph(n: int) -> SimpleGraph:
    if n < 1:
        raise BadParamsError(f"complete graph needs n >= 1, got {n}")
    return SimpleGraph.from_edges(n, itertools.combinations(range(n), 2))


def path_graph(n: int) -> SimpleGraph:
    if n < 2:
        raise BadParamsError(f"path needs n >= 2, got {n}")
    return SimpleGraph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise BadParamsError(f"cycle needs n >= 3, got {n}")
    return SimpleGraph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_bipartite_graph(r: int, s: int) -> SimpleGraph:
    if not r >= s >= 1:
        raise BadParamsError(f"complete bipartite needs r >= s >= 1, got ({r}, {s})")
    edges = ((i, r + j) for i in range(r) for j in range(s))
    return SimpleGraph.from_edges(r + s, edges)


FAMILY_KINDS = ("complete", "path", "cycle", "complete_bipartite")


def family(kind: str, *params: int) -> SimpleGraph:
    """Dispatch to a standard family by name."""
    builders = {
        "complete": (1, complete_graph),
        "path": (1, path_graph),
        "cycle": (1, cycle_graph),
        "complete_bipartite": (2, complete_bipartite_graph),
    }
    if kind not in builders:
        raise BadParamsError(f"unknown family {kind!r}; known: {', '.join(FAMILY_KINDS)}")
    arity, builder = builders[kind]
    if len(params) != arity:
        raise BadParamsError(f"family {kind!r} takes {arity} parameter(s), got {len(params)}")
    return builder(*params)


# -- the five operations ----------------------------------------------------------


class OpKind(str, Enum):
    JOIN = "join"
    CARTESIAN = "cartesian"
    TENSOR = "tensor"
    LEXICOGRAPHIC = "lexicographic"
    COMPLEMENT = "complement"


def complement(g: SimpleGraph) -> SimpleGraph:
    edges = (
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if v not in g.adj[u]
    )
    return SimpleGraph.from_edges(g.n, edges, g.labels)


def _join_labels(g: SimpleGraph, h: SimpleGraph) -> list[str]:
    # Factors may reuse label names; suffix the right side on collision only.
    taken = set(g.labels)
    out = list(g.labels)
    for lbl in h.labels:
        out.append(f"{lbl}'" if lbl in taken else lbl)
    return out


def join(g: SimpleGraph, h: SimpleGraph) -> SimpleGraph:
    """Disjoint union plus every edge between the two sides."""
    n1, n2 = g.n, h.n
    edges = list(g.edges())
    edges += [(n1 + u, n1 + v) for u, v in h.edges()]
    edges += [(u, n1 + v) for u in range(n1) for v in range(n2)]
    return SimpleGraph.from_edges(n1 + n2, edges, _join_labels(g, h))


def _product_labels(g: SimpleGraph, h: SimpleGraph) -> list[str]:
    return [f"({a},{b})" for a in g.labels for b in h.labels]


def cartesian_product(g: SimpleGraph, h: SimpleGraph) -> SimpleGraph:
    n2 = h.n
    edges = []
    for u in range(g.n):
        for a, b in h.edges():
            edges.append((u * n2 + a, u * n2 + b))
    for u, v in g.edges():
        for a in range(n2):
            edges.append((u * n2 + a, v * n2 + a))
    return SimpleGraph.from_edges(g.n * n2, edges, _product_labels(g, h))


def tensor_product(g: SimpleGraph, h: SimpleGraph) -> SimpleGraph:
    n2 = h.n
    edges = []
    for u, v in g.edges():
        for a, b in h.edges():
            edges.append((u * n2 + a, v * n2 + b))
            edges.append((u * n2 + b, v * n2 + a))
    return SimpleGraph.from_edges(g.n * n2, edges, _product_labels(g, h))


def lexicographic_product(g: SimpleGraph, h: SimpleGraph) -> SimpleGraph:
    n2 = h.n
    edges = []
    for u in range(g.n):
        for a, b in h.edges():
            edges.append((u * n2 + a, u * n2 + b))
    for u, v in g.edges():
        for a in range(n2):
            for b in range(n2):
                edges.append((u * n2 + a, v * n2 + b))
    return SimpleGraph.from_edges(g.n * n2, edges, _product_labels(g, h))


def apply_operation(op, g: SimpleGraph, h: Optional[SimpleGraph] = None) -> SimpleGraph:
    op = OpKind(op)
    if op is OpKind.COMPLEMENT:
        if h is not None:
            raise BadParamsError("complement takes a single graph")
        return complement(g)
    if h is None:
        raise BadParamsError(f"{op.value} takes two graphs")
    binary = {
        OpKind.JOIN: join,
        OpKind.CARTESIAN: cartesian_product,
        OpKind.TENSOR: tensor_product,
        OpKind.LEXICOGRAPHIC: lexicographic_product,
    }
    return binary[op](g, h)


# -- canonical labeling ------------------------------------------------------------


@dataclass(frozen=True)
class CanonicalForm:
    """Permutation-invariant encoding; equal forms iff isomorphic graphs."""

    n: int
    edges: tuple[tuple[int, int], ...]


def _refine(adj_masks: list[int], cells: list[list[int]]) -> list[list[int]]:
    """Refine an ordered partition to equitability.

    Vertices are split by their neighbor counts into every current cell;
    sub-cells are ordered by signature, so the resulting cell order depends
    only on the graph structure, never on the input labeling.
    """
    while True:
        cell_masks = [sum(1 << v for v in cell) for cell in cells]
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            buckets: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((adj_masks[v] & m).bit_count() for m in cell_masks)
                buckets.setdefault(sig, []).append(v)
            if len(buckets) > 1:
                changed = True
            for sig in sorted(buckets):
                new_cells.append(sorted(buckets[sig]))
        if not changed:
            return new_cells
        cells = new_cells


def _cells_homogeneous(adj_masks: list[int], cells: list[list[int]]) -> bool:
    """True when every cell pair is fully joined or fully disjoint.

    For an equitable partition this means any cell-respecting bijection is
    an automorphism, so no individualization branching is needed.
    """
    cell_masks = [sum(1 << v for v in cell) for cell in cells]
    for i, cell in enumerate(cells):
        v0 = cell[0]
        for j, mask in enumerate(cell_masks):
            count = (adj_masks[v0] & mask).bit_count()
            full = len(cells[j]) - (1 if i == j else 0)
            if count not in (0, full):
                return False
    return True


def _encode(n: int, adj_masks: list[int], order: list[int]) -> tuple[tuple[int, int], ...]:
    pos = [0] * n
    for new, old in enumerate(order):
        pos[old] = new
    relabeled = []
    for u in range(n):
        mask = adj_masks[u]
        while mask:
            v = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            if v > u:
                a, b = pos[u], pos[v]
                relabeled.append((a, b) if a < b else (b, a))
    return tuple(sorted(relabeled))


def canonical_encoding(n: int, adj_masks: list[int]) -> tuple[tuple[int, int], ...]:
    """Canonical edge encoding from adjacency bitmasks.

    Degree partition refinement plus individualization backtracking; the
    minimum edge encoding over all discrete refinements is taken, which is
    labeling-invariant."""
    if n == 0:
        return ()
    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(adj_masks[v].bit_count(), []).append(v)
    initial = [sorted(by_degree[d]) for d in sorted(by_degree)]

    best: list[Optional[tuple]] = [None]

    def descend(cells: list[list[int]]) -> None:
        cells = _refine(adj_masks, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None or _cells_homogeneous(adj_masks, cells):
            enc = _encode(n, adj_masks, [v for cell in cells for v in cell])
            if best[0] is None or enc < best[0]:
                best[0] = enc
            return
        cell = cells[target]
        for v in cell:
            rest = [w for w in cell if w != v]
            descend(cells[:target] + [[v], rest] + cells[target + 1 :])

    descend(initial)
    assert best[0] is not None
    return best[0]


def canonical_form(g: SimpleGraph, max_n: int = CANONICAL_FORM_MAX_N) -> CanonicalForm:
    """Exact canonical form: equal results iff the graphs are isomorphic."""
    if g.n > max_n:
        raise TooLargeError(f"canonical form limited to n <= {max_n}, got {g.n}")
    adj_masks = [sum(1 << w for w in g.adj[v]) for v in range(g.n)]
    return CanonicalForm(g.n, canonical_encoding(g.n, adj_masks))


# -- DOT emission --------------------------------------------------------------------


def emit_dot(g: SimpleGraph) -> str:
    """Undirected DOT text: one edge per line, isolated vertices as bare
    nodes, everything in vertex index order."""

    def quote(label: str) -> str:
        return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'

    lines = ["graph {"]
    for v in g.isolated_vertices():
        lines.append(f"  {quote(g.labels[v])};")
    for u, v in g.edges():
        lines.append(f"  {quote(g.labels[u])} -- {quote(g.labels[v])};")
    lines.append("}")
    return "\n".join(lines) + "\n"
