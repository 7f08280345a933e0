"""
Finite digraphs and graphs, named families, products and the text format.

Vertices are always the dense integers ``0..n-1``. Constructions whose
vertices are naturally structured (pairs, subsets, maps) number them in a
documented order and keep the structured value in ``labels``.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

__all__ = [
    "Digraph", "Graph", "Fraction", "GraphFormatError",
    "make_complete", "make_path", "make_cycle", "make_directed_path",
    "make_transitive_tournament", "make_circular_complete", "make_kneser",
    "make_single_loop", "make_edgeless", "make_pendant_join",
    "direct_product", "cartesian_product", "lexicographic_product",
    "symmetrize", "reverse", "orient", "induced_subgraph", "disjoint_union",
    "identify", "format_graph", "parse_graph", "read_graph", "write_graph",
    "format_labels",
]


class Digraph:
    """A finite simple digraph on vertices ``0..n-1``; loops allowed.

    Instances are treated as immutable. Equality compares ``n`` and the arc
    set only; labels are debugging metadata.
    """

    __slots__ = ("n", "arcs", "labels", "_out", "_in")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = (), labels: Sequence | None = None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        arcs = frozenset((int(u), int(v)) for u, v in arcs)
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) has an endpoint outside [0, {n})")
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("label table must have one entry per vertex")
        self.n = n
        self.arcs = arcs
        self.labels = labels
        out = [0] * n
        inn = [0] * n
        for u, v in arcs:
            out[u] |= 1 << v
            inn[v] |= 1 << u
        self._out = tuple(out)
        self._in = tuple(inn)

    # bitmask adjacency: bit v of out_masks[u] is set iff (u, v) is an arc
    @property
    def out_masks(self) -> tuple[int, ...]:
        return self._out

    @property
    def in_masks(self) -> tuple[int, ...]:
        return self._in

    def out_neighbors(self, u: int) -> list[int]:
        return _bits(self._out[u])

    def in_neighbors(self, u: int) -> list[int]:
        return _bits(self._in[u])

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self._out[u] >> v & 1)

    @property
    def num_arcs(self) -> int:
        return len(self.arcs)

    @property
    def loops(self) -> list[int]:
        return [u for u in range(self.n) if self._out[u] >> u & 1]

    @property
    def has_loops(self) -> bool:
        return any(self._out[u] >> u & 1 for u in range(self.n))

    def is_symmetric(self) -> bool:
        return self._out == self._in

    def edges(self) -> list[tuple[int, int]]:
        """Pairs ``(u, v)`` with ``u <= v`` joined in at least one direction."""
        return sorted({(min(u, v), max(u, v)) for u, v in self.arcs})

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.arcs:
            a[u, v] = 1
        return a

    def label(self, v: int):
        return v if self.labels is None else self.labels[v]

    def with_labels(self, labels: Sequence | None) -> "Digraph":
        return type(self)(self.n, self.arcs, labels)

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self):
        return hash((self.n, self.arcs))

    def __repr__(self):
        kind = "Graph" if isinstance(self, Graph) else "Digraph"
        return f"{kind}(n={self.n}, arcs={self.num_arcs})"


class Graph(Digraph):
    """A digraph whose arc relation is symmetric."""

    __slots__ = ()

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = (), labels: Sequence | None = None):
        super().__init__(n, arcs, labels)
        if not self.is_symmetric():
            raise ValueError("arc relation of a Graph must be symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence | None = None) -> "Graph":
        arcs = set()
        for u, v in edges:
            arcs.add((u, v))
            arcs.add((v, u))
        return cls(n, arcs, labels)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _as_graph_if(cond: bool, n: int, arcs, labels=None) -> Digraph:
    return Graph(n, arcs, labels) if cond else Digraph(n, arcs, labels)


# ---------------------------------------------------------------------------
# Named families

def make_complete(n: int) -> Graph:
    if n < 0:
        raise ValueError("n must be non-negative")
    return Graph(n, ((i, j) for i in range(n) for j in range(n) if i != j))


def make_edgeless(n: int) -> Graph:
    return Graph(n)


def make_single_loop() -> Graph:
    """One vertex carrying a loop; the terminal object of the hom-order."""
    return Graph(1, [(0, 0)])


def make_path(k: int) -> Graph:
    """Undirected path with ``k`` edges on vertices ``0..k``."""
    if k < 0:
        raise ValueError("edge count must be non-negative")
    return Graph.from_edges(k + 1, ((i, i + 1) for i in range(k)))


def make_cycle(k: int) -> Graph:
    if k < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(k, ((i, (i + 1) % k) for i in range(k)))


def make_directed_path(i: int) -> Digraph:
    if i < 0:
        raise ValueError("arc count must be non-negative")
    return Digraph(i + 1, ((j, j + 1) for j in range(i)))


def make_transitive_tournament(n: int) -> Digraph:
    if n < 0:
        raise ValueError("n must be non-negative")
    return Digraph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def make_circular_complete(s: int, r: int) -> Graph:
    """Circular complete graph on Z_s; x ~ y iff (y - x) mod s lies in [r, s - r]."""
    if not (1 <= r and 2 * r <= s):
        raise ValueError(f"circular complete graph needs 1 <= r <= s/2, got s={s}, r={r}")
    return Graph(s, ((x, y) for x in range(s) for y in range(s) if r <= (y - x) % s <= s - r))


def make_kneser(n: int, m: int) -> Graph:
    """Kneser graph: m-subsets of range(n) in ``itertools.combinations`` order."""
    if not (1 <= m <= n):
        raise ValueError("Kneser graph needs 1 <= m <= n")
    subsets = list(itertools.combinations(range(n), m))
    masks = [sum(1 << x for x in s) for s in subsets]
    arcs = [(i, j) for i, a in enumerate(masks) for j, b in enumerate(masks) if not a & b]
    return Graph(len(subsets), arcs, labels=subsets)


def make_pendant_join(m: int, n: int) -> Graph:
    """K_{7/2} and K_m joined by a path with n edges.

    Vertices 0..6 are the K_{7/2} copy (the path's first end is vertex 0);
    the path interior follows, then K_m, whose vertex glued to the path's far
    end is the lowest-numbered K_m vertex.
    """
    if m < 1 or n < 1:
        raise ValueError("need m >= 1 and n >= 1")
    base = disjoint_union(disjoint_union(make_circular_complete(7, 2), make_path(n)), make_complete(m))
    return identify(base, [(0, 7), (7 + n, 7 + n + 1)])


# ---------------------------------------------------------------------------
# Products; vertex (u, v) is numbered u * |V(H)| + v

def _pair_labels(G: Digraph, H: Digraph):
    return [(u, v) for u in range(G.n) for v in range(H.n)]


def direct_product(G: Digraph, H: Digraph) -> Digraph:
    m = H.n
    arcs = [(u1 * m + u2, v1 * m + v2) for u1, v1 in G.arcs for u2, v2 in H.arcs]
    both = isinstance(G, Graph) and isinstance(H, Graph)
    return _as_graph_if(both, G.n * m, arcs, _pair_labels(G, H))


def cartesian_product(G: Digraph, H: Digraph) -> Digraph:
    m = H.n
    arcs = [(u1 * m + w, v1 * m + w) for u1, v1 in G.arcs for w in range(m)]
    arcs += [(w * m + u2, w * m + v2) for w in range(G.n) for u2, v2 in H.arcs]
    both = isinstance(G, Graph) and isinstance(H, Graph)
    return _as_graph_if(both, G.n * m, arcs, _pair_labels(G, H))


def lexicographic_product(G: Digraph, H: Digraph) -> Digraph:
    m = H.n
    arcs = [(u1 * m + a, v1 * m + b) for u1, v1 in G.arcs for a in range(m) for b in range(m)]
    arcs += [(w * m + u2, w * m + v2) for w in range(G.n) for u2, v2 in H.arcs]
    both = isinstance(G, Graph) and isinstance(H, Graph)
    return _as_graph_if(both, G.n * m, arcs, _pair_labels(G, H))


# ---------------------------------------------------------------------------
# Orientation and plumbing

def symmetrize(D: Digraph) -> Graph:
    return Graph(D.n, D.arcs | {(v, u) for u, v in D.arcs}, D.labels)


def reverse(D: Digraph) -> Digraph:
    return type(D)(D.n, ((v, u) for u, v in D.arcs), D.labels)


def orient(G: Digraph, rule: Callable[[int, int], tuple[int, int]] | None = None) -> Digraph:
    """Keep one arc per edge. ``rule(u, v)`` with ``u < v`` returns the kept arc."""
    if G.has_loops:
        raise ValueError("cannot orient a graph with loops")
    arcs = []
    for u, v in G.edges():
        arc = (u, v) if rule is None else tuple(rule(u, v))
        if set(arc) != {u, v}:
            raise ValueError(f"orientation rule returned {arc} for edge {(u, v)}")
        arcs.append(arc)
    return Digraph(G.n, arcs, G.labels)


def induced_subgraph(G: Digraph, S: Iterable[int]) -> Digraph:
    """Subgraph on ``sorted(S)``, renumbered in increasing order; labels carry
    the original vertex (or its original label)."""
    keep = sorted(set(S))
    for v in keep:
        if not 0 <= v < G.n:
            raise ValueError(f"vertex {v} out of range")
    index = {v: i for i, v in enumerate(keep)}
    arcs = [(index[u], index[v]) for u, v in G.arcs if u in index and v in index]
    labels = [G.label(v) for v in keep]
    return type(G)(len(keep), arcs, labels)


def disjoint_union(G: Digraph, H: Digraph) -> Digraph:
    """G's vertices first, then H's shifted by ``G.n``."""
    arcs = list(G.arcs) + [(u + G.n, v + G.n) for u, v in H.arcs]
    labels = [(0, G.label(v)) for v in range(G.n)] + [(1, H.label(v)) for v in range(H.n)]
    both = isinstance(G, Graph) and isinstance(H, Graph)
    return _as_graph_if(both, G.n + H.n, arcs, labels)


def identify(G: Digraph, pairs: Iterable[tuple[int, int]]) -> Digraph:
    """Quotient by the equivalence closure of ``pairs``.

    Each class is represented by its minimum vertex; classes are renumbered
    by increasing representative and keep the representative's label. Arcs
    inside a class become loops.
    """
    parent = list(range(G.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        if not (0 <= a < G.n and 0 <= b < G.n):
            raise ValueError(f"identification pair {(a, b)} out of range")
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    reps = sorted({find(v) for v in range(G.n)})
    index = {r: i for i, r in enumerate(reps)}
    image = [index[find(v)] for v in range(G.n)]
    arcs = [(image[u], image[v]) for u, v in G.arcs]
    return type(G)(len(reps), arcs, [G.label(r) for r in reps])


# ---------------------------------------------------------------------------
# Text format

class GraphFormatError(ValueError):
    pass


def format_graph(G: Digraph) -> str:
    if isinstance(G, Graph):
        lines = [f"graph {G.n}"] + [f"{u} {v}" for u, v in G.edges()]
    else:
        lines = [f"digraph {G.n}"] + [f"{u} {v}" for u, v in G.sorted_arcs()]
    return "\n".join(lines) + "\n"


def parse_graph(text: str, start_line: int = 1) -> Digraph:
    header = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start_line):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2 or fields[0] not in ("graph", "digraph") or not fields[1].isdigit():
                raise GraphFormatError(f"line {lineno}: expected 'graph <n>' or 'digraph <n>', got {raw!r}")
            header = (fields[0], int(fields[1]))
            continue
        if len(fields) != 2 or not all(f.isdigit() for f in fields):
            raise GraphFormatError(f"line {lineno}: expected '<tail> <head>', got {raw!r}")
        u, v = int(fields[0]), int(fields[1])
        if u >= header[1] or v >= header[1]:
            raise GraphFormatError(f"line {lineno}: vertex out of range for n={header[1]}")
        pairs.append((u, v))
    if header is None:
        raise GraphFormatError("missing header line")
    kind, n = header
    if kind == "graph":
        return Graph.from_edges(n, pairs)
    return Digraph(n, pairs)


def read_graph(path) -> Digraph:
    with open(path) as fh:
        return parse_graph(fh.read())


def write_graph(G: Digraph, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_graph(G))


def _label_text(label) -> str:
    if isinstance(label, (tuple, list)):
        return "(" + ",".join(_label_text(x) for x in label) + ")"
    if isinstance(label, frozenset):
        return "{" + ",".join(_label_text(x) for x in sorted(label)) + "}"
    return str(label)


def format_labels(G: Digraph) -> str:
    """Sidecar label table: one ``<index> <label>`` line per vertex."""
    return "".join(f"{v} {_label_text(G.label(v))}\n" for v in range(G.n))
