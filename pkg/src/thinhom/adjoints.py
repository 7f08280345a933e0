"""
Explicit right adjoints: Omega for the odd path templates, the right adjoint
of the arc graph, and the partial right adjoint for the grid template.

Vertex sets are families of subsets of V(G), kept as bitmasks while
building and published as sorted tuples in ``labels``. Families are
generated by extending partial tuples only while their constraints can
still hold; vertices are numbered in the order generated (lexicographic in
the component bitmasks).
"""

from __future__ import annotations

from .graphs import Digraph, Graph

__all__ = ["omega3", "omega_odd", "delta_right", "omega2", "submasks", "MAX_SOURCE", "MAX_VERTICES"]

MAX_SOURCE = 30
MAX_VERTICES = 200_000


def submasks(mask: int) -> list[int]:
    """All submasks of ``mask`` in increasing numeric order."""
    out, sub = [], mask
    while True:
        out.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & mask
    out.reverse()
    return out


def _members(mask: int) -> tuple[int, ...]:
    out, i = [], 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _guard(G: Digraph, limit: int = MAX_SOURCE):
    if G.n > limit:
        raise ValueError(f"input has {G.n} vertices; this construction is limited to {limit}")


class _Joins:
    """Cached common-neighbourhood masks: ``joined(A)`` is the set of vertices
    adjacent (via ``table``) to every vertex of A; the empty set joins everything."""

    def __init__(self, table, n):
        self.table = table
        self.full = (1 << n) - 1
        self.cache = {0: self.full}

    def __call__(self, A: int) -> int:
        hit = self.cache.get(A)
        if hit is None:
            hit = self.full
            m = A
            while m:
                low = m & -m
                hit &= self.table[low.bit_length() - 1]
                m ^= low
            self.cache[A] = hit
        return hit


def _check_size(count):
    if count > MAX_VERTICES:
        raise ValueError(f"construction exceeds {MAX_VERTICES} vertices")


def omega3(G: Graph) -> Graph:
    """Vertices ``(u, U)`` with U inside the neighbourhood of u; ``(u, U) ~ (v, V)``
    iff ``u in V``, ``v in U`` and U, V are completely joined."""
    _guard(G)
    joined = _Joins(G.out_masks, G.n)
    verts = []
    for u in range(G.n):
        for U in submasks(G.out_masks[u]):
            verts.append((u, U))
            _check_size(len(verts))
    by_member: dict[int, list[int]] = {}
    for i, (v, V) in enumerate(verts):
        for x in _members(V):
            by_member.setdefault(x, []).append(i)
    arcs = []
    for i, (u, U) in enumerate(verts):
        ok = joined(U)
        for j in by_member.get(u, ()):
            v, V = verts[j]
            if U >> v & 1 and not V & ~ok:
                arcs.append((i, j))
    labels = [(u, _members(U)) for u, U in verts]
    return Graph(len(verts), arcs, labels)


def omega_odd(k: int, G: Graph) -> Graph:
    """Right adjoint of the central functor of the path template of length 2k + 1.

    Vertices are tuples ``(A_0, ..., A_k)`` with ``A_0`` a singleton,
    consecutive sets completely joined and ``A_{i-1}`` inside ``A_{i+1}``.
    ``A ~ B`` iff ``A_{i-1}`` lies in ``B_i`` and ``B_{i-1}`` in ``A_i`` for
    every i, and ``A_k``, ``B_k`` are completely joined.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    _guard(G)
    joined = _Joins(G.out_masks, G.n)
    verts: list[tuple[int, ...]] = []

    def extend(tup):
        if len(tup) == k + 1:
            verts.append(tuple(tup))
            _check_size(len(verts))
            return
        allowed = joined(tup[-1])
        must = tup[-2] if len(tup) >= 2 else 0
        if must & ~allowed:
            return
        for sub in submasks(allowed & ~must):
            tup.append(must | sub)
            extend(tup)
            tup.pop()

    for a in range(G.n):
        extend([1 << a])

    by_root: dict[int, list[int]] = {}
    for i, t in enumerate(verts):
        by_root.setdefault(t[0], []).append(i)
    arcs = []
    for i, A in enumerate(verts):
        ok = joined(A[k])
        for b in _members(A[1]):
            for j in by_root.get(1 << b, ()):
                B = verts[j]
                if B[k] & ~ok:
                    continue
                if all(not A[t - 1] & ~B[t] and not B[t - 1] & ~A[t] for t in range(1, k + 1)):
                    arcs.append((i, j))
    labels = [tuple(_members(x) for x in t) for t in verts]
    return Graph(len(verts), arcs, labels)


def delta_right(G: Digraph, limit: int = 20) -> Digraph:
    """Right adjoint of the arc graph: pairs ``(U, V)`` with every ``u -> v`` an arc;
    ``(U, V) -> (W, X)`` iff V and W meet. Empty components are kept."""
    _guard(G, limit)
    joined = _Joins(G.out_masks, G.n)
    verts = []
    for U in range(1 << G.n):
        for V in submasks(joined(U)):
            verts.append((U, V))
            _check_size(len(verts))
    by_tail_member: dict[int, list[int]] = {}
    for j, (W, _) in enumerate(verts):
        for x in _members(W):
            by_tail_member.setdefault(x, []).append(j)
    arcs = set()
    for i, (_, V) in enumerate(verts):
        for x in _members(V):
            for j in by_tail_member.get(x, ()):
                arcs.add((i, j))
    labels = [(_members(U), _members(V)) for U, V in verts]
    return Digraph(len(verts), arcs, labels)


def omega2(G: Graph, include_empty: bool = False) -> Graph:
    """Partial right adjoint for the grid template.

    Vertices are pairs ``(A, B)`` of completely joined sets; ``(A, B) ~ (C, D)``
    iff A, C and B, D are completely joined and both ``A & D`` and ``B & C``
    are non-empty. Pairs with an empty component are isolated and are left
    out unless ``include_empty`` is set.
    """
    _guard(G)
    joined = _Joins(G.out_masks, G.n)
    lo = 0 if include_empty else 1
    verts = []
    for A in range(lo, 1 << G.n):
        for B in submasks(joined(A)):
            if B or include_empty:
                verts.append((A, B))
                _check_size(len(verts))
    arcs = []
    for i, (A, B) in enumerate(verts):
        jA, jB = joined(A), joined(B)
        for j, (C, D) in enumerate(verts):
            if A & D and B & C and not C & ~jA and not D & ~jB:
                arcs.append((i, j))
    labels = [(_members(A), _members(B)) for A, B in verts]
    return Graph(len(verts), arcs, labels)
