"""
Homomorphism search between finite digraphs, and the invariants built on it.

The solver keeps one bitmask domain per source vertex, maintains arc
consistency after every assignment, and branches on the variable with the
fewest remaining candidates (ties go to the lowest index). Targets that are
loop-free complete graphs are routed to an exact DSATUR colouring search,
which breaks colour symmetry.

Witnesses are plain tuples: ``f[u]`` is the image of source vertex ``u``.
"""

from __future__ import annotations

import math
import time
from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping, Sequence

from .graphs import Digraph, Graph, induced_subgraph, make_circular_complete, make_complete

__all__ = [
    "INFINITY", "SearchTimeout", "TooManyHomomorphisms", "DEFAULT_ENUM_LIMIT",
    "is_homomorphism", "compose", "hom_exists", "hom_enumerate", "hom_project",
    "hom_equivalent", "chromatic_number", "circular_chromatic_number",
    "odd_girth", "core_reduce", "clique_lower_bound", "weak_components",
]

INFINITY = math.inf
DEFAULT_ENUM_LIMIT = 10**6


class SearchTimeout(Exception):
    """A search ran past its deadline."""


class TooManyHomomorphisms(Exception):
    """An enumeration exceeded its witness limit."""


def is_homomorphism(G: Digraph, H: Digraph, f: Sequence[int]) -> bool:
    if len(f) != G.n or any(not 0 <= x < H.n for x in f):
        return False
    return all(H.has_arc(f[u], f[v]) for u, v in G.arcs)


def compose(f: Sequence[int], g: Sequence[int]) -> tuple[int, ...]:
    """The map ``u -> g[f[u]]`` (first f, then g)."""
    return tuple(g[x] for x in f)


def weak_components(G: Digraph) -> list[list[int]]:
    seen = [False] * G.n
    comps = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [], [s]
        while stack:
            u = stack.pop()
            comp.append(u)
            mask = G.out_masks[u] | G.in_masks[u]
            while mask:
                low = mask & -mask
                w = low.bit_length() - 1
                mask ^= low
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _deadline(timeout):
    if timeout is None:
        return None
    if timeout <= 0:
        raise SearchTimeout("no time budget")
    return time.monotonic() + timeout


class _Search:
    def __init__(self, G: Digraph, H: Digraph, restrict: Mapping[int, Iterable[int]] | None, deadline):
        self.G, self.H = G, H
        self.out_g = [G.out_neighbors(u) for u in range(G.n)]
        self.in_g = [G.in_neighbors(u) for u in range(G.n)]
        self.h_out = H.out_masks
        self.h_in = H.in_masks
        self.deadline = deadline
        self.ticks = 0
        self._out_cache: dict[int, int] = {}
        self._in_cache: dict[int, int] = {}
        full = (1 << H.n) - 1
        looped = sum(1 << x for x in H.loops)
        D = [full] * G.n
        for u in G.loops:
            D[u] &= looped
        if restrict:
            for u, allowed in restrict.items():
                D[u] &= sum(1 << x for x in set(allowed))
        self.initial = D

    def tick(self):
        self.ticks += 1
        if self.deadline is not None and not self.ticks & 255 and time.monotonic() > self.deadline:
            raise SearchTimeout

    def _union(self, mask, table, cache):
        if not mask & (mask - 1):
            return table[mask.bit_length() - 1] if mask else 0
        hit = cache.get(mask)
        if hit is None:
            hit, m = 0, mask
            while m:
                low = m & -m
                hit |= table[low.bit_length() - 1]
                m ^= low
            if len(cache) < 200000:
                cache[mask] = hit
        return hit

    def propagate(self, D, queue) -> bool:
        queued = set(queue)
        queue = list(queue)
        out_g, in_g = self.out_g, self.in_g
        while queue:
            w = queue.pop()
            queued.discard(w)
            dw = D[w]
            if out_g[w]:
                sup = self._union(dw, self.h_out, self._out_cache)
                for z in out_g[w]:
                    nd = D[z] & sup
                    if nd != D[z]:
                        if not nd:
                            return False
                        D[z] = nd
                        if z not in queued:
                            queued.add(z)
                            queue.append(z)
            if in_g[w]:
                sup = self._union(D[w], self.h_in, self._in_cache)
                for z in in_g[w]:
                    nd = D[z] & sup
                    if nd != D[z]:
                        if not nd:
                            return False
                        D[z] = nd
                        if z not in queued:
                            queued.add(z)
                            queue.append(z)
        return True

    def start(self):
        D = list(self.initial)
        if any(d == 0 for d in D):
            return None
        if not self.propagate(D, range(len(D))):
            return None
        return D

    @staticmethod
    def choose(D, candidates):
        best, best_count = None, None
        for v in candidates:
            c = D[v].bit_count()
            if c > 1 and (best_count is None or c < best_count):
                best, best_count = v, c
                if c == 2:
                    break
        return best

    def dfs(self, D0, candidates):
        """Yield domain vectors in which every candidate variable is fixed,
        in increasing lexicographic order of the branching decisions."""
        var = self.choose(D0, candidates)
        if var is None:
            yield D0
            return
        stack = [[D0, var, D0[var]]]
        while stack:
            frame = stack[-1]
            D, var, rest = frame
            if not rest:
                stack.pop()
                continue
            low = rest & -rest
            frame[2] = rest ^ low
            self.tick()
            ND = D[:]
            ND[var] = low
            if not self.propagate(ND, [var]):
                continue
            nxt = self.choose(ND, candidates)
            if nxt is None:
                yield ND
                continue
            stack.append([ND, nxt, ND[nxt]])


def _value(mask: int) -> int:
    return mask.bit_length() - 1


def _is_complete_target(H: Digraph) -> bool:
    return not H.has_loops and H.num_arcs == H.n * (H.n - 1)


def hom_exists(G: Digraph, H: Digraph, restrict: Mapping[int, Iterable[int]] | None = None,
               timeout: float | None = None) -> tuple[int, ...] | None:
    """Return a homomorphism ``G -> H`` as a tuple, or ``None`` if none exists.

    ``restrict`` optionally limits the images of chosen source vertices.
    Raises :class:`SearchTimeout` when ``timeout`` seconds elapse.
    """
    if G.n == 0:
        return ()
    if H.n == 0:
        return None
    deadline = _deadline(timeout)
    if not restrict and _is_complete_target(H):
        return _colour(G, H.n, deadline)
    search = _Search(G, H, restrict, deadline)
    D = search.start()
    if D is None:
        return None
    for comp in weak_components(G):
        sol = next(search.dfs(D, comp), None)
        if sol is None:
            return None
        for v in comp:
            D[v] = sol[v]
    return tuple(_value(d) for d in D)


def _component_solutions(search, D, comp, limit):
    sols = []
    for sol in search.dfs(D, comp):
        sols.append(tuple(_value(sol[v]) for v in comp))
        if len(sols) > limit:
            raise TooManyHomomorphisms(f"more than {limit} homomorphisms")
    return sols


def hom_enumerate(G: Digraph, H: Digraph, limit: int = DEFAULT_ENUM_LIMIT,
                  restrict: Mapping[int, Iterable[int]] | None = None,
                  timeout: float | None = None) -> list[tuple[int, ...]]:
    """All homomorphisms ``G -> H`` in lexicographic order of the map array."""
    if G.n == 0:
        return [()]
    if H.n == 0:
        return []
    search = _Search(G, H, restrict, _deadline(timeout))
    D = search.start()
    if D is None:
        return []
    comps = weak_components(G)
    per_comp = [_component_solutions(search, D, comp, limit) for comp in comps]
    total = math.prod(len(s) for s in per_comp)
    if total > limit:
        raise TooManyHomomorphisms(f"{total} homomorphisms exceed the limit {limit}")
    out = []
    for combo in product(*per_comp):
        f = [0] * G.n
        for comp, vals in zip(comps, combo):
            for v, x in zip(comp, vals):
                f[v] = x
        out.append(tuple(f))
    out.sort()
    return out


def hom_project(G: Digraph, H: Digraph, onto: Sequence[int],
                restrict: Mapping[int, Iterable[int]] | None = None,
                timeout: float | None = None, limit: int = DEFAULT_ENUM_LIMIT) -> list[tuple[int, ...]]:
    """Distinct restrictions ``(f[v] for v in onto)`` of homomorphisms ``f: G -> H``, sorted.

    Branches on the ``onto`` variables first and then only asks whether the
    partial map extends, so the cost scales with the number of distinct
    projections rather than the number of homomorphisms.
    """
    if H.n == 0:
        return [] if G.n else [tuple()]
    search = _Search(G, H, restrict, _deadline(timeout))
    D = search.start()
    if D is None:
        return []
    keys = sorted(set(onto))
    comps = weak_components(G)
    found = set()
    for partial in search.dfs(D, keys):
        if all(next(search.dfs(partial, comp), None) is not None for comp in comps):
            found.add(tuple(_value(partial[v]) for v in onto))
            if len(found) > limit:
                raise TooManyHomomorphisms(f"more than {limit} projections")
    return sorted(found)


def hom_equivalent(G: Digraph, H: Digraph, timeout: float | None = None) -> bool:
    return hom_exists(G, H, timeout=timeout) is not None and hom_exists(H, G, timeout=timeout) is not None


# ---------------------------------------------------------------------------
# Colouring

def _undirected_masks(G: Digraph) -> list[int]:
    return [(G.out_masks[u] | G.in_masks[u]) & ~(1 << u) for u in range(G.n)]


def clique_lower_bound(G: Digraph, starts: int = 32) -> int:
    """Size of a clique found greedily in the underlying undirected graph."""
    adj = _undirected_masks(G)
    if G.n == 0:
        return 0
    order = sorted(range(G.n), key=lambda v: (-adj[v].bit_count(), v))
    best = 1
    for s in order[:starts]:
        size, cand = 1, adj[s]
        while cand:
            m, pick = cand, None
            best_deg = -1
            while m:
                low = m & -m
                w = low.bit_length() - 1
                m ^= low
                d = (adj[w] & cand).bit_count()
                if d > best_deg:
                    pick, best_deg = w, d
            size += 1
            cand &= adj[pick]
        best = max(best, size)
    return best


def _greedy_dsatur(adj: list[int]) -> int:
    n = len(adj)
    colour = [-1] * n
    nbc = [0] * n
    used = 0
    for _ in range(n):
        v = max((u for u in range(n) if colour[u] < 0),
                key=lambda u: (nbc[u].bit_count(), adj[u].bit_count(), -u))
        c = 0
        while nbc[v] >> c & 1:
            c += 1
        colour[v] = c
        used = max(used, c + 1)
        m = adj[v]
        while m:
            low = m & -m
            nbc[low.bit_length() - 1] |= 1 << c
            m ^= low
    return used


def _colour(G: Digraph, k: int, deadline) -> tuple[int, ...] | None:
    """Exact k-colouring by DSATUR backtracking, or None."""
    if G.has_loops:
        return None
    n = G.n
    adj = _undirected_masks(G)
    if k <= 0:
        return () if n == 0 else None
    if clique_lower_bound(G, starts=8) > k:
        return None
    nbrs = [[w for w in range(n) if adj[v] >> w & 1] for v in range(n)]
    deg = [len(x) for x in nbrs]
    colour = [-1] * n
    cnt = [[0] * k for _ in range(n)]
    nbc = [0] * n
    class_size = [0] * k
    full = (1 << k) - 1
    state = {"ncols": 0, "ticks": 0}

    def assign(v, c):
        colour[v] = c
        if class_size[c] == 0:
            state["ncols"] += 1
        class_size[c] += 1
        ok = True
        for w in nbrs[v]:
            if colour[w] < 0:
                cnt[w][c] += 1
                if cnt[w][c] == 1:
                    nbc[w] |= 1 << c
                    if nbc[w] == full:
                        ok = False
        return ok

    def unassign(v):
        c = colour[v]
        colour[v] = -1
        class_size[c] -= 1
        if class_size[c] == 0:
            state["ncols"] -= 1
        for w in nbrs[v]:
            if colour[w] < 0:
                cnt[w][c] -= 1
                if cnt[w][c] == 0:
                    nbc[w] &= ~(1 << c)

    def select():
        best, key = None, None
        for u in range(n):
            if colour[u] < 0:
                kk = (nbc[u].bit_count(), deg[u])
                if key is None or kk > key:
                    best, key = u, kk
        return best

    def options(v):
        top = min(state["ncols"] + 1, k)
        return [c for c in range(top) if not nbc[v] >> c & 1]

    v = select()
    if v is None:
        return ()
    stack = [[v, options(v), 0]]
    while stack:
        frame = stack[-1]
        v, opts, i = frame
        if colour[v] >= 0:
            unassign(v)
        if i == len(opts):
            stack.pop()
            continue
        frame[2] = i + 1
        state["ticks"] += 1
        if deadline is not None and not state["ticks"] & 255 and time.monotonic() > deadline:
            raise SearchTimeout
        if not assign(v, opts[i]):
            continue
        w = select()
        if w is None:
            return tuple(colour)
        stack.append([w, options(w), 0])
    return None


def chromatic_number(G: Digraph, timeout: float | None = None):
    """Least n with ``G -> K_n`` (arc directions ignored); ``INFINITY`` on loops."""
    if G.has_loops:
        return INFINITY
    if G.n == 0:
        return 0
    if G.num_arcs == 0:
        return 1
    lb = max(2, clique_lower_bound(G))
    ub = _greedy_dsatur(_undirected_masks(G))
    for k in range(lb, ub):
        if hom_exists(G, make_complete(k), timeout=timeout) is not None:
            return k
    return ub


def _fraction_ladder(n: int, top) -> list[Fraction]:
    fr = {Fraction(s, r) for s in range(2, n + 1) for r in range(1, s // 2 + 1)}
    return sorted(f for f in fr if f <= top)


def circular_chromatic_number(G: Digraph, timeout: float | None = None) -> Fraction:
    """Least s/r with ``G -> K_{s/r}``.

    Candidates are reduced fractions with numerator at most ``|V(G)|``
    (the circular chromatic number of a finite graph always has such a
    representation); since the hom-order on circular complete graphs follows
    the order of the fractions, the ladder is binary searched.
    """
    if G.has_loops:
        raise ValueError("circular chromatic number is undefined for graphs with loops")
    if G.n == 0:
        raise ValueError("circular chromatic number of the empty graph is undefined")
    if G.num_arcs == 0:
        return Fraction(1)
    chi = chromatic_number(G, timeout=timeout)
    ladder = _fraction_ladder(G.n, chi)
    lo, hi = 0, len(ladder) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        f = ladder[mid]
        if hom_exists(G, make_circular_complete(f.numerator, f.denominator), timeout=timeout) is not None:
            hi = mid
        else:
            lo = mid + 1
    return ladder[lo]


def odd_girth(G: Digraph):
    """Length of a shortest odd closed walk in the underlying graph, or INFINITY."""
    adj = [G.out_neighbors(u) + G.in_neighbors(u) for u in range(G.n)]
    best = INFINITY
    for s in range(G.n):
        # BFS in the bipartite double cover from (s, 0) to (s, 1)
        dist = {(s, 0): 0}
        frontier = [(s, 0)]
        d = 0
        while frontier and d + 1 < best:
            d += 1
            nxt = []
            for u, p in frontier:
                for w in adj[u]:
                    key = (w, 1 - p)
                    if key not in dist:
                        dist[key] = d
                        nxt.append(key)
            if (s, 1) in dist:
                best = min(best, dist[(s, 1)])
                break
            frontier = nxt
    return best


def core_reduce(G: Digraph, timeout: float | None = None) -> Digraph:
    """An induced subgraph of G that is a core and homomorphically equivalent to G.

    Vertices are tried in increasing order; whenever the current graph maps
    into itself minus a vertex, it is replaced by the image of that map.
    Labels of the result are the labels of the retained vertices of G.
    """
    if G.n == 0:
        return G
    loops = G.loops
    if loops:
        return induced_subgraph(G, [min(loops)])
    if not G.arcs:
        return induced_subgraph(G, [0])
    if G.is_symmetric() and odd_girth(G) == INFINITY:
        u, v = min(G.arcs)
        return induced_subgraph(G, [u, v])
    C = G
    changed = True
    while changed and not _is_complete_target(C):
        changed = False
        for v in range(C.n):
            keep = [x for x in range(C.n) if x != v]
            f = hom_exists(C, induced_subgraph(C, keep), timeout=timeout)
            if f is not None:
                C = induced_subgraph(C, sorted({keep[x] for x in f}))
                changed = True
                break
    return C
