"""
Pultr templates and the functors they generate.

A template ``(P, Q, eps1, eps2)`` gives a left functor (glue a copy of Q
along every arc, attached to per-vertex copies of P) and a central functor
(vertices are the homomorphisms ``P -> H``, arcs come from homomorphisms
``Q -> H``). Templates carrying a symmetry witness act on graphs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import (
    Digraph, Graph, cartesian_product, direct_product, format_graph, identify,
    lexicographic_product, make_complete, make_directed_path, make_edgeless,
    make_path, make_transitive_tournament, parse_graph,
)
from .hom import DEFAULT_ENUM_LIMIT, core_reduce, hom_enumerate, hom_project, is_homomorphism

__all__ = [
    "PultrTemplate", "TemplateError", "validate_template", "find_symmetry",
    "lambda_functor", "gamma_functor", "template_path", "template_arc",
    "template_product", "template_box2", "delta", "delta_left", "shift_graph",
    "chain_left", "chain_right", "format_template", "parse_template",
]


class TemplateError(ValueError):
    pass


@dataclass(frozen=True)
class PultrTemplate:
    P: Digraph
    Q: Digraph
    eps1: tuple[int, ...]
    eps2: tuple[int, ...]
    symmetry: tuple[int, ...] | None = None
    name: str = field(default="T", compare=False)

    @property
    def symmetric(self) -> bool:
        return self.symmetry is not None


def validate_template(T: PultrTemplate) -> list[str]:
    """Diagnostics for a template; an empty list means it is valid."""
    problems = []
    for label, eps in (("eps1", T.eps1), ("eps2", T.eps2)):
        if len(eps) != T.P.n:
            problems.append(f"{label} has {len(eps)} entries but P has {T.P.n} vertices")
        elif not is_homomorphism(T.P, T.Q, eps):
            problems.append(f"{label} is not a homomorphism P -> Q")
    q = T.symmetry
    if q is not None:
        if not (T.P.is_symmetric() and T.Q.is_symmetric()):
            problems.append("symmetry witness given but P or Q is not a graph")
        if sorted(q) != list(range(T.Q.n)):
            problems.append("symmetry witness is not a permutation of V(Q)")
        elif not is_homomorphism(T.Q, T.Q, q):
            problems.append("symmetry witness is not an automorphism of Q")
        elif not problems:
            if any(q[a] != b for a, b in zip(T.eps1, T.eps2)):
                problems.append("symmetry witness does not send eps1 to eps2")
            if any(q[b] != a for a, b in zip(T.eps1, T.eps2)):
                problems.append("symmetry witness does not send eps2 to eps1")
    return problems


def find_symmetry(T: PultrTemplate) -> tuple[int, ...] | None:
    """Search the automorphisms of Q for one exchanging eps1 and eps2."""
    for q in hom_enumerate(T.Q, T.Q):
        if len(set(q)) != T.Q.n:
            continue
        if all(q[a] == b and q[b] == a for a, b in zip(T.eps1, T.eps2)):
            return q
    return None


def _mode(T: PultrTemplate, G: Digraph, mode: str | None) -> str:
    if mode is None:
        return "graph" if T.symmetric and isinstance(G, Graph) else "digraph"
    if mode == "graph":
        if not T.symmetric:
            raise TemplateError(f"template {T.name} has no symmetry witness; graph mode unavailable")
        if not G.is_symmetric():
            raise TemplateError("graph mode needs a graph input")
    elif mode != "digraph":
        raise ValueError(f"unknown mode {mode!r}")
    return mode


def lambda_functor(T: PultrTemplate, G: Digraph, mode: str | None = None) -> Digraph:
    """Left Pultr functor.

    Vertices of copy ``P_u`` come first (``u * |P| + p``), then the Q-copies
    in sorted arc order (graph mode: one copy per edge ``u <= v``) before the
    gluing quotient. Labels are ``('P', u, p)`` or ``('Q', (u, v), q)``.
    """
    mode = _mode(T, G, mode)
    P, Q = T.P, T.Q
    attach = G.edges() if mode == "graph" else G.sorted_arcs()
    base = G.n * P.n
    total = base + len(attach) * Q.n
    arcs, pairs = [], []
    labels = [("P", u, p) for u in range(G.n) for p in range(P.n)]
    for u in range(G.n):
        arcs += [(u * P.n + a, u * P.n + b) for a, b in P.arcs]
    for i, (u, v) in enumerate(attach):
        off = base + i * Q.n
        arcs += [(off + a, off + b) for a, b in Q.arcs]
        labels += [("Q", (u, v), q) for q in range(Q.n)]
        pairs += [(off + T.eps1[p], u * P.n + p) for p in range(P.n)]
        pairs += [(off + T.eps2[p], v * P.n + p) for p in range(P.n)]
    cls = Graph if mode == "graph" else Digraph
    return identify(cls(total, arcs, labels), pairs)


def gamma_functor(T: PultrTemplate, H: Digraph, mode: str | None = None,
                  limit: int = DEFAULT_ENUM_LIMIT, timeout: float | None = None) -> Digraph:
    """Central Pultr functor.

    Vertices are the homomorphisms ``P -> H`` in lexicographic order (each
    stored as its label); ``f1 -> f2`` is an arc iff some ``g: Q -> H`` has
    ``g o eps1 = f1`` and ``g o eps2 = f2``.
    """
    mode = _mode(T, H, mode)
    verts = hom_enumerate(T.P, H, limit=limit, timeout=timeout)
    index = {f: i for i, f in enumerate(verts)}
    k = T.P.n
    arcs = []
    for proj in hom_project(T.Q, H, list(T.eps1) + list(T.eps2), timeout=timeout, limit=limit):
        arcs.append((index[proj[:k]], index[proj[k:]]))
    cls = Graph if mode == "graph" else Digraph
    return cls(len(verts), arcs, verts)


# ---------------------------------------------------------------------------
# Built-in templates

def template_path(k: int) -> PultrTemplate:
    """(K_1, P_k, ends): replaces edges by paths of length k / joins k-walks."""
    if k < 3 or k % 2 == 0:
        raise ValueError("path template needs an odd length >= 3")
    return PultrTemplate(Graph(1), make_path(k), (0,), (k,), tuple(k - i for i in range(k + 1)), f"T{k}")


def template_arc() -> PultrTemplate:
    return PultrTemplate(make_directed_path(1), make_directed_path(2), (0, 1), (1, 2), None, "arc")


_PRODUCTS = {"x": direct_product, "box": cartesian_product, "lex": lexicographic_product}


def template_product(star: str, H: Graph) -> PultrTemplate:
    """(H * K_1, H * K_2, u -> (u, 0), u -> (u, 1)) for ``star`` in ``x``, ``box``, ``lex``.

    Pair ``(u, i)`` of ``H * K_2`` is vertex ``2u + i``.
    """
    prod = _PRODUCTS[star]
    P = prod(H, make_complete(1))
    Q = prod(H, make_complete(2))
    eps1 = tuple(2 * u for u in range(H.n))
    eps2 = tuple(2 * u + 1 for u in range(H.n))
    swap = tuple(x ^ 1 for x in range(Q.n))
    return PultrTemplate(P, Q, eps1, eps2, swap, f"{star},{H.n}")


def template_box2(bar: bool = False) -> PultrTemplate:
    """The limit template on the 2x3 grid P_1 box P_2 (vertex (i, j) is 3i + j).

    ``bar=True`` uses two isolated vertices instead of an edge as P, which
    only changes the functors on edgeless graphs.
    """
    P = make_edgeless(2) if bar else make_complete(2)
    Q = cartesian_product(make_path(1), make_path(2))
    rotate = tuple(5 - x for x in range(6))
    return PultrTemplate(P, Q, (0, 3), (5, 2), rotate, "T2bar" if bar else "T2")


def delta(G: Digraph) -> Digraph:
    """Arc graph: vertices are the arcs of G (labelled by the arc), arcs join consecutive arcs."""
    return gamma_functor(template_arc(), G, mode="digraph")


def delta_left(G: Digraph) -> Digraph:
    return lambda_functor(template_arc(), G, mode="digraph")


def shift_graph(n: int, k: int) -> Digraph:
    """S(n, k): the arc graph iterated k - 1 times on the transitive tournament."""
    if k < 1:
        raise ValueError("k must be >= 1")
    D = make_transitive_tournament(n)
    for _ in range(k - 1):
        D = delta(D)
    return D


def _maybe_core(G, core, timeout):
    return core_reduce(G, timeout=timeout) if core else G


def chain_left(m: int, n: int, G: Graph, core: bool = True, timeout: float | None = None) -> Graph:
    """``Gamma_T(m)`` after ``Lambda_T(n)``; cores are taken between stages unless ``core=False``."""
    G = _maybe_core(G, core, timeout)
    mid = _maybe_core(lambda_functor(template_path(n), G), core, timeout)
    return _maybe_core(gamma_functor(template_path(m), mid, timeout=timeout), core, timeout)


def chain_right(n: int, m: int, G: Graph, core: bool = True, timeout: float | None = None) -> Graph:
    """``Gamma_T(n)`` after ``Omega_T(m)``: the right adjoint of ``chain_left(m, n, .)``."""
    from .adjoints import omega_odd

    if m < 3 or m % 2 == 0:
        raise ValueError("m must be odd and >= 3")
    G = _maybe_core(G, core, timeout)
    mid = _maybe_core(omega_odd((m - 1) // 2, G), core, timeout)
    return _maybe_core(gamma_functor(template_path(n), mid, timeout=timeout), core, timeout)


# ---------------------------------------------------------------------------
# Template bundle format

def format_template(T: PultrTemplate) -> str:
    lines = [f"template {T.name}", format_graph(T.P).rstrip("\n"), format_graph(T.Q).rstrip("\n"),
             "eps1: " + " ".join(map(str, T.eps1)), "eps2: " + " ".join(map(str, T.eps2))]
    if T.symmetry is not None:
        lines.append("symmetry: " + " ".join(map(str, T.symmetry)))
    return "\n".join(lines) + "\n"


def parse_template(text: str) -> PultrTemplate:
    name = "T"
    blocks: list[list[tuple[int, str]]] = []
    maps = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head = line.split()[0]
        if head == "template":
            name = line.split(maxsplit=1)[1] if len(line.split()) > 1 else name
        elif head in ("graph", "digraph"):
            blocks.append([(lineno, raw)])
        elif head in ("eps1:", "eps2:", "symmetry:"):
            maps[head[:-1]] = tuple(int(x) for x in line.split()[1:])
        elif blocks:
            blocks[-1].append((lineno, raw))
        else:
            raise TemplateError(f"line {lineno}: unexpected {raw!r}")
    if len(blocks) != 2 or "eps1" not in maps or "eps2" not in maps:
        raise TemplateError("template bundle needs two graph blocks and eps1/eps2 lines")
    P, Q = (parse_graph("\n".join(r for _, r in b), start_line=b[0][0]) for b in blocks)
    T = PultrTemplate(P, Q, maps["eps1"], maps["eps2"], maps.get("symmetry"), name)
    problems = validate_template(T)
    if problems:
        raise TemplateError("; ".join(problems))
    return T
