"""
Command-line front end.

    thinhom gen Kc:12/5 -o kc.g
    thinhom apply gamma:T3 C:5
    thinhom invariants C5.g
    thinhom hom K:4 K:3
    thinhom verify adjunction:T3 --graphs --max-n 4

Graph arguments are file paths or family descriptors (see ``describe_families``).
Exit codes: 0 success / hom found, 1 no hom / counterexample, 2 timeout or
guard skip, 64 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from .graphs import (
    Digraph, GraphFormatError, direct_product, cartesian_product, format_graph, format_labels,
    lexicographic_product, make_circular_complete, make_complete, make_cycle, make_directed_path,
    make_edgeless, make_kneser, make_path, make_pendant_join, make_transitive_tournament,
    parse_graph,
)
from .hom import (
    INFINITY, SearchTimeout, TooManyHomomorphisms, chromatic_number, circular_chromatic_number,
    core_reduce, hom_enumerate, hom_exists, is_homomorphism, odd_girth,
)
from .pultr import TemplateError, shift_graph
from . import harness

EXIT_OK, EXIT_NO, EXIT_SKIP, EXIT_USAGE = 0, 1, 2, 64
DEFAULT_SEED = 0


class UsageError(Exception):
    pass


_FAMILIES = {
    "K": (r"(\d+)", lambda n: make_complete(int(n))),
    "E": (r"(\d+)", lambda n: make_edgeless(int(n))),
    "C": (r"(\d+)", lambda n: make_cycle(int(n))),
    "P": (r"(\d+)", lambda n: make_path(int(n))),
    "DP": (r"(\d+)", lambda n: make_directed_path(int(n))),
    "TT": (r"(\d+)", lambda n: make_transitive_tournament(int(n))),
    "Kc": (r"(\d+)/(\d+)", lambda s, r: make_circular_complete(int(s), int(r))),
    "Kneser": (r"(\d+),(\d+)", lambda n, m: make_kneser(int(n), int(m))),
    "Gmn": (r"(\d+),(\d+)", lambda m, n: make_pendant_join(int(m), int(n))),
    "S": (r"(\d+),(\d+)", lambda n, k: shift_graph(int(n), int(k))),
}


def describe_families() -> str:
    return ("K:n complete, E:n edgeless, C:n cycle, P:n path with n edges, DP:n directed path, "
            "TT:n transitive tournament, Kc:s/r circular complete, Kneser:n,m, "
            "Gmn:m,n obstruction graph, S:n,k shift graph")


def parse_descriptor(text: str) -> Digraph:
    name, sep, arg = text.partition(":")
    if not sep or name not in _FAMILIES:
        raise UsageError(f"unknown family descriptor {text!r} ({describe_families()})")
    pattern, build = _FAMILIES[name]
    m = re.fullmatch(pattern, arg)
    if not m:
        raise UsageError(f"bad arguments in descriptor {text!r}")
    try:
        return build(*m.groups())
    except ValueError as exc:
        raise UsageError(f"{text}: {exc}") from exc


def load_graph(arg: str) -> Digraph:
    """A path to a graph file, or a family descriptor."""
    if os.path.exists(arg):
        with open(arg) as fh:
            return parse_graph(fh.read())
    if ":" in arg:
        return parse_descriptor(arg)
    raise UsageError(f"no such file: {arg}")


def _emit_graph(G: Digraph, out: str | None, labels: bool = True):
    text = format_graph(G)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
        if labels and G.labels is not None:
            with open(out + ".labels", "w") as fh:
                fh.write(format_labels(G))
    else:
        sys.stdout.write(text)


def _info(args, msg: str):
    # keep stdout clean when it carries the graph itself
    stream = sys.stderr if getattr(args, "output", None) is None and args.command in ("gen", "apply") else sys.stdout
    print(msg, file=stream)


def _timeout(args) -> float | None:
    return None if args.timeout_ms is None else args.timeout_ms / 1000.0


def _config_line(args) -> str:
    return (f"# config seed={args.seed} timeout_ms={args.timeout_ms} "
            f"core_reduce={not args.no_core_reduce} max_witnesses={args.max_witnesses}")


def cmd_gen(args) -> int:
    G = parse_descriptor(args.descriptor)
    _emit_graph(G, args.output)
    kind = "graph" if G.is_symmetric() else "digraph"
    count = len(G.edges()) if kind == "graph" else G.num_arcs
    _info(args, f"{args.descriptor}: {kind} with {G.n} vertices and {count} {'edges' if kind == 'graph' else 'arcs'}")
    return EXIT_OK


_PRODUCTS = {"x": direct_product, "box": cartesian_product, "lex": lexicographic_product}


def cmd_apply(args) -> int:
    G = load_graph(args.input)
    fid = args.functor
    if fid.startswith("prod:"):
        star = fid.split(":", 1)[1]
        if star not in _PRODUCTS or args.second is None:
            raise UsageError("prod:x|box|lex needs a second input")
        R = _PRODUCTS[star](G, load_graph(args.second))
    else:
        try:
            F = harness.get_functor(fid, core=not args.no_core_reduce, timeout=_timeout(args))
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        R = F(G)
    _emit_graph(R, args.output)
    _info(args, f"{fid}: {R.n} vertices, {R.num_arcs} arcs, loops: {'yes' if R.has_loops else 'no'}")
    return EXIT_OK


def cmd_invariants(args) -> int:
    G = load_graph(args.input)
    t = _timeout(args)
    print(_config_line(args))
    chi = chromatic_number(G, t)
    print(f"vertices {G.n}")
    print(f"arcs {G.num_arcs}")
    print(f"chi {'inf' if chi == INFINITY else chi}")
    if G.has_loops or G.n == 0:
        print("chi_c undefined")
    else:
        print(f"chi_c {circular_chromatic_number(G, t)}")
    og = odd_girth(G)
    print(f"odd_girth {'inf' if og == INFINITY else og}")
    if not args.no_core_reduce:
        print(f"core_size {core_reduce(G, t).n}")
    return EXIT_OK


def _parse_witness(text: str) -> tuple[int, ...]:
    if os.path.exists(text):
        with open(text) as fh:
            text = fh.read()
    vals = [int(x) for x in re.split(r"[\s,]+", text.strip()) if x]
    return tuple(vals)


def _format_witness(f) -> str:
    return " ".join(str(x) for x in f)


def cmd_hom(args) -> int:
    G, H = load_graph(args.source), load_graph(args.target)
    if args.check_witness is not None:
        f = _parse_witness(args.check_witness)
        ok = len(f) == G.n and all(0 <= x < H.n for x in f) and is_homomorphism(G, H, f)
        print("VALID" if ok else "INVALID")
        return EXIT_OK if ok else EXIT_NO
    t = _timeout(args)
    if args.max_witnesses > 1:
        # lexicographically first witnesses; falls back to one when there are too many to sort
        try:
            ws = hom_enumerate(G, H, timeout=t)[:args.max_witnesses]
        except TooManyHomomorphisms:
            w = hom_exists(G, H, timeout=t)
            ws = [] if w is None else [w]
    else:
        w = hom_exists(G, H, timeout=t)
        ws = [] if w is None else [w]
    if not ws:
        print("NONE")
        return EXIT_NO
    for w in ws:
        print(_format_witness(w))
    return EXIT_OK


def cmd_hom_eq(args) -> int:
    G, H = load_graph(args.first), load_graph(args.second)
    t = _timeout(args)
    there, back = hom_exists(G, H, timeout=t), hom_exists(H, G, timeout=t)
    print(f"forward {_format_witness(there) if there is not None else 'NONE'}")
    print(f"backward {_format_witness(back) if back is not None else 'NONE'}")
    same = there is not None and back is not None
    print("EQUIVALENT" if same else "NOT EQUIVALENT")
    return EXIT_OK if same else EXIT_NO


def _corpus(args, directed: bool | None = None):
    if args.random:
        return harness.Corpus("seeded-random", args.max_n, min_n=args.min_n, p=args.p, seed=args.seed,
                              count=args.count, directed=bool(directed if directed is not None else args.digraphs))
    kind = "exhaustive-digraphs" if (directed if directed is not None else args.digraphs) else "exhaustive-graphs"
    return harness.Corpus(kind, args.max_n, min_n=args.min_n, iso_reduce=args.iso_reduce)


def run_suite(args):
    """Dispatch a suite id to the harness; returns a report or a Poljak-Rodl record."""
    sid = args.suite
    name, _, arg = sid.partition(":")
    t = _timeout(args) if args.timeout_ms is not None else harness.DEFAULT_TIMEOUT
    explicit_kind = args.graphs or args.digraphs
    if name == "adjunction":
        if arg not in harness.ADJUNCTIONS:
            raise UsageError(f"unknown adjunction {arg!r}; choose from {', '.join(harness.ADJUNCTIONS)}")
        directed = harness.ADJUNCTIONS[arg][2] == "digraphs"
        return harness.suite_adjunction(arg, _corpus(args, directed if not explicit_kind else None), timeout=t)
    if name == "partial-adjunction":
        return harness.suite_partial_adjunction(_corpus(args, False), timeout=t)
    if name == "product":
        functor, _, prod = arg.partition(",")
        directed = functor in ("delta", "deltaR")
        expect = "FAIL" if prod == "box" else "PASS"
        return harness.suite_product_preservation(functor, _corpus(args, directed if not explicit_kind else None),
                                                  product=prod or "x", timeout=t, expect=expect)
    if name == "multiplicativity":
        K = load_graph(arg or "K:3")
        directed = args.digraphs
        expect = "FAIL" if directed and K.n >= 3 else "PASS"
        return harness.suite_multiplicativity(K, _corpus(args), timeout=t, expect=expect)
    if name == "chromatic":
        return harness.suite_chromatic_identities(_corpus(args, False), timeout=t)
    if name == "arc-graph":
        graphs = harness.Corpus("exhaustive-graphs", args.max_n + 1)
        return harness.suite_arc_graph(_corpus(args, True), graphs, timeout=t)
    if name == "circular":
        return harness.suite_circular(int(arg) if arg else 10, timeout=t)
    if name == "poljak-rodl":
        return harness.suite_poljak_rodl(int(arg) if arg else 3, timeout=t)
    if name == "strong-mult":
        m, n = (int(x) for x in arg.split(",")) if arg else (5, 3)
        return harness.suite_strong_mult(m, n, timeout=_timeout(args) or 120.0)
    if name == "chains":
        corpus = harness.Corpus("seeded-random", args.max_n, min_n=args.min_n, seed=args.seed, count=args.count)
        return harness.suite_functor_chains(corpus, timeout=t, core=not args.no_core_reduce)
    if name == "chain-indexing":
        return harness.resolve_chain_indexing(timeout=t)
    raise UsageError(f"unknown suite {sid!r}")


def cmd_verify(args) -> int:
    result = run_suite(args)
    header = {"command": "verify", "suite": args.suite, "seed": args.seed, "timeout_ms": args.timeout_ms,
              "core_reduce": not args.no_core_reduce, "max_n": args.max_n, "min_n": args.min_n,
              "random": args.random, "count": args.count, "iso_reduce": args.iso_reduce}
    if isinstance(result, harness.VerificationReport):
        result.config = {"cli": header, **result.config}
        doc = result.to_json(timing=args.timing)
        text = result.format_text()
        if result.counterexamples or any(r.violations for r in result.laws):
            code = EXIT_NO
        elif result.skipped:
            code = EXIT_SKIP
        else:
            code = EXIT_OK
    elif isinstance(result, harness.PoljakRodlRecord):
        d = {"cli": header, **result.to_dict()}
        doc = json.dumps(d, indent=2, sort_keys=True)
        text = (f"poljak-rodl n={result.n}: {'FOUND' if result.found else 'NOT-FOUND'} "
                f"after {result.pairs_searched} pairs; corpus upper bound on psi: {result.psi_upper}; "
                f"on psi': {result.psi_prime_upper}")
        if result.found:
            text += f"\nG:\n{format_graph(result.G)}H:\n{format_graph(result.H)}"
        code = EXIT_OK if result.found else EXIT_NO
    else:
        doc = json.dumps({"cli": header, **result}, indent=2, sort_keys=True)
        text = "chain indexing: matching readings " + ", ".join(result["matches"] or ["none"])
        code = EXIT_OK if result["matches"] else EXIT_NO
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(doc + "\n")
    print(text if not args.json else doc)
    return code


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--timeout-ms", type=int, default=None, help="per-search timeout")
    common.add_argument("--max-witnesses", type=int, default=1)
    common.add_argument("--no-core-reduce", action="store_true")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p = _Parser(prog="thinhom", description="Graph homomorphism functors and verification suites.",
                epilog="graph arguments: a file or a descriptor (" + describe_families() + ")")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", parents=[common], help="write a graph family member")
    g.add_argument("descriptor")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    a = sub.add_parser("apply", parents=[common], help="apply a functor")
    a.add_argument("functor", help="lambda:T3 gamma:T3 delta deltaR omega:3 omega:5 omega2 gamma:T2 L:m/n R:n/m prod:x|box|lex")
    a.add_argument("input")
    a.add_argument("second", nargs="?")
    a.add_argument("-o", "--output")
    a.set_defaults(func=cmd_apply)

    i = sub.add_parser("invariants", parents=[common], help="chi, chi_c, odd girth, core size")
    i.add_argument("input")
    i.set_defaults(func=cmd_invariants)

    h = sub.add_parser("hom", parents=[common], help="find a homomorphism")
    h.add_argument("source")
    h.add_argument("target")
    h.add_argument("--check-witness", metavar="MAP", help="validate a map given inline or as a file")
    h.set_defaults(func=cmd_hom)

    e = sub.add_parser("hom-eq", parents=[common], help="test homomorphic equivalence")
    e.add_argument("first")
    e.add_argument("second")
    e.set_defaults(func=cmd_hom_eq)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", help="adjunction:<T3|T5|T2|x,K2|arc|omega3|omega5|deltaR|omega2>, partial-adjunction, "
                                 "product:<functor>[,box], multiplicativity:<K>, chromatic, arc-graph, circular, "
                                 "poljak-rodl:<n>, strong-mult:<m,n>, chains, chain-indexing")
    kind = v.add_mutually_exclusive_group()
    kind.add_argument("--graphs", action="store_true")
    kind.add_argument("--digraphs", action="store_true")
    v.add_argument("--max-n", type=int, default=3)
    v.add_argument("--min-n", type=int, default=1)
    v.add_argument("--random", action="store_true", help="seeded random corpus instead of exhaustive")
    v.add_argument("--count", type=int, default=20)
    v.add_argument("--p", type=float, default=0.5)
    v.add_argument("--iso-reduce", action="store_true")
    v.add_argument("--timing", action="store_true", help="include wall time in the structured report")
    v.add_argument("--json", action="store_true", help="print the structured report")
    v.add_argument("-o", "--output")
    v.set_defaults(func=cmd_verify)
    return p


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphFormatError, TemplateError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SearchTimeout, TooManyHomomorphisms) as exc:
        print(f"SKIP: {type(exc).__name__} {exc}", file=sys.stderr)
        return EXIT_SKIP
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
