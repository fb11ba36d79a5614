"""Command-line front end.

Exit codes: 0 solved or YES, 1 NO or a failed verification, 2 usage or
parse error, 3 unsolved within the configured limits.  A JSON document is
rendered completely before anything is written to standard output.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from contextlib import contextmanager
from typing import Optional, Sequence

from .fpt import GK_LIMIT, Unsolved, decide_k, fpt_cow, gk
from .formats import ParseError, emit_edge_list, emit_graph6, parse_graph
from .graph import (Bipartition, Graph, GraphError, bipartition, check_bipartition, complement, induced,
                    is_clique, is_independent)
from .oracle import (BicliqueCover, CliqueCover, SizeLimitExceeded, Verdict, exact_biclique_cover,
                     exact_cow, exact_ecc_direct, verify_cover, verify_witness, OK)
from .patterns import (MORE, WIDTH_OBSTRUCTIONS, chain_ordering, first_obstruction, is_triangle_free_2k2_free,
                       lookup, pseudo_split_partition, small_width_class, split_partition)
from .reductions import biclique_to_cow
from .solvers import dispatch

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_UNSOLVED = 0, 1, 2, 3


class UsageError(Exception):
    pass


class Timer:
    def __init__(self):
        self.phases: dict[str, float] = {}

    @contextmanager
    def phase(self, name: str):
        start = time.perf_counter()
        try:
            yield
        finally:
            self.phases[name] = self.phases.get(name, 0.0) + time.perf_counter() - start


def digest(g: Graph) -> str:
    return "sha256:" + hashlib.sha256(emit_graph6(g).encode("ascii")).hexdigest()


def _sets(sets) -> list[list[int]]:
    return [sorted(s) for s in sets]


def _bip(b: Bipartition) -> dict:
    return {"x": sorted(b.x_side), "y": sorted(b.y_side)}


def document(g: Graph, problem: str, status: str, value, certificate, method, trace, timer) -> dict:
    doc = {
        "input_digest": digest(g),
        "problem": problem,
        "status": status,
        "value": value,
        "certificate": certificate,
        "method": method,
        "trace": trace,
        "labels": [g.name(v) for v in range(g.n)],
    }
    if timer is not None:
        doc["timings"] = {k: round(v, 6) for k, v in timer.phases.items()}
    return doc


# certificate checking -----------------------------------------------------

def _as_sets(raw) -> list[frozenset]:
    return [frozenset(int(v) for v in s) for s in raw]


def _check_recognition(g: Graph, cert: dict) -> Verdict:
    classes = cert.get("classes", {})
    chain = classes.get("chain")
    if chain is not None:
        order, ys = chain["x_order"], chain["y_side"]
        b = Bipartition(frozenset(order), frozenset(ys))
        try:
            check_bipartition(g, b)
        except GraphError as exc:
            return Verdict(False, f"chain certificate: {exc}")
        for a, c in zip(order, order[1:]):
            if g.rows[a] & ~g.rows[c]:
                return Verdict(False, f"chain certificate: N({a}) is not inside N({c})")
    for key in ("split", "pseudo_split"):
        part = classes.get(key)
        if part is None:
            continue
        q, s, cyc = part["clique"], part["stable"], part.get("cycle", [])
        if sorted(q + s + cyc) != list(range(g.n)):
            return Verdict(False, f"{key} certificate does not partition the vertices")
        if not is_clique(g, q) or not is_independent(g, s):
            return Verdict(False, f"{key} certificate: clique or stable part is wrong")
        if cyc:
            sub, _ = induced(g, cyc)
            if any(not g.has_edge(cyc[i], cyc[(i + 1) % 5]) for i in range(5)) or sub.m != 5:
                return Verdict(False, f"{key} certificate: cycle part is not an induced C5")
            for v in q:
                if any(not g.has_edge(v, c) for c in cyc):
                    return Verdict(False, f"{key} certificate: {v} misses the cycle")
            for v in s:
                if any(g.has_edge(v, c) for c in cyc):
                    return Verdict(False, f"{key} certificate: {v} touches the cycle")
    width = cert.get("width_class", {})
    if width.get("witness") is not None:
        w = _as_sets(width["witness"])
        verdict = verify_witness(g, w)
        if not verdict:
            return verdict
        if len(w) > width["at_most"]:
            return Verdict(False, "width witness is larger than the claimed bound")
    excl = width.get("excluded")
    if excl is not None:
        pat = lookup(excl["pattern"]).graph
        host = excl["embedding"]
        if len(host) != pat.n or len(set(host)) != pat.n:
            return Verdict(False, "obstruction embedding has the wrong size")
        for i in range(pat.n):
            for j in range(i + 1, pat.n):
                if pat.has_edge(i, j) != g.has_edge(host[i], host[j]):
                    return Verdict(False, f"obstruction {excl['pattern']} is not induced at {host[i]},{host[j]}")
    return OK


def check_certificate(g: Graph, cert: dict) -> Verdict:
    """Re-verify a serialized certificate against ``g``."""
    kind = cert.get("kind")
    try:
        if kind == "witness":
            return verify_witness(g, _as_sets(cert["sets"]))
        if kind == "clique_cover":
            return verify_cover(g, CliqueCover(tuple(_as_sets(cert["cliques"]))))
        if kind == "biclique_cover":
            b = Bipartition(frozenset(cert["bipartition"]["x"]), frozenset(cert["bipartition"]["y"]))
            c = BicliqueCover(tuple((frozenset(p["x"]), frozenset(p["y"])) for p in cert["bicliques"]))
            return verify_cover(g, c, b)
        if kind == "recognition":
            return _check_recognition(g, cert)
        if kind == "reduced_instance":
            b = Bipartition(frozenset(cert["bipartition"]["x"]), frozenset(cert["bipartition"]["y"]))
            r = biclique_to_cow(g, b, cert["k_prime"] - 2)
            if emit_graph6(r.g_prime) != cert["g_prime"]:
                return Verdict(False, "g_prime does not match the construction")
            return OK
    except GraphError as exc:
        return Verdict(False, str(exc))
    except (KeyError, TypeError, ValueError) as exc:
        return Verdict(False, f"malformed certificate: {exc!r}")
    return Verdict(False, f"unknown certificate kind {kind!r}")


# commands -----------------------------------------------------------------

def _witness_cert(w) -> dict:
    return {"kind": "witness", "sets": _sets(w)}


def cmd_cow(g: Graph, args, timer: Timer):
    trace = None
    if args.k is not None:
        if args.k < 0:
            raise UsageError("--k must be non-negative")
        with timer.phase("solve"):
            if args.mode == "exact":
                k, w = exact_cow(g)
                w = w if k <= args.k else None
                method = "oracle"
            else:
                w = decide_k(g, args.k)
                method = "fpt"
        yes = w is not None
        cert = _witness_cert(w) if yes else None
        return ("yes" if yes else "no"), {"k": args.k, "answer": yes}, cert, method, trace, \
            EXIT_OK if yes else EXIT_NO
    with timer.phase("solve"):
        if args.mode == "exact":
            value, w = exact_cow(g)
            method = "oracle"
        elif args.mode == "fpt":
            res = fpt_cow(g)
            value, w, method, trace = res.width, res.witness, res.method, res.reduction_prefix.summary()
        else:
            res = dispatch(g)
            value, w, method, trace = res.width, res.witness, res.method, res.reduction_prefix.summary()
    return "solved", value, _witness_cert(w), method, trace, EXIT_OK


def cmd_ecc(g: Graph, args, timer: Timer):
    trace = None
    with timer.phase("solve"):
        if args.mode == "exact":
            value, cover = exact_ecc_direct(g)
            cliques, method = cover.cliques, "oracle"
        else:
            res = fpt_cow(complement(g)) if args.mode == "fpt" else dispatch(complement(g))
            value, cliques, method = res.width, res.witness, res.method
            trace = res.reduction_prefix.summary()
    return "solved", value, {"kind": "clique_cover", "cliques": _sets(cliques)}, method, trace, EXIT_OK


def _require_bipartition(g: Graph) -> Bipartition:
    b = bipartition(g)
    if b is None:
        raise UsageError("input graph is not bipartite")
    return b


def cmd_biclique(g: Graph, args, timer: Timer):
    b = _require_bipartition(g)
    with timer.phase("solve"):
        value, cover = exact_biclique_cover(g, b)
    cert = {"kind": "biclique_cover", "bipartition": _bip(b),
            "bicliques": [{"x": sorted(x), "y": sorted(y)} for x, y in cover.bicliques]}
    return "solved", value, cert, "oracle", None, EXIT_OK


def cmd_recognize(g: Graph, args, timer: Timer):
    with timer.phase("solve"):
        classes: dict = {}
        ch = chain_ordering(g)
        classes["chain"] = None if ch is None else {
            "x_order": list(ch[1].order), "y_side": sorted(ch[0].y_side)}
        sp = split_partition(g)
        classes["split"] = None if sp is None else {"clique": sorted(sp.clique), "stable": sorted(sp.stable)}
        ps = pseudo_split_partition(g)
        classes["pseudo_split"] = None if ps is None else {
            "clique": sorted(ps.clique), "stable": sorted(ps.stable), "cycle": list(ps.cycle)}
        classes["triangle_free_2k2_free"] = is_triangle_free_2k2_free(g)
        k = small_width_class(g)
        width: dict = {"at_most": None if k == MORE else k, "witness": None, "excluded": None}
        if k != MORE:
            width["witness"] = _sets(decide_k(g, k))
        if k >= 2:
            level = min(k, MORE) - 1
            name, emb = first_obstruction(g, WIDTH_OBSTRUCTIONS[level])
            width["excluded"] = {"width": level, "pattern": name,
                                 "embedding": [emb[i] for i in range(len(emb))]}
    value = f"width>={MORE}" if k == MORE else f"width<={k}"
    cert = {"kind": "recognition", "classes": classes, "width_class": width}
    return "solved", value, cert, "forbidden_subgraphs", None, EXIT_OK


def cmd_transform(g: Graph, args, timer: Timer):
    if args.k < 0:
        raise UsageError("--k must be non-negative")
    b = _require_bipartition(g)
    with timer.phase("solve"):
        r = biclique_to_cow(g, b, args.k)
    cert = {"kind": "reduced_instance", "g_prime": emit_graph6(r.g_prime), "k_prime": r.k_prime,
            "x_apex": r.x_apex, "y_apex": r.y_apex, "bipartition": _bip(b),
            "index_map": [[s, t] for s, t in sorted(r.index_map.items())]}
    return "solved", emit_graph6(r.g_prime), cert, "biclique2cow", None, EXIT_OK


def _load_certificate(path: str) -> tuple[dict, Optional[str]]:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        # plain text: one set per line, vertex indices separated by spaces or commas
        sets = [[int(t) for t in line.replace(",", " ").split()]
                for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
        return {"kind": "witness", "sets": sets}, None
    if isinstance(data, list):
        return {"kind": "witness", "sets": data}, None
    if isinstance(data, dict) and "certificate" in data:
        if data["certificate"] is None:
            raise UsageError("document carries no certificate")
        return data["certificate"], data.get("input_digest")
    if isinstance(data, dict) and "kind" in data:
        return data, None
    raise UsageError("unrecognised certificate file")


def cmd_verify(g: Graph, args, timer: Timer):
    try:
        cert, dig = _load_certificate(args.witness)
    except ValueError as exc:
        raise UsageError(f"malformed certificate file: {exc}") from exc
    with timer.phase("verify"):
        if dig is not None and dig != digest(g):
            verdict = Verdict(False, "certificate was produced for a different graph")
        else:
            verdict = check_certificate(g, cert)
    value = "ok" if verdict else "violation"
    result = {"kind": "verdict", "ok": verdict.ok, "detail": verdict.detail, "checked": cert.get("kind")}
    return value, value, result, "verify", None, EXIT_OK if verdict else EXIT_NO


COMMANDS = {"cow": cmd_cow, "ecc": cmd_ecc, "biclique": cmd_biclique, "recognize": cmd_recognize,
            "transform": cmd_transform, "verify": cmd_verify}


# human-readable rendering --------------------------------------------------

def _names(g: Graph, s) -> str:
    return "{" + ", ".join(g.name(v) for v in sorted(s)) + "}"


def render_text(g: Graph, doc: dict) -> str:
    lines = []
    problem, value, cert = doc["problem"], doc["value"], doc["certificate"]
    if doc["status"] == "unsolved":
        return f"{problem}: unsolved ({doc['method']})\n"
    head = {"cow": "complete width", "ecc": "edge clique cover number",
            "biclique": "bipartite dimension", "recognize": "class",
            "transform": "reduced instance (graph6)", "verify": "verification"}[problem]
    if isinstance(value, dict):
        head, value = f"complete width <= {value['k']}", "YES" if value["answer"] else "NO"
    lines.append(f"{head}: {value}  [method: {doc['method']}]")
    kind = cert["kind"] if cert else None
    if kind == "witness":
        lines.append("witness:" if cert["sets"] else "witness: (no sets needed)")
        lines += ["  " + _names(g, s) for s in cert["sets"]]
    elif kind == "clique_cover":
        lines.append("cliques:")
        lines += ["  " + _names(g, s) for s in cert["cliques"]]
    elif kind == "biclique_cover":
        lines.append("bicliques:")
        lines += [f"  {_names(g, p['x'])} x {_names(g, p['y'])}" for p in cert["bicliques"]]
    elif kind == "recognition":
        classes, width = cert["classes"], cert["width_class"]
        for key, title in (("chain", "chain graph"), ("split", "split graph"),
                           ("pseudo_split", "pseudo-split graph")):
            lines.append(f"  {title}: {'yes' if classes[key] is not None else 'no'}")
        lines.append(f"  (2K2, K3)-free: {'yes' if classes['triangle_free_2k2_free'] else 'no'}")
        k = width["at_most"]
        excl = width["excluded"]
        if k is None:
            lines.append(f"  width >= {MORE}")
        elif excl is None:
            lines.append(f"  width <= {k}")
        else:
            lines.append(f"  width <= {k}, not <= {excl['width']}")
        if excl is not None:
            lines.append(f"  forbidden pattern {excl['pattern']} at "
                         + _names(g, excl["embedding"]).replace("{", "[").replace("}", "]"))
        if width["witness"] is not None:
            lines.append("  witness: " + " ".join(_names(g, s) for s in width["witness"]))
    elif kind == "reduced_instance":
        lines.append(f"  k' = {cert['k_prime']}, apexes x' = {cert['x_apex']}, y' = {cert['y_apex']}")
    elif kind == "verdict":
        if not cert["ok"]:
            lines.append("  " + cert["detail"])
    if doc.get("trace") and doc["trace"]["steps"]:
        lines.append(f"reduction: {len(doc['trace']['steps'])} steps, "
                     f"parameter delta {doc['trace']['parameter_delta']}")
    if "timings" in doc:
        lines.append("timings: " + ", ".join(f"{k} {v:.4f}s" for k, v in doc["timings"].items()))
    return "\n".join(lines) + "\n"


# argument parsing ---------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--graph6", metavar="STRING", help="graph given inline in graph6")
    src.add_argument("--file", metavar="PATH", help="read the graph from a file")
    common.add_argument("--format", choices=("auto", "graph6", "edgelist"), default="auto")
    common.add_argument("--json", action="store_true", help="print the result document as JSON")
    common.add_argument("--no-timings", action="store_true", help="omit timings from the output")

    parser = argparse.ArgumentParser(prog="cowkit", description="Complete width and edge clique cover toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cow", parents=[common], help="complete width")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", dest="mode", action="store_const", const="exact")
    mode.add_argument("--fpt", dest="mode", action="store_const", const="fpt")
    mode.add_argument("--auto", dest="mode", action="store_const", const="auto")
    p.add_argument("--k", type=int, help="decide whether the complete width is at most K")
    p.set_defaults(mode="auto")

    p = sub.add_parser("ecc", parents=[common], help="edge clique cover number")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", dest="mode", action="store_const", const="exact")
    mode.add_argument("--fpt", dest="mode", action="store_const", const="fpt")
    mode.add_argument("--auto", dest="mode", action="store_const", const="auto")
    p.set_defaults(mode="auto")

    sub.add_parser("biclique", parents=[common], help="bipartite dimension of a bipartite graph")
    sub.add_parser("recognize", parents=[common], help="class membership with certificates")

    p = sub.add_parser("transform", parents=[common], help="biclique cover to complete width instance")
    p.add_argument("kind", choices=("biclique2cow",))
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("gen", help="generate a named graph")
    p.add_argument("family", choices=("gk",))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--edgelist", action="store_true", help="print an edge list instead of graph6")

    p = sub.add_parser("verify", parents=[common], help="check a certificate against the graph")
    p.add_argument("--witness", metavar="FILE", required=True,
                   help="result document, certificate object, JSON list of sets, or one set per line")
    return parser


def _read_input(args) -> Graph:
    if args.graph6 is not None:
        return parse_graph(args.graph6, "graph6" if args.format == "auto" else args.format)
    if args.file is not None:
        try:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc.strerror}") from exc
    else:
        text = sys.stdin.read()
    return parse_graph(text, args.format)


def _gen(args, out) -> int:
    if not 1 <= args.k <= GK_LIMIT:
        raise UsageError(f"--k must lie in 1..{GK_LIMIT}")
    g = gk(args.k)
    if args.json:
        doc = {"family": "gk", "k": args.k, "graph6": emit_graph6(g), "labels": list(g.labels)}
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write(emit_edge_list(g) if args.edgelist else emit_graph6(g) + "\n")
    return EXIT_OK


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "gen":
            return _gen(args, out)
        timer = Timer()
        with timer.phase("parse"):
            g = _read_input(args)
        problem = args.command
        try:
            status, value, cert, method, trace, code = COMMANDS[problem](g, args, timer)
        except (SizeLimitExceeded, Unsolved) as exc:
            status, value, cert, method, trace, code = "unsolved", None, None, str(exc), None, EXIT_UNSOLVED
        if cert is not None and problem != "verify":
            with timer.phase("verify"):
                verdict = check_certificate(g, cert)
            if not verdict:
                raise AssertionError(f"emitted certificate fails verification: {verdict.detail}")
        doc = document(g, problem, status, value, cert, method, trace,
                       None if args.no_timings else timer)
    except (ParseError, UsageError, GraphError) as exc:
        err.write(f"cowkit: error: {exc}\n")
        return EXIT_USAGE
    text = json.dumps(doc, indent=2) + "\n" if args.json else render_text(g, doc)
    out.write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
