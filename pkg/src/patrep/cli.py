"""Command-line interface: ``patrep <subcommand> ...``.

Exit codes: 0 success / witness, 1 failed self-check or theorem,
2 malformed input, 3 exhausted with a complete bound (a proof),
4 exhausted under a heuristic cap (unknown).
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from pathlib import Path

from . import graphs as G
from .circle import SaturationError, chords_from_word, saturate_to_2uniform
from .constructions import family_graph, family_word, self_check, tree_word_132_2uniform
from .reduction import ReductionError, normalize
from .search import Certificate, atlas_summary, classify_atlas, find_representant, SearchBounds
from .words import Pattern, avoids, format_word, parse_word, word_to_graph

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_EXHAUSTED = 3
EXIT_UNKNOWN = 4

log = logging.getLogger("patrep")


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _word(text: str):
    try:
        return parse_word(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _pattern(text: str) -> Pattern:
    try:
        return Pattern.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _read_graph(path: str) -> G.Graph:
    try:
        return G.Graph.from_text(Path(path).read_text())
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"cannot read graph from {path}: {exc}") from exc


def _graph_of(w) -> G.Graph:
    try:
        return word_to_graph(w)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_check(args) -> int:
    w = _word(args.word)
    p = _pattern(args.pattern)
    out = {"word": format_word(w), "pattern": str(p), "avoids": avoids(w, p)}
    out["graph"] = _graph_of(w).to_json() if w else None
    _emit(out)
    return EXIT_OK


def cmd_graph(args) -> int:
    g = _graph_of(_word(args.word))
    if args.format == "json":
        _emit(g.to_json())
    elif args.format == "dot":
        sys.stdout.write(g.to_dot())
    else:
        sys.stdout.write(g.to_text())
    return EXIT_OK


def cmd_construct(args) -> int:
    p = _pattern(args.pattern)
    if args.family == "tree":
        if args.tree_file:
            t = _read_graph(args.tree_file)
        else:
            if args.n is None:
                raise UsageError("tree family needs --n or --tree-file")
            t = G.random_tree(args.n, random.Random(args.seed))
        try:
            r, w = tree_word_132_2uniform(t, root=args.root)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        target = G.relabel(t, r)
        report = self_check(w, target, p, uniform=2)
        out = {"family": "tree", "tree": t.to_json(), "relabeling": r.to_json()}
    else:
        if args.n is None:
            raise UsageError("--n is required")
        try:
            w = family_word(args.family, args.n)
            target = family_graph(args.family, args.n)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        uniform = 2 if args.family in ("path", "complete2u") else None
        report = self_check(w, target, p, uniform=uniform)
        out = {"family": args.family, "n": args.n}
    out.update({"pattern": str(p), "word": format_word(w), "graph": target.to_json(),
                "self_check": report})
    _emit(out)
    return EXIT_OK if report["pass"] else EXIT_FAIL


def cmd_reduce(args) -> int:
    w = _word(args.word)
    try:
        out, r, trace = normalize(w)
    except ReductionError as exc:
        raise UsageError(str(exc)) from exc
    _emit({"input": format_word(w), "word": format_word(out),
           "relabeling": r.to_json(), "trace": trace.to_json()})
    return EXIT_OK


def _cert_exit(cert: Certificate) -> int:
    if cert.is_witness:
        return EXIT_OK
    return EXIT_EXHAUSTED if cert.complete else EXIT_UNKNOWN


def cmd_represent(args) -> int:
    g = _read_graph(args.graph_file)
    p = None if args.pattern == "none" else _pattern(args.pattern)
    bounds = None
    if args.global_cap is not None:
        bounds = SearchBounds.uniform(g.n, args.global_cap, args.global_tag)
    try:
        cert = find_representant(g, p, bounds, uniformity=args.uniform, jobs=args.jobs,
                                 split_depth=args.split_depth, cap=args.cap,
                                 labeled=args.labeled)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(cert.to_json())
    return _cert_exit(cert)


def cmd_verify(args) -> int:
    from . import experiments

    fn = experiments.EXPERIMENTS[args.id]
    kwargs = {"jobs": args.jobs} if args.id in ("3.7", "5.1", "fig7") else {}
    result = fn(**kwargs)
    verdict = "PASS" if result["passed"] else "FAIL"
    print(f"{verdict} {args.id} ({result['seconds']} s)", file=sys.stderr)
    _emit({"verdict": verdict, **result})
    return EXIT_OK if result["passed"] else EXIT_FAIL


def cmd_atlas(args) -> int:
    p = _pattern(args.pattern)

    def progress(key, cert):
        print(f"{key} {cert.status}", file=sys.stderr)

    try:
        entries = classify_atlas(args.max_n, p, cap=args.cap, jobs=args.jobs,
                                 progress=progress if args.verbose else None)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    summary = atlas_summary(entries)
    c = summary["counts"]
    print(f"{p}-atlas up to n={args.max_n}: {c['representable']} representable, "
          f"{c['not-representable']} not representable, {c['unknown']} unknown; "
          f"{len(summary['minimal_non_representable'])} minimal non-representable",
          file=sys.stderr)
    _emit({"pattern": str(p), "max_n": args.max_n, "summary": summary,
           "entries": [e.to_json() for e in entries]})
    return EXIT_OK


def cmd_chords(args) -> int:
    w = _word(args.word)
    if args.saturate:
        try:
            w = saturate_to_2uniform(w)
        except (SaturationError, ValueError) as exc:
            raise UsageError(str(exc)) from exc
    try:
        d = chords_from_word(w)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.svg:
        Path(args.svg).write_text(d.to_svg())
    if args.dot:
        Path(args.dot).write_text(d.to_dot())
    _emit({"word": format_word(w), "diagram": d.to_json(),
           "crossing_graph": d.crossing_graph().to_json()})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="patrep", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="pattern avoidance and alternation graph of a word")
    p.add_argument("--word", required=True)
    p.add_argument("--pattern", required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("graph", help="alternation graph of a word")
    p.add_argument("--word", required=True)
    p.add_argument("--format", choices=["json", "dot", "edges"], default="json")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("construct", help="explicit representant for a graph family")
    p.add_argument("--family", required=True,
                   choices=["complete", "path", "cycle", "tree", "complete2u"])
    p.add_argument("--n", type=int)
    p.add_argument("--tree-file")
    p.add_argument("--root", type=int, default=1)
    p.add_argument("--pattern", choices=["123", "132"], default="123")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("reduce", help="normalize a 123-avoiding word to <= 2 copies per letter")
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("represent", help="search for a pattern-avoiding representant")
    p.add_argument("--graph-file", required=True)
    p.add_argument("--pattern", required=True, help="e.g. 123, 132, or 'none'")
    p.add_argument("--uniform", type=int)
    p.add_argument("--cap", type=int, default=3, help="heuristic cap where no bound is known")
    p.add_argument("--global-cap", type=int,
                   help="same cap for every vertex instead of the derived bounds")
    p.add_argument("--global-tag", default="heuristic-cap",
                   help="justification tag recorded for --global-cap")
    p.add_argument("--labeled", action="store_true", help="keep the graph's labels")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--split-depth", type=int)
    p.set_defaults(func=cmd_represent)

    p = sub.add_parser("verify-theorem", help="run one of the reproduction experiments")
    p.add_argument("--id", required=True, choices=["3.7", "4.5", "5.1", "fig7", "constructions"])
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("atlas", help="classify all small graphs")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--cap", type=int, default=3)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_atlas)

    p = sub.add_parser("chords", help="chord diagram of a 2-uniform word")
    p.add_argument("--word", required=True)
    p.add_argument("--saturate", action="store_true",
                   help="double once-occurring letters first (fails if the graph changes)")
    p.add_argument("--svg")
    p.add_argument("--dot")
    p.set_defaults(func=cmd_chords)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"patrep: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
