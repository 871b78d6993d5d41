"""Command-line front door: ``hadwiger7 <command> ...``.

Reports are JSON lines on standard output. Exit codes:
0 certificate / affirmative, 2 input error, 3 searched and absent,
4 budget exceeded, 5 theorem-violation fault.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, Sequence

from .colorer import MinorWitness, certificate_from_json, color7, verify_certificate
from .errors import BudgetExceeded, GraphInputError, TheoremViolation
from .formats import from_edgelist, read_graph6, to_edgelist, to_graph6
from .generators import circulant, random_cockade, random_gnp, random_planar
from .graph import Graph, pattern
from .lemmas import SUITES, run_suite
from .minors import DEFAULT_BUDGET, MinorModel, find_minor, verify_model
from .structure.census import degree8_census, k5_pattern_report
from .structure.cockade import generate_cockade, jakobsen_classify
from .structure.dichotomy import neighborhood_dichotomy

EXIT_OK, EXIT_INPUT, EXIT_ABSENT, EXIT_BUDGET, EXIT_VIOLATION = 0, 2, 3, 4, 5

PATTERNS = {"k7minus": "K7-", "k7": "K7", "k5": "K5", "k6minus": "K6-", "k33": "K33"}


def _emit(out, record: dict) -> None:
    out.write(json.dumps(record, sort_keys=True) + "\n")


def _read_graphs(path: str, fmt: str) -> list[Graph]:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="ascii") as fh:
                text = fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise GraphInputError(f"cannot read {path}: {exc}") from None
    if fmt == "edgelist":
        return [from_edgelist(text)]
    graphs = list(read_graph6(text.splitlines()))
    if not graphs:
        raise GraphInputError(f"{path} holds no graphs")
    return graphs


def _write_graph(out, g: Graph, fmt: str) -> None:
    out.write(to_edgelist(g) if fmt == "edgelist" else to_graph6(g) + "\n")


def _budget(raw: str) -> int | None:
    if raw.lower() in ("none", "unlimited"):
        return None
    try:
        value = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"budget must be an integer or 'none', got {raw!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("budget must be positive")
    return value


def _int_list(raw: str) -> list[int]:
    try:
        return [int(x) for x in raw.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {raw!r}") from None


# -- commands ----------------------------------------------------------------


def cmd_color(args, out) -> int:
    code = EXIT_OK
    for i, g in enumerate(_read_graphs(args.file, args.format)):
        try:
            cert, trace = color7(g, budget=args.budget)
        except BudgetExceeded as exc:
            _emit(out, {"index": i, "n": g.n, "inconclusive": str(exc), "trace": [s.to_json() for s in exc.trace or []]})
            code = EXIT_BUDGET
            continue
        if not verify_certificate(g, cert):
            raise TheoremViolation(f"graph {i}: certificate failed re-verification")
        record = {"index": i, "n": g.n, "certificate": cert.to_json(), "trace": [s.to_json() for s in trace]}
        if not isinstance(cert, MinorWitness):
            record["colors_used"] = cert.count
        _emit(out, record)
    return code


def cmd_minor(args, out) -> int:
    pat = pattern(PATTERNS[args.pattern])
    code = EXIT_OK
    for i, g in enumerate(_read_graphs(args.file, args.format)):
        model = find_minor(pat, g, budget=args.budget)
        if model is not None and not verify_model(g, model):
            raise TheoremViolation(f"graph {i}: minor model failed re-verification")
        _emit(out, {"index": i, "pattern": pat.tag, "found": model is not None, "model": model.to_json() if model else None})
        if model is None:
            code = EXIT_ABSENT
    return code


def cmd_analyze(args, out) -> int:
    for i, g in enumerate(_read_graphs(args.file, args.format)):
        if args.kind == "census":
            report = degree8_census(g)
        elif args.kind == "k5":
            report = k5_pattern_report(g)
        else:
            verdicts = [{"vertex": u, **neighborhood_dichotomy(g, u).to_json()} for u in range(g.n) if g.degree(u) == 8]
            report = {"degree8_vertices": verdicts}
        _emit(out, {"index": i, "analysis": args.kind, **report})
    return EXIT_OK


def cmd_classify(args, out) -> int:
    for i, g in enumerate(_read_graphs(args.file, args.format)):
        result = jakobsen_classify(g, budget=args.budget)
        _emit(out, {"index": i, **result.to_json()})
    return EXIT_OK


def cmd_gen(args, out) -> int:
    for k in range(args.count):
        seed = args.seed + k
        if args.family == "cockade":
            if args.pieces:
                g, _ = generate_cockade(args.pieces.split(","), rng_seed=seed)
            else:
                g, _ = random_cockade(args.n or 20, seed=seed)
        elif args.family == "circulant":
            if not args.n:
                raise GraphInputError("circulant needs --n")
            g = circulant(args.n, args.jumps or [1, 2])
        elif args.planar:
            g = random_planar(args.n or 20, seed=seed, keep=args.p if args.p is not None else 1.0)
        else:
            g = random_gnp(args.n or 10, args.p if args.p is not None else 0.5, seed=seed)
        _write_graph(out, g, args.format)
    return EXIT_OK


def cmd_lemmas(args, out) -> int:
    graphs = _read_graphs(args.input, args.format) if args.input else None
    report = run_suite(args.suite, graphs)
    _emit(out, report)
    return EXIT_OK if report["ok"] else EXIT_VIOLATION


def cmd_verify(args, out) -> int:
    graphs = _read_graphs(args.file, args.format)
    try:
        with open(args.certificates, encoding="utf-8") as fh:
            records = [json.loads(line) for line in fh if line.strip()]
    except (OSError, json.JSONDecodeError) as exc:
        raise GraphInputError(f"cannot read certificates: {exc}") from None
    code = EXIT_OK
    for i, record in enumerate(records):
        index = record.get("index", i)
        if not 0 <= index < len(graphs):
            raise GraphInputError(f"certificate {i} refers to missing graph {index}")
        g = graphs[index]
        try:
            if "certificate" in record:
                ok = verify_certificate(g, certificate_from_json(record["certificate"]))
            elif record.get("model") is not None:
                ok = verify_model(g, MinorModel.from_json(record["model"]))
            else:
                raise GraphInputError(f"record {i} holds no certificate or model")
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphInputError(f"malformed certificate record {i}: {exc}") from None
        _emit(out, {"index": index, "verified": ok})
        if not ok:
            code = EXIT_ABSENT
    return code


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["graph6", "edgelist"], default="graph6", help="graph input/output format")
    common.add_argument("--budget", type=_budget, default=DEFAULT_BUDGET, help="largest host for exact minor search ('none' to lift)")

    parser = argparse.ArgumentParser(prog="hadwiger7", description="Certifying K7- minor and 7-coloring workbench.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("color", parents=[common], help="7-coloring or K7- minor certificate")
    p.add_argument("file")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("minor", parents=[common], help="search for a fixed minor")
    p.add_argument("--pattern", choices=sorted(PATTERNS), required=True)
    p.add_argument("file")
    p.set_defaults(func=cmd_minor)

    p = sub.add_parser("analyze", parents=[common], help="structural reports")
    p.add_argument("kind", choices=["census", "k5", "dichotomy"])
    p.add_argument("file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("classify-jakobsen", parents=[common], help="cockade or K7- minor for dense graphs")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("gen", parents=[common], help="generate graphs")
    p.add_argument("family", choices=["cockade", "circulant", "random"])
    p.add_argument("--n", type=int, help="vertex count (cockade: upper bound)")
    p.add_argument("--p", type=float, help="edge probability (random) or keep rate (--planar)")
    p.add_argument("--jumps", type=_int_list, help="circulant jumps, e.g. 1,2")
    p.add_argument("--pieces", help="cockade recipe, e.g. K6,K2222,K6")
    p.add_argument("--planar", action="store_true", help="random planar (Delaunay) instead of G(n,p)")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("lemmas", parents=[common], help="run a check suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--input", help="graph6 file ('-' for stdin) replacing the enumerated corpus")
    p.set_defaults(func=cmd_lemmas)

    p = sub.add_parser("verify", parents=[common], help="re-check certificates emitted by color/minor")
    p.add_argument("file")
    p.add_argument("certificates")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except GraphInputError as exc:
        print(f"hadwiger7: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"hadwiger7: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except TheoremViolation as exc:
        print(f"hadwiger7: theorem violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION


def main(argv: Iterable[str] | None = None) -> None:
    sys.exit(run(list(argv) if argv is not None else None))


if __name__ == "__main__":
    main()
