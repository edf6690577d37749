"""Command line front end.

Exit codes: 0 success, 2 malformed input or bad parameters, 3 search
budget or capacity exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys

from .automorphism import Budget, enumerate_automorphisms, search_color_preserving
from .constructions import (isolate_case_coloring, kn_base_coloring,
                            lift_coloring, star_case_coloring)
from .distinguishing import (Coloring, DistResult, ExceedsCap,
                             distinguishing_number, is_distinguishing)
from .errors import (GraphTooLarge, GroupTooLarge, MycdistError,
                     SearchBudgetExceeded)
from .graph6 import parse_edge_list, parse_graph6, write_edge_list, write_graph6
from .graphs import Graph, complete_graph, star_graph
from .mycielskian import MycLayout, build_mycielskian
from .verify import report_to_csv, report_to_json, run_verify

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_BUDGET = 3

DEFAULT_BUDGET = 10**8


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _read_graph(path: str, fmt: str) -> Graph:
    text = _read_text(path)
    if fmt == "edges":
        return parse_edge_list(text)
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise MycdistError("no graph in input")
    return parse_graph6(lines[0])


def _parse_t_list(raw: str) -> list[int]:
    try:
        ts = [int(x) for x in raw.split(",") if x.strip()]
    except ValueError:
        raise MycdistError(f"bad --t list {raw!r}") from None
    if not ts:
        raise MycdistError("empty --t list")
    return ts


def _layout_json(layout: MycLayout) -> dict:
    out = {}
    for v, role in enumerate(layout.roles()):
        out[str(v)] = {"role": role.kind, "i": role.index, "level": role.level}
    return out


def _parse_coloring(raw: str, n: int) -> Coloring:
    """Coloring as a JSON array of 1-based colors, inline or @file."""
    if raw.startswith("@"):
        raw = _read_text(raw[1:])
    try:
        values = json.loads(raw)
    except json.JSONDecodeError as e:
        raise MycdistError(f"bad coloring JSON: {e}") from None
    if not isinstance(values, list) or not all(isinstance(c, int) for c in values):
        raise MycdistError("coloring must be a JSON array of integers")
    if len(values) != n:
        raise MycdistError(f"coloring has {len(values)} entries, graph has {n}")
    return Coloring(max(values, default=0), tuple(values))


def _emit(doc):
    print(json.dumps(doc, indent=2))


def cmd_myc(args) -> int:
    g = _read_graph(args.input, args.format)
    for t in _parse_t_list(args.t):
        mu, layout = build_mycielskian(g, t)
        doc = {"t": t, "layout": _layout_json(layout)}
        if args.format == "edges":
            doc["edges"] = write_edge_list(mu)
        else:
            doc["graph6"] = write_graph6(mu)
        _emit(doc)
    return EXIT_OK


def cmd_aut(args) -> int:
    g = _read_graph(args.input, args.format)
    listing = enumerate_automorphisms(g)
    gens: list[tuple[int, ...]] = []
    known = {tuple(range(g.n))}
    for p in listing:
        if p.image in known:
            continue
        gens.append(p.image)
        # close the partial group under the new generator
        frontier = list(known)
        known.add(p.image)
        while frontier:
            x = frontier.pop()
            for gen in gens:
                y = tuple(x[i] for i in gen)
                if y not in known:
                    known.add(y)
                    frontier.append(y)
    orbits = []
    seen: set[int] = set()
    for v in range(g.n):
        if v in seen:
            continue
        orbit = sorted({p.image[v] for p in listing})
        seen.update(orbit)
        orbits.append(orbit)
    _emit({"order": listing.order,
           "generators": [list(img) for img in gens],
           "orbits": orbits})
    return EXIT_OK


def cmd_dist(args) -> int:
    g = _read_graph(args.input, args.format)
    res = distinguishing_number(g, args.k_cap, budget=Budget(args.budget))
    if isinstance(res, ExceedsCap):
        _emit({"exceeds_cap": res.k_cap})
    else:
        _emit({"dist": res.value,
               "certificate": list(res.certificate.assign),
               "lower_bound_witness": res.lower_bound_witness})
    return EXIT_OK


def cmd_check_coloring(args) -> int:
    g = _read_graph(args.input, args.format)
    coloring = _parse_coloring(args.coloring, g.n)
    witness = search_color_preserving(g, coloring)
    _emit({"distinguishing": witness is None,
           "witness": None if witness is None else list(witness.image)})
    return EXIT_OK


def cmd_coloring(args) -> int:
    for t in _parse_t_list(args.t):
        if args.construction == "star":
            if args.m is None:
                raise MycdistError("--construction star needs --m")
            coloring = star_case_coloring(args.m, t)
            src = star_graph(args.m)
        elif args.construction == "kn":
            if args.n is None:
                raise MycdistError("--construction kn needs --n")
            _, coloring = kn_base_coloring(args.n, t)
            src = complete_graph(args.n)
        else:
            src = _read_graph(args.input, args.format)
            base = distinguishing_number(src, budget=Budget(args.budget))
            assert isinstance(base, DistResult)
            if args.construction == "isolate":
                coloring = isolate_case_coloring(src, t, base.certificate)
            else:
                coloring = lift_coloring(src, t, base.certificate, args.w_color)
        mu, _ = build_mycielskian(src, t)
        _emit({"construction": args.construction, "t": t, "k": coloring.k,
               "graph6": write_graph6(mu),
               "colors": list(coloring.assign),
               "distinguishing": is_distinguishing(mu, coloring)})
    return EXIT_OK


def cmd_verify(args) -> int:
    text = _read_text(args.input)
    lines = [ln for ln in text.splitlines() if ln.strip()]
    report = run_verify(lines, _parse_t_list(args.t), budget_steps=args.budget,
                        max_n=args.max_n, jobs=args.jobs)
    if args.out == "csv":
        sys.stdout.write(report_to_csv(report))
    else:
        sys.stdout.write(report_to_json(report))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="mycdist",
        description="Generalized Mycielskian graphs and distinguishing numbers.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, with_input=True):
        if with_input:
            p.add_argument("input", nargs="?", default="-",
                           help="graph file, or - for stdin (default)")
        p.add_argument("--format", choices=("graph6", "edges"), default="graph6")
        p.add_argument("--t", default="1", help="comma-separated t values")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="search step budget")

    p = sub.add_parser("myc", help="build mu_t of the input graph")
    common(p)
    p.set_defaults(fn=cmd_myc)

    p = sub.add_parser("aut", help="automorphism listing summary")
    common(p)
    p.set_defaults(fn=cmd_aut)

    p = sub.add_parser("dist", help="exact distinguishing number")
    common(p)
    p.add_argument("--k-cap", type=int, default=None)
    p.set_defaults(fn=cmd_dist)

    p = sub.add_parser("check-coloring", help="is the coloring distinguishing?")
    common(p)
    p.add_argument("--coloring", required=True,
                   help="JSON array of 1-based colors, or @file")
    p.set_defaults(fn=cmd_check_coloring)

    p = sub.add_parser("coloring", help="emit a constructive coloring of mu_t")
    common(p)
    p.add_argument("--construction", choices=("star", "kn", "isolate", "lift"),
                   required=True)
    p.add_argument("--m", type=int, default=None, help="star leaf count")
    p.add_argument("--n", type=int, default=None, help="complete graph order")
    p.add_argument("--w-color", type=int, default=1)
    p.set_defaults(fn=cmd_coloring)

    p = sub.add_parser("verify", help="sweep a corpus against the case analysis")
    common(p)
    p.set_defaults(t="1,2")
    p.add_argument("--out", choices=("json", "csv"), default="json")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=cmd_verify)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (SearchBudgetExceeded, GroupTooLarge, GraphTooLarge) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except MycdistError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
