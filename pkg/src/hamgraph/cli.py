"""The ``hamgraph`` command line."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from pathlib import Path
from typing import Callable, List, Optional, Sequence

from .bounds import alpha_formula, chi_bounds, exact_alpha, mds_clique
from .coloring import (
    ColoringError,
    class_sizes,
    classes_as_words,
    coordinate_coloring,
    is_even,
    monochromatic_edge,
    read_coloring,
    write_coloring,
)
from .constructions import CONSTRUCTION_NAMES, DEFAULT_SEED, construct
from .core import ExcludedParamsError, GraphParams, ParamsError
from .graph import HammingGraph
from .search import (
    EXHAUSTED,
    BudgetExhausted,
    SearchConfig,
    chromatic_number,
    enumerate_colorings,
    max_clique,
    max_independent_set,
    partition_orbits,
)
from .transitions import (
    Contradiction,
    max_robust_check,
    propagate_from_cycle,
    robustness,
    tiles_in_4cycles,
    transition_json,
    transition_space,
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_BUDGET = 3
EXIT_UNKNOWN_COMMAND = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ---------------------------------------------------------------- helpers


def _graph(args) -> HammingGraph:
    return HammingGraph.of(args.q, args.n, args.d)


def _config(args) -> SearchConfig:
    threads = args.threads
    if threads is None:
        env = os.environ.get("HAMGRAPH_THREADS")
        if env:
            try:
                threads = int(env)
            except ValueError:
                raise UsageError(f"HAMGRAPH_THREADS={env!r} is not an integer") from None
        else:
            threads = 1
    return SearchConfig(
        time_budget=args.budget_seconds,
        thread_count=threads,
        symmetry_breaking=not args.no_symmetry,
        seed=args.seed,
    )


def _load_coloring(spec: str, g: Optional[HammingGraph]):
    """Resolve ``coord:i,j``, ``file:path`` or ``construct:name`` to (graph, coloring)."""
    kind, _, rest = spec.partition(":")
    if kind == "coord":
        if g is None:
            raise UsageError("coord: colorings need -q, -n and -d")
        try:
            indices = [int(t) for t in rest.split(",") if t.strip()]
        except ValueError:
            raise UsageError(f"bad coordinate list {rest!r}") from None
        return g, coordinate_coloring(g, indices)
    if kind == "file":
        try:
            K = read_coloring(Path(rest).read_bytes())
        except OSError as e:
            raise UsageError(f"cannot read {rest}: {e.strerror}") from None
    elif kind == "construct":
        K = construct(rest).coloring
    else:
        raise UsageError(f"coloring must be coord:..., file:... or construct:..., got {spec!r}")
    if g is not None and g.params != K.params:
        raise ParamsError(f"coloring is for {K.params}, not {g.params}")
    p = K.params
    return HammingGraph.of(p.q, p.n, p.d), K


def _coloring_args(args):
    have = [v is not None for v in (args.q, args.n, args.d)]
    if any(have) and not all(have):
        raise UsageError("give all of -q, -n, -d or none of them")
    return _load_coloring(args.coloring, _graph(args) if all(have) else None)


def _vertex_set_json(g: HammingGraph, value: int, vertices, status: str) -> str:
    doc = {
        "q": g.q,
        "n": g.n,
        "d": g.d,
        "size": value,
        "status": status,
        "vertices": list(vertices),
        "words": [g.word(v) for v in vertices],
    }
    return json.dumps(doc, separators=(",", ":")) + "\n"


def _emit(out, data):
    out.write(data.decode() if isinstance(data, bytes) else data)


# --------------------------------------------------------------- commands


def cmd_info(args, out):
    g = _graph(args)
    rows = [
        ("graph", str(g.params)),
        ("vertices", g.vertex_count),
        ("edges", g.edge_count),
        ("degree", g.degree),
        ("girth", g.girth()),
    ]
    if args.json:
        out.write(json.dumps({k: v for k, v in rows}) + "\n")
    else:
        for k, v in rows:
            out.write(f"{k}: {v}\n")
    return EXIT_OK


def cmd_export(args, out):
    data = _graph(args).export(args.format)
    if args.output:
        Path(args.output).write_bytes(data)
    else:
        _emit(out, data)
    return EXIT_OK


def cmd_color_make(args, out):
    _, K = _coloring_args(args)
    data = write_coloring(K)
    if args.output:
        Path(args.output).write_bytes(data)
    else:
        _emit(out, data)
    return EXIT_OK


def cmd_color_verify(args, out):
    g, K = _coloring_args(args)
    clash = monochromatic_edge(g, K)
    if clash is not None:
        u, v = clash
        out.write(f"improper: edge {g.word(u)}-{g.word(v)} is monochromatic\n")
        return EXIT_INVALID
    sizes = class_sizes(K)
    out.write(f"proper {K.k}-coloring of {g.params}\n")
    out.write(f"{'even' if is_even(K) else 'uneven'}: class sizes {' '.join(map(str, sizes))}\n")
    return EXIT_OK


def cmd_transitions(args, out):
    g, K = _coloring_args(args)
    _emit(out, transition_json(g, K))
    return EXIT_OK


def cmd_robustness(args, out):
    g, K = _coloring_args(args)
    report = robustness(g, K)
    out.write(f"{report}\n")
    if args.reduced:
        out.write(f"{report.robustness}\n")
    return EXIT_OK


def cmd_generator(args, out):
    g, K = _coloring_args(args)
    if g.q != 2:
        raise ParamsError("generators are defined for q = 2 only")
    B = transition_space(g, K).generator
    out.write("none\n" if B is None else " ".join(g.word(b) for b in B) + "\n")
    return EXIT_OK


def cmd_tiling(args, out):
    g, K = _coloring_args(args)
    out.write(f"{str(tiles_in_4cycles(g, transition_space(g, K).edges)).lower()}\n")
    return EXIT_OK


def cmd_maxrobust_check(args, out):
    g, K = _coloring_args(args)
    i, ii, iii = max_robust_check(g, K)
    out.write(f"generated-by-two-neighbors: {str(i).lower()}\n")
    out.write(f"robustness-2/(n+1): {str(ii).lower()}\n")
    out.write(f"tiles-in-4-cycles: {str(iii).lower()}\n")
    return EXIT_OK


def cmd_propagate(args, out):
    g = _graph(args)
    result = propagate_from_cycle(g, args.v, args.w)
    if isinstance(result, Contradiction):
        out.write(f"contradiction at {g.word(result.vertex)}: {result.reason}\n")
    else:
        _emit(out, write_coloring(result))
    return EXIT_OK


def cmd_bounds(args, out):
    clique = None
    if args.mds_clique:
        clique = mds_clique(args.q, args.n, args.d)
        if clique is None:
            raise ParamsError("no evaluation-code clique for these parameters (n > q)")
    rep = chi_bounds(args.q, args.n, args.d, clique=clique)
    _emit(out, rep.to_json() if args.json else rep.table())
    return EXIT_OK


def _bracket(result) -> str:
    return f"{result.lower}..{result.upper}"


def cmd_chromatic(args, out):
    g = _graph(args)
    res = chromatic_number(g, _config(args))
    if res.status == EXHAUSTED:
        out.write(f"chi in {_bracket(res)} (budget exhausted)\n")
        return EXIT_BUDGET
    if args.witness:
        _emit(out, write_coloring(res.witness))
    else:
        out.write(f"{res.value}\n")
    return EXIT_OK


def _set_command(solver: Callable, name: str):
    def run(args, out):
        g = _graph(args)
        res = solver(g, _config(args))
        if args.witness:
            out.write(_vertex_set_json(g, res.value, res.witness, res.status))
        elif res.status == EXHAUSTED:
            out.write(f"{name} in {_bracket(res)} (budget exhausted)\n")
        else:
            out.write(f"{res.value}\n")
        return EXIT_BUDGET if res.status == EXHAUSTED else EXIT_OK

    return run


def cmd_enumerate(args, out):
    g = _graph(args)
    parts = enumerate_colorings(g, args.k, _config(args))
    out.write(f"colorings: {len(parts)}\n")
    if args.orbits:
        out.write(f"orbits: {partition_orbits(g, parts)}\n")
    for p in parts:
        out.write(" | ".join(" ".join(cls) for cls in p.words(g)) + "\n")
    return EXIT_OK


def cmd_construct(args, out):
    if args.list:
        out.write("\n".join(CONSTRUCTION_NAMES) + "\n")
        return EXIT_OK
    if not args.name:
        raise UsageError("construct needs --name or --list")
    nc = construct(args.name)
    if args.classes:
        out.write(f"{nc.name}: {nc.provenance}\n")
        for cls in classes_as_words(nc.graph, nc.coloring):
            out.write(" ".join(cls) + "\n")
    else:
        _emit(out, write_coloring(nc.coloring))
    return EXIT_OK


# ------------------------------------------------------------------ sweep

_RANGE = re.compile(r"^\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?$")
_RELATIVE = re.compile(r"^\s*n\s*(?:([+-])\s*(\d+))?\s*$")


def _int_values(text: str, label: str) -> List[int]:
    values: List[int] = []
    for part in text.split(","):
        m = _RANGE.match(part)
        if not m:
            raise UsageError(f"bad {label} range {part!r}; use a, a..b or a,b,c")
        lo = int(m.group(1))
        hi = int(m.group(2)) if m.group(2) is not None else lo
        values.extend(range(lo, hi + 1))
    return sorted(set(values))


def _d_values(text: str, n: int) -> List[int]:
    out: List[int] = []
    for part in text.split(","):
        m = _RELATIVE.match(part)
        if m:
            shift = int(m.group(2) or 0) * (-1 if m.group(1) == "-" else 1)
            out.append(n + shift)
        else:
            out.extend(_int_values(part, "d"))
    return sorted(set(out))


def _sweep_row(q: int, n: int, d: int, quantity: str, cfg: SearchConfig):
    """(value, status, provenance) for one parameter triple."""
    if quantity == "alpha":
        exact = exact_alpha(q, n, d)
        if exact is not None:
            return exact, "proven", "formula"
        res = max_independent_set(HammingGraph.of(q, n, d), cfg)
        return (res.value, "proven", "search") if res.proven else (_bracket(res), EXHAUSTED, "search")
    if quantity == "omega":
        res = max_clique(HammingGraph.of(q, n, d), cfg)
        return (res.value, "proven", "search") if res.proven else (_bracket(res), EXHAUSTED, "search")
    if quantity == "alpha-bound":
        value, exact = alpha_formula(q, n, d)
        return value, "exact" if exact else "upper-bound", "formula"
    if quantity in ("chi", "chi-bounds"):
        rep = chi_bounds(q, n, d)
        if rep.exact is not None:
            names = [name for name, why in rep.rules if why.startswith("exact")]
            return rep.exact, "proven", "+".join(names)
        if quantity == "chi-bounds":
            return f"{rep.lower}..{rep.upper}", "bracket", "bounds"
        res = chromatic_number(HammingGraph.of(q, n, d), cfg)
        return (res.value, "proven", "search") if res.proven else (_bracket(res), EXHAUSTED, "search")
    if quantity == "degree":
        g = HammingGraph.of(q, n, d)
        return g.degree, "proven", "formula"
    if quantity == "girth":
        g = HammingGraph.of(q, n, d)
        return g.girth(), "proven", "formula"
    raise UsageError(f"unknown quantity {quantity!r}")


SWEEP_QUANTITIES = ("alpha", "alpha-bound", "omega", "chi", "chi-bounds", "degree", "girth")


def cmd_sweep(args, out):
    if args.quantity not in SWEEP_QUANTITIES:
        raise UsageError(f"quantity must be one of {', '.join(SWEEP_QUANTITIES)}")
    cfg = _config(args)
    triples = set()
    for q in _int_values(args.q_range, "q"):
        for n in _int_values(args.n_range, "n"):
            for d in _d_values(args.d_range, n):
                triples.add((q, n, d))
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["q", "n", "d", "quantity", "value", "status", "provenance"])
    for q, n, d in sorted(triples):
        try:
            GraphParams(q, n, d)
        except ExcludedParamsError:
            writer.writerow([q, n, d, args.quantity, "", "excluded", "(q,d)=(2,n)"])
            continue
        except ParamsError as e:
            writer.writerow([q, n, d, args.quantity, "", "invalid", str(e)])
            continue
        try:
            value, status, provenance = _sweep_row(q, n, d, args.quantity, cfg)
        except UsageError:
            raise
        except BudgetExhausted:
            value, status, provenance = "", EXHAUSTED, "search"
        except (ParamsError, ColoringError, ValueError) as e:
            value, status, provenance = "", "error", str(e)
        writer.writerow([q, n, d, args.quantity, value, status, provenance])
    return EXIT_OK


# ----------------------------------------------------------------- parser


def _add_params(p, required=True):
    p.add_argument("-q", type=int, required=required, help="alphabet size")
    p.add_argument("-n", type=int, required=required, help="word length")
    p.add_argument("-d", type=int, required=required, help="minimum distance of an edge")


def _add_search(p):
    p.add_argument("--budget-seconds", type=float, default=None, help="wall-clock budget")
    p.add_argument("--threads", type=int, default=None, help="worker processes (default $HAMGRAPH_THREADS or 1)")
    p.add_argument("--no-symmetry", action="store_true", help="disable symmetry breaking")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized heuristics")


def _add_coloring(p):
    _add_params(p, required=False)
    p.add_argument("--coloring", required=True, help="coord:i,j,... | file:PATH | construct:NAME")


COMMANDS = {}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hamgraph", description="Hamming-distance graphs H_q(n,d): colorings, transitions, bounds.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def command(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        COMMANDS[name] = func
        return p

    p = command("info", cmd_info, "vertex, edge, degree and girth counts")
    _add_params(p)
    p.add_argument("--json", action="store_true")

    p = command("export", cmd_export, "write the graph as DIMACS, DOT or JSON")
    _add_params(p)
    p.add_argument("--format", choices=["dimacs", "dot", "json"], default="dimacs")
    p.add_argument("-o", "--output")

    p = command("color-make", cmd_color_make, "emit a coloring as JSON")
    _add_coloring(p)
    p.add_argument("-o", "--output")

    p = command("color-verify", cmd_color_verify, "check properness and evenness")
    _add_coloring(p)

    p = command("transitions", cmd_transitions, "transition-space JSON")
    _add_coloring(p)

    p = command("robustness", cmd_robustness, "transition edges over all edges")
    _add_coloring(p)
    p.add_argument("--reduced", action="store_true", help="also print the reduced fraction")

    p = command("generator", cmd_generator, "generating set of the transition space")
    _add_coloring(p)

    p = command("tiling", cmd_tiling, "whether the transition edges tile into 4-cycles")
    _add_coloring(p)

    p = command("maxrobust-check", cmd_maxrobust_check, "the three equivalent maximality conditions")
    _add_coloring(p)

    p = command("propagate", cmd_propagate, "extend a 4-cycle coloring to H_2(n,n-1)")
    _add_params(p)
    p.add_argument("--v", required=True, help="first neighbor of 0, as a word")
    p.add_argument("--w", required=True, help="second neighbor of 0, as a word")

    p = command("bounds", cmd_bounds, "chromatic bounds with the rules used")
    _add_params(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--mds-clique", action="store_true", help="add the evaluation-code clique (prime q)")

    p = command("chromatic", cmd_chromatic, "exact chromatic number")
    _add_params(p)
    _add_search(p)
    p.add_argument("--witness", action="store_true", help="print the optimal coloring as JSON")

    for name, solver, what in (("alpha", max_independent_set, "alpha"), ("omega", max_clique, "omega")):
        p = command(name, _set_command(solver, what), f"exact {what} with an optional witness")
        _add_params(p)
        _add_search(p)
        p.add_argument("--witness", action="store_true", help="print the witness as vertex-set JSON")

    p = command("enumerate", cmd_enumerate, "all proper k-colorings as partitions")
    _add_params(p)
    _add_search(p)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--orbits", action="store_true", help="also count classes up to graph symmetry")

    p = command("construct", cmd_construct, "emit a named construction")
    p.add_argument("--name")
    p.add_argument("--list", action="store_true")
    p.add_argument("--classes", action="store_true", help="print classes as words instead of JSON")

    p = command("sweep", cmd_sweep, "CSV table over parameter ranges")
    p.add_argument("-q", dest="q_range", required=True, help="e.g. 2 or 2..3")
    p.add_argument("-n", dest="n_range", required=True, help="e.g. 3..6")
    p.add_argument("-d", dest="d_range", required=True, help="e.g. 2..4 or n-1")
    p.add_argument("--quantity", required=True, help=", ".join(SWEEP_QUANTITIES))
    _add_search(p)
    return parser


def run(argv: Sequence[str], out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    argv = list(argv)
    if argv and not argv[0].startswith("-") and argv[0] not in COMMANDS:
        err.write(f"hamgraph: unknown command {argv[0]!r}\n")
        return EXIT_UNKNOWN_COMMAND
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        err.write(f"hamgraph: {e}\n")
        return EXIT_INVALID
    except SystemExit as e:  # --help
        return int(e.code or 0)
    if not getattr(args, "func", None):
        parser.print_help(err)
        return EXIT_INVALID
    buffer = io.StringIO()
    try:
        code = args.func(args, buffer)
    except UsageError as e:
        err.write(f"hamgraph: {e}\n")
        return EXIT_INVALID
    except BudgetExhausted:
        err.write("hamgraph: budget exhausted\n")
        return EXIT_BUDGET
    except (ParamsError, ColoringError) as e:
        err.write(f"hamgraph: {e}\n")
        return EXIT_INVALID
    out.write(buffer.getvalue())
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
