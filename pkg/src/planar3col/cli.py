"""Command line front end: ``planar3col <command> ...``.

Exit status is 0 on success, 1 when the input is readable but the
requested statement fails or does not apply (missing file, improper
coloring, unsatisfiable instance, failed suite), and 2 for usage errors.
Standard output never contains timings, so it is byte-identical across
runs with the same arguments.
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Optional, Sequence

from . import __version__
from .coloring import ColoringError, format_coloring, parse_colors, read_coloring, write_coloring
from .cylinder import GridError, extend_one_cuff, extend_two_cuffs, lemma_height, make_grid
from .embedding import EmbeddingError, NotACycle, euler_characteristic, read_embedding
from .oracle import solve_3coloring
from .scans import default_jobs, scan_aksionov, scan_grotzsch, scan_havel
from .tightness import (
    GridGrowthError,
    bfs_layers,
    find_equidistant_cycle,
    grow_cylindrical_grid,
    lemma_window,
)
from .verify import SUITES, run_suite
from .winding import NonCycleFace, facial_cycle, winding_number


class DomainError(Exception):
    """Reported on stderr with exit status 1."""


def _emit(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _load_embedding(path: str):
    try:
        return read_embedding(path)
    except FileNotFoundError:
        raise DomainError(f"{path}: file not found") from None
    except (OSError, EmbeddingError, ValueError) as exc:
        raise DomainError(f"{path}: {exc}") from None


def _load_coloring(path: str):
    try:
        return read_coloring(path)
    except FileNotFoundError:
        raise DomainError(f"{path}: file not found") from None
    except (OSError, ValueError) as exc:
        raise DomainError(f"{path}: {exc}") from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _colors(text: str) -> list[int]:
    try:
        return parse_colors(text)
    except ColoringError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return v


# -- commands ------------------------------------------------------------------

def cmd_faces(args) -> int:
    e = _load_embedding(args.input)
    if not e.is_connected():
        raise DomainError("embedding is disconnected; faces are only traced for connected graphs")
    lines = [f"vertices: {e.n}", f"edges: {e.num_edges}", f"faces: {len(e.faces)}",
             f"euler: {euler_characteristic(e)}"]
    for i, walk in enumerate(e.faces):
        lines.append(f"face {i}: length {walk.length}: {' '.join(map(str, walk.vertices))}")
    _emit("\n".join(lines) + "\n", None)
    return 0


def cmd_wind(args) -> int:
    e = _load_embedding(args.input)
    phi = _load_coloring(args.coloring)
    if not e.is_connected():
        raise DomainError("embedding is disconnected")
    faces = range(len(e.faces)) if args.face is None else [args.face]
    lines = []
    total = 0
    try:
        for f in faces:
            if not 0 <= f < len(e.faces):
                raise DomainError(f"face {f} does not exist (there are {len(e.faces)})")
            w = winding_number(facial_cycle(e, f), phi)
            total += w
            lines.append(f"face {f}: winding {w}")
    except (NonCycleFace, ColoringError) as exc:
        raise DomainError(str(exc)) from None
    if args.face is None:
        lines.append(f"sum: {total}")
    _emit("\n".join(lines) + "\n", None)
    return 0


def cmd_grid_extend(args) -> int:
    r = args.r
    trace: list = []
    try:
        if args.mode == "one":
            if args.cuff2 is not None:
                raise DomainError("--cuff2 is only used with --mode two")
            g = make_grid(r, lemma_height(r))
            if not 0 <= args.v0 < r:
                raise DomainError(f"--v0 must be in 0..{r - 1}")
            psi = extend_one_cuff(g, _check_len(args.cuff1, r, "--cuff1"), g.vertex(args.v0 + 1, g.s), trace)
        else:
            if args.cuff2 is None:
                raise DomainError("--mode two needs --cuff2")
            g = make_grid(r, r + 5)
            phi = dict(zip(g.hoop(1), _check_len(args.cuff1, r, "--cuff1")))
            phi.update(zip(g.hoop(g.s), _check_len(args.cuff2, r, "--cuff2")))
            psi = extend_two_cuffs(g, phi, trace)
    except (GridError, ColoringError) as exc:
        raise DomainError(f"{type(exc).__name__}: {exc}") from None
    log = [f"grid: {g.r}x{g.s}"] + [str(rec) for rec in trace]
    text = "\n".join(log) + "\n"
    if args.output is None:
        sys.stdout.write(format_coloring(psi))
        if args.trace is not None:
            _emit(text, args.trace)
    else:
        write_coloring(psi, args.output)
        _emit(text, args.trace)
    return 0


def _check_len(colors: list[int], r: int, flag: str) -> list[int]:
    if len(colors) != r:
        raise DomainError(f"{flag} has {len(colors)} colors, expected {r}")
    return colors


def cmd_grid_find(args) -> int:
    e = _load_embedding(args.input)
    if not e.is_connected():
        raise DomainError("embedding is disconnected")
    if any(not 0 <= v < e.n for v in args.source):
        raise DomainError("source list mentions a vertex outside the graph")
    layers = bfs_layers(e, args.source)
    if args.i0 is None:
        i0 = next((i for i in range(1, layers.depth + 1) if find_equidistant_cycle(e, layers, i)), None)
        if i0 is None:
            raise DomainError("no layer contains a cycle")
    else:
        i0 = args.i0
    C0 = find_equidistant_cycle(e, layers, i0)
    if C0 is None:
        raise DomainError(f"no equidistant cycle at distance {i0}")
    window = args.window if args.window is not None else math.ceil(lemma_window(len(C0)))
    lines = [f"i0: {i0}", f"window: {window}", f"C0: {' '.join(map(str, C0))}"]
    try:
        grown = grow_cylindrical_grid(e, layers, list(C0), window)
    except GridGrowthError as exc:
        lines.append(f"witness: {exc.witness}")
        _emit("\n".join(lines) + "\n", None)
        print(f"grid-find: {type(exc).__name__}", file=sys.stderr)
        return 1
    lines += [f"grid: {grown.r}x{grown.p}", f"first distance: {grown.t}", f"restarts: {len(grown.restarts)}"]
    for rs in grown.restarts:
        lines.append(f"restart: {rs.reason} at distance {rs.distance}, length {rs.old_length} -> {rs.new_length}")
    for j, hoop in enumerate(grown.hoops, start=1):
        lines.append(f"hoop {j} (distance {layers[hoop[0]]}): {' '.join(map(str, hoop))}")
    _emit("\n".join(lines) + "\n", None)
    return 0


def cmd_solve(args) -> int:
    e = _load_embedding(args.input)
    pre = _load_coloring(args.precoloring) if args.precoloring else {}
    try:
        phi = solve_3coloring(e, pre)
    except ColoringError as exc:
        raise DomainError(f"precoloring: {exc}") from None
    if phi is None:
        print("unsatisfiable")
        return 1
    _emit(format_coloring(phi), args.output)
    return 0


def cmd_scan(args) -> int:
    common = dict(exhaustive=not args.random, count=args.count, seed=args.seed, jobs=args.jobs)
    if args.n_min is not None:
        common["n_min"] = args.n_min
    if args.mode == "grotzsch":
        rep = scan_grotzsch(args.n, **common)
    elif args.mode == "aksionov":
        rep = scan_aksionov(args.n, all_colorings=args.all_colorings, **common)
    else:
        rep = scan_havel(args.n, delta=args.delta, **common)
    sys.stdout.write(rep.to_text())
    if args.timing:
        print(f"seconds: {rep.seconds:.3f}", file=sys.stderr)
    if args.json:
        _emit(rep.to_json(), args.json)
    if args.witness_dir:
        rep.write_witnesses(args.witness_dir)
    return 0 if rep.failures == 0 else 1


def cmd_verify(args) -> int:
    opts = {"seed": args.seed, "n": args.n}
    res = run_suite(args.lemma, **opts)
    sys.stdout.write(res.to_text())
    return 0 if res.ok else 1


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="planar3col",
        description="Winding numbers, cylindrical grid extension and 3-coloring scans on plane graphs.",
        epilog="Embeddings use the 'planar-rot v1' format, colorings the 'coloring v1' format.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    q = sub.add_parser("faces", help="list the face walks of an embedding")
    q.add_argument("--input", required=True, help="embedding file")
    q.set_defaults(func=cmd_faces)

    q = sub.add_parser("wind", help="winding numbers of a coloring on the faces")
    q.add_argument("--input", required=True, help="embedding file")
    q.add_argument("--coloring", required=True, help="coloring file (total and proper on the faces)")
    q.add_argument("--face", type=_nonneg, help="only this face index")
    q.set_defaults(func=cmd_wind)

    colors_help = ("comma-separated colors 1/2/3 of the hoop vertices (1,j), (2,j), ..., (r,j), "
                   "i.e. starting at the canonical first vertex")
    q = sub.add_parser("grid-extend", help="extend cuff colorings to a cylindrical grid",
                       description="Mode one uses the r x ceil((r+3)/2) grid and needs |w(C1)| <= 1; "
                                   "mode two uses the r x (r+5) grid and needs w(C1) + w(C2) = 0, where "
                                   "C1 is read in hoop order and C2 against it (each as its cap face).")
    q.add_argument("--r", type=int, required=True, help="hoop length (>= 3)")
    q.add_argument("--mode", choices=("one", "two"), required=True)
    q.add_argument("--cuff1", type=_colors, required=True, help=colors_help)
    q.add_argument("--cuff2", type=_colors, help=colors_help + " (last hoop)")
    q.add_argument("--v0", type=int, default=0, help="position 0..r-1 on the last hoop of the exceptional vertex")
    q.add_argument("--output", help="coloring file (default: standard output)")
    q.add_argument("--trace", help="per-hoop trace file (default: standard output when --output is given)")
    q.set_defaults(func=cmd_grid_extend)

    q = sub.add_parser("grid-find", help="grow a cylindrical grid from an equidistant cycle")
    q.add_argument("--input", required=True, help="embedding file")
    q.add_argument("--source", type=_int_list, required=True, help="comma-separated source vertices")
    q.add_argument("--i0", type=_positive, help="distance of the starting cycle (default: first layer with a cycle)")
    q.add_argument("--window", type=_positive, help="distance window width (default: the lemma's bound)")
    q.set_defaults(func=cmd_grid_find)

    q = sub.add_parser("solve", help="3-color an embedding, optionally extending a precoloring")
    q.add_argument("--input", required=True, help="embedding file")
    q.add_argument("--precoloring", help="coloring file with the fixed part")
    q.add_argument("--output", help="coloring file (default: standard output)")
    q.set_defaults(func=cmd_solve)

    q = sub.add_parser("scan", help="colorability scans over generated plane graphs")
    q.add_argument("--mode", choices=("grotzsch", "aksionov", "havel"), required=True)
    q.add_argument("--n", type=_positive, required=True, help="largest vertex count")
    q.add_argument("--n-min", type=_positive, help="smallest vertex count")
    q.add_argument("--delta", type=_nonneg, default=0, help="havel: least distance between triangles")
    q.add_argument("--random", action="store_true", help="sample random graphs instead of exhaustive enumeration")
    q.add_argument("--count", type=_positive, default=1000, help="number of random graphs")
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--all-colorings", action="store_true",
                   help="aksionov: every coloring of C, not one per color permutation class")
    q.add_argument("--jobs", type=_positive, default=None,
                   help="worker processes (default: $PLANAR3COL_JOBS or 1)")
    q.add_argument("--json", help="also write the report as JSON to this file")
    q.add_argument("--witness-dir", help="write witness embedding/coloring pairs here")
    q.add_argument("--timing", action="store_true", help="print the elapsed time on standard error")
    q.set_defaults(func=cmd_scan)

    q = sub.add_parser("verify-lemma", help="run a named verification suite")
    q.add_argument("lemma", choices=sorted(SUITES))
    q.add_argument("--seed", type=int, help="random seed for sampled suites")
    q.add_argument("--n", type=_positive, help="aksionov: largest vertex count (default 8)")
    q.set_defaults(func=cmd_verify)
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "jobs", "unset") is None:
        args.jobs = default_jobs()
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"{args.command}: {exc}", file=sys.stderr)
        return 1
    except (GridError, NotACycle, ColoringError, EmbeddingError) as exc:
        print(f"{args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
