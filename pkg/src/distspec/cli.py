"""``distspec`` command-line front end.

Exit codes: 0 success, 1 domain error, 2 search finished with skipped input,
64 usage error, 66 unreadable input file.
"""
from __future__ import annotations

import argparse
import contextlib
import sys
from fractions import Fraction

import numpy as np

from . import blockclique, extensions, ktree, search, spectra, transmission
from .distance import diameter, distance_matrix, wiener_index
from .formats import parse_edge_list, parse_graph6, write_edge_list, write_graph6
from .graph import Graph, GraphError, generate, petersen_graph

EX_USAGE = 64
EX_NOINPUT = 66

COMMANDS = (
    "distances", "spectrum", "charpoly", "wiener", "transmission", "cospectral",
    "extend", "blockclique", "ktree", "bounds", "search", "generate",
)

SUMMARY = {
    "distances": "print the BFS distance matrix",
    "spectrum": "floating eigenvalues of the distance or Laplacian matrix",
    "charpoly": "exact characteristic polynomial coefficients",
    "wiener": "Wiener index (bfs, blockclique or ktree route)",
    "transmission": "transmission indices and regularity",
    "cospectral": "decide D-cospectrality of two graphs",
    "extend": "q-coclique / q-clique extension",
    "blockclique": "block decomposition and Laplacian Wiener formula",
    "ktree": "linear k-tree labeling and Wiener index",
    "bounds": "transmission bounds, k-tree Wiener bounds",
    "search": "D-cospectral classes in enumerated or graph6 streams",
    "generate": "emit a named graph",
}


class UsageError(Exception):
    pass


class InputFileError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


class _AddInput(argparse.Action):
    """Collect --g6/--g6-file/--edges in command-line order."""

    def __call__(self, parser, namespace, values, option_string=None):
        items = list(getattr(namespace, "inputs", None) or [])
        items.append((self.const, values))
        namespace.inputs = items


def _input_options(p, required=True):
    p.set_defaults(inputs=[], inputs_required=required)
    p.add_argument("--g6", action=_AddInput, const="g6", metavar="STRING", help="graph6 string")
    p.add_argument("--g6-file", action=_AddInput, const="g6-file", metavar="PATH",
                   help="file with one graph6 string per line")
    p.add_argument("--edges", action=_AddInput, const="edges", metavar="PATH",
                   help="edge-list file ('n <count>' then 'u v' lines)")


def _read(path: str) -> str:
    try:
        with open(path, encoding="ascii") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise InputFileError(f"cannot read {path}: {exc}") from None


def _load_graphs(args) -> list[Graph]:
    graphs = []
    for kind, value in args.inputs:
        if kind == "g6":
            graphs.append(parse_graph6(value))
        elif kind == "g6-file":
            graphs.extend(parse_graph6(ln) for ln in _read(value).splitlines() if ln.strip())
        else:
            graphs.append(parse_edge_list(_read(value)))
    if args.inputs_required and not graphs:
        raise UsageError(f"distspec {args.command}: no graph given (use --g6, --g6-file or --edges)")
    return graphs


def _one(args) -> Graph:
    graphs = _load_graphs(args)
    if len(graphs) != 1:
        raise UsageError(f"distspec {args.command}: expected exactly one graph, got {len(graphs)}")
    return graphs[0]


def _fmt_float(x: float, scale: float = 1.0) -> str:
    if abs(x) <= 1e-10 * max(scale, 1.0):
        x = 0.0
    return f"{x:.12g}"


def _fmt_q(x) -> str:
    return spectra.format_rational(Fraction(x))


def _matrix_text(m) -> str:
    return "".join(" ".join(str(int(v)) for v in row) + "\n" for row in np.asarray(m))


def _matrix_for(g: Graph, kind: str):
    return distance_matrix(g) if kind == "distance" else g.laplacian()


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_distances(args, out):
    for i, g in enumerate(_load_graphs(args)):
        if i:
            out.write("\n")
        out.write(_matrix_text(distance_matrix(g)))


def cmd_spectrum(args, out):
    for g in _load_graphs(args):
        m = _matrix_for(g, args.matrix)
        vals = spectra.sym_eigenvalues(m, args.matrix).eigenvalues
        scale = float(np.abs(m).max()) * g.n if g.n else 1.0
        out.write(" ".join(_fmt_float(x, scale) for x in vals) + "\n")


def cmd_charpoly(args, out):
    for g in _load_graphs(args):
        cp = spectra.charpoly_int(_matrix_for(g, args.matrix))
        out.write(spectra.format_charpoly(cp) + "\n")
        if args.fingerprint:
            out.write(spectra.fingerprint(cp).hex() + "\n")


def cmd_wiener(args, out):
    for g in _load_graphs(args):
        if args.method == "bfs":
            w = wiener_index(distance_matrix(g))
        elif args.method == "blockclique":
            w = blockclique.wiener_blockclique_spectral(g)
        else:
            if args.k is None:
                raise UsageError("distspec wiener: --method ktree needs --k")
            w = ktree.wiener_linear_ktree(g, args.k)
        out.write(_fmt_q(w) + "\n")


def cmd_transmission(args, out):
    for g in _load_graphs(args):
        d = distance_matrix(g)
        prof = transmission.transmission_profile(d)
        rep = transmission.proposition4_check(g) if args.prop4 else None
        out.write("transmission " + " ".join(map(str, prof.per_vertex)) + "\n")
        out.write(f"wiener {prof.wiener}\n")
        out.write(f"regular {prof.regular_k if prof.regular_k is not None else 'none'}\n")
        if rep is not None:
            out.write(f"nk/2 {_fmt_q(Fraction(rep.n * rep.k, 2))}\n")
            out.write(f"lambda1 {_fmt_float(rep.largest_eigenvalue)}\n")
            out.write(f"check {'pass' if rep.ok else 'fail'}\n")


def cmd_cospectral(args, out):
    graphs = _load_graphs(args)
    if len(graphs) != 2:
        raise UsageError(f"distspec cospectral: expected two graphs, got {len(graphs)}")
    out.write("true\n" if spectra.d_cospectral(*graphs) else "false\n")


def cmd_extend(args, out):
    kind = extensions.ExtensionKind(args.kind)
    for g in _load_graphs(args):
        ext = extensions.extend(g, args.q, kind)
        if args.show == "graph6":
            out.write(write_graph6(ext) + "\n")
        elif args.show == "edges":
            out.write(write_edge_list(ext))
        elif args.show == "distances":
            out.write(_matrix_text(extensions.extension_distance_matrix(distance_matrix(g), args.q, kind)))
        else:
            d = distance_matrix(g)
            closed = extensions.extension_distance_matrix(d, args.q, kind)
            bfs = distance_matrix(ext)
            w = extensions.extension_wiener(wiener_index(d), g.n, args.q, kind)
            out.write(f"wiener {w}\n")
            out.write(f"diameter {diameter(closed)}\n")
            out.write(f"closed_form_matches_bfs {str(bool(np.array_equal(closed, bfs))).lower()}\n")
            out.write(f"wiener_matches_bfs {str(w == wiener_index(bfs)).lower()}\n")


def cmd_blockclique(args, out):
    if args.forest is not None:
        lhs, rhs = blockclique.forest_split_identity(args.forest)
        out.write(f"forest_split {lhs} {rhs}\n")
        return
    for g in _load_graphs(args):
        dec = blockclique.block_decomposition(g)
        params = blockclique.uniform_block_clique_params(g)
        out.write("blocks " + " ".join(",".join(map(str, b)) for b in dec.blocks) + "\n")
        out.write("cut_vertices " + " ".join(map(str, dec.cut_vertices)) + "\n")
        out.write(f"b {params.b} r {params.r}\n")
        out.write(f"laplacian_reciprocal_sum {_fmt_q(spectra.laplacian_reciprocal_sum(g))}\n")
        out.write(f"spanning_trees {blockclique.spanning_tree_count_blockclique(params)}\n")
        out.write(f"wiener {_fmt_q(blockclique.wiener_blockclique_spectral(g))}\n")


def cmd_ktree(args, out):
    for g in _load_graphs(args):
        if args.wiener:
            out.write(f"{ktree.wiener_linear_ktree(g, args.k)}\n")
            continue
        cert = ktree.recursive_labeling(g, args.k)
        out.write("labeling " + " ".join(map(str, cert.labeling)) + "\n")
        for p in sorted(cert.back_neighbors):
            nb = " ".join(map(str, cert.back_neighbors[p]))
            out.write(f"back {p} {cert.labeling[p]}: {nb}\n")


def cmd_bounds(args, out):
    if args.ktree:
        n, k = args.ktree
        lo, hi = ktree.ktree_wiener_bounds(n, k)
        out.write(f"ktree_wiener_bounds {lo} {hi}\n")
        return
    if args.corollary:
        n, diam = args.corollary
        out.write(f"corollary_bound {transmission.corollary_diameter_bound(n, diam)}\n")
        return
    for g in _load_graphs(args):
        d = distance_matrix(g)
        prof = transmission.transmission_profile(d)
        vb = transmission.check_vertex_bounds(prof, g)
        out.write(f"vertex_bounds {vb.lower} {vb.upper} {'pass' if vb.ok else 'fail'}\n")
        for v in vb.vertices:
            eq = "lower" if v.lower_equality else "upper" if v.upper_equality else "strict"
            if v.lower_equality and v.upper_equality:
                eq = "both"
            out.write(f"  {v.vertex} T={v.transmission} {eq}\n")
        tr = transmission.check_transmission_regular_bounds(g)
        if tr.applicable:
            eq = "complete" if tr.lower_equality else "cycle" if tr.upper_equality else "strict"
            out.write(f"regular_bounds {tr.lower} {tr.k} {tr.upper} {eq} "
                      f"cut_vertices={len(tr.cut_vertices)} {'pass' if tr.ok else 'fail'}\n")
        else:
            out.write("regular_bounds not applicable\n")
        cr = transmission.check_corollary(g, d)
        out.write(f"corollary {cr.max_transmission} <= {cr.bound} {'pass' if cr.ok else 'fail'}\n")


def cmd_search(args, out, err):
    skipped = 0
    if args.inputs:
        files = [v for kind, v in args.inputs if kind == "g6-file"]
        if len(files) != len(args.inputs):
            raise UsageError("distspec search: streams are given with --g6-file only")
        for f in files:
            _read_probe(f)
        res = search.scan_graph6_files(files, workers=args.workers)
        classes, skipped = res.classes, res.skipped
        if skipped:
            err.write(f"warning: skipped {res.skipped_disconnected} disconnected and "
                      f"{res.skipped_malformed} malformed records\n")
    else:
        if args.n is None:
            raise UsageError("distspec search: give --n N or --g6-file PATH")
        sizes = range(1, args.n + 1) if args.up_to else [args.n]
        graphs = [g for n in sizes for g in search.enumerate_connected(n)]
        if args.collisions:
            for w, members in search.wiener_collisions(graphs):
                out.write(f"wiener {w}: " + " ".join(m.graph6 for m in members) + "\n")
            return 0
        classes = search.cospectral_classes(graphs)
    out.write(search.mate_report(classes, args.filter).render())
    return 2 if skipped else 0


def _read_probe(path):
    try:
        with open(path, "rb"):
            pass
    except OSError as exc:
        raise InputFileError(f"cannot read {path}: {exc}") from None


def cmd_generate(args, out):
    fam, n = args.family, args.n
    if fam in ("complete", "path", "cycle"):
        g = generate(fam, n)
    elif fam == "petersen":
        g = petersen_graph()
    elif fam == "blockclique":
        g = blockclique.random_block_clique(args.b, args.r, args.seed)
    elif fam in ("ktree-pathlike", "ktree-dominating"):
        g = ktree.generate_extremal_ktree(n, args.k, fam.split("-")[1])
    elif fam == "ktree-random":
        g = ktree.random_linear_ktree(n, args.k, args.seed)
    else:
        g = transmission.corollary_witness(n, args.diam)
    out.write(write_graph6(g) + "\n" if args.format == "graph6" else write_edge_list(g))


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    top = _Parser(
        prog="distspec",
        description="Exact distance-matrix toolkit.",
        epilog="exit codes: 0 ok, 1 domain error, 2 search skipped input, 64 usage, 66 unreadable file",
    )
    sub = top.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)

    def add(name):
        return sub.add_parser(name, help=SUMMARY[name], description=SUMMARY[name])

    p = add("distances")
    _input_options(p)
    for name in ("spectrum", "charpoly"):
        p = add(name)
        _input_options(p)
        p.add_argument("--matrix", choices=("distance", "laplacian"), default="distance")
        if name == "charpoly":
            p.add_argument("--fingerprint", action="store_true", help="also print the hex fingerprint")
    p = add("wiener")
    _input_options(p)
    p.add_argument("--method", choices=("bfs", "blockclique", "ktree"), default="bfs")
    p.add_argument("--k", type=int)
    p = add("transmission")
    _input_options(p)
    p.add_argument("--prop4", action="store_true", help="check W = nk/2 and lambda1 = k")
    p = add("cospectral")
    _input_options(p)
    p = add("extend")
    _input_options(p)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--kind", choices=("coclique", "clique"), required=True)
    p.add_argument("--show", choices=("graph6", "edges", "distances", "check"), default="graph6")
    p = add("blockclique")
    _input_options(p, required=False)
    p.add_argument("--forest", type=int, metavar="B", help="evaluate the forest split identity at B")
    p = add("ktree")
    _input_options(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--wiener", action="store_true", help="print only the Wiener index")
    p = add("bounds")
    _input_options(p, required=False)
    p.add_argument("--ktree", type=int, nargs=2, metavar=("N", "K"))
    p.add_argument("--corollary", type=int, nargs=2, metavar=("N", "DIAM"))
    p = add("search")
    _input_options(p, required=False)
    p.add_argument("--n", type=int, help="enumerate connected graphs on N vertices (N <= 7)")
    p.add_argument("--up-to", action="store_true", help="enumerate all sizes 1..N")
    p.add_argument("--filter", choices=search.FILTERS, default="any")
    p.add_argument("--collisions", action="store_true",
                   help="report equal-Wiener, non-cospectral groups instead")
    p.add_argument("--workers", type=int, default=1)
    p = add("generate")
    p.add_argument("--family", required=True, choices=(
        "complete", "path", "cycle", "petersen", "blockclique", "ktree-pathlike",
        "ktree-dominating", "ktree-random", "corollary-witness"))
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--b", type=int, default=3)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--diam", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("graph6", "edges"), default="graph6")
    return top


def run(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(argv)
    parser = build_parser()
    if not argv or argv[0] in ("-h", "--help", "help"):
        (out if argv else err).write(parser.format_help())
        return 0 if argv else EX_USAGE
    if argv[0] not in COMMANDS:
        err.write(f"distspec: unknown command {argv[0]!r}\n")
        return EX_USAGE
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
        handler = globals()[f"cmd_{args.command}"]
        if args.command == "search":
            return handler(args, out, err)
        handler(args, out)
        return 0
    except SystemExit as exc:  # --help inside a subcommand
        return int(exc.code or 0)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EX_USAGE
    except InputFileError as exc:
        err.write(f"distspec: {exc}\n")
        return EX_NOINPUT
    except (GraphError, ValueError, ArithmeticError) as exc:
        err.write(f"distspec {argv[0]}: {exc}\n")
        return 1


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
