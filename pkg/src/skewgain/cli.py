"""Command line front end.

Exit status is 0 on success, 1 on domain errors (for instance a distance
matrix requested for a graph that is not distance compatible) and 2 on
usage or input-file errors. Errors are reported as one line of JSON on
stderr. Floats are printed with 17 significant digits.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import __version__
from .balance import balance_certificate, balance_via_distance_cospectrality
from .cycles import canonical_odd_cycle, cycle_distance_spectrum_closed
from .distance import distance_matrix, distance_matrix_max, distance_matrix_min
from .errors import GainGraphError
from .generators import MODELS, RandomModel, random_csg, random_switching
from .graph import adjacency_matrix, apply_switching, blocks, is_bipartite, is_connected, magnitude_graph
from .io import GraphFile, load_graph_file, serialize_graph
from .paths import DEFAULT_CAP, DEFAULT_TOL, compatibility_report
from .spectra import char_poly, char_poly_elementary, hermitian_eigenvalues


class InputError(Exception):
    """Wraps errors raised while reading the graph file (exit status 2)."""

    def __init__(self, cause: Exception):
        self.cause = cause
        super().__init__(str(cause))


def _num(x: float) -> str:
    x = float(x)
    if not math.isfinite(x):
        return "null"
    return format(x, ".17g")


def dumps(obj) -> str:
    """Compact JSON with every float written to 17 significant digits."""
    if isinstance(obj, bool) or obj is None:
        return {True: "true", False: "false", None: "null"}[obj]
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _num(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ",".join(f"{dumps(str(k))}:{dumps(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(dumps(v) for v in obj) + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _complex_cell(z: complex) -> str:
    re, im = format(z.real, ".17g"), format(abs(z.imag), ".17g")
    sign = "-" if math.copysign(1.0, z.imag) < 0 else "+"
    return f"{re}{sign}{im}j"


def _read(path: str) -> GraphFile:
    try:
        if path == "-":
            return load_graph_file(sys.stdin.read())
        with open(path, encoding="utf-8") as fh:
            return load_graph_file(fh.read())
    except (GainGraphError, OSError) as exc:
        raise InputError(exc) from exc


def _matrix_for(g, which: str, cap: int, tol: float) -> np.ndarray:
    if which == "adjacency":
        return adjacency_matrix(g)
    if which == "distance":
        return distance_matrix(g, cap, tol).entries
    return distance_matrix(magnitude_graph(g), cap, tol).entries


def cmd_validate(args) -> str:
    gf = _read(args.file)
    return dumps({"valid": True, "n": gf.graph.n, "m": gf.graph.num_edges})


def cmd_info(args) -> str:
    gf = _read(args.file)
    g = gf.graph
    bip, _ = is_bipartite(g)
    out = {"n": g.n, "m": g.num_edges, "connected": is_connected(g), "bipartite": bip}
    if out["connected"] and g.n:
        out["blocks"] = [sorted(b) for b in blocks(g)]
        out["balanced"] = balance_certificate(g, args.tol).balanced
    if gf.labels:
        out["labels"] = {str(k): v for k, v in sorted(gf.labels.items())}
    return dumps(out)


def cmd_balance(args) -> str:
    g = _read(args.file).graph
    return dumps(balance_certificate(g, args.tol).to_dict())


def cmd_compat(args) -> str:
    g = _read(args.file).graph
    return dumps(compatibility_report(g, args.cap, args.tol).to_dict())


def cmd_dmatrix(args) -> str:
    g = _read(args.file).graph
    fn = {"max": distance_matrix_max, "min": distance_matrix_min, "auto": distance_matrix}[args.which]
    d = fn(g, args.cap, args.tol)
    if args.format == "csv":
        return "\n".join(",".join(_complex_cell(z) for z in row) for row in d.entries)
    return dumps(d.to_dict())


def cmd_spectrum(args) -> str:
    g = _read(args.file).graph
    return dumps(hermitian_eigenvalues(_matrix_for(g, args.matrix, args.cap, args.tol)).to_dict())


def cmd_charpoly(args) -> str:
    g = _read(args.file).graph
    if args.method == "elementary":
        if args.matrix != "adjacency":
            raise UsageError("--method elementary only applies to the adjacency matrix")
        return dumps(char_poly_elementary(g).to_dict())
    return dumps(char_poly(_matrix_for(g, args.matrix, args.cap, args.tol)).to_dict())


def cmd_cycle_spectrum(args) -> str:
    out = {"n": args.n, "k": args.k, "theta": args.theta}
    closed = numeric = None
    if args.mode in ("closed", "both"):
        closed = cycle_distance_spectrum_closed(args.n, args.k, args.theta)
        out["closed"] = closed.to_dict()
    if args.mode in ("numeric", "both"):
        g = canonical_odd_cycle(args.n, args.k, args.theta)
        numeric = hermitian_eigenvalues(distance_matrix(g, args.cap, args.tol).entries)
        out["numeric"] = numeric.to_dict()
    if closed is not None and numeric is not None:
        out["max_abs_difference"] = float(np.max(np.abs(closed.values - numeric.values)))
    return dumps(out)


def cmd_switch(args) -> str:
    gf = _read(args.file)
    zeta = random_switching(gf.graph.n, args.seed)
    return serialize_graph(apply_switching(gf.graph, zeta), gf.labels).rstrip("\n")


def cmd_gen(args) -> str:
    model = RandomModel(kind=args.model, seed=args.seed)
    m = args.m if args.m is not None else args.n - 1
    return serialize_graph(random_csg(model, args.n, m, bipartite=args.bipartite)).rstrip("\n")


def cmd_cospectral(args) -> str:
    g = _read(args.file).graph
    return dumps({"balanced_and_modulus_compatible": balance_via_distance_cospectrality(g, args.cap, args.tol)})


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="max distinct shortest-path gains per vertex")
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="comparison tolerance")

    parser = argparse.ArgumentParser(prog="skewgain", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help, file=True):
        p = sub.add_parser(name, parents=[common], help=help)
        if file:
            p.add_argument("file", help="graph file, '-' for stdin")
        p.set_defaults(func=fn)
        return p

    add("validate", cmd_validate, "parse and validate a graph file")
    add("info", cmd_info, "basic structure of a graph")
    add("balance", cmd_balance, "balance certificate")
    add("compat", cmd_compat, "distance compatibility report")
    p = add("dmatrix", cmd_dmatrix, "distance matrix")
    p.add_argument("--which", choices=("max", "min", "auto"), default="auto")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p = add("spectrum", cmd_spectrum, "eigenvalues of a Hermitian matrix of the graph")
    p.add_argument("--matrix", choices=("distance", "adjacency", "magnitude-distance"), default="distance")
    p = add("charpoly", cmd_charpoly, "characteristic polynomial")
    p.add_argument("--method", choices=("fl", "elementary"), default="fl")
    p.add_argument("--matrix", choices=("distance", "adjacency", "magnitude-distance"), default="adjacency")
    add("cospectral", cmd_cospectral, "balance test through distance cospectrality")
    p = add("cycle-spectrum", cmd_cycle_spectrum, "distance spectrum of an odd gain cycle", file=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=float, default=1.0)
    p.add_argument("--theta", type=float, default=0.0)
    p.add_argument("--mode", choices=("closed", "numeric", "both"), default="both")
    p = add("switch", cmd_switch, "apply a random unit switching")
    p.add_argument("--seed", type=int, default=0)
    p = add("gen", cmd_gen, "generate a random connected gain graph", file=False)
    p.add_argument("--model", choices=MODELS, default="unit")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bipartite", action="store_true")
    return parser


def _diagnostic(kind: str, exc: Exception) -> str:
    out = {"error": kind, "message": str(exc)}
    for attr in ("witness", "line"):
        val = getattr(exc, attr, None)
        if val is not None:
            out[attr] = list(val) if isinstance(val, tuple) else val
    return dumps(out)


def run_command(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = args.func(args)
    except InputError as exc:
        cause = exc.cause
        kind = cause.kind if isinstance(cause, GainGraphError) else type(cause).__name__
        stderr.write(_diagnostic(kind, cause) + "\n")
        return 2
    except UsageError as exc:
        stderr.write(_diagnostic("Usage", exc) + "\n")
        return 2
    except GainGraphError as exc:
        stderr.write(_diagnostic(exc.kind, exc) + "\n")
        return 1
    stdout.write(text + "\n")
    return 0


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
