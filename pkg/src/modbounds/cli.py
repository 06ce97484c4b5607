"""Command-line front end.

Exit codes: 0 success, 1 analysis error, 2 usage error, 3 a certificate
contradicted by the exhaustive oracle.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__, edgelist, generators
from .errors import ModBoundsError
from .oracle import MAX_PARTITION_N, brute_force_cuts
from .report import (
    DEFAULT_ORACLE_CAP,
    analyze,
    certify,
    dumps,
    render_text,
    spectrum_table,
)
from .spectral import MATRICES

EXIT_OK, EXIT_ERROR, EXIT_USAGE, EXIT_VIOLATION = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _common(p: argparse.ArgumentParser, with_input: bool = True) -> None:
    if with_input:
        p.add_argument("input_pos", nargs="?", metavar="INPUT", help="edge-list file")
        p.add_argument("-i", "--input", help="edge-list file (alternative to the positional)")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.add_argument("--out", help="write output to this file instead of stdout")
    p.add_argument("--tol", type=float, default=1e-8, help="numerical tolerance (default 1e-8)")
    p.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP,
                   help=f"run the exhaustive oracle up to this many vertices (default {DEFAULT_ORACLE_CAP})")
    p.add_argument("--seed", type=int, default=None, help="random seed for generators")
    p.add_argument("--no-timestamp", action="store_true", help="omit the timestamp from reports")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="modbounds", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report: spectra, nodal cut, certificates, oracle")
    _common(p)
    p.add_argument("--force-oracle", action="store_true", help="run the oracle above --oracle-cap")
    p.add_argument("--eigenvector-index", type=int, default=0)

    p = sub.add_parser("certify", help="certificates for one deflated eigenpair of Mnorm")
    _common(p)
    p.add_argument("--eigenvector-index", "-k", type=int, default=0)

    p = sub.add_parser("oracle", help="exact cut optima by enumeration")
    _common(p)

    p = sub.add_parser("spectrum", help="eigenvalue table of a graph matrix")
    _common(p)
    p.add_argument("--matrix", choices=sorted(MATRICES), default="Mnorm")

    p = sub.add_parser("generate", help="write a graph from a named family as an edge list")
    _common(p, with_input=False)
    p.add_argument("family", choices=sorted(generators.FAMILIES))
    p.add_argument("params", nargs="*", help="family parameters, e.g. '4' or '10,10 0.9 0.05'")
    return parser


def _input_path(args) -> str:
    path = args.input or args.input_pos
    if not path:
        raise UsageError("an input edge-list file is required")
    return path


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x]


def _generate(args):
    fam, params = args.family, args.params
    try:
        if fam == "complete_multipartite":
            (sizes,) = params
            return generators.complete_multipartite(_ints(sizes))
        if fam == "planted_partition":
            sizes, p_in, p_out = params
            return generators.planted_partition(_ints(sizes), float(p_in), float(p_out), seed=args.seed)
        (k,) = params
        return generators.generate(fam, int(k))
    except ValueError as exc:
        if isinstance(exc, ModBoundsError):
            raise
        raise UsageError(f"bad parameters for {fam}: {params}") from exc


def _emit(text: str, args) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _run(args) -> int:
    if args.command == "generate":
        _emit(edgelist.write_edge_list(_generate(args)), args)
        return EXIT_OK

    g = edgelist.load(_input_path(args))
    if args.command == "analyze":
        report = analyze(
            g,
            tol=args.tol,
            oracle_cap=args.oracle_cap,
            force_oracle=args.force_oracle,
            eigen_index=args.eigenvector_index,
            timestamp=not args.no_timestamp,
        )
        _emit(report.to_json() if args.json else render_text(report), args)
        return EXIT_VIOLATION if report.has_violations else EXIT_OK

    if args.command == "certify":
        certs = certify(g, index=args.eigenvector_index, tol=args.tol)
        status = EXIT_OK
        if g.n <= args.oracle_cap:
            from .oracle import verify_bounds

            rep = verify_bounds(g, certs, brute_force_cuts(g), tol=args.tol)
            certs = rep.certificates
            status = EXIT_OK if rep.ok else EXIT_VIOLATION
        if args.json:
            _emit(dumps({"schema": 1, "certificates": certs}), args)
        else:
            _emit("".join(f"{c.name.value:<20} {c.verdict.value:<17} {c.bounds}\n" for c in certs), args)
        return status

    if args.command == "oracle":
        if g.n > args.oracle_cap:
            raise UsageError(f"n={g.n} exceeds --oracle-cap {args.oracle_cap}")
        res = brute_force_cuts(g, partitions=g.n <= MAX_PARTITION_N)
        if args.json:
            _emit(dumps({"schema": 1, "oracle": res}), args)
        else:
            lines = [f"{k}: {v.value} at {list(v.argopt.members)} ({v.count} optimal cuts)"
                     for k, v in (("q_cut", res.q_cut), ("q_rcut", res.q_rcut),
                                  ("q_ncut", res.q_ncut), ("h_G", res.h_G))]
            if res.multiway is not None:
                mw = res.multiway
                lines.append(f"best partition: q={mw.best_q} k={mw.k} all_modules={mw.all_modules}")
            _emit("\n".join(lines) + "\n", args)
        return EXIT_OK

    if args.command == "spectrum":
        table = spectrum_table(g, args.matrix)
        if args.json:
            _emit(dumps({"schema": 1, **table}), args)
        else:
            kern = table["known_eigenvector"]
            rows = []
            for i, lam in enumerate(table["eigenvalues"]):
                mark = f"  <- {kern['vector']}" if kern and kern["index"] == i else ""
                rows.append(f"{i:4d}  {lam: .17g}{mark}")
            _emit(f"# {args.matrix}, n={g.n}\n" + "\n".join(rows) + "\n", args)
        return EXIT_OK
    raise UsageError(f"unknown command {args.command}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except (UsageError, IndexError) as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ModBoundsError, OSError) as exc:
        if getattr(args, "json", False):
            sys.stdout.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        else:
            print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
