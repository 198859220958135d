"""Command-line front end: ``seidel-skew {gen,certify,spectrum,convert,search,census,experiment}``.

Stdout carries exactly one artifact (a matrix file or one JSON document);
diagnostics go to stderr.  Exit codes: 0 pass/success, 1 domain failure,
2 usage or parse error.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import exact, formats, numeric, search
from .errors import (
    CounterexampleFound,
    GroupingAmbiguous,
    NormalizationFailed,
    NotAlmostRegular,
    NotDoublyRegular,
    NotSkewHadamard,
    ParseError,
    SeidelSkewError,
)
from .report import dumps, envelope
from .tournament import (
    delete_vertex,
    drt_to_skew_hadamard,
    extend_to_regular,
    paley_tournament,
    skew_hadamard_to_drt,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# predicate failures on well-formed input; every other error is usage/parse
_DOMAIN_FAILURES = (
    NotAlmostRegular,
    NotDoublyRegular,
    NotSkewHadamard,
    NormalizationFailed,
    GroupingAmbiguous,
    CounterexampleFound,
)


def _read_input(path: str) -> tuple[bytes, str]:
    try:
        data = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    try:
        return data, data.decode("ascii")
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path} is not ASCII text") from exc


def _emit(text: str) -> None:
    sys.stdout.write(text)
    sys.stdout.flush()


def _args_bytes(*parts) -> bytes:
    return "\0".join(str(p) for p in parts).encode()


def cmd_gen(args) -> int:
    if args.kind == "paley":
        t = paley_tournament(args.size)
    else:
        if args.size < 1:
            raise UsageError("random tournaments need size >= 1")
        t = search.random_tournament(args.size, args.seed)
    _emit(formats.format_tournament(t))
    return EXIT_OK


_CERTIFIERS = {
    "drt": exact.certify_drt_spectrum,
    "thm1": exact.certify_thm1_spectrum,
    "thm3": exact.certify_thm3_adjacency,
    "drt-combinatorial": exact.certify_drt_combinatorial,
}


def cmd_certify(args) -> int:
    data, text = _read_input(args.input)
    if args.which == "hadamard":
        report = exact.certify_hadamard(formats.parse_hadamard(text))
    else:
        report = _CERTIFIERS[args.which](formats.parse_tournament(text))
    status = "pass" if report.passed else "fail"
    _emit(dumps(envelope(f"certify {args.which}", data, status, report.to_json())))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_spectrum(args) -> int:
    data, text = _read_input(args.input)
    t = formats.parse_tournament(text)
    try:
        sd = numeric.seidel_eigen(t, args.tol)
    except GroupingAmbiguous as exc:
        _emit(dumps(envelope("spectrum", data, "error", message=str(exc))))
        return EXIT_FAIL
    payload = sd.to_json()
    payload["n"] = t.n
    _emit(dumps(envelope("spectrum", data, "pass", payload)))
    return EXIT_OK


def cmd_convert(args) -> int:
    _, text = _read_input(args.input)
    d = args.direction
    if d == "drt-to-hadamard":
        _emit(formats.format_hadamard(drt_to_skew_hadamard(formats.parse_tournament(text))))
    elif d == "hadamard-to-drt":
        _emit(formats.format_tournament(skew_hadamard_to_drt(formats.parse_hadamard(text))))
    elif d == "delete-vertex":
        if args.vertex is None:
            raise UsageError("delete-vertex needs --vertex")
        _emit(formats.format_tournament(delete_vertex(formats.parse_tournament(text), args.vertex)))
    else:
        _emit(formats.format_tournament(extend_to_regular(formats.parse_tournament(text))))
    return EXIT_OK


def cmd_search(args) -> int:
    hits = search.search_thm1(
        args.n, args.mode, budget=args.budget, seed=args.seed, workers=args.workers
    )
    if args.dump_dir:
        out = Path(args.dump_dir)
        out.mkdir(parents=True, exist_ok=True)
        for tc in hits:
            (out / f"hit_{args.n}_{tc.code}.txt").write_text(
                formats.format_tournament(search.decode(tc))
            )
    payload = {
        "n": args.n,
        "mode": args.mode,
        "budget": args.budget if args.mode == "random" else None,
        "seed": args.seed if args.mode == "random" else None,
        "hit_count": len(hits),
        "codes": [tc.code for tc in hits],
    }
    key = _args_bytes("search", args.n, args.mode, payload["budget"], payload["seed"])
    _emit(dumps(envelope("search", key, "pass", payload)))
    return EXIT_OK


def cmd_census(args) -> int:
    rep = search.census(args.n, workers=args.workers)
    print(f"census {args.n}: {rep.elapsed:.3f}s on {rep.workers} worker(s)", file=sys.stderr)
    _emit(dumps(envelope("census", _args_bytes("census", args.n), "pass", rep.to_json())))
    return EXIT_OK


def cmd_experiment(args) -> int:
    key = _args_bytes("experiment", args.n_drt)
    try:
        rep = search.equivalence_experiment(args.n_drt, workers=args.workers)
    except CounterexampleFound as exc:
        _emit(dumps(envelope("experiment", key, "fail", None, message=str(exc))))
        return EXIT_FAIL
    _emit(dumps(envelope("experiment", key, "pass", rep)))
    return EXIT_OK


def _default_workers() -> int:
    try:
        return int(os.environ.get(search.WORKERS_ENV, "1"))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="seidel-skew", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a tournament file")
    g.add_argument("kind", choices=["paley", "random"])
    g.add_argument("size", type=int, help="prime q for paley, vertex count for random")
    g.add_argument("--seed", type=int, default=0)
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("certify", help="run an exact certificate, JSON report on stdout")
    c.add_argument("which", choices=["drt", "thm1", "thm3", "hadamard", "drt-combinatorial"])
    c.add_argument("input", help="input file, or - for stdin")
    c.set_defaults(func=cmd_certify)

    s = sub.add_parser("spectrum", help="numeric Seidel spectrum and main angles")
    s.add_argument("input")
    s.add_argument("--tol", type=float, default=numeric.DEFAULT_GROUPING_TOL)
    s.set_defaults(func=cmd_spectrum)

    v = sub.add_parser("convert", help="convert between tournaments and skew Hadamard matrices")
    v.add_argument(
        "direction", choices=["drt-to-hadamard", "hadamard-to-drt", "delete-vertex", "extend"]
    )
    v.add_argument("input")
    v.add_argument("--vertex", type=int)
    v.set_defaults(func=cmd_convert)

    workers = dict(type=int, default=_default_workers(),
                   help=f"worker processes (default ${search.WORKERS_ENV} or 1)")

    h = sub.add_parser("search", help="search for tournaments passing the vertex-deletion spectrum certificate")
    h.add_argument("n", type=int)
    h.add_argument("--mode", choices=["exhaustive", "random"], default="exhaustive")
    h.add_argument("--budget", type=int, default=0)
    h.add_argument("--seed", type=int, default=0)
    h.add_argument("--dump-dir")
    h.add_argument("--workers", **workers)
    h.set_defaults(func=cmd_search)

    n = sub.add_parser("census", help="count predicates over all labelled tournaments")
    n.add_argument("n", type=int)
    n.add_argument("--workers", **workers)
    n.set_defaults(func=cmd_census)

    e = sub.add_parser("experiment", help="check both directions of the DRT equivalence")
    e.add_argument("n_drt", type=int)
    e.add_argument("--workers", **workers)
    e.set_defaults(func=cmd_experiment)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _DOMAIN_FAILURES as exc:
        print(f"failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (SeidelSkewError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

if __name__ == "__main__":
    sys.exit(main())
