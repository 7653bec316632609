"""Command-line front end with machine-readable output and an on-disk count cache.

Subcommands: count, matrix, enumerate, map, verify.  Payload goes to stdout,
diagnostics to stderr.  Exit codes: 0 success or pass, 1 a check found a
counterexample, 2 usage or domain error.  This is the only module that
touches the filesystem or environment; the cache directory comes from
``--cache-dir`` or the PERMLAB_CACHE environment variable.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import tempfile
from dataclasses import dataclass
from pathlib import Path

from . import bijections, enumeration, toeplitz, verify
from .cycles import format_cycles, parse_cycles
from .enumeration import CountKey, CountMatrix, CountTable
from .errors import BudgetError, DomainError
from .words import format_word, parse_word

CACHE_ENV_VAR = "PERMLAB_CACHE"
CACHE_FORMAT_VERSION = 1


@dataclass(frozen=True)
class CliConfig:
    cache_dir: Path | None
    output_format: str
    budget_override: int | None = None


class DiskCache:
    """Count tables persisted as checksummed JSON files, one per (kind, n).

    Files are written atomically (temp file, then rename); a file whose
    checksum does not match its payload is ignored and recomputed, never
    trusted.
    """

    def __init__(self, root: Path):
        self.root = Path(root)

    def _path(self, kind: str, n: int) -> Path:
        return self.root / f"{kind}-n{n}.v{CACHE_FORMAT_VERSION}.json"

    @staticmethod
    def _payload(table: CountTable) -> dict:
        return {
            "format_version": CACHE_FORMAT_VERSION,
            "kind": table.kind,
            "n": table.n,
            "totals": list(table.totals),
            "cells": [[list(row) for row in layer] for layer in table.cells],
        }

    @staticmethod
    def _checksum(payload: dict) -> str:
        canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode()).hexdigest()

    def load(self, kind: str, n: int) -> CountTable | None:
        path = self._path(kind, n)
        try:
            with open(path, encoding="utf-8") as fh:
                blob = json.load(fh)
            payload = {k: v for k, v in blob.items() if k != "checksum"}
            if blob.get("checksum") != self._checksum(payload):
                return None
            if payload.get("format_version") != CACHE_FORMAT_VERSION:
                return None
            if payload.get("kind") != kind or payload.get("n") != n:
                return None
            return CountTable(
                kind=kind,
                n=n,
                totals=tuple(payload["totals"]),
                cells=tuple(tuple(tuple(row) for row in layer) for layer in payload["cells"]),
            )
        except (OSError, ValueError, KeyError, TypeError):
            return None

    def save(self, table: CountTable) -> None:
        self.root.mkdir(parents=True, exist_ok=True)
        payload = self._payload(table)
        blob = dict(payload, checksum=self._checksum(payload))
        fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(blob, fh, sort_keys=True)
            os.replace(tmp, self._path(table.kind, table.n))
        except OSError:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise


def _config(args) -> CliConfig:
    cache_dir = args.cache_dir or os.environ.get(CACHE_ENV_VAR)
    return CliConfig(
        cache_dir=Path(cache_dir) if cache_dir else None,
        output_format=getattr(args, "format", "text"),
        budget_override=getattr(args, "budget_override", None),
    )


def _store(config: CliConfig) -> DiskCache | None:
    return DiskCache(config.cache_dir) if config.cache_dir else None


def _cmd_count(args) -> int:
    store = _store(_config(args))
    key = CountKey(n=args.n, d=args.d, i=args.i, j=args.j)
    print(enumeration.count(args.kind, key, store=store))
    return 0


def _matrix_text(matrix: CountMatrix, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(matrix.to_json_obj())
    if fmt == "csv":
        return matrix.to_csv()
    return matrix.to_text()


def _cmd_matrix(args) -> int:
    store = _store(_config(args))
    matrix = enumeration.build_matrix(args.kind, args.n, args.d, store=store)
    print(_matrix_text(matrix, args.format))
    return 0


def _cmd_enumerate(args) -> int:
    if args.kind == "ballot":
        for p in enumeration.enumerate_ballot(args.n):
            print(format_word(p))
    else:
        for cycles in enumeration.enumerate_odd_order(args.n):
            print(format_cycles(cycles))
    return 0


def _require_letters(args) -> tuple[int, int]:
    if args.i is None or args.j is None:
        raise DomainError(f"map --op {args.op} needs --i and --j")
    return args.i, args.j


def _cmd_map(args) -> int:
    cyclic = args.kind == "cyclic"
    perm = parse_cycles(args.perm) if cyclic else parse_word(args.perm)
    op = args.op
    if op in ("T", "Tinv"):
        i, j = _require_letters(args)
        fn = toeplitz.shift if op == "T" else toeplitz.shift_inv
        result = fn(perm, i, j, cyclic=cyclic)
    elif op in ("f", "g"):
        if cyclic:
            raise DomainError(f"map --op {op} is defined on one-line permutations only")
        i, j = _require_letters(args)
        direction = "forward" if op == "f" else "backward"
        result = bijections.flank_swap(perm, i, j, direction)
    elif op == "phi":
        if cyclic:
            raise DomainError("map --op phi is defined on one-line permutations only")
        i, j = _require_letters(args)
        result = bijections.exchange_letters(perm, i, j)
    elif op == "contract":
        i, j = _require_letters(args)
        result = bijections.contract(perm, i, j, inverse=args.inverse)
    else:  # flip
        if not cyclic:
            raise DomainError("map --op flip is defined on cycle decompositions only")
        result = bijections.cycle_flip(perm)
    print(format_cycles(result) if cyclic else format_word(result))
    return 0


def _report_text(report: verify.VerificationReport) -> str:
    line = (f"{report.check}: {report.status.upper()} "
            f"(max_n={report.max_n}, cells={report.cells_checked}, "
            f"{report.wall_time_ms:.1f} ms)")
    for ce in report.counterexamples:
        line += f"\n  counterexample {ce['params']}: lhs={ce['lhs']} rhs={ce['rhs']}"
    return line


def _cmd_verify(args) -> int:
    if args.check == "all":
        names = [name for name, _, _ in verify.list_checks()]
    else:
        names = [args.check]
    failed = False
    for name in names:
        max_n = args.max_n
        if args.check == "all" and max_n is not None:
            # clamp a blanket bound into each check's own sensible range
            info = verify.CHECKS[name]
            max_n = max(info.min_n, min(max_n, info.default_max_n))
        report = verify.run_check(name, max_n=max_n, budget_override=args.budget_override)
        if args.format == "json":
            print(json.dumps(report.to_json_obj()))
        else:
            print(_report_text(report))
        failed = failed or report.status != "pass"
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permlab",
        description="Exhaustive laboratory for ballot and odd order permutations.",
    )
    parser.add_argument("--cache-dir", default=None,
                        help=f"directory for on-disk count tables (or ${CACHE_ENV_VAR})")
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="refined count for one query key")
    count.add_argument("--kind", choices=enumeration.KINDS, required=True)
    count.add_argument("--n", type=int, required=True)
    count.add_argument("--d", type=int, default=None)
    count.add_argument("--i", type=int, default=None)
    count.add_argument("--j", type=int, default=None)
    count.set_defaults(fn=_cmd_count)

    matrix = sub.add_parser("matrix", help="neighbor-cell count matrix")
    matrix.add_argument("--kind", choices=enumeration.KINDS, required=True)
    matrix.add_argument("--n", type=int, required=True)
    matrix.add_argument("--d", type=int, default=None)
    matrix.add_argument("--format", choices=("text", "json", "csv"), default="text")
    matrix.set_defaults(fn=_cmd_matrix)

    enum = sub.add_parser("enumerate", help="stream all members of one class")
    enum.add_argument("--kind", choices=enumeration.KINDS, required=True)
    enum.add_argument("--n", type=int, required=True)
    enum.set_defaults(fn=_cmd_enumerate)

    map_cmd = sub.add_parser("map", help="apply one of the structure-preserving maps")
    map_cmd.add_argument("--op", choices=("T", "Tinv", "f", "g", "phi", "contract", "flip"),
                         required=True)
    map_cmd.add_argument("--kind", choices=("linear", "cyclic"), default="linear")
    map_cmd.add_argument("--i", type=int, default=None)
    map_cmd.add_argument("--j", type=int, default=None)
    map_cmd.add_argument("--inverse", action="store_true",
                         help="apply the inverse direction (contract only)")
    map_cmd.add_argument("--perm", required=True,
                         help='one-line form "3 8 2 ..." or cycle form "(1 3)(2)"')
    map_cmd.set_defaults(fn=_cmd_map)

    ver = sub.add_parser("verify", help="run one named check, or all of them")
    check_names = [name for name, _, _ in verify.list_checks()]
    ver.add_argument("--check", choices=check_names + ["all"], required=True)
    ver.add_argument("--max-n", type=int, default=None, dest="max_n")
    ver.add_argument("--format", choices=("text", "json"), default="text")
    ver.add_argument("--budget-override", type=int, default=None, dest="budget_override")
    ver.set_defaults(fn=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except BudgetError as exc:
        print(f"permlab: budget error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"permlab: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
