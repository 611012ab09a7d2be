"""Command-line front end.

Subcommands: map a bit string, print a distance expansion table, verify a
length exhaustively, or build a permutation array from a code file. Exit
status is 0 on success, 1 when verification finds a violation, and 2 for
usage, parse, and I/O errors.
"""

from __future__ import annotations

import argparse
import enum
import json
import sys

from .analysis import (
    MAX_ENUM_LENGTH,
    THREADS_ENV_VAR,
    DistanceExpansionTable,
    EnumerationTooLarge,
    expansion_table,
    verify_dim,
)
from .core import BinaryVector, DimensionMismatch
from .maps import UnsupportedLength, dim_map
from .pa import (
    BinaryCode,
    DegenerateCode,
    PermutationArray,
    certify,
    code_min_distance,
    construct_pa,
)

TABLE_DESK_LIMIT = 14


class OutputFormat(enum.Enum):
    PLAIN = "plain"
    CSV = "csv"
    JSON = "json"


def _render_table(table: DistanceExpansionTable, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.PLAIN:
        lines = [" ".join(str(c) for c in row) for row in table.counts]
    elif fmt is OutputFormat.CSV:
        header = "i\\j," + ",".join(str(j) for j in range(1, table.n + 1))
        lines = [header] + [
            f"{i}," + ",".join(str(c) for c in row)
            for i, row in enumerate(table.counts, start=1)
        ]
    else:
        payload = {"schema": 1, "n": table.n, "table": [list(row) for row in table.counts]}
        lines = [json.dumps(payload)]
    return "\n".join(lines) + "\n"


def _render_pa(
    pa: PermutationArray, code_dmin: int, certified: bool, fmt: OutputFormat
) -> str:
    flag = "true" if certified else "false"
    summary = f"code_dmin={code_dmin} pa_dmin={pa.min_distance} certified={flag}"
    if fmt is OutputFormat.JSON:
        payload = {
            "schema": 1,
            "n": pa.length,
            "rows": [list(row.entries) for row in pa.rows],
            "code_dmin": code_dmin,
            "pa_dmin": pa.min_distance,
            "certified": certified,
        }
        return json.dumps(payload) + "\n"
    if fmt is OutputFormat.CSV:
        lines = [",".join(str(e) for e in row.entries) for row in pa.rows]
    else:
        lines = [str(row) for row in pa.rows]
    return "\n".join(lines + [summary]) + "\n"


def _read_code_file(path: str) -> BinaryCode:
    """Parse one codeword per line; blank lines and '#' comments are skipped."""
    words: list[BinaryVector] = []
    seen: dict[BinaryVector, int] = {}
    with open(path, "r", encoding="ascii") as handle:
        for line_no, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                word = BinaryVector.from_string(line)
            except ValueError as exc:
                raise ValueError(f"line {line_no}: {exc}") from None
            if words and len(word) != len(words[0]):
                raise ValueError(
                    f"line {line_no}: length {len(word)} differs from "
                    f"length {len(words[0])} of the first codeword"
                )
            if word in seen:
                raise ValueError(
                    f"line {line_no}: duplicate codeword (first at line {seen[word]})"
                )
            seen[word] = line_no
            words.append(word)
    if not words:
        raise ValueError(f"no codewords in {path}")
    return BinaryCode(tuple(words))


def _cmd_map(args: argparse.Namespace) -> int:
    u = BinaryVector.from_string(args.bits)
    print(dim_map(u))
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    n = args.n
    if n < 4 or n > MAX_ENUM_LENGTH:
        print(
            f"error: table length must be in 4..{MAX_ENUM_LENGTH}, got {n}",
            file=sys.stderr,
        )
        return 2
    if n > TABLE_DESK_LIMIT:
        print(
            f"warning: n={n} is above the desk-scale bound {TABLE_DESK_LIMIT}; "
            "this may take a long time",
            file=sys.stderr,
        )
    sys.stdout.write(_render_table(expansion_table(n), OutputFormat(args.format)))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    n = args.n
    if n < 4 or n > MAX_ENUM_LENGTH:
        print(
            f"error: verify length must be in 4..{MAX_ENUM_LENGTH}, got {n}",
            file=sys.stderr,
        )
        return 2
    report = verify_dim(n, early_exit=not args.full_scan)
    if report.is_dim:
        print(f"DIM verified: n={n}, pairs={report.pairs_checked}")
        return 0
    violation = report.first_violation
    print(
        f"u={violation.u} v={violation.v} "
        f"d_in={violation.d_in} d_out={violation.d_out}"
    )
    return 1


def _cmd_pa(args: argparse.Namespace) -> int:
    code = _read_code_file(args.code_file)
    pa = construct_pa(code)
    sys.stdout.write(
        _render_pa(pa, code_min_distance(code), certify(pa, code), OutputFormat(args.format))
    )
    return 0


def _add_format_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.PLAIN.value,
        help="output format (default: plain)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dimkit",
        description="Distance-increasing maps from binary vectors to permutations.",
        epilog=(
            "Bit strings are read leftmost-first: the first character is u_1. "
            f"Set {THREADS_ENV_VAR} to cap scan workers (0 or unset: auto)."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_map = sub.add_parser("map", help="map a bit string to its permutation")
    p_map.add_argument("bits", help="string of 0/1 characters, length >= 4; leftmost is u_1")
    p_map.set_defaults(func=_cmd_map)

    p_table = sub.add_parser("table", help="print the distance expansion table for a length")
    p_table.add_argument("n", type=int, help=f"vector length, 4..{TABLE_DESK_LIMIT} "
                         f"(accepted with a warning up to {MAX_ENUM_LENGTH})")
    _add_format_option(p_table)
    p_table.set_defaults(func=_cmd_table)

    p_verify = sub.add_parser("verify", help="exhaustively verify the map for a length")
    p_verify.add_argument("n", type=int, help=f"vector length, 4..{MAX_ENUM_LENGTH}")
    p_verify.add_argument(
        "--full-scan",
        action="store_true",
        help="keep scanning after the first violation",
    )
    p_verify.set_defaults(func=_cmd_verify)

    p_pa = sub.add_parser("pa", help="build a permutation array from a code file")
    p_pa.add_argument(
        "code_file",
        help="file with one 0/1 codeword per line; blank and '#' lines ignored",
    )
    _add_format_option(p_pa)
    p_pa.set_defaults(func=_cmd_pa)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (
        UnsupportedLength,
        EnumerationTooLarge,
        DegenerateCode,
        DimensionMismatch,
        ValueError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
