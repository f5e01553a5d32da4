"""Command line entry point ``equidiff``.

Exit status: 0 on success, 1 when the spec violates an invariant (or a
self-check fails), 2 on unreadable input or bad usage.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence, TextIO

from .abgroup import DEFAULT_MAX_ORDER, Character
from .coverspec import arithmetic_genus, genus_normalization, node_count_total
from .eigendim import chi_sets, dim_connected, dim_irreducible, m_chi_closed, m_chi_divisor
from .errors import EquidiffError
from .oracle import SuperellipticData, calibrate, oracle_dims, superelliptic_genus
from .specfile import SpecDocument, SpecSyntaxError, SpecValidationError, load_spec, parse_tuple

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_SYNTAX = 2


class _UsageError(Exception):
    pass


def _load(path: str, max_order: int, err: TextIO) -> tuple[Optional[SpecDocument], int]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        print(f"{path}: error: {exc}", file=err)
        return None, EXIT_SYNTAX
    try:
        return load_spec(text, max_order), EXIT_OK
    except SpecSyntaxError as exc:
        for d in exc.diagnostics:
            print(f"{path}:{d.line}:{d.column}: error: {d.message}", file=err)
        return None, EXIT_SYNTAX
    except SpecValidationError as exc:
        for v in exc.violations:
            line = exc.document.line_of(v.label)
            where = f"{path}:{line}" if line is not None else path
            print(f"{where}: {v.code} [{v.label}] {v.message}", file=err)
        return None, EXIT_INVALID


def _fmt_char(chi: Character) -> str:
    return ",".join(str(c) for c in chi.coords)


def cmd_validate(doc: SpecDocument, args, out: TextIO) -> int:
    print("valid", file=out)
    return EXIT_OK


def cmd_dims(doc: SpecDocument, args, out: TextIO) -> int:
    spec = doc.spec
    chars = spec.group.characters()
    if args.char is not None:
        try:
            coords = parse_tuple(args.char)
        except ValueError:
            raise _UsageError(f"--char: cannot parse {args.char!r}") from None
        if len(coords) != spec.group.rank:
            raise _UsageError(
                f"--char: {args.char!r} has {len(coords)} coordinates, "
                f"group needs {spec.group.rank}"
            )
        chars = [Character(spec.group, coords)]
    print("# equidiff dims v1", file=out)
    for chi in chars:
        print(f"{_fmt_char(chi)}\t{dim_connected(spec, chi)}", file=out)
    return EXIT_OK


def cmd_genus(doc: SpecDocument, args, out: TextIO) -> int:
    spec = doc.spec
    print("# equidiff genus v1", file=out)
    print(f"quotient_genus\t{spec.genus_y}", file=out)
    print(f"normalization_genus\t{genus_normalization(spec)}", file=out)
    print(f"nodes\t{node_count_total(spec)}", file=out)
    print(f"arithmetic_genus\t{arithmetic_genus(spec)}", file=out)
    return EXIT_OK


def selfcheck_report(doc: SpecDocument) -> list[tuple[str, bool, str]]:
    """``(code, passed, detail)`` for each consistency check on a valid spec."""
    spec = doc.spec
    chars = spec.group.characters()
    dims = {chi: dim_connected(spec, chi) for chi in chars}
    results = []

    bad = [chi for chi in chars
           if m_chi_closed(spec, chi, chi_sets(spec, chi))
           != m_chi_divisor(spec, chi, chi_sets(spec, chi))]
    results.append(("m-two-path", not bad,
                    f"character ({_fmt_char(bad[0])})" if bad else ""))

    trivial = dims[chars[0]]
    results.append(("trivial-character", trivial == spec.genus_y,
                    f"{trivial} != {spec.genus_y}"))

    total, pa = sum(dims.values()), arithmetic_genus(spec)
    results.append(("sum-rule", total == pa, f"{total} != {pa}"))

    negative = [chi for chi, d in dims.items() if d < 0]
    results.append(("nonnegative", not negative,
                    f"character ({_fmt_char(negative[0])})" if negative else ""))

    if spec.component_count == 1:
        off = [chi for chi in chars if dim_irreducible(spec, chi) != dims[chi]]
        results.append(("irreducible-agrees", not off,
                        f"character ({_fmt_char(off[0])})" if off else ""))
    return results


def cmd_selfcheck(doc: SpecDocument, args, out: TextIO) -> int:
    print("# equidiff selfcheck v1", file=out)
    status = EXIT_OK
    for code, passed, detail in selfcheck_report(doc):
        if passed:
            print(f"PASS {code}", file=out)
        else:
            print(f"FAIL {code} {detail}", file=out)
            status = EXIT_INVALID
    return status


def cmd_oracle(args, out: TextIO) -> int:
    try:
        exponents = parse_tuple(args.exponents)
    except ValueError:
        raise _UsageError(f"--exponents: cannot parse {args.exponents!r}") from None
    direction = args.direction
    if direction == "auto":
        direction = calibrate()
    try:
        data = SuperellipticData.from_exponents(args.e, exponents, direction)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    print("# equidiff oracle v1", file=out)
    print(f"# e={data.e} genus={superelliptic_genus(data)} direction={direction}", file=out)
    for c, dim in oracle_dims(data).items():
        print(f"{c}\t{dim}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equidiff",
        description="Character multiplicities in holomorphic differentials "
                    "of nodal curves with abelian group action.",
    )
    parser.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER,
                        help="largest group order accepted (default %(default)s)")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, helptext in [
        ("validate", "check a cover file against all invariants"),
        ("genus", "print quotient, normalization and arithmetic genera"),
        ("selfcheck", "run the internal consistency checks"),
    ]:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("file")

    p = sub.add_parser("dims", help="multiplicity of every character")
    p.add_argument("file")
    p.add_argument("--char", metavar="TUPLE", help="only this character, e.g. 1,0")

    p = sub.add_parser("oracle", help="eigenspace dimensions of y^e = prod (x - l_i)^d_i")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--exponents", required=True, metavar="d1,d2,...")
    p.add_argument("--direction", choices=["auto", "forward", "inverse"], default="auto")
    return parser


_FILE_COMMANDS = {
    "validate": cmd_validate,
    "dims": cmd_dims,
    "genus": cmd_genus,
    "selfcheck": cmd_selfcheck,
}


def main(argv: Optional[Sequence[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_SYNTAX if exc.code else EXIT_OK
    try:
        if args.command == "oracle":
            return cmd_oracle(args, out)
        doc, status = _load(args.file, args.max_order, err)
        if doc is None:
            return status
        return _FILE_COMMANDS[args.command](doc, args, out)
    except _UsageError as exc:
        print(f"equidiff: error: {exc}", file=err)
        return EXIT_SYNTAX
    except EquidiffError as exc:
        print(f"equidiff: error: {exc}", file=err)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
