"""Command-line interface: counting, enumeration, classification, lattice export.

Exit codes: 0 success (or "equivalent"), 1 inequivalent or failed agreement
check, 2 usage error, 3 infeasible job, 4 malformed input file.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import counting, enumeration
from .cuts import classify_corpus, equivalent_direct, signature
from .enumeration import InfeasibleJobError
from .matrices import FuzzyMatrix

EXIT_OK = 0
EXIT_INEQUIVALENT = 1
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3
EXIT_MALFORMED = 4


class MalformedInputError(Exception):
    pass


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative, got {value}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8")


def _load_matrix(path: str, fmt: str) -> FuzzyMatrix:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise MalformedInputError(f"cannot read {path}: {exc}") from exc
    use_json = fmt == "json" or (fmt == "auto" and path.endswith(".json"))
    try:
        if use_json:
            return FuzzyMatrix.from_json_dict(json.loads(text))
        return FuzzyMatrix.parse_text(text)
    except (ValueError, TypeError) as exc:
        raise MalformedInputError(f"malformed matrix file {path}: {exc}") from exc


def _load_corpus(path: str, fmt: str) -> list[FuzzyMatrix]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise MalformedInputError(f"cannot read {path}: {exc}") from exc
    use_json = fmt == "json" or (fmt == "auto" and path.endswith(".json"))
    try:
        if use_json:
            data = json.loads(text)
            if not isinstance(data, list):
                raise ValueError("corpus JSON must be an array of matrix objects")
            return [FuzzyMatrix.from_json_dict(item) for item in data]
        blocks, current = [], []
        for line in text.splitlines():
            if line.strip():
                current.append(line)
            elif current:
                blocks.append("\n".join(current))
                current = []
        if current:
            blocks.append("\n".join(current))
        return [FuzzyMatrix.parse_text(block) for block in blocks]
    except (ValueError, TypeError) as exc:
        raise MalformedInputError(f"malformed corpus file {path}: {exc}") from exc


def _cmd_count(args) -> int:
    m = args.n * args.n
    if args.root is not None:
        if args.method == "ie":
            print("error: the inclusion-exclusion path has no rooted variant", file=sys.stderr)
            return EXIT_USAGE
        if args.k is None:
            value = counting.total_count_rooted(args.n, args.root)
        else:
            value = counting.chain_count_rooted(m, args.k, args.root)
    elif args.k is None:
        value = counting.total_count(args.n, method=args.method, processes=args.parallel)
    else:
        method = args.method if args.method != "auto" else ("naive" if m <= 16 else "ie")
        if method == "ie":
            value = counting.chain_count_ie(m, args.k)
        else:
            value = counting.chain_count(m, args.k, processes=args.parallel)
    print(value)
    return EXIT_OK


def _cmd_table(args) -> int:
    table = counting.count_table(args.max_n, root=args.root, method=args.method)
    if args.format == "csv":
        _emit(table.to_csv(), args.output)
    else:
        _emit(json.dumps(table.to_json_dict(), indent=2) + "\n", args.output)
    return EXIT_OK


def _cmd_sequence(args) -> int:
    pairs = counting.sequence(args.max_n, method=args.method)
    if args.b_file:
        text = "".join(f"{n} {value}\n" for n, value in pairs)
    else:
        text = "".join(f"{value}\n" for _, value in pairs)
    _emit(text, args.output)
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    if args.group_by_sizes and args.root is not None:
        print("error: --group-by-sizes has no rooted variant", file=sys.stderr)
        return EXIT_USAGE
    if args.list:
        lines = enumeration.chain_lines(
            args.m,
            args.k,
            args.root,
            labeled=args.labels,
            ceiling=args.ceiling,
            processes=args.parallel,
        )
        text = "".join(line + "\n" for line in lines)
        _emit(text, args.output)
        return EXIT_OK
    if args.group_by_sizes:
        groups = enumeration.group_by_size_vector(
            args.m, args.k, ceiling=args.ceiling, processes=args.parallel
        )
        text = "".join(
            f"{','.join(map(str, sizes))}: {count}\n" for sizes, count in groups.items()
        )
        _emit(text, args.output)
        return EXIT_OK
    count = enumeration.count_chains(
        args.m, args.k, args.root, ceiling=args.ceiling, processes=args.parallel
    )
    _emit(f"{count}\n", args.output)
    return EXIT_OK


def _cmd_classify(args) -> int:
    corpus = _load_corpus(args.input, args.input_format)
    try:
        result = classify_corpus(corpus)
    except ValueError as exc:
        raise MalformedInputError(str(exc)) from exc
    _emit(json.dumps(result.to_json_list(), indent=2) + "\n", args.output)
    return EXIT_OK


def _cmd_equivalent(args) -> int:
    a = _load_matrix(args.file_a, args.input_format)
    b = _load_matrix(args.file_b, args.input_format)
    if a.order != b.order:
        raise MalformedInputError(f"order mismatch: {a.order} vs {b.order}")
    if equivalent_direct(a, b):
        print("equivalent")
        return EXIT_OK
    print("inequivalent")
    return EXIT_INEQUIVALENT


def _cmd_signature(args) -> int:
    matrix = _load_matrix(args.input, args.input_format)
    _emit(json.dumps(signature(matrix).to_json_dict(), indent=2) + "\n", args.output)
    return EXIT_OK


def _cmd_lattice(args) -> int:
    diagram = enumeration.hasse_export(args.m)
    if args.format == "dot":
        _emit(diagram.to_dot(), args.output)
    else:
        _emit(json.dumps(diagram.to_json_dict(), indent=2) + "\n", args.output)
    return EXIT_OK


def _cmd_bench(args) -> int:
    start = time.perf_counter()
    naive = counting.total_count(args.n, method="naive")
    naive_seconds = time.perf_counter() - start
    start = time.perf_counter()
    ie = counting.total_count(args.n, method="ie")
    ie_seconds = time.perf_counter() - start
    print(f"nested summation: {naive_seconds:.6f}s", file=sys.stderr)
    print(f"inclusion-exclusion: {ie_seconds:.6f}s", file=sys.stderr)
    if naive != ie:
        print(
            f"DISAGREEMENT for n={args.n}: nested summation {naive} != inclusion-exclusion {ie}",
            file=sys.stderr,
        )
        return EXIT_INEQUIVALENT
    print(naive)
    print("paths agree")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cutchains",
        description="Count, enumerate, and classify fuzzy matrices by their cut chains.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="print an exact chain/class count")
    p.add_argument("--n", type=_nonneg, required=True, help="matrix order")
    p.add_argument("--k", type=int, default=None, help="chain length (omit for the total)")
    p.add_argument("--root", choices=["O", "J"], default=None)
    p.add_argument("--method", choices=["auto", "naive", "ie"], default="auto")
    p.add_argument("--parallel", type=_positive, default=None, metavar="D")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("table", help="per-k counts and totals for n = 0..max-n")
    p.add_argument("--max-n", type=_nonneg, required=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--root", choices=["O", "J"], default=None)
    p.add_argument("--method", choices=["auto", "naive", "ie"], default="auto")
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("sequence", help="emit the class-count sequence f_0..f_max_n")
    p.add_argument("--max-n", type=_nonneg, required=True)
    p.add_argument("--b-file", action="store_true", help='emit "n f_n" pairs')
    p.add_argument("--method", choices=["auto", "naive", "ie"], default="auto")
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_sequence)

    p = sub.add_parser("enumerate", help="brute-force chain enumeration")
    p.add_argument("--m", type=_nonneg, required=True, help="number of cells")
    p.add_argument("--k", type=int, required=True, help="chain length")
    p.add_argument("--root", choices=["O", "J"], default=None)
    p.add_argument("--list", action="store_true", help="print one chain per line")
    p.add_argument("--labels", action="store_true", help="label components A_s^{cells}")
    p.add_argument("--group-by-sizes", action="store_true")
    p.add_argument("--ceiling", type=_nonneg, default=None, help="max projected chains")
    p.add_argument("--parallel", type=_positive, default=None, metavar="D")
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("classify", help="partition a fuzzy-matrix corpus into classes")
    p.add_argument("--input", required=True)
    p.add_argument("--input-format", choices=["auto", "text", "json"], default="auto")
    p.add_argument("--format", choices=["json"], default="json")
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("equivalent", help="exit 0 if the two matrices are equivalent, 1 if not")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--input-format", choices=["auto", "text", "json"], default="auto")
    p.set_defaults(func=_cmd_equivalent)

    p = sub.add_parser("signature", help="print a matrix's canonical cut signature")
    p.add_argument("--input", required=True)
    p.add_argument("--input-format", choices=["auto", "text", "json"], default="auto")
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_signature)

    p = sub.add_parser("lattice", help="export the support lattice covering relation")
    p.add_argument("--m", type=_nonneg, required=True, help="number of cells")
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_lattice)

    p = sub.add_parser("bench", help="time both counting paths and check they agree")
    p.add_argument("--n", type=_nonneg, required=True)
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InfeasibleJobError as exc:
        print(f"infeasible job: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except MalformedInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except ValueError as exc:
        # e.g. a malformed ceiling environment variable
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
