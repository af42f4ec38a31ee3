"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 budget exceeded, 3 bad input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .constructions import (
    d16_plus,
    e8,
    extended_doubling,
    generalized_doubling,
    padded_triangular_code,
    reed_muller_1,
    triangular_code,
)
from .data import load_desd24
from .divisible import (
    PreconditionError,
    c_meet_Rad,
    c_meet_rad,
    is_doubly_even,
    is_maximal,
    is_triply_even,
)
from .gf2 import (
    EnumerationCapError,
    LinearCode,
    code_from_record,
    code_record,
    format_hex_rows,
    read_hex_text,
    weight_enumerator,
)
from .pipeline import (
    BudgetExceeded,
    CheckpointError,
    CheckpointStore,
    IdentificationError,
    Runner,
    classify48,
    doubly_even_halves,
    format_table2,
    representatives48,
    shorten_chain,
)
from .symmetry import SearchBudgetError, automorphism_group
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_BUDGET = 2
EXIT_INPUT = 3

#: Largest code dimension for which ``invariants`` reports |Aut|.
AUT_DIM_LIMIT = 16


class InputError(ValueError):
    pass


def construct(name: str) -> LinearCode:
    """Build a named code; names nest, as in ``tildeD:desd24:1``."""
    head, _, rest = name.partition(":")
    if head == "e8" and not rest:
        return e8()
    if head == "d16plus" and not rest:
        return d16_plus()
    if head == "rm14" and not rest:
        return reed_muller_1(4)
    if head == "desd24":
        idx = _int_param(rest, name)
        if not 1 <= idx <= 9:
            raise InputError(f"desd24 index must be 1..9, got {idx}")
        return load_desd24()[idx - 1]
    if head == "tildeD" and rest:
        return generalized_doubling(construct(rest))
    if head == "extD" and rest:
        return extended_doubling(construct(rest))
    if head == "T":
        n = _int_param(rest, name)
        if n < 4:
            raise InputError("T:<n> needs n >= 4")
        return triangular_code(n)
    if head == "ttgc":
        n = _int_param(rest, name)
        if n < 4:
            raise InputError("ttgc:<n> needs n >= 4")
        return padded_triangular_code(n)
    raise InputError(f"unknown code name {name!r}")


def _int_param(text: str, name: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise InputError(f"bad parameter in {name!r}") from None


def read_code(path: str) -> LinearCode:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    stripped = text.lstrip()
    try:
        if stripped.startswith("{"):
            return code_from_record(json.loads(stripped))
        return read_hex_text(text)
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"cannot parse code: {exc}") from exc


def render(c: LinearCode, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(code_record(c), sort_keys=True)
    return f"# length {c.length}\n" + format_hex_rows(c)


def invariants(c: LinearCode) -> dict:
    we = weight_enumerator(c)
    out = {
        "length": c.length,
        "dim": c.dim,
        "weight_enumerator": {str(w): a for w, a in we.nonzero().items()},
        "doubly_even": is_doubly_even(c),
        "triply_even": is_triply_even(c),
    }
    if out["doubly_even"]:
        out["dim_C_meet_rad"] = c_meet_rad(c).dim
        out["dim_C_meet_Rad"] = c_meet_Rad(c).dim
    if out["triply_even"]:
        out["maximal"] = is_maximal(c)
    if c.dim <= AUT_DIM_LIMIT:
        out["aut_order"] = automorphism_group(c).order()
    return out


def _emit(text: str, out_dir: str | None, filename: str) -> None:
    if out_dir:
        path = Path(out_dir)
        path.mkdir(parents=True, exist_ok=True)
        (path / filename).write_text(text + "\n")
    print(text)


def _runner(args, checkpoint: CheckpointStore | None = None) -> Runner:
    return Runner(args.jobs, args.budget_seconds, checkpoint)


def cmd_construct(args) -> int:
    c = construct(args.name)
    ext = "json" if args.format == "json" else "hex"
    _emit(render(c, args.format), args.out, f"{args.name.replace(':', '_')}.{ext}")
    return EXIT_OK


def cmd_invariants(args) -> int:
    rep = invariants(read_code(args.input))
    _emit(json.dumps(rep, indent=2), args.out, "invariants.json")
    return EXIT_OK


def cmd_parse(args) -> int:
    c = read_code(args.input)
    _emit(json.dumps(code_record(c), sort_keys=True), args.out, "code.json")
    return EXIT_OK


def cmd_emit(args) -> int:
    c = read_code(args.input)
    _emit(render(c, args.format), args.out, "code." + ("json" if args.format == "json" else "hex"))
    return EXIT_OK


def cmd_verify(args) -> int:
    with _runner(args) as runner:
        res = run_suite(args.suite, runner, _progress(args))
    text = res.summary()
    if res.report:
        text = res.report + "\n" + text
    _emit(text, args.out, f"verify-{args.suite}.txt")
    return EXIT_OK if res.ok else EXIT_FAIL


def cmd_classify(args) -> int:
    ck = None
    if args.out:
        Path(args.out).mkdir(parents=True, exist_ok=True)
        ck = CheckpointStore(Path(args.out) / "checkpoint.ndjson")
    with _runner(args, ck) as runner:
        report = classify48(runner, _progress(args))
    if args.out:
        with open(Path(args.out) / "classes.ndjson", "w") as fh:
            fh.writelines(json.dumps(cls, sort_keys=True) + "\n" for cls in report.classes)
    _emit(report.to_json(), args.out, "report.json")
    fails = report.failures()
    for f in fails:
        print(f"mismatch: {f}", file=sys.stderr)
    return EXIT_FAIL if fails else EXIT_OK


def cmd_shorten(args) -> int:
    reps = representatives48()
    with _runner(args) as runner:
        chain = shorten_chain(reps, stop=args.stop, runner=runner, progress=_progress(args))
        halves = doubly_even_halves(stop=max(1, args.stop // 2), runner=runner, progress=_progress(args))
    chain[48] = reps
    lengths = sorted(n for n in chain if n % 8 == 0)
    _emit(format_table2(chain, halves, lengths), args.out, "table2.txt")
    return EXIT_OK


def _progress(args):
    if args.quiet:
        return lambda msg: None
    return lambda msg: print(msg, file=sys.stderr, flush=True)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="directory for output files")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for pipeline stages")
    common.add_argument("--budget-seconds", type=float, default=None, help="wall-clock budget")
    common.add_argument("--format", choices=("hex", "json"), default="hex")
    common.add_argument("-q", "--quiet", action="store_true")

    p = argparse.ArgumentParser(prog="triplyeven", description="Triply even binary codes of length 48 and below.")
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("construct", parents=[common], help="build a named code")
    s.add_argument("name", help="e8, d16plus, rm14, desd24:<1..9>, tildeD:<name>, extD:<name>, T:<n>, ttgc:<n>")
    s.set_defaults(fn=cmd_construct)

    s = sub.add_parser("invariants", parents=[common], help="report invariants of a code")
    s.add_argument("input", help="hex or JSON file, '-' for stdin")
    s.set_defaults(fn=cmd_invariants)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("suite", choices=list(SUITES))
    s.set_defaults(fn=cmd_verify)

    s = sub.add_parser("classify", parents=[common], help="classify maximal triply even codes of length 48")
    s.set_defaults(fn=cmd_classify)

    s = sub.add_parser("shorten", parents=[common], help="derive the shorter-length classes")
    s.add_argument("--stop", type=int, default=8)
    s.set_defaults(fn=cmd_shorten)

    s = sub.add_parser("parse", parents=[common], help="hex rows to a JSON record")
    s.add_argument("input")
    s.set_defaults(fn=cmd_parse)

    s = sub.add_parser("emit", parents=[common], help="a code in the chosen format")
    s.add_argument("input")
    s.set_defaults(fn=cmd_emit)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.WARNING)
    try:
        return args.fn(args)
    except (BudgetExceeded, SearchBudgetError, EnumerationCapError) as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InputError, PreconditionError, CheckpointError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except IdentificationError as exc:
        print(f"identification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
