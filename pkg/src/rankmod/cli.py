"""``rankmod`` command line: encode, decode, simulate, verify, table.

Exit codes: 0 ok, 1 usage, 2 config, 3 data, 4 guarantee violated.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator, Optional, Sequence, TextIO

from . import __version__
from .analysis import parameter_table, table_to_csv, table_to_json
from .config import CONSTRUCTIONS, ConfigError, build_codec, load_config, message_from_json, message_to_json
from .perm import Permutation
from .simulate import merge_reports, run_simulation, verify_distance, verify_oracle

EXIT_USAGE, EXIT_CONFIG, EXIT_DATA, EXIT_VIOLATION = 1, 2, 3, 4


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _codec_args(p: argparse.ArgumentParser, t_type=int) -> None:
    p.add_argument("--config", metavar="PATH", help="JSON codec config; flags override its keys")
    p.add_argument("--construction", choices=CONSTRUCTIONS)
    p.add_argument("--n", type=int, help="permutation length (II, IIIA)")
    p.add_argument("--q", type=int, help="field size (I) or seed alphabet (IIIB)")
    p.add_argument("--t", type=t_type, help="seed error-correction capability")
    p.add_argument("--l", type=int, help="number of bands (IIIB)")
    p.add_argument("--out", metavar="PATH", help="write here instead of stdout")


def _t_list(text: str) -> list[int]:
    out: list[int] = []
    for part in text.split(","):
        lo, _, hi = part.partition("-")
        try:
            out.extend(range(int(lo), int(hi or lo) + 1))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad range {part!r}") from None
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rankmod", description="Rank-modulation codes under the Kendall tau metric.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    enc = sub.add_parser("encode", help="messages (JSON lines) -> permutations (JSON lines)")
    _codec_args(enc)
    enc.add_argument("--input", metavar="PATH", help="message file, default stdin")

    dec = sub.add_parser("decode", help="permutations (JSON lines) -> messages (JSON lines)")
    _codec_args(dec)
    dec.add_argument("--input", metavar="PATH", help="permutation file, default stdin")

    sim = sub.add_parser("simulate", help="seeded Monte-Carlo run over the Kendall channel")
    _codec_args(sim)
    sim.add_argument("--trials", type=int, default=1000)
    sim.add_argument("--errors", type=int, help="adjacent transpositions per trial (default: the radius)")
    sim.add_argument("--seed", type=int, default=0)
    sim.add_argument("--over-radius", action="store_true", help="allow --errors beyond the guaranteed radius")
    sim.add_argument("--jobs", type=int, default=1, help="worker processes; the report does not depend on it")
    sim.add_argument("--timing", action="store_true", help="include wall_time (makes output nondeterministic)")
    sim.add_argument("--format", choices=("json", "csv"), default="json")

    ver = sub.add_parser("verify", help="brute-force checks on a small codebook")
    _codec_args(ver)
    ver.add_argument("--mode", choices=("exhaustive-distance", "oracle-distance"), default="exhaustive-distance")
    ver.add_argument("--format", choices=("json", "csv"), default="json")

    tab = sub.add_parser("table", help="(n, log2 M, d) parameter table")
    _codec_args(tab, t_type=_t_list)
    tab.add_argument("--dims", type=_t_list, default=[], help="IIIB column-code dimensions, e.g. 3-8")
    tab.add_argument("--row-dim", type=int, default=9, help="IIIB row-code dimension")
    tab.add_argument("--dimension", choices=("actual", "design"), default="actual",
                     help="BCH seed dimension reported for II")
    tab.add_argument("--format", choices=("json", "csv"), default="csv")
    return parser


def _load(args) -> dict:
    overrides = {"construction": args.construction, "n": args.n, "q": args.q, "t": args.t, "l": args.l}
    cfg = load_config(args.config, overrides)
    # a flag that re-derives a field must beat the file's more specific keys
    if args.q is not None and cfg.get("construction") == "I":
        cfg.pop("p", None)
        cfg.pop("m", None)
    if args.t is not None and cfg.get("construction") in ("II", "IIIA"):
        cfg.pop("seed", None)
    return cfg


def _read_json_lines(path: Optional[str]) -> Iterator[tuple[int, object]]:
    try:
        stream = open(path) if path else sys.stdin
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc}") from exc
    with stream:
        for lineno, line in enumerate(stream, start=1):
            if not line.strip():
                continue
            try:
                yield lineno, json.loads(line)
            except json.JSONDecodeError as exc:
                raise DataError(f"line {lineno}: {exc}") from exc


def _flat_csv(record: dict) -> str:
    buf = io.StringIO()
    row = {k: json.dumps(v, sort_keys=True) if isinstance(v, (dict, list)) else v for k, v in record.items()}
    w = csv.DictWriter(buf, fieldnames=list(row), lineterminator="\n")
    w.writeheader()
    w.writerow(row)
    return buf.getvalue()


def _dump(record: dict, fmt: str) -> str:
    return _flat_csv(record) if fmt == "csv" else json.dumps(record, sort_keys=True, indent=1) + "\n"


def cmd_encode(args, out: TextIO) -> int:
    codec = build_codec(_load(args))
    for lineno, obj in _read_json_lines(args.input):
        try:
            sigma = codec.encode(message_from_json(codec, obj))
        except (ValueError, IndexError) as exc:
            raise DataError(f"line {lineno}: {exc}") from exc
        out.write(json.dumps(sigma.to_json()) + "\n")
    return 0


def cmd_decode(args, out: TextIO) -> int:
    codec = build_codec(_load(args))
    for lineno, obj in _read_json_lines(args.input):
        try:
            received = Permutation.from_json(obj)
            message = codec.decode(received)
        except (ValueError, KeyError, TypeError) as exc:
            raise DataError(f"line {lineno}: {exc}") from exc
        if message is None:
            out.write(json.dumps({"status": "failure", "message": None}) + "\n")
        else:
            out.write(json.dumps({"status": "ok", "message": message_to_json(message)}) + "\n")
    return 0


def _simulate_slice(cfg: dict, errors: int, seed: int, ids: range):
    return run_simulation(build_codec(cfg), len(ids), errors, seed, trial_ids=ids)


def cmd_simulate(args, out: TextIO) -> int:
    cfg = _load(args)
    codec = build_codec(cfg)
    errors = codec.radius if args.errors is None else args.errors
    if args.trials < 0 or errors < 0:
        raise UsageError("--trials and --errors must be nonnegative")
    if errors > codec.radius and not args.over_radius:
        raise UsageError(f"--errors {errors} exceeds the guaranteed radius {codec.radius}; pass --over-radius")
    if errors > codec.n * (codec.n - 1) // 2:
        raise UsageError(f"--errors {errors} exceeds the Kendall diameter of S_{codec.n}")
    if args.jobs > 1 and args.trials > 1:
        step = -(-args.trials // args.jobs)
        slices = [range(lo, min(lo + step, args.trials)) for lo in range(0, args.trials, step)]
        with ProcessPoolExecutor(args.jobs) as pool:
            parts = list(pool.map(_simulate_slice, [cfg] * len(slices), [errors] * len(slices),
                                  [args.seed] * len(slices), slices))
        report = merge_reports(parts)
    else:
        report = run_simulation(codec, args.trials, errors, args.seed)
    out.write(_dump(report.to_json(timing=args.timing), args.format))
    return EXIT_VIOLATION if report.violation else 0


def cmd_verify(args, out: TextIO) -> int:
    codec = build_codec(_load(args))
    try:
        report = verify_distance(codec) if args.mode == "exhaustive-distance" else verify_oracle(codec)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out.write(_dump(report.to_json(), args.format))
    return EXIT_VIOLATION if report.violation else 0


def cmd_table(args, out: TextIO) -> int:
    cfg = load_config(args.config, {"construction": args.construction, "n": args.n, "q": args.q, "l": args.l})
    t_values = args.t if args.t is not None else cfg.get("t_values", [])
    try:
        rows = parameter_table(
            cfg.get("construction"), n=cfg.get("n"), q=cfg.get("q"), l=cfg.get("l"),
            t_values=t_values, dims=args.dims or cfg.get("dims", []),
            row_dim=args.row_dim, dimension=args.dimension,
        )
    except (ValueError, TypeError) as exc:
        raise ConfigError(str(exc)) from exc
    out.write(table_to_csv(rows) if args.format == "csv" else table_to_json(rows) + "\n")
    return 0


COMMANDS = {"encode": cmd_encode, "decode": cmd_decode, "simulate": cmd_simulate,
            "verify": cmd_verify, "table": cmd_table}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    buf = io.StringIO()
    try:
        code = COMMANDS[args.command](args, buf)
    except UsageError as exc:
        print(f"rankmod: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConfigError as exc:
        print(f"rankmod: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except DataError as exc:
        print(f"rankmod: data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
