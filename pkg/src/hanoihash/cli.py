"""Command-line front end.

Three subcommands: ``hash`` digests a message, ``walk`` dumps the per-vertex
probability table behind a digest, ``test`` runs the statistical campaigns
and writes JSON + CSV reports.

Exit codes: 0 success, 2 usage error, 3 invalid parameters or domain error,
4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import secrets
import sys
from dataclasses import replace
from pathlib import Path

from .bits import bits_from_text, message_to_bits
from .hashing import digest
from .params import HashParams
from .statlab import (
    CampaignConfig,
    CollisionReport,
    DiffusionReport,
    ScalingReport,
    SensitivityReport,
    UniformityReport,
    collision_test,
    diffusion_test,
    scaling_experiment,
    sensitivity_suite,
    uniform_distribution_test,
)
from .walk import cycle_walk_baseline, get_engine

_VERSION = "0.1.0"

# flat-parameter key -> argparse attribute carrying its override
_PARAM_FLAGS = (
    ("n", "levels"),
    ("l00", "l00"),
    ("lt00", "lt00"),
    ("l11", "l11"),
    ("lt11", "lt11"),
    ("l01", "l01"),
    ("lt01", "lt01"),
    ("l10", "l10"),
    ("lt10", "lt10"),
    ("precision", "precision"),
    ("word_bits", "word_bits"),
    ("mode", "mode"),
    ("rounding", "rounding"),
    ("coin_norm", "coin_norm"),
)

_DEFAULT_SENSITIVITY_MESSAGE = "111110010011000"


def _load_config_file(path: Path) -> dict[str, str]:
    values: dict[str, str] = {}
    for raw in path.read_text().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ValueError(f"config line {raw!r} is not key=value")
        values[key.strip()] = value.strip()
    return values


def resolve_params(args: argparse.Namespace) -> HashParams:
    """Defaults <- config file (--config or HANOIHASH_CONFIG) <- explicit flags."""
    flat: dict[str, object] = {}
    config_path = args.config or os.environ.get("HANOIHASH_CONFIG")
    if config_path:
        flat.update(_load_config_file(Path(config_path)))
    for key, attr in _PARAM_FLAGS:
        value = getattr(args, attr, None)
        if value is not None:
            flat[key] = value
    return HashParams.from_flat(flat)


def read_message(args: argparse.Namespace):
    if getattr(args, "bits", None) is not None:
        return bits_from_text(args.bits)
    if getattr(args, "file", None) is not None:
        return message_to_bits(Path(args.file).read_bytes())
    return message_to_bits(sys.stdin.buffer.read())


def _write_text(out: str | None, text: str) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_hash(args: argparse.Namespace) -> int:
    params = resolve_params(args)
    message = read_message(args)
    if args.compat_matrix:
        # One digest per (normalization, rounding) convention, for chasing
        # outputs produced under unknown conventions.
        lines = ["coin_norm  rounding   digest"]
        for norm in ("unit", "literal"):
            for rounding in ("floor", "half-even"):
                d = digest(message, replace(params, coin_norm=norm, rounding=rounding))
                lines.append(f"{norm:<10s} {rounding:<10s} {d.to_hex()}")
        _write_text(args.out, "\n".join(lines) + "\n")
        return 0
    d = digest(message, params)
    rendered = {
        "hex": d.to_hex,
        "bin": d.to_bit_string,
        "dec": d.to_decimal,
    }[args.format]()
    _write_text(args.out, rendered + "\n")
    return 0


def cmd_walk(args: argparse.Namespace) -> int:
    params = resolve_params(args)
    message = read_message(args)
    engine = get_engine(params)
    probs = engine.probabilities(message)
    steps = len(engine.schedule(message)[0])
    lines = []
    if args.baseline:
        baseline = cycle_walk_baseline(params.n, steps)
        lines.append("vertex,probability,baseline")
        for v in range(params.n_vertices):
            lines.append(f"{v},{float(probs[v])!r},{float(baseline[v])!r}")
    else:
        lines.append("vertex,probability")
        for v in range(params.n_vertices):
            lines.append(f"{v},{float(probs[v])!r}")
    _write_text(args.out, "\n".join(lines) + "\n")
    return 0


def _fmt(value: float, digits: int = 4) -> str:
    return f"{value:.{digits}f}"


def _summarize(report) -> list[str]:
    if isinstance(report, DiffusionReport):
        header = f"{'N':>6} {'B_min':>6} {'B_max':>6} {'B_mean':>9} {'P(%)':>8} {'Delta_B':>8} {'Delta_P(%)':>10}"
        row = (
            f"{report.config.trials:>6} {report.b_min:>6} {report.b_max:>6} "
            f"{_fmt(report.b_mean):>9} {_fmt(100 * report.p):>8} "
            f"{_fmt(report.delta_b):>8} {_fmt(100 * report.delta_p):>10}"
        )
        return [header, row]
    if isinstance(report, UniformityReport):
        header = f"{'N':>6} {'T_mean':>10} {'|T_mean-N/2|':>13} {'Delta_T':>8}"
        row = (
            f"{report.config.trials:>6} {_fmt(report.t_mean):>10} "
            f"{_fmt(report.dev):>13} {_fmt(report.delta_t):>8}"
        )
        return [header, row]
    if isinstance(report, CollisionReport):
        lines = [f"{'omega':>6} {'W_E':>8} {'W_T':>12} {'W_T_int':>8}"]
        w_e2 = sum(report.w_e[2:])
        w_t2 = sum(report.w_t_real[2:])
        w_t2_int = sum(report.w_t_int[2:])
        lines.append(
            f"{'0':>6} {report.w_e[0]:>8} {_fmt(report.w_t_real[0]):>12} {report.w_t_int[0]:>8}"
        )
        lines.append(
            f"{'1':>6} {report.w_e[1]:>8} {_fmt(report.w_t_real[1]):>12} {report.w_t_int[1]:>8}"
        )
        lines.append(f"{'>=2':>6} {w_e2:>8} {_fmt(w_t2):>12} {w_t2_int:>8}")
        lines.append(f"collision rate: {_fmt(100 * report.collision_rate)}%")
        return lines
    if isinstance(report, ScalingReport):
        lines = [f"{'N_v':>6} {'msg_bits':>9} {'experimental(%)':>16} {'theoretical(%)':>15}"]
        for r in report.rows:
            lines.append(
                f"{r.n_vertices:>6} {r.message_bits:>9} "
                f"{_fmt(100 * r.experimental_rate):>16} {_fmt(100 * r.theoretical_rate):>15}"
            )
        return lines
    if isinstance(report, SensitivityReport):
        lines = [f"{r.label}: {r.message}  ->  {r.digest.to_hex()}" for r in report.rows]
        bits = report.rows[0].digest.bit_length
        lines.append(
            f"pairwise Hamming distance: min {report.min_distance}/{bits}, "
            f"max {report.max_distance}/{bits}"
        )
        return lines
    raise TypeError(f"no summary for {type(report).__name__}")


def _parse_sizes(text: str) -> list[int]:
    sizes = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        size = int(chunk)
        n = size.bit_length() - 1
        if size < 4 or (1 << n) != size:
            raise ValueError(f"vertex counts must be powers of two >= 4, got {size}")
        sizes.append(n)
    if not sizes:
        raise ValueError("no vertex counts given")
    return sizes


def cmd_test(args: argparse.Namespace) -> int:
    params = resolve_params(args)
    if args.threads < 1:
        raise ValueError(f"--threads must be >= 1, got {args.threads}")
    seed = args.seed
    if seed is None:
        seed = secrets.randbits(64)
    print(f"seed: {seed}")
    if args.suite == "sensitivity":
        bits = args.bits if args.bits is not None else _DEFAULT_SENSITIVITY_MESSAGE
        report = sensitivity_suite(bits_from_text(bits), params, seed)
    else:
        config = CampaignConfig(
            trials=args.trials, message_bits=args.msg_bits, seed=seed, params=params
        )
        if args.suite == "diffusion":
            report = diffusion_test(config, workers=args.threads)
        elif args.suite == "uniform":
            report = uniform_distribution_test(config, workers=args.threads)
        elif args.suite == "collision":
            report = collision_test(config, workers=args.threads)
        else:
            report = scaling_experiment(_parse_sizes(args.sizes), config, workers=args.threads)
    base = Path(args.out) if args.out else Path(f"hanoihash-{args.suite}")
    json_path = base.with_suffix(".json")
    csv_path = base.with_suffix(".csv")
    json_path.write_text(json.dumps(report.to_json_dict(), indent=2) + "\n")
    csv_path.write_text(report.to_csv_text())
    for line in _summarize(report):
        print(line)
    print(f"wrote {json_path} and {csv_path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hanoihash",
        description="Quantum-walk hash over the degree-4 Hanoi network: "
        "digest messages, inspect walk distributions, run statistical campaigns.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {_VERSION}")

    params_parent = argparse.ArgumentParser(add_help=False)
    group = params_parent.add_argument_group("walk parameters")
    group.add_argument("--config", help="key=value parameter file (or set HANOIHASH_CONFIG)")
    group.add_argument("-n", "--levels", type=int, dest="levels", help="levels; 2**n vertices")
    for name, text in (
        ("l00", "chord weight l of the bit-0 coin"),
        ("lt00", "chord weight l-tilde of the bit-0 coin"),
        ("l11", "chord weight l of the bit-1 coin"),
        ("lt11", "chord weight l-tilde of the bit-1 coin"),
        ("l01", "chord weight l of the 01-pair coin (twobit mode)"),
        ("lt01", "chord weight l-tilde of the 01-pair coin (twobit mode)"),
        ("l10", "chord weight l of the 10-pair coin (twobit mode)"),
        ("lt10", "chord weight l-tilde of the 10-pair coin (twobit mode)"),
    ):
        group.add_argument(f"--{name}", type=float, help=text)
    group.add_argument("--precision", type=int, help="decimal digits kept before the word mod")
    group.add_argument("--word-bits", type=int, dest="word_bits", help="bits per digest word")
    group.add_argument("--mode", choices=["single", "twobit"], help="bits consumed per step")
    group.add_argument(
        "--rounding", choices=["floor", "half-even"], help="quantization rounding"
    )
    group.add_argument(
        "--coin-norm",
        choices=["unit", "literal"],
        dest="coin_norm",
        help="coin axis normalization ('literal' is a non-unitary diagnostic)",
    )

    message_parent = argparse.ArgumentParser(add_help=False)
    mgroup = message_parent.add_mutually_exclusive_group()
    mgroup.add_argument("--bits", help="message as 0/1 text")
    mgroup.add_argument("--file", help="file whose raw bytes are the message")
    mgroup.add_argument(
        "--stdin", action="store_true", help="read raw bytes from stdin (the default)"
    )

    sub = parser.add_subparsers(dest="command", required=True, metavar="{hash,walk,test}")

    p_hash = sub.add_parser(
        "hash", parents=[params_parent, message_parent], help="digest a message"
    )
    p_hash.add_argument("--format", choices=["hex", "bin", "dec"], default="hex")
    p_hash.add_argument("--out", help="write to this file instead of stdout")
    p_hash.add_argument(
        "--compat-matrix",
        action="store_true",
        dest="compat_matrix",
        help="print the digest under every (coin-norm x rounding) convention",
    )
    p_hash.set_defaults(func=cmd_hash)

    p_walk = sub.add_parser(
        "walk",
        parents=[params_parent, message_parent],
        help="dump the per-vertex probability distribution as CSV",
    )
    p_walk.add_argument(
        "--baseline",
        action="store_true",
        help="add a plain cycle-walk column at the same step count",
    )
    p_walk.add_argument("--out", help="write to this file instead of stdout")
    p_walk.set_defaults(func=cmd_walk)

    p_test = sub.add_parser(
        "test", parents=[params_parent], help="run a statistical campaign"
    )
    p_test.add_argument(
        "suite", choices=["sensitivity", "diffusion", "uniform", "collision", "scaling"]
    )
    p_test.add_argument("-N", "--trials", type=int, default=1000)
    p_test.add_argument("--msg-bits", type=int, default=24, dest="msg_bits")
    p_test.add_argument("--seed", type=int, help="campaign seed (synthesized and printed if absent)")
    p_test.add_argument("--threads", type=int, default=1, help="worker threads for trials")
    p_test.add_argument("--sizes", default="16,32", help="scaling: comma-separated vertex counts")
    p_test.add_argument("--bits", help="sensitivity: base message as 0/1 text")
    p_test.add_argument("--out", help="report base path (writes <base>.json and <base>.csv)")
    p_test.set_defaults(func=cmd_test)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
