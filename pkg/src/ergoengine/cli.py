"""Command-line front end.

    ergoengine cycle  --kind five --meas zz --c0 0.5 --B1 3.5 --B2 3 --J 1 --beta 1
    ergoengine figure fig3 --out fig3.csv
    ergoengine sweep  --config sweep.cfg --out sweep.csv
    ergoengine verify --seed 42 --n 1000

Exit codes: 0 success, 1 invalid input, 2 valid run that is not an engine
(W_T <= 0), 3 verification failure.
"""

from __future__ import annotations

import argparse
import logging
import sys

from .config import tolerances
from .cycle import run_cycle
from .errors import EngineError
from .figures import PRESETS, describe_preset, figure_table
from .measurement import PRESET_DIRECTIONS, MeasurementSpec
from .model import EngineParams
from .sweep import ConfigError, load_config, run_sweep
from .tables import format_value, to_csv, write_csv
from .verify import run_verification

EXIT_OK, EXIT_INVALID, EXIT_NOT_ENGINE, EXIT_VERIFY = 0, 1, 2, 3

MEAS_CHOICES = sorted(PRESET_DIRECTIONS) + ["custom"]


def _meas(value: str) -> tuple[str, bool]:
    name, _, suffix = value.partition("-")
    if name not in MEAS_CHOICES or suffix not in ("", "projective"):
        raise argparse.ArgumentTypeError(f"expected one of {MEAS_CHOICES}, optionally with '-projective'")
    return name, suffix == "projective"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ergoengine", description=__doc__.split("\n\n")[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    cyc = sub.add_parser("cycle", help="run one cycle and print its ledger")
    cyc.add_argument("--kind", choices=["three", "four", "five"], default="five")
    cyc.add_argument("--meas", type=_meas, default=("zz", False), help="zz|xx|xy|xz|custom[-projective]")
    cyc.add_argument("--c0", type=float)
    for name in ("thetaA", "phiA", "thetaB", "phiB"):
        cyc.add_argument(f"--{name}", type=float, default=0.0, help="radians, used with --meas custom")
    cyc.add_argument("--B1", type=float, help="measurement field (defaults to B2)")
    cyc.add_argument("--B2", type=float, required=True)
    cyc.add_argument("--J", type=float, required=True)
    cyc.add_argument("--beta", type=float, required=True)
    cyc.add_argument("--out", help="also write the ledger as a one-row CSV")

    fig = sub.add_parser("figure", help="write the data behind one figure as CSV")
    fig.add_argument("figure_id")
    fig.add_argument("--out")
    fig.add_argument("--show-preset", action="store_true", help="print the preset parameters and exit")

    sw = sub.add_parser("sweep", help="evaluate a parameter grid from a config file")
    sw.add_argument("--config", required=True)
    sw.add_argument("--out")

    ver = sub.add_parser("verify", help="randomized closed-form vs brute-force checks")
    ver.add_argument("--seed", type=int, required=True)
    ver.add_argument("--n", type=int, default=1000)
    ver.add_argument("--tol", type=float, help="override every suite threshold")
    return parser


def _fail(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_INVALID


def cmd_cycle(args) -> int:
    name, projective = args.meas
    c0 = args.c0
    if c0 is None:
        if not projective:
            return _fail("--c0 is required unless --meas ends in -projective")
        c0 = 0.5
    elif projective and c0 != 0.5:
        return _fail("a -projective measurement fixes c0 = 0.5")
    try:
        if name == "custom":
            spec = MeasurementSpec(c0, (args.thetaA, args.phiA), (args.thetaB, args.phiB))
        else:
            spec = MeasurementSpec.preset(name, c0)
        b1 = args.B2 if args.B1 is None else args.B1
        params = EngineParams(b1, args.B2, args.J, args.beta)
        ledger = run_cycle(args.kind, params, spec)
    except (EngineError, ValueError) as exc:
        return _fail(str(exc))

    d = ledger.as_dict()
    fields = [
        ("cycle_kind", d["cycle_kind"]), ("W1", d["w1"]), ("Q_M", d["q_m"]), ("W_erg", d["w_erg"]),
        ("W2", d["w2"]), ("Q_res", d["q_res"]), ("W_T", d["w_total"]), ("eta", d["eta"]),
        ("ordering", d["ordering"]), ("coherence", d["coherence"]),
    ]
    for key, value in fields:
        shown = "none" if key == "eta" and value != value else format_value(value)
        print(f"{key} = {shown}")
    if ledger.ordering.is_passive:
        print("note: post-measurement state is passive, no ergotropy available")
    if args.out:
        write_csv(args.out, [k for k, _ in fields], [[v for _, v in fields]])
    if not ledger.is_engine:
        print("note: NotAnEngine (W_T <= 0)")
        return EXIT_NOT_ENGINE
    return EXIT_OK


def cmd_figure(args) -> int:
    if args.figure_id not in PRESETS:
        return _fail(f"unknown figure {args.figure_id!r}; expected one of {sorted(PRESETS)}")
    if args.show_preset:
        print(describe_preset(args.figure_id))
        return EXIT_OK
    header, rows = figure_table(args.figure_id)
    out = args.out or f"{args.figure_id}.csv"
    write_csv(out, header, rows)
    print(f"wrote {len(rows)} rows to {out}")
    return EXIT_OK


def cmd_sweep(args) -> int:
    try:
        cfg = load_config(args.config)
        header, rows, skipped = run_sweep(cfg)
    except (OSError, ConfigError, KeyError, ValueError) as exc:
        return _fail(f"cannot run sweep config {args.config}: {exc}")
    out = args.out or cfg.out
    if out:
        write_csv(out, header, rows)
        print(f"wrote {len(rows)} rows to {out} ({len(skipped)} skipped)")
    else:
        sys.stdout.write(to_csv(header, rows))
    for point, reason in skipped:
        print(f"skipped {point}: {reason}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.n < 1:
        return _fail("--n must be at least 1")
    report = run_verification(args.seed, args.n, tol=args.tol)
    print(report.render())
    return EXIT_OK if report.ok else EXIT_VERIFY


COMMANDS = {"cycle": cmd_cycle, "figure": cmd_figure, "sweep": cmd_sweep, "verify": cmd_verify}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    with tolerances():
        return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
