"""``pants-spectrum`` command line.

Exit status: 0 on success, 2 on a usage error (bad or unknown flag, malformed
value), 1 when a computation fails. Results go to stdout, diagnostics to
stderr.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import replace

from . import __version__
from .errors import PantsSpectrumError
from .experiment import ExperimentConfig, block_sizes, run, sample_block, sweep
from .geometry import batch_lengths, geodesic_length
from .moduli import BoundaryLengths, representation
from .report import (
    emit_svg,
    fmt,
    histogram_csv,
    lengths_csv,
    read_histogram_csv,
    svg_title,
    write_text,
)
from .stats import comb_score
from .words import ENUMERATION_GUARD, count_classes, count_strings, enumerate_class_codes, format_codes, parse_word

PROG = "pants-spectrum"

SWEEP_COLUMNS = (
    "L", "N", "mean", "std", "skewness", "excess_kurtosis", "ks",
    "kappa_hat", "sigma_hat", "se_kappa", "se_sigma", "std_over_L",
)


# argument types; raising ArgumentTypeError turns into exit status 2

def _boundary(text):
    try:
        return BoundaryLengths.parse(text)
    except (ValueError, PantsSpectrumError) as exc:
        raise argparse.ArgumentTypeError(f"bad --boundary {text!r}: {exc}")


def _word(text):
    try:
        return parse_word(text)
    except (ValueError, PantsSpectrumError) as exc:
        raise argparse.ArgumentTypeError(f"bad word {text!r}: {exc}")


def _positive_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return v


def _seed(text):
    try:
        v = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer seed, got {text!r}")
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return v


def _positive_float(text):
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text!r}")
    if not v > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text!r}")
    return v


def _lengths(text):
    try:
        Ls = [int(p) for p in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad --lengths {text!r}")
    if not Ls or min(Ls) < 1 or any(b <= a for a, b in zip(Ls, Ls[1:])):
        raise argparse.ArgumentTypeError("--lengths must be strictly increasing positive integers")
    return Ls


def _add_experiment_flags(p, with_length=True):
    p.add_argument("--boundary", type=_boundary, required=True, metavar="A,B,C",
                   help="boundary geodesic lengths, comma separated")
    if with_length:
        p.add_argument("-L", type=_positive_int, required=True, help="word length")
    p.add_argument("-n", "--samples", type=_positive_int, default=100_000, metavar="N",
                   help="number of sampled words (sampled mode, default 100000)")
    p.add_argument("--mode", choices=("sampled", "enumerated"), default="sampled",
                   help="sampled: N random words (default); enumerated: every class once")
    p.add_argument("--seed", type=_seed, default=0, help="master seed (default 0)")
    p.add_argument("--chunks", type=_positive_int, default=1,
                   help="units of concurrent work; does not change results")
    p.add_argument("--bins", type=_positive_float, default=None, metavar="W",
                   help="histogram bin width (default: Freedman-Diaconis)")
    p.add_argument("--max-enum-length", type=_positive_int, default=ENUMERATION_GUARD,
                   help=f"override the enumeration guard (default {ENUMERATION_GUARD})")
    p.add_argument("--timing", action="store_true",
                   help="include wall time in the JSON (makes output non-reproducible)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Geodesic length spectra of cyclic words on the pair of pants.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    p = sub.add_parser("length", help="geodesic length of one word")
    p.add_argument("--boundary", type=_boundary, required=True, metavar="A,B,C",
                   help="boundary geodesic lengths, comma separated")
    p.add_argument("--word", type=_word, required=True, help="word over a, A, b, B (A, B are inverses)")

    p = sub.add_parser("count", help="number of words of length L")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--classes", dest="what", action="store_const", const="classes",
                   help="count free homotopy classes (default)")
    g.add_argument("--strings", dest="what", action="store_const", const="strings",
                   help="count cyclically reduced strings")
    p.add_argument("-L", type=_positive_int, required=True, help="word length")
    p.set_defaults(what="classes")

    p = sub.add_parser("enumerate", help="list every class of length L in canonical form")
    p.add_argument("-L", type=_positive_int, required=True, help="word length")
    p.add_argument("--limit", type=_positive_int, default=None, metavar="K", help="print at most K words")
    p.add_argument("--max-enum-length", type=_positive_int, default=ENUMERATION_GUARD,
                   help=f"override the enumeration guard (default {ENUMERATION_GUARD})")

    p = sub.add_parser("sample", help="sample words and print word,length rows")
    p.add_argument("--boundary", type=_boundary, required=True, metavar="A,B,C",
                   help="boundary geodesic lengths, comma separated")
    p.add_argument("-L", type=_positive_int, required=True, help="word length")
    p.add_argument("-n", "--samples", type=_positive_int, required=True, metavar="N",
                   help="number of words")
    p.add_argument("--seed", type=_seed, default=0, help="master seed (default 0)")
    p.add_argument("--dump", metavar="FILE", help="also write the lengths as a one-column CSV")

    p = sub.add_parser("run", help="full experiment for one word length")
    _add_experiment_flags(p)
    p.add_argument("--format", choices=("json", "csv"), default="json",
                   help="json: result document; csv: histogram table")
    p.add_argument("--svg", metavar="FILE", help="write the histogram as SVG")
    p.add_argument("--dump", metavar="FILE", help="write every length to a one-column CSV")

    p = sub.add_parser("sweep", help="one experiment per word length")
    _add_experiment_flags(p, with_length=False)
    p.add_argument("--lengths", type=_lengths, required=True, metavar="L1,L2,...",
                   help="strictly increasing word lengths")
    p.add_argument("--format", choices=("json", "csv"), default="json",
                   help="json: list of result documents; csv: one summary row per L")
    p.add_argument("--svg-dir", metavar="DIR", help="write sweep_L<L>.svg files here")

    p = sub.add_parser("comb", help="comb score of a histogram CSV")
    p.add_argument("--spacing", type=_positive_float, required=True, help="comb spacing, e.g. C/2")
    p.add_argument("--input", required=True, metavar="FILE", help="histogram CSV (bin_lo,bin_hi,count)")

    return parser


def _config(args, L) -> ExperimentConfig:
    return ExperimentConfig(
        metric=args.boundary,
        L=L,
        N=args.samples,
        mode=args.mode,
        master_seed=args.seed,
        chunks=args.chunks,
        bin_width=args.bins,
        enumeration_guard=args.max_enum_length,
    )


def _cmd_length(args, out):
    rep = representation(args.boundary)
    out.write(fmt(geodesic_length(args.word, rep).value) + "\n")


def _cmd_count(args, out):
    n = count_classes(args.L) if args.what == "classes" else count_strings(args.L)
    out.write(f"{n}\n")


def _cmd_enumerate(args, out):
    codes = enumerate_class_codes(args.L, args.max_enum_length)
    if args.limit is not None:
        codes = codes[: args.limit]
    for row in codes:
        out.write(format_codes(row) + "\n")


def _cmd_sample(args, out):
    rep = representation(args.boundary)
    dumped = []
    out.write("word,length\n")
    for j in range(len(block_sizes(args.samples))):
        codes = sample_block(args.L, args.samples, args.seed, j)
        lengths = batch_lengths(codes, rep)
        for row, v in zip(codes, lengths):
            out.write(f"{format_codes(row)},{fmt(v)}\n")
        dumped.append(lengths)
    if args.dump:
        write_text(args.dump, lengths_csv(v for part in dumped for v in part))


def _cmd_run(args, out):
    config = _config(args, args.L)
    result = run(config, keep_lengths=bool(args.dump))
    if args.svg:
        emit_svg(result.histogram, args.svg, svg_title(config.metric, config.L, config.mode))
    if args.dump:
        write_text(args.dump, lengths_csv(result.lengths))
    if args.format == "csv":
        out.write(histogram_csv(result.histogram))
    else:
        out.write(result.to_json(timing=args.timing))


def _cmd_sweep(args, out):
    config = _config(args, args.lengths[0])
    results = sweep(config, args.lengths)
    if args.svg_dir:
        os.makedirs(args.svg_dir, exist_ok=True)
        for r in results:
            path = os.path.join(args.svg_dir, f"sweep_L{r.config.L}.svg")
            emit_svg(r.histogram, path, svg_title(r.config.metric, r.config.L, r.config.mode))
    if args.format == "csv":
        out.write(",".join(SWEEP_COLUMNS) + "\n")
        for r in results:
            d = r.to_dict()
            row = [d["config"]["L"], d["config"]["N"]]
            row += [d["stats"][k] for k in ("mean", "std", "skewness", "excess_kurtosis", "ks")]
            row += [d["scaling"][k] for k in SWEEP_COLUMNS[7:]]
            out.write(",".join("" if v is None else str(v) for v in row) + "\n")
    else:
        docs = [r.to_dict(timing=args.timing) for r in results]
        out.write(json.dumps(docs, indent=2, allow_nan=False) + "\n")


def _cmd_comb(args, out):
    h = read_histogram_csv(args.input)
    out.write(fmt(comb_score(h, args.spacing)) + "\n")


COMMANDS = {
    "length": _cmd_length,
    "count": _cmd_count,
    "enumerate": _cmd_enumerate,
    "sample": _cmd_sample,
    "run": _cmd_run,
    "sweep": _cmd_sweep,
    "comb": _cmd_comb,
}


def _error(msg: str) -> None:
    prefix = "error:"
    if sys.stderr.isatty() and not os.environ.get("NO_COLOR"):
        prefix = "\033[31merror:\033[0m"
    print(f"{PROG}: {prefix} {msg}", file=sys.stderr)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        COMMANDS[args.command](args, sys.stdout)
    except (PantsSpectrumError, ValueError) as exc:
        _error(str(exc))
        return 1
    except BrokenPipeError:  # pragma: no cover - e.g. piping into head
        sys.stderr.close()
        return 0
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
