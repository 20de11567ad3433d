"""Command-line driver for ranking experiments.

Exit codes: 0 success, 2 I/O errors, 3 parse/validation errors,
1 anything else.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .aggregate import DEFAULT_MAX_ITER, DEFAULT_SMOOTHING, DEFAULT_TOL
from .analogy import parse_measures
from .dataset import DatasetError, load_dataset, pool_pairs
from .evaluation import run_experiment
from .pairwise import app, dump_support_lists
from .preprocess import preprocess_many
from .selftest import run_selftest

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_IO = 2
EXIT_INVALID = 3

DEFAULT_MEASURES = "A,A-strict,G,MM,AE,AE-graded"
DEFAULT_KS = "10,15,20"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="able2rank",
        description="Analogy-based object ranking experiments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    rank = sub.add_parser("rank", help="run a train -> test ranking experiment")
    rank.add_argument("--train", action="append", required=True, metavar="CSV",
                      help="training dataset (repeatable)")
    rank.add_argument("--schema", action="append", required=True, metavar="FILE",
                      help="schema for the matching --train (repeatable; a "
                           "single schema is reused for all training files)")
    rank.add_argument("--test", required=True, metavar="CSV", help="test dataset")
    rank.add_argument("--test-schema", metavar="FILE",
                      help="schema for the test dataset (default: first --schema)")
    rank.add_argument("--measures", default=DEFAULT_MEASURES,
                      help=f"comma-separated measure list (default {DEFAULT_MEASURES})")
    rank.add_argument("--ks", default=DEFAULT_KS,
                      help=f"comma-separated k grid (default {DEFAULT_KS})")
    rank.add_argument("--seed", type=int, default=42)
    rank.add_argument("--repeats", type=int, default=5,
                      help="internal CV repetitions (default 5)")
    rank.add_argument("--smoothing", type=float, default=DEFAULT_SMOOTHING)
    rank.add_argument("--tol", type=float, default=DEFAULT_TOL)
    rank.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)
    rank.add_argument("--threads", type=int, default=None,
                      help="worker threads (default: $ABLE2RANK_THREADS or 1)")
    rank.add_argument("--out", metavar="PATH", help="write the report CSV here")
    rank.add_argument("--plot-dir", metavar="DIR",
                      help="render report figures into this directory")
    rank.add_argument("--dump-preprocess", metavar="PATH",
                      help="write the per-column preprocessing report here")
    rank.add_argument("--dump-support", metavar="PATH",
                      help="write the support-score lists for the selected "
                           "measure as CSV")

    sub.add_parser("selftest", help="run the embedded property suite")
    return parser


def _load_instances(args):
    schemas = list(args.schema)
    trains = list(args.train)
    if len(schemas) == 1:
        schemas *= len(trains)
    if len(schemas) != len(trains):
        raise DatasetError("--schema must be given once or once per --train")
    train_instances = [load_dataset(t, s) for t, s in zip(trains, schemas)]
    test_schema = args.test_schema or args.schema[0]
    test_instance = load_dataset(args.test, test_schema)
    return train_instances, test_instance


def cmd_rank(args) -> int:
    train_instances, test_instance = _load_instances(args)
    measures = parse_measures(args.measures)
    ks = [int(tok) for tok in args.ks.split(",") if tok.strip()]
    if not measures or not ks:
        raise DatasetError("need at least one measure and one k")
    if any(k <= 0 for k in ks):
        raise DatasetError("every k must be positive")
    threads = args.threads
    if threads is None:
        threads = int(os.environ.get("ABLE2RANK_THREADS", "1"))

    report = run_experiment(train_instances, test_instance, measures, ks,
                            seed=args.seed, tol=args.tol,
                            max_iter=args.max_iter, smoothing=args.smoothing,
                            repeats=args.repeats, threads=threads)
    sys.stdout.write(report.to_text())

    if args.out:
        Path(args.out).write_text(report.to_csv(), encoding="utf-8")
    if args.plot_dir:
        from .plotting import render_report_figures

        for path in render_report_figures(report, args.plot_dir):
            print(f"figure written: {path}")
    if args.dump_preprocess:
        processed, _, reps, test_rep = preprocess_many(train_instances, test_instance)
        text = "".join(r.to_text() for r in reps) + test_rep.to_text()
        Path(args.dump_preprocess).write_text(text, encoding="utf-8")
    if args.dump_support:
        from .analogy import ProportionMeasure

        processed, query, _, _ = preprocess_many(train_instances, test_instance)
        lists = app(pool_pairs(processed), query,
                    ProportionMeasure.parse(report.best_measure), threads=threads)
        dump_support_lists(lists, args.dump_support)
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "selftest":
            return EXIT_OK if run_selftest() else EXIT_ERROR
        return cmd_rank(args)
    except DatasetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
