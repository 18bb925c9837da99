import sys

from projwidth.cli import write_output
from projwidth.core.logging import get_logger
from projwidth.services.analysis import parse_k_range, rows_to_csv, summary_line, verify_sweep

logger = get_logger(__name__)


def register(subparsers):
    parser = subparsers.add_parser("verify", help="bound-verification sweep over a family")
    parser.add_argument("--family", required=True, choices=["grid", "mycielski", "fuzz"])
    parser.add_argument("--k-range", required=True, help="inclusive range A..B")
    parser.add_argument("--with-oracle", action="store_true")
    parser.add_argument("--steps", type=int, default=0)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--jobs", type=int, default=1, help="worker processes")
    parser.add_argument("--csv", default=None, help="output path (default stdout)")
    parser.set_defaults(handler=handle)


def handle(args) -> int:
    ks = parse_k_range(args.k_range)
    rows = verify_sweep(
        args.family,
        ks,
        with_oracle=args.with_oracle,
        steps=args.steps,
        seed=args.seed,
        jobs=max(1, args.jobs),
    )
    write_output(rows_to_csv(rows), args.csv)
    print(summary_line(rows), file=sys.stderr)
    failed = [row.k for row in rows if not row.all_checks_pass]
    if failed:
        logger.warning(f"checks failed for k in {failed}")
        return 1
    return 0
