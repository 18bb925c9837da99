import sys

from projwidth.cli import read_text, write_output
from projwidth.core.logging import get_logger
from projwidth.services.analysis import analyze_instance, certificate_text, rows_to_csv
from projwidth.services.pq1 import read_instance

logger = get_logger(__name__)


def register(subparsers):
    parser = subparsers.add_parser("analyze", help="widths, transversals and bound checks of one instance")
    parser.add_argument("path")
    parser.add_argument("--with-oracle", action="store_true", help="add minimum OCT and independence number")
    parser.add_argument("--csv", default=None, help="write the CSV row here instead of stdout")
    parser.add_argument("--family", default=None)
    parser.add_argument("--k", type=int, default=None)
    parser.add_argument("--certificates", default=None, help="write the face-width and single-edge certificates here")
    parser.set_defaults(handler=handle)


def handle(args) -> int:
    g = read_instance(read_text(args.path))
    row = analyze_instance(g, family=args.family, k=args.k, with_oracle=args.with_oracle)
    if args.csv:
        write_output(rows_to_csv([row]), args.csv)
        print(row.summary())
    else:
        write_output(rows_to_csv([row]))
        print(row.summary(), file=sys.stderr)
    if args.certificates:
        write_output(certificate_text(g), args.certificates)
        logger.info(f"certificates written to {args.certificates}")
    return 0 if row.all_checks_pass else 1
