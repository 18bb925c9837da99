from projwidth.cli import read_text
from projwidth.core.errors import NotApplicableError
from projwidth.core.logging import get_logger
from projwidth.models import EmbeddedGraph
from projwidth.services.pq1 import read_instance
from projwidth.services.transversal import minimize_report

logger = get_logger(__name__)


def register(subparsers):
    parser = subparsers.add_parser("minimize", help="reduce to a face-width-minimal graph and count its edges")
    parser.add_argument("path")
    parser.add_argument("--seed", type=int, default=None, help="shuffle the edit order")
    parser.set_defaults(handler=handle)


def handle(args) -> int:
    g = read_instance(read_text(args.path))
    if not isinstance(g, EmbeddedGraph):
        raise NotApplicableError("minimize needs an embedded graph (PQ1)")
    report = minimize_report(g, order_seed=args.seed)
    logger.info(f"minimized {g.label or args.path}: {report.start_edges} -> {report.terminal_edges} edges")
    verdict = "PASS" if report.passed else "FAIL"
    print(f"face-width {report.face_width}")
    print(f"edges {report.start_edges} -> {report.terminal_edges} (expected {report.expected_edges})")
    print(verdict)
    return 0 if report.passed else 1
