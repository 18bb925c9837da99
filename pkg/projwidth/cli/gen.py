from projwidth.cli import write_output
from projwidth.core.logging import get_logger
from projwidth.models import EmbeddedGraph
from projwidth.services.families import family_instance, make_spec
from projwidth.services.pq1 import serialize_ag1, serialize_pq1

logger = get_logger(__name__)


def register(subparsers):
    parser = subparsers.add_parser("gen", help="generate a family instance as PQ1 (or AG1)")
    parser.add_argument("--family", required=True, choices=["grid", "mycielski", "fuzz"])
    parser.add_argument("--k", type=int, required=True)
    parser.add_argument("--embed", action="store_true", help="build the Mycielski embedding")
    parser.add_argument("--steps", type=int, default=0, help="vertex splits for fuzz")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("-o", "--output", default=None, help="output path (default stdout)")
    parser.set_defaults(handler=handle)


def handle(args) -> int:
    spec = make_spec(family=args.family, k=args.k, embed=args.embed, steps=args.steps, seed=args.seed)
    g = family_instance(spec)
    text = serialize_pq1(g) if isinstance(g, EmbeddedGraph) else serialize_ag1(g)
    write_output(text, args.output)
    logger.info(f"generated {spec.label}: n={g.n} m={g.m}")
    return 0
