from projwidth.cli import read_text
from projwidth.core.errors import InvalidParameterError
from projwidth.core.logging import get_logger
from projwidth.schemas.coloring import Precoloring
from projwidth.services import oracle as oracle_service
from projwidth.services.pq1 import read_instance

logger = get_logger(__name__)

NAMES = ["odd-girth", "min-oct", "alpha", "chromatic", "disjoint-odd-cycles", "precolor"]


def register(subparsers):
    parser = subparsers.add_parser("oracle", help="brute-force ground truth for one quantity")
    parser.add_argument("name", choices=NAMES)
    parser.add_argument("path")
    parser.add_argument("--cap", type=int, default=None, help="OCT size cap, or vertex cap for the others")
    parser.add_argument("--precolor", default=None, help="assignments v=c,... with colours 1..3")
    parser.set_defaults(handler=handle)


def parse_precoloring(text: str) -> Precoloring:
    assignments = {}
    try:
        for item in filter(None, text.split(",")):
            v, c = item.split("=")
            assignments[int(v)] = int(c)
        return Precoloring(assignments=assignments)
    except ValueError as exc:
        raise InvalidParameterError(f"bad precoloring {text!r}: {exc}")


def _coloring_text(coloring) -> str:
    return " ".join(f"{v}:{c}" for v, c in sorted(coloring.items()))


def handle(args) -> int:
    g = read_instance(read_text(args.path))
    logger.info(f"oracle {args.name} on {g.n} vertices")
    if args.name == "odd-girth":
        cycle = oracle_service.brute_shortest_odd_cycle(g)
        if cycle is None:
            print("bipartite")
        else:
            print(f"odd girth {cycle.length}")
            print(f"cycle: {' '.join(str(v) for v in cycle.vertices)}")
    elif args.name == "min-oct":
        result = oracle_service.brute_min_oct(g, cap=args.cap)
        if result.status == "cap":
            print("cap")
            return 3
        print(f"min oct {result.size}: {' '.join(str(v) for v in result.vertices)}")
    elif args.name == "alpha":
        print(f"alpha {oracle_service.independence_number(g, cap_n=args.cap)}")
    elif args.name == "chromatic":
        result = oracle_service.chromatic_check(g, cap_n=args.cap)
        print(f"three_colorable {str(result.three_colorable).lower()}")
        if result.four_coloring is not None:
            print(f"four_coloring: {_coloring_text(result.four_coloring)}")
    elif args.name == "disjoint-odd-cycles":
        found = oracle_service.has_two_disjoint_odd_cycles(g, cap_n=args.cap)
        print(f"two_disjoint_odd_cycles {str(found).lower()}")
    else:
        if args.precolor is None:
            raise InvalidParameterError("precolor needs --precolor v=c,...")
        result = oracle_service.precolor_extend(g, parse_precoloring(args.precolor))
        if result.coloring is not None:
            print(f"extension: {_coloring_text(result.coloring)}")
        else:
            ob = result.obstruction
            print(f"obstruction: triple {list(ob.triple)} side {ob.side} colors {list(ob.colors)}")
            for pair, w in sorted(ob.common_neighbors.items()):
                print(f"  common neighbour of {pair}: {w}")
    return 0
