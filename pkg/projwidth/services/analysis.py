"""Analysis rows and verification sweeps over instance families."""

import csv
import io
import multiprocessing as mp
from decimal import Decimal
from typing import Iterable, List, Optional, Tuple, Union

from projwidth.core.errors import CapExceeded, InvalidParameterError, NotApplicableError
from projwidth.core.logging import get_logger
from projwidth.models import EmbeddedGraph, Graph
from projwidth.schemas.analysis import CSV_COLUMNS, CSV_VERSION_LINE, AnalysisRow
from projwidth.services import bounds, oracle
from projwidth.services.families import family_instance, make_spec
from projwidth.services.topology import edge_width, face_width, is_bipartite
from projwidth.services.transversal import (
    facewidth_transversal,
    induced_edges,
    require_odd_quadrangulation,
    single_edge_transversal,
)

logger = get_logger(__name__)


def _oracle_cells(g: Union[EmbeddedGraph, Graph]) -> Tuple[Union[int, str], Union[int, str]]:
    try:
        result = oracle.brute_min_oct(g)
        oct_min = result.size if result.status == "ok" else result.status
    except CapExceeded as exc:
        logger.warning(f"minimum odd cycle transversal: {exc}")
        oct_min = "cap"
    try:
        alpha = oracle.independence_number(g)
    except CapExceeded as exc:
        logger.warning(f"independence number: {exc}")
        alpha = "cap"
    return oct_min, alpha


def _max_degree(g: Union[EmbeddedGraph, Graph]) -> int:
    return max((len(a) for a in g.adjacency), default=0)


def analyze_instance(
    g: Union[EmbeddedGraph, Graph],
    family: Optional[str] = None,
    k: Optional[int] = None,
    with_oracle: bool = False,
) -> AnalysisRow:
    """Widths, transversals and bound checks of one instance.

    Every transversal is re-verified here before it can count as passing.
    Bipartite input yields infinite widths and skipped checks.  An abstract
    graph only gets its odd girth and the oracle columns.
    """
    family = family or g.label or "input"
    base = dict(
        family=family,
        k=k,
        n=g.n,
        m=g.m,
        ew_bound=bounds.ew_bound(g.n),
        fw_bound=bounds.fw_bound(g.n),
        single_edge_bound=bounds.single_edge_bound(g.n, _max_degree(g)),
    )
    if is_bipartite(g).bipartite:
        logger.info(f"{family}: bipartite input, checks skipped")
        return AnalysisRow(**base, all_checks_pass=True, embedded=isinstance(g, EmbeddedGraph))

    oct_min, alpha = _oracle_cells(g) if with_oracle else (None, None)
    checks = []
    if isinstance(alpha, int):
        checks.append(("independence lower bound", bounds.stable_ok(g.n, alpha)))

    if isinstance(g, Graph):
        girth = oracle.brute_shortest_odd_cycle(g).length
        checks.append(("odd girth", bounds.ew_ok(g.n, girth)))
        return AnalysisRow(
            **base,
            edge_width=girth,
            oct_min=oct_min,
            alpha=alpha,
            all_checks_pass=_report(family, checks),
            embedded=False,
        )

    require_odd_quadrangulation(g)
    ew, _ = edge_width(g)
    fw, _ = face_width(g)
    checks.append(("edge-width", bounds.ew_ok(g.n, ew)))
    checks.append(("face-width", bounds.fw_ok(g.n, fw)))

    fw_cert = facewidth_transversal(g)
    checks.append(("face-width transversal remainder", is_bipartite(g, removed=fw_cert.vertex_set).bipartite))
    checks.append(("face-width transversal size", fw_cert.size <= fw and bounds.fw_ok(g.n, fw_cert.size)))

    se_cert = single_edge_transversal(g)
    checks.append(("single-edge remainder", is_bipartite(g, removed=se_cert.vertex_set).bipartite))
    checks.append(("single-edge induced edges", len(induced_edges(g, se_cert.vertex_set)) == 1))
    checks.append(("single-edge size", bounds.single_edge_ok(g.n, g.max_degree, se_cert.size)))

    if isinstance(oct_min, int) and oct_min != fw:
        logger.warning(f"{family}: face-width {fw} differs from minimum odd cycle transversal {oct_min}")

    return AnalysisRow(
        **base,
        edge_width=ew,
        face_width=fw,
        oct_min=oct_min,
        alpha=alpha,
        single_edge_size=se_cert.size,
        all_checks_pass=_report(family, checks),
    )


def certificate_text(g: Union[EmbeddedGraph, Graph]) -> str:
    """Face-width and single-edge certificates as text blocks separated by a blank line."""
    if not isinstance(g, EmbeddedGraph):
        raise NotApplicableError("certificates need an embedded graph (PQ1)")
    blocks = []
    for cert in (facewidth_transversal(g), single_edge_transversal(g)):
        blocks.append(cert.to_text(induced_edges(g, cert.vertex_set)))
    return "\n".join(blocks)


def _report(family: str, checks: List[Tuple[str, bool]]) -> bool:
    failed = [name for name, ok in checks if not ok]
    for name in failed:
        logger.warning(f"{family}: check failed: {name}")
    return not failed


def parse_k_range(text: str) -> List[int]:
    """'A..B' as the inclusive list A..B; empty when B < A."""
    lo, sep, hi = text.partition("..")
    if not sep:
        raise InvalidParameterError(f"k range must look like A..B, got {text!r}")
    try:
        return list(range(int(lo), int(hi) + 1))
    except ValueError:
        raise InvalidParameterError(f"k range must look like A..B, got {text!r}")


def _sweep_one(task: Tuple[str, int, bool, int, int]) -> AnalysisRow:
    family, k, with_oracle, steps, seed = task
    spec = make_spec(family=family, k=k, embed=True, steps=steps, seed=seed)
    g = family_instance(spec)
    return analyze_instance(g, family=family, k=k, with_oracle=with_oracle)


def verify_sweep(
    family: str,
    k_values: Iterable[int],
    with_oracle: bool = False,
    steps: int = 0,
    seed: int = 0,
    jobs: int = 1,
) -> List[AnalysisRow]:
    """One row per k, in the order given, however many worker processes run."""
    tasks = [(family, k, with_oracle, steps, seed) for k in k_values]
    logger.info(f"verifying {family} for k in {[t[1] for t in tasks]} with {jobs} job(s)")
    if jobs > 1 and len(tasks) > 1:
        with mp.Pool(processes=jobs) as pool:
            return pool.map(_sweep_one, tasks)
    return [_sweep_one(task) for task in tasks]


def rows_to_csv(rows: Iterable[AnalysisRow]) -> str:
    out = io.StringIO()
    out.write(CSV_VERSION_LINE + "\n")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(row.csv_cells())
    return out.getvalue()


def max_ratios(rows: Iterable[AnalysisRow]) -> Tuple[Optional[Decimal], Optional[Decimal]]:
    rows = list(rows)
    ew = [r for r in (bounds.ratio(row.edge_width, row.ew_bound) for row in rows) if r is not None]
    fw = [r for r in (bounds.ratio(row.face_width, row.fw_bound) for row in rows) if r is not None]
    return max(ew, default=None), max(fw, default=None)


def summary_line(rows: Iterable[AnalysisRow]) -> str:
    ew, fw = max_ratios(rows)
    return f"max ew ratio={_show(ew)} max fw ratio={_show(fw)}"


def _show(value: Optional[Decimal]) -> str:
    return "n/a" if value is None else str(value)
