"""PQ1 (signed rotation system) and AG1 (abstract graph) text formats.

PQ1::

    PQ1 <n> <m>
    # label: <text>            (optional, directly after the header)
    E <eid> <u> <v> <+|->      (m lines)
    R <vid> <deg> <eid_1> ... <eid_deg>   (n lines, counterclockwise)

AG1::

    AG1 <n> <m>
    E <u> <v>                  (m lines)

Other lines starting with `#` are comments.
"""

from typing import Dict, List, Optional, Tuple

from pydantic import ValidationError

from projwidth.core.errors import FormatError
from projwidth.models import Edge, EmbeddedGraph, Graph

LABEL_PREFIX = "# label:"


def _content_lines(text: str) -> Tuple[List[Tuple[int, List[str]]], Optional[str]]:
    """Non-comment lines with their 1-based numbers, plus the label comment."""
    if "\r" in text:
        raise FormatError("line endings must be LF")
    label = None
    out = []
    for number, raw in enumerate(text.split("\n"), start=1):
        if any(not (32 <= ord(ch) < 127 or ch == "\t") for ch in raw):
            raise FormatError("non-printable or non-ASCII character", number)
        if raw.startswith(LABEL_PREFIX) and len(out) == 1 and label is None:
            label = raw[len(LABEL_PREFIX):].strip()
            continue
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        out.append((number, stripped.split()))
    return out, label


def _int(token: str, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(f"{what} must be an integer, got {token!r}", line)


def _header(lines, magic: str) -> Tuple[int, int]:
    if not lines:
        raise FormatError(f"missing {magic} header", 1)
    number, tokens = lines[0]
    if len(tokens) != 3 or tokens[0] != magic:
        raise FormatError(f"malformed header, expected '{magic} <n> <m>'", number)
    n = _int(tokens[1], number, "n")
    m = _int(tokens[2], number, "m")
    if n < 0 or m < 0:
        raise FormatError("n and m must be non-negative", number)
    return n, m


def parse_pq1(text: str) -> EmbeddedGraph:
    lines, label = _content_lines(text)
    n, m = _header(lines, "PQ1")
    body = lines[1:]
    if len(body) != n + m:
        last = body[-1][0] if body else lines[0][0]
        raise FormatError(f"expected {m} E lines and {n} R lines, found {len(body)} lines", last)

    edges: List[Optional[Edge]] = [None] * m
    edge_line: Dict[int, int] = {}
    for number, tokens in body[:m]:
        if len(tokens) != 5 or tokens[0] != "E":
            raise FormatError("expected 'E <eid> <u> <v> <+|->'", number)
        eid = _int(tokens[1], number, "edge id")
        u = _int(tokens[2], number, "endpoint")
        v = _int(tokens[3], number, "endpoint")
        if tokens[4] not in ("+", "-"):
            raise FormatError(f"sign must be + or -, got {tokens[4]!r}", number)
        if not 0 <= eid < m:
            raise FormatError(f"edge id {eid} outside 0..{m - 1}", number)
        if edges[eid] is not None:
            raise FormatError(f"edge id {eid} declared twice", number)
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"edge {eid} has an endpoint outside 0..{n - 1}", number)
        if u == v and label is not None:
            raise FormatError(f"edge {eid} is a loop in a labelled family instance", number)
        edges[eid] = Edge(eid=eid, u=u, v=v, sign=1 if tokens[4] == "+" else -1)
        edge_line[eid] = number

    rotations: List[Optional[Tuple[int, ...]]] = [None] * n
    uses: Dict[int, List[int]] = {}
    for number, tokens in body[m:]:
        if len(tokens) < 3 or tokens[0] != "R":
            raise FormatError("expected 'R <vid> <deg> <eid_1> ... <eid_deg>'", number)
        vid = _int(tokens[1], number, "vertex id")
        deg = _int(tokens[2], number, "degree")
        if not 0 <= vid < n:
            raise FormatError(f"vertex id {vid} outside 0..{n - 1}", number)
        if rotations[vid] is not None:
            raise FormatError(f"rotation of vertex {vid} given twice", number)
        ids = [_int(t, number, "edge id") for t in tokens[3:]]
        if len(ids) != deg:
            raise FormatError(f"degree mismatch: declared {deg}, listed {len(ids)}", number)
        for e in ids:
            if not 0 <= e < m:
                raise FormatError(f"dangling edge id {e}", number)
            edge = edges[e]
            if vid not in (edge.u, edge.v):
                raise FormatError(f"edge {e} is not incident to vertex {vid}", number)
            uses.setdefault(e, []).append(number)
        rotations[vid] = tuple(ids)

    for e, edge in enumerate(edges):
        used = uses.get(e, [])
        if len(used) != 2:
            raise FormatError(f"edge multiplicity: edge {e} appears {len(used)} times in rotations", (used[2] if len(used) > 2 else edge_line[e]))
        if edge.u == edge.v and used[0] != used[1]:
            raise FormatError(f"loop {e} must appear twice at vertex {edge.u}", used[1])
        if edge.u != edge.v and used[0] == used[1]:
            raise FormatError(f"edge {e} appears twice at one vertex", used[0])
    try:
        return EmbeddedGraph(n=n, edges=tuple(edges), rotations=tuple(rotations), label=label)
    except ValidationError as exc:
        raise FormatError(f"inconsistent scheme: {exc.errors()[0]['msg']}")


def serialize_pq1(g: EmbeddedGraph) -> str:
    lines = [f"PQ1 {g.n} {g.m}"]
    if g.label:
        lines.append(f"{LABEL_PREFIX} {g.label}")
    for e in g.edges:
        lines.append(f"E {e.eid} {e.u} {e.v} {'+' if e.sign == 1 else '-'}")
    for v, rot in enumerate(g.rotations):
        lines.append(" ".join(["R", str(v), str(len(rot))] + [str(e) for e in rot]))
    return "\n".join(lines) + "\n"


def parse_ag1(text: str) -> Graph:
    lines, label = _content_lines(text)
    n, m = _header(lines, "AG1")
    body = lines[1:]
    if len(body) != m:
        last = body[-1][0] if body else lines[0][0]
        raise FormatError(f"expected {m} E lines, found {len(body)}", last)
    edges = []
    for number, tokens in body:
        if len(tokens) != 3 or tokens[0] != "E":
            raise FormatError("expected 'E <u> <v>'", number)
        u = _int(tokens[1], number, "endpoint")
        v = _int(tokens[2], number, "endpoint")
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"endpoint outside 0..{n - 1}", number)
        edges.append((u, v))
    return Graph(n=n, edges=tuple(edges), label=label)


def serialize_ag1(g: Graph) -> str:
    lines = [f"AG1 {g.n} {g.m}"]
    if g.label:
        lines.append(f"{LABEL_PREFIX} {g.label}")
    lines.extend(f"E {u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_instance(text: str):
    """Parse PQ1 or AG1 by its header."""
    head = text.lstrip().split(None, 1)[0] if text.strip() else ""
    if head == "AG1":
        return parse_ag1(text)
    return parse_pq1(text)
