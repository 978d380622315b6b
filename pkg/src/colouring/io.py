"""
Colouring and cover-certificate file formats.

Text form, one record per line, ``#`` starts a comment::

    host complete 4          # or: host bipartite n m / host partial n
    params 3 2               # r k, with k = * for generalized colourings
    0 1 0,1                  # u v c1,c2,... strictly increasing

The JSON form carries the same fields and is validated with pydantic.
"""

import json
from typing import List, Optional, Union

from pydantic import BaseModel, Field, ValidationError

from config import MAX_COLOURS
from colouring.colour_set import colour_set, members
from colouring.errors import ColouringParseError, ParameterError
from colouring.model import CoverCertificate, HostGraph, HostKind, MonoComponent, SetColouring


class HostDocument(BaseModel):
    kind: str = Field(..., description="complete, bipartite or partial")
    n: int
    m: Optional[int] = None


class EdgeDocument(BaseModel):
    u: int
    v: int
    colours: List[int]


class ColouringDocument(BaseModel):
    host: HostDocument
    r: int
    k: Optional[int] = Field(None, description="uniform set size, null for generalized")
    edges: List[EdgeDocument]


class TreeDocument(BaseModel):
    colour: int
    vertices: List[int]
    tree_edges: List[List[int]] = Field(default_factory=list)


class CoverDocument(BaseModel):
    kind: str = "tree-cover"
    size: int
    trees: List[TreeDocument]


def _host_from(kind: str, n: int, m: Optional[int], line: Optional[int]) -> HostGraph:
    try:
        if kind == "bipartite":
            if m is None:
                raise ColouringParseError("bipartite host needs m", line, "host")
            return HostGraph.bipartite(n, m)
        if kind in ("complete", "partial"):
            if m is not None:
                raise ColouringParseError(f"a {kind} host takes only n, got m={m}", line, "m")
            return HostGraph.complete(n)
    except ParameterError as exc:
        raise ColouringParseError(str(exc), line, "host") from exc
    raise ColouringParseError(f"unknown host kind '{kind}'", line, "host")


class _Builder:
    """Collects edges and checks them against the header."""

    def __init__(self, host: HostGraph, r: int, k: Optional[int], partial: bool):
        self.host, self.r, self.k, self.partial = host, r, k, partial
        self.colours: List[Optional[int]] = [None] * host.num_edges

    def add(self, u: int, v: int, colours: List[int], line: Optional[int]) -> None:
        if not self.host.has_edge(u, v):
            raise ColouringParseError(f"({u}, {v}) is not an edge of {self.host.describe()}", line, "u v")
        if any(b <= a for a, b in zip(colours, colours[1:])):
            raise ColouringParseError("colour list must be strictly increasing", line, "colours")
        for c in colours:
            if not 0 <= c < self.r:
                raise ColouringParseError(f"colour {c} outside 0..{self.r - 1}", line, "colours")
        if not colours and not self.partial:
            raise ColouringParseError("empty colour set", line, "colours")
        if self.k is not None and len(colours) != self.k:
            raise ColouringParseError(f"edge has {len(colours)} colours, expected k={self.k}", line, "colours")
        index = self.host.edge_index(u, v)
        if self.colours[index] is not None:
            raise ColouringParseError(f"edge ({u}, {v}) given twice", line, "u v")
        self.colours[index] = colour_set(colours)

    def build(self) -> SetColouring:
        missing = [e for e, bits in zip(self.host.edges, self.colours) if bits is None]
        if missing and not self.partial:
            raise ColouringParseError(f"{len(missing)} edges without colours, first {missing[0]}")
        colours = tuple(0 if bits is None else bits for bits in self.colours)
        return SetColouring(self.host, self.r, colours, self.k, self.partial)


def _check_params(r: int, k: Optional[int], line: Optional[int]) -> None:
    if not 1 <= r <= MAX_COLOURS:
        raise ColouringParseError(f"r must lie in 1..{MAX_COLOURS}", line, "r")
    if k is not None and not 1 <= k <= r:
        raise ColouringParseError(f"k must lie in 1..r, got {k}", line, "k")


def _int(token: str, line: int, field: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ColouringParseError(f"expected an integer, got '{token}'", line, field) from None


def parse_text(text: str) -> SetColouring:
    builder: Optional[_Builder] = None
    host: Optional[HostGraph] = None
    partial = False
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "host":
            if host is not None:
                raise ColouringParseError("second host header", number, "host")
            if len(tokens) not in (3, 4):
                raise ColouringParseError("expected 'host complete n' or 'host bipartite n m'", number, "host")
            n = _int(tokens[2], number, "n")
            m = _int(tokens[3], number, "m") if len(tokens) == 4 else None
            partial = tokens[1] == "partial"
            host = _host_from(tokens[1], n, m, number)
        elif tokens[0] == "params":
            if host is None:
                raise ColouringParseError("params before host header", number, "params")
            if len(tokens) != 3:
                raise ColouringParseError("expected 'params r k'", number, "params")
            r = _int(tokens[1], number, "r")
            k = None if tokens[2] == "*" else _int(tokens[2], number, "k")
            _check_params(r, k, number)
            builder = _Builder(host, r, k, partial)
        else:
            if builder is None:
                raise ColouringParseError("edge line before headers", number)
            if len(tokens) not in (2, 3):
                raise ColouringParseError("expected 'u v c1,c2,...'", number)
            u, v = _int(tokens[0], number, "u"), _int(tokens[1], number, "v")
            colours = [] if len(tokens) == 2 else [_int(t, number, "colours") for t in tokens[2].split(",")]
            builder.add(u, v, colours, number)
    if builder is None:
        raise ColouringParseError("missing host or params header")
    return builder.build()


def parse_json(text: str) -> SetColouring:
    try:
        doc = ColouringDocument.model_validate_json(text)
    except ValidationError as exc:
        first = exc.errors()[0]
        raise ColouringParseError(first["msg"], None, ".".join(str(p) for p in first["loc"])) from exc
    _check_params(doc.r, doc.k, None)
    host = _host_from(doc.host.kind, doc.host.n, doc.host.m, None)
    builder = _Builder(host, doc.r, doc.k, doc.host.kind == "partial")
    for i, edge in enumerate(doc.edges):
        try:
            builder.add(edge.u, edge.v, edge.colours, None)
        except ColouringParseError as exc:
            raise ColouringParseError(f"edges[{i}]: {exc}", None, "edges") from exc
    return builder.build()


def parse_colouring(text: str) -> SetColouring:
    """Parses either form; JSON is recognised by a leading ``{``."""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_text(text)


def _host_header(colouring: SetColouring) -> str:
    host = colouring.host
    if host.is_bipartite:
        return f"host bipartite {host.n} {host.m}"
    return f"host {'partial' if colouring.partial else 'complete'} {host.n}"


def serialize_text(colouring: SetColouring) -> str:
    k = "*" if colouring.k is None else str(colouring.k)
    lines = [_host_header(colouring), f"params {colouring.r} {k}"]
    for u, v, bits in colouring.iter_edges():
        if bits == 0 and colouring.partial:
            continue
        lines.append(f"{u} {v} {','.join(str(c) for c in members(bits))}")
    return "\n".join(lines) + "\n"


def to_document(colouring: SetColouring) -> ColouringDocument:
    host = colouring.host
    kind = "partial" if colouring.partial else host.kind.value
    return ColouringDocument(
        host=HostDocument(kind=kind, n=host.n, m=host.m if host.kind is HostKind.BIPARTITE else None),
        r=colouring.r,
        k=colouring.k,
        edges=[
            EdgeDocument(u=u, v=v, colours=list(members(bits)))
            for u, v, bits in colouring.iter_edges()
            if bits or not colouring.partial
        ],
    )


def serialize_json(colouring: SetColouring) -> str:
    return to_document(colouring).model_dump_json(indent=2) + "\n"


def serialize(colouring: SetColouring, as_json: bool = False) -> str:
    return serialize_json(colouring) if as_json else serialize_text(colouring)


def cover_to_document(certificate: CoverCertificate) -> CoverDocument:
    return CoverDocument(
        size=certificate.size,
        trees=[
            TreeDocument(
                colour=tree.colour,
                vertices=list(tree.vertex_list),
                tree_edges=[list(e) for e in tree.tree_edges],
            )
            for tree in certificate.trees
        ],
    )


def cover_from_document(
    doc: Union[CoverDocument, dict, str], num_vertices: Optional[int] = None
) -> CoverCertificate:
    """Parse a tree cover certificate; vertices must lie in ``0..num_vertices-1`` when it is given."""
    try:
        if isinstance(doc, str):
            doc = CoverDocument.model_validate_json(doc)
        elif isinstance(doc, dict):
            doc = CoverDocument.model_validate(doc)
    except ValidationError as exc:
        raise ColouringParseError(exc.errors()[0]["msg"], None, "certificate") from exc
    trees = []
    for i, tree in enumerate(doc.trees):
        if any(len(e) != 2 for e in tree.tree_edges):
            raise ColouringParseError(f"trees[{i}]: tree edges must be vertex pairs", None, "tree_edges")
        if tree.colour < 0:
            raise ColouringParseError(f"trees[{i}]: negative colour {tree.colour}", None, "colour")
        for field, listed in (("vertices", tree.vertices), ("tree_edges", [v for e in tree.tree_edges for v in e])):
            bad = [v for v in listed if v < 0 or (num_vertices is not None and v >= num_vertices)]
            if bad:
                raise ColouringParseError(f"trees[{i}]: vertex {bad[0]} out of range", None, field)
        trees.append(
            MonoComponent(
                tree.colour,
                colour_set(tree.vertices),
                tuple((min(a, b), max(a, b)) for a, b in tree.tree_edges),
            )
        )
    return CoverCertificate(tuple(trees))


def dump_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=False) + "\n"
