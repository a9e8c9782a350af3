"""Plain-text edge-list format.

Line 1 is ``n m``; the next m lines are ``u v`` with 0-based endpoints,
u < v, in ascending lexicographic order. Lines starting with ``#`` are
ignored. Files are UTF-8 with LF line endings.
"""

from __future__ import annotations

from .errors import GraphError
from .graph import Graph, build_graph


class EdgeListParseError(GraphError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def parse_edge_list(text: str) -> Graph:
    header: tuple[int, int] | None = None
    header_line = 0
    edges: list[tuple[int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(line_no, f"expected two integers, got {raw!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(line_no, f"non-integer token in {raw!r}") from None
        if header is None:
            if a < 0 or b < 0:
                raise EdgeListParseError(line_no, "negative count in header")
            header = (a, b)
            header_line = line_no
            continue
        if not a < b:
            raise EdgeListParseError(line_no, f"edge {a} {b} must satisfy u < v")
        if edges and (a, b) <= edges[-1]:
            raise EdgeListParseError(line_no, "edges must be strictly ascending")
        edges.append((a, b))
    if header is None:
        raise EdgeListParseError(1, "missing 'n m' header")
    n, m = header
    if len(edges) != m:
        raise EdgeListParseError(
            header_line, f"header declares {m} edges but {len(edges)} were listed"
        )
    return build_graph(n, edges)


def format_edge_list(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        for c in comment.splitlines():
            lines.append(f"# {c}")
    edges = g.edges()
    lines.append(f"{g.n} {len(edges)}")
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(path, g: Graph, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_edge_list(g, comment))
