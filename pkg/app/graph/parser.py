"""Reading and writing the line-oriented graph format."""
import logging
import re
from pathlib import Path as FilePath

from app.exceptions import GraphFormatError
from app.models import StructuredEdge, WeightedGraph

ID_PATTERN = re.compile(r"^[A-Za-z0-9_]+$")
DECIMAL_PATTERN = re.compile(r"[0-9]+")


def _check_id(token: str, line_num: int) -> str:
    if not ID_PATTERN.match(token):
        raise GraphFormatError(f"Line {line_num}: Invalid id '{token}'.")
    return token


def parse_graph(text: str) -> WeightedGraph:
    """
    Parse a graph document into a WeightedGraph.

    Lines are `vertex ID`, `edge ID SRC DST [WEIGHT]`, comments starting
    with `#`, or blank. Vertex order is declaration order.

    Raises:
        GraphFormatError: on a syntax error (with its line number), a
            duplicate name, a dangling endpoint or a weight below 1.
    """
    vertices: list[str] = []
    sedges: list[StructuredEdge] = []
    names: set[str] = set()

    for line_num, raw in enumerate(text.split("\n"), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        keyword = parts[0]

        if keyword == "vertex":
            if len(parts) != 2:
                raise GraphFormatError(
                    f"Line {line_num}: Invalid format: '{line}'. Expected 'vertex ID'."
                )
            name = _check_id(parts[1], line_num)
            if name in names:
                raise GraphFormatError(f"Line {line_num}: Duplicate name '{name}'.")
            names.add(name)
            vertices.append(name)
        elif keyword == "edge":
            if len(parts) not in (4, 5):
                raise GraphFormatError(
                    f"Line {line_num}: Invalid format: '{line}'. Expected 'edge ID SRC DST [WEIGHT]'."
                )
            name, src, dst = (_check_id(p, line_num) for p in parts[1:4])
            if name in names:
                raise GraphFormatError(f"Line {line_num}: Duplicate name '{name}'.")
            weight = 1
            if len(parts) == 5:
                if not DECIMAL_PATTERN.fullmatch(parts[4]):
                    raise GraphFormatError(
                        f"Line {line_num}: Invalid weight '{parts[4]}'. Weight must be a decimal integer."
                    )
                weight = int(parts[4])
                if weight < 1:
                    raise GraphFormatError(f"Line {line_num}: Weight of '{name}' must be at least 1.")
            names.add(name)
            sedges.append(StructuredEdge(name, src, dst, weight))
        else:
            raise GraphFormatError(
                f"Line {line_num}: Invalid format: '{line}'. Expected a vertex or edge declaration."
            )

    declared = set(vertices)
    for e in sedges:
        for endpoint in (e.src, e.dst):
            if endpoint not in declared:
                raise GraphFormatError(
                    f"Edge '{e.name}' refers to undeclared vertex '{endpoint}'."
                )

    graph = WeightedGraph(tuple(vertices), tuple(sedges))
    logging.info(f"Parsed graph with {len(graph.vertices)} vertices and {len(graph.sedges)} edges.")
    return graph


def load_graph(path: str | FilePath) -> WeightedGraph:
    """Reads and parses a graph file."""
    return parse_graph(FilePath(path).read_text(encoding="utf-8"))


def dump_graph(graph: WeightedGraph) -> str:
    """Serialises a graph to the line format; weight 1 is left implicit."""
    lines = [f"vertex {v}" for v in graph.vertices]
    for e in graph.sedges:
        suffix = f" {e.weight}" if e.weight != 1 else ""
        lines.append(f"edge {e.name} {e.src} {e.dst}{suffix}")
    return "\n".join(lines) + "\n"
