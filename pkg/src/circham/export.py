"""Text formats for digraphs: Graphviz DOT and a plain edge list."""

from .digraph import Digraph


def to_dot(g: Digraph) -> str:
    lines = ["digraph {"]
    lines += [f"  {u} -> {v};" for u, v in g.arcs()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_edges(g: Digraph) -> str:
    """First line ``n m``, then one ``u v`` line per arc, sorted."""
    lines = [f"{g.vertex_count} {g.arc_count}"]
    lines += [f"{u} {v}" for u, v in g.arcs()]
    return "\n".join(lines) + "\n"


def parse_edges(text: str) -> Digraph:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 2:
        raise ValueError("edges document must start with an 'n m' header")
    n, m = (int(x) for x in rows[0])
    body = rows[1:]
    if len(body) != m:
        raise ValueError(f"header announces {m} arcs, found {len(body)}")
    arcs = []
    for row in body:
        if len(row) != 2:
            raise ValueError(f"malformed arc line {' '.join(row)!r}")
        arcs.append((int(row[0]), int(row[1])))
    return Digraph(n, arcs)


FORMATS = {"dot": to_dot, "edges": to_edges}
