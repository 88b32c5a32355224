"""Display helpers: ASCII drawings and Graphviz DOT."""

from __future__ import annotations

from .trees import Tree, infix_reading, serialize_tree, size


def _label_text(label, letters: bool) -> str:
    if label is None:
        return "*"
    if letters and 0 <= label < 26:
        return chr(ord("a") + label)
    return str(label)


def render_ascii(t: Tree, letters: bool = False) -> str:
    """Draw t with nodes in infix columns and one row per depth.

    >>> print(render_ascii(parse_tree("((. 1 .) 2 (. 3 .))")))
      2
     / \\
    1   3
    """
    if t is None:
        return "(empty)"
    width = max(len(_label_text(x, letters)) for x in infix_reading(t))
    step = width + 1
    placed: list[tuple[int, int, str]] = []  # depth, column, text
    links: list[tuple[int, int, str]] = []  # depth of the child, column, glyph
    counter = [0]

    def walk(node: Tree, depth: int):
        if node is None:
            return None
        lc = walk(node.left, depth + 1)
        col = counter[0] * step
        counter[0] += 1
        rc = walk(node.right, depth + 1)
        placed.append((depth, col, _label_text(node.label, letters)))
        if lc is not None:
            links.append((depth + 1, (lc + col + width - 1) // 2, "/"))
        if rc is not None:
            links.append((depth + 1, (col + rc + width) // 2, "\\"))
        return col

    walk(t, 0)
    depth = max(d for d, _, _ in placed) + 1
    total = size(t) * step
    rows = [[" "] * (total + 1) for _ in range(2 * depth - 1)]
    for d, col, text in placed:
        for i, ch in enumerate(text):
            rows[2 * d][col + i] = ch
    for d, col, glyph in links:
        rows[2 * d - 1][col] = glyph
    return "\n".join("".join(r).rstrip() for r in rows)


def tree_dot(t: Tree, letters: bool = False, name: str = "tree") -> str:
    lines = [f"digraph {name} {{", "  node [shape=circle];"]
    ids = {}

    def walk(node: Tree, ident: str):
        if node is None:
            return
        ids[ident] = node
        lines.append(f'  {ident} [label="{_label_text(node.label, letters)}"];')
        for side, child in (("l", node.left), ("r", node.right)):
            if child is not None:
                lines.append(f"  {ident} -> {ident}{side};")
                walk(child, ident + side)

    walk(t, "n")
    lines.append("}")
    return "\n".join(lines)


def _quote(t: Tree) -> str:
    return '"' + serialize_tree(t) + '"'


def hasse_dot(covers, vertices, name: str = "order") -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box, fontname=monospace];"]
    for v in vertices:
        lines.append(f"  {_quote(v)};")
    for a, b in covers:
        lines.append(f"  {_quote(a)} -> {_quote(b)};")
    lines.append("}")
    return "\n".join(lines)


def graded_graph_dot(graph, name: str | None = None) -> str:
    gname = (name or graph.name).replace("*", "_star")
    lines = [f"digraph {gname} {{", "  rankdir=TB;", "  node [shape=box, fontname=monospace];"]
    for n in sorted(graph.levels):
        members = " ".join(_quote(t) for t in graph.levels[n])
        lines.append(f"  {{ rank=same; {members} }}")
    for a, b in sorted(graph.edges, key=lambda e: (size(e[0]), serialize_tree(e[0]), serialize_tree(e[1]))):
        lines.append(f"  {_quote(a)} -> {_quote(b)};")
    lines.append("}")
    return "\n".join(lines)
