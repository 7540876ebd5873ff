"""Text formats for graphs, covers and orientations, plus DOT export.

Two graph formats are read:

* bracket: ``[1<->2,1<->3,2<->3]`` with 1-indexed vertices;
* lines: a header ``n m`` followed by ``m`` lines ``u v`` (0-indexed).  Comment
  lines ``# label v <text>`` name vertices and ``# family kind p1 p2 ...``
  records family provenance.

:func:`parse_graph` picks the format from the first non-blank character.
"""

from __future__ import annotations

import re

from .errors import InputError
from .families import FamilySpec, generate
from .graph import Graph, Orientation
from .pot import AssemblyDesign, bond_name

_PALETTE = (
    "red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan4",
    "gold3", "gray40", "navy", "olivedrab", "deeppink", "teal", "sienna", "black",
)


def _locate(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


_PAIR_RE = re.compile(r"\s*(\d+)\s*<->\s*(\d+)\s*")


def parse_bracket(text: str) -> Graph:
    start = text.find("[")
    end = text.rfind("]")
    if start < 0 or end < start:
        raise InputError("expected a bracketed edge list like [1<->2,2<->3]", line=1, column=1)
    if text[:start].strip() or text[end + 1:].strip():
        line, col = _locate(text, start if text[:start].strip() else end + 1)
        raise InputError("unexpected text outside the brackets", line=line, column=col)
    body = text[start + 1:end]
    edges = []
    seen = set()
    n = 0
    if body.strip():
        pos = start + 1
        for item in body.split(","):
            m = _PAIR_RE.fullmatch(item)
            line, col = _locate(text, pos + len(item) - len(item.lstrip()))
            if not m:
                raise InputError(f"malformed edge {item.strip()!r}", line=line, column=col)
            u, v = int(m.group(1)), int(m.group(2))
            if u < 1 or v < 1:
                raise InputError("bracket format is 1-indexed", line=line, column=col)
            if u == v:
                raise InputError(f"loop {u}<->{v}", line=line, column=col)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InputError(f"duplicate edge {u}<->{v}", line=line, column=col)
            seen.add(key)
            edges.append((u - 1, v - 1))
            n = max(n, u, v)
            pos += len(item) + 1
    return Graph(n, edges)


def parse_lines(text: str) -> Graph:
    header = None
    edges: list[tuple[int, int]] = []
    labels: dict[int, str] = {}
    family = None
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        s = raw.strip()
        if not s:
            continue
        if s.startswith("#"):
            parts = s[1:].split(None, 2)
            if parts and parts[0] == "label":
                if len(parts) < 3 or not parts[1].isdigit():
                    raise InputError("expected '# label <vertex> <text>'", line=lineno, column=1)
                labels[int(parts[1])] = parts[2]
            elif parts and parts[0] == "family":
                fields = s[1:].split()
                try:
                    family = FamilySpec(fields[1], tuple(int(x) for x in fields[2:]))
                except (IndexError, ValueError) as e:
                    raise InputError(f"bad family line: {e}", line=lineno, column=1) from None
            continue
        fields = s.split()
        col = raw.find(fields[0]) + 1
        if len(fields) != 2 or not all(re.fullmatch(r"-?\d+", f) for f in fields):
            raise InputError(f"expected two integers, got {s!r}", line=lineno, column=col)
        a, b = int(fields[0]), int(fields[1])
        if header is None:
            if a < 0 or b < 0:
                raise InputError("header counts must be nonnegative", line=lineno, column=col)
            header = (a, b)
            continue
        n = header[0]
        if not (0 <= a < n and 0 <= b < n):
            raise InputError(f"edge endpoint outside 0..{n - 1}", line=lineno, column=col)
        if a == b:
            raise InputError(f"loop at vertex {a}", line=lineno, column=col)
        key = (min(a, b), max(a, b))
        if key in seen:
            raise InputError(f"duplicate edge {a} {b}", line=lineno, column=col)
        seen.add(key)
        edges.append((a, b))
    if header is None:
        raise InputError("missing 'n m' header line", line=1, column=1)
    n, m = header
    if len(edges) != m:
        raise InputError(f"header promises {m} edges, found {len(edges)}")
    for v in labels:
        if not 0 <= v < n:
            raise InputError(f"label for vertex {v} outside 0..{n - 1}")
    lab = [labels.get(v, str(v)) for v in range(n)] if labels else None
    if family is not None:
        fam = generate(family)
        if fam != Graph(n, edges):
            family = None  # edges were edited; provenance no longer holds
    return Graph(n, edges, lab, family)


def parse_graph(text: str) -> Graph:
    s = text.lstrip()
    if s.startswith("["):
        return parse_bracket(text)
    return parse_lines(text)


def render_bracket(g: Graph) -> str:
    return "[" + ",".join(f"{u + 1}<->{v + 1}" for u, v in g.edge_list) + "]"


def render_lines(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    if g.family is not None:
        out.append("# family " + " ".join([g.family.kind, *map(str, g.family.params)]))
    if g.labels is not None:
        out.extend(f"# label {v} {g.labels[v]}" for v in range(g.n))
    out.extend(f"{u} {v}" for u, v in g.edge_list)
    return "\n".join(out) + "\n"


def parse_cover(text: str, g: Graph | None = None) -> list[int]:
    """One vertex index per line; ``#`` comments allowed."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        s = raw.split("#", 1)[0].strip()
        if not s:
            continue
        if not re.fullmatch(r"\d+", s):
            raise InputError(f"expected a vertex index, got {s!r}", line=lineno, column=raw.find(s) + 1)
        v = int(s)
        if g is not None and v >= g.n:
            raise InputError(f"vertex {v} outside 0..{g.n - 1}", line=lineno, column=raw.find(s) + 1)
        out.append(v)
    return out


def parse_arcs(text: str) -> list[tuple[int, int]]:
    """``u v`` per directed edge (u -> v)."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        s = raw.split("#", 1)[0].strip()
        if not s:
            continue
        fields = s.split()
        if len(fields) != 2 or not all(f.isdigit() for f in fields):
            raise InputError(f"expected 'u v', got {s!r}", line=lineno, column=raw.find(s) + 1)
        out.append((int(fields[0]), int(fields[1])))
    return out


def _dot_id(g: Graph, v: int) -> str:
    return f'{v} [label="{g.label(v)}"];'


def to_dot(g: Graph, orientation: Orientation | None = None) -> str:
    kind = "digraph" if orientation is not None else "graph"
    arrow = "->" if orientation is not None else "--"
    lines = [f"{kind} G {{"]
    lines.extend("  " + _dot_id(g, v) for v in range(g.n))
    if orientation is not None:
        lines.extend(f"  {a} -> {b};" for a, b in sorted(orientation.arcs))
    else:
        lines.extend(f"  {u} {arrow} {v};" for u, v in g.edge_list)
    lines.append("}")
    return "\n".join(lines) + "\n"


def design_to_dot(d: AssemblyDesign) -> str:
    """Directed graph: arrows run from the unhatted end to the hatted end, and
    the colour encodes the bond."""
    g = d.graph
    lines = ["digraph G {"]
    for v in range(g.n):
        t = d.tile(v) if g.degree(v) else None
        text = g.label(v) + (f"\\n{t.pretty()}" if t is not None else "")
        lines.append(f'  {v} [label="{text}"];')
    for (u, v), (b, src) in sorted(d.edge_label.items()):
        dst = v if src == u else u
        colour = _PALETTE[b % len(_PALETTE)]
        lines.append(f'  {src} -> {dst} [color="{colour}", label="{bond_name(b)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
