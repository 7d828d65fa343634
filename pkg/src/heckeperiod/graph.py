"""Bounded windows of the left-multiplication graph on determinant-m matrices.

The infinite graph has one vertex per projective matrix of determinant m and
directed edges g -> Ug and g -> Sg.  A window materializes every vertex
whose canonical entries are at most a box bound in absolute value, keeps the
edges with both endpoints inside, and labels each vertex "+" or "-" by
nonnegativity.  Interior vertices (U g, U^2 g and S g all inside) see the
same local structure as the infinite graph, so cycle and label statements
are asserted on them; boundary vertices record their missing neighbours.

Since S^2 = U^3 = 1 and the left action is free, every vertex generates a
two-cycle (g, Sg) and a three-cycle (g, Ug, U^2 g); the cycle search
verifies that nothing else occurs.
"""

from __future__ import annotations

from collections import namedtuple

from .matrices import GradingError, ProjMatrix, S, U
from .sums import FormalSum

__all__ = [
    "MonoidGraph",
    "Cycle",
    "Fragment",
    "build_graph",
    "find_cycles",
    "scan_label_rules",
    "support_subgraph",
    "to_dot",
]

U2 = U * U

Cycle = namedtuple("Cycle", ["vertices", "kind", "interior"])
Fragment = namedtuple("Fragment", ["labels", "s_edges", "u_triangles"])


class MonoidGraph:
    """Window of the determinant-m graph with entries bounded by ``bound``."""

    def __init__(self, grade, bound, vertices):
        self.grade = grade
        self.bound = bound
        self.vertices = vertices  # sorted list of ProjMatrix
        self.index = {g: i for i, g in enumerate(vertices)}
        self.u_next = [self.index.get(U * g) for g in vertices]
        self.s_next = [self.index.get(S * g) for g in vertices]
        self.u_prev = [self.index.get(U2 * g) for g in vertices]
        self.labels = [g.is_nonneg() for g in vertices]
        self.interior = [
            u is not None and s is not None and p is not None
            for u, s, p in zip(self.u_next, self.s_next, self.u_prev)
        ]

    def __contains__(self, g):
        return g in self.index

    def label(self, g):
        return self.labels[self.index[g]]

    def is_interior(self, g):
        return self.interior[self.index[g]]

    def missing_neighbors(self, g):
        """Which of the neighbours Ug, U^2g, Sg fall outside the window."""
        i = self.index[g]
        out = []
        if self.u_next[i] is None:
            out.append("U")
        if self.u_prev[i] is None:
            out.append("U2")
        if self.s_next[i] is None:
            out.append("S")
        return out

    def edges(self):
        """Directed in-window edges as (source, target, kind) triples."""
        for i, g in enumerate(self.vertices):
            if self.u_next[i] is not None:
                yield g, self.vertices[self.u_next[i]], "U"
            if self.s_next[i] is not None:
                yield g, self.vertices[self.s_next[i]], "S"


def _window_elements(m, bound):
    out = set()
    for d in range(1, bound + 1):
        if m % d:
            continue
        a = m // d
        if a > bound:
            continue
        for b in range(-bound, bound + 1):
            out.add(ProjMatrix(a, b, 0, d))
    for c in range(1, bound + 1):
        for a in range(-bound, bound + 1):
            for d in range(-bound, bound + 1):
                num = a * d - m
                if num % c:
                    continue
                b = num // c
                if -bound <= b <= bound:
                    out.add(ProjMatrix(a, b, c, d))
    return out


def build_graph(m: int, bound: int) -> MonoidGraph:
    if bound < 1:
        raise ValueError("bound must be >= 1, got %r" % (bound,))
    if m < 1:
        raise GradingError("grade must be >= 1, got %r" % (m,))
    return MonoidGraph(m, bound, sorted(_window_elements(m, bound)))


def _classify(graph, seq):
    verts = [graph.vertices[i] for i in seq]
    if len(seq) == 2 and verts[1] == S * verts[0]:
        return "S-segment"
    if len(seq) == 3 and verts[1] == U * verts[0] and verts[2] == U * verts[1]:
        return "U-triangle"
    return "other"


def find_cycles(graph: MonoidGraph, max_len: int, interior_only: bool = True):
    """One representative per rotation class of directed cycles.

    A cycle is a closed vertex sequence with pairwise distinct vertices
    (hence distinct edges) whose consecutive pairs are U- or S-edges.  Each
    class is reported once, rotated to start at its smallest vertex.  With
    ``interior_only`` the search is restricted to interior vertices, where
    the window proves the same statement as the infinite graph.
    """
    if max_len < 2:
        raise ValueError("max_len must be >= 2")
    allowed = graph.interior if interior_only else [True] * len(graph.vertices)
    found = []
    u_next, s_next = graph.u_next, graph.s_next
    for start in range(len(graph.vertices)):
        if not allowed[start]:
            continue
        path = [start]
        onpath = {start}

        def dfs(v):
            for w in (u_next[v], s_next[v]):
                if w is None or not allowed[w]:
                    continue
                if w == start:
                    if len(path) >= 2:
                        seq = tuple(path)
                        found.append(
                            Cycle(
                                tuple(graph.vertices[i] for i in seq),
                                _classify(graph, seq),
                                all(graph.interior[i] for i in seq),
                            )
                        )
                elif w > start and w not in onpath and len(path) < max_len:
                    path.append(w)
                    onpath.add(w)
                    dfs(w)
                    path.pop()
                    onpath.remove(w)

        dfs(start)
    return found


def scan_label_rules(graph: MonoidGraph):
    """Check the local nonnegativity rules at every interior vertex.

    For interior g with neighbours Ug, U^2 g, Sg:

    1. g, Ug and U^2 g are never all labeled "+";
    2. if Ug and U^2 g are both "+", then Sg is "+";
    3. if g is "+", then Sg is "-".

    Returns the list of violations (expected empty).
    """
    bad = []
    lab = graph.labels
    for i, g in enumerate(graph.vertices):
        if not graph.interior[i]:
            continue
        lu, lp, ls = lab[graph.u_next[i]], lab[graph.u_prev[i]], lab[graph.s_next[i]]
        if lab[i] and lu and lp:
            bad.append({"rule": 1, "vertex": g.as_tuple()})
        if lu and lp and not ls:
            bad.append({"rule": 2, "vertex": g.as_tuple()})
        if lab[i] and ls:
            bad.append({"rule": 3, "vertex": g.as_tuple()})
    return bad


def support_subgraph(A: FormalSum, B: FormalSum) -> Fragment:
    """Fragment spanned by the S-segments of A's support and the U-triangles
    of B's support, in the undirected picture (edges {g, Sg} identified).
    """
    if A.grade != B.grade:
        raise GradingError(
            "fragment needs equal grades, got %d and %d" % (A.grade, B.grade)
        )
    labels = {}
    s_edges = set()
    u_tris = set()
    for g in A.support():
        sg = S * g
        labels[g] = g.is_nonneg()
        labels[sg] = sg.is_nonneg()
        s_edges.add(tuple(sorted((g, sg))))
    for h in B.support():
        uh = U * h
        uuh = U * uh
        tri = (h, uh, uuh)
        for v in tri:
            labels[v] = v.is_nonneg()
        shift = min(range(3), key=lambda i: tri[i])
        u_tris.add(tri[shift:] + tri[:shift])
    return Fragment(labels, sorted(s_edges), sorted(u_tris))


def to_dot(graph: MonoidGraph) -> str:
    """DOT text: vertices named by canonical 4-tuple, sign labels, U/S edges."""
    name = lambda g: ",".join(str(x) for x in g.as_tuple())
    lines = ["digraph monoid {"]
    for i, g in enumerate(graph.vertices):
        lines.append('  "%s" [label="%s"];' % (name(g), "+" if graph.labels[i] else "-"))
    for g, h, kind in graph.edges():
        lines.append('  "%s" -> "%s" [label="%s"];' % (name(g), name(h), kind))
    lines.append("}")
    return "\n".join(lines)
