"""The pair of graded graphs on binary tree shapes and their Fomin duality.

In ``Gamma`` there is an edge T -> T' when P_T' occurs in P_T P_bullet; in
``Gamma*`` when Q_T' occurs in Q_T Q_bullet.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from math import factorial
from typing import Optional

from .pbt import p_product, q_dual_product
from .trees import LEAF_SHAPE, Tree, enumerate_shapes, serialize_tree, size

Edge = tuple[Tree, Tree]


class NonSimpleEdge(ArithmeticError):
    pass


def gamma_edges(n: int) -> set[Edge]:
    """Edges from level n to level n+1 of Gamma."""
    out = set()
    for t in enumerate_shapes(n):
        for u, c in p_product(t, LEAF_SHAPE).items():
            if c != 1:
                raise NonSimpleEdge(f"P[{serialize_tree(t)}] P_bullet has coefficient {c}")
            out.add((t, u))
    return out


def gamma_star_edges(n: int, m: Optional[int] = None) -> set[Edge]:
    """Edges from level n to level n+1 of Gamma*, computed at alphabet size m."""
    if m is None:
        m = n + 1
    if m < n + 1:
        raise ValueError(f"alphabet size {m} below {n + 1}")
    out = set()
    for t in enumerate_shapes(n):
        for u, c in q_dual_product(t, LEAF_SHAPE, m).items():
            if c != 1:
                raise NonSimpleEdge(f"Q[{serialize_tree(t)}] Q_bullet has coefficient {c}")
            out.add((t, u))
    return out


@dataclass(frozen=True)
class GradedGraph:
    name: str
    levels: dict[int, tuple[Tree, ...]]
    edges: frozenset[Edge]

    @property
    def top(self) -> int:
        return max(self.levels)

    def up(self, t: Tree) -> list[Tree]:
        return [b for a, b in self._adjacency()[0].get(t, ())]

    def down(self, t: Tree) -> list[Tree]:
        return [a for a, b in self._adjacency()[1].get(t, ())]

    def _adjacency(self):
        cache = self.__dict__.get("_adj")
        if cache is None:
            ups: dict = defaultdict(list)
            downs: dict = defaultdict(list)
            for a, b in self.edges:
                ups[a].append((a, b))
                downs[b].append((a, b))
            cache = (ups, downs)
            object.__setattr__(self, "_adj", cache)
        return cache

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "levels": {str(n): [serialize_tree(t) for t in ts] for n, ts in sorted(self.levels.items())},
            "adjacency": {
                serialize_tree(t): sorted(serialize_tree(u) for u in self.up(t))
                for n in sorted(self.levels)
                for t in self.levels[n]
                if n < self.top
            },
        }


def build_gamma(n_max: int) -> GradedGraph:
    edges: set = set()
    for n in range(n_max):
        edges |= gamma_edges(n)
    return GradedGraph("Gamma", {n: enumerate_shapes(n) for n in range(n_max + 1)}, frozenset(edges))


def build_gamma_star(n_max: int) -> GradedGraph:
    edges: set = set()
    for n in range(n_max):
        edges |= gamma_star_edges(n)
    return GradedGraph("Gamma*", {n: enumerate_shapes(n) for n in range(n_max + 1)}, frozenset(edges))


def _apply(step, vector: dict) -> dict:
    out: dict = defaultdict(int)
    for t, c in vector.items():
        for u in step(t):
            out[u] += c
    return {t: c for t, c in out.items() if c}


def commutator_defect(up_graph: GradedGraph, down_graph: GradedGraph, t: Tree) -> dict:
    """(DU - UD)(t) - t, with U from up_graph and D from down_graph."""
    du = _apply(down_graph.down, _apply(up_graph.up, {t: 1}))
    ud = _apply(up_graph.up, _apply(down_graph.down, {t: 1}))
    out = defaultdict(int, du)
    for u, c in ud.items():
        out[u] -= c
    out[t] -= 1
    return {u: c for u, c in out.items() if c}


ORIENTATIONS = {"Gamma-up/Gamma*-down": ("Gamma", "Gamma*"), "Gamma*-up/Gamma-down": ("Gamma*", "Gamma")}


def orientation_gate(gamma: GradedGraph, gamma_star: GradedGraph, n_max: int = 3) -> list[str]:
    """Orientations whose DU - UD = Id holds on levels <= n_max (n_max < top)."""
    graphs = {"Gamma": gamma, "Gamma*": gamma_star}
    good = []
    for name, (u, d) in ORIENTATIONS.items():
        if all(
            not commutator_defect(graphs[u], graphs[d], t)
            for n in range(min(n_max, gamma.top - 1) + 1)
            for t in gamma.levels[n]
        ):
            good.append(name)
    return good


@dataclass
class DualityResult:
    ok: bool
    orientation: Optional[str]
    passing_orientations: list[str] = field(default_factory=list)
    counterexample: Optional[str] = None
    defect: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok


def fomin_duality_check(n_max: int, gamma: GradedGraph = None, gamma_star: GradedGraph = None) -> DualityResult:
    """Check DU - UD = Id on every level <= n_max.

    The orientation is the first one passing the gate on levels <= 3,
    preferring U from Gamma and D from Gamma*.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    gamma = gamma or build_gamma(n_max + 1)
    gamma_star = gamma_star or build_gamma_star(n_max + 1)
    passing = orientation_gate(gamma, gamma_star)
    if not passing:
        return DualityResult(False, None, [], "no orientation passes on levels <= 3")
    orientation = passing[0]
    graphs = {"Gamma": gamma, "Gamma*": gamma_star}
    u, d = ORIENTATIONS[orientation]
    for n in range(n_max + 1):
        for t in gamma.levels[n]:
            defect = commutator_defect(graphs[u], graphs[d], t)
            if defect:
                return DualityResult(
                    False,
                    orientation,
                    passing,
                    serialize_tree(t),
                    {serialize_tree(k): c for k, c in defect.items()},
                )
    return DualityResult(True, orientation, passing)


def count_paths(graph: GradedGraph, n: int) -> dict[Tree, int]:
    """Number of saturated chains from the empty tree to each shape of level n."""
    counts: dict = {None: 1}
    for k in range(n):
        nxt: dict = defaultdict(int)
        for t, c in counts.items():
            for u in graph.up(t):
                nxt[u] += c
        counts = nxt
    return {t: counts.get(t, 0) for t in graph.levels[n]}


def path_counts(n: int, gamma: GradedGraph = None, gamma_star: GradedGraph = None) -> dict[Tree, tuple[int, int]]:
    """T -> (paths in Gamma, paths in Gamma*) from the empty tree."""
    gamma = gamma or build_gamma(n)
    gamma_star = gamma_star or build_gamma_star(n)
    f = count_paths(gamma, n)
    fs = count_paths(gamma_star, n)
    return {t: (f[t], fs[t]) for t in enumerate_shapes(n)}


def path_identity_holds(n: int, counts: dict[Tree, tuple[int, int]]) -> bool:
    return sum(a * b for a, b in counts.values()) == factorial(n)


def level_sizes(graph: GradedGraph) -> list[int]:
    return [len(graph.levels[n]) for n in sorted(graph.levels)]


def edges_respect_grading(graph: GradedGraph) -> bool:
    return all(size(b) == size(a) + 1 for a, b in graph.edges)
