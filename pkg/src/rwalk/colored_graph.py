"""Immutable coloured digraphs and validation of rainbow structures.

A :class:`ColouredDigraph` stores its edges both as flat arrays and, when the
colouring is proper, as dense (n, k) colour-indexed neighbour matrices
(``out_nbr[v, c]`` / ``in_nbr[v, c]``), which is what the search kernels
consume.  Graphs are immutable after construction; passing to a subgraph goes
through :func:`induced_subgraph`, which keeps a back-map to the parent's
vertex ids.  Colour ids are dense integers ``0..k-1`` and subgraphs keep the
parent's colour universe.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .errors import ImproperColouring, MalformedInput


@dataclass(frozen=True)
class ColouredDigraph:
    n: int
    k: int
    edges: np.ndarray  # (m, 3) int64 rows (src, dst, colour)
    undirected_flag: bool = False
    vertex_transitive: bool = False
    # colour id -> group element, for Cayley graphs (kept by group_cayley)
    colour_elements: Optional[np.ndarray] = None
    meta: dict = field(default_factory=dict, compare=False)
    # filled in __post_init__
    out_nbr: np.ndarray = field(init=False, compare=False)
    in_nbr: np.ndarray = field(init=False, compare=False)
    proper: bool = field(init=False, compare=False)

    def __post_init__(self):
        edges = np.asarray(self.edges, dtype=np.int64).reshape(-1, 3)
        object.__setattr__(self, "edges", edges)
        n, k, m = self.n, self.k, len(edges)
        if n < 0 or k < 0:
            raise MalformedInput("negative vertex or colour count")
        if m:
            if edges[:, :2].min() < 0 or edges[:, :2].max() >= n:
                raise MalformedInput("edge endpoint out of range")
            if edges[:, 2].min() < 0 or edges[:, 2].max() >= k:
                raise MalformedInput("edge colour out of range")
            if (edges[:, 0] == edges[:, 1]).any():
                raise MalformedInput("loops are not allowed")
            pair_ids = edges[:, 0] * n + edges[:, 1]
            if len(np.unique(pair_ids)) != m:
                raise MalformedInput("duplicate ordered pair (u,v)")
        edges.setflags(write=False)

        violations = _properness_violations(n, k, edges)
        proper = len(violations) == 0
        object.__setattr__(self, "proper", proper)
        if proper:
            out_nbr = np.full((n, k), -1, dtype=np.int64)
            in_nbr = np.full((n, k), -1, dtype=np.int64)
            if m:
                out_nbr[edges[:, 0], edges[:, 2]] = edges[:, 1]
                in_nbr[edges[:, 1], edges[:, 2]] = edges[:, 0]
            out_nbr.setflags(write=False)
            in_nbr.setflags(write=False)
        else:
            out_nbr = in_nbr = None
        object.__setattr__(self, "out_nbr", out_nbr)
        object.__setattr__(self, "in_nbr", in_nbr)

    # -- basic queries ----------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def out_degrees(self) -> np.ndarray:
        return np.bincount(self.edges[:, 0], minlength=self.n)

    def in_degrees(self) -> np.ndarray:
        return np.bincount(self.edges[:, 1], minlength=self.n)

    def colours_used(self) -> np.ndarray:
        """Boolean mask over 0..k-1 of colours appearing on some edge."""
        mask = np.zeros(self.k, dtype=bool)
        if self.m:
            mask[self.edges[:, 2]] = True
        return mask

    def edge_colour(self, u: int, v: int) -> int:
        """Colour of the edge u->v, or -1 if absent (proper graphs only)."""
        row = self.out_nbr[u]
        hits = np.nonzero(row == v)[0]
        return int(hits[0]) if len(hits) else -1

    def has_edge(self, u: int, v: int, c: int) -> bool:
        if self.proper:
            return self.out_nbr[u, c] == v
        e = self.edges
        return bool(((e[:, 0] == u) & (e[:, 1] == v) & (e[:, 2] == c)).any())

    def transpose(self) -> "ColouredDigraph":
        flipped = self.edges[:, [1, 0, 2]].copy()
        return ColouredDigraph(
            self.n,
            self.k,
            flipped,
            undirected_flag=self.undirected_flag,
            vertex_transitive=self.vertex_transitive,
            colour_elements=self.colour_elements,
        )


def _properness_violations(n, k, edges):
    """All pairs of edges sharing tail+colour or head+colour."""
    out = []
    if not len(edges):
        return out
    for endpoint, reason in ((0, "shared start-vertex"), (1, "shared end-vertex")):
        key = edges[:, endpoint] * k + edges[:, 2]
        order = np.argsort(key, kind="stable")
        sk = key[order]
        runs = np.nonzero(sk[1:] == sk[:-1])[0]
        for i in runs:
            e1 = tuple(edges[order[i]])
            e2 = tuple(edges[order[i + 1]])
            out.append((e1, e2, reason))
    return out


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def validate_proper_colouring(g: ColouredDigraph) -> ValidationReport:
    """Report every pair of edges violating properness; empty iff proper."""
    return ValidationReport(tuple(_properness_violations(g.n, g.k, g.edges)))


def symmetrize(n: int, k: int, undirected_edges: Sequence[tuple]) -> ColouredDigraph:
    """Build the symmetric digraph of an undirected properly coloured graph.

    ``undirected_edges`` holds (u, v, c) triples with u != v; both
    orientations get colour c.  Raises ImproperColouring when two edges at a
    shared vertex carry the same colour.
    """
    seen_pairs = set()
    incident = set()
    for u, v, c in undirected_edges:
        if u == v:
            raise MalformedInput("loops are not allowed")
        key = (min(u, v), max(u, v))
        if key in seen_pairs:
            raise MalformedInput(f"duplicate undirected pair {key}")
        seen_pairs.add(key)
        for x in (u, v):
            if (x, c) in incident:
                raise ImproperColouring(f"colour {c} repeated at vertex {x}")
            incident.add((x, c))
    both = []
    for u, v, c in undirected_edges:
        both.append((u, v, c))
        both.append((v, u, c))
    arr = np.array(both, dtype=np.int64).reshape(-1, 3)
    return ColouredDigraph(n, k, arr, undirected_flag=True)


@dataclass(frozen=True)
class InducedSubgraph:
    graph: ColouredDigraph
    back_map: np.ndarray  # new vertex id -> parent vertex id

    def to_parent_vertices(self, verts):
        return self.back_map[np.asarray(verts, dtype=np.int64)]


def induced_subgraph(g: ColouredDigraph, vertices, colours) -> InducedSubgraph:
    """Subgraph on the given vertex set restricted to the given colours.

    Vertex ids are remapped to 0..|V'|-1 (back-map retained); colour ids keep
    the parent's universe so colour bookkeeping stays aligned across
    subgraphs.
    """
    vs = np.unique(np.asarray(list(vertices), dtype=np.int64)) if not isinstance(vertices, np.ndarray) else np.unique(vertices.astype(np.int64))
    if len(vs) and (vs.min() < 0 or vs.max() >= g.n):
        raise MalformedInput("vertex out of range")
    cmask = np.zeros(g.k, dtype=bool)
    cidx = np.asarray(list(colours), dtype=np.int64) if not isinstance(colours, np.ndarray) else colours.astype(np.int64)
    if len(cidx):
        if cidx.min() < 0 or cidx.max() >= g.k:
            raise MalformedInput("colour out of range")
        cmask[cidx] = True
    vmask = np.zeros(g.n, dtype=bool)
    vmask[vs] = True
    remap = np.full(g.n, -1, dtype=np.int64)
    remap[vs] = np.arange(len(vs))
    e = g.edges
    if len(e):
        keep = vmask[e[:, 0]] & vmask[e[:, 1]] & cmask[e[:, 2]]
        sub = e[keep].copy()
        sub[:, 0] = remap[sub[:, 0]]
        sub[:, 1] = remap[sub[:, 1]]
    else:
        sub = e[:0]
    sg = ColouredDigraph(len(vs), g.k, sub, undirected_flag=g.undirected_flag)
    return InducedSubgraph(sg, vs)


# -- rainbow structures --------------------------------------------------


@dataclass(frozen=True)
class RainbowPath:
    vertices: tuple
    colours: tuple

    def __post_init__(self):
        if len(self.vertices) == 0 and len(self.colours) != 0:
            raise MalformedInput("colours without vertices")
        if len(self.vertices) > 0 and len(self.colours) != len(self.vertices) - 1:
            raise MalformedInput("path needs len(colours) == len(vertices) - 1")
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))
        object.__setattr__(self, "colours", tuple(int(c) for c in self.colours))

    @property
    def length(self) -> int:
        return len(self.colours)

    def reversed(self) -> "RainbowPath":
        return RainbowPath(tuple(reversed(self.vertices)), tuple(reversed(self.colours)))


@dataclass(frozen=True)
class RainbowWalk:
    vertices: tuple
    colours: tuple

    def __post_init__(self):
        if len(self.vertices) > 0 and len(self.colours) != len(self.vertices) - 1:
            raise MalformedInput("walk needs len(colours) == len(vertices) - 1")
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))
        object.__setattr__(self, "colours", tuple(int(c) for c in self.colours))

    @property
    def length(self) -> int:
        return len(self.colours)

    @property
    def repetition_count(self) -> int:
        """Number of vertex repetitions: |C(P)| + 1 - |distinct vertices|."""
        if not self.vertices:
            return 0
        return len(self.colours) + 1 - len(set(self.vertices))


@dataclass(frozen=True)
class PathForest:
    paths: tuple

    def __post_init__(self):
        object.__setattr__(self, "paths", tuple(self.paths))

    @property
    def component_count(self) -> int:
        return len(self.paths)

    @property
    def total_edges(self) -> int:
        return sum(p.length for p in self.paths)

    def vertex_set(self) -> set:
        out = set()
        for p in self.paths:
            out.update(p.vertices)
        return out

    def colour_set(self) -> set:
        out = set()
        for p in self.paths:
            out.update(p.colours)
        return out


@dataclass(frozen=True)
class RainbowCheck:
    ok: bool
    code: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def _check_path(g: ColouredDigraph, verts, cols, need_distinct_vertices) -> RainbowCheck:
    if len(verts) == 0:
        return RainbowCheck(True)
    for v in verts:
        if not (0 <= v < g.n):
            return RainbowCheck(False, "VertexOutOfRange")
    if need_distinct_vertices and len(set(verts)) != len(verts):
        return RainbowCheck(False, "VertexRepeated")
    if len(set(cols)) != len(cols):
        return RainbowCheck(False, "ColourRepeated")
    for i, c in enumerate(cols):
        if not (0 <= c < g.k):
            return RainbowCheck(False, "ColourOutOfRange")
        if not g.has_edge(verts[i], verts[i + 1], c):
            return RainbowCheck(False, "EdgeMissing")
    return RainbowCheck(True)


def validate_rainbow(g: ColouredDigraph, structure) -> RainbowCheck:
    """True iff the structure's invariants hold against g.

    Accepts RainbowPath, RainbowWalk, or PathForest; failures carry a reason
    code instead of raising.
    """
    if isinstance(structure, RainbowPath):
        return _check_path(g, structure.vertices, structure.colours, True)
    if isinstance(structure, RainbowWalk):
        return _check_path(g, structure.vertices, structure.colours, False)
    if isinstance(structure, PathForest):
        seen_v = set()
        seen_c = set()
        for p in structure.paths:
            res = _check_path(g, p.vertices, p.colours, True)
            if not res:
                return res
            if seen_v & set(p.vertices):
                return RainbowCheck(False, "VertexShared")
            if seen_c & set(p.colours):
                return RainbowCheck(False, "ColourShared")
            seen_v.update(p.vertices)
            seen_c.update(p.colours)
        return RainbowCheck(True)
    return RainbowCheck(False, "UnknownStructure")


@dataclass(frozen=True)
class DegreeStats:
    min_out: int
    min_in: int
    max_out: int
    max_in: int
    avg_out: float
    per_colour: np.ndarray


def degree_stats(g: ColouredDigraph) -> DegreeStats:
    outd = g.out_degrees()
    ind = g.in_degrees()
    per_colour = np.bincount(g.edges[:, 2], minlength=g.k) if g.m else np.zeros(g.k, dtype=np.int64)
    if g.n == 0:
        return DegreeStats(0, 0, 0, 0, 0.0, per_colour)
    return DegreeStats(
        int(outd.min()),
        int(ind.min()),
        int(outd.max()),
        int(ind.max()),
        float(outd.mean()),
        per_colour,
    )
