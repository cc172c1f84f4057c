"""Finite groups as multiplication tables, Cayley graphs, and the
rearrangement <-> rainbow path correspondence.

Elements are integer indices into the table.  Constructors document their
canonical element ordering.  Group laws are checked exhaustively at load for
order <= 512 and spot-checked on random triples above that.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .colored_graph import ColouredDigraph, RainbowPath, RainbowWalk
from .errors import BadSpec, IdentityInS, MalformedInput, NotAGroup, NotAWalkInThisCayleyGraph, PrefixCollision

_EXHAUSTIVE_LAW_CAP = 512
_SPOT_TRIPLES = 20000


@dataclass(frozen=True)
class GroupTable:
    mul: np.ndarray  # (n, n) int64, mul[i, j] = i * j
    inv: np.ndarray = field(init=False, compare=False)
    identity: int = field(init=False, compare=False)
    abelian: bool = field(init=False, compare=False)
    name: str = "table"

    def __post_init__(self):
        mul = np.asarray(self.mul, dtype=np.int64)
        n = mul.shape[0]
        if mul.shape != (n, n):
            raise NotAGroup("multiplication table must be square")
        if n == 0:
            raise NotAGroup("empty table")
        if mul.min() < 0 or mul.max() >= n:
            raise NotAGroup("table entry out of range")
        mul.setflags(write=False)
        object.__setattr__(self, "mul", mul)

        ident = -1
        rng_row = np.arange(n)
        for e in range(n):
            if np.array_equal(mul[e], rng_row) and np.array_equal(mul[:, e], rng_row):
                ident = e
                break
        if ident < 0:
            raise NotAGroup("no identity element")
        object.__setattr__(self, "identity", ident)

        inv = np.full(n, -1, dtype=np.int64)
        for i in range(n):
            hits = np.nonzero(mul[i] == ident)[0]
            if len(hits) != 1 or mul[hits[0], i] != ident:
                raise NotAGroup(f"element {i} lacks a two-sided inverse")
            inv[i] = hits[0]
        inv.setflags(write=False)
        object.__setattr__(self, "inv", inv)

        if n <= _EXHAUSTIVE_LAW_CAP:
            for i in range(n):
                # (i*j)*l == i*(j*l) for all j,l, checked one row at a time
                if not np.array_equal(mul[mul[i]], mul[i][mul]):
                    raise NotAGroup(f"associativity fails at row {i}")
        else:
            rng = np.random.default_rng(0)
            a = rng.integers(0, n, _SPOT_TRIPLES)
            b = rng.integers(0, n, _SPOT_TRIPLES)
            c = rng.integers(0, n, _SPOT_TRIPLES)
            if not np.array_equal(mul[mul[a, b], c], mul[a, mul[b, c]]):
                raise NotAGroup("associativity spot-check failed")
        object.__setattr__(self, "abelian", bool(np.array_equal(mul, mul.T)))

    @property
    def order(self) -> int:
        return self.mul.shape[0]

    def product(self, elems: Sequence[int]) -> int:
        cur = self.identity
        for x in elems:
            cur = int(self.mul[cur, x])
        return cur

    def is_involution(self, x: int) -> bool:
        return x != self.identity and self.mul[x, x] == self.identity


@dataclass(frozen=True)
class GeneratorSet:
    elements: tuple

    def __post_init__(self):
        elems = tuple(sorted(int(x) for x in self.elements))
        if len(set(elems)) != len(elems):
            raise MalformedInput("generator elements must be distinct")
        object.__setattr__(self, "elements", elems)

    @property
    def d(self) -> int:
        return len(self.elements)

    def all_involutions(self, group: GroupTable) -> bool:
        return all(group.is_involution(x) for x in self.elements)


@dataclass(frozen=True)
class Rearrangement:
    ordering: tuple
    partial_products: tuple
    appended_from: int  # index from which elements were appended arbitrarily (= d if none)

    def __post_init__(self):
        object.__setattr__(self, "ordering", tuple(int(x) for x in self.ordering))
        object.__setattr__(self, "partial_products", tuple(int(x) for x in self.partial_products))
        if len(self.ordering) != len(self.partial_products):
            raise MalformedInput("one partial product per ordered element")

    @property
    def distinct_prefix_count(self) -> int:
        return len(set(self.partial_products))


# -- constructors ----------------------------------------------------------


def _cyclic(n: int) -> np.ndarray:
    i = np.arange(n)
    return (i[:, None] + i[None, :]) % n


def _elem2(k: int) -> np.ndarray:
    i = np.arange(1 << k)
    return i[:, None] ^ i[None, :]


def _dihedral(order: int) -> np.ndarray:
    # order 2N; element f*N + r is sigma^f rho^r with sigma^2 = rho^N = e
    if order % 2 or order < 2:
        raise BadSpec("dihedral order must be even and >= 2")
    half = order // 2
    mul = np.zeros((order, order), dtype=np.int64)
    for f1 in (0, 1):
        for r1 in range(half):
            for f2 in (0, 1):
                for r2 in range(half):
                    f = f1 ^ f2
                    r = (r2 + r1) % half if f2 == 0 else (r2 - r1) % half
                    mul[f1 * half + r1, f2 * half + r2] = f * half + r
    return mul


def _quaternion8() -> np.ndarray:
    # elements ordered 1, -1, i, -i, j, -j, k, -k
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    base = {
        ("1", "1"): ("+", "1"), ("i", "i"): ("-", "1"), ("j", "j"): ("-", "1"), ("k", "k"): ("-", "1"),
        ("i", "j"): ("+", "k"), ("j", "k"): ("+", "i"), ("k", "i"): ("+", "j"),
        ("j", "i"): ("-", "k"), ("k", "j"): ("-", "i"), ("i", "k"): ("-", "j"),
        ("1", "i"): ("+", "i"), ("1", "j"): ("+", "j"), ("1", "k"): ("+", "k"),
        ("i", "1"): ("+", "i"), ("j", "1"): ("+", "j"), ("k", "1"): ("+", "k"),
    }
    def split(x):
        return ("-", x[1:]) if x.startswith("-") else ("+", x)
    def join(sign, u):
        return u if sign == "+" else "-" + u
    mul = np.zeros((8, 8), dtype=np.int64)
    for a, na in enumerate(names):
        for b, nb in enumerate(names):
            sa, ua = split(na)
            sb, ub = split(nb)
            sc, uc = base[(ua, ub)]
            sign = "+" if (sa == sb) == (sc == "+") else "-"
            mul[a, b] = names.index(join(sign, uc))
    return mul


def _product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    na, nb = a.shape[0], b.shape[0]
    # element i*nb + j is the pair (i, j)
    ai = np.arange(na * nb) // nb
    bj = np.arange(na * nb) % nb
    return a[ai[:, None], ai[None, :]] * nb + b[bj[:, None], bj[None, :]]


def load_group_table_file(path) -> np.ndarray:
    with open(path) as fh:
        tokens = fh.read().split()
    if not tokens:
        raise BadSpec("empty group table file")
    n = int(tokens[0])
    vals = tokens[1:]
    if len(vals) != n * n:
        raise BadSpec(f"expected {n * n} table entries, got {len(vals)}")
    return np.array([int(v) for v in vals], dtype=np.int64).reshape(n, n)


def build_group(spec: str) -> GroupTable:
    """Build a group from a spec string.

    Accepted forms: ``cyclic:N``, ``elem2:k`` (F_2^k, elements are k-bit
    vectors ordered by integer value), ``dihedral:2N`` (element f*N+r is
    sigma^f rho^r), ``quaternion8``, ``prod:<spec>,<spec>[,...]``
    (component specs must not themselves be products; element (i, j) has
    index i*|B|+j), and ``table:<file>``.
    """
    spec = spec.strip()
    if spec == "quaternion8":
        return GroupTable(_quaternion8(), name=spec)
    if spec.startswith("prod:"):
        parts = spec[len("prod:"):].split(",")
        if len(parts) < 2:
            raise BadSpec("prod needs at least two component specs")
        tables = [build_group(p).mul for p in parts]
        mul = tables[0]
        for t in tables[1:]:
            mul = _product(mul, t)
        return GroupTable(mul, name=spec)
    if spec.startswith("table:"):
        return GroupTable(load_group_table_file(spec[len("table:"):]), name=spec)
    head, sep, arg = spec.partition(":")
    if not sep:
        raise BadSpec(f"unrecognised group spec {spec!r}")
    try:
        val = int(arg)
    except ValueError:
        raise BadSpec(f"numeric argument expected in {spec!r}") from None
    if head == "cyclic":
        if val < 1:
            raise BadSpec("cyclic order must be >= 1")
        return GroupTable(_cyclic(val), name=spec)
    if head == "elem2":
        if not 0 <= val <= 20:
            raise BadSpec("elem2 exponent must be in 0..20")
        return GroupTable(_elem2(val), name=spec)
    if head == "dihedral":
        return GroupTable(_dihedral(val), name=spec)
    raise BadSpec(f"unrecognised group spec {spec!r}")


# -- Cayley graphs ---------------------------------------------------------


def cayley_graph(group: GroupTable, gens) -> ColouredDigraph:
    """Coloured Cayley graph: an edge a -> a*g of colour g for every g in S.

    Colour ids follow the ascending order of the generator elements; the
    element of colour c is ``colour_elements[c]``.  Output is d-regular, and
    flagged undirected exactly when every generator is an involution.
    """
    if not isinstance(gens, GeneratorSet):
        gens = GeneratorSet(tuple(gens))
    if group.identity in gens.elements:
        raise IdentityInS("identity element would create loops")
    n = group.order
    elems = np.array(gens.elements, dtype=np.int64)
    d = len(elems)
    a = np.repeat(np.arange(n), d)
    g = np.tile(np.arange(d), n)
    edges = np.stack([a, group.mul[a, elems[g]], g], axis=1)
    undirected = bool(d) and gens.all_involutions(group)
    return ColouredDigraph(
        n,
        d,
        edges,
        undirected_flag=undirected,
        vertex_transitive=True,
        colour_elements=elems,
        meta={"group": group, "generators": gens},
    )


def ordering_to_path(group: GroupTable, gens, ordering, start: int) -> RainbowPath:
    """Path on the partial products of an ordering, starting at ``start``.

    ``ordering`` is a permutation of the generator elements.  Vertices are
    start * (prefix products); succeeds iff all partial products are
    distinct, else raises PrefixCollision naming the first colliding pair of
    (1-based) prefix positions.  Edge colours are dense colour ids (position
    of the element in the sorted generator set), matching cayley_graph, and
    run from the second ordered element on.
    """
    gens = gens if isinstance(gens, GeneratorSet) else GeneratorSet(tuple(gens))
    elems = gens.elements
    colour_of = {x: i for i, x in enumerate(elems)}
    ordering = tuple(int(x) for x in ordering)
    if tuple(sorted(ordering)) != elems:
        raise MalformedInput("ordering must be a permutation of the generator set")
    prods = []
    cur = group.identity
    for x in ordering:
        cur = int(group.mul[cur, x])
        prods.append(cur)
    seen = {}
    for t, p in enumerate(prods, start=1):
        if p in seen:
            raise PrefixCollision(seen[p], t)
        seen[p] = t
    verts = tuple(int(group.mul[start, p]) for p in prods)
    return RainbowPath(verts, tuple(colour_of[x] for x in ordering[1:]))


def walk_to_rearrangement(group: GroupTable, gens, walk: RainbowWalk) -> Rearrangement:
    """Read an ordering of S off a rainbow walk in Cay(group, S).

    The walk carries dense colour ids; these map back to generator elements
    by ascending order, as in cayley_graph.  The ordering starts with the
    walk's colour sequence; unused generators are appended in ascending
    order (``appended_from`` marks where).  Partial products are taken from
    the identity, so the walk's vertices after the start are
    start * (partial products).
    """
    gens = gens if isinstance(gens, GeneratorSet) else GeneratorSet(tuple(gens))
    elems = gens.elements
    verts, cols = walk.vertices, walk.colours
    if len(verts) == 0:
        raise NotAWalkInThisCayleyGraph("empty walk")
    if len(set(cols)) != len(cols):
        raise NotAWalkInThisCayleyGraph("colour reused")
    for c in cols:
        if not 0 <= c < len(elems):
            raise NotAWalkInThisCayleyGraph(f"colour id {c} out of range")
    for i, c in enumerate(cols):
        if group.mul[verts[i], elems[c]] != verts[i + 1]:
            raise NotAWalkInThisCayleyGraph(f"step {i} is not the colour-{c} Cayley edge")
    ordering = [elems[c] for c in cols]
    appended_from = len(ordering)
    used = set(ordering)
    for x in elems:
        if x not in used:
            ordering.append(x)
    prods = []
    cur = group.identity
    for x in ordering:
        cur = int(group.mul[cur, x])
        prods.append(cur)
    return Rearrangement(tuple(ordering), tuple(prods), appended_from)


def walk_colours_as_elements(g: ColouredDigraph, structure) -> tuple:
    """Map a structure's colour ids to generator elements of a Cayley graph."""
    if g.colour_elements is None:
        raise MalformedInput("graph has no colour -> element map")
    return tuple(int(g.colour_elements[c]) for c in structure.colours)
