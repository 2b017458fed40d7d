"""Laman graphs, Henneberg moves, and reverse construction search.

A graph on n >= 2 vertices is Laman when it has exactly 2n-3 edges and
no induced subgraph on k vertices spans more than 2k-3 edges.  The check
here is the exhaustive definition (all vertex subsets), guarded to small
n, so it can serve as the trusted oracle for everything else.

Henneberg moves come in three flavours:

* type I: add a new degree-2 vertex joined to two existing vertices;
* type I': the same, but the two vertices must already be joined by an
  edge (the parent edge), which is kept;
* type II: remove an existing edge ab and add a new vertex joined to a,
  b and a third vertex.

``find_type1prime_sequence`` searches for a way to build the graph from
a single base edge using type I' moves only, by running the moves
backwards (repeatedly deleting a degree-2 vertex whose neighbours are
adjacent).  Greedy deletion can dead-end, so the search backtracks, with
candidates tried in lexicographic order to keep the answer
deterministic.
"""

from __future__ import annotations

import itertools
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    DuplicateEdge,
    DuplicateVertex,
    InputError,
    MissingParentEdge,
    MissingVertex,
    NotTypeIPrime,
    SelfLoop,
    TooFewVertices,
)
from .limits import SUBGRAPH_SWEEP_MAX_VERTICES, max_vertices

__all__ = [
    "SimpleGraph",
    "LamanCheck",
    "is_laman",
    "apply_henneberg",
    "henneberg_one",
    "henneberg_one_prime",
    "henneberg_two",
    "parse_sequence",
    "realize",
    "find_type1prime_sequence",
]


def _pair(u: str, v: str) -> tuple:
    return (u, v) if u <= v else (v, u)


class SimpleGraph:
    """Immutable undirected simple graph; vertex order is declared order."""

    __slots__ = ("vertices", "edges", "_vset", "_eset", "_hash")

    def __init__(self, vertices: Sequence[str], edges: Iterable):
        vs = tuple(str(v) for v in vertices)
        seen = set()
        for v in vs:
            if v in seen:
                raise DuplicateVertex(f"vertex {v!r} declared twice")
            seen.add(v)
        es = []
        eset = set()
        for edge in edges:
            u, v = edge
            u, v = str(u), str(v)
            for endpoint in (u, v):
                if endpoint not in seen:
                    raise MissingVertex(f"edge {(u, v)!r} references unknown vertex {endpoint!r}")
            if u == v:
                raise SelfLoop(f"self-loop at {u!r}")
            p = _pair(u, v)
            if p in eset:
                raise DuplicateEdge(f"edge {p!r} declared twice")
            eset.add(p)
            es.append(p)
        self.vertices = vs
        self.edges = tuple(es)
        self._vset = seen
        self._eset = eset
        self._hash = hash((vs, frozenset(eset)))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SimpleGraph)
            and self.vertices == other.vertices
            and self._eset == other._eset
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"SimpleGraph({self.vertices!r}, {self.edges!r})"

    @classmethod
    def from_json_dict(cls, obj) -> "SimpleGraph":
        """Accepts the directed-graph schema and forgets direction and ids."""
        if not isinstance(obj, dict):
            raise InputError("graph: top level must be an object")
        verts = obj.get("vertices")
        if not isinstance(verts, list) or not all(isinstance(v, str) for v in verts):
            raise InputError("graph: field 'vertices' must be a list of strings")
        raw_edges = obj.get("edges")
        if not isinstance(raw_edges, list):
            raise InputError("graph: field 'edges' must be a list")
        edges = []
        for k, re in enumerate(raw_edges):
            if isinstance(re, dict):
                try:
                    edges.append((re["tail"], re["head"]))
                except KeyError as exc:
                    raise InputError(
                        f"graph: edges[{k}] is missing field {exc.args[0]!r}"
                    ) from None
            elif isinstance(re, (list, tuple)) and len(re) == 2:
                edges.append(tuple(re))
            else:
                raise InputError(f"graph: edges[{k}] must be an object or a pair")
        return cls(verts, edges)

    def has_vertex(self, v: str) -> bool:
        return v in self._vset

    def has_edge(self, u: str, v: str) -> bool:
        return _pair(str(u), str(v)) in self._eset

    def neighbors(self, v: str) -> tuple:
        out = []
        for a, b in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return tuple(sorted(out))

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))


class LamanCheck(NamedTuple):
    ok: bool
    reason: str | None
    witness: tuple | None

    def __bool__(self) -> bool:
        return self.ok


def is_laman(g: SimpleGraph) -> LamanCheck:
    """Exhaustive Laman test; on failure the reason and witness subset."""
    n = len(g.vertices)
    if n < 2:
        raise TooFewVertices("laman test needs at least 2 vertices")
    guard = max_vertices(SUBGRAPH_SWEEP_MAX_VERTICES)
    if n > guard:
        raise InputError(
            f"exhaustive subgraph sweep limited to {guard} vertices "
            "(set LAMANCHIRAL_MAX_VERTICES to override)"
        )
    m = len(g.edges)
    target = 2 * n - 3
    if m != target:
        op = ">" if m > target else "<"
        return LamanCheck(False, f"|E|={m} {op} 2|V|-3={target}", None)
    order = sorted(g.vertices)
    for k in range(2, n):  # the full set already passed the count check
        cap = 2 * k - 3
        for subset in itertools.combinations(order, k):
            inside = set(subset)
            count = sum(1 for a, b in g.edges if a in inside and b in inside)
            if count > cap:
                return LamanCheck(
                    False,
                    f"induced subgraph {{{','.join(subset)}}} has {count} edges"
                    f" > 2*{k}-3={cap}",
                    subset,
                )
    return LamanCheck(True, None, None)


# --- Henneberg moves ---------------------------------------------------


def _check_new_vertex(g: SimpleGraph, new: str) -> None:
    if g.has_vertex(new):
        raise DuplicateVertex(f"vertex {new!r} already present")


def _check_existing(g: SimpleGraph, *vertices: str) -> None:
    for v in vertices:
        if not g.has_vertex(v):
            raise MissingVertex(f"unknown vertex {v!r}")


def henneberg_one(g: SimpleGraph, new: str, a: str, b: str) -> SimpleGraph:
    """Type I: join a fresh vertex to two distinct existing vertices."""
    new, a, b = str(new), str(a), str(b)
    _check_existing(g, a, b)
    _check_new_vertex(g, new)
    if a == b:
        raise SelfLoop(f"attachment vertices coincide at {a!r}")
    return SimpleGraph(g.vertices + (new,), g.edges + ((new, a), (new, b)))


def henneberg_one_prime(g: SimpleGraph, new: str, parent) -> SimpleGraph:
    """Type I': like type I, but the attachment pair must be an existing edge."""
    a, b = (str(x) for x in parent)
    _check_existing(g, a, b)
    if not g.has_edge(a, b):
        raise MissingParentEdge(f"parent edge {(a, b)!r} is not in the graph")
    return henneberg_one(g, new, a, b)


def henneberg_two(g: SimpleGraph, new: str, removed, third: str) -> SimpleGraph:
    """Type II: split an existing edge ab onto a fresh vertex, plus a third spoke."""
    a, b = (str(x) for x in removed)
    new, third = str(new), str(third)
    _check_existing(g, a, b, third)
    _check_new_vertex(g, new)
    if not g.has_edge(a, b):
        raise MissingParentEdge(f"edge {(a, b)!r} is not in the graph")
    if third in (a, b):
        raise InputError("third attachment must differ from the removed edge's ends")
    kept = tuple(e for e in g.edges if e != _pair(a, b))
    return SimpleGraph(g.vertices + (new,), kept + ((new, a), (new, b), (new, third)))


_MOVES = {"I": (henneberg_one, 2), "Iprime": (henneberg_one_prime, 1), "II": (henneberg_two, 2)}


def apply_henneberg(g: SimpleGraph, move_type: str, new: str, *args) -> SimpleGraph:
    """Dispatch on move type: "I" (new, a, b), "Iprime" (new, parent edge),
    "II" (new, removed edge, third vertex)."""
    try:
        move, arity = _MOVES[move_type]
    except KeyError:
        raise InputError(
            f"unknown henneberg move {move_type!r}; expected one of I, Iprime, II"
        ) from None
    if len(args) != arity:
        raise InputError(
            f"henneberg {move_type} takes {arity} argument(s) after the new "
            f"vertex, got {len(args)}"
        )
    return move(g, new, *args)


# --- construction sequences ----------------------------------------------


def parse_sequence(obj) -> tuple:
    """Validate the JSON shape of a type-I' construction sequence.

    ``{"base": ["o", "1"], "moves": [{"parent": ["1", "o"], "new": "2"}, ...]}``
    Returns ``((o, v1), [((a, b), new), ...])``.
    """
    if not isinstance(obj, dict):
        raise InputError("sequence: top level must be an object")
    base = obj.get("base")
    if (
        not isinstance(base, (list, tuple))
        or len(base) != 2
        or not all(isinstance(x, str) for x in base)
    ):
        raise InputError("sequence: field 'base' must be a pair of vertex names")
    if base[0] == base[1]:
        raise SelfLoop("sequence: base edge endpoints coincide")
    moves_raw = obj.get("moves", [])
    if not isinstance(moves_raw, list):
        raise InputError("sequence: field 'moves' must be a list")
    moves = []
    for k, mv in enumerate(moves_raw):
        if not isinstance(mv, dict):
            raise InputError(f"sequence: moves[{k}] must be an object")
        parent = mv.get("parent")
        if (
            not isinstance(parent, (list, tuple))
            or len(parent) != 2
            or not all(isinstance(x, str) for x in parent)
        ):
            raise InputError(f"sequence: moves[{k}].parent must be a pair of vertex names")
        new = mv.get("new")
        if not isinstance(new, str):
            raise InputError(f"sequence: moves[{k}].new must be a vertex name")
        moves.append(((parent[0], parent[1]), new))
    return (base[0], base[1]), moves


def realize(seq) -> SimpleGraph:
    """Run a parsed (or JSON-shaped) type-I' sequence from its base edge."""
    if isinstance(seq, dict):
        seq = parse_sequence(seq)
    (o, v1), moves = seq
    g = SimpleGraph((o, v1), ((o, v1),))
    for k, (parent, new) in enumerate(moves):
        try:
            g = henneberg_one_prime(g, new, parent)
        except InputError as exc:
            raise type(exc)(f"move {k}: {exc}") from None
    return g


def find_type1prime_sequence(g: SimpleGraph, o: str, e) -> dict:
    """Find a type-I' construction of ``g`` from base vertex ``o`` along edge ``e``.

    Reverse search with backtracking: repeatedly delete a degree-2
    vertex whose neighbours are adjacent, trying candidates in
    lexicographic order, until only the base edge is left.  Raises
    ``NotTypeIPrime`` when no deletion order works.
    """
    o = str(o)
    a, b = (str(x) for x in e)
    if o not in (a, b):
        raise InputError(f"base vertex {o!r} is not an endpoint of edge {(a, b)!r}")
    v1 = b if o == a else a
    _check_existing(g, o, v1)
    if not g.has_edge(o, v1):
        raise NotTypeIPrime(f"base {(o, v1)!r} is not an edge of the graph")
    guard = max_vertices(SUBGRAPH_SWEEP_MAX_VERTICES)
    if len(g.vertices) > guard:
        raise InputError(
            f"construction search limited to {guard} vertices "
            "(set LAMANCHIRAL_MAX_VERTICES to override)"
        )

    base_edges = frozenset({_pair(o, v1)})
    dead_ends: set = set()

    def search(edges: frozenset, removals: tuple):
        if edges == base_edges:
            return removals
        if edges in dead_ends:
            return None
        degree: dict = {}
        adj: dict = {}
        for a, b in edges:
            degree[a] = degree.get(a, 0) + 1
            degree[b] = degree.get(b, 0) + 1
            adj.setdefault(a, set()).add(b)
            adj.setdefault(b, set()).add(a)
        for v in sorted(degree):
            if v in (o, v1) or degree[v] != 2:
                continue
            a, b = sorted(adj[v])
            if b not in adj[a]:
                continue  # neighbours not adjacent: not a reverse type-I' spot
            rest = frozenset(e for e in edges if v not in e)
            result = search(rest, removals + ((_pair(a, b), v),))
            if result is not None:
                return result
        dead_ends.add(edges)
        return None

    removals = search(frozenset(g._eset), ())
    if removals is None:
        raise NotTypeIPrime(
            f"no construction from base {(o, v1)!r} using only edge-preserving"
            " vertex additions"
        )
    moves = [
        {"parent": [a, b], "new": v} for (a, b), v in reversed(removals)
    ]
    return {"base": [o, v1], "moves": moves}
