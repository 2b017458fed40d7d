"""Directed multigraphs, weighted Laplacians and graphic Green's functions.

Everything here is exact.  Edge weights are either positive rationals or
the symbolic weight ``t_<edge>``; matrix entries are ``RatFun`` values.

The two classical determinant identities are implemented twice on
purpose.  ``kirchhoff_det`` computes the spanning-tree sum and checks it
against a fraction-free determinant of the weighted Laplacian;
``laplacian_inverse`` computes the cut-set formula and checks it against
the adjugate inverse.  The routes share no code beyond the polynomial
arithmetic, so agreement is a real consistency test, and a disagreement
raises ``VerificationError`` instead of returning silently wrong data.

Conventions: vertex and edge order is the declared order and is part of
the graph's identity.  The incidence number of an edge is +1 at its tail
and -1 at its head.  Laplacian indices run over every vertex except the
last declared one.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, NamedTuple, Sequence

from .errors import (
    DisconnectedGraph,
    DuplicateEdge,
    DuplicateVertex,
    InputError,
    MissingEdge,
    MissingVertex,
    SelfLoop,
    TooFewVertices,
    VerificationError,
)
from .limits import CUT_ENUM_MAX_EDGES
from .poly import Poly, Var, parse_fraction
from .ratfun import RatFun, bareiss_det, poly_matrix_inverse

__all__ = [
    "Edge",
    "DirectedGraph",
    "parse_weights",
    "symbolic_weights",
    "weighted_laplacian",
    "kirchhoff_tree_sum",
    "laplacian_det",
    "kirchhoff_det",
    "cut_sets",
    "laplacian_inverse",
    "green_function",
    "connected_catalog",
    "random_multigraph",
    "verify_matrix_tree",
    "verify_green_bound",
]


class Edge(NamedTuple):
    id: str
    tail: str
    head: str


class DirectedGraph:
    """Immutable directed multigraph; declared order is identity."""

    __slots__ = ("vertices", "edges", "_vset", "_eindex", "_hash")

    def __init__(self, vertices: Sequence[str], edges: Sequence):
        vs = tuple(str(v) for v in vertices)
        seen = set()
        for v in vs:
            if v in seen:
                raise DuplicateVertex(f"vertex {v!r} declared twice")
            seen.add(v)
        es = []
        eids = set()
        for e in edges:
            if not isinstance(e, Edge):
                e = Edge(*e)
            e = Edge(str(e.id), str(e.tail), str(e.head))
            if e.id in eids:
                raise DuplicateEdge(f"edge id {e.id!r} declared twice")
            eids.add(e.id)
            for endpoint in (e.tail, e.head):
                if endpoint not in seen:
                    raise MissingVertex(
                        f"edge {e.id!r} references unknown vertex {endpoint!r}"
                    )
            if e.tail == e.head:
                raise SelfLoop(f"edge {e.id!r} is a self-loop at {e.tail!r}")
            es.append(e)
        self.vertices = vs
        self.edges = tuple(es)
        self._vset = seen
        self._eindex = {e.id: e for e in self.edges}
        self._hash = hash((vs, self.edges))

    # --- identity -----------------------------------------------------
    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DirectedGraph)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"DirectedGraph({self.vertices!r}, {self.edges!r})"

    # --- JSON ----------------------------------------------------------
    @classmethod
    def from_json_dict(cls, obj) -> "DirectedGraph":
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
            if not isinstance(re, dict):
                raise InputError(f"graph: edges[{k}] must be an object")
            try:
                edges.append(Edge(re["id"], re["tail"], re["head"]))
            except KeyError as exc:
                raise InputError(
                    f"graph: edges[{k}] is missing field {exc.args[0]!r}"
                ) from None
        return cls(verts, edges)

    def to_json_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [{"id": e.id, "tail": e.tail, "head": e.head} for e in self.edges],
        }

    # --- basics -----------------------------------------------------------
    def edge(self, edge_id: str) -> Edge:
        try:
            return self._eindex[edge_id]
        except KeyError:
            raise MissingEdge(f"unknown edge id {edge_id!r}") from None

    def has_vertex(self, v: str) -> bool:
        return v in self._vset

    def rho(self, edge_id: str, vertex: str) -> int:
        """Incidence number: +1 at the tail, -1 at the head, else 0."""
        e = self.edge(edge_id)
        if vertex == e.tail:
            return 1
        if vertex == e.head:
            return -1
        return 0

    def incidence_matrix(self):
        """Rows indexed by edges, columns by vertices, entries in {-1,0,1}."""
        return [
            [self.rho(e.id, v) for v in self.vertices]
            for e in self.edges
        ]

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        comp = _components(self.vertices, self.edges)
        return len(set(comp.values())) == 1

    def spanning_trees(self):
        """Every spanning tree, as a tuple of edge ids, in deterministic order.

        Enumerates (n-1)-subsets of the edge list in declared order and
        keeps the acyclic spanning ones.
        """
        return list(_spanning_trees_cached(self))


def _components(vertices, edges) -> dict:
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        ra, rb = find(e.tail), find(e.head)
        if ra != rb:
            parent[ra] = rb
    return {v: find(v) for v in vertices}


@lru_cache(maxsize=None)
def _spanning_trees_cached(graph: DirectedGraph):
    n = len(graph.vertices)
    if n < 2:
        raise TooFewVertices("spanning trees need at least 2 vertices")
    if not graph.is_connected():
        raise DisconnectedGraph("graph is not connected")
    trees = []
    for subset in itertools.combinations(graph.edges, n - 1):
        comp = _components(graph.vertices, subset)
        if len(set(comp.values())) == 1:
            trees.append(tuple(e.id for e in subset))
    return tuple(trees)


@lru_cache(maxsize=None)
def _cut_sets_cached(graph: DirectedGraph, v1: frozenset, v2: frozenset):
    found = []
    edges = graph.edges
    for size in range(len(edges) + 1):
        for subset in itertools.combinations(edges, size):
            removed = set(subset)
            remaining = [e for e in edges if e not in removed]
            comp = _components(graph.vertices, remaining)
            classes = set(comp.values())
            if len(classes) != 2:
                continue
            if len(remaining) != len(graph.vertices) - 2:
                continue  # two components but not two trees
            reps1 = {comp[v] for v in v1}
            reps2 = {comp[v] for v in v2}
            if len(reps1) == 1 and len(reps2) == 1 and reps1 != reps2:
                found.append(tuple(e.id for e in subset))
    # minimality sweep: drop any candidate strictly containing another
    sets = [frozenset(c) for c in found]
    minimal = []
    for c, cs in zip(found, sets):
        if not any(other < cs for other in sets):
            minimal.append(c)
    return tuple(minimal)


def cut_sets(graph: DirectedGraph, v1, v2):
    """All minimal edge sets splitting the graph into two trees separating v1 | v2."""
    s1, s2 = frozenset(str(v) for v in v1), frozenset(str(v) for v in v2)
    if not s1 or not s2:
        raise InputError("cut_sets: both vertex sets must be nonempty")
    if s1 & s2:
        raise InputError("cut_sets: vertex sets must be disjoint")
    for v in s1 | s2:
        if not graph.has_vertex(v):
            raise MissingVertex(f"unknown vertex {v!r}")
    if not graph.is_connected():
        raise DisconnectedGraph("graph is not connected")
    if len(graph.edges) > CUT_ENUM_MAX_EDGES:
        raise InputError(
            f"cut-set enumeration limited to {CUT_ENUM_MAX_EDGES} edges"
        )
    return list(_cut_sets_cached(graph, s1, s2))


# --- weights ------------------------------------------------------------


def parse_weights(graph: DirectedGraph, obj: Mapping) -> dict:
    """Map edge id -> weight ``Poly`` (constant, or the symbolic ``t_<id>``).

    The JSON form is ``{"e1": "3/2", "e2": "t"}``; the bare string "t"
    selects the symbolic weight for that edge.
    """
    if not isinstance(obj, Mapping):
        raise InputError("weights: top level must be an object")
    weights = {}
    for eid, spec in obj.items():
        graph.edge(str(eid))  # raises MissingEdge for unknown ids
        if spec == "t":
            weights[str(eid)] = Poly.var(Var.tweight(str(eid)))
            continue
        try:
            q = parse_fraction(spec)
        except (ValueError, TypeError, ZeroDivisionError):
            raise InputError(
                f"weights: field {eid!r} must be a rational like '3/2' or 't'"
            ) from None
        if q == 0:
            raise InputError(f"weights: edge {eid!r} has zero weight")
        weights[str(eid)] = Poly(q)
    for e in graph.edges:
        if e.id not in weights:
            raise MissingEdge(f"no weight given for edge {e.id!r}")
    return weights


def symbolic_weights(graph: DirectedGraph) -> dict:
    return {e.id: Poly.var(Var.tweight(e.id)) for e in graph.edges}


# --- laplacian and friends ---------------------------------------------------


def _laplacian_vertices(graph: DirectedGraph):
    if len(graph.vertices) < 2:
        raise TooFewVertices("weighted laplacian needs at least 2 vertices")
    return graph.vertices[:-1]


def weighted_laplacian(graph: DirectedGraph, weights: Mapping[str, Poly]):
    """The grounded weighted Laplacian over all vertices but the last.

    Entry (i, j) is the sum over edges of rho_i * rho_j / w_e.
    Returns ``(index_vertices, matrix)``.
    """
    idx_vertices = _laplacian_vertices(graph)
    index = {v: i for i, v in enumerate(idx_vertices)}
    n = len(idx_vertices)
    mat = [[RatFun(0) for _ in range(n)] for _ in range(n)]
    for e in graph.edges:
        inv = RatFun(1).div_poly(weights[e.id])
        touched = [
            (index[v], sgn)
            for v, sgn in ((e.tail, 1), (e.head, -1))
            if v in index
        ]
        for i, si in touched:
            for j, sj in touched:
                term = inv if si * sj > 0 else -inv
                mat[i][j] = mat[i][j] + term
    return idx_vertices, mat


def kirchhoff_tree_sum(graph: DirectedGraph, weights: Mapping[str, Poly]) -> Poly:
    """Sum over spanning trees of the product of weights of edges *not* in the tree."""
    total = Poly(0)
    for tree in graph.spanning_trees():
        inside = set(tree)
        prod = Poly(1)
        for e in graph.edges:
            if e.id not in inside:
                prod = prod * weights[e.id]
        total = total + prod
    return total


def _cleared_matrix(mat):
    """Rewrite a RatFun matrix as (poly matrix, lcm factor multiset)."""
    lcm: dict = {}
    for row in mat:
        for rf in row:
            for f, e in rf.factors:
                lcm[f] = max(lcm.get(f, 0), e)
    cleared = []
    for row in mat:
        crow = []
        for rf in row:
            mine = dict(rf.factors)
            p = rf.numer
            for f, e in lcm.items():
                gap = e - mine.get(f, 0)
                if gap:
                    p = p * f ** gap
            crow.append(p)
        cleared.append(crow)
    return cleared, lcm


def laplacian_det(graph: DirectedGraph, weights: Mapping[str, Poly]) -> RatFun:
    """det of the weighted Laplacian by fraction-free elimination."""
    _, mat = weighted_laplacian(graph, weights)
    cleared, lcm = _cleared_matrix(mat)
    det = bareiss_det(cleared)
    n = len(cleared)
    return RatFun(det, [(f, e * n) for f, e in lcm.items()])


def kirchhoff_det(graph: DirectedGraph, weights: Mapping[str, Poly], check: bool = True) -> RatFun:
    """Matrix-tree determinant: tree sum over the product of all weights.

    With ``check=True`` (the default) the value is verified against the
    independent elimination route and a mismatch raises
    ``VerificationError``.
    """
    if not graph.is_connected():
        raise DisconnectedGraph("graph is not connected")
    tree_route = RatFun(kirchhoff_tree_sum(graph, weights))
    for e in graph.edges:
        tree_route = tree_route.div_poly(weights[e.id])
    if check:
        det_route = laplacian_det(graph, weights)
        if not tree_route.equals(det_route):
            raise VerificationError(
                "matrix-tree mismatch: tree sum gives "
                f"{tree_route.text()} but elimination gives {det_route.text()}"
            )
    return tree_route


def laplacian_inverse(graph: DirectedGraph, weights: Mapping[str, Poly], check: bool = True):
    """Inverse of the grounded Laplacian via the cut-set formula.

    Entry (i, j) is the sum over cut sets separating {v_i, v_j} from the
    last vertex, divided by the spanning-tree sum.  With ``check=True``
    the matrix is verified entrywise against the adjugate inverse
    computed by fraction-free elimination.

    Returns ``(index_vertices, matrix)``.
    """
    if not graph.is_connected():
        raise DisconnectedGraph("graph is not connected")
    idx_vertices = _laplacian_vertices(graph)
    last = graph.vertices[-1]
    tree_sum = kirchhoff_tree_sum(graph, weights)
    n = len(idx_vertices)
    inv = [[RatFun(0)] * n for _ in range(n)]
    for i, vi in enumerate(idx_vertices):
        for j, vj in enumerate(idx_vertices):
            if j < i:
                inv[i][j] = inv[j][i]  # symmetric
                continue
            total = Poly(0)
            for cut in cut_sets(graph, {vi, vj}, {last}):
                prod = Poly(1)
                for eid in cut:
                    prod = prod * weights[eid]
                total = total + prod
            inv[i][j] = RatFun(total).div_poly(tree_sum)
    if check:
        _, mat = weighted_laplacian(graph, weights)
        cleared, lcm = _cleared_matrix(mat)
        adj, det = poly_matrix_inverse(cleared)
        lpoly = Poly(1)
        for f, e in lcm.items():
            lpoly = lpoly * f ** e
        for i in range(n):
            for j in range(n):
                direct = RatFun(adj[i][j] * lpoly).div_poly(det)
                if not inv[i][j].equals(direct):
                    raise VerificationError(
                        f"laplacian inverse mismatch at ({idx_vertices[i]}, "
                        f"{idx_vertices[j]}): cut formula gives "
                        f"{inv[i][j].text()} but adjugate gives {direct.text()}"
                    )
    return idx_vertices, inv


def green_function(graph: DirectedGraph, weights: Mapping[str, Poly], check: bool = True):
    """Graphic Green's function: rows per edge, columns per non-last vertex.

    Row e, column i is ``sum_j rho_{e j} Minv_{j i} / w_e``.  With
    ``check=True`` every entry is verified against the independent
    two-cut difference formula and a mismatch raises
    ``VerificationError``.
    """
    idx_vertices, minv = laplacian_inverse(graph, weights, check=check)
    index = {v: i for i, v in enumerate(idx_vertices)}
    last = graph.vertices[-1]
    rows = []
    for e in graph.edges:
        inv_w = RatFun(1).div_poly(weights[e.id])
        row = []
        for i, vi in enumerate(idx_vertices):
            entry = RatFun(0)
            if e.tail in index:
                entry = entry + minv[index[e.tail]][i]
            if e.head in index:
                entry = entry - minv[index[e.head]][i]
            row.append(inv_w * entry)
        rows.append(row)
    if check:
        tree_sum = kirchhoff_tree_sum(graph, weights)
        for r, e in enumerate(graph.edges):
            for i, vi in enumerate(idx_vertices):
                expect = RatFun(0)
                for v1, v2, sgn in (
                    ({vi, e.tail}, {last, e.head}, 1),
                    ({vi, e.head}, {last, e.tail}, -1),
                ):
                    if v1 & v2:
                        continue  # no cut can separate overlapping sets
                    total = Poly(0)
                    for cut in cut_sets(graph, v1, v2):
                        prod = Poly(1)
                        for eid in cut:
                            prod = prod * weights[eid]
                        total = total + prod
                    piece = RatFun(total).div_poly(tree_sum).div_poly(weights[e.id])
                    expect = expect + (piece if sgn > 0 else -piece)
                if not rows[r][i].equals(expect):
                    raise VerificationError(
                        f"green function mismatch at (edge {e.id}, vertex {vi}): "
                        f"laplacian route gives {rows[r][i].text()} but cut "
                        f"difference gives {expect.text()}"
                    )
    return idx_vertices, rows


# --- verification sweeps ------------------------------------------------------


def connected_catalog(max_vertices: int = 4, max_edges: int = 6) -> list:
    """Every connected labeled multigraph up to the given size.

    Vertices are "1".."n" for n = 2..max_vertices; edges are multisets of
    unordered pairs (no self-loops), oriented low-to-high and numbered
    "e1", "e2", ... in the multiset's sorted order.  Deterministic.
    """
    out = []
    for n in range(2, max_vertices + 1):
        verts = tuple(str(i) for i in range(1, n + 1))
        pairs = list(itertools.combinations(verts, 2))
        for m in range(n - 1, max_edges + 1):
            for combo in itertools.combinations_with_replacement(pairs, m):
                if len({v for p in combo for v in p}) != n:
                    continue  # some vertex untouched; cheap pre-filter
                edges = [(f"e{k + 1}", a, b) for k, (a, b) in enumerate(combo)]
                g = DirectedGraph(verts, edges)
                if g.is_connected():
                    out.append(g)
    return out


def random_multigraph(rng: random.Random, max_vertices: int = 5, max_extra: int = 4) -> DirectedGraph:
    """Seeded random connected multigraph with random edge orientations."""
    n = rng.randint(2, max_vertices)
    verts = tuple(str(i) for i in range(1, n + 1))
    ends = []
    for k in range(2, n + 1):  # random spanning tree first, so connected
        ends.append((str(rng.randint(1, k - 1)), str(k)))
    for _ in range(rng.randint(0, max_extra)):
        a, b = rng.sample(verts, 2)
        ends.append((a, b))
    rng.shuffle(ends)
    edges = []
    for k, (a, b) in enumerate(ends):
        if rng.random() < 0.5:
            a, b = b, a
        edges.append((f"e{k + 1}", a, b))
    return DirectedGraph(verts, edges)


def verify_matrix_tree(seed: int = 0, samples: int = 50):
    """Spanning-tree sum against the eliminated determinant, graph by graph.

    Sweeps the full small catalog and then ``samples`` seeded random
    multigraphs, all with symbolic weights (the strongest form: equality
    in every weight at once).
    """
    from .jouanolou import Certificate

    catalog = connected_catalog()
    rng = random.Random(seed)
    sweep = catalog + [random_multigraph(rng) for _ in range(samples)]
    for k, g in enumerate(sweep):
        w = symbolic_weights(g)
        tree_route = kirchhoff_det(g, w, check=False)
        elim_route = laplacian_det(g, w)
        if not tree_route.equals(elim_route):
            return Certificate(
                False,
                "matrixtree",
                f"graph {k} ({len(g.vertices)} vertices, {len(g.edges)} edges): "
                f"tree sum {tree_route.text()} != determinant {elim_route.text()}",
            )
    return Certificate(
        True,
        "matrixtree",
        f"{len(catalog)} catalog graphs + {samples} random (seed {seed}), "
        "dual routes equal",
    )


# Fixed shapes for the bound sweep: the two parallel families plus the
# smallest simple graphs with interesting cut structure.
def _bound_shapes() -> list:
    return [
        DirectedGraph(("1", "2"), (("e1", "1", "2"), ("e2", "1", "2"))),
        DirectedGraph(("1", "2"), (("e1", "1", "2"), ("e2", "1", "2"), ("e3", "2", "1"))),
        DirectedGraph(("1", "2", "3"), (("e1", "1", "2"), ("e2", "2", "3"), ("e3", "1", "3"))),
        DirectedGraph(
            ("1", "2", "3"),
            (("e1", "1", "2"), ("e2", "2", "3"), ("e3", "1", "3"), ("e4", "2", "1")),
        ),
        DirectedGraph(
            ("1", "2", "3", "4"),
            (
                ("e1", "1", "2"),
                ("e2", "1", "3"),
                ("e3", "1", "4"),
                ("e4", "2", "3"),
                ("e5", "2", "4"),
                ("e6", "3", "4"),
            ),
        ),
    ]


def _const_value(rf: RatFun) -> Fraction:
    num = rf.numer.constant_value()
    den = rf.denominator_poly().constant_value()
    return num / den


def verify_green_bound(seed: int = 0, samples: int = 100):
    """|entry| <= 2 for every Green's-function entry at positive weights.

    ``samples`` seeded random positive-rational weightings, spread over
    the five fixed shapes, every entry checked; plus the parallel-pair
    entries compared symbolically against t2/(t1+t2) and t1/(t1+t2).
    """
    from .jouanolou import Certificate

    pair = _bound_shapes()[0]
    t1 = Poly.var(Var.tweight("e1"))
    t2 = Poly.var(Var.tweight("e2"))
    _, rows = green_function(pair, symbolic_weights(pair))
    want = [RatFun(t2, [(t1 + t2, 1)]), RatFun(t1, [(t1 + t2, 1)])]
    for row, expect in zip(rows, want):
        if not row[0].equals(expect):
            return Certificate(
                False,
                "green",
                f"parallel pair: entry {row[0].text()} != {expect.text()}",
            )

    shapes = _bound_shapes()
    rng = random.Random(seed)
    checked = 0
    for k in range(samples):
        g = shapes[k % len(shapes)]
        weights = {
            e.id: Poly(Fraction(rng.randint(1, 9), rng.randint(1, 9)))
            for e in g.edges
        }
        _, rows = green_function(g, weights)
        for r, row in enumerate(rows):
            for i, entry in enumerate(row):
                value = _const_value(entry)
                checked += 1
                if abs(value) > 2:
                    return Certificate(
                        False,
                        "green",
                        f"weighting {k}, entry (edge {g.edges[r].id}, "
                        f"vertex {g.vertices[i]}): |{value}| > 2",
                    )
    return Certificate(
        True,
        "green",
        f"parallel pair symbolic; {checked} entries over {samples} "
        f"weightings (seed {seed}) inside [-2, 2]",
    )
