"""The icosidodecahedron quandle and its homogeneity checks.

The 30 edge midpoints of an icosahedron form the vertices of an
icosidodecahedron; two midpoints are joined when their edges bound a common
triangular face, giving a 4-regular skeleton with 60 edges.  Weighting each
incoming edge at a vertex by 1, 2, 4, 3 in rotational order (powers of 2 in
Z_5) and extending by Z_5 yields a quandle of order 150 that is homogeneous
even though no weighting of the skeleton is preserved, up to flips, by a
transitive group of skeleton automorphisms.

verify_qid_homogeneous and verify_no_homogeneous_weight each return a
(verdict, report_lines) pair; the report is plain text for the CLI.
"""

from __future__ import annotations

import random

import numpy as np

from .algebra import AbelianGroup, elements_of_order
from .extension import build
from .wdigraph import (
    WeightedDigraph,
    digraph_automorphisms,
    is_flip_homogeneous,
    is_indecomposable,
    weak_automorphism_projections,
    weak_isomorphism,
)

PHI = (1 + 5**0.5) / 2

__all__ = [
    "OrientedGraph",
    "build_icosidodecahedron",
    "build_qid",
    "skeleton_automorphisms",
    "verify_no_homogeneous_weight",
    "verify_qid_homogeneous",
]


class OrientedGraph:
    """A graph with unit-scale coordinates and rotationally ordered neighbors.

    cycles[v] lists the neighbors of v in the cyclic order seen looking down
    at v from outside the circumscribed sphere, rotated to start at the
    smallest neighbor index.
    """

    def __init__(self, coords, cycles):
        self.coords = coords
        self.cycles = tuple(tuple(c) for c in cycles)
        self.m = len(self.cycles)

    def edges(self):
        return tuple(
            sorted((x, y) for x in range(self.m) for y in self.cycles[x] if x < y)
        )

    def directed_edges(self):
        return tuple(
            (x, y) for x in range(self.m) for y in self.cycles[x]
        )


def _icosahedron():
    """Vertices, edges and triangular faces of a golden-ratio icosahedron."""
    verts = []
    for a in (-1.0, 1.0):
        for b in (-PHI, PHI):
            verts.append(np.array([0.0, a, b]))
            verts.append(np.array([a, b, 0.0]))
            verts.append(np.array([b, 0.0, a]))
    edges = [
        (i, j)
        for i in range(12)
        for j in range(i + 1, 12)
        if abs(float(np.dot(verts[i] - verts[j], verts[i] - verts[j])) - 4.0) < 1e-9
    ]
    adj = {e: True for e in edges}
    faces = [
        (i, j, k)
        for i, j in edges
        for k in range(j + 1, 12)
        if adj.get((i, k)) and adj.get((j, k))
    ]
    return verts, edges, faces


def build_icosidodecahedron():
    """The oriented 1-skeleton on the 30 icosahedron edge midpoints."""
    verts, edges, faces = _icosahedron()
    mid = [(verts[i] + verts[j]) / 2 for i, j in edges]
    index = {e: n for n, e in enumerate(edges)}
    nbrs = [set() for _ in edges]
    for i, j, k in faces:
        side = [index[(i, j)], index[(i, k)], index[(j, k)]]
        for a in side:
            for b in side:
                if a != b:
                    nbrs[a].add(b)
    cycles = []
    for v, p in enumerate(mid):
        normal = p / np.linalg.norm(p)
        e1 = np.cross(normal, [0.0, 0.0, 1.0])
        if np.linalg.norm(e1) < 1e-9:
            e1 = np.cross(normal, [1.0, 0.0, 0.0])
        e1 = e1 / np.linalg.norm(e1)
        e2 = np.cross(normal, e1)
        # clockwise from outside = decreasing angle in the (e1, e2) frame
        ordered = sorted(
            nbrs[v],
            key=lambda u: -np.arctan2(
                float(np.dot(mid[u] - p, e2)), float(np.dot(mid[u] - p, e1))
            ),
        )
        start = ordered.index(min(ordered))
        cycles.append(tuple(ordered[start:] + ordered[:start]))
    return OrientedGraph(mid, cycles)


def build_qid(graph=None, base=None):
    """The order-150 quandle and its weighted digraph over Z_5.

    base optionally gives a nonzero scale per vertex for the incoming
    weights; the default is 1 everywhere.  Any choice yields weakly
    isomorphic digraphs, which verify_qid_homogeneous rechecks.
    """
    if graph is None:
        graph = build_icosidodecahedron()
    group = AbelianGroup((5,))
    weights = [[0] * graph.m for _ in range(graph.m)]
    for y in range(graph.m):
        c = 1 if base is None else base[y] % 5
        if c == 0:
            raise ValueError("per-vertex base weights must be nonzero")
        for i, x in enumerate(graph.cycles[y]):
            weights[x][y] = c * pow(2, i, 5) % 5
    w = WeightedDigraph(group, weights)
    return build(w), w


def skeleton_automorphisms(graph, budget=None):
    """Automorphism group of the undirected skeleton (order 120)."""
    arcs = graph.directed_edges()
    return digraph_automorphisms(graph.m, arcs, budget)


def verify_qid_homogeneous(budget=None, seed=None):
    """Check homogeneity of the extension and independence of base weights.

    Returns (ok, report_lines).  The skeleton automorphisms that extend to
    weak automorphisms project onto the rotation group, which is transitive,
    so the quandle built from any weighting in this family is homogeneous.
    """
    graph = build_icosidodecahedron()
    _, w = build_qid(graph)
    lines = []
    ok = True

    if not is_indecomposable(w):
        return False, ["weights do not generate Z_5 in some column"]
    flip_hom = is_flip_homogeneous(w, budget)
    ok = ok and flip_hom
    lines.append("flip homogeneous: %s" % ("yes" if flip_hom else "NO"))

    proj = weak_automorphism_projections(w, budget)
    lines.append(
        "weak automorphism projections: order %d of %d skeleton automorphisms"
        % (proj.order, skeleton_automorphisms(graph, budget).order)
    )
    if proj.order < 60:
        ok = False
        lines.append("projection group smaller than the rotation group")

    rng = random.Random(20260814 if seed is None else seed)
    base = [rng.randrange(1, 5) for _ in range(graph.m)]
    _, variant = build_qid(graph, base)
    same = weak_isomorphism(w, variant, budget) is not None
    ok = ok and same
    lines.append(
        "random base weights give a weakly isomorphic digraph: %s"
        % ("yes" if same else "NO")
    )
    return ok, lines


def _faces(graph):
    """All faces of the embedding given by the rotational neighbor orders.

    Traces each directed edge once: arriving at w from v, the face continues
    toward the neighbor just before v in the rotational order at w.
    """
    out = []
    seen = set()
    for arc in graph.directed_edges():
        if arc in seen:
            continue
        face = []
        v, ww = arc
        while (v, ww) not in seen:
            seen.add((v, ww))
            face.append(v)
            cyc = graph.cycles[ww]
            v, ww = ww, cyc[cyc.index(v) - 1]
        out.append(tuple(face))
    return out


def _joint_flip_feasible(weights, gens):
    """Whether one flip makes the weighting invariant under every generator.

    With column scalings c_y = 2^(e_y), invariance under g reads
    e_{g(y)} = e_y + t_g(y) mod 4, where 2^(t_g(y)) is the common ratio
    d(x,y)/d(g(x),g(y)); the four incoming ratios at y must agree or g
    preserves no flip at all.  Feasibility is cycle consistency of these
    difference constraints, checked by propagation.
    """
    m = len(weights)
    inverse = (0, 1, 3, 2, 4)
    log2 = {1: 0, 2: 1, 4: 2, 3: 3}
    incoming = [[x for x in range(m) if weights[x][y]] for y in range(m)]
    arcs = [[] for _ in range(m)]
    for g in gens:
        for y in range(m):
            ratios = {
                weights[x][y] * inverse[weights[g[x]][g[y]]] % 5
                for x in incoming[y]
            }
            if len(ratios) != 1:
                return False
            t = log2[ratios.pop()]
            arcs[y].append((g[y], t))
            arcs[g[y]].append((y, -t % 4))
    e = [None] * m
    for start in range(m):
        if e[start] is not None:
            continue
        e[start] = 0
        stack = [start]
        while stack:
            y = stack.pop()
            for z, t in arcs[y]:
                val = (e[y] + t) % 4
                if e[z] is None:
                    e[z] = val
                    stack.append(z)
                elif e[z] != val:
                    return False
    return True


def verify_no_homogeneous_weight(budget=None):
    """Check that no Z_5 weighting of the skeleton is homogeneous.

    Any weighting presenting the same quandle is a relabeled flip of the
    canonical one, so a homogeneous weighting would give a flip d^sigma
    preserved exactly by a transitive group G of skeleton automorphisms.
    |G| is then divisible by 30, so by Cauchy G contains an order-5
    rotation rho, which fixes a pentagon face; and G carries any pentagon
    vertex to the apex of an adjacent triangle, so some skeleton
    automorphism h with that transport also preserves d^sigma.  For each of
    the 24 rotations the joint (rho, h) constraint system is infeasible for
    every candidate h, ruling every homogeneous weighting out.
    """
    graph = build_icosidodecahedron()
    _, w = build_qid(graph)
    autos = skeleton_automorphisms(graph, budget)
    rotations = elements_of_order(autos, 5)
    pentagons = [set(f) for f in _faces(graph) if len(f) == 5]
    lines = [
        "skeleton automorphisms: %d" % autos.order,
        "order-5 rotations: %d" % len(rotations),
        "a transitive weight-preserving group has order divisible by 30, so",
        "it contains an order-5 rotation, which fixes a pentagon face; it",
        "also carries a vertex of that pentagon to the apex of an adjacent",
        "triangle; no flip of the weighting survives both at once:",
    ]
    ok = len(rotations) == 24 and len(pentagons) == 12
    for n, rho in enumerate(rotations):
        fixed = [p for p in pentagons if {rho[v] for v in p} == p]
        x0 = min(fixed[0])
        x1 = next(v for v in graph.cycles[x0] if v in fixed[0])
        apex = next(
            v
            for v in graph.cycles[x0]
            if v in graph.cycles[x1] and v not in fixed[0]
        )
        alone = _joint_flip_feasible(w.weights, [rho])
        carriers = [h for h in autos.elements if h[x0] == apex]
        joint = [h for h in carriers if _joint_flip_feasible(w.weights, [rho, h])]
        lines.append(
            "rotation %2d: invariant flips %s; apex transports %d, compatible %d:"
            " %s"
            % (
                n + 1,
                "exist" if alone else "missing",
                len(carriers),
                len(joint),
                "infeasible" if not joint else "FEASIBLE",
            )
        )
        if joint or not alone:
            ok = False
    lines.append(
        "no homogeneous weighting exists: %s" % ("confirmed" if ok else "REFUTED")
    )
    return ok, lines
