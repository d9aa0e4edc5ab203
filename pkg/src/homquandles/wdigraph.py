"""Weighted digraphs over a finite abelian group A.

A weighted digraph on vertices {0..m-1} stores, for every ordered pair (x, y)
with x != y, a weight in A; the diagonal is zero.  Weights are kept as ranks
into group.elements.  The support is the set of pairs with nonzero weight.

Two digraphs are weakly isomorphic when some vertex bijection f and some
family sigma of automorphisms of A, indexed by target vertex, satisfy
w2[f(x)][f(y)] = sigma_y(w1[x][y]) for all pairs.  Applying sigma alone
(f = id) is called a flip.
"""

from __future__ import annotations

import itertools

from .algebra import AbelianGroup, PermGroup, closure, compose, identity_perm
from .errors import BudgetExceeded, FormatError, resolve_budget

__all__ = [
    "WeakIso",
    "WeightedDigraph",
    "a_automorphisms",
    "canonical_form",
    "circulant_canonical",
    "digraph_automorphisms",
    "flip",
    "is_flip_homogeneous",
    "is_indecomposable",
    "read_wdg",
    "support_graph",
    "vertex_transitive_digraphs",
    "weak_automorphism_projections",
    "weak_isomorphism",
    "write_wdg",
]


class WeightedDigraph:
    """Immutable A-weighted digraph; weights[x][y] is a rank in group."""

    def __init__(self, group, weights):
        weights = tuple(tuple(int(v) for v in row) for row in weights)
        m = len(weights)
        if m == 0:
            raise ValueError("need at least one vertex")
        for x, row in enumerate(weights):
            if len(row) != m:
                raise ValueError(f"row {x} has length {len(row)}, expected {m}")
            if row[x] != 0:
                raise ValueError(f"nonzero diagonal weight at vertex {x}")
            for v in row:
                if not 0 <= v < group.order:
                    raise ValueError(f"weight rank {v} out of range for {group}")
        self.group = group
        self.weights = weights
        self.m = m

    def residue(self, x, y):
        return self.group.residues(self.weights[x][y])

    def __eq__(self, other):
        return (
            isinstance(other, WeightedDigraph)
            and self.group == other.group
            and self.weights == other.weights
        )

    def __hash__(self):
        return hash((self.group, self.weights))

    def __repr__(self):
        return f"WeightedDigraph(m={self.m}, group={self.group})"


class WeakIso:
    """Witness for a weak isomorphism: vertex map f plus per-vertex flips."""

    def __init__(self, f, sigma):
        self.f = tuple(f)
        self.sigma = tuple(tuple(s) for s in sigma)

    def __repr__(self):
        return f"WeakIso(f={self.f})"


def support_graph(w):
    return tuple(
        (x, y)
        for x in range(w.m)
        for y in range(w.m)
        if w.weights[x][y] != 0
    )


def is_indecomposable(w):
    """Whether the incoming weights at every vertex generate the group."""
    for y in range(w.m):
        incoming = [w.weights[x][y] for x in range(w.m) if w.weights[x][y]]
        if not w.group.generates(incoming):
            return False
    return True


def flip(w, sigma):
    """Apply automorphisms sigma[y] of A to the weights into each vertex y."""
    if len(sigma) != w.m:
        raise ValueError("need one automorphism per vertex")
    new = [
        [sigma[y][w.weights[x][y]] for y in range(w.m)]
        for x in range(w.m)
    ]
    return WeightedDigraph(w.group, new)


# ---------------------------------------------------------------------------
# plain digraph isomorphism search


def _refine_colors(n, edges):
    out = [[] for _ in range(n)]
    inc = [[] for _ in range(n)]
    for x, y in edges:
        out[x].append(y)
        inc[y].append(x)
    colors = [(len(out[v]), len(inc[v])) for v in range(n)]
    while True:
        sig = [
            (colors[v], sorted(colors[u] for u in out[v]), sorted(colors[u] for u in inc[v]))
            for v in range(n)
        ]
        relabel = {s: i for i, s in enumerate(sorted(set(map(repr, sig))))}
        new = [relabel[repr(s)] for s in sig]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _digraph_isomorphisms(m1, edges1, m2, edges2, budget):
    """Yield every vertex bijection carrying edges1 exactly onto edges2.

    Color refinement runs on the disjoint union so the two colorings are
    comparable; the backtracking assigns the most-anchored vertex next.
    """
    if m1 != m2 or len(edges1) != len(edges2):
        return
    m = m1
    union_edges = list(edges1) + [(x + m, y + m) for x, y in edges2]
    colors = _refine_colors(2 * m, union_edges)
    c1, c2 = colors[:m], colors[m:]
    if sorted(c1) != sorted(c2):
        return
    adj1 = [[False] * m for _ in range(m)]
    adj2 = [[False] * m for _ in range(m)]
    for x, y in edges1:
        adj1[x][y] = True
    for x, y in edges2:
        adj2[x][y] = True
    nbr = [[] for _ in range(m)]
    for x, y in edges1:
        nbr[x].append(y)
        nbr[y].append(x)
    img = [-1] * m
    used = [False] * m
    assigned = []
    nodes = 0

    def pick():
        best, score = -1, -1
        for v in range(m):
            if img[v] != -1:
                continue
            s = sum(1 for u in nbr[v] if img[u] != -1)
            if s > score:
                best, score = v, s
        return best

    def consistent(x, u):
        for y in assigned:
            v = img[y]
            if adj1[x][y] != adj2[u][v] or adj1[y][x] != adj2[v][u]:
                return False
        return True

    def rec():
        nonlocal nodes
        if len(assigned) == m:
            yield tuple(img)
            return
        x = pick()
        for u in range(m):
            if used[u] or c2[u] != c1[x]:
                continue
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"digraph search exceeded {budget} nodes")
            if not consistent(x, u):
                continue
            img[x] = u
            used[u] = True
            assigned.append(x)
            yield from rec()
            assigned.pop()
            used[u] = False
            img[x] = -1

    yield from rec()


def digraph_automorphisms(m, edges, budget=None):
    """All automorphisms of a plain digraph, as a PermGroup."""
    budget = resolve_budget(budget)
    auts = sorted(_digraph_isomorphisms(m, tuple(edges), m, tuple(edges), budget))
    return PermGroup(m, auts, elements=auts)


# ---------------------------------------------------------------------------
# weak isomorphisms


def _column_flips(w1, w2, f, auts):
    """Per-vertex automorphisms making f a weak iso w1 -> w2, or None."""
    sigma = []
    for y in range(w1.m):
        fy = f[y]
        row = [(w1.weights[x][y], w2.weights[f[x]][fy]) for x in range(w1.m)]
        pick = None
        for a in auts:
            if all(a[src] == dst for src, dst in row):
                pick = a
                break
        if pick is None:
            return None
        sigma.append(pick)
    return tuple(sigma)


def _symmetric_group(m):
    gens = []
    if m >= 2:
        gens.append(tuple([1, 0] + list(range(2, m))))
    if m >= 3:
        gens.append(tuple(list(range(1, m)) + [0]))
    return PermGroup(m, gens)


def weak_isomorphism(w1, w2, budget=None):
    """A WeakIso witness from w1 to w2, or None if the digraphs differ.

    Iterates support isomorphisms and checks each for a compatible flip
    family; complete because a weak isomorphism restricts to a support
    isomorphism.
    """
    if w1.group != w2.group:
        raise ValueError("weak isomorphism needs matching groups")
    if w1.m != w2.m:
        return None
    budget = resolve_budget(budget)
    auts = w1.group.automorphisms()
    e1, e2 = support_graph(w1), support_graph(w2)
    if not e1 and not e2:
        return WeakIso(identity_perm(w1.m), (auts[0],) * w1.m)
    for f in _digraph_isomorphisms(w1.m, e1, w2.m, e2, budget):
        sigma = _column_flips(w1, w2, f, auts)
        if sigma is not None:
            return WeakIso(f, sigma)
    return None


def weak_automorphism_projections(w, budget=None):
    """Vertex permutations extending to weak automorphisms, as a PermGroup.

    The result is closed under composition and inversion; with an empty
    support every permutation qualifies and the symmetric group is returned
    without materializing it.
    """
    edges = support_graph(w)
    if not edges:
        return _symmetric_group(w.m)
    budget = resolve_budget(budget)
    auts = w.group.automorphisms()
    keep = [
        f
        for f in digraph_automorphisms(w.m, edges, budget).elements
        if _column_flips(w, w, f, auts) is not None
    ]
    return PermGroup(w.m, keep, elements=keep)


def a_automorphisms(w, budget=None):
    """Vertex permutations preserving weights exactly (trivial flips only)."""
    edges = support_graph(w)
    if not edges:
        return _symmetric_group(w.m)
    budget = resolve_budget(budget)
    keep = [
        f
        for f in digraph_automorphisms(w.m, edges, budget).elements
        if all(
            w.weights[f[x]][f[y]] == w.weights[x][y]
            for x in range(w.m)
            for y in range(w.m)
        )
    ]
    return PermGroup(w.m, keep, elements=keep)


def is_flip_homogeneous(w, budget=None):
    """Whether the weak automorphism projections act transitively.

    Requires an indecomposable digraph; for those this matches homogeneity
    of the quandle the digraph presents.
    """
    if not is_indecomposable(w):
        raise ValueError("flip homogeneity is only defined for indecomposable digraphs")
    return weak_automorphism_projections(w, budget).is_transitive()


# ---------------------------------------------------------------------------
# canonical forms


_canon_cache = {}


def canonical_form(w):
    """Least weight matrix over all relabelings and flips (a class invariant).

    For a fixed relabeling the flip at each new vertex only touches that
    column, so each column minimizes independently in row order; the overall
    minimum over relabelings is the canonical form.
    """
    if not support_graph(w):
        return w.weights  # every relabeling and flip fixes the zero matrix
    key = (w.group.moduli, w.weights)
    hit = _canon_cache.get(key)
    if hit is not None:
        return hit
    m = w.m
    auts = w.group.automorphisms()
    best = None
    for perm in itertools.permutations(range(m)):
        inv = [0] * m
        for i, p in enumerate(perm):
            inv[p] = i
        cols = []
        for v in range(m):
            src = [w.weights[inv[i]][inv[v]] for i in range(m)]
            cols.append(min(tuple(a[s] for s in src) for a in auts))
        cand = tuple(tuple(cols[v][i] for v in range(m)) for i in range(m))
        if best is None or cand < best:
            best = cand
    _canon_cache[key] = best
    return best


def circulant_canonical(s, p):
    """Canonical connection set of a circulant digraph on a prime p.

    Multiplying the connection set by any unit relabels the digraph, and on
    prime orders two circulants are isomorphic only this way, so the least
    sorted image is a complete invariant.
    """
    if p < 2 or any(p % d == 0 for d in range(2, p)):
        raise ValueError(f"{p} is not prime")
    conn = sorted(set(int(v) % p for v in s))
    if 0 in conn:
        raise ValueError("connection set cannot contain 0")
    return min(
        tuple(sorted(k * v % p for v in conn)) for k in range(1, p)
    )


# ---------------------------------------------------------------------------
# vertex-transitive digraph enumeration (small orders)


def _regular_representation(degree, gens):
    elems = closure(gens, degree)
    idx = {e: i for i, e in enumerate(elems)}
    return [tuple(idx[compose(e, h)] for e in elems) for h in gens]


def _transitive_seeds(m):
    """Generators of the minimal transitive groups of degree m (m <= 6).

    Cyclic covers every m; V4 joins at m=4, the regular S3 and the action of
    A4 on unordered pairs join at m=6.  A4 has no regular subgroup on six
    points, so it cannot be dropped in favor of a Cayley description.
    """
    seeds = [[tuple(list(range(1, m)) + [0])]]
    if m == 4:
        seeds.append([(1, 0, 3, 2), (2, 3, 0, 1)])
    if m == 6:
        seeds.append(_regular_representation(3, [(1, 0, 2), (1, 2, 0)]))
        pairs = list(itertools.combinations(range(4), 2))
        pidx = {pq: i for i, pq in enumerate(pairs)}
        a4 = []
        for g in [(1, 2, 0, 3), (1, 0, 3, 2)]:
            a4.append(tuple(pidx[tuple(sorted((g[a], g[b])))] for a, b in pairs))
        seeds.append(a4)
    return seeds


def _pair_orbits(m, gens):
    pairs = [(x, y) for x in range(m) for y in range(m) if x != y]
    left = set(pairs)
    orbits = []
    for p in pairs:
        if p not in left:
            continue
        orbit = {p}
        frontier = [p]
        while frontier:
            x, y = frontier.pop()
            for g in gens:
                q = (g[x], g[y])
                if q not in orbit:
                    orbit.add(q)
                    frontier.append(q)
        left -= orbit
        orbits.append(tuple(sorted(orbit)))
    return orbits


def _digraph_canonical(m, edges):
    edges = tuple(edges)
    return min(
        tuple(sorted((p[x], p[y]) for x, y in edges))
        for p in itertools.permutations(range(m))
    )


def vertex_transitive_digraphs(m):
    """All vertex-transitive digraphs on m <= 6 vertices, up to isomorphism.

    Every transitive group contains a minimal transitive subgroup, and an
    invariant digraph is a union of orbitals of any transitive subgroup of
    its automorphism group, so unions over the minimal seeds are exhaustive.
    Returns canonical edge tuples, sorted by (size, edges); includes the
    empty digraph.
    """
    if not 1 <= m <= 6:
        raise ValueError("vertex-transitive enumeration is implemented for m <= 6")
    found = set()
    for gens in _transitive_seeds(m):
        orbits = _pair_orbits(m, gens)
        for take in itertools.product([False, True], repeat=len(orbits)):
            edges = []
            for orbit, t in zip(orbits, take):
                if t:
                    edges.extend(orbit)
            found.add(_digraph_canonical(m, sorted(edges)))
    return tuple(sorted(found, key=lambda e: (len(e), e)))


# ---------------------------------------------------------------------------
# file formats


def parse_wdg(text):
    raw = text.splitlines()
    header_at = None
    for i, line in enumerate(raw):
        if line.split("#", 1)[0].strip():
            header_at = i
            break
    if header_at is None:
        raise FormatError("line 1: empty file, expected 'wdg <m> <k>' header")
    parts = raw[header_at].split("#", 1)[0].split()
    if len(parts) != 3 or parts[0] != "wdg":
        raise FormatError(f"line {header_at + 1}: expected 'wdg <m> <k>'")
    try:
        m, k = int(parts[1]), int(parts[2])
    except ValueError:
        raise FormatError(f"line {header_at + 1}: sizes must be integers")
    if m < 1 or k < 0:
        raise FormatError(f"line {header_at + 1}: need m >= 1 and k >= 0")
    if header_at + 1 < len(raw):
        moduli_line = raw[header_at + 1].split("#", 1)[0].strip()
    elif k == 0:
        moduli_line = ""
    else:
        raise FormatError(f"line {header_at + 2}: missing moduli line")
    fields = moduli_line.split()
    if len(fields) != k:
        raise FormatError(
            f"line {header_at + 2}: expected {k} moduli, got {len(fields)}"
        )
    try:
        group = AbelianGroup(int(v) for v in fields)
    except ValueError as err:
        raise FormatError(f"line {header_at + 2}: {err}")
    weights = [[0] * m for _ in range(m)]
    seen = set()
    for lineno, line in enumerate(raw[header_at + 2 :], start=header_at + 3):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2 + k:
            raise FormatError(f"line {lineno}: expected 'x y' plus {k} residues")
        try:
            values = [int(v) for v in fields]
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer field in {line!r}")
        x, y, residues = values[0], values[1], values[2:]
        if not (0 <= x < m and 0 <= y < m):
            raise FormatError(f"line {lineno}: vertex out of range 0..{m - 1}")
        if x == y:
            raise FormatError(f"line {lineno}: loop weight at vertex {x}")
        if (x, y) in seen:
            raise FormatError(f"line {lineno}: duplicate edge ({x}, {y})")
        for r, mod in zip(residues, group.moduli):
            if not 0 <= r < mod:
                raise FormatError(f"line {lineno}: residue {r} out of range mod {mod}")
        rank = group.rank(tuple(residues))
        if rank == 0:
            raise FormatError(f"line {lineno}: zero weight listed for edge ({x}, {y})")
        seen.add((x, y))
        weights[x][y] = rank
    return WeightedDigraph(group, weights)


def format_wdg(w):
    k = len(w.group.moduli)
    lines = [f"wdg {w.m} {k}", " ".join(str(v) for v in w.group.moduli)]
    for x, y in support_graph(w):
        residues = " ".join(str(v) for v in w.residue(x, y))
        lines.append(f"{x} {y} {residues}".rstrip())
    return "\n".join(lines) + "\n"


def read_wdg(path):
    with open(path, encoding="ascii") as fh:
        return parse_wdg(fh.read())


def write_wdg(w, path):
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_wdg(w))


def format_dot(w):
    """GraphViz rendering; antiparallel equal weights merge into one edge."""
    show_labels = w.group.order != 2
    lines = ["digraph {"]
    for v in range(w.m):
        lines.append(f"  {v};")
    for x, y in support_graph(w):
        wxy = w.weights[x][y]
        if x > y and w.weights[y][x] == wxy:
            continue  # already drawn from the lower endpoint
        label = "+" + ",".join(str(v) for v in w.residue(x, y))
        attrs = []
        if x < y and w.weights[y][x] == wxy:
            attrs.append("dir=both")
        if show_labels:
            attrs.append(f'label="{label}"')
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {x} -> {y}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"
