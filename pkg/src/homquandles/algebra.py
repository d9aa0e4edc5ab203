"""Small finite-group toolkit: permutations, permutation groups, finite
abelian groups given by invariant factors, and invariant-factor extraction.

Permutations are plain tuples: p[i] is the image of i.  compose(p, q) applies
q first, so compose(p, q)[i] == p[q[i]].
"""

from __future__ import annotations

import itertools
from math import gcd, lcm, prod

from .errors import CapExceeded

CLOSURE_CAP = 10**7
ELEMENTS_CAP = 10**6
ABELIAN_CAP = 10**4

__all__ = [
    "AbelianGroup",
    "PermGroup",
    "abelian_invariants",
    "compose",
    "elements_of_order",
    "group_automorphisms",
    "group_elements",
    "identity_perm",
    "perm_inverse",
    "perm_order",
    "span_order",
]


def identity_perm(n):
    return tuple(range(n))


def compose(p, q):
    """p after q."""
    return tuple(p[q[i]] for i in range(len(q)))


def perm_inverse(p):
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def cycle_lengths(p):
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i]:
            continue
        k = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            k += 1
        out.append(k)
    return sorted(out)


def perm_order(p):
    return lcm(*cycle_lengths(p)) if p else 1


def closure(generators, degree, cap=CLOSURE_CAP):
    """All products of the generators, as a sorted tuple of permutations."""
    ident = identity_perm(degree)
    gens = [tuple(g) for g in generators if tuple(g) != ident]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                e = compose(g, h)
                if e not in seen:
                    seen.add(e)
                    if len(seen) > cap:
                        raise CapExceeded(
                            f"group closure exceeded cap of {cap} elements"
                        )
                    nxt.append(e)
        frontier = nxt
    return tuple(sorted(seen))


class PermGroup:
    """Permutation group on {0..degree-1}, given by generators.

    Elements are only materialized on demand; generator-level queries
    (is_abelian, orbits, is_transitive) never trigger the closure.
    """

    def __init__(self, degree, generators, elements=None):
        self.degree = degree
        ident = identity_perm(degree)
        gens = sorted({tuple(g) for g in generators} - {ident})
        self.generators = tuple(gens)
        self._elements = tuple(sorted(elements)) if elements is not None else None

    @property
    def elements(self):
        if self._elements is None:
            self._elements = closure(self.generators, self.degree)
        return self._elements

    @property
    def order(self):
        return len(self.elements)

    def __contains__(self, p):
        return tuple(p) in set(self.elements)

    def is_abelian(self):
        gs = self.generators
        return all(
            compose(a, b) == compose(b, a) for a, b in itertools.combinations(gs, 2)
        )

    def orbit(self, point):
        seen = {point}
        frontier = [point]
        while frontier:
            nxt = []
            for x in frontier:
                for g in self.generators:
                    y = g[x]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return tuple(sorted(seen))

    def orbits(self):
        left = set(range(self.degree))
        out = []
        while left:
            o = self.orbit(min(left))
            out.append(o)
            left -= set(o)
        return tuple(sorted(out))

    def is_transitive(self):
        return self.degree > 0 and len(self.orbit(0)) == self.degree

    def stabilizer(self, point):
        elems = [g for g in self.elements if g[point] == point]
        return PermGroup(self.degree, elems, elements=elems)


def elements_of_order(group, k):
    return tuple(g for g in group.elements if perm_order(g) == k)


class AbelianGroup:
    """Finite abelian group as a product of cyclic groups Z_m1 x ... x Z_mk
    with m1 | m2 | ... | mk (invariant factors; empty tuple means trivial).

    Elements are residue tuples; most APIs use their rank, the position in
    lexicographic order, as a compact integer currency.
    """

    def __init__(self, moduli):
        moduli = tuple(int(m) for m in moduli)
        if any(m < 2 for m in moduli):
            raise ValueError(f"invariant factors must be >= 2, got {moduli}")
        for a, b in zip(moduli, moduli[1:]):
            if b % a != 0:
                raise ValueError(f"invariant factors must divide in turn: {moduli}")
        self.moduli = moduli
        self.order = prod(moduli)
        # mixed-radix weights, most significant coordinate first
        self._weights = tuple(prod(moduli[i + 1 :]) for i in range(len(moduli)))
        self._elements = None
        self._automorphisms = None

    def __eq__(self, other):
        return isinstance(other, AbelianGroup) and self.moduli == other.moduli

    def __hash__(self):
        return hash(self.moduli)

    def __repr__(self):
        return f"AbelianGroup{self.moduli}"

    @property
    def elements(self):
        if self._elements is None:
            if self.order > ELEMENTS_CAP:
                raise CapExceeded(f"group of order {self.order} too large to enumerate")
            self._elements = tuple(itertools.product(*(range(m) for m in self.moduli)))
        return self._elements

    def rank(self, residues):
        return sum(w * (r % m) for w, r, m in zip(self._weights, residues, self.moduli))

    def residues(self, rank):
        return self.elements[rank]

    def add(self, r1, r2):
        a, b = self.elements[r1], self.elements[r2]
        return self.rank(tuple(x + y for x, y in zip(a, b)))

    def neg(self, r):
        return self.rank(tuple(-x for x in self.elements[r]))

    def order_of(self, r):
        v = self.elements[r]
        return lcm(*(m // gcd(m, x) for m, x in zip(self.moduli, v))) if v else 1

    def span(self, ranks):
        """Subgroup generated by the given ranks, as a frozenset of ranks."""
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for a in frontier:
                for g in ranks:
                    b = self.add(a, g)
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
            frontier = nxt
        return frozenset(seen)

    def generates(self, ranks):
        return len(self.span(ranks)) == self.order

    def automorphisms(self):
        """All automorphisms, as rank permutations, sorted (identity first)."""
        if self._automorphisms is not None:
            return self._automorphisms
        k = len(self.moduli)
        if k == 0:
            self._automorphisms = ((0,),)
            return self._automorphisms
        basis = [self.rank(tuple(1 if j == i else 0 for j in range(k))) for i in range(k)]
        # an image of the i-th basis vector must be killed by m_i
        candidates = [
            [r for r in range(self.order) if self.order_of(r) in _divisors(m)]
            for m in self.moduli
        ]
        auts = []
        for images in itertools.product(*candidates):
            perm = [0] * self.order
            ok = True
            for r in range(self.order):
                v = self.elements[r]
                img = 0
                for coeff, u in zip(v, images):
                    for _ in range(coeff):
                        img = self.add(img, u)
                perm[r] = img
            if len(set(perm)) == self.order:
                auts.append(tuple(perm))
        auts.sort()
        assert auts[0] == tuple(range(self.order))
        self._automorphisms = tuple(auts)
        return self._automorphisms


def group_elements(a):
    """All elements of an AbelianGroup in lexicographic residue order."""
    return list(a.elements)


def group_automorphisms(a):
    """All automorphisms of an AbelianGroup as rank permutations."""
    return list(a.automorphisms())


def _divisors(n):
    return {d for d in range(1, n + 1) if n % d == 0}


def _generic_order(g, mul, ident):
    k = 1
    h = g
    while h != ident:
        h = mul(h, g)
        k += 1
    return k


def _invariant_basis(elements, mul, ident, order_fn=None):
    """Invariant factors and a matching independent generating set.

    elements must come in a deterministic order; returns (moduli, basis) with
    moduli ascending under divisibility and basis[i] of order moduli[i], such
    that the group is the direct product of the cyclic groups they generate.
    Recurses through the quotient by a maximal-order element; such a cyclic
    subgroup is always a direct summand, and basis representatives lift after
    dividing out the cyclic part they pick up.
    """
    if len(elements) == 1:
        return [], []
    if order_fn is None:
        order_fn = lambda g: _generic_order(g, mul, ident)
    orders = [order_fn(g) for g in elements]
    big = max(orders)
    g = elements[orders.index(big)]
    cyc = [ident]
    h = g
    while h != ident:
        cyc.append(h)
        h = mul(h, g)
    assert len(cyc) == big
    if big == len(elements):
        return [big], [g]
    member = {}
    reps = []
    for e in elements:
        if e in member:
            continue
        idx = len(reps)
        for c in cyc:
            member[mul(e, c)] = idx
        reps.append(e)
    qident = member[ident]
    qmul = lambda i, j: member[mul(reps[i], reps[j])]
    rec_moduli, rec_basis = _invariant_basis(list(range(len(reps))), qmul, qident)
    cyc_pos = {c: k for k, c in enumerate(cyc)}
    basis = []
    for label, o in zip(rec_basis, rec_moduli):
        x = reps[label]
        p = x
        for _ in range(o - 1):
            p = mul(p, x)
        t = cyc_pos[p]  # x^o = g^t, and o | t since x^big is the identity
        assert t % o == 0
        adj = cyc[(big - t // o) % big]
        basis.append(mul(x, adj))
    return rec_moduli + [big], basis + [g]


def abelian_invariants(group):
    """Invariant factors of an abelian PermGroup, with the isomorphism.

    Returns (A, to_rank) where A is the AbelianGroup with those invariant
    factors and to_rank maps every group element to its rank in A.
    """
    if not group.is_abelian():
        raise ValueError("abelian_invariants needs an abelian group")
    elems = group.elements
    if len(elems) > ABELIAN_CAP:
        raise CapExceeded(f"abelian_invariants capped at {ABELIAN_CAP} elements")
    ident = identity_perm(group.degree)
    moduli, basis = _invariant_basis(list(elems), compose, ident, order_fn=perm_order)
    a = AbelianGroup(moduli)
    assert a.order == len(elems)
    to_rank = {}
    for rank, residues in enumerate(a.elements):
        e = ident
        for coeff, b in zip(residues, basis):
            for _ in range(coeff):
                e = compose(e, b)
        to_rank[e] = rank
    assert len(to_rank) == len(elems), "basis failed to enumerate the group"
    return a, to_rank


def _lattice_covolume(rows, k):
    """Index in Z^k of the lattice spanned by the rows (must be full rank)."""
    mat = [list(r) for r in rows]
    r = 0
    covol = 1
    for c in range(k):
        while True:
            nz = [i for i in range(r, len(mat)) if mat[i][c]]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(mat[i][c]))
            mat[r], mat[i0] = mat[i0], mat[r]
            done = True
            for i in range(r + 1, len(mat)):
                if mat[i][c]:
                    q = mat[i][c] // mat[r][c]
                    mat[i] = [x - q * y for x, y in zip(mat[i], mat[r])]
                    if mat[i][c]:
                        done = False
            if done:
                break
        if r < len(mat) and mat[r][c]:
            covol *= abs(mat[r][c])
            r += 1
    assert r == k, "lattice not full rank"
    return covol


def span_order(vectors, moduli):
    """Order of the subgroup of prod_i Z_moduli[i] generated by the vectors.

    Exact integer computation through a triangularized lattice basis: the
    subgroup has order prod(moduli) divided by the index of the lattice
    generated by the vectors together with the relation rows diag(moduli).
    """
    k = len(moduli)
    if k == 0:
        return 1
    rows = [list(v) for v in vectors]
    for i, m in enumerate(moduli):
        rows.append([m if j == i else 0 for j in range(k)])
    return prod(moduli) // _lattice_covolume(rows, k)
