"""Classification of homogeneous quandles with abelian inner groups, by order.

Every class of order n = |X| * |A| is represented by an indecomposable
flip-homogeneous weighted digraph on |X| vertices.  The enumeration splits on
|X|: the trivial quandle, the unique two-vertex class, shift-invariant weight
lists for odd prime |X|, and support-restricted sweeps for |X| = 4 and 6;
entries are deduplicated by canonical form, so the catalog invariants do not
depend on the completeness arguments behind each branch.
"""

from __future__ import annotations

import itertools
import os
from collections import namedtuple
from concurrent.futures import ProcessPoolExecutor
from math import gcd

from .algebra import AbelianGroup, _divisors
from .wdigraph import (
    WeightedDigraph,
    canonical_form,
    is_flip_homogeneous,
    is_indecomposable,
    vertex_transitive_digraphs,
    write_wdg,
)

MAX_CLASSIFY_ORDER = 15

__all__ = [
    "CatalogEntry",
    "ClassCatalog",
    "abelian_moduli",
    "burnside_count",
    "burnside_details",
    "classify_order",
    "count_two_p",
    "list_canonical",
    "list_classes",
    "moduli_label",
    "reproduce_table",
    "shift_digraph",
    "weight_lists",
    "write_catalog",
]

CatalogEntry = namedtuple("CatalogEntry", "digraph x moduli provenance")
ClassCatalog = namedtuple("ClassCatalog", "order entries")


def _is_prime(n):
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


def abelian_moduli(k):
    """Invariant-factor tuples of every abelian group of order k, sorted."""
    if k == 1:
        return [()]
    out = []
    for d in _divisors(k):
        if d < 2:
            continue
        for rest in abelian_moduli(k // d):
            if not rest or d % rest[-1] == 0:
                out.append(rest + (d,))
    return sorted(set(out))


# ---------------------------------------------------------------------------
# shift-invariant weight lists (|X| = m, weights depend on the index difference)


def weight_lists(m, group):
    """All (l_1 .. l_{m-1}) over the group whose values generate it."""
    out = []
    for values in itertools.product(range(group.order), repeat=m - 1):
        if group.generates([v for v in values if v]):
            out.append(values)
    return out


def shift_digraph(values, group):
    """The digraph with d(x_i, x_j) = values[(i - j) mod m]; always has the
    index shift as a weight-preserving automorphism."""
    m = len(values) + 1
    weights = [
        [0 if i == j else values[(i - j) % m - 1] for j in range(m)]
        for i in range(m)
    ]
    return WeightedDigraph(group, weights)


def list_canonical(values, group):
    """Least list reachable by index multiplication and value automorphisms.

    Multiplying indices by a unit relabels the shift digraph and a global
    value automorphism is a constant flip, so equal canonical lists are
    always weakly isomorphic digraphs; on prime m the converse holds too.
    """
    m = len(values) + 1
    best = None
    for u in range(1, m):
        if gcd(u, m) != 1:
            continue
        permuted = tuple(values[(u * t) % m - 1] for t in range(1, m))
        for a in group.automorphisms():
            cand = tuple(a[v] for v in permuted)
            if best is None or cand < best:
                best = cand
    return best


def list_classes(m, group):
    """Weight lists grouped by canonical list, as {canonical: members}."""
    buckets = {}
    for values in weight_lists(m, group):
        buckets.setdefault(list_canonical(values, group), []).append(values)
    return {rep: tuple(members) for rep, members in sorted(buckets.items())}


# ---------------------------------------------------------------------------
# counting formulas


def burnside_details(p, q):
    """Fixed-point counts for the list action of Z_p^x times Z_q^x.

    The group permutes indices by multiplication and scales values; a pair
    (u, v) fixes q^(free cycles) lists, where a cycle of t -> ut is free
    when v to its length is 1 mod q.  Returns (parts, total, orbits) with
    parts ordered by (u, v).
    """
    if not (_is_prime(p) and _is_prime(q)):
        raise ValueError(f"burnside counting needs primes, got ({p}, {q})")
    parts = []
    for u in range(1, p):
        lengths = _cycle_lengths_of_unit(p, u)
        for v in range(1, q):
            fixed = 1
            for length in lengths:
                if pow(v, length, q) == 1:
                    fixed *= q
            parts.append(fixed)
    total = sum(parts)
    order = (p - 1) * (q - 1)
    assert total % order == 0
    return tuple(parts), total, total // order


def _cycle_lengths_of_unit(p, u):
    seen = set()
    lengths = []
    for t in range(1, p):
        if t in seen:
            continue
        k = 0
        s = t
        while s not in seen:
            seen.add(s)
            s = s * u % p
            k += 1
        lengths.append(k)
    return lengths


def burnside_count(p, q):
    """Orbits of weight lists over Z_q at |X| = p, all-zero list included."""
    return burnside_details(p, q)[2]


def count_two_p(p):
    """Number of classes of order 2p for an odd prime p, in closed form.

    The sum averages 2^(cycles of t -> it), and the multiplication-by-i map
    on nonzero indices has gcd(p-1, i) cycles; the leading 1 absorbs the
    trivial quandle next to the two-orbit class and the zero-list orbit.
    """
    if not _is_prime(p) or p == 2:
        raise ValueError(f"the order-2p count needs an odd prime, got {p}")
    total = sum(2 ** gcd(p - 1, i) for i in range(1, p))
    assert total % (p - 1) == 0
    return 1 + total // (p - 1)


# ---------------------------------------------------------------------------
# per-order classification


def _branches(n):
    out = [("trivial", n, n, ())]
    if n % 2 == 0 and n >= 4:
        out.append(("two-orbit", n, 2, (n // 2,)))
    for m in range(3, n):
        if n % m or n // m < 2:
            continue
        if _is_prime(m):
            kind = "prime-list"
        elif m == 4:
            kind = "brute"
        elif m == 6:
            kind = "orbital"
        else:
            raise ValueError(f"no enumeration strategy for {m} orbits")
        for moduli in abelian_moduli(n // m):
            out.append((kind, n, m, moduli))
    return out


def _support_candidates(m, group):
    """Weight matrices with nonzero entries on a vertex-transitive support.

    Weak automorphisms preserve the support, so a flip-homogeneous digraph
    has a vertex-transitive support; sweeping all assignments over each
    transitive support up to isomorphism reaches every class.
    """
    for edges in vertex_transitive_digraphs(m):
        if not edges:
            continue
        for values in itertools.product(range(1, group.order), repeat=len(edges)):
            weights = [[0] * m for _ in range(m)]
            for (x, y), v in zip(edges, values):
                weights[x][y] = v
            yield WeightedDigraph(group, weights)


def _run_branch(branch):
    kind, n, m, moduli = branch
    group = AbelianGroup(moduli)
    if kind == "trivial":
        candidates = [WeightedDigraph(group, [[0] * m for _ in range(m)])]
    elif kind == "two-orbit":
        candidates = [WeightedDigraph(group, [[0, 1], [1, 0]])]
    elif kind == "prime-list":
        candidates = [shift_digraph(rep, group) for rep in list_classes(m, group)]
    else:
        candidates = _support_candidates(m, group)
    rows = []
    seen = set()
    for w in candidates:
        canon = canonical_form(w)
        if canon in seen:
            continue
        seen.add(canon)
        rep = WeightedDigraph(group, canon)
        if not is_indecomposable(rep):
            continue
        if not is_flip_homogeneous(rep):
            continue
        rows.append((m, moduli, canon, kind))
    rows.sort()
    return rows


def classify_order(n, jobs=1):
    """Catalog of all classes of order n, one canonical digraph per class."""
    if not 1 <= n <= MAX_CLASSIFY_ORDER:
        raise ValueError(
            f"classification is implemented for orders 1..{MAX_CLASSIFY_ORDER}; "
            "the counting operations cover larger orders"
        )
    if jobs < 1:
        raise ValueError("need at least one worker")
    branches = _branches(n)
    if jobs == 1 or len(branches) == 1:
        results = [_run_branch(b) for b in branches]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_branch, branches))
    rows = sorted(row for rows in results for row in rows)
    entries = tuple(
        CatalogEntry(WeightedDigraph(AbelianGroup(moduli), weights), m, moduli, kind)
        for m, moduli, weights, kind in rows
    )
    return ClassCatalog(n, entries)


def reproduce_table(max_n, jobs=1):
    """Class counts for every order up to max_n, as {order: count}."""
    if not 1 <= max_n <= MAX_CLASSIFY_ORDER:
        raise ValueError(f"the table covers orders 1..{MAX_CLASSIFY_ORDER}")
    return {n: len(classify_order(n, jobs=jobs).entries) for n in range(1, max_n + 1)}


# ---------------------------------------------------------------------------
# catalog output


def moduli_label(moduli):
    return "x".join(str(m) for m in moduli) if moduli else "1"


def index_rows(catalog):
    """index.tsv rows for a catalog: (order, x, moduli, provenance, file)."""
    rows = []
    seq = {}
    for e in catalog.entries:
        key = (e.x, e.moduli)
        seq[key] = seq.get(key, 0) + 1
        name = (
            f"n{catalog.order}_x{e.x}_a{moduli_label(e.moduli)}_{seq[key]}.wdg"
        )
        rows.append((catalog.order, e.x, moduli_label(e.moduli), e.provenance, name))
    return rows


def write_catalog(catalog, outdir):
    """One .wdg file per entry plus index.tsv; returns the file names."""
    os.makedirs(outdir, exist_ok=True)
    rows = index_rows(catalog)
    for entry, row in zip(catalog.entries, rows):
        write_wdg(entry.digraph, os.path.join(outdir, row[4]))
    with open(os.path.join(outdir, "index.tsv"), "w", encoding="ascii") as fh:
        fh.write("order\tx\tmoduli\tprovenance\tfile\n")
        for row in rows:
            fh.write("\t".join(str(v) for v in row) + "\n")
    return [row[4] for row in rows]
