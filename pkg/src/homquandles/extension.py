"""Abelian extensions: weighted digraph to quandle and back.

build(W) produces the quandle on X x A with s_(x,a)(y,b) = (y, d(x,y)+b),
points encoded as (x, a) -> x*|A| + rank(a).  presentation(Q) recovers a
weighted digraph from any quandle whose inner group is abelian with uniform
orbits, and reconstruct_iso checks the round trip with an explicit bijection.
"""

from __future__ import annotations

import numpy as np

from .algebra import AbelianGroup, PermGroup, abelian_invariants, span_order
from .errors import CapExceeded, FormatError, NotInClass
from .quandle import Quandle, _data_lines, inner_group
from .wdigraph import WeightedDigraph, is_indecomposable

BUILD_CAP = 10**4

__all__ = [
    "PresentationWitness",
    "build",
    "format_witness",
    "inner_order_from_rows",
    "parse_witness",
    "presentation",
    "read_witness",
    "reconstruct_iso",
    "write_witness",
]


class PresentationWitness:
    """Orbit data tying a quandle to its digraph presentation.

    fiber_maps[i][r] is the quandle point phi_i(r); each phi_i is a bijection
    from group ranks onto orbit i, sending 0 to the base point.
    """

    def __init__(self, orbits, base, group, fiber_maps):
        self.orbits = tuple(tuple(o) for o in orbits)
        self.base = tuple(base)
        self.group = group
        self.fiber_maps = tuple(tuple(f) for f in fiber_maps)
        if not len(self.orbits) == len(self.base) == len(self.fiber_maps):
            raise ValueError("orbit, base and fiber lists must align")
        for o, b, fm in zip(self.orbits, self.base, self.fiber_maps):
            if set(fm) != set(o) or len(fm) != group.order:
                raise ValueError(f"fiber map {fm} is not a bijection onto orbit {o}")
            if fm[0] != b:
                raise ValueError(f"fiber map must send 0 to the base point {b}")

    def __repr__(self):
        return f"PresentationWitness(orbits={len(self.orbits)}, group={self.group})"


def build(w):
    """The extension quandle of a weighted digraph.

    The symmetry at (x, a) ignores a, so all |A| rows of a fiber are the
    same tuple; the table passes check_axioms by construction.
    """
    k = w.group.order
    n = w.m * k
    if n > BUILD_CAP:
        raise CapExceeded(f"extension of order {n} exceeds the cap of {BUILD_CAP}")
    table = []
    for x in range(w.m):
        row = tuple(
            y * k + w.group.add(w.weights[x][y], b)
            for y in range(w.m)
            for b in range(k)
        )
        table.extend([row] * k)
    return Quandle(table)


def presentation(q):
    """Weighted digraph presentation of q, with its witness.

    Needs an abelian inner group and equal-size orbits; the restricted
    action on each orbit is then regular abelian, and its invariant factors
    must agree across orbits.  Weights come from the base symmetries:
    d(x, y) is the rank of s_{o_x}(o_y) under the fiber map of orbit y.
    """
    inn = inner_group(q)
    if not inn.is_abelian():
        raise NotInClass("inner group is not abelian")
    orbits = inn.orbits()
    sizes = sorted({len(o) for o in orbits})
    if len(sizes) != 1:
        raise NotInClass(f"inner orbits have mixed sizes {sizes}")
    m = len(orbits)
    base = tuple(o[0] for o in orbits)
    # with Inn abelian, s_{g(x)} = g s_x g^{-1} = s_x, so the symmetries at
    # the base points already realize every restricted generator
    group = None
    fiber_maps = []
    for o in orbits:
        pos = {p: i for i, p in enumerate(o)}
        restricted = [tuple(pos[q.table[b][p]] for p in o) for b in base]
        a, to_rank = abelian_invariants(PermGroup(len(o), restricted))
        if group is None:
            group = a
        elif a != group:
            raise NotInClass(
                f"orbit group structures disagree: {a.moduli} vs {group.moduli}"
            )
        from_rank = [-1] * a.order
        for g, rank in to_rank.items():
            from_rank[rank] = o[g[0]]
        fiber_maps.append(tuple(from_rank))
    witness = PresentationWitness(orbits, base, group, fiber_maps)
    w = _witness_digraph(q, witness)
    assert is_indecomposable(w), "restricted generators must span each fiber group"
    return w, witness


def _witness_digraph(q, witness):
    inv = [{p: rank for rank, p in enumerate(fm)} for fm in witness.fiber_maps]
    base = witness.base
    m = len(base)
    weights = [
        [inv[j][q.table[base[i]][base[j]]] for j in range(m)] for i in range(m)
    ]
    return WeightedDigraph(witness.group, weights)


def reconstruct_iso(q, witness):
    """The bijection q -> build(presentation digraph), fully verified.

    f sends a point to (its orbit, its rank under the fiber map); the
    homomorphism identity is checked on all pairs, so a failure here means
    the extraction itself is broken, not that q is outside the class.
    """
    rebuilt = build(_witness_digraph(q, witness))
    k = witness.group.order
    f = [-1] * q.n
    for i, fm in enumerate(witness.fiber_maps):
        for rank, p in enumerate(fm):
            f[p] = i * k + rank
    farr = np.asarray(f, dtype=np.int64)
    t1 = np.asarray(q.table, dtype=np.int64)
    t2 = np.asarray(rebuilt.table, dtype=np.int64)
    if not np.array_equal(farr[t1], t2[farr[:, None], farr[None, :]]):
        raise RuntimeError("reconstructed map failed the homomorphism identity")
    return tuple(int(v) for v in f)


def inner_order_from_rows(w):
    """|Inn(build(w))| computed from the weight rows, without building.

    Every symmetry of the extension translates fibers, so the inner group is
    the subgroup of A^X generated by the rows (d(x, y))_y, and its order is
    a span-order computation over the repeated moduli.
    """
    moduli = list(w.group.moduli) * w.m
    vectors = [
        [r for y in range(w.m) for r in w.group.residues(w.weights[x][y])]
        for x in range(w.m)
    ]
    return span_order(vectors, moduli)


# ---------------------------------------------------------------------------
# witness serialization (audit format)


def format_witness(witness):
    m = len(witness.orbits)
    lines = [f"witness {m} {len(witness.group.moduli)}"]
    lines.append(("moduli " + " ".join(str(v) for v in witness.group.moduli)).rstrip())
    for i, o in enumerate(witness.orbits):
        lines.append(f"orbit {i} " + " ".join(str(p) for p in o))
    lines.append("base " + " ".join(str(p) for p in witness.base))
    for i, fm in enumerate(witness.fiber_maps):
        lines.append(f"fiber {i} " + " ".join(str(p) for p in fm))
    return "\n".join(lines) + "\n"


def _labeled_ints(entry, label, index=None):
    lineno, line = entry
    fields = line.split()
    want = [label] if index is None else [label, str(index)]
    if fields[: len(want)] != want:
        raise FormatError(f"line {lineno}: expected '{' '.join(want)} ...', got {line!r}")
    try:
        return [int(v) for v in fields[len(want) :]]
    except ValueError:
        raise FormatError(f"line {lineno}: non-integer field in {line!r}")


def parse_witness(text):
    lines = _data_lines(text)
    if not lines:
        raise FormatError("line 1: empty file, expected 'witness <m> <k>' header")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 3 or parts[0] != "witness":
        raise FormatError(f"line {lineno}: expected 'witness <m> <k>', got {header!r}")
    try:
        m, k = int(parts[1]), int(parts[2])
    except ValueError:
        raise FormatError(f"line {lineno}: sizes must be integers")
    if m < 1 or k < 0:
        raise FormatError(f"line {lineno}: need m >= 1 and k >= 0")
    if len(lines) != 2 + 2 * m + 1:
        raise FormatError(
            f"line {lineno}: expected {2 + 2 * m + 1} data lines, found {len(lines)}"
        )
    moduli = _labeled_ints(lines[1], "moduli")
    if len(moduli) != k:
        raise FormatError(f"line {lines[1][0]}: expected {k} moduli, got {len(moduli)}")
    try:
        group = AbelianGroup(moduli)
    except ValueError as err:
        raise FormatError(f"line {lines[1][0]}: {err}")
    orbits = [_labeled_ints(lines[2 + i], "orbit", i) for i in range(m)]
    base = _labeled_ints(lines[2 + m], "base")
    fibers = [_labeled_ints(lines[3 + m + i], "fiber", i) for i in range(m)]
    try:
        return PresentationWitness(orbits, base, group, fibers)
    except ValueError as err:
        raise FormatError(str(err))


def read_witness(path):
    with open(path, encoding="ascii") as fh:
        return parse_witness(fh.read())


def write_witness(witness, path):
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_witness(witness))
