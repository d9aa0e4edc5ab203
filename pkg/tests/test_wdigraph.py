"""Weighted digraph tests: flips, weak isomorphism, canonical forms,
circulant invariants, and the vertex-transitive enumeration.

The oracles are deliberately exhaustive: digraph canonical labels minimize
over every vertex permutation, and the vertex-transitive check filters all
2^(m(m-1)) digraphs through a full automorphism computation.
"""

import itertools
import random

import pytest

from homquandles import (
    AbelianGroup,
    WeightedDigraph,
    canonical_form,
    is_flip_homogeneous,
    is_indecomposable,
    vertex_transitive_digraphs,
    weak_isomorphism,
)
from homquandles.errors import FormatError
from homquandles.wdigraph import (
    _digraph_canonical,
    a_automorphisms,
    circulant_canonical,
    digraph_automorphisms,
    flip,
    format_dot,
    format_wdg,
    parse_wdg,
    support_graph,
    weak_automorphism_projections,
)

Z2 = AbelianGroup([2])
Z3 = AbelianGroup([3])
Z4 = AbelianGroup([4])
V4 = AbelianGroup([2, 2])


def random_digraph(rng, m, group, density=0.7):
    weights = [
        [
            rng.randrange(1, group.order)
            if x != y and group.order > 1 and rng.random() < density
            else 0
            for y in range(m)
        ]
        for x in range(m)
    ]
    return WeightedDigraph(group, weights)


def random_flip(rng, m, group):
    auts = group.automorphisms()
    return [rng.choice(auts) for _ in range(m)]


def test_digraph_validation():
    with pytest.raises(ValueError):
        WeightedDigraph(Z2, [])
    with pytest.raises(ValueError):
        WeightedDigraph(Z2, [[0, 1], [1]])
    with pytest.raises(ValueError):
        WeightedDigraph(Z2, [[1, 0], [0, 0]])  # nonzero diagonal
    with pytest.raises(ValueError):
        WeightedDigraph(Z2, [[0, 2], [1, 0]])  # rank out of range


def test_support_and_residue():
    w = WeightedDigraph(Z4, [[0, 3], [1, 0]])
    assert support_graph(w) == ((0, 1), (1, 0))
    assert w.residue(0, 1) == (3,)


def test_flip_round_trip():
    rng = random.Random(5)
    for group in [Z3, Z4, V4]:
        w = random_digraph(rng, 4, group)
        sigma = random_flip(rng, 4, group)
        inverse = []
        for s in sigma:
            inv = [0] * group.order
            for i, v in enumerate(s):
                inv[v] = i
            inverse.append(tuple(inv))
        assert flip(flip(w, sigma), inverse) == w


def test_flip_needs_one_automorphism_per_vertex():
    w = WeightedDigraph(Z2, [[0, 1], [1, 0]])
    with pytest.raises(ValueError):
        flip(w, [Z2.automorphisms()[0]])


def test_weak_isomorphism_found_after_relabel_and_flip():
    rng = random.Random(6)
    for group in [Z2, Z3, Z4, V4]:
        for _ in range(5):
            w = random_digraph(rng, 4, group)
            f = list(range(4))
            rng.shuffle(f)
            sigma = random_flip(rng, 4, group)
            moved = flip(w, sigma)
            weights = [[0] * 4 for _ in range(4)]
            for x in range(4):
                for y in range(4):
                    weights[f[x]][f[y]] = moved.weights[x][y]
            w2 = WeightedDigraph(group, weights)
            iso = weak_isomorphism(w, w2)
            assert iso is not None
            # verify the witness: d2(f(x), f(y)) = sigma_y(d1(x, y))
            for x in range(4):
                for y in range(4):
                    assert w2.weights[iso.f[x]][iso.f[y]] == iso.sigma[y][w.weights[x][y]]


def test_weak_isomorphism_negative_and_errors():
    w1 = WeightedDigraph(Z3, [[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    w2 = WeightedDigraph(Z3, [[0, 1, 1], [1, 0, 1], [1, 1, 0]])
    assert weak_isomorphism(w1, w2) is None
    assert weak_isomorphism(w1, WeightedDigraph(Z3, [[0]])) is None
    with pytest.raises(ValueError):
        weak_isomorphism(w1, WeightedDigraph(Z4, [[0, 1, 0], [0, 0, 1], [1, 0, 0]]))


def test_weak_isomorphism_empty_support():
    w1 = WeightedDigraph(Z3, [[0, 0], [0, 0]])
    w2 = WeightedDigraph(Z3, [[0, 0], [0, 0]])
    iso = weak_isomorphism(w1, w2)
    assert iso is not None
    assert sorted(iso.f) == [0, 1]


def test_canonical_form_is_class_invariant():
    rng = random.Random(7)
    for group in [Z3, V4]:
        for _ in range(8):
            w = random_digraph(rng, 4, group)
            f = list(range(4))
            rng.shuffle(f)
            sigma = random_flip(rng, 4, group)
            moved = flip(w, sigma)
            weights = [[0] * 4 for _ in range(4)]
            for x in range(4):
                for y in range(4):
                    weights[f[x]][f[y]] = moved.weights[x][y]
            w2 = WeightedDigraph(group, weights)
            assert canonical_form(w) == canonical_form(w2)


def test_canonical_form_separates_weak_classes():
    # exhaustively on 2 vertices over Z_4: canonical forms agree exactly
    # when a weak isomorphism exists
    digraphs = [
        WeightedDigraph(Z4, [[0, a], [b, 0]])
        for a in range(4)
        for b in range(4)
    ]
    for w1 in digraphs:
        for w2 in digraphs:
            same = canonical_form(w1) == canonical_form(w2)
            assert same == (weak_isomorphism(w1, w2) is not None)


def test_indecomposable():
    assert is_indecomposable(WeightedDigraph(Z3, [[0, 1, 1], [1, 0, 1], [1, 1, 0]]))
    # vertex 1 only receives weight 2, which generates a proper subgroup of Z_4
    assert not is_indecomposable(WeightedDigraph(Z4, [[0, 2], [1, 0]]))
    # the trivial group is generated by an empty set of weights
    assert is_indecomposable(WeightedDigraph(AbelianGroup([]), [[0, 0], [0, 0]]))


def test_flip_homogeneous_requires_indecomposable():
    with pytest.raises(ValueError):
        is_flip_homogeneous(WeightedDigraph(Z4, [[0, 2], [1, 0]]))


def test_flip_homogeneous_examples():
    # directed triangle with constant weight: the shift is weight-preserving
    assert is_flip_homogeneous(WeightedDigraph(Z2, [[0, 1, 0], [0, 0, 1], [1, 0, 0]]))
    # path-like support cannot be vertex-transitive
    assert not is_flip_homogeneous(WeightedDigraph(Z2, [[0, 1, 1], [1, 0, 0], [1, 0, 0]]))


def test_digraph_automorphism_groups():
    square = [(0, 1), (1, 0), (1, 2), (2, 1), (2, 3), (3, 2), (3, 0), (0, 3)]
    assert digraph_automorphisms(4, square).order == 8
    cycle = [(0, 1), (1, 2), (2, 3), (3, 0)]
    assert digraph_automorphisms(4, cycle).order == 4


def test_weight_preserving_vs_weak_automorphisms():
    # directed triangle, weights 1, 1, 2 over Z_3: no weight-preserving
    # symmetry, but flipping columns recovers the rotation
    w = WeightedDigraph(Z3, [[0, 1, 0], [0, 0, 1], [2, 0, 0]])
    assert a_automorphisms(w).order == 1
    proj = weak_automorphism_projections(w)
    assert proj.is_transitive()
    strict = a_automorphisms(WeightedDigraph(Z3, [[0, 1, 0], [0, 0, 1], [1, 0, 0]]))
    assert strict.order == 3


def test_symmetric_group_shortcut_on_empty_support():
    w = WeightedDigraph(Z3, [[0, 0, 0], [0, 0, 0], [0, 0, 0]])
    assert weak_automorphism_projections(w).order == 6
    assert a_automorphisms(w).order == 6


def circulant_edges(s, p):
    return sorted((i, (i + v) % p) for i in range(p) for v in s)


@pytest.mark.parametrize("p", [3, 5])
def test_circulant_canonical_matches_digraph_isomorphism(p):
    values = list(range(1, p))
    groups = {}
    for r in range(len(values) + 1):
        for s in itertools.combinations(values, r):
            groups.setdefault(circulant_canonical(s, p), []).append(
                _digraph_canonical(p, circulant_edges(s, p))
            )
    # equal canonical connection sets must describe isomorphic digraphs,
    # and different ones must not
    reps = []
    for labels in groups.values():
        assert len(set(labels)) == 1
        reps.append(labels[0])
    assert len(set(reps)) == len(reps)


def test_circulant_canonical_errors():
    with pytest.raises(ValueError):
        circulant_canonical([1], 4)
    with pytest.raises(ValueError):
        circulant_canonical([0, 1], 5)


def brute_vertex_transitive(m):
    """Canonical forms of all vertex-transitive digraphs on m vertices."""
    pairs = [(x, y) for x in range(m) for y in range(m) if x != y]
    found = set()
    for take in itertools.product([False, True], repeat=len(pairs)):
        edges = tuple(p for p, t in zip(pairs, take) if t)
        if digraph_automorphisms(m, edges).is_transitive():
            found.add(_digraph_canonical(m, edges))
    return tuple(sorted(found, key=lambda e: (len(e), e)))


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_vertex_transitive_enumeration_small(m):
    assert vertex_transitive_digraphs(m) == brute_vertex_transitive(m)


def test_vertex_transitive_counts():
    assert len(vertex_transitive_digraphs(1)) == 1
    assert len(vertex_transitive_digraphs(2)) == 2
    assert len(vertex_transitive_digraphs(3)) == 3
    with pytest.raises(ValueError):
        vertex_transitive_digraphs(7)


def test_vertex_transitive_outputs_are_canonical_and_regular():
    for m in [4, 5, 6]:
        for edges in vertex_transitive_digraphs(m):
            assert edges == _digraph_canonical(m, edges)
            out = [0] * m
            inc = [0] * m
            for x, y in edges:
                out[x] += 1
                inc[y] += 1
            assert len(set(out)) == 1
            assert len(set(inc)) == 1


def test_wdg_round_trip():
    rng = random.Random(8)
    for group in [Z2, V4, AbelianGroup([])]:
        for m in [1, 3, 5]:
            w = random_digraph(rng, m, group)
            assert parse_wdg(format_wdg(w)) == w
            assert format_wdg(parse_wdg(format_wdg(w))) == format_wdg(w)


def test_wdg_comments_and_spacing():
    text = "# header comment\nwdg 2 1 # sizes\n3\n0 1 2\n\n1 0 1 # back edge\n"
    w = parse_wdg(text)
    assert w.group.moduli == (3,)
    assert w.weights == ((0, 2), (1, 0))


@pytest.mark.parametrize(
    "text",
    [
        "",
        "wdg 2\n2\n",
        "wdg 0 1\n2\n",
        "wdg 2 1\n",
        "wdg 2 1\n2\n0 0 1\n",  # loop
        "wdg 2 1\n2\n0 1 1\n0 1 1\n",  # duplicate edge
        "wdg 2 1\n2\n0 1 0\n",  # zero weight listed
        "wdg 2 1\n2\n0 1 2\n",  # residue out of range
        "wdg 2 1\n2\n0 2 1\n",  # vertex out of range
        "wdg 2 1\n2\n0 1\n",  # missing residue
    ],
)
def test_wdg_parse_errors(text):
    with pytest.raises(FormatError):
        parse_wdg(text)


def test_dot_merges_antiparallel_equal_weights():
    w = WeightedDigraph(Z2, [[0, 1], [1, 0]])
    dot = format_dot(w)
    assert dot.count("->") == 1
    assert "dir=both" in dot
    assert "label" not in dot  # single nonzero weight needs no labels

    w = WeightedDigraph(Z3, [[0, 1, 0], [0, 0, 1], [2, 0, 0]])
    dot = format_dot(w)
    assert dot.count("->") == 3
    assert 'label="+2"' in dot
