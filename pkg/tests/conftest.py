"""Shared helpers for the test suite.

Small named quandles used across files, plus a relabeling utility for
building isomorphic copies.  Everything here is deliberately naive; the
helpers act as independent reference constructions, not wrappers around
the code under test.
"""

from homquandles import Quandle


def dihedral(n):
    """The dihedral quandle on Z_n: s_x(y) = 2x - y mod n."""
    return Quandle([[(2 * x - y) % n for y in range(n)] for x in range(n)])


def trivial(n):
    """The trivial quandle: every symmetry is the identity."""
    return Quandle([list(range(n)) for _ in range(n)])


def relabel(q, f):
    """The quandle with point x renamed to f[x]."""
    inv = [0] * q.n
    for x, v in enumerate(f):
        inv[v] = x
    return Quandle(
        [[f[q.table[inv[x]][inv[y]]] for y in range(q.n)] for x in range(q.n)]
    )


def is_morphism(q1, q2, f):
    """Whether f(x * y) = f(x) * f(y) entrywise."""
    return all(
        f[q1.table[x][y]] == q2.table[f[x]][f[y]]
        for x in range(q1.n)
        for y in range(q1.n)
    )
