"""Finite quandles as Cayley tables.

A quandle of order n is stored as an n x n table with table[x][y] = s_x(y),
where s_x is the symmetry at x.  The axioms are: s_x(x) = x, every s_x is a
bijection, and s_x(s_y(z)) = s_{s_x(y)}(s_x(z)).
"""

from __future__ import annotations

import numpy as np

from .algebra import PermGroup, cycle_lengths
from .errors import BudgetExceeded, FormatError, resolve_budget

__all__ = [
    "Quandle",
    "check_axioms",
    "inner_group",
    "is_connected",
    "is_homogeneous",
    "quandle_isomorphic",
    "read_qnd",
    "symmetry",
    "write_qnd",
]


class Quandle:
    """Immutable wrapper around a Cayley table (shape checked, axioms not)."""

    def __init__(self, table):
        table = tuple(tuple(int(v) for v in row) for row in table)
        n = len(table)
        if n == 0:
            raise ValueError("quandle order must be >= 1")
        for x, row in enumerate(table):
            if len(row) != n:
                raise ValueError(f"row {x} has length {len(row)}, expected {n}")
            for v in row:
                if not 0 <= v < n:
                    raise ValueError(f"entry {v} in row {x} out of range 0..{n - 1}")
        self.table = table
        self.n = n

    def op(self, x, y):
        return self.table[x][y]

    def __eq__(self, other):
        return isinstance(other, Quandle) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"Quandle(order={self.n})"


def symmetry(q, x):
    """The symmetry s_x as a permutation tuple."""
    return q.table[x]


def check_axioms(table):
    """First witness per violated axiom, as (name, points) pairs.

    Accepts a Quandle or a raw square table.  Empty list means the table is
    a quandle.  Q3 runs vectorized: for fixed x the identity
    s_x(s_y(z)) = s_{s_x(y)}(s_x(z)) compares row gathers.
    """
    q = table if isinstance(table, Quandle) else Quandle(table)
    arr = np.asarray(q.table, dtype=np.int64)
    n = q.n
    out = []
    bad = np.flatnonzero(arr.diagonal() != np.arange(n))
    if bad.size:
        out.append(("idempotence", (int(bad[0]),)))
    bad = [x for x in range(n) if len(set(q.table[x])) != n]
    if bad:
        out.append(("bijectivity", (bad[0],)))
        return out  # rows are not permutations, distributivity is meaningless
    for x in range(n):
        row = arr[x]
        lhs = row[arr]  # lhs[y, z] = s_x(s_y(z))
        rhs = arr[np.ix_(row, row)]  # rhs[y, z] = s_{s_x(y)}(s_x(z))
        if not np.array_equal(lhs, rhs):
            y, z = np.argwhere(lhs != rhs)[0]
            out.append(("distributivity", (x, int(y), int(z))))
            break
    return out


def inner_group(q):
    """Group generated by the symmetries (elements stay unmaterialized)."""
    return PermGroup(q.n, set(q.table))


def is_connected(q):
    return inner_group(q).is_transitive()


def _profiles(q):
    orbit_size = {}
    for o in inner_group(q).orbits():
        for x in o:
            orbit_size[x] = len(o)
    return tuple(
        (tuple(cycle_lengths(q.table[x])), orbit_size[x]) for x in range(q.n)
    )


class _Matcher:
    """Backtracking search for a table isomorphism, with forced propagation.

    Whenever f(x) and f(y) are both decided, f(t1[x][y]) and f(t1[y][x]) are
    forced; contradictions prune the branch.  Every propagated assignment
    costs one budget node.
    """

    def __init__(self, q1, q2, budget):
        self.t1 = q1.table
        self.t2 = q2.table
        self.n = q1.n
        p1, p2 = _profiles(q1), _profiles(q2)
        self.candidates = [
            tuple(u for u in range(self.n) if p2[u] == p1[x]) for x in range(self.n)
        ]
        self.img = [-1] * self.n
        self.used = [False] * self.n
        self.assigned = []
        self.nodes = 0
        self.budget = budget

    def _propagate(self, x, u, trail):
        pending = [(x, u)]
        while pending:
            x, u = pending.pop()
            if self.img[x] != -1:
                if self.img[x] != u:
                    return False
                continue
            if self.used[u]:
                return False
            self.nodes += 1
            if self.nodes > self.budget:
                raise BudgetExceeded(f"isomorphism search exceeded {self.budget} nodes")
            self.img[x] = u
            self.used[u] = True
            self.assigned.append(x)
            trail.append((x, u))
            for y in self.assigned:
                v = self.img[y]
                pending.append((self.t1[x][y], self.t2[u][v]))
                pending.append((self.t1[y][x], self.t2[v][u]))
        return True

    def _undo(self, trail, depth):
        while len(trail) > depth:
            x, u = trail.pop()
            self.img[x] = -1
            self.used[u] = False
            self.assigned.pop()

    def search(self, trail):
        if len(self.assigned) == self.n:
            return tuple(self.img)
        x = min(
            (x for x in range(self.n) if self.img[x] == -1),
            key=lambda x: sum(1 for u in self.candidates[x] if not self.used[u]),
        )
        for u in self.candidates[x]:
            if self.used[u]:
                continue
            depth = len(trail)
            if self._propagate(x, u, trail):
                found = self.search(trail)
                if found is not None:
                    return found
            self._undo(trail, depth)
        return None

    def find(self, anchor=None):
        if anchor is None:
            return self.search([])
        x0, u0 = anchor
        trail = []
        if self._propagate(x0, u0, trail):
            return self.search(trail)
        return None


def quandle_isomorphic(q1, q2, budget=None):
    """An isomorphism q1 -> q2 as a permutation tuple, or None."""
    if q1.n != q2.n:
        return None
    budget = resolve_budget(budget)
    return _Matcher(q1, q2, budget).find()


def is_homogeneous(q, budget=None):
    """Whether the automorphism group is transitive.

    Runs one anchored search per target point; points already reached by a
    found automorphism (closing under iteration) are skipped.
    """
    if q.n <= 1:
        return True
    budget = resolve_budget(budget)
    reached = {0}
    for t in range(1, q.n):
        if t in reached:
            continue
        f = _Matcher(q, q, budget).find(anchor=(0, t))
        if f is None:
            return False
        x = f[0]
        while x not in reached:
            reached.add(x)
            x = f[x]
        for y in list(reached):
            x = f[y]
            while x not in reached:
                reached.add(x)
                x = f[x]
    return True


def _data_lines(text):
    """(lineno, content) pairs with comments stripped and blanks dropped."""
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((i, line))
    return out


def parse_qnd(text):
    lines = _data_lines(text)
    if not lines:
        raise FormatError("line 1: empty file, expected 'quandle <n>' header")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "quandle":
        raise FormatError(f"line {lineno}: expected 'quandle <n>', got {header!r}")
    try:
        n = int(parts[1])
    except ValueError:
        raise FormatError(f"line {lineno}: order {parts[1]!r} is not an integer")
    if n < 1:
        raise FormatError(f"line {lineno}: order must be >= 1, got {n}")
    rows = lines[1:]
    if len(rows) != n:
        raise FormatError(f"line {lineno}: expected {n} rows, found {len(rows)}")
    table = []
    for lineno, line in rows:
        try:
            row = [int(v) for v in line.split()]
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer entry in {line!r}")
        if len(row) != n:
            raise FormatError(f"line {lineno}: expected {n} entries, got {len(row)}")
        for v in row:
            if not 0 <= v < n:
                raise FormatError(f"line {lineno}: entry {v} out of range 0..{n - 1}")
        table.append(row)
    return Quandle(table)


def format_qnd(q):
    lines = [f"quandle {q.n}"]
    lines.extend(" ".join(str(v) for v in row) for row in q.table)
    return "\n".join(lines) + "\n"


def read_qnd(path):
    with open(path, encoding="ascii") as fh:
        return parse_qnd(fh.read())


def write_qnd(q, path):
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_qnd(q))
