"""Classify every order up to 15 and print the resulting table.

Each class is stored as one canonical weighted digraph.  The breakdown for
order 12 is printed in full because it is the first order where every
branch of the enumeration (trivial, two-orbit, prime lists, and the
vertex-transitive sweeps for four and six vertices) contributes entries.
"""

from collections import Counter

from homquandles import classify_order, moduli_label


def main():
    print("order  classes")
    for n in range(1, 16):
        catalog = classify_order(n)
        print(f"{n:5d}  {len(catalog.entries)}")

    catalog = classify_order(12)
    print()
    print("order 12 breakdown by (vertices, group):")
    counts = Counter((e.x, e.moduli) for e in catalog.entries)
    for (x, moduli), c in sorted(counts.items()):
        print(f"  x={x} A={moduli_label(moduli)}: {c}")
    print("  total:", len(catalog.entries))


if __name__ == "__main__":
    main()
