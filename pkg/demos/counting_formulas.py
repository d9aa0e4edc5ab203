"""Closed-form counts versus explicit classification.

For order 2p (p an odd prime) the classes split into the trivial one, the
two-orbit one, and shift-invariant weight lists on a directed p-cycle; the
list count has a closed form via the orbit-counting lemma.  Both routes
are computed here and compared.
"""

from homquandles import burnside_details, classify_order, count_two_p


def show_burnside(p, q):
    parts, total, orbits = burnside_details(p, q)
    print(f"  ({p},{q}): parts {'+'.join(str(v) for v in parts)}", end="")
    print(f" = {total}, /{len(parts)} -> {orbits} orbits")


def main():
    print("orbit counts for weight lists (cycle length p, modulus q):")
    show_burnside(5, 2)
    show_burnside(3, 5)
    show_burnside(5, 3)

    print()
    print("order 2p, closed form vs. catalog:")
    for p in (3, 5, 7):
        formula = count_two_p(p)
        catalog = len(classify_order(2 * p).entries)
        mark = "ok" if formula == catalog else "MISMATCH"
        print(f"  p={p}: formula {formula}, catalog {catalog}  [{mark}]")


if __name__ == "__main__":
    main()
