"""Print the worked examples: the 4x4 confluent inverse, its r_s rescaling,
the 4-node usual inverse, and partial fractions, all in exact arithmetic.

    python scripts/worked_examples.py
"""

from fractions import Fraction

from confvand import (
    NodeSystem,
    build_confluent,
    hermite_basis,
    invert_confluent,
    invert_rs,
    invert_usual,
    partial_fractions,
    verify_similarity,
)


def show(title, m):
    print(title)
    width = max(len(str(c)) for r in m.entries for c in r)
    for r in m.entries:
        print("  " + "  ".join(str(c).rjust(width) for c in r))
    print()


def main():
    system = NodeSystem.from_pairs([(Fraction(2), 3), (Fraction(-1), 1)])
    show("V_G for (x-2)^3 (x+1):", build_confluent(system))
    basis = hermite_basis(system)
    for slot in system.slots():
        print(f"  L{slot} = {basis[slot]}")
    print()
    show("inverse:", invert_confluent(system))
    show("r_s inverse, r = ((1, 0, 2), (3,)):", invert_rs(system, [[1, 0, 2], [3]]))
    show("usual inverse at 0, 1, 2, 3:", invert_usual([0, 1, 2, 3]))
    print("1/((x-2)^3 (x+1)) =")
    for t in partial_fractions(system):
        print(f"  {t.coefficient} / (x - {system.alphas[t.node]})^{t.exponent}")
    print()
    print("C_P V_G == V_G J:", verify_similarity(system).ok)


if __name__ == "__main__":
    main()
