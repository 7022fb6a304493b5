"""Print the change-of-basis matrices between the two y-sector bases and
measure how far they are from unimodular.

Both B1 u B2 and B1 u B3 are bases of the same ring, so expressing one in
the other gives a block matrix per degree with integer entries.  The blocks
are always invertible over the rationals, but their determinants pick up a
factor n for every distinct x-part that the difference basis uses in that
degree.  The script prints the blocks for two small cases and tabulates the
determinant law across all one-row h with n <= 5.
"""

from hesscomb import (
    basis_B3,
    check_unimodular,
    new_hessenberg,
    transition_blocks,
)


def show_blocks(values):
    h = new_hessenberg(values)
    print(f"h = {values}:")
    for b in transition_blocks(h):
        rows = [e.pretty() for e in b.row_elements]
        cols = [e.pretty() for e in b.col_elements]
        print(f"  degree {b.degree}: rows {rows}")
        print(f"             cols {cols}")
        for row in b.matrix:
            print(f"    {list(row)}")
        uni = "unimodular" if check_unimodular(b) else "not unimodular"
        print(f"    determinant {b.determinant()} ({uni})")


def main():
    show_blocks([2, 3, 3])
    print()
    show_blocks([1, 3, 3])

    print()
    print("determinant law over all one-row h with n <= 5:")
    print("|det| = n^g, g = distinct x-parts used by the degree's differences")
    for n in range(2, 6):
        for h1 in range(1, n + 1):
            h = new_hessenberg([h1] + [n] * (n - 1))
            b3 = basis_B3(h)
            ydeg = b3.y_degree()
            groups = {}
            for e in b3.elements:
                m = next(iter(e.terms))
                groups.setdefault(m.qdegree(ydeg), set()).add(m.xexp)
            dets = []
            for b in transition_blocks(h):
                g = len(groups.get(b.degree // 2, ()))
                assert abs(b.determinant()) == n**g
                dets.append(b.determinant())
            print(f"  n = {n}, h(1) = {h1}: block determinants {dets}")


if __name__ == "__main__":
    main()
