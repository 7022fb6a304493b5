"""Expand the coloring series of an incomparability graph and read off the
representation theory hiding in its coefficients.

Proper colorings of the graph attached to h, weighted by q per ascending
edge, assemble into a symmetric function X(x; q).  For one-row h only two
Schur shapes survive, the column and the one-box-wider hook, and their
coefficients count fillings by inversions.  Setting q = 1 lands on a
positive combination of elementary symmetric functions whose two
coefficients are exactly the orbit and fixed-point counts of the monomial
model.
"""

import math

from hesscomb import (
    Partition,
    change_basis,
    csf_by_coloring,
    csf_schur_by_ptableaux,
    enumerate_p_tableaux,
    inc_graph,
    inversions,
    new_hessenberg,
)


def main():
    h = new_hessenberg([4, 5, 5, 5, 5])
    n = h.n
    g = inc_graph(h)
    print(f"h = {list(h.values)}, incomparability graph on {n} vertices")
    print(f"edges: {sorted(g.edges)}")

    X = csf_by_coloring(g)
    schur = change_basis(X, "schur")
    print()
    print("Schur expansion of the coloring series:")
    for shape, coeff in schur.sorted_terms():
        print(f"  s_{list(shape.parts)}: {coeff}")

    hook = Partition((2, 1, 1, 1))
    print()
    print(f"the coefficient of s_{list(hook.parts)} counts fillings of that")
    print("shape by inversions:")
    tabs = enumerate_p_tableaux(h, hook)
    for t in tabs:
        print(f"  rows {list(t.rows)}  inversions {inversions(h, t).count}")
    multiset = sorted(inversions(h, t).count for t in tabs)
    print(f"  inversion multiset {multiset} regenerates the coefficient above")

    assert schur == csf_schur_by_ptableaux(h), "tableau route must agree"

    print()
    elem = change_basis(X, "elementary").at_q(1)
    print("elementary expansion at q = 1:")
    for shape, coeff in elem.sorted_terms():
        print(f"  e_{list(shape.parts)}: {coeff}")
    h1 = h(1)
    std = (n - h1) * math.factorial(n - 2)
    fixed = n * (h1 - 1) * math.factorial(n - 2)
    print(f"predicted from the orbit model: {std} and {fixed}")


if __name__ == "__main__":
    main()
