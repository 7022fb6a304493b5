"""List the monomial bases of the quotient-ring models and show how the
normal form lands arbitrary elements back on them.

For a one-row function h = (h(1), n, ..., n) the ring splits into a pure
x-sector with basis B1 and a y-sector whose basis can be written either as
B2 (monomials x^a y_k) or as B3 (differences x^a (y_{k+1} - y_1)).  The
nilpotent model uses the single staircase basis N_h.  The script prints all
of them for h = (2, 3, 3), reduces a few elements to normal form, and
tallies the dimension bookkeeping.
"""

from hesscomb import (
    XYElement,
    XYMonomial,
    basis_B1,
    basis_B2,
    basis_B3,
    basis_nilpotent,
    basis_transpose,
    decomposition_counts,
    degree_gf,
    multiply,
    new_hessenberg,
    normal_form,
    permutation_orbits,
)


def show_basis(b):
    print(f"  {b.label} ({len(b)} elements): ", end="")
    print(", ".join(e.pretty() for e in b.elements))


def main():
    h = new_hessenberg([2, 3, 3])
    print(f"h = {list(h.values)}")

    for b in [basis_B1(h), basis_B2(h), basis_B3(h), basis_nilpotent(h)]:
        show_basis(b)
    print("transpose-form bases (variables mirrored, x_i <-> x_{n+1-i}):")
    for b in basis_transpose(h):
        show_basis(b)

    print()
    print("normal forms against B1 u B2:")
    y3 = XYElement.monomial(XYMonomial((0, 0, 0), 3))
    x2sq = XYElement.monomial(XYMonomial((0, 2, 0)))
    for name, e in [("y3", y3), ("x2^2", x2sq)]:
        print(f"  {name} reduces to {normal_form(e, h).pretty()}")

    y2 = XYElement.monomial(XYMonomial((0, 0, 0), 2))
    y1 = XYElement.monomial(XYMonomial((0, 0, 0), 1))
    print(f"  y2 * y2 multiplies to {multiply(h, y2, y2).pretty()}")
    print(f"  y1 * y2 multiplies to {multiply(h, y1, y2).pretty()}")

    print()
    print("degree generating functions (q counts half the grading):")
    gf1 = degree_gf(basis_B1(h))
    gf3 = degree_gf(basis_B3(h))
    print(f"  B1: {gf1}")
    print(f"  B3: {gf3}")
    print(f"  sum: {gf1 + gf3}  (the Poincare polynomial)")

    print()
    dc = decomposition_counts(h)
    m_triv, m_std = dc.totals()
    print("module structure of the y-free and y-carrying parts:")
    print(f"  by degree (trivial, standard): {dc.by_degree}")
    print(f"  totals: {m_triv} trivial constituents, {m_std} standard,")
    print(f"  total dimension {dc.total_dimension()} = n!")

    op = permutation_orbits(h)
    print()
    print("permutation orbits inside the y-sector:")
    for orbit in op.orbits:
        print(f"  orbit: {[e.pretty() for e in orbit]}")
    print(f"  fixed monomials: {[e.pretty() for e in op.fixed]}")


if __name__ == "__main__":
    main()
