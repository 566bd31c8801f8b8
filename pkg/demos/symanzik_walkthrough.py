"""Graph polynomials from spanning trees, step by step.

Run from the repository root: python3 demos/symanzik_walkthrough.py
"""

from feynperiods import (
    load_graph,
    partial_factor_psi,
    phi,
    psi_determinant,
    psi_enumerate,
    spanning_trees,
    spanning_two_forests,
    xi,
)

# The triangle: one loop, three edges, three external legs with distinct
# momentum invariants, masses 1, 2, 3 on the edges.
g = load_graph("fixtures/triangle.json")
print("triangle:", g.n_edges, "edges,", g.loop_number(), "loop")

# Each spanning tree leaves out one edge; the product of the left-out
# Schwinger parameters is one monomial of psi.
for tree in spanning_trees(g):
    left_out = sorted(set(g.edge_ids()) - set(tree))
    print("  tree", tree, "-> monomial from edges", left_out)
print("psi =", psi_enumerate(g).render())

# The same polynomial falls out of the weighted Laplacian determinant.
# Two routes, one answer; the library keeps both on purpose.
assert psi_enumerate(g) == psi_determinant(g)

# Cutting the tree once more gives a two-forest; the momentum flowing
# between the two components weights each term of phi.
for (edges_a, verts_a), (edges_b, verts_b) in spanning_two_forests(g):
    print("  forest", edges_a, sorted(verts_a), "|", edges_b, sorted(verts_b))
print("phi =", phi(g).render())

# xi adds the mass term (sum of m^2 alpha) * psi on top of phi.
print("xi  =", xi(g).render())

# A two-loop example: two vertices chained, then a doubled edge back.
# Contracting the doubled edge {3, 4} leaves a two-gon on edges 1, 2, and
# psi splits into the product of the two small psis plus a remainder that
# vanishes to one order higher in the contracted variables.
g2 = load_graph("fixtures/fourgraph.json")
print("\nfourgraph psi =", psi_enumerate(g2).render())
f = partial_factor_psi(g2, (3, 4))
print("psi_gamma    =", f.factor_sub.render())
print("psi_quotient =", f.factor_quotient.render())
print("remainder    =", f.remainder.render())
assert f.recombine() == psi_enumerate(g2)
