"""Power counting: which graphs give convergent period integrals.

Run from the repository root: python3 demos/divergence_analysis.py
"""

from feynperiods import (
    IntegrandSpec,
    is_phi4,
    is_primitive,
    load_graph,
    projective_degree,
    subgraph_loop_number,
)

# For the 1/psi^2 integrand the projective form is well defined exactly
# when the edge count is twice the loop number.
for name in ("k4", "wheel4", "fourgraph", "triangle"):
    g = load_graph(f"fixtures/{name}.json")
    deg = projective_degree(g, IntegrandSpec())
    print(f"{name:10s} edges={g.n_edges} loops={g.loop_number()} degree={deg:+d}")

# Degree zero is necessary, not sufficient: every proper subgraph must
# have more edges than twice its loop number, otherwise the integral
# diverges where that subgraph's parameters vanish together.
k4 = load_graph("fixtures/k4.json")
primitive, witness = is_primitive(k4)
print("\nK4 primitive:", primitive)

fourgraph = load_graph("fixtures/fourgraph.json")
primitive, witness = is_primitive(fourgraph)
print("fourgraph primitive:", primitive, " witness:", witness)
# the witness saturates the bound: 2 edges, 1 loop
print("witness edges:", len(witness), " witness loops:", subgraph_loop_number(fourgraph, witness))

# phi^4 eligibility is a vertex-degree condition: every vertex sees at
# most four edge ends (legs included).
for name in ("k4", "wheel4", "triangle"):
    g = load_graph(f"fixtures/{name}.json")
    print(name, "phi^4 eligible:", is_phi4(g))
