"""Build M^{1,3} for n = 3, compare it with B^{1,3} and print it as DOT."""
from krcrystals.engine import check_axioms, is_isomorphic
from krcrystals.kyoto import kr_graph, m1s_graph
from krcrystals.lattice import make_params

p = make_params(3)
g = m1s_graph(p, 3)
print(f"{len(g)} vertices, {g.num_edges()} edges, axioms {check_axioms(g).passed}")

b = kr_graph(3, 3)
for u, v in sorted(is_isomorphic(g, b).items()):
    print(f"  {g.labels[u]:<45} <-> {b.labels[v]}")

print(g.to_dot())
