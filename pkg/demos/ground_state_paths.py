"""Ground-state paths telescope to Y_lambda; truncated ones give tensor-power seeds."""
from krcrystals.engine import closure, is_isomorphic, tensor_all
from krcrystals.families import StdMonomials
from krcrystals.kyoto import ground_state_path, kr_graph, kyoto_monomial, tensor_power_seed
from krcrystals.lattice import Weight, make_params

n = 5
p = make_params(n)
lam = Weight((1, 0, 0, 0, 0))
path = ground_state_path(lam, 1, n)
print("path:", " (x) ".join(str(b.xs) for b in path.factors), "(x) u_lambda")
print("monomial:", kyoto_monomial(p, path).display())

for m in range(1, 4):
    seed = tensor_power_seed(p, 1, m)
    g = closure(StdMonomials(p), [seed])
    same = is_isomorphic(g, tensor_all([kr_graph(n, 1)] * m)) is not None
    print(f"m={m}: seed {seed.display():<22} {len(g):>4} elements, = B^(x){m}: {same}")
