"""M(infinity) fragments, the coherent limit, and the Theta comparison."""
from krcrystals.kyoto import verify_thm51, verify_thm52
from krcrystals.lattice import Monomial, make_params
from krcrystals.monomials import MInfinityFragment, dagger_stats, f_dagger

p = make_params(3)
frag = MInfinityFragment(p, 4)
print("layer sizes:", [len(layer) for layer in frag.layers])

m = f_dagger(p, f_dagger(p, Monomial(), 1), 2)
print("f2 f1 1 =", m.display())
print("(eps, phi) per i:", [dagger_stats(p, m, i) for i in range(3)])

for rep in (verify_thm51(3, 5), verify_thm52(p, 5)):
    print(rep.to_json())
