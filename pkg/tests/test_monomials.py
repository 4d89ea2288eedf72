import pytest

from krcrystals.errors import NotInCoherentLattice, NotXFactorizable
from krcrystals.lattice import (
    Monomial,
    make_params,
    mono_weight,
    pairing,
    x_factorize,
    x_monomial,
    x_product,
)
from krcrystals.monomials import (
    MInfinityFragment,
    StringData,
    coh_stats,
    coherent_exponents,
    dagger_stats,
    e_bar,
    e_coh,
    e_dagger,
    e_std,
    f_bar,
    f_coh,
    f_dagger,
    f_std,
    seed_m1s,
    string_data,
)

P3 = make_params(3)
P4 = make_params(4)


def M(*triples):
    return Monomial(triples)


def X(p, **exps):
    # X(p, a10=-1, a20=1) -> X_{1,0}^{-1} X_{2,0}
    out = Monomial()
    for name, e in exps.items():
        out = out * x_monomial(p, int(name[1]), int(name[2:])) ** e
    return out


SEED3 = M((0, 1, -3), (1, 0, 3))


# -- standard operators -----------------------------------------------------

def test_string_data_examples():
    assert string_data(P3, SEED3, 0) == StringData(3, 0, 0, None)
    sd = string_data(P3, SEED3, 1)
    assert (sd.eps, sd.phi, sd.k_f) == (0, 3, 0)
    assert string_data(P3, Monomial(), 2) == StringData(0, 0, None, None)


def test_f_std_m13_edge():
    assert f_std(P3, SEED3, 1) == M((0, 1, -2), (1, 0, 2), (1, 1, -1), (2, 0, 1))


def test_e_std_m13_edge():
    assert e_std(P3, SEED3, 0) == M((0, 0, 1), (0, 1, -2), (1, 0, 2), (2, 1, -1))


def test_zero_results():
    assert f_std(P3, Monomial(), 0) is None
    assert e_std(P3, Monomial(), 0) is None


def test_k_e_is_largest_minimiser():
    # tail sums in row 1: -1 below 0, -2 on [0, 1], -1 on [2, 3], 0 above
    m = M((1, 0, 1), (1, 2, -1), (1, 4, -1))
    sd = string_data(P3, m, 1)
    assert (sd.eps, sd.k_e) == (2, 1)
    assert (sd.phi, sd.k_f) == (1, 0)


def test_seed_m1s_examples():
    assert seed_m1s(P3, 3) == SEED3
    assert seed_m1s(make_params(5), 2) == M((0, 1, -2), (1, 0, 2))
    assert seed_m1s(P3, 1) == M((0, 1, -1), (1, 0, 1))
    with pytest.raises(ValueError):
        seed_m1s(P3, 0)


def test_m1s_closure_stays_in_x_simplex():
    frontier, seen = [seed_m1s(P3, 3)], set()
    while frontier:
        m = frontier.pop()
        if m in seen:
            continue
        seen.add(m)
        xs = level_zero_exponents(m)
        assert min(xs) >= 0 and sum(xs) == 3
        for i in range(3):
            for op in (e_std, f_std):
                y = op(P3, m, i)
                if y is not None:
                    frontier.append(y)
    assert len(seen) == 10


def level_zero_exponents(m):
    fac = x_factorize(P3, m)
    assert fac.levels() <= {0}
    return fac.level_vector(0)


# -- M(infinity) ------------------------------------------------------------

def test_f_dagger_examples():
    one = Monomial()
    f1 = f_dagger(P3, one, 1)
    assert f1 == M((0, 1, 1), (1, 0, -1), (1, 1, -1), (2, 0, 1))
    assert f1 == X(P3, a10=-1, a20=1)
    assert f_dagger(P3, f1, 2) == X(P3, a10=-1, a30=1)
    assert f_dagger(P3, f1, 1) == X(P3, a10=-2, a20=2)


def test_e_dagger_examples():
    frag = MInfinityFragment(P3, 3)
    f1 = f_dagger(P3, Monomial(), 1)
    assert e_dagger(frag, f1, 1) == Monomial()
    assert e_dagger(frag, Monomial(), 1) is None
    assert e_dagger(frag, X(P3, a10=-1, a30=1), 2) == X(P3, a10=-1, a20=1)


def test_dagger_stats_examples():
    assert all(dagger_stats(P3, Monomial(), i) == (0, 0) for i in range(3))
    assert dagger_stats(P3, X(P3, a10=-2, a20=2), 1)[0] == 2
    assert dagger_stats(P3, f_dagger(P3, Monomial(), 1), 2)[1] == 1


def test_dagger_phi_can_be_negative():
    eps, phi = dagger_stats(P3, f_dagger(P3, Monomial(), 1), 1)
    assert (eps, phi) == (1, -1)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_fragment_axiom_and_support(n):
    p = make_params(n)
    frag = MInfinityFragment(p, 5)
    for m in frag:
        assert all(k >= 0 for _, k, _ in m.factors())
        for i in range(n):
            eps, phi = dagger_stats(p, m, i)
            assert phi - eps == pairing(i, mono_weight(m, n))


def test_fragment_depth_one_layer():
    frag = MInfinityFragment(P3, 1)
    assert len(frag.layers[1]) == 3


def test_f_dagger_needs_default_orientation():
    p = make_params(2, [[0, 0], [1, 0]])
    with pytest.raises(ValueError):
        f_dagger(p, Monomial(), 0)


# -- M_infinity -------------------------------------------------------------

def test_coh_examples():
    one = Monomial()
    f1 = f_coh(P3, one, 1)
    assert f1 == X(P3, a10=-1, a20=1)
    assert e_coh(P3, f1, 1) == one
    assert f_coh(P3, X(P3, a20=-1, a30=1), 2) == X(P3, a20=-2, a30=2)


def test_coh_stats_examples():
    assert all(coh_stats(P3, Monomial(), i) == (0, 0) for i in range(3))
    assert coh_stats(P3, X(P3, a10=-1, a20=1), 1) == (1, -1)


def test_not_in_coherent_lattice():
    with pytest.raises(NotInCoherentLattice):
        coherent_exponents(P3, Monomial.Y(0, 0))
    with pytest.raises(NotInCoherentLattice):
        coherent_exponents(P3, x_monomial(P3, 1, 0))
    with pytest.raises(NotInCoherentLattice):
        f_coh(P3, X(P3, a11=1, a21=-1), 0)


# -- X^2 quotient -----------------------------------------------------------

def test_bar_examples():
    m = x_product(P4, (1, 1, 0, 0))
    assert f_bar(P4, m, 1) is None
    assert f_bar(P4, m, 2) == x_product(P4, (1, 0, 1, 0))
    assert e_bar(P4, m, 1) is None


def test_bar_rejects_malformed_input():
    with pytest.raises(NotXFactorizable):
        f_bar(P4, x_product(P4, (2, 0, 0, 0)), 1)
    with pytest.raises(NotXFactorizable):
        f_bar(P4, Monomial.Y(0, 0), 1)
