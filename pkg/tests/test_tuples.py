from math import comb

import pytest

from krcrystals.lattice import Monomial, Weight, make_params, x_monomial, x_product
from krcrystals.tuples import (
    TupleElement,
    affinize,
    coh_e,
    coh_f,
    coherent,
    coherent_ball,
    col_e,
    col_embed,
    col_f,
    col_seed_map,
    column,
    column_elements,
    kr,
    kr_e,
    kr_elements,
    kr_f,
    phi_map,
    promotion,
    promotion_inverse,
    psi_map,
    tuple_e,
    tuple_eps,
    tuple_f,
    tuple_phi,
    tuple_weight,
)

P3 = make_params(3)


def M(*triples):
    return Monomial(triples)


def test_kr_examples():
    assert kr_f(kr(3, 0, 0), 1) == kr(2, 1, 0)
    assert kr_f(kr(2, 0, 1), 0) == kr(3, 0, 0)
    assert kr_e(kr(1, 1, 1), 2) == kr(1, 2, 0)
    assert kr_f(kr(0, 3, 0), 1) is None


def test_kr_validation():
    with pytest.raises(ValueError):
        TupleElement((1, -1, 0), "kr", 0)
    with pytest.raises(ValueError):
        TupleElement((1, 1, 0), "kr", 3)


def test_coherent_examples():
    z = coherent(0, 0, 0)
    assert coh_f(z, 1) == coherent(-1, 1, 0)
    assert coh_e(coh_f(z, 1), 1) == z
    assert coh_f(coherent(0, -1, 1), 2) == coherent(0, -2, 2)


def test_column_examples():
    t = column(1, 1, 0, 0)
    assert col_f(t, 2) == column(1, 0, 1, 0)
    assert col_f(t, 1) is None
    assert col_e(t, 0) == column(0, 1, 0, 1)


def test_column_validation():
    with pytest.raises(ValueError):
        column(2, 0, 0)
    with pytest.raises(ValueError):
        column(1, 1, 1)


def test_affinize_examples():
    t = affinize(kr(2, 0, 1), 3)
    assert tuple_e(t, 0) == affinize(kr(1, 0, 2), 4)
    assert tuple_f(affinize(kr(3, 0, 0), 0), 1) == affinize(kr(2, 1, 0), 0)
    assert tuple_weight(affinize(kr(0, 0, 3), 2)) == Weight((3, 0, -3), 2)
    with pytest.raises(ValueError):
        affinize(t, 1)
    with pytest.raises(ValueError):
        affinize(coherent(0, 0, 0), 0)


def test_f0_lowers_degree():
    t = affinize(kr(2, 0, 1), 3)
    assert tuple_f(t, 0) == affinize(kr(3, 0, 0), 2)


def test_phi_map_examples():
    assert phi_map(P3, kr(3, 0, 0)) == M((0, 1, -3), (1, 0, 3))
    assert phi_map(P3, kr(1, 1, 1)) == M((0, 0, 1), (0, 1, -1), (1, 0, 1), (1, 1, -1), (2, 0, 1), (2, 1, -1))
    assert phi_map(make_params(5), kr(0, 0, 0, 0, 1)) == M((0, 0, 1), (4, 1, -1))


def test_psi_map_examples():
    assert psi_map(P3, coherent(0, 0, 0)) == Monomial()
    assert psi_map(P3, coherent(-1, 1, 0)) == M((0, 1, 1), (1, 0, -1), (1, 1, -1), (2, 0, 1))
    assert psi_map(P3, coherent(1, -1, 0)) == M((0, 1, -1), (1, 0, 1), (1, 1, 1), (2, 0, -1))


def test_col_seed_map_examples():
    p = make_params(4)
    assert col_seed_map(p, column(1, 1, 0, 0)) == x_monomial(p, 1, 0) * x_monomial(p, 2, 0)
    assert col_seed_map(p, column(1, 0, 1, 0)) == x_monomial(p, 1, 0) * x_monomial(p, 3, 0)
    assert col_seed_map(p, column(1, 1, 0, 0), 2) == x_product(p, (1, 1, 0, 0), 2)


def test_col_embed_examples():
    t = col_embed(column(1, 1, 0, 0))
    assert t == kr(1, 1, 0, 0) and t.s_or_r == 2
    u = column(1, 0, 0, 1)
    assert kr_f(col_embed(u), 1) == col_embed(col_f(u, 1)) == kr(0, 1, 0, 1)


def test_promotion_examples():
    assert promotion(kr(2, 0, 1)) == kr(1, 2, 0)
    t = kr(2, 0, 1)
    assert promotion_inverse(kr_f(promotion(t), 1)) == kr_f(t, 0) == kr(3, 0, 0)


def test_column_statistics_modes():
    t = column(1, 1, 0, 0)
    assert (tuple_eps(t, 1), tuple_phi(t, 1)) == (0, 0)
    assert (tuple_eps(t, 1, "induced"), tuple_phi(t, 1, "induced")) == (1, 1)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_enumeration_sizes(n):
    for s in range(1, 5):
        assert len(kr_elements(n, s)) == comb(n + s - 1, n - 1)
    for r in range(1, n):
        assert len(column_elements(n, r)) == comb(n, r)


def test_coherent_ball_radius_one():
    assert len(coherent_ball(3, 1)) == 7


def test_json_round_trip():
    for t in (kr(1, 2, 0), affinize(kr(1, 0), 5), coherent(-1, 1), column(0, 1, 1)):
        assert TupleElement.from_json(t.to_json()) == t
    assert "degree" not in kr(1, 0).to_json()
