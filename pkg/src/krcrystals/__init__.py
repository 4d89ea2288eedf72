"""Nakajima monomial and tuple models of Kirillov-Reshetikhin crystals in affine type A."""

from krcrystals.engine import (
    CrystalGraph,
    character,
    check_axioms,
    check_morphism,
    check_perfect,
    check_regular,
    closure,
    is_isomorphic,
    tensor,
    tensor_all,
)
from krcrystals.errors import (
    DuplicateShift,
    LimitExceeded,
    NotInCoherentLattice,
    NotXFactorizable,
    ParamsMismatch,
)
from krcrystals.kyoto import (
    ground_state_path,
    kr_graph,
    kyoto_monomial,
    m1s_graph,
    shifted_product_crystal,
    tensor_power_seed,
)
from krcrystals.lattice import (
    CrystalParams,
    Monomial,
    Weight,
    a_monomial,
    classical_alpha_coords,
    fundamental_weight,
    make_params,
    mono_weight,
    simple_root,
    tau,
    x_factorize,
    x_monomial,
    x_product,
    y_lambda,
)

__version__ = "0.1.0"
