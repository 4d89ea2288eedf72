r"""
Path-model constructions on monomials and their executable verifiers.

* ground-state paths `b^{\lambda}, b^{\mu}, \dots` in `B^{1,s}`;
* products of shifted KR monomial crystals, realizing tensor products;
* the telescoping map `b \otimes b' \mapsto \Phi_s(b)\,\tau_1(\Phi_\mu(b'))`
  into `\mathcal{M}(\lambda)`;
* the `B(\infty)` analogue `m \otimes m' \mapsto m\,\tau_1(m')`.

Each ``verify_*`` function returns a :class:`VerifyReport`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct
from math import comb

from krcrystals.engine import (
    CrystalGraph,
    check_axioms,
    check_morphism,
    check_perfect,
    check_regular,
    closure,
    induced_graph,
    is_isomorphic,
    tensor,
    tensor_all,
)
from krcrystals.errors import DuplicateShift
from krcrystals.families import (
    BarMonomials,
    CoherentMonomials,
    DaggerMonomials,
    StdMonomials,
    TensorFamily,
    TupleFamily,
    element_key,
)
from krcrystals.lattice import (
    CrystalParams,
    Monomial,
    Weight,
    make_params,
    tau,
    x_product,
    y_lambda,
)
from krcrystals.monomials import coherent_exponents, dagger_stats, f_dagger, seed_m1s
from krcrystals.tuples import (
    TupleElement,
    coherent,
    col_embed,
    column,
    kr,
    kr_elements,
    phi_map,
    psi_map,
)

__all__ = [
    "PathSpec",
    "VerifyReport",
    "b_lambda",
    "ground_state_path",
    "shifted_product_elements",
    "shifted_product_crystal",
    "kyoto_monomial",
    "tensor_power_seed",
    "theta_map",
    "m1s_graph",
    "kr_graph",
    "verify_thm31",
    "verify_thm41",
    "verify_thm42",
    "verify_thm51",
    "verify_thm52",
    "verify_prop62",
    "verify_perfect",
]


@dataclass(frozen=True)
class PathSpec:
    lam: Weight
    s: int
    factors: tuple[TupleElement, ...]
    tail_weight: Weight


@dataclass
class VerifyReport:
    theorem: str
    params: dict
    passed: bool
    counterexample: str | None = None
    info: dict = field(default_factory=dict)

    def __bool__(self):
        return self.passed

    def to_json(self) -> dict:
        out = {"theorem": self.theorem, "params": self.params,
               "status": "pass" if self.passed else "fail"}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.info:
            out["info"] = self.info
        return out


def _check_level(lam: Weight, s: int):
    if not lam.is_dominant():
        raise ValueError(f"{lam!r} is not dominant")
    if lam.level != s:
        raise ValueError(f"{lam!r} has level {lam.level}, expected {s}")


# ---------------------------------------------------------------------------
# ground-state paths
# ---------------------------------------------------------------------------

def b_lambda(lam: Weight, s: int) -> TupleElement:
    r"""
    The element of `B^{1,s}` with `\varphi = \lambda`: `x_i = \langle h_i,
    \lambda \rangle`, so `x_n` carries the `\Lambda_0` coefficient.

    EXAMPLES::

        >>> b_lambda(Weight((2, 0, 1)), 3)
        TupleElement(xs=(0, 1, 2), variant='kr', s_or_r=3, degree=None)
    """
    _check_level(lam, s)
    c = lam.lambda_coeffs
    return kr(c[1:] + c[:1])


def _eps_weight(b: TupleElement) -> Weight:
    return Weight(tuple(b.x(i + 1) for i in range(b.n)))


def ground_state_path(lam: Weight, s: int, N: int) -> PathSpec:
    _check_level(lam, s)
    factors = []
    mu = lam
    for _ in range(N):
        b = b_lambda(mu, s)
        factors.append(b)
        mu = _eps_weight(b)
    return PathSpec(lam, s, tuple(factors), mu)


def kyoto_monomial(p: CrystalParams, path: PathSpec, include_tail: bool = True) -> Monomial:
    r"""
    `\prod_{j=1}^{N} \tau_{j-1}(\Phi_s(b_j)) \cdot \tau_N(Y_{\mu_N})`; the
    tail factor is dropped when ``include_tail`` is false.
    """
    out = Monomial()
    for j, b in enumerate(path.factors):
        out = out * tau(phi_map(p, b), j)
    if include_tail:
        out = out * tau(y_lambda(p, path.tail_weight), len(path.factors))
    return out


def tensor_power_seed(p: CrystalParams, s: int, m: int) -> Monomial:
    """`Y_{-m,m}^{-s} Y_{0,0}^s`, first index read mod `n`."""
    if s < 1 or m < 1:
        raise ValueError("s and m must be positive")
    return Monomial.Y((-m) % p.n, m, -s) * Monomial.Y(0, 0, s)


# ---------------------------------------------------------------------------
# shifted products
# ---------------------------------------------------------------------------

def _sorted_specs(specs) -> list[tuple[int, int]]:
    specs = [(int(s), int(j)) for s, j in specs]
    shifts = [j for _, j in specs]
    if len(set(shifts)) != len(shifts):
        raise DuplicateShift(f"shifts {shifts} are not pairwise distinct")
    if any(j < 0 for j in shifts) or any(s < 1 for s, _ in specs):
        raise ValueError("shifts must be nonnegative and sizes positive")
    return sorted(specs, key=lambda sj: sj[1])


def shifted_product_elements(p: CrystalParams, specs) -> dict[Monomial, tuple]:
    r"""
    ``{product: (b_1, ..., b_N)}`` over `\prod_k \tau_{j_k}(\Phi(b_k))`,
    factors ordered by increasing shift. The map is checked to be injective.
    """
    specs = _sorted_specs(specs)
    pools = [[(b, tau(phi_map(p, b), j)) for b in kr_elements(p.n, s)] for s, j in specs]
    out: dict[Monomial, tuple] = {}
    for combo in iproduct(*pools):
        m = Monomial()
        for _, mk in combo:
            m = m * mk
        bs = tuple(b for b, _ in combo)
        if m in out:
            raise AssertionError(f"shifted product is not injective: {out[m]} and {bs} -> {m}")
        out[m] = bs
    return out


def shifted_product_crystal(p: CrystalParams, specs) -> CrystalGraph:
    """
    The standard operators on the set of shifted products; specs are
    ``(s_k, j_k)`` pairs with distinct shifts ``j_k``.

    EXAMPLES::

        >>> p = make_params(3)
        >>> len(shifted_product_crystal(p, [(1, 0), (1, 1)]))
        9
    """
    elements = shifted_product_elements(p, specs)
    return induced_graph(StdMonomials(p), sorted(elements),
                         {"specs": [list(sj) for sj in _sorted_specs(specs)]})


def _nest(bs: tuple):
    # (b1, b2, b3) -> ((b1, b2), b3), matching tensor_all's left fold
    out = bs[0]
    for b in bs[1:]:
        out = (out, b)
    return out


# ---------------------------------------------------------------------------
# B(infinity)
# ---------------------------------------------------------------------------

def theta_map(p: CrystalParams, m_coh: Monomial, m_inf: Monomial) -> Monomial:
    r"""`m \otimes m' \mapsto m \cdot \tau_1(m')`; ``m_coh`` must lie in `L_\infty`."""
    coherent_exponents(p, m_coh)
    return m_coh * tau(m_inf, 1)


# ---------------------------------------------------------------------------
# standard graphs
# ---------------------------------------------------------------------------

def m1s_graph(p: CrystalParams, s: int) -> CrystalGraph:
    return closure(StdMonomials(p), [seed_m1s(p, s)])


def kr_graph(n: int, s: int) -> CrystalGraph:
    return closure(TupleFamily(n, "kr"), [kr((s,) + (0,) * (n - 1))])


# ---------------------------------------------------------------------------
# verifiers
# ---------------------------------------------------------------------------

def _first(report) -> str | None:
    return report.failures[0] if report.failures else None


def verify_thm31(n: int, s: int) -> VerifyReport:
    r"""`\mathcal{M}^{1,s} \cong B^{1,s}` via `\Phi_s`, checked as a strict morphism."""
    p = make_params(n)
    M = m1s_graph(p, s)
    B = kr_graph(n, s)
    size_ok = len(M) == len(B) == comb(n + s - 1, n - 1)
    iso = is_isomorphic(M, B)
    mor = check_morphism(lambda b: phi_map(p, b), B, M, strict=True)
    bij = len({phi_map(p, b) for b in B.elements}) == len(B)
    ax = check_axioms(M)
    passed = size_ok and iso is not None and mor.passed and bij and ax.passed
    cex = None
    if not passed:
        cex = (_first(mor) or _first(ax) or ("sizes differ" if not size_ok else "not isomorphic"))
    return VerifyReport("3.1", {"n": n, "s": s}, passed, cex,
                        {"vertices": len(M), "edges": M.num_edges()})


def verify_thm41(n: int, specs) -> VerifyReport:
    r"""
    Shifted products against the tensor product of the tuple crystals, via
    the explicit map `(b_1, \dots, b_N) \mapsto \prod_k \tau_{j_k}\Phi(b_k)`.
    """
    p = make_params(n)
    ordered = _sorted_specs(specs)
    elements = shifted_product_elements(p, ordered)
    G = induced_graph(StdMonomials(p), sorted(elements))
    T = tensor_all([kr_graph(n, s) for s, _ in ordered])
    inverse = {element_key(_nest(bs)): m for m, bs in elements.items()}
    mor = check_morphism(lambda x: inverse[element_key(x)], T, G, strict=True)
    iso = is_isomorphic(G, T)
    ax = check_axioms(G)
    passed = mor.passed and iso is not None and ax.passed and len(G) == len(T)
    cex = None if passed else (_first(mor) or _first(ax) or "not isomorphic")
    return VerifyReport("4.1", {"n": n, "specs": [list(x) for x in ordered]}, passed, cex,
                        {"vertices": len(G)})


def verify_thm42(p: CrystalParams, lam: Weight, depth: int) -> VerifyReport:
    r"""
    Compares the radius-``depth`` ball of `\mathcal{M}(\lambda)` around
    `Y_\lambda` with `B^{1,s} \otimes` (ball of `\mathcal{M}(\mu)`), anchored
    at `Y_\lambda \leftrightarrow b^\lambda \otimes Y_\mu`, and checks that
    the vertex map is `b \otimes m' \mapsto \Phi_s(b)\tau_1(m')`.
    """
    s = lam.level
    _check_level(lam, s)
    params = {"n": p.n, "lam": list(lam.lambda_coeffs), "depth": depth}
    b = b_lambda(lam, s)
    mu = _eps_weight(b)
    y_lam, y_mu = y_lambda(p, lam), y_lambda(p, mu)
    anchor_img = phi_map(p, b) * tau(y_mu, 1)
    if anchor_img != y_lam:
        return VerifyReport("4.2", params, False, f"Phi(b^lam (x) Y_mu) = {anchor_img} != {y_lam}")
    if depth == 0:
        return VerifyReport("4.2", params, True, None, {"mapped": 1})
    A = closure(StdMonomials(p), [y_lam], max_depth=depth)
    right = closure(StdMonomials(p), [y_mu], max_depth=depth)
    T = tensor(kr_graph(p.n, s), right)
    a0 = A.vertex_of(y_lam)
    t0 = T.vertex_of((b, y_mu))
    mapping = is_isomorphic(A, T, anchors=(a0, t0))
    if mapping is None:
        return VerifyReport("4.2", params, False, "operators do not commute with Phi near the anchor")
    if len(mapping) != len(A):
        return VerifyReport("4.2", params, False,
                            f"only {len(mapping)} of {len(A)} ball elements matched")
    for u, v in mapping.items():
        bb, mm = T.elements[v]
        img = phi_map(p, bb) * tau(mm, 1)
        if img != A.elements[u]:
            return VerifyReport("4.2", params, False,
                                f"Phi({T.labels[v]}) = {img} but the ball has {A.labels[u]}")
    ax = check_axioms(A)
    if not ax.passed:
        return VerifyReport("4.2", params, False, _first(ax))
    return VerifyReport("4.2", params, True, None, {"mapped": len(mapping)})


def verify_thm51(n: int, radius: int) -> VerifyReport:
    r"""`\Psi \colon B_\infty \to \mathcal{M}_\infty` on a ball around `b_\infty`."""
    p = make_params(n)
    B = closure(TupleFamily(n, "coherent"), [coherent((0,) * n)], max_depth=radius)
    M = closure(CoherentMonomials(p), [Monomial()], max_depth=radius)
    mor = check_morphism(lambda t: psi_map(p, t), B, M, strict=True)
    mapping = is_isomorphic(B, M, anchors=(B.vertex_of(coherent((0,) * n)), M.vertex_of(Monomial())))
    passed = mor.passed and mapping is not None and len(mapping) == len(B) == len(M)
    cex = None if passed else (_first(mor) or "not isomorphic")
    return VerifyReport("5.1", {"n": n, "radius": radius}, passed, cex, {"vertices": len(B)})


def verify_thm52(p: CrystalParams, depth: int) -> VerifyReport:
    r"""
    For every word `f_{i_1} \cdots f_{i_d}` with `d \le` ``depth``, compares
    `f^\dagger`-words on `\mathbf{1}` with the same word on
    `b_\infty \otimes \mathbf{1}` in `\mathcal{M}_\infty \otimes
    \mathcal{M}(\infty)`, mapped through `\Theta`.
    """
    params = {"n": p.n, "depth": depth}
    fam = TensorFamily(CoherentMonomials(p), DaggerMonomials(p))
    one = Monomial()
    layer = [((), one, (one, one))]
    checked = 0
    for _ in range(depth + 1):
        nxt = []
        for word, direct, pair in layer:
            img = theta_map(p, *pair)
            checked += 1
            if img != direct:
                return VerifyReport("5.2", params, False,
                                    f"word {list(word)}: direct {direct} vs Theta {img}",
                                    {"words": checked})
            for i in range(p.n):
                dagger_stats(p, direct, i)
                nxt.append((word + (i,), f_dagger(p, direct, i), fam.f(pair, i)))
        layer = nxt
    return VerifyReport("5.2", params, True, None, {"words": checked})


def verify_prop62(n: int, r: int) -> VerifyReport:
    r"""
    `\overline{\mathcal{M}}(X_{1,0} \cdots X_{r,0}) \cong B^{r,1}`, and the
    embedding `B^{r,1} \to B^{1,r}` as a (non-strict) morphism.
    """
    p = make_params(n)
    seed = (1,) * r + (0,) * (n - r)
    M = closure(BarMonomials(p), [x_product(p, seed)])
    C = closure(TupleFamily(n, "column"), [column(seed)])
    mapping = is_isomorphic(M, C)
    mor_seed = check_morphism(lambda t: x_product(p, t.xs), C, M, strict=True)
    # the embedding preserves the statistics of the vector representation
    Ci = closure(TupleFamily(n, "column", column_stats="induced"), [column(seed)])
    mor = check_morphism(col_embed, Ci, kr_graph(n, r), strict=False)
    regular = check_regular(C)
    passed = (mapping is not None and len(C) == comb(n, r) and mor_seed.passed and mor.passed
              and regular.passed)
    cex = None if passed else (_first(mor_seed) or _first(mor) or _first(regular) or "not isomorphic")
    return VerifyReport("6.2", {"n": n, "r": r}, passed, cex, {"vertices": len(C)})


def verify_perfect(n: int, s: int, level: int | None = None) -> VerifyReport:
    """`B^{1,s}` checked as a perfect crystal of level ``level`` (default ``s``)."""
    level = s if level is None else level
    rep = check_perfect(kr_graph(n, s), level)
    return VerifyReport("perfect", {"n": n, "s": s, "level": level}, rep.passed, _first(rep),
                        {"conditions": rep.info["conditions"]})
