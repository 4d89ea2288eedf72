r"""
Crystal operators on Nakajima monomials.

Four operator families live here:

* the standard operators ``e_std``/``f_std`` (highest weight crystals
  `\mathcal{M}(\lambda)` and the KR crystals `\mathcal{M}^{1,s}`),
* ``f_dagger`` and its partial inverse for `\mathcal{M}(\infty)`,
* ``e_coh``/``f_coh`` for the coherent limit `\mathcal{M}_\infty`,
* ``e_bar``/``f_bar``, the standard operators with `X_{i,k}^2` killed,
  which model the columns `B^{r,1}`.

Operators return ``None`` for the zero of the crystal.
"""

from __future__ import annotations

from dataclasses import dataclass

from krcrystals.errors import NotInCoherentLattice, NotXFactorizable
from krcrystals.lattice import (
    CrystalParams,
    Monomial,
    a_monomial,
    mono_weight,
    pairing,
    x_factorize,
    x_product,
)

__all__ = [
    "StringData",
    "string_data",
    "e_std",
    "f_std",
    "f_dagger",
    "dagger_stats",
    "MInfinityFragment",
    "e_dagger",
    "coherent_exponents",
    "coh_stats",
    "e_coh",
    "f_coh",
    "e_bar",
    "f_bar",
    "seed_m1s",
]


@dataclass(frozen=True)
class StringData:
    eps: int
    phi: int
    k_e: int | None
    k_f: int | None


def string_data(p: CrystalParams, m: Monomial, i: int) -> StringData:
    r"""
    `\varepsilon_i`, `\varphi_i`, `k_e`, `k_f` of ``m``.

    With tail sums `T(k) = \sum_{s>k} y_{i,s}` and head sums
    `H(k) = \sum_{s \le k} y_{i,s}`: `\varepsilon_i = -\min_k T(k)`,
    `\varphi_i = \max_k H(k)`, `k_e` is the largest minimiser of `T`
    and `k_f` the smallest maximiser of `H`. Outside the support of row
    `i` both sums are constant, so `k_e` exists iff `\varepsilon_i > 0`
    and `k_f` exists iff `\varphi_i > 0`.

    EXAMPLES::

        >>> from krcrystals.lattice import make_params
        >>> p = make_params(3)
        >>> m = Monomial.Y(0, 1, -3) * Monomial.Y(1, 0, 3)
        >>> string_data(p, m, 0)
        StringData(eps=3, phi=0, k_e=0, k_f=None)
    """
    i %= p.n
    row = m.row(i)
    if not row:
        return StringData(0, 0, None, None)
    ks = sorted(row)
    total = sum(row.values())
    # both sums are constant on the intervals [ks[j], ks[j+1] - 1]
    lo = [None] + ks
    hi = [ks[0] - 1] + [k - 1 for k in ks[1:]] + [None]
    heads = [0]
    for k in ks:
        heads.append(heads[-1] + row[k])
    tails = [total - h for h in heads]
    phi = max(heads)
    eps = -min(tails)
    k_f = lo[heads.index(phi)] if phi > 0 else None
    k_e = None
    if eps > 0:
        j = max(j for j, t in enumerate(tails) if t == -eps)
        k_e = hi[j]
        # alternative form: largest k with H(k) = phi
        j_alt = max(j for j, h in enumerate(heads) if h == phi)
        assert hi[j_alt] == k_e, (m, i)
    return StringData(eps, phi, k_e, k_f)


def e_std(p: CrystalParams, m: Monomial, i: int) -> Monomial | None:
    """`e_i(m) = m A_{i,k_e(m)}`, or ``None`` when `\\varepsilon_i(m) = 0`."""
    sd = string_data(p, m, i)
    if sd.eps == 0:
        return None
    return m * a_monomial(p, i, sd.k_e)


def f_std(p: CrystalParams, m: Monomial, i: int) -> Monomial | None:
    """`f_i(m) = m A_{i,k_f(m)}^{-1}`, or ``None`` when `\\varphi_i(m) = 0`."""
    sd = string_data(p, m, i)
    if sd.phi == 0:
        return None
    return m * a_monomial(p, i, sd.k_f).inverse()


def seed_m1s(p: CrystalParams, s: int) -> Monomial:
    r"""`Y_{0,1}^{-s} Y_{1,0}^{s}`, the image of `(s, 0, \dots, 0)`."""
    if s < 1:
        raise ValueError(f"s must be positive, got {s}")
    return x_product(p, (s,) + (0,) * (p.n - 1))


# ---------------------------------------------------------------------------
# M(infinity)
# ---------------------------------------------------------------------------

def _finite_heads(m: Monomial, i: int) -> list[tuple[int, int]]:
    # (k, sum_{0 <= s <= k} y_{i,s}) for k from 0 to the top of row i;
    # the sums are constant afterwards
    row = m.row(i)
    if any(k < 0 for k in row):
        raise ValueError(f"{m} has a negative second index; not in M(infinity)")
    top = max(row, default=0)
    out, acc = [], 0
    for k in range(0, top + 1):
        acc += row.get(k, 0)
        out.append((k, acc))
    return out


def _dagger_phi(m: Monomial, i: int) -> tuple[int, int]:
    heads = _finite_heads(m, i)
    phi = max(h for _, h in heads)
    k = min(k for k, h in heads if h == phi)
    return phi, k


def dagger_stats(p: CrystalParams, m: Monomial, i: int) -> tuple[int, int]:
    r"""
    `(\varepsilon_i, \varphi_i)` of ``m`` in `\mathcal{M}(\infty)`.

    Both are read off the partial sums over second indices `k \ge 0`:
    `\varepsilon_i = -\min_{k \ge 0} \sum_{s > k} y_{i,s}` and
    `\varphi_i = \max_{k \ge 0} \sum_{0 \le s \le k} y_{i,s}`, which may be
    negative. Their difference is `\langle h_i, \mathrm{wt}(m) \rangle`;
    a violation raises ``AssertionError``.
    """
    i %= p.n
    heads = _finite_heads(m, i)
    total = heads[-1][1]
    phi = max(h for _, h in heads)
    eps = -min(total - h for _, h in heads)
    wt_i = pairing(i, mono_weight(m, p.n))
    assert phi - eps == wt_i, f"dagger statistics break phi - eps = <h_{i}, wt> at {m}"
    return eps, phi


def f_dagger(p: CrystalParams, m: Monomial, i: int) -> Monomial:
    r"""
    `f_i^\dagger(m) = m A_{i,k}^{-1}` with `k` the least `k \ge 0` at which
    `\sum_{0 \le s \le k} y_{i,s}` reaches its maximum. Always defined.

    EXAMPLES::

        >>> from krcrystals.lattice import make_params
        >>> p = make_params(3)
        >>> f_dagger(p, Monomial(), 1)
        Y(1,0)^-1*Y(2,0)*Y(0,1)*Y(1,1)^-1
    """
    if not p.is_default:
        raise ValueError("f_dagger is only defined for the default orientation with K = 1")
    i %= p.n
    _, k = _dagger_phi(m, i)
    return m * a_monomial(p, i, k).inverse()


class MInfinityFragment:
    r"""
    The elements of `\mathcal{M}(\infty)` reachable from `\mathbf{1}` by at
    most ``depth`` applications of `f_i^\dagger`, with the inverse maps.

    Injectivity of every `f_i^\dagger` on the fragment is checked while
    building it.
    """

    def __init__(self, p: CrystalParams, depth: int):
        self.params = p
        self.depth = depth
        self.layers: list[list[Monomial]] = [[Monomial()]]
        self.depth_of: dict[Monomial, int] = {Monomial(): 0}
        self._pre: dict[tuple[Monomial, int], Monomial] = {}
        for d in range(depth):
            nxt = []
            for m in self.layers[d]:
                for i in range(p.n):
                    img = f_dagger(p, m, i)
                    prev = self._pre.get((img, i))
                    if prev is not None and prev != m:
                        raise AssertionError(f"f_{i}^dagger is not injective: {prev}, {m} -> {img}")
                    self._pre[(img, i)] = m
                    if img not in self.depth_of:
                        self.depth_of[img] = d + 1
                        nxt.append(img)
            self.layers.append(nxt)

    def __contains__(self, m):
        return m in self.depth_of

    def __len__(self):
        return len(self.depth_of)

    def __iter__(self):
        for layer in self.layers:
            yield from layer

    def e(self, m: Monomial, i: int) -> Monomial | None:
        if m not in self.depth_of:
            raise KeyError(f"{m} is not in the fragment")
        return self._pre.get((m, i % self.params.n))


def e_dagger(fragment: MInfinityFragment, m: Monomial, i: int) -> Monomial | None:
    """The `m'` of the fragment with `f_i^\\dagger(m') = m`, or ``None``."""
    return fragment.e(m, i)


# ---------------------------------------------------------------------------
# M_infinity (coherent limit)
# ---------------------------------------------------------------------------

def coherent_exponents(p: CrystalParams, m: Monomial) -> tuple[int, ...]:
    r"""``(x_1, ..., x_n)`` with ``m = X_{1,0}^{x_1} ... X_{n,0}^{x_n}`` and zero sum."""
    try:
        fac = x_factorize(p, m)
    except NotXFactorizable as exc:
        raise NotInCoherentLattice(str(exc)) from exc
    if fac.levels() - {0}:
        raise NotInCoherentLattice(f"{m} has X-factors off level 0")
    xs = fac.level_vector(0)
    if sum(xs) != 0:
        raise NotInCoherentLattice(f"{m} has X-exponents summing to {sum(xs)}")
    return xs


def coh_stats(p: CrystalParams, m: Monomial, i: int) -> tuple[int, int]:
    r"""`(\varepsilon_i, \varphi_i) = (x_{i+1}, x_i)`; either may be negative."""
    xs = coherent_exponents(p, m)
    n = p.n
    return xs[i % n], xs[(i - 1) % n]


def e_coh(p: CrystalParams, m: Monomial, i: int) -> Monomial:
    coherent_exponents(p, m)
    return m * a_monomial(p, i, 0)


def f_coh(p: CrystalParams, m: Monomial, i: int) -> Monomial:
    coherent_exponents(p, m)
    return m * a_monomial(p, i, 0).inverse()


# ---------------------------------------------------------------------------
# X^2 quotient
# ---------------------------------------------------------------------------

def _check_01(p: CrystalParams, m: Monomial):
    fac = x_factorize(p, m)
    if any(e not in (0, 1) for _, e in fac.exponents):
        raise NotXFactorizable(f"{m} is not a product of distinct X variables")


def _kill_squares(p: CrystalParams, m: Monomial | None) -> Monomial | None:
    if m is None:
        return None
    return None if x_factorize(p, m).max_abs() >= 2 else m


def e_bar(p: CrystalParams, m: Monomial, i: int) -> Monomial | None:
    _check_01(p, m)
    return _kill_squares(p, e_std(p, m, i))


def f_bar(p: CrystalParams, m: Monomial, i: int) -> Monomial | None:
    """
    EXAMPLES::

        >>> from krcrystals.lattice import make_params
        >>> p = make_params(4)
        >>> m = x_product(p, (1, 1, 0, 0))
        >>> f_bar(p, m, 1) is None
        True
        >>> f_bar(p, m, 2) == x_product(p, (1, 0, 1, 0))
        True
    """
    _check_01(p, m)
    return _kill_squares(p, f_std(p, m, i))

