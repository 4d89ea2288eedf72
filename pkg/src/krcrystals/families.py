"""
Operator families: the uniform interface the graph engine drives.

A family knows how to apply ``e``/``f``, read the statistics and the weight
of one kind of element, and how to encode it (ordering key, display label,
JSON). Operators return ``None`` for zero.
"""

from __future__ import annotations

from krcrystals.lattice import CrystalParams, Monomial, Weight, make_params, mono_weight, pairing
from krcrystals import monomials as mono
from krcrystals import tuples as tup
from krcrystals.tuples import TupleElement

__all__ = [
    "Family",
    "StdMonomials",
    "DaggerMonomials",
    "CoherentMonomials",
    "BarMonomials",
    "TupleFamily",
    "TensorFamily",
    "element_to_json",
    "element_from_json",
    "element_key",
    "element_label",
]


def element_to_json(x):
    if isinstance(x, tuple):
        return [element_to_json(y) for y in x]
    return x.to_json()


def element_from_json(data):
    if isinstance(data, list):
        return tuple(element_from_json(d) for d in data)
    if "factors" in data:
        return Monomial.from_json(data)
    if "xs" in data:
        return TupleElement.from_json(data)
    raise ValueError(f"unrecognised element encoding {data!r}")


def element_key(x):
    if isinstance(x, tuple):
        return tuple(element_key(y) for y in x)
    return x.key()


def element_label(x) -> str:
    if isinstance(x, tuple):
        return " (x) ".join(element_label(y) for y in x)
    return x.display()


class Family:
    name = "abstract"
    f_only = False
    params: CrystalParams

    @property
    def n(self) -> int:
        return self.params.n

    def e(self, x, i):
        raise NotImplementedError

    def f(self, x, i):
        raise NotImplementedError

    def eps(self, x, i) -> int:
        raise NotImplementedError

    def phi(self, x, i) -> int:
        raise NotImplementedError

    def weight(self, x) -> Weight:
        raise NotImplementedError

    def stats(self, x):
        n = self.n
        return [self.eps(x, i) for i in range(n)], [self.phi(x, i) for i in range(n)]

    # shared encoders
    key = staticmethod(element_key)
    label = staticmethod(element_label)
    to_json = staticmethod(element_to_json)


class _MonomialFamily(Family):
    def __init__(self, params: CrystalParams):
        self.params = params

    def weight(self, x: Monomial) -> Weight:
        return mono_weight(x, self.n)


class StdMonomials(_MonomialFamily):
    name = "std"

    def e(self, x, i):
        return mono.e_std(self.params, x, i)

    def f(self, x, i):
        return mono.f_std(self.params, x, i)

    def eps(self, x, i):
        return mono.string_data(self.params, x, i).eps

    def phi(self, x, i):
        return mono.string_data(self.params, x, i).phi

    def stats(self, x):
        sds = [mono.string_data(self.params, x, i) for i in range(self.n)]
        return [s.eps for s in sds], [s.phi for s in sds]


class DaggerMonomials(_MonomialFamily):
    """`\\mathcal{M}(\\infty)`: closures follow `f^\\dagger` only."""
    name = "dagger"
    f_only = True

    def __init__(self, params: CrystalParams, fragment: mono.MInfinityFragment | None = None):
        super().__init__(params)
        self.fragment = fragment

    def e(self, x, i):
        if self.fragment is None:
            raise ValueError("e_dagger needs a fragment")
        return self.fragment.e(x, i)

    def f(self, x, i):
        return mono.f_dagger(self.params, x, i)

    def eps(self, x, i):
        return mono.dagger_stats(self.params, x, i)[0]

    def phi(self, x, i):
        return mono.dagger_stats(self.params, x, i)[1]


class CoherentMonomials(_MonomialFamily):
    name = "coh"

    def e(self, x, i):
        return mono.e_coh(self.params, x, i)

    def f(self, x, i):
        return mono.f_coh(self.params, x, i)

    def eps(self, x, i):
        return mono.coh_stats(self.params, x, i)[0]

    def phi(self, x, i):
        return mono.coh_stats(self.params, x, i)[1]


class BarMonomials(_MonomialFamily):
    """
    The `X^2`-quotient operators. ``stats="string"`` reports string lengths;
    ``stats="induced"`` reports the monomial statistics of ``string_data``.
    """
    name = "bar"

    def __init__(self, params: CrystalParams, stats: str = "string"):
        super().__init__(params)
        if stats not in ("string", "induced"):
            raise ValueError(stats)
        self.stat_mode = stats

    def e(self, x, i):
        return mono.e_bar(self.params, x, i)

    def f(self, x, i):
        return mono.f_bar(self.params, x, i)

    def _string(self, op, x, i):
        k = 0
        while (x := op(x, i)) is not None:
            k += 1
        return k

    def eps(self, x, i):
        if self.stat_mode == "induced":
            return mono.string_data(self.params, x, i).eps
        return self._string(self.e, x, i)

    def phi(self, x, i):
        if self.stat_mode == "induced":
            return mono.string_data(self.params, x, i).phi
        return self._string(self.f, x, i)


class TupleFamily(Family):
    """
    KR, coherent and column tuples (affinized or not). ``column_stats`` picks
    the column statistics, see :func:`krcrystals.tuples.tuple_eps`.
    """

    def __init__(self, n: int, variant: str, column_stats: str = "string"):
        self.params = make_params(n)
        self.variant = variant
        self.column_stats = column_stats
        self.name = variant if variant != "column" else f"column-{column_stats}"

    def e(self, x, i):
        return tup.tuple_e(x, i)

    def f(self, x, i):
        return tup.tuple_f(x, i)

    def eps(self, x, i):
        return tup.tuple_eps(x, i, self.column_stats)

    def phi(self, x, i):
        return tup.tuple_phi(x, i, self.column_stats)

    def weight(self, x):
        return tup.tuple_weight(x)


class TensorFamily(Family):
    r"""
    Pairs ``(b2, b1)`` standing for `b_2 \otimes b_1` with ``left = b2``.

    `f_i` acts on `b_2` iff `\varepsilon_i(b_2) \ge \varphi_i(b_1)`,
    `e_i` acts on `b_2` iff `\varepsilon_i(b_2) > \varphi_i(b_1)`.
    """
    name = "tensor"

    def __init__(self, left: Family, right: Family):
        if left.params.n != right.params.n:
            from krcrystals.errors import ParamsMismatch
            raise ParamsMismatch("tensor factors have different ranks")
        self.left, self.right = left, right
        self.params = left.params

    def e(self, x, i):
        b2, b1 = x
        if self.left.eps(b2, i) > self.right.phi(b1, i):
            y = self.left.e(b2, i)
            return None if y is None else (y, b1)
        y = self.right.e(b1, i)
        return None if y is None else (b2, y)

    def f(self, x, i):
        b2, b1 = x
        if self.left.eps(b2, i) >= self.right.phi(b1, i):
            y = self.left.f(b2, i)
            return None if y is None else (y, b1)
        y = self.right.f(b1, i)
        return None if y is None else (b2, y)

    def eps(self, x, i):
        b2, b1 = x
        return max(self.right.eps(b1, i), self.left.eps(b2, i) - pairing(i, self.right.weight(b1)))

    def phi(self, x, i):
        b2, b1 = x
        return max(self.left.phi(b2, i), self.right.phi(b1, i) + pairing(i, self.left.weight(b2)))

    def weight(self, x):
        return self.left.weight(x[0]) + self.right.weight(x[1])
