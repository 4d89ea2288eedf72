r"""
Tuple models: the KR crystal `B^{1,s}`, the coherent limit `B_\infty`,
the columns `B^{r,1}`, their affinizations, and the maps into monomials.

A tuple `(x_1, \dots, x_n)` is indexed from 1, with `x_0 \equiv x_n` and
`x_{n+1} \equiv x_1`; ``f_i`` moves one unit from `x_i` to `x_{i+1}`.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from math import comb

from krcrystals.lattice import CrystalParams, Monomial, Weight, x_product

__all__ = [
    "TupleElement",
    "kr",
    "coherent",
    "column",
    "kr_e",
    "kr_f",
    "coh_e",
    "coh_f",
    "col_e",
    "col_f",
    "tuple_e",
    "tuple_f",
    "tuple_eps",
    "tuple_phi",
    "tuple_weight",
    "affinize",
    "phi_map",
    "psi_map",
    "col_seed_map",
    "col_embed",
    "promotion",
    "promotion_inverse",
    "kr_elements",
    "column_elements",
    "coherent_ball",
]

KR, COHERENT, COLUMN = "kr", "coherent", "column"


@dataclass(frozen=True)
class TupleElement:
    xs: tuple[int, ...]
    variant: str
    s_or_r: int | None = None
    degree: int | None = None

    def __post_init__(self):
        xs = tuple(int(x) for x in self.xs)
        object.__setattr__(self, "xs", xs)
        v = self.variant
        if v == KR:
            if any(x < 0 for x in xs) or sum(xs) != self.s_or_r:
                raise ValueError(f"{xs} is not in B^(1,{self.s_or_r})")
        elif v == COHERENT:
            if sum(xs) != 0:
                raise ValueError(f"{xs} does not sum to zero")
        elif v == COLUMN:
            if any(x not in (0, 1) for x in xs) or sum(xs) != self.s_or_r:
                raise ValueError(f"{xs} is not in B^({self.s_or_r},1)")
            if not 1 <= self.s_or_r <= len(xs) - 1:
                raise ValueError(f"column height must be in [1, n-1], got {self.s_or_r}")
        else:
            raise ValueError(f"unknown variant {v!r}")

    @property
    def n(self) -> int:
        return len(self.xs)

    def x(self, i: int) -> int:
        """`x_i` with indices mod `n` (so `x_0 = x_n`)."""
        return self.xs[(i - 1) % self.n]

    def key(self) -> tuple:
        return (self.xs, -1 if self.degree is None else self.degree)

    def display(self) -> str:
        body = "(" + ",".join(str(x) for x in self.xs) + ")"
        return body if self.degree is None else f"{body}[{self.degree}]"

    __str__ = display

    def to_json(self) -> dict:
        out = {"xs": list(self.xs), "variant": self.variant, "s_or_r": self.s_or_r}
        if self.degree is not None:
            out["degree"] = self.degree
        return out

    @classmethod
    def from_json(cls, data) -> "TupleElement":
        return cls(tuple(data["xs"]), data["variant"], data.get("s_or_r"), data.get("degree"))


def kr(*xs) -> TupleElement:
    xs = tuple(xs[0]) if len(xs) == 1 and not isinstance(xs[0], int) else tuple(xs)
    return TupleElement(xs, KR, sum(xs))


def coherent(*xs) -> TupleElement:
    xs = tuple(xs[0]) if len(xs) == 1 and not isinstance(xs[0], int) else tuple(xs)
    return TupleElement(xs, COHERENT, None)


def column(*xs) -> TupleElement:
    xs = tuple(xs[0]) if len(xs) == 1 and not isinstance(xs[0], int) else tuple(xs)
    return TupleElement(xs, COLUMN, sum(xs))


def _move(t: TupleElement, i: int, amount: int) -> TupleElement:
    # amount = +1 is f_i (x_i -> x_i - 1, x_{i+1} -> x_{i+1} + 1)
    n = t.n
    xs = list(t.xs)
    xs[(i - 1) % n] -= amount
    xs[i % n] += amount
    degree = t.degree
    if degree is not None and i % n == 0:
        degree -= amount
    return replace(t, xs=tuple(xs), degree=degree)


def kr_f(t: TupleElement, i: int) -> TupleElement | None:
    return None if t.x(i) == 0 else _move(t, i, 1)


def kr_e(t: TupleElement, i: int) -> TupleElement | None:
    return None if t.x(i + 1) == 0 else _move(t, i, -1)


def coh_f(t: TupleElement, i: int) -> TupleElement:
    return _move(t, i, 1)


def coh_e(t: TupleElement, i: int) -> TupleElement:
    return _move(t, i, -1)


def col_f(t: TupleElement, i: int) -> TupleElement | None:
    return _move(t, i, 1) if t.x(i) == 1 and t.x(i + 1) == 0 else None


def col_e(t: TupleElement, i: int) -> TupleElement | None:
    return _move(t, i, -1) if t.x(i) == 0 and t.x(i + 1) == 1 else None


_F = {KR: kr_f, COHERENT: coh_f, COLUMN: col_f}
_E = {KR: kr_e, COHERENT: coh_e, COLUMN: col_e}


def tuple_f(t: TupleElement, i: int) -> TupleElement | None:
    return _F[t.variant](t, i)


def tuple_e(t: TupleElement, i: int) -> TupleElement | None:
    return _E[t.variant](t, i)


def tuple_eps(t: TupleElement, i: int, column_stats: str = "string") -> int:
    r"""
    `\varepsilon_i`. For columns, ``column_stats="string"`` gives the
    string length (0 or 1) and ``"induced"`` the value `x_{i+1}` inherited
    from `B^{1,r}`.
    """
    if t.variant == COLUMN and column_stats == "string":
        return int(col_e(t, i) is not None)
    return t.x(i + 1)


def tuple_phi(t: TupleElement, i: int, column_stats: str = "string") -> int:
    if t.variant == COLUMN and column_stats == "string":
        return int(col_f(t, i) is not None)
    return t.x(i)


def tuple_weight(t: TupleElement) -> Weight:
    r"""`\sum_i (x_i - x_{i+1}) \Lambda_i`, plus `k\delta` at affine degree `k`."""
    n = t.n
    coeffs = tuple(t.x(i) - t.x(i + 1) for i in range(n))
    return Weight(coeffs, t.degree or 0)


def affinize(t: TupleElement, k: int) -> TupleElement:
    if t.degree is not None:
        raise ValueError(f"{t} is already affinized")
    if t.variant == COHERENT:
        raise ValueError("only KR and column tuples are affinized")
    return replace(t, degree=int(k))


def phi_map(p: CrystalParams, t: TupleElement) -> Monomial:
    r"""`(x_1, \dots, x_n) \mapsto \prod_i Y_{i-1,1}^{-x_i} Y_{i,0}^{x_i}`."""
    if t.variant != KR:
        raise ValueError("phi_map takes a KR tuple")
    return x_product(p, t.xs)


def psi_map(p: CrystalParams, t: TupleElement) -> Monomial:
    r"""`(x_1, \dots, x_n) \mapsto X_{1,0}^{x_1} \cdots X_{n,0}^{x_n}` on `B_\infty`."""
    if t.variant != COHERENT:
        raise ValueError("psi_map takes a coherent tuple")
    return x_product(p, t.xs)


def col_seed_map(p: CrystalParams, t: TupleElement, k: int = 0) -> Monomial:
    if t.variant != COLUMN:
        raise ValueError("col_seed_map takes a column tuple")
    return x_product(p, t.xs, k)


def col_embed(t: TupleElement) -> TupleElement:
    """`B^{r,1} \\to B^{1,r}`: the same tuple, read as a KR element."""
    if t.variant != COLUMN:
        raise ValueError("col_embed takes a column tuple")
    return TupleElement(t.xs, KR, t.s_or_r, t.degree)


def promotion(t: TupleElement) -> TupleElement:
    """`(x_1, ..., x_n) -> (x_n, x_1, ..., x_{n-1})`."""
    return replace(t, xs=(t.xs[-1],) + t.xs[:-1])


def promotion_inverse(t: TupleElement) -> TupleElement:
    return replace(t, xs=t.xs[1:] + (t.xs[0],))


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def _compositions(total: int, parts: int, lo: int = 0, hi: int | None = None):
    if parts == 1:
        if total >= lo and (hi is None or total <= hi):
            yield (total,)
        return
    top = total if hi is None else min(total, hi)
    for first in range(lo, top + 1):
        for rest in _compositions(total - first, parts - 1, lo, hi):
            yield (first,) + rest


def kr_elements(n: int, s: int) -> list[TupleElement]:
    """All of `B^{1,s}`, `C(n+s-1, n-1)` tuples."""
    out = [TupleElement(xs, KR, s) for xs in _compositions(s, n)]
    assert len(out) == comb(n + s - 1, n - 1)
    return out


def column_elements(n: int, r: int) -> list[TupleElement]:
    out = [TupleElement(xs, COLUMN, r) for xs in _compositions(r, n, 0, 1)]
    assert len(out) == comb(n, r)
    return out


def coherent_ball(n: int, radius: int) -> list[TupleElement]:
    """Elements of `B_\\infty` within ``radius`` operator steps of `b_\\infty`."""
    start = coherent((0,) * n)
    seen = {start}
    frontier = [start]
    for _ in range(radius):
        nxt = []
        for t in frontier:
            for i in range(n):
                for u in (coh_f(t, i), coh_e(t, i)):
                    if u not in seen:
                        seen.add(u)
                        nxt.append(u)
        frontier = nxt
    return sorted(seen, key=TupleElement.key)
