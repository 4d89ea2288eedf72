r"""
Exact arithmetic for affine type `A_{n-1}^{(1)}`: Cartan data, Laurent
monomials in the variables `Y_{i,k}`, weights, and the `X_{i,k}` change of
variables.

Everything here is immutable. Monomials are sparse maps
``(i, k) -> exponent`` with zero exponents never stored.

EXAMPLES::

    >>> p = make_params(3)
    >>> m = Monomial.Y(0, 1, -3) * Monomial.Y(1, 0, 3)
    >>> m
    Y(1,0)^3*Y(0,1)^-3
    >>> mono_weight(m, 3).lambda_coeffs
    (-3, 3, 0)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

import numpy as np

from krcrystals.errors import NotXFactorizable

__all__ = [
    "CrystalParams",
    "Monomial",
    "Weight",
    "XFactorization",
    "make_params",
    "mono_mul",
    "mono_weight",
    "a_monomial",
    "x_monomial",
    "x_product",
    "y_lambda",
    "tau",
    "x_factorize",
    "pairing",
    "fundamental_weight",
    "simple_root",
    "classical_alpha_coords",
]


# ---------------------------------------------------------------------------
# Cartan data
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CrystalParams:
    r"""
    Rank, orientation constants and `K` for the monomial crystal structure.

    The orientation is stored per edge of the cycle ``i -- i+1``:
    ``c_up[i]`` is `c_{i,i+1}` and ``c_down[i]`` is `c_{i+1,i}`. For `n = 2`
    the two edges of the double bond are kept apart this way, which an
    `n \times n` matrix cannot express.
    """
    n: int
    c_up: tuple[int, ...]
    c_down: tuple[int, ...]
    K: int = 1

    def c(self, i: int, j: int) -> int:
        """Return `c_{ij}` for neighbours ``j = i +- 1 (mod n)``."""
        n = self.n
        i, j = i % n, j % n
        if j == (i + 1) % n:
            return self.c_up[i]
        if i == (j + 1) % n:
            return self.c_down[j]
        raise ValueError(f"{i} and {j} are not adjacent")

    @property
    def is_default(self) -> bool:
        return self.K == 1 and all(u == 1 for u in self.c_up) and not any(self.c_down)

    def cartan_matrix(self) -> np.ndarray:
        """The affine Cartan matrix `(a_{ij})`."""
        n = self.n
        a = 2 * np.eye(n, dtype=np.int64)
        for i in range(n):
            a[i, (i + 1) % n] -= 1
            a[i, (i - 1) % n] -= 1
        return a

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "K": self.K,
            "orientation": [[u, d] for u, d in zip(self.c_up, self.c_down)],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "CrystalParams":
        orient = data["orientation"]
        return cls(
            int(data["n"]),
            tuple(int(u) for u, _ in orient),
            tuple(int(d) for _, d in orient),
            int(data.get("K", 1)),
        )


def make_params(n: int, orientation=None) -> CrystalParams:
    r"""
    Validated Cartan data of rank ``n``.

    Without ``orientation`` the Dynkin diagram is oriented into the cycle
    ``0 -> 1 -> ... -> n-1 -> 0``, i.e. `c_{i,i+1} = 1`, `c_{i+1,i} = 0`.
    Otherwise ``orientation`` is an `n \times n` integer matrix of which only
    the entries `c_{i,i\pm 1}` are read.

    EXAMPLES::

        >>> p = make_params(3)
        >>> p.c(0, 1), p.c(1, 0), p.c(2, 0), p.c(0, 2)
        (1, 0, 1, 0)
    """
    n = int(n)
    if n < 2:
        raise ValueError(f"rank must be at least 2, got {n}")
    if orientation is None:
        return CrystalParams(n, (1,) * n, (0,) * n, 1)
    c = np.asarray(orientation, dtype=np.int64)
    if c.shape != (n, n):
        raise ValueError(f"orientation must be {n}x{n}, got shape {c.shape}")
    up = tuple(int(c[i, (i + 1) % n]) for i in range(n))
    down = tuple(int(c[(i + 1) % n, i]) for i in range(n))
    for i, (u, d) in enumerate(zip(up, down)):
        if u + d != 1:
            raise ValueError(
                f"c[{i},{(i + 1) % n}] + c[{(i + 1) % n},{i}] = {u + d}, expected K = 1"
            )
    return CrystalParams(n, up, down, 1)


# ---------------------------------------------------------------------------
# Weights
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Weight:
    """Integer combination ``sum_i lambda_coeffs[i] * Lambda_i + delta * delta``."""
    lambda_coeffs: tuple[int, ...]
    delta: int = 0

    def __post_init__(self):
        object.__setattr__(self, "lambda_coeffs", tuple(int(c) for c in self.lambda_coeffs))
        object.__setattr__(self, "delta", int(self.delta))

    @classmethod
    def zero(cls, n: int) -> "Weight":
        return cls((0,) * n, 0)

    @property
    def n(self) -> int:
        return len(self.lambda_coeffs)

    @property
    def level(self) -> int:
        return sum(self.lambda_coeffs)

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.lambda_coeffs)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(
            tuple(a + b for a, b in zip(self.lambda_coeffs, other.lambda_coeffs, strict=True)),
            self.delta + other.delta,
        )

    def __sub__(self, other: "Weight") -> "Weight":
        return self + (-other)

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.lambda_coeffs), -self.delta)

    def __rmul__(self, k: int) -> "Weight":
        return Weight(tuple(k * a for a in self.lambda_coeffs), k * self.delta)

    def eq_prime(self, other: "Weight") -> bool:
        """Equality in `P / \\mathbb{Z}\\delta` (the derived-algebra comparison)."""
        return self.lambda_coeffs == other.lambda_coeffs

    def with_delta(self, delta: int) -> "Weight":
        return Weight(self.lambda_coeffs, delta)

    def to_json(self) -> dict:
        return {"lambda": list(self.lambda_coeffs), "delta": self.delta}

    @classmethod
    def from_json(cls, data: Mapping) -> "Weight":
        return cls(tuple(data["lambda"]), data.get("delta", 0))

    def __repr__(self):
        terms = [f"{c}*La{i}" for i, c in enumerate(self.lambda_coeffs) if c]
        if self.delta:
            terms.append(f"{self.delta}*delta")
        return " + ".join(terms) if terms else "0"


def fundamental_weight(n: int, i: int) -> Weight:
    coeffs = [0] * n
    coeffs[i % n] = 1
    return Weight(tuple(coeffs))


def simple_root(n: int, i: int) -> Weight:
    r"""
    `\alpha_i` in the `\Lambda`-basis. `\alpha_0` carries the `\delta`
    since `\delta = \alpha_0 + \cdots + \alpha_{n-1}` while the
    `\Lambda`-parts of the simple roots sum to zero.
    """
    i %= n
    coeffs = [0] * n
    coeffs[i] += 2
    coeffs[(i + 1) % n] -= 1
    coeffs[(i - 1) % n] -= 1
    return Weight(tuple(coeffs), 1 if i == 0 else 0)


def pairing(i: int, w: Weight) -> int:
    r"""`\langle h_i, w \rangle`; `\delta` pairs to zero with every coroot."""
    return w.lambda_coeffs[i % w.n]


# ---------------------------------------------------------------------------
# Monomials
# ---------------------------------------------------------------------------

_FACTOR_RE = re.compile(r"Y\((-?\d+),(-?\d+)\)(?:\^(-?\d+))?")


class Monomial:
    r"""
    A Laurent monomial `\prod Y_{i,k}^{y_{i,k}}`.

    Build with ``Monomial({(i, k): e, ...})``, ``Monomial.Y(i, k, e)`` or by
    multiplying others. ``Monomial()`` is the constant `\mathbf{1}`.
    The canonical order of factors is by `(k, i)`.
    """

    __slots__ = ("_exps", "_items", "_hash")

    def __init__(self, factors: Mapping[tuple[int, int], int] | Iterable = ()):
        if isinstance(factors, Mapping):
            pairs = factors.items()
        else:
            pairs = (((i, k), e) for i, k, e in factors)
        exps: dict[tuple[int, int], int] = {}
        for (i, k), e in pairs:
            key = (int(i), int(k))
            exps[key] = exps.get(key, 0) + int(e)
        self._exps = {key: e for key, e in exps.items() if e}
        self._items = tuple(sorted(((k, i, e) for (i, k), e in self._exps.items())))
        self._hash = hash(self._items)

    @classmethod
    def Y(cls, i: int, k: int, e: int = 1) -> "Monomial":
        return cls({(i, k): e})

    @classmethod
    def one(cls) -> "Monomial":
        return cls()

    # -- access ------------------------------------------------------------

    def exponent(self, i: int, k: int) -> int:
        return self._exps.get((i, k), 0)

    def factors(self) -> list[tuple[int, int, int]]:
        """``[(i, k, e), ...]`` in canonical `(k, i)` order."""
        return [(i, k, e) for k, i, e in self._items]

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self._exps)

    def key(self) -> tuple:
        return self._items

    def is_one(self) -> bool:
        return not self._items

    def __len__(self):
        return len(self._items)

    def row(self, i: int) -> dict[int, int]:
        """The exponents `y_{i,k}` of a fixed first index, keyed by `k`."""
        return {k: e for k, ii, e in self._items if ii == i}

    def second_indices(self) -> range | None:
        if not self._items:
            return None
        return range(self._items[0][0], self._items[-1][0] + 1)

    # -- arithmetic --------------------------------------------------------

    def __mul__(self, other: "Monomial") -> "Monomial":
        if not isinstance(other, Monomial):
            return NotImplemented
        exps = dict(self._exps)
        for key, e in other._exps.items():
            exps[key] = exps.get(key, 0) + e
        return Monomial(exps)

    def __pow__(self, p: int) -> "Monomial":
        return Monomial({key: p * e for key, e in self._exps.items()})

    def inverse(self) -> "Monomial":
        return self ** -1

    def __truediv__(self, other: "Monomial") -> "Monomial":
        return self * other.inverse()

    def __eq__(self, other):
        return isinstance(other, Monomial) and self._items == other._items

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "Monomial"):
        return self._items < other._items

    # -- output ------------------------------------------------------------

    def display(self) -> str:
        if not self._items:
            return "1"
        parts = []
        for k, i, e in self._items:
            parts.append(f"Y({i},{k})" if e == 1 else f"Y({i},{k})^{e}")
        return "*".join(parts)

    __repr__ = display
    __str__ = display

    def latex(self) -> str:
        r"""
        LaTeX form with factors ordered by `(i, k)`, e.g.
        ``Y_{0,0} Y_{0,1}^{-2} Y_{1,0}^{2} Y_{2,1}^{-1}``.
        """
        if not self._items:
            return "1"
        parts = []
        for (i, k), e in sorted(self._exps.items()):
            parts.append(f"Y_{{{i},{k}}}" if e == 1 else f"Y_{{{i},{k}}}^{{{e}}}")
        return " ".join(parts)

    def to_json(self) -> dict:
        return {"factors": [[i, k, e] for i, k, e in self.factors()]}

    @classmethod
    def from_json(cls, data: Mapping) -> "Monomial":
        return cls([tuple(f) for f in data["factors"]])

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        """Inverse of :meth:`display`."""
        text = text.strip()
        if text == "1":
            return cls()
        factors = []
        for chunk in text.split("*"):
            mt = _FACTOR_RE.fullmatch(chunk.strip())
            if mt is None:
                raise ValueError(f"cannot parse monomial factor {chunk!r}")
            i, k, e = mt.groups()
            factors.append((int(i), int(k), int(e) if e is not None else 1))
        return cls(factors)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return a * b


def mono_weight(m: Monomial, n: int) -> Weight:
    r"""`\mathrm{wt}(m) = \sum_{i,k} y_{i,k} \Lambda_i`."""
    coeffs = [0] * n
    for i, _, e in m.factors():
        coeffs[i % n] += e
    return Weight(tuple(coeffs))


def a_monomial(p: CrystalParams, i: int, k: int) -> Monomial:
    r"""
    `A_{i,k} = Y_{i,k} Y_{i,k+K} Y_{i-1,k+c_{i-1,i}}^{-1} Y_{i+1,k+c_{i+1,i}}^{-1}`.

    The neighbour shifts are indexed target-first. Under the default
    orientation this is `Y_{i,k} Y_{i,k+1} Y_{i-1,k+1}^{-1} Y_{i+1,k}^{-1}`.
    """
    n = p.n
    i %= n
    left, right = (i - 1) % n, (i + 1) % n
    return Monomial([
        (i, k, 1),
        (i, k + p.K, 1),
        (left, k + p.c_up[left], -1),
        (right, k + p.c_down[i], -1),
    ])


def x_monomial(p: CrystalParams, i: int, k: int) -> Monomial:
    r"""`X_{i,k} = Y_{i-1,k+1}^{-1} Y_{i,k}`, first index read mod `n`."""
    n = p.n
    return Monomial([(i % n, k, 1), ((i - 1) % n, k + 1, -1)])


def x_product(p: CrystalParams, xs, k: int = 0) -> Monomial:
    r"""`X_{1,k}^{x_1} \cdots X_{n,k}^{x_n}` expanded in the `Y` variables."""
    n = p.n
    if len(xs) != n:
        raise ValueError(f"expected {n} exponents, got {len(xs)}")
    exps: dict[tuple[int, int], int] = {}
    for pos, x in enumerate(xs):
        if not x:
            continue
        i = (pos + 1) % n
        exps[(i, k)] = exps.get((i, k), 0) + x
        exps[((i - 1) % n, k + 1)] = exps.get(((i - 1) % n, k + 1), 0) - x
    return Monomial(exps)


def y_lambda(p: CrystalParams, w: Weight) -> Monomial:
    r"""`Y_\lambda = \prod_i Y_{i,0}^{\langle h_i, \lambda \rangle}` for dominant `\lambda`."""
    if w.n != p.n:
        raise ValueError("weight rank does not match params")
    if not w.is_dominant():
        raise ValueError(f"weight {w!r} is not dominant")
    return Monomial({(i, 0): c for i, c in enumerate(w.lambda_coeffs)})


def tau(m: Monomial, j: int) -> Monomial:
    """Shift every second index by ``j``."""
    if j == 0:
        return m
    return Monomial([(i, k + j, e) for i, k, e in m.factors()])


# ---------------------------------------------------------------------------
# X-factorization
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class XFactorization:
    r"""Exponents `n_{i,k}` of `\prod X_{i,k}^{n_{i,k}}`, keyed by ``(i mod n, k)``."""
    n: int
    exponents: tuple[tuple[tuple[int, int], int], ...]

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.exponents)

    def max_abs(self) -> int:
        return max((abs(e) for _, e in self.exponents), default=0)

    def levels(self) -> set[int]:
        return {k for (_, k), _ in self.exponents}

    def level_vector(self, k: int = 0) -> tuple[int, ...]:
        """``(x_1, ..., x_n)`` for level ``k``; ``x_n`` is the exponent of `X_{0,k}`."""
        d = self.as_dict()
        return tuple(d.get((pos % self.n, k), 0) for pos in range(1, self.n + 1))

    def expand(self, p: CrystalParams) -> Monomial:
        m = Monomial()
        for (i, k), e in self.exponents:
            m = m * x_monomial(p, i, k) ** e
        return m


def x_factorize(p: CrystalParams, m: Monomial) -> XFactorization:
    r"""
    Write ``m`` as a finite product of `X_{i,k}`.

    Since `y_{i,k} = n_{i,k} - n_{i+1,k-1}`, the exponents are the diagonal
    sums `n_{j,l} = \sum_{t \ge 0} y_{j+t, l-t}`. Past the top second index
    of ``m`` each diagonal sum is constant, so it has to vanish there.

    EXAMPLES::

        >>> p = make_params(3)
        >>> x_factorize(p, x_monomial(p, 1, 0) ** 3).as_dict()
        {(1, 0): 3}
    """
    n = p.n
    if m.is_one():
        return XFactorization(n, ())
    ks = m.second_indices()
    kmin, kmax = ks.start, ks.stop - 1
    out = {}
    for l in range(kmin, kmax + 1):
        for j in range(n):
            total = 0
            for t in range(l - kmin + 1):
                total += m.exponent((j + t) % n, l - t)
            if total:
                if l == kmax:
                    raise NotXFactorizable(
                        f"{m} has a nonzero diagonal sum at ({j},{l}) persisting past its support"
                    )
                out[(j, l)] = total
    return XFactorization(n, tuple(sorted(out.items(), key=lambda kv: (kv[0][1], kv[0][0]))))


# ---------------------------------------------------------------------------
# Classical projection
# ---------------------------------------------------------------------------

def _finite_cartan_inverse(r: int) -> list[list[Fraction]]:
    # type A_r: (C^{-1})_{ij} = min(i, j) - i j / (r + 1), 1-based
    return [[Fraction(min(i, j)) - Fraction(i * j, r + 1) for j in range(1, r + 1)]
            for i in range(1, r + 1)]


def classical_alpha_coords(p: CrystalParams, w: Weight, base: Weight) -> tuple[Fraction, ...]:
    r"""
    Coordinates of `\overline{w - base}` in the simple roots
    `\alpha_1, \dots, \alpha_{n-1}` of `\mathfrak{sl}_n`.

    The classical projection drops `\Lambda_0` (and `\delta`), sending
    `\Lambda_i` to `\overline{\Lambda}_i`. The result is exact.

    EXAMPLES::

        >>> p = make_params(3)
        >>> w = Weight((0, -3, 3))                  # wt of (0, 3, 0)
        >>> base = 3 * fundamental_weight(3, 1)
        >>> classical_alpha_coords(p, w, base)
        (Fraction(-3, 1), Fraction(0, 1))
    """
    r = p.n - 1
    diff = [a - b for a, b in zip(w.lambda_coeffs[1:], base.lambda_coeffs[1:])]
    inv = _finite_cartan_inverse(r)
    # alpha_j = sum_i C_{ij} varpi_i with C symmetric, so coords = C^{-1} diff
    return tuple(sum((inv[i][j] * diff[j] for j in range(r)), Fraction(0)) for i in range(r))
