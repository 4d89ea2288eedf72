r"""
Finite (or truncated) crystal graphs.

A :class:`CrystalGraph` is an edge-labelled digraph whose vertices cache
`(\varepsilon, \varphi, \mathrm{wt})`; an edge ``(u, v, i)`` means
`f_i u = v`. Graphs are produced by :func:`closure` from an operator family
or by :func:`tensor` from two graphs, and consumed by the checkers and by
:func:`is_isomorphic`.

Tensor products follow the convention `b_2 \otimes b_1` with the left factor
`b_2`: `f_i` acts on `b_2` iff `\varepsilon_i(b_2) \ge \varphi_i(b_1)`.
"""

from __future__ import annotations

import json
import re
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from krcrystals.errors import LimitExceeded, ParamsMismatch
from krcrystals.families import (
    Family,
    TensorFamily,
    element_from_json,
    element_key,
    element_label,
    element_to_json,
)
from krcrystals.lattice import (
    CrystalParams,
    Monomial,
    Weight,
    classical_alpha_coords,
    fundamental_weight,
    simple_root,
)

__all__ = [
    "CrystalGraph",
    "Report",
    "closure",
    "induced_graph",
    "tensor",
    "tensor_all",
    "check_axioms",
    "check_regular",
    "check_perfect",
    "is_isomorphic",
    "check_morphism",
    "character",
    "character_terms",
    "weakly_connected_components",
    "graph_to_json",
    "graph_from_json",
    "graph_to_dot",
    "parse_dot",
    "format_dot",
    "SAFETY_CAP",
]

SAFETY_CAP = 10**6
TENSOR_CONVENTION = "left (x) right = b2 (x) b1; f_i acts on left iff eps_i(left) >= phi_i(right)"


@dataclass
class Report:
    name: str
    passed: bool
    failures: list[str] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    def __bool__(self):
        return self.passed

    def to_json(self) -> dict:
        return {"check": self.name, "status": "pass" if self.passed else "fail",
                "failures": self.failures[:20], "info": self.info}


class CrystalGraph:
    """
    Vertices ``0..V-1`` in canonical order, with per-vertex ``eps``/``phi``
    arrays of shape ``(V, n)`` and weights ``wt`` (``(V, n)``) plus
    ``delta`` (``(V,)``).
    """

    def __init__(self, params: CrystalParams, elements: list, eps, phi, wt, delta,
                 edges: Iterable[tuple[int, int, int]], boundary: Iterable[int] = (),
                 meta: dict | None = None, family: Family | None = None,
                 keys: list | None = None, labels: list[str] | None = None):
        self.params = params
        self.elements = list(elements)
        self.keys = keys if keys is not None else [element_key(x) for x in self.elements]
        self.labels = labels if labels is not None else [element_label(x) for x in self.elements]
        n, size = params.n, len(self.elements)
        self.eps = np.asarray(eps, dtype=np.int64).reshape(size, n)
        self.phi = np.asarray(phi, dtype=np.int64).reshape(size, n)
        self.wt = np.asarray(wt, dtype=np.int64).reshape(size, n)
        self.delta = np.asarray(delta, dtype=np.int64).reshape(size)
        self.edges = sorted(set((int(u), int(v), int(i)) for u, v, i in edges))
        self.boundary = frozenset(int(b) for b in boundary)
        self.meta = dict(meta or {})
        self.family = family
        self.f_out = np.full((n, size), -1, dtype=np.int64)
        self.e_out = np.full((n, size), -1, dtype=np.int64)
        self._multi: list[tuple[int, int, int]] = []
        for u, v, i in self.edges:
            if self.f_out[i, u] >= 0 or self.e_out[i, v] >= 0:
                self._multi.append((u, v, i))
            self.f_out[i, u] = v
            self.e_out[i, v] = u
        self.index = {k: j for j, k in enumerate(self.keys)}

    # -- basic access --------------------------------------------------------

    @property
    def n(self) -> int:
        return self.params.n

    def __len__(self):
        return len(self.elements)

    @property
    def affine(self) -> bool:
        return bool(self.meta.get("affine", False))

    def weight(self, v: int) -> Weight:
        return Weight(tuple(self.wt[v]), int(self.delta[v]))

    def interior(self) -> list[int]:
        return [v for v in range(len(self)) if v not in self.boundary]

    def vertex_of(self, element) -> int | None:
        return self.index.get(element_key(element))

    def f(self, v: int, i: int) -> int | None:
        t = int(self.f_out[i, v])
        return None if t < 0 else t

    def e(self, v: int, i: int) -> int | None:
        t = int(self.e_out[i, v])
        return None if t < 0 else t

    def signature(self, v: int, compare_delta: bool = False) -> tuple:
        sig = (tuple(self.eps[v]), tuple(self.phi[v]), tuple(self.wt[v]))
        return sig + (int(self.delta[v]),) if compare_delta else sig

    def num_edges(self) -> int:
        return len(self.edges)

    def __repr__(self):
        return (f"CrystalGraph(n={self.n}, vertices={len(self)}, edges={len(self.edges)}, "
                f"boundary={len(self.boundary)})")

    def to_json(self) -> str:
        return graph_to_json(self)

    def to_dot(self) -> str:
        return graph_to_dot(self)


# ---------------------------------------------------------------------------
# canonical numbering
# ---------------------------------------------------------------------------

def _canonical_order(keys: list, edges: list[tuple[int, int, int]], n: int) -> list[int]:
    size = len(keys)
    fo = [[-1] * size for _ in range(n)]
    eo = [[-1] * size for _ in range(n)]
    for u, v, i in edges:
        fo[i][u] = v
        eo[i][v] = u
    order, seen = [], [False] * size
    for root in sorted(range(size), key=lambda j: keys[j]):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            order.append(u)
            for i in range(n):
                for w in (fo[i][u], eo[i][u]):
                    if w >= 0 and not seen[w]:
                        seen[w] = True
                        queue.append(w)
    return order


def _assemble(params, elements, keys, labels, eps, phi, wt, delta, edges, boundary, meta,
              family) -> CrystalGraph:
    order = _canonical_order(keys, edges, params.n)
    pos = {old: new for new, old in enumerate(order)}
    return CrystalGraph(
        params,
        [elements[o] for o in order],
        np.asarray(eps)[order] if len(order) else np.zeros((0, params.n)),
        np.asarray(phi)[order] if len(order) else np.zeros((0, params.n)),
        np.asarray(wt)[order] if len(order) else np.zeros((0, params.n)),
        np.asarray(delta)[order] if len(order) else np.zeros(0),
        [(pos[u], pos[v], i) for u, v, i in edges],
        [pos[b] for b in boundary],
        meta,
        family,
        keys=[keys[o] for o in order],
        labels=[labels[o] for o in order],
    )


# ---------------------------------------------------------------------------
# closure
# ---------------------------------------------------------------------------

def closure(family: Family, seeds, max_depth: int | None = None, max_size: int | None = None,
            cap: int = SAFETY_CAP, meta: dict | None = None) -> CrystalGraph:
    r"""
    Breadth-first closure of ``seeds`` under the family's `e_i` and `f_i`
    (only `f_i` for ``f_only`` families).

    Vertices at distance ``max_depth``, and vertices one of whose images was
    dropped because of ``max_size``, are not expanded and are recorded as
    ``boundary``. Growing past ``cap`` vertices raises :class:`LimitExceeded`
    whether or not limits are set.

    EXAMPLES::

        >>> from krcrystals.lattice import make_params
        >>> from krcrystals.families import StdMonomials
        >>> from krcrystals.monomials import seed_m1s
        >>> p = make_params(3)
        >>> g = closure(StdMonomials(p), [seed_m1s(p, 3)])
        >>> len(g), g.num_edges()
        (10, 18)
    """
    # a tuple is a single tensor element, so only lists hold several seeds
    seeds = list(seeds) if isinstance(seeds, list) else [seeds]
    n = family.n
    elements, keys, depth = [], [], []
    index: dict = {}
    for s in seeds:
        k = element_key(s)
        if k not in index:
            index[k] = len(elements)
            elements.append(s)
            keys.append(k)
            depth.append(0)
    edges: set[tuple[int, int, int]] = set()
    boundary: set[int] = set()
    queue = deque(range(len(elements)))
    while queue:
        u = queue.popleft()
        if max_depth is not None and depth[u] >= max_depth:
            boundary.add(u)
            continue
        x = elements[u]
        for i in range(n):
            moves = [(family.f(x, i), True)]
            if not family.f_only:
                moves.append((family.e(x, i), False))
            for y, forward in moves:
                if y is None:
                    continue
                k = element_key(y)
                v = index.get(k)
                if v is None:
                    if max_size is not None and len(elements) >= max_size:
                        boundary.add(u)
                        continue
                    if len(elements) >= cap:
                        raise LimitExceeded(f"closure exceeded {cap} vertices")
                    v = len(elements)
                    index[k] = v
                    elements.append(y)
                    keys.append(k)
                    depth.append(depth[u] + 1)
                    queue.append(v)
                edges.add((u, v, i) if forward else (v, u, i))
    eps, phi, wt, delta = [], [], [], []
    for x in elements:
        ev, pv = family.stats(x)
        w = family.weight(x)
        eps.append(ev)
        phi.append(pv)
        wt.append(w.lambda_coeffs)
        delta.append(w.delta)
    info = {"family": family.name, "seeds": [element_label(s) for s in seeds],
            "max_depth": max_depth, "max_size": max_size}
    affine = any(getattr(x, "degree", None) is not None for x in elements[:1])
    if affine:
        info["affine"] = True
    info.update(meta or {})
    labels = [element_label(x) for x in elements]
    return _assemble(family.params, elements, keys, labels, eps, phi, wt, delta,
                     sorted(edges), boundary, info, family)


def induced_graph(family: Family, elements: list, meta: dict | None = None) -> CrystalGraph:
    """
    The graph of the family's operators on a fixed finite element set. Raises
    ``ValueError`` if an operator leaves the set.
    """
    keys = [element_key(x) for x in elements]
    index = {k: j for j, k in enumerate(keys)}
    if len(index) != len(keys):
        raise ValueError("duplicate elements")
    edges = []
    eps, phi, wt, delta = [], [], [], []
    for u, x in enumerate(elements):
        for i in range(family.n):
            y = family.f(x, i)
            if y is not None:
                v = index.get(element_key(y))
                if v is None:
                    raise ValueError(f"f_{i} maps {element_label(x)} outside the set")
                edges.append((u, v, i))
            y = family.e(x, i)
            if y is not None and element_key(y) not in index:
                raise ValueError(f"e_{i} maps {element_label(x)} outside the set")
        ev, pv = family.stats(x)
        w = family.weight(x)
        eps.append(ev)
        phi.append(pv)
        wt.append(w.lambda_coeffs)
        delta.append(w.delta)
    info = {"family": family.name}
    info.update(meta or {})
    labels = [element_label(x) for x in elements]
    return _assemble(family.params, list(elements), keys, labels, eps, phi, wt, delta, edges,
                     (), info, family)


# ---------------------------------------------------------------------------
# tensor products
# ---------------------------------------------------------------------------

def tensor(left: CrystalGraph, right: CrystalGraph) -> CrystalGraph:
    r"""
    The graph of ``left`` `\otimes` ``right`` computed from the cached data.

    EXAMPLES::

        >>> from krcrystals.families import TupleFamily
        >>> from krcrystals.tuples import kr
        >>> b = closure(TupleFamily(3, "kr"), [kr(1, 0, 0)])
        >>> len(tensor(b, b))
        9
    """
    if left.params != right.params:
        raise ParamsMismatch(f"{left.params} vs {right.params}")
    n = left.n
    V1, V2 = len(left), len(right)
    # pair (a, b) -> a * V2 + b
    wt2 = right.wt[None, :, :]
    wt1 = left.wt[:, None, :]
    eps = np.maximum(right.eps[None, :, :], left.eps[:, None, :] - wt2).reshape(V1 * V2, n)
    phi = np.maximum(left.phi[:, None, :], right.phi[None, :, :] + wt1).reshape(V1 * V2, n)
    wt = (wt1 + wt2).reshape(V1 * V2, n)
    delta = (left.delta[:, None] + right.delta[None, :]).reshape(V1 * V2)
    a = np.repeat(np.arange(V1), V2)
    b = np.tile(np.arange(V2), V1)
    edges = []
    for i in range(n):
        act_left = left.eps[a, i] >= right.phi[b, i]
        tl = left.f_out[i, a]
        tr = right.f_out[i, b]
        target = np.where(act_left, np.where(tl >= 0, tl * V2 + b, -1),
                          np.where(tr >= 0, a * V2 + tr, -1))
        src = np.nonzero(target >= 0)[0]
        edges.extend((int(u), int(target[u]), i) for u in src)
    boundary = [a_ * V2 + b_ for a_ in range(V1) for b_ in range(V2)
                if a_ in left.boundary or b_ in right.boundary]
    elements = [(x, y) for x in left.elements for y in right.elements]
    keys = [(k1, k2) for k1 in left.keys for k2 in right.keys]
    labels = [f"{l1} (x) {l2}" for l1 in left.labels for l2 in right.labels]
    family = None
    if left.family is not None and right.family is not None:
        family = TensorFamily(left.family, right.family)
    meta = {"family": "tensor", "convention": TENSOR_CONVENTION,
            "factors": [left.meta.get("family"), right.meta.get("family")]}
    if left.affine or right.affine:
        meta["affine"] = True
    return _assemble(left.params, elements, keys, labels, eps, phi, wt, delta, edges,
                     boundary, meta, family)


def tensor_all(graphs: list[CrystalGraph]) -> CrystalGraph:
    """Left fold ``((g1 (x) g2) (x) g3) ...``."""
    out = graphs[0]
    for g in graphs[1:]:
        out = tensor(out, g)
    return out


# ---------------------------------------------------------------------------
# checkers
# ---------------------------------------------------------------------------

def _root_vec(n: int, i: int) -> tuple[np.ndarray, int]:
    a = simple_root(n, i)
    return np.array(a.lambda_coeffs, dtype=np.int64), a.delta


def check_axioms(g: CrystalGraph) -> Report:
    r"""
    Axioms (1)-(4) of an abstract crystal on the interior vertices; axiom
    (5) is vacuous since no statistic is `-\infty`. When the graph carries
    its family, cached data and edges are also compared with a fresh
    evaluation of the operators.
    """
    fails: list[str] = []
    n = g.n
    roots = [_root_vec(n, i) for i in range(n)]
    for u, v, i in g._multi:
        fails.append(f"label {i} has two edges at {g.labels[u]} / {g.labels[v]}")
    fam = g.family
    recheck = fam is not None
    for u in g.interior():
        for i in range(n):
            if g.phi[u, i] - g.eps[u, i] != g.wt[u, i]:
                fails.append(f"(1) fails at {g.labels[u]}, i={i}")
            v = g.f(u, i)
            if v is not None:
                a, d = roots[i]
                if g.eps[v, i] != g.eps[u, i] + 1 or g.phi[v, i] != g.phi[u, i] - 1:
                    fails.append(f"(3) statistics fail on {g.labels[u]} -{i}-> {g.labels[v]}")
                if not np.array_equal(g.wt[v], g.wt[u] - a) or (
                        g.affine and g.delta[v] != g.delta[u] - d):
                    fails.append(f"(3) weight fails on {g.labels[u]} -{i}-> {g.labels[v]}")
            w = g.e(u, i)
            if w is not None:
                a, d = roots[i]
                if g.eps[w, i] != g.eps[u, i] - 1 or g.phi[w, i] != g.phi[u, i] + 1:
                    fails.append(f"(2) statistics fail on {g.labels[w]} -{i}-> {g.labels[u]}")
                if not np.array_equal(g.wt[w], g.wt[u] + a) or (
                        g.affine and g.delta[w] != g.delta[u] + d):
                    fails.append(f"(2) weight fails on {g.labels[w]} -{i}-> {g.labels[u]}")
        if recheck:
            x = g.elements[u]
            ev, pv = fam.stats(x)
            if list(g.eps[u]) != list(ev) or list(g.phi[u]) != list(pv):
                fails.append(f"cached statistics disagree with recomputation at {g.labels[u]}")
            w = fam.weight(x)
            if tuple(g.wt[u]) != w.lambda_coeffs:
                fails.append(f"cached weight disagrees with recomputation at {g.labels[u]}")
            for i in range(n):
                ops = [(fam.f, g.f)]
                if not fam.f_only or getattr(fam, "fragment", None) is not None:
                    ops.append((fam.e, g.e))
                for op, gop in ops:
                    y = op(x, i)
                    t = gop(u, i)
                    if (y is None) != (t is None) or (
                            y is not None and element_key(y) != g.keys[t]):
                        fails.append(f"(4) edge {i} at {g.labels[u]} disagrees with the operators")
    return Report("axioms", not fails, fails,
                  {"vertices": len(g), "interior": len(g) - len(g.boundary),
                   "axiom5": "vacuous", "recomputed": recheck})


def _string_length(g: CrystalGraph, v: int, i: int, step) -> tuple[int, bool]:
    k = 0
    seen = {v}
    while True:
        if v in g.boundary:
            return k, False
        w = step(v, i)
        if w is None:
            return k, True
        if w in seen:
            return k, False
        seen.add(w)
        k += 1
        v = w


def check_regular(g: CrystalGraph) -> Report:
    r"""
    `\varepsilon_i` and `\varphi_i` equal the `e_i`/`f_i` string lengths at
    every interior vertex. A string that runs into the truncation boundary is
    only required not to exceed the cached value.
    """
    fails = []
    for u in g.interior():
        for i in range(g.n):
            for name, stat, step in (("eps", g.eps, g.e), ("phi", g.phi, g.f)):
                length, complete = _string_length(g, u, i, step)
                value = int(stat[u, i])
                if value < 0 or (complete and length != value) or (not complete and length > value):
                    fails.append(f"{name}_{i}({g.labels[u]}) = {value}, string length "
                                 f"{length}{'' if complete else '+'}")
    return Report("regular", not fails, fails, {"vertices": len(g)})


def weakly_connected_components(g: CrystalGraph) -> list[list[int]]:
    parent = list(range(len(g)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v, _ in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    comps: dict[int, list[int]] = {}
    for v in range(len(g)):
        comps.setdefault(find(v), []).append(v)
    return sorted(comps.values(), key=lambda c: (c[0]))


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def check_perfect(g: CrystalGraph, s: int, r: int = 1) -> Report:
    r"""
    The four conditions for a perfect crystal of level ``s`` whose classical
    highest weight is `s \overline{\Lambda}_r`:

    1. ``g (x) g`` is (weakly) connected;
    2. `\overline{\mathrm{wt}}(b) - s\overline{\Lambda}_r` is a nonpositive
       integer combination of `\alpha_1, \dots, \alpha_{n-1}`;
    3. `\langle c, \varepsilon(b) \rangle \ge s`;
    4. every level-``s`` dominant weight is `\varepsilon(b)` for exactly one
       `b` and `\varphi(b')` for exactly one `b'`.
    """
    n = g.n
    fails = []
    conds = {}
    gg = tensor(g, g)
    ncomp = len(weakly_connected_components(gg))
    conds["1"] = ncomp == 1
    if not conds["1"]:
        fails.append(f"(1) g (x) g has {ncomp} components")
    base = s * fundamental_weight(n, r)
    ok2 = True
    for v in range(len(g)):
        coords = classical_alpha_coords(g.params, g.weight(v), base)
        if any(c.denominator != 1 or c > 0 for c in coords):
            ok2 = False
            fails.append(f"(2) {g.labels[v]} has alpha-coordinates {[str(c) for c in coords]}")
    conds["2"] = ok2
    levels = g.eps.sum(axis=1)
    bad3 = [v for v in range(len(g)) if levels[v] < s]
    conds["3"] = not bad3
    fails.extend(f"(3) level of eps({g.labels[v]}) = {levels[v]} < {s}" for v in bad3)
    eps_count = Counter(tuple(int(x) for x in row) for row in g.eps)
    # eps/phi vectors are stored by index i in I; a weight sum_i c_i Lambda_i
    # is the vector (c_0, ..., c_{n-1})
    phi_count = Counter(tuple(int(x) for x in row) for row in g.phi)
    ok4 = True
    for lam in _compositions(s, n):
        if eps_count.get(lam, 0) != 1 or phi_count.get(lam, 0) != 1:
            ok4 = False
            fails.append(f"(4) lambda={lam}: {eps_count.get(lam, 0)} b_lambda, "
                         f"{phi_count.get(lam, 0)} b^lambda")
    conds["4"] = ok4
    return Report("perfect", all(conds.values()), fails, {"level": s, "conditions": conds})


# ---------------------------------------------------------------------------
# isomorphism
# ---------------------------------------------------------------------------

def _propagate(g1, g2, u0, v0, compare_delta, partial):
    mapping = {u0: v0}
    used = {v0}
    stack = [(u0, v0)]
    while stack:
        u, v = stack.pop()
        if g1.signature(u, compare_delta) != g2.signature(v, compare_delta):
            return None
        if partial and (u in g1.boundary or v in g2.boundary):
            continue
        for i in range(g1.n):
            for a, b in ((g1.f_out[i, u], g2.f_out[i, v]), (g1.e_out[i, u], g2.e_out[i, v])):
                a, b = int(a), int(b)
                # interior vertices carry all their edges, so a missing edge
                # on one side is a genuine zero
                if (a < 0) != (b < 0):
                    return None
                if a < 0:
                    continue
                if a in mapping:
                    if mapping[a] != b:
                        return None
                elif b in used:
                    return None
                else:
                    mapping[a] = b
                    used.add(b)
                    stack.append((a, b))
    return mapping


def is_isomorphic(g1: CrystalGraph, g2: CrystalGraph, anchors: tuple[int, int] | None = None,
                  compare_delta: bool = False) -> dict[int, int] | None:
    r"""
    Search for a label- and signature-preserving bijection ``g1 -> g2``.

    The signature of a vertex is `(\varepsilon, \varphi, \mathrm{wt})`, with
    `\delta` ignored unless ``compare_delta``. Components are matched by size
    and signature multiset; inside a component, a start vertex of ``g1`` with
    the rarest signature is tried against every compatible vertex of ``g2``
    and the map is propagated along labelled edges in both directions. Since
    every vertex has at most one in- and one out-edge per label, an anchor
    fixes the whole component.

    If either graph is truncated, ``anchors`` must be given and the result is
    a partial map on the part reachable through interior vertices.

    Returns the vertex map, or ``None``.
    """
    partial = bool(g1.boundary or g2.boundary)
    if partial:
        if anchors is None:
            raise ValueError("truncated graphs need explicit anchors")
        return _propagate(g1, g2, anchors[0], anchors[1], compare_delta, True)
    if len(g1) != len(g2) or len(g1.edges) != len(g2.edges) or g1.n != g2.n:
        return None
    if anchors is not None:
        m = _propagate(g1, g2, anchors[0], anchors[1], compare_delta, False)
        return m if m is not None and len(m) == len(g1) else None
    comps1 = weakly_connected_components(g1)
    comps2 = weakly_connected_components(g2)

    def profile(g, comp):
        return len(comp), tuple(sorted(Counter(g.signature(v, compare_delta) for v in comp).items()))

    prof2 = [profile(g2, c) for c in comps2]
    free = set(range(len(comps2)))
    mapping: dict[int, int] = {}
    for comp in comps1:
        prof = profile(g1, comp)
        counts = Counter(g1.signature(v, compare_delta) for v in comp)
        start = min(comp, key=lambda v: (counts[g1.signature(v, compare_delta)], v))
        sig = g1.signature(start, compare_delta)
        found = None
        for j in sorted(free):
            if prof2[j] != prof:
                continue
            for cand in comps2[j]:
                if g2.signature(cand, compare_delta) != sig:
                    continue
                m = _propagate(g1, g2, start, cand, compare_delta, False)
                if m is not None and len(m) == len(comp):
                    found = (j, m)
                    break
            if found:
                break
        if found is None:
            return None
        free.discard(found[0])
        mapping.update(found[1])
    return mapping


def check_morphism(mapping: Callable, g1: CrystalGraph, g2: CrystalGraph, strict: bool = False,
                   check_stats: bool = True) -> Report:
    r"""
    Morphism conditions for ``mapping`` (element of ``g1`` to element of
    ``g2`` or ``None`` for zero):

    1. weight, `\varepsilon` and `\varphi` are preserved (weights compared
       modulo `\delta` unless the graphs are affine);
    2. `\psi(e_i b) = e_i \psi(b)` whenever both sides are nonzero;
    3. likewise for `f_i`.

    With ``strict`` the operator identities must hold including zeros.
    """
    fails = []
    images: list[int | None] = []
    for u in range(len(g1)):
        y = mapping(g1.elements[u])
        if y is None:
            images.append(None)
            continue
        v = g2.vertex_of(y)
        if v is None:
            fails.append(f"image of {g1.labels[u]} is not a vertex of the target")
        images.append(v)
    if fails:
        return Report("morphism", False, fails)
    affine = g1.affine and g2.affine
    for u in g1.interior():
        v = images[u]
        if v is not None:
            same_wt = np.array_equal(g1.wt[u], g2.wt[v]) and (
                not affine or g1.delta[u] == g2.delta[v])
            if not same_wt:
                fails.append(f"(1) weight differs at {g1.labels[u]}")
            if check_stats and (not np.array_equal(g1.eps[u], g2.eps[v])
                                or not np.array_equal(g1.phi[u], g2.phi[v])):
                fails.append(f"(1) statistics differ at {g1.labels[u]}")
        if v is not None and v in g2.boundary:
            continue
        for i in range(g1.n):
            for name, op1, op2 in (("e", g1.e, g2.e), ("f", g1.f, g2.f)):
                t = op1(u, i)
                lhs = images[t] if t is not None else None
                rhs = op2(v, i) if v is not None else None
                if strict or (lhs is not None and rhs is not None):
                    if lhs != rhs:
                        fails.append(f"({'2' if name == 'e' else '3'}) psi({name}_{i} b) != "
                                     f"{name}_{i} psi(b) at {g1.labels[u]}")
    return Report("morphism", not fails, fails, {"strict": strict, "check_stats": check_stats})


# ---------------------------------------------------------------------------
# characters
# ---------------------------------------------------------------------------

def character_terms(g: CrystalGraph) -> Counter:
    terms: Counter = Counter()
    for x in g.elements:
        if isinstance(x, tuple):
            m = Monomial()
            for y in x:
                m = m * y
            x = m
        if not isinstance(x, Monomial):
            raise ValueError("character is defined for graphs of monomials")
        terms[x] += 1
    return terms


def character(g: CrystalGraph, style: str = "plain") -> str:
    """
    Sum of the element monomials (products, for tensor vertices), terms in
    canonical order; ``style="latex"`` orders factors as ``Y_{i,k}`` by
    ``(i, k)``.
    """
    terms = character_terms(g)
    parts = []
    for m in sorted(terms):
        body = m.latex() if style == "latex" else m.display()
        c = terms[m]
        parts.append(body if c == 1 else f"{c}*{body}" if style == "plain" else f"{c} {body}")
    return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def graph_to_json(g: CrystalGraph) -> str:
    doc = {
        "params": g.params.to_json(),
        "meta": g.meta,
        "vertices": [
            {"id": v, "element": element_to_json(g.elements[v]),
             "eps": [int(x) for x in g.eps[v]], "phi": [int(x) for x in g.phi[v]],
             "wt": g.weight(v).to_json()}
            for v in range(len(g))
        ],
        "edges": [{"src": u, "dst": v, "i": i} for u, v, i in g.edges],
        "boundary": sorted(g.boundary),
    }
    return json.dumps(doc, indent=1) + "\n"


def graph_from_json(text: str) -> CrystalGraph:
    doc = json.loads(text)
    params = CrystalParams.from_json(doc["params"])
    verts = sorted(doc["vertices"], key=lambda d: d["id"])
    if [d["id"] for d in verts] != list(range(len(verts))):
        raise ValueError("vertex ids must be 0..V-1")
    elements = [element_from_json(d["element"]) for d in verts]
    n = params.n
    return CrystalGraph(
        params, elements,
        [d["eps"] for d in verts] or np.zeros((0, n)),
        [d["phi"] for d in verts] or np.zeros((0, n)),
        [d["wt"]["lambda"] for d in verts] or np.zeros((0, n)),
        [d["wt"].get("delta", 0) for d in verts],
        [(e["src"], e["dst"], e["i"]) for e in doc["edges"]],
        doc.get("boundary", []),
        doc.get("meta", {}),
    )


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def format_dot(labels: list[str], edges: list[tuple[int, int, int]], name: str = "crystal") -> str:
    lines = [f"digraph {name} {{"]
    lines += [f'  v{v} [label="{_dot_escape(lab)}"];' for v, lab in enumerate(labels)]
    lines += [f'  v{u} -> v{v} [label="{i}"];' for u, v, i in sorted(edges)]
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_dot(g: CrystalGraph) -> str:
    return format_dot(g.labels, g.edges)


_NODE_RE = re.compile(r'^\s*v(\d+) \[label="((?:[^"\\]|\\.)*)"\];$')
_EDGE_RE = re.compile(r'^\s*v(\d+) -> v(\d+) \[label="(\d+)"\];$')


def parse_dot(text: str) -> tuple[list[str], list[tuple[int, int, int]]]:
    """Read back the output of :func:`graph_to_dot` as ``(labels, edges)``."""
    labels: dict[int, str] = {}
    edges = []
    for line in text.splitlines():
        if m := _EDGE_RE.match(line):
            edges.append((int(m[1]), int(m[2]), int(m[3])))
        elif m := _NODE_RE.match(line):
            labels[int(m[1])] = re.sub(r"\\(.)", r"\1", m[2])
    return [labels[v] for v in range(len(labels))], edges


