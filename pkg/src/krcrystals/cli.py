"""
Command-line interface.

Exit codes: 0 on success or a passing check, 1 on a failing check or when a
generation cap is hit, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from krcrystals.engine import (
    CrystalGraph,
    SAFETY_CAP,
    character,
    check_axioms,
    check_perfect,
    check_regular,
    closure,
    graph_from_json,
    is_isomorphic,
    tensor,
)
from krcrystals.errors import LimitExceeded
from krcrystals.families import (
    BarMonomials,
    CoherentMonomials,
    DaggerMonomials,
    StdMonomials,
    TensorFamily,
    TupleFamily,
)
from krcrystals.kyoto import (
    verify_perfect,
    verify_prop62,
    verify_thm31,
    verify_thm41,
    verify_thm42,
    verify_thm51,
    verify_thm52,
)
from krcrystals.lattice import Monomial, Weight, make_params, x_product, y_lambda
from krcrystals.monomials import seed_m1s
from krcrystals.tuples import coherent, column, kr

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


# ---------------------------------------------------------------------------
# argument decoding
# ---------------------------------------------------------------------------

_PAIR_KEY = re.compile(r"^\(?\s*(-?\d+)\s*,\s*(-?\d+)\s*\)?$")


def parse_seed(text: str) -> Monomial:
    """
    A seed monomial from ``{"factors": [[i, k, e], ...]}``, from a mapping
    ``{"(i,k)": e, ...}``, or from the display form ``Y(i,k)^e*...``.
    """
    text = text.strip()
    if text.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"seed is not valid JSON: {exc}") from None
        if "factors" in data:
            return Monomial.from_json(data)
        factors = {}
        for key, e in data.items():
            m = _PAIR_KEY.match(key)
            if m is None or not isinstance(e, int):
                raise UsageError(f"bad seed entry {key!r}: {e!r}")
            factors[(int(m[1]), int(m[2]))] = e
        return Monomial(factors)
    try:
        return Monomial.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def parse_shifts(text: str) -> list[tuple[int, int]]:
    """``"1:0,2:1"`` -> ``[(1, 0), (2, 1)]`` as ``(s, shift)`` pairs."""
    out = []
    for part in text.split(","):
        m = re.fullmatch(r"\s*(\d+)\s*:\s*(\d+)\s*", part)
        if m is None:
            raise UsageError(f"bad shift spec {part!r}; expected s:j")
        out.append((int(m[1]), int(m[2])))
    return out


def parse_weight(text: str, n: int) -> Weight:
    coeffs = parse_ints(text)
    if len(coeffs) != n:
        raise UsageError(f"--lam needs {n} coefficients, got {len(coeffs)}")
    return Weight(coeffs)


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name} is required here")


def load_graph(path: str) -> CrystalGraph:
    try:
        with open(path, encoding="utf-8") as fh:
            g = graph_from_json(fh.read())
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read graph {path}: {exc}") from None
    g.family = family_from_meta(g)
    return g


def family_from_meta(g: CrystalGraph):
    name = g.meta.get("family")
    p = g.params
    simple = {
        "std": lambda: StdMonomials(p),
        "coh": lambda: CoherentMonomials(p),
        "bar": lambda: BarMonomials(p),
        "kr": lambda: TupleFamily(p.n, "kr"),
        "coherent": lambda: TupleFamily(p.n, "coherent"),
        "column-string": lambda: TupleFamily(p.n, "column"),
        "column-induced": lambda: TupleFamily(p.n, "column", "induced"),
        "dagger": lambda: DaggerMonomials(p),
    }
    if name in simple:
        return simple[name]()
    if name == "tensor":
        facs = g.meta.get("factors", [])
        if len(facs) == 2 and all(f in simple for f in facs):
            return TensorFamily(simple[facs[0]](), simple[facs[1]]())
    return None


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _emit(g: CrystalGraph, fmt: str, out):
    out.write(g.to_json() if fmt == "json" else g.to_dot())


OP_FAMILIES = {"std": StdMonomials, "dagger": DaggerMonomials,
               "coh": CoherentMonomials, "bar": BarMonomials}


def cmd_gen(args, out) -> int:
    p = make_params(args.n)
    n = args.n
    model = args.model
    limits = {"max_depth": args.depth, "max_size": args.max_size, "cap": args.cap}
    if args.op is not None and model != "hw":
        raise UsageError("--op applies to --model hw")
    if model == "kr":
        _need(args, "s")
        fam, seeds = TupleFamily(n, "kr"), [kr((args.s,) + (0,) * (n - 1))]
    elif model == "m1s":
        if args.seed is None:
            _need(args, "s")
        fam = StdMonomials(p)
        seeds = [parse_seed(args.seed) if args.seed else seed_m1s(p, args.s)]
    elif model == "column":
        _need(args, "r")
        if not 1 <= args.r < n:
            raise UsageError("--r must satisfy 1 <= r < n")
        xs = (1,) * args.r + (0,) * (n - args.r)
        if args.monomial:
            fam, seeds = BarMonomials(p), [x_product(p, xs)]
        else:
            fam, seeds = TupleFamily(n, "column"), [column(xs)]
    elif model == "binf":
        _need(args, "depth")
        if args.monomial:
            fam, seeds = CoherentMonomials(p), [Monomial()]
        else:
            fam, seeds = TupleFamily(n, "coherent"), [coherent((0,) * n)]
    elif model == "minf":
        _need(args, "depth")
        fam, seeds = DaggerMonomials(p), [Monomial()]
    elif model == "hw":
        op = args.op or "std"
        if op == "std":
            _need(args, "depth")
            if args.seed is None and args.lam is None:
                raise UsageError("hw needs --seed or --lam")
            seed = parse_seed(args.seed) if args.seed else y_lambda(p, parse_weight(args.lam, n))
        elif op == "bar":
            _need(args, "seed")
            seed = parse_seed(args.seed)
        else:
            _need(args, "depth")
            seed = parse_seed(args.seed) if args.seed else Monomial()
            if op == "dagger" and not seed.is_one():
                raise UsageError("--op dagger generates from the unit monomial only")
        fam, seeds = OP_FAMILIES[op](p), [seed]
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(model)
    g = closure(fam, seeds, **limits)
    _emit(g, args.format, out)
    return EXIT_PASS


def cmd_tensor(args, out) -> int:
    g = tensor(load_graph(args.left), load_graph(args.right))
    _emit(g, args.format, out)
    return EXIT_PASS


def cmd_iso(args, out) -> int:
    g1, g2 = load_graph(args.a), load_graph(args.b)
    anchors = parse_ints(args.anchors) if args.anchors else None
    if anchors is not None and len(anchors) != 2:
        raise UsageError("--anchors takes two vertex ids")
    if (g1.boundary or g2.boundary) and anchors is None:
        raise UsageError("truncated graphs need --anchors")
    m = is_isomorphic(g1, g2, anchors=anchors)
    if m is None:
        out.write("NOT ISOMORPHIC\n")
        return EXIT_FAIL
    for u in sorted(m):
        out.write(f"v{u} -> v{m[u]}\n")
    return EXIT_PASS


def _report(rep, out) -> int:
    out.write(json.dumps(rep.to_json(), indent=1) + "\n")
    return EXIT_PASS if rep.passed else EXIT_FAIL


def cmd_axioms(args, out) -> int:
    g = load_graph(args.graph)
    rep = check_regular(g) if args.regular else check_axioms(g)
    return _report(rep, out)


def cmd_perfect(args, out) -> int:
    return _report(check_perfect(load_graph(args.graph), args.s, args.r), out)


def cmd_character(args, out) -> int:
    g = load_graph(args.graph)
    out.write(character(g, "latex" if args.latex else "plain") + "\n")
    return EXIT_PASS


def cmd_verify(args, out) -> int:
    th = args.theorem
    if th == "3.1":
        _need(args, "n", "s")
        rep = verify_thm31(args.n, args.s)
    elif th == "4.1":
        _need(args, "n", "shifts")
        rep = verify_thm41(args.n, parse_shifts(args.shifts))
    elif th == "4.2":
        _need(args, "n", "lam")
        rep = verify_thm42(make_params(args.n), parse_weight(args.lam, args.n),
                           6 if args.depth is None else args.depth)
    elif th == "5.1":
        _need(args, "n")
        rep = verify_thm51(args.n, 6 if args.depth is None else args.depth)
    elif th == "5.2":
        _need(args, "n")
        rep = verify_thm52(make_params(args.n), 6 if args.depth is None else args.depth)
    elif th == "6.2":
        _need(args, "n", "r")
        rep = verify_prop62(args.n, args.r)
    else:
        _need(args, "n", "s")
        rep = verify_perfect(args.n, args.s, args.level)
    return _report(rep, out)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="krcrystals", description="Monomial and tuple models of KR crystals.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="generate a crystal graph")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--model", required=True, choices=["kr", "m1s", "column", "binf", "minf", "hw"])
    g.add_argument("--s", type=int)
    g.add_argument("--r", type=int)
    g.add_argument("--lam", help="dominant weight coefficients, e.g. 1,0,0")
    g.add_argument("--seed", help='seed monomial: {"factors": [[i,k,e],...]} or {"(i,k)": e}')
    g.add_argument("--depth", type=int, help="BFS radius (required for infinite models)")
    g.add_argument("--max-size", type=int)
    g.add_argument("--cap", type=int, default=SAFETY_CAP)
    g.add_argument("--op", choices=sorted(OP_FAMILIES),
                   help="hw: operator family applied to the seed (default std)")
    g.add_argument("--monomial", action="store_true",
                   help="column/binf: use the monomial realization")
    g.add_argument("--format", choices=["dot", "json"], default="dot")
    g.set_defaults(func=cmd_gen)

    t = sub.add_parser("tensor", help="tensor two graph JSON files (left = b2, right = b1)")
    t.add_argument("left")
    t.add_argument("right")
    t.add_argument("--format", choices=["dot", "json"], default="json")
    t.set_defaults(func=cmd_tensor)

    i = sub.add_parser("iso", help="test two graph JSON files for isomorphism")
    i.add_argument("a")
    i.add_argument("b")
    i.add_argument("--anchors", help="vertex ids u,v to anchor truncated graphs")
    i.set_defaults(func=cmd_iso)

    x = sub.add_parser("axioms", help="check the crystal axioms on a graph JSON file")
    x.add_argument("graph")
    x.add_argument("--regular", action="store_true", help="check regularity instead")
    x.set_defaults(func=cmd_axioms)

    pf = sub.add_parser("perfect", help="check perfectness of a finite graph")
    pf.add_argument("graph")
    pf.add_argument("--s", type=int, required=True)
    pf.add_argument("--r", type=int, default=1)
    pf.set_defaults(func=cmd_perfect)

    c = sub.add_parser("character", help="sum of the element monomials")
    c.add_argument("graph")
    c.add_argument("--latex", action="store_true")
    c.set_defaults(func=cmd_character)

    v = sub.add_parser("verify", help="run a theorem verifier")
    v.add_argument("--theorem", required=True,
                   choices=["3.1", "4.1", "4.2", "5.1", "5.2", "6.2", "perfect"])
    v.add_argument("--n", type=int)
    v.add_argument("--s", type=int)
    v.add_argument("--r", type=int)
    v.add_argument("--lam")
    v.add_argument("--depth", type=int)
    v.add_argument("--shifts", help="s:j pairs, e.g. 1:0,2:1")
    v.add_argument("--level", type=int, help="perfect: level to test (default s)")
    v.set_defaults(func=cmd_verify)
    return ap


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_entry():
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
