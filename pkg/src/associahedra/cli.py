"""Command-line interface: ``associahedra <command> [options]``.

Exit codes: 0 success, 1 a verification failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys

from .chains import Chain, TensorChain, boundary, compose, render_cell
from .trees import TreeSyntaxError, all_metric_trees, all_trees, corolla, k_dim, parse_tree

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- output

def _dump(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2)


def _chain_lines(x) -> list[str]:
    if not x:
        return ["0"]
    out = []
    for key, c in x.items():
        text = " ⊗ ".join(map(render_cell, key)) if isinstance(x, TensorChain) else render_cell(key)
        out.append(f"{'+' if c > 0 else '-'}{abs(c)}  {text}" if _is_number(c) else f"{c}  {text}")
    return out


def _is_number(c) -> bool:
    try:
        c > 0
        abs(c)
    except TypeError:
        return False
    return True


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(_dump(payload))
    else:
        print("\n".join(text_lines))


def _parse_cell(literal: str, complex: str):
    return parse_tree(literal, metric=(complex == "W"))


def _arity(n: int, least: int = 2) -> int:
    if n < least:
        raise UsageError(f"--n must be at least {least}")
    return n


# ---------------------------------------------------------------- commands

def cmd_cells(args) -> int:
    n = _arity(args.n, 1)
    cells = list(all_trees(n)) if args.complex == "K" else all_metric_trees(n)
    dim = (lambda c: k_dim(c)) if args.complex == "K" else (lambda c: c.dim)
    if args.dim is not None:
        cells = [c for c in cells if dim(c) == args.dim]
    payload = {
        "complex": args.complex,
        "n": n,
        "count": len(cells),
        "cells": [{"literal": render_cell(c), "dim": dim(c)} for c in cells],
    }
    lines = [f"{render_cell(c)}  dim {dim(c)}" for c in cells] + [f"{len(cells)} cells"]
    _emit(args, payload, lines)
    return OK


def cmd_boundary(args) -> int:
    cell = _parse_cell(args.cell, args.complex)
    d = boundary(cell)
    _emit(args, {"input": render_cell(cell), "boundary": d.to_dict()}, _chain_lines(d))
    return OK


def cmd_compose(args) -> int:
    a = _parse_cell(args.left, args.complex)
    b = _parse_cell(args.right, args.complex)
    r = Chain.cell(a).n
    if not 1 <= args.i <= r:
        raise UsageError(f"--i must lie in 1..{r}")
    x = compose(a, args.i, b)
    _emit(args, {"left": render_cell(a), "i": args.i, "right": render_cell(b), "result": x.to_dict()},
          _chain_lines(x))
    return OK


def cmd_q(args) -> int:
    from .transfer import q

    cell = parse_tree(args.cell) if args.cell else corolla(_arity(args.n))
    x = q(cell)
    _emit(args, {"input": render_cell(cell), "q": x.to_dict()}, _chain_lines(x))
    return OK


def cmd_p(args) -> int:
    from .transfer import p

    cell = parse_tree(args.cell, metric=True)
    x = p(cell)
    _emit(args, {"input": str(cell), "p": x.to_dict()}, _chain_lines(x))
    return OK


def cmd_diagonal(args) -> int:
    from .diagonal import su_diagonal, su_diagonal_direct, to_xi_shorthand

    n = _arity(args.n)
    x = su_diagonal(corolla(n)) if args.method == "composite" else su_diagonal_direct(n)
    if args.shorthand:
        x = to_xi_shorthand(x)
    payload = {"n": n, "method": args.method, "shorthand": args.shorthand, "diagonal": x.to_dict()}
    _emit(args, payload, _chain_lines(x))
    return OK


def cmd_defect(args) -> int:
    from .chains import tensor_boundary
    from .diagonal import coassoc_defect, cocommutativity_defect, solve_boundary

    n = _arity(args.n)
    kind = "coassociativity" if args.triple else "cocommutativity"
    d = coassoc_defect(n) if args.triple else cocommutativity_defect(n)
    cycle = not tensor_boundary(d)
    pre = solve_boundary(d) if cycle else None
    payload = {
        "n": n,
        "kind": kind,
        "defect": d.to_dict(),
        "is_cycle": cycle,
        "boundary_of": pre.to_dict() if pre is not None else None,
    }
    lines = [f"{kind} defect on c({n}), {len(d)} terms:"] + ["  " + s for s in _chain_lines(d)]
    if pre is not None:
        lines += ["equals the boundary of:"] + ["  " + s for s in _chain_lines(pre)]
    elif not cycle:
        lines.append("the defect is not a cycle, so it is not a boundary")
    _emit(args, payload, lines)
    return OK


def cmd_verify(args) -> int:
    from .verify import SUITES, run_suite

    names = list(SUITES) if args.suite == "all" else [args.suite]
    for name in names:
        if name not in SUITES:
            raise UsageError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}")
    results = [run_suite(name, args.max_n) for name in names]
    ok = all(r.ok for r in results)
    lines = [line for r in results for line in r.lines()]
    lines.append("all checks passed" if ok else "verification FAILED")
    _emit(args, {"ok": ok, "suites": [r.to_dict() for r in results]}, lines)
    return OK if ok else FAILED


def cmd_coassoc_search(args) -> int:
    from .coassoc import run_search

    if args.modulus is not None and args.modulus < 2:
        raise UsageError("--modulus must be a prime")
    report = run_search(args.modulus)
    lines = [
        f"field: {report['field']}",
        "arity-3 solutions (a, b, c, d): " + "; ".join("(" + ", ".join(s) + ")" for s in report["arity3_solutions"]),
        f"ansatz dimension in arity 4: {report['ansatz_dimension']}",
        f"rank of cycles in C_1(K_4): {report['cycle_space_rank_C1_K4']}",
    ]
    for br in report["branches"]:
        status = "infeasible" if br["infeasible"] else "feasible"
        cert = ", certificate verified" if br["certified"] else ""
        lines.append(f"branch ({', '.join(br['branch'])}): {status}{cert}; "
                     f"{br['chain_map_equations']} chain-map and "
                     f"{br['coassociativity_equations']} coassociativity equations")
        for k, v in br.get("perturbation", {}).items():
            lines.append(f"  {k.replace('_', ' ')}: {v}")
    lines.append("no coassociative diagonal exists" if report["nonexistence"] else "a solution exists")
    _emit(args, report, lines)
    certified = all(b["certified"] for b in report["branches"])
    return OK if report["nonexistence"] and certified else FAILED


def _load_algebra(path: str):
    from .ainfinity import AInfAlgebra

    try:
        with open(path, encoding="utf-8") as fh:
            return AInfAlgebra.from_dict(json.load(fh))
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"cannot read algebra from {path}: {exc}") from exc


def cmd_tensor(args) -> int:
    from .ainfinity import CapExceeded, check_stasheff, tensor_product

    A, B = _load_algebra(args.a), _load_algebra(args.b)
    try:
        C = tensor_product(A, B, args.max_arity)
    except CapExceeded as exc:
        raise UsageError(str(exc)) from exc
    payload = {"product": C.to_dict()}
    lines = [f"{C.dim}-dimensional product, operations through arity {C.cap}"]
    ok = True
    if args.check:
        reports = {"a": check_stasheff(A, args.max_arity), "b": check_stasheff(B, args.max_arity),
                   "product": check_stasheff(C, args.max_arity)}
        payload["check"] = {k: {"ok": r.ok, "arities": r.checked, "message": str(r)} for k, r in reports.items()}
        lines += [f"{k}: {r}" for k, r in reports.items()]
        ok = reports["product"].ok
    if args.format == "text":
        lines.append(C.to_json())
    _emit(args, payload, lines)
    return OK if ok else FAILED


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="associahedra", description="Cellular chains on associahedra.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--format", choices=["text", "json"], default="text")
        sp.set_defaults(func=func)
        return sp

    sp = add("cells", cmd_cells, "enumerate cells of K_n or W_n")
    sp.add_argument("--complex", choices=["K", "W"], required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--dim", type=int)

    sp = add("boundary", cmd_boundary, "boundary of a cell")
    sp.add_argument("--complex", choices=["K", "W"], required=True)
    sp.add_argument("--cell", required=True)

    sp = add("compose", cmd_compose, "operadic composition of two cells")
    sp.add_argument("--complex", choices=["K", "W"], required=True)
    sp.add_argument("--left", required=True)
    sp.add_argument("--i", type=int, required=True)
    sp.add_argument("--right", required=True)

    sp = add("q", cmd_q, "the chain map q on c(n) or on a K-cell")
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int)
    group.add_argument("--cell")

    sp = add("p", cmd_p, "the chain map p on a W-cell")
    sp.add_argument("--cell", required=True)

    sp = add("diagonal", cmd_diagonal, "the diagonal on c(n)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--method", choices=["composite", "direct"], default="composite")
    sp.add_argument("--shorthand", action="store_true",
                    help="write binary trees with their ξ orientation instead of the canonical one")

    sp = add("defect", cmd_defect, "cocommutativity or coassociativity defect on c(n)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--triple", action="store_true", help="coassociativity instead of cocommutativity")

    sp = add("verify", cmd_verify, "run invariant suites")
    sp.add_argument("--suite", default="all")
    sp.add_argument("--max-n", type=int, dest="max_n")

    sp = add("coassoc-search", cmd_coassoc_search, "search for a coassociative diagonal through arity 4")
    sp.add_argument("--modulus", type=int, help="work over GF(p) instead of Q")

    sp = add("tensor", cmd_tensor, "tensor product of two A∞-algebras given as JSON")
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.add_argument("--max-arity", type=int, dest="max_arity", required=True)
    sp.add_argument("--check", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, TreeSyntaxError, ValueError) as exc:
        print(f"associahedra {args.command}: error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
