"""The operadic chain maps q : C(K) -> C(W) and p : C(W) -> C(K)."""
from __future__ import annotations

from functools import lru_cache
from typing import Callable

from .chains import Chain, compose_k, compose_w, compose_w_cells
from .orientation import (
    compose_k_cells,
    contract_orientation,
    labeled_downset_states,
    perm_sign,
    std_orientation_k,
    std_orientation_w,
)
from .trees import (
    MetricTree,
    Tree,
    edge_count,
    enumerate_binary,
    labeled,
    lcontract,
    leaf_count,
    lfill,
    split_metric,
    split_with_maps,
    unlabel,
)


def extend_k(generator: Callable[[int], object], compose_target: Callable, t: Tree, edge: int = 1):
    """Operadic extension of a map defined on oriented corollas to a K-cell.

    Cuts ``t`` at ``edge``; if (S, can) o_i (U, can) = s (t, can) then the
    image of (t, can) is s * f(S) o_i f(U).
    """
    if edge_count(t) == 0:
        return generator(leaf_count(t))
    outer, i, inner, _, _ = split_with_maps(t, edge)
    tree, sign = compose_k_cells(outer, i, inner)
    assert tree == t
    return compose_target(extend_k(generator, compose_target, outer),
                          i, extend_k(generator, compose_target, inner)) * sign


# ---------------------------------------------------------------- q

@lru_cache(maxsize=None)
def q_corolla(n: int) -> Chain:
    """q(c(n), 1): every fully metric binary n-tree with its standard orientation."""
    out = Chain("W", n)
    if n == 1:
        return Chain.cell(MetricTree(()))
    for t in enumerate_binary(n):
        out.add_term(MetricTree(t), std_orientation_w(t))
    return out


@lru_cache(maxsize=None)
def _q_cell(t: Tree) -> Chain:
    return extend_k(q_corolla, compose_w, t)


def q(x) -> Chain:
    """q on a K-cell (canonical orientation) or a K-chain."""
    if isinstance(x, Chain):
        out = Chain("W", x.n)
        for cell, c in x.terms.items():
            for k, v in _q_cell(cell).terms.items():
                out.add_term(k, v * c)
        return out
    return _q_cell(x)


def q_via_edge(t: Tree, edge: int) -> Chain:
    """q of a composite cell computed through a chosen first cut (for testing)."""
    if edge_count(t) == 0:
        return q_corolla(leaf_count(t))
    outer, i, inner, _, _ = split_with_maps(t, edge)
    _, sign = compose_k_cells(outer, i, inner)
    return compose_w(_q_cell(outer), i, _q_cell(inner)) * sign


# ---------------------------------------------------------------- p

@lru_cache(maxsize=None)
def p_fully_metric(t: Tree) -> Chain:
    """p(T, e_1∧...∧e_k) for a fully metric T, e_j its edges in EdgeId order.

    Fill T by left combs; unless every original edge leans left the value
    is 0.  Otherwise walk down from the filled tree by moves that keep the
    left-leaning count, carrying the labels, and sum the contractions
    (S / labels, labels ⌟ ξ_S).
    """
    n = leaf_count(t)
    k = edge_count(t)
    out = Chain("K", n)
    if n == 1:
        return Chain.cell(t)
    lt = lfill(labeled(t), "min", tag="f")
    lt = (("f", 0), lt[1])  # the root is a placeholder, not a label
    if not _all_left_leaning(lt):
        return out
    states = labeled_downset_states(lt)
    labels = list(range(1, k + 1))
    for s_tree, (s_lt, _) in states.items():
        _, ids = unlabel(s_lt)
        # canonical word of S in terms of its labels
        word = sorted((lab for lab in ids if ids[lab] != 0), key=ids.get)
        rest, sign = contract_orientation(labels, word, std_orientation_k(s_tree))
        contracted = s_lt
        for lab in labels:
            contracted = lcontract(contracted, lab)
        u_tree, uids = unlabel(contracted)
        out.add_term(u_tree, sign * perm_sign([uids[x] for x in rest]))
    return out


def _all_left_leaning(lt) -> bool:
    """Every int-labeled vertex of a labeled binary tree is a right child."""
    ok = True

    def walk(s):
        nonlocal ok
        for j, c in enumerate(s[1]):
            if c is None:
                continue
            if isinstance(c[0], int) and j == 0:
                ok = False
            walk(c)

    walk(lt)
    return ok


@lru_cache(maxsize=None)
def _p_cell(cell: MetricTree) -> Chain:
    if not cell.nonmetric:
        return p_fully_metric(cell.tree)
    e = min(cell.nonmetric)
    outer, i, inner = split_metric(cell, e)
    tree, sign = compose_w_cells(outer, i, inner)
    assert tree == cell
    return compose_k(_p_cell(outer), i, _p_cell(inner)) * sign


def p(x) -> Chain:
    """p on a W-cell (canonical orientation) or a W-chain."""
    if isinstance(x, Chain):
        out = Chain("K", x.n)
        for cell, c in x.terms.items():
            for k, v in _p_cell(cell).terms.items():
                out.add_term(k, v * c)
        return out
    if not isinstance(x, MetricTree):
        x = MetricTree(x)
    return _p_cell(x)


def p_via_edge(cell: MetricTree, e: int) -> Chain:
    """p computed through a chosen non-metric cut (for testing)."""
    outer, i, inner = split_metric(cell, e)
    _, sign = compose_w_cells(outer, i, inner)
    return compose_k(_p_cell(outer), i, _p_cell(inner)) * sign
