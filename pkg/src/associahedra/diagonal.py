"""The cubical diagonal on W, the Saneblidze-Umble diagonal on K, the
trees M_n with their signs eta_T, the flip and the coassociativity defect.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .chains import (
    Chain,
    TensorChain,
    boundary_k,
    cell_dim,
    contract_metric,
    flip,
    tensor,
    tensor_boundary,
    tensor_map,
)
from .orientation import perm_sign, std_orientation_k, std_orientation_w
from .transfer import extend_k, p, q
from .trees import (
    MetricTree,
    Tree,
    all_trees,
    corolla,
    edge_count,
    fill_min,
    in_M,
    is_binary,
    labeled,
    leaf_count,
    left_leaning_edges,
    lfill,
    max_tree,
    min_tree,
    unlabel,
)
from . import linalg


# ---------------------------------------------------------------- Δ_W

@lru_cache(maxsize=None)
def _serre_cell(cell: MetricTree) -> TensorChain:
    n = leaf_count(cell.tree)
    metric = cell.metric
    k = len(metric)
    out = TensorChain("W", n)
    for size in range(k + 1):
        for L in combinations(range(k), size):
            R = [j for j in range(k) if j not in L]
            rho = sum(1 for i in L for j in R if i < j)
            left, ids = contract_metric(cell, [metric[j] for j in L])
            left_sign = perm_sign([ids[metric[j]] for j in R])
            right = MetricTree(cell.tree, cell.nonmetric | {metric[j] for j in R})
            sign = (-1) ** rho * left_sign
            out.add_term((left, right), sign)
    return out


def serre_diagonal(x) -> TensorChain:
    """Δ_W: Σ over L ⊔ R of (-1)^ρ (T/e_L, R-wedge) ⊗ (T with e_R non-metric, L-wedge)."""
    if isinstance(x, Chain):
        out = TensorChain("W", x.n)
        for cell, c in x.terms.items():
            for key, v in _serre_cell(cell).terms.items():
                out.add_term(key, v * c)
        return out
    return _serre_cell(x)


# ---------------------------------------------------------------- Δ^su

@lru_cache(maxsize=None)
def _su_cell(t: Tree) -> TensorChain:
    d = serre_diagonal(q(t))
    return tensor_map([p, p], d, complex="K")


def su_diagonal(x) -> TensorChain:
    """Δ^su = (p ⊗ p) Δ_W q on a K-cell or K-chain."""
    if isinstance(x, Chain):
        out = TensorChain("K", x.n)
        for cell, c in x.terms.items():
            for key, v in _su_cell(cell).terms.items():
                out.add_term(key, v * c)
        return out
    return _su_cell(x)


def enumerate_M(n: int, t: int | None = None) -> list[Tree]:
    """Trees built from corollas by o_i with i >= 2 (optionally with t edges)."""
    if n == 1:
        return [()]
    return [s for s in all_trees(n) if in_M(s) and (t is None or edge_count(s) == t)]


def in_M_by_leaning(s: Tree) -> bool:
    """Edge count equals the number of left-leaning edges of the min fill."""
    b, _ = fill_min(s)
    return edge_count(s) == len(left_leaning_edges(b))


@lru_cache(maxsize=None)
def eta(t: Tree) -> int:
    """The sign eta_T relating the W- and K-readings of T in M_n.

    T~ is T filled by right combs (new edges f, left-leaning); ε is the
    sign of p(T~ with only the f edges metric) against (T, can); eta is
    fixed by eta·ε·e∧f = ω_{T~}.
    """
    if not in_M(t):
        raise ValueError("tree is not in M_n")
    n = leaf_count(t)
    if n <= 2:
        return 1
    lt = lfill(labeled(t), "max", tag="f")
    tilde, ids = unlabel(lt)
    e_ids = [ids[e] for e in range(1, edge_count(t) + 1)]
    f_ids = sorted(v for k, v in ids.items() if isinstance(k, tuple))
    cell = MetricTree(tilde, frozenset(e_ids))
    img = p(cell)
    if set(img.terms) != {t}:
        raise AssertionError(f"p of the filled tree is {img}, expected ±{t}")
    eps = img.terms[t]
    return std_orientation_w(tilde) * perm_sign(e_ids + f_ids) * eps


def su_diagonal_direct(n: int) -> TensorChain:
    """Δ^su(c(n)) = Σ_{T ∈ M_n} eta_T p(T, can) ⊗ (T, can)."""
    out = TensorChain("K", n)
    for t in enumerate_M(n):
        sign = eta(t)
        for u, c in p(MetricTree(t)).terms.items():
            out.add_term((u, t), sign * c)
    return out


# ---------------------------------------------------------------- ξ-shorthand

def xi_sign(cell: Tree) -> int:
    """Coefficient converting (T, can) into the ξ-shorthand for 0-cells."""
    return std_orientation_k(cell) if is_binary(cell) else 1


def to_xi_shorthand(x: TensorChain) -> TensorChain:
    """Rewrite binary-tree factors in terms of (T, ξ_T) instead of (T, can)."""
    out = TensorChain(x.complex, x.n)
    for key, c in x.terms.items():
        s = 1
        for cell in key:
            s *= xi_sign(cell)
        out.add_term(key, s * c)
    return out


def from_xi_shorthand(x: TensorChain) -> TensorChain:
    return to_xi_shorthand(x)


# ---------------------------------------------------------------- defects

def cocommutativity_defect(n: int) -> TensorChain:
    """Δ^su(c(n)) - flip(Δ^su(c(n)))."""
    d = su_diagonal(corolla(n))
    return d - flip(d)


def coassoc_defect(n: int, diag=None) -> TensorChain:
    """(Δ ⊗ 1)Δ(c(n)) - (1 ⊗ Δ)Δ(c(n)); Δ defaults to Δ^su."""
    diag = diag or su_diagonal
    d = diag(corolla(n))
    ident = lambda c: Chain.cell(c)
    return tensor_map([diag, ident], d) - tensor_map([ident, diag], d)


def alt_tensor_boundary(x: TensorChain) -> TensorChain:
    """The other sign convention ∂'(u⊗v) = (-1)^{|v|} ∂u⊗v + u⊗∂v (and its triple analogue)."""
    from .chains import boundary

    out = TensorChain(x.complex, x.n)
    for key, c in x.terms.items():
        for j, cell in enumerate(key):
            after = sum(cell_dim(k) for k in key[j + 1:])
            sign = -1 if after % 2 else 1
            for d, v in boundary(cell).terms.items():
                out.add_term(key[:j] + (d,) + key[j + 1:], sign * v * c)
    return out


# ---------------------------------------------------------------- boundary solving

@lru_cache(maxsize=None)
def k_homotopy(n: int):
    """A contracting homotopy h of C(K_n) over Q.

    Returns ``(h, base)`` where ``h`` maps a cell to a rational Chain with
    ∂h + h∂ = 1 - ιε, ε sending each (T, ξ_T) to 1 and ι(1) = (base, ξ_base).
    """
    base = min_tree(n)
    by_dim: dict = {}
    for t in all_trees(n):
        by_dim.setdefault(n - 2 - edge_count(t), []).append(t)
    top = n - 2
    h: dict = {}

    def eps_iota(cell) -> Chain:
        if edge_count(cell) != n - 2:
            return Chain("K", n)
        return Chain("K", n, {base: Fraction(std_orientation_k(cell) * std_orientation_k(base))})

    def apply_h(chain: Chain) -> Chain:
        out = Chain("K", n)
        for cell, c in chain.terms.items():
            out = out + h[cell] * c
        return out

    for d in range(top + 1):
        cells = by_dim[d]
        targets = by_dim.get(d + 1, [])
        bmat = [boundary_k(t) for t in targets]
        for cell in cells:
            rhs = Chain.cell(cell, Fraction(1)) - eps_iota(cell)
            if d > 0:
                rhs = rhs - apply_h(boundary_k(cell))
            if not rhs:
                h[cell] = Chain("K", n)
                continue
            if not targets:
                raise AssertionError(f"homology in top degree at {cell}")
            sol = linalg.solve_chain(bmat, rhs)
            if sol is None:
                raise AssertionError(f"no homotopy preimage for {cell}")
            h[cell] = Chain("K", n, {targets[j]: v for j, v in sol.items()})
    return h, base


def solve_boundary(x: TensorChain) -> TensorChain | None:
    """Find y with ∂y = x in the tensor power of C(K_n), or None if x is not a cycle.

    Uses H = h⊗1⊗1 + g⊗h⊗1 + g⊗g⊗h with g = ιε, so ∂H + H∂ = 1 - g⊗g⊗g.
    """
    if not x:
        return TensorChain(x.complex, x.n)
    if tensor_boundary(x):
        return None
    n = x.n
    h, base = k_homotopy(n)
    order = x.order

    def g(cell) -> Chain:
        if edge_count(cell) != n - 2:
            return Chain("K", n)
        return Chain("K", n, {base: Fraction(std_orientation_k(cell) * std_orientation_k(base))})

    ident = lambda c: Chain.cell(c)
    hh = lambda c: h[c]
    out = TensorChain(x.complex, n)
    for j in range(order):
        maps = [g] * j + [hh] + [ident] * (order - j - 1)
        degrees = [0] * j + [1] + [0] * (order - j - 1)
        out = out + tensor_map(maps, x, degrees=degrees)
    y = out.map_coeffs(lambda c: int(c) if c.denominator == 1 else c)
    if tensor_boundary(y) != x:
        raise AssertionError("homotopy failed to produce a preimage")
    return y


def elementary_tensor(*literals: str, n: int | None = None) -> TensorChain:
    from .trees import parse_tree

    return tensor(*(parse_tree(s) for s in literals))
