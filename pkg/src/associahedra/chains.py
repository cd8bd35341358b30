"""Cellular chains of K_n and W_n: boundaries, operadic compositions,
tensor products.

A :class:`Chain` maps canonically oriented cells to coefficients.  K-cells
are plain trees, W-cells are :class:`MetricTree` values.  Coefficients are
integers for all chain-level work, but any ring element supporting ``+``,
``*`` and comparison with 0 works (the coassociativity search plugs in
polynomials).
"""
from __future__ import annotations

import json
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, Iterator

from .orientation import compose_k_cells, perm_sign
from .trees import (
    MetricTree,
    Tree,
    cell_key,
    edge_count,
    expansions_with_map,
    k_dim,
    labeled,
    lcontract,
    leaf_count,
    lgraft,
    parse_tree,
    render,
    unlabel,
)


def cell_dim(cell) -> int:
    if isinstance(cell, MetricTree):
        return cell.dim
    return k_dim(cell)


def cell_arity(cell) -> int:
    return leaf_count(cell.tree if isinstance(cell, MetricTree) else cell)


def cell_complex(cell) -> str:
    return "W" if isinstance(cell, MetricTree) else "K"


def render_cell(cell) -> str:
    return str(cell) if isinstance(cell, MetricTree) else render(cell)


def _add_into(terms: dict, key, coeff) -> None:
    value = terms.get(key, 0) + coeff
    if value == 0:
        terms.pop(key, None)
    else:
        terms[key] = value


class _Linear:
    """Shared arithmetic for chains keyed by cells or tuples of cells."""

    __slots__ = ("complex", "n", "terms")

    def __init__(self, complex: str, n: int, terms=None):
        self.complex = complex
        self.n = n
        self.terms: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for key, c in items:
                _add_into(self.terms, key, c)

    def _new(self, terms=None):
        return type(self)(self.complex, self.n, terms)

    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} and {type(other).__name__}")
        if (other.complex, other.n) != (self.complex, self.n) and other.terms and self.terms:
            raise ValueError("chains live in different complexes")

    def __add__(self, other):
        self._check(other)
        out = self._new(self.terms)
        for k, c in other.terms.items():
            _add_into(out.terms, k, c)
        return out

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self._new({k: -c for k, c in self.terms.items()})

    def __mul__(self, scalar):
        return self._new({k: c * scalar for k, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if type(other) is not type(self):
            return NotImplemented
        if not self.terms and not other.terms:
            return True
        return (self.complex, self.n, self.terms) == (other.complex, other.n, other.terms)

    def __hash__(self):
        return hash((self.complex, self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator:
        return iter(self.items())

    def coeff(self, key):
        return self.terms.get(key, 0)

    def map_coeffs(self, f: Callable):
        return self._new({k: f(c) for k, c in self.terms.items()})

    def add_term(self, key, coeff) -> None:
        """In-place accumulation (only for freshly built chains)."""
        _add_into(self.terms, key, coeff)


class Chain(_Linear):
    """A linear combination of canonically oriented cells of K_n or W_n."""

    __slots__ = ()

    @classmethod
    def cell(cls, cell, coeff=1) -> "Chain":
        return cls(cell_complex(cell), cell_arity(cell), {cell: coeff})

    @classmethod
    def zero(cls, complex: str, n: int) -> "Chain":
        return cls(complex, n)

    def items(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: cell_key(kv[0]))

    def degrees(self) -> set[int]:
        return {cell_dim(c) for c in self.terms}

    def to_dict(self) -> dict:
        return {
            "complex": self.complex,
            "n": self.n,
            "terms": [dict(coeff=_json_coeff(c), **cell_to_dict(k)) for k, c in self.items()],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Chain":
        out = cls(data["complex"], data["n"])
        for t in data["terms"]:
            out.add_term(cell_from_dict(t, data["complex"]), _parse_coeff(t["coeff"]))
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def __repr__(self):
        if not self.terms:
            return f"Chain({self.complex}{self.n}: 0)"
        return f"Chain({self.complex}{self.n}: {format_terms(self.items(), render_cell)})"


class TensorChain(_Linear):
    """A linear combination of tensors u_1 ⊗ ... ⊗ u_k of cells."""

    __slots__ = ()

    def items(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: tuple(cell_key(c) for c in kv[0]))

    @property
    def order(self) -> int:
        for k in self.terms:
            return len(k)
        return 0

    def multidegrees(self) -> set[tuple]:
        return {tuple(cell_dim(c) for c in k) for k in self.terms}

    def to_dict(self) -> dict:
        terms = []
        for key, c in self.items():
            entry = {"coeff": _json_coeff(c)}
            names = ("left", "right") if len(key) == 2 else ("left", "middle", "right")
            for name, cell in zip(names, key):
                entry[name] = cell_to_dict(cell)
            terms.append(entry)
        return {"complex": self.complex, "n": self.n, "terms": terms}

    @classmethod
    def from_dict(cls, data: dict) -> "TensorChain":
        out = cls(data["complex"], data["n"])
        for t in data["terms"]:
            names = [k for k in ("left", "middle", "right") if k in t]
            key = tuple(cell_from_dict(t[k], data["complex"]) for k in names)
            out.add_term(key, _parse_coeff(t["coeff"]))
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def __repr__(self):
        if not self.terms:
            return "TensorChain(0)"
        return f"TensorChain({format_terms(self.items(), lambda k: ' ⊗ '.join(map(render_cell, k)))})"


TripleTensorChain = TensorChain


def format_terms(items, show) -> str:
    parts = []
    for key, c in items:
        text = show(key)
        if c == 1:
            parts.append(f"+ {text}")
        elif c == -1:
            parts.append(f"- {text}")
        else:
            try:
                neg = c < 0
            except TypeError:
                neg = False
            parts.append(f"- {-c}*{text}" if neg else f"+ {c}*{text}")
    s = " ".join(parts)
    return s[2:] if s.startswith("+ ") else s


def _json_coeff(c):
    if isinstance(c, int):
        return c
    if hasattr(c, "denominator") and c.denominator == 1:
        return int(c.numerator)
    return str(c)


def _parse_coeff(c):
    if isinstance(c, int):
        return c
    from fractions import Fraction

    f = Fraction(c)
    return int(f) if f.denominator == 1 else f


def cell_to_dict(cell) -> dict:
    if isinstance(cell, MetricTree):
        return {"tree": render(cell.tree), "nonmetric": sorted(cell.nonmetric)}
    return {"tree": render(cell)}


def cell_from_dict(d: dict, complex: str):
    tree = parse_tree(d["tree"])
    if complex == "W" or "nonmetric" in d:
        return MetricTree(tree, frozenset(d.get("nonmetric", ())))
    return tree


def as_chain(x) -> Chain:
    if isinstance(x, Chain):
        return x
    return Chain.cell(x)


def tensor(*factors) -> TensorChain:
    """Tensor product of chains (or cells) from one complex."""
    chains = [as_chain(f) for f in factors]
    out = TensorChain(chains[0].complex, chains[0].n)
    for combo in product(*(c.terms.items() for c in chains)):
        coeff = 1
        for _, c in combo:
            coeff = coeff * c
        out.add_term(tuple(k for k, _ in combo), coeff)
    return out


# ---------------------------------------------------------------- boundaries

@lru_cache(maxsize=None)
def _boundary_k_cell(t: Tree) -> Chain:
    out = Chain("K", leaf_count(t))
    m = edge_count(t)
    for tree, new, ids in expansions_with_map(t):
        word = [new] + [ids[e] for e in range(1, m + 1)]
        out.add_term(tree, perm_sign(word))
    return out


def boundary_k(x) -> Chain:
    """∂_K: sum over expansions, the new edge prepended to the wedge."""
    if isinstance(x, Chain):
        out = Chain("K", x.n)
        for cell, c in x.terms.items():
            for k, v in _boundary_k_cell(cell).terms.items():
                out.add_term(k, v * c)
        return out
    return _boundary_k_cell(x)


def contract_metric(cell: MetricTree, edges: Iterable[int]) -> tuple[MetricTree, dict]:
    """Collapse metric edges; return the new cell and the old->new edge map."""
    lt = labeled(cell.tree)
    edges = list(edges)
    for e in edges:
        if e in cell.nonmetric:
            raise ValueError(f"edge {e} is not metric")
        lt = lcontract(lt, e)
    tree, ids = unlabel(lt)
    ids.pop(0)
    return MetricTree(tree, frozenset(ids[e] for e in cell.nonmetric)), ids


@lru_cache(maxsize=None)
def _boundary_w_cell(cell: MetricTree) -> Chain:
    out = Chain("W", leaf_count(cell.tree))
    metric = cell.metric
    for pos, e in enumerate(metric, start=1):
        sign = -1 if pos % 2 else 1
        rest = [x for x in metric if x != e]
        contracted, ids = contract_metric(cell, [e])
        out.add_term(contracted, sign * perm_sign([ids[x] for x in rest]))
        out.add_term(MetricTree(cell.tree, cell.nonmetric | {e}), -sign)
    return out


def boundary_w(x) -> Chain:
    """∂_W = Σ_i (-1)^i [contract e_i - demote e_i], i the wedge position."""
    if isinstance(x, Chain):
        out = Chain("W", x.n)
        for cell, c in x.terms.items():
            for k, v in _boundary_w_cell(cell).terms.items():
                out.add_term(k, v * c)
        return out
    return _boundary_w_cell(x)


def boundary(x) -> Chain:
    chain = as_chain(x)
    return boundary_w(chain) if chain.complex == "W" else boundary_k(chain)


# ---------------------------------------------------------------- compositions

def _compose_bilinear(cellwise: Callable, complex: str, a, i: int, b) -> Chain:
    a, b = as_chain(a), as_chain(b)
    if not 1 <= i <= a.n:
        raise ValueError(f"leaf index {i} out of range 1..{a.n}")
    out = Chain(complex, a.n + b.n - 1)
    for x, cx in a.terms.items():
        for y, cy in b.terms.items():
            cell, sign = cellwise(x, i, y)
            out.add_term(cell, sign * cx * cy)
    return out


def compose_k(a, i: int, b) -> Chain:
    """Signed K-composition: sign (-1)^{r l + i(s+1)}, wedge ω∧ω'∧e_new."""
    return _compose_bilinear(compose_k_cells, "K", a, i, b)


@lru_cache(maxsize=None)
def compose_w_cells(a: MetricTree, i: int, b: MetricTree) -> tuple[MetricTree, int]:
    lt = lgraft(labeled(a.tree, "a"), i, labeled(b.tree, "b"))
    tree, ids = unlabel(lt)
    nonmetric = {ids[("a", e)] for e in a.nonmetric} | {ids[("b", e)] for e in b.nonmetric}
    nonmetric.add(ids[("b", 0)])
    word = [ids[("a", e)] for e in a.metric] + [ids[("b", e)] for e in b.metric]
    return MetricTree(tree, frozenset(nonmetric)), perm_sign(word)


def compose_w(a, i: int, b) -> Chain:
    """W-composition: the grafting edge is non-metric, wedges concatenate, no sign."""
    return _compose_bilinear(compose_w_cells, "W", a, i, b)


def compose(a, i: int, b) -> Chain:
    return compose_w(a, i, b) if as_chain(a).complex == "W" else compose_k(a, i, b)


# ---------------------------------------------------------------- tensors

def tensor_boundary(x: TensorChain) -> TensorChain:
    """∂(u⊗v⊗...) with the Koszul rule ∂(u⊗v) = ∂u⊗v + (-1)^{|u|} u⊗∂v."""
    out = TensorChain(x.complex, x.n)
    for key, c in x.terms.items():
        sign = 1
        for j, cell in enumerate(key):
            for d, v in boundary(cell).terms.items():
                out.add_term(key[:j] + (d,) + key[j + 1:], sign * v * c)
            if cell_dim(cell) % 2:
                sign = -sign
    return out


def tensor_map(maps: list[Callable], x: TensorChain, degrees: list[int] | None = None,
               complex: str | None = None, n: int | None = None) -> TensorChain:
    """Apply f_1 ⊗ ... ⊗ f_k with Koszul signs.

    ``degrees`` are the degrees of the maps (default all 0).  Each f_j
    takes a cell and returns a Chain or TensorChain; tensor results are
    spliced in place.
    """
    degrees = degrees or [0] * len(maps)
    out = TensorChain(complex or x.complex, x.n if n is None else n)
    for key, c in x.terms.items():
        sign = 1
        # (f1 ⊗ f2)(a ⊗ b) = (-1)^{|f2||a|} f1(a) ⊗ f2(b)
        for j in range(len(key)):
            if degrees[j] % 2 and sum(cell_dim(k) for k in key[:j]) % 2:
                sign = -sign
        pieces = []
        for f, cell in zip(maps, key):
            img = f(cell)
            if isinstance(img, Chain):
                pieces.append([((k,), v) for k, v in img.terms.items()])
            else:
                pieces.append(list(img.terms.items()))
        for combo in product(*pieces):
            coeff = sign * c
            newkey: tuple = ()
            for k, v in combo:
                newkey += k
                coeff = coeff * v
            out.add_term(newkey, coeff)
    return out


def flip(x: TensorChain) -> TensorChain:
    """u⊗v ↦ (-1)^{|u||v|} v⊗u."""
    out = TensorChain(x.complex, x.n)
    for (u, v), c in x.terms.items():
        sign = -1 if (cell_dim(u) * cell_dim(v)) % 2 else 1
        out.add_term((v, u), sign * c)
    return out


def tensor_compose(x: TensorChain, i: int, y: TensorChain) -> TensorChain:
    """Operadic composition in C⊗C (or C⊗C⊗C), factorwise with Koszul sign."""
    out = TensorChain(x.complex, x.n + y.n - 1)
    comp = compose_w_cells if x.complex == "W" else compose_k_cells
    for kx, cx in x.terms.items():
        for ky, cy in y.terms.items():
            sign = 1
            # (a⊗b)∘(c⊗d) = (-1)^{|b||c|} (a∘c)⊗(b∘d), iterated
            for j in range(len(kx)):
                later = sum(cell_dim(k) for k in kx[j + 1:])
                if later * cell_dim(ky[j]) % 2:
                    sign = -sign
            cells = []
            for a, b in zip(kx, ky):
                cell, s = comp(a, i, b)
                sign *= s
                cells.append(cell)
            out.add_term(tuple(cells), sign * cx * cy)
    return out
