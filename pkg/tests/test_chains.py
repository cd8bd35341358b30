import json
import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from associahedra.chains import (
    Chain,
    TensorChain,
    boundary,
    cell_dim,
    compose,
    flip,
    tensor,
    tensor_boundary,
)
from associahedra.orientation import std_orientation_k as xi
from associahedra.trees import (
    MetricTree,
    all_metric_trees,
    all_trees,
    corolla,
    graft,
    k_dim,
    leaf_count,
    max_tree,
    min_tree,
    parse_tree,
)
from strategies import metric_trees, trees

P = parse_tree


def W(lit):
    return P(lit, metric=True)


def fm(t):
    return MetricTree(t, frozenset())


def K(*pairs):
    """Chain of K-cells from (coefficient, tree) pairs."""
    out = Chain("K", leaf_count(pairs[0][1]))
    for c, t in pairs:
        out.add_term(t, c)
    return out


# ---------------------------------------------------------------- boundary examples

def test_boundary_of_c3():
    # (max3, ξ) - (min3, ξ) written in canonical orientation
    expected = K((xi(max_tree(3)), max_tree(3)), (-xi(min_tree(3)), min_tree(3)))
    assert boundary(corolla(3)) == expected
    assert boundary(corolla(3)) == K((1, max_tree(3)), (1, min_tree(3)))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_boundary_of_corolla_is_sum_of_graftings(n):
    # every one-edge tree c(r) o_i c(s), oriented by its single edge
    total = Chain("K", n)
    for r in range(2, n):
        s = n + 1 - r
        for i in range(1, r + 1):
            total.add_term(graft(corolla(r), i, corolla(s)), 1)
    assert boundary(corolla(n)) == total


def test_boundary_of_vertices_vanishes():
    for t in all_trees(5):
        if k_dim(t) == 0:
            assert boundary(t) == 0
    for cell in all_metric_trees(5):
        if cell.dim == 0:
            assert boundary(cell) == 0


def test_boundary_w_example():
    got = boundary(fm(min_tree(3)))
    expected = Chain("W", 3)
    expected.add_term(fm(corolla(3)), -1)
    expected.add_term(W("((**)!*)"), 1)
    assert got == expected


@pytest.mark.parametrize("n", range(2, 8))
def test_boundary_squares_k(n):
    for t in all_trees(n):
        assert boundary(boundary(t)) == 0


@pytest.mark.parametrize("n", range(2, 7))
def test_boundary_squares_w(n):
    for cell in all_metric_trees(n):
        assert boundary(boundary(cell)) == 0


def test_boundary_lowers_degree():
    for cell in all_metric_trees(5):
        assert boundary(cell).degrees() <= {cell.dim - 1}
    for t in all_trees(5):
        assert boundary(t).degrees() <= {k_dim(t) - 1}


# ---------------------------------------------------------------- compositions

def test_compose_k_examples():
    assert compose(corolla(2), 1, corolla(2)) == K((-1, min_tree(3)))
    assert compose(corolla(2), 1, corolla(2)) == K((xi(min_tree(3)), min_tree(3)))
    assert compose(corolla(2), 2, corolla(2)) == K((1, max_tree(3)))
    assert compose(corolla(3), 2, corolla(2)) == K((1, P("(*(**)*)")))


def test_compose_w_examples():
    two = fm(corolla(2))
    assert compose(two, 1, two) == Chain.cell(W("((**)!*)"))
    # the grafted edge is the first child of the root, hence EdgeId 1
    assert compose(fm(max_tree(3)), 1, two) == Chain.cell(W("((**)!(**))"))


def test_compose_index_checked():
    with pytest.raises(ValueError):
        compose(corolla(2), 3, corolla(2))


@given(metric_trees(4), metric_trees(4), st.data())
def test_compose_w_dimension_adds(a, b, data):
    i = data.draw(st.integers(1, leaf_count(a.tree)))
    for cell, _ in compose(a, i, b).items():
        assert cell.dim == a.dim + b.dim


def _leibniz_holds(a, i, b):
    lhs = boundary(compose(a, i, b))
    sign = -1 if cell_dim(a) % 2 else 1
    rhs = compose(boundary(a), i, b) + compose(a, i, boundary(b)) * sign
    return lhs == rhs


@pytest.mark.parametrize("n", [3, 4, 5])
def test_leibniz_k(n):
    for r in range(2, n):
        s = n + 1 - r
        for a in all_trees(r):
            for b in all_trees(s):
                for i in range(1, r + 1):
                    assert _leibniz_holds(a, i, b), (a, i, b)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_leibniz_w(n):
    for r in range(2, n):
        s = n + 1 - r
        for a in all_metric_trees(r):
            for b in all_metric_trees(s):
                for i in range(1, r + 1):
                    assert _leibniz_holds(a, i, b), (a, i, b)


# ---------------------------------------------------------------- homology

def _ranks(cells_by_dim, top):
    """Betti numbers over Q from boundary matrices."""
    index = {d: {c: j for j, c in enumerate(cells)} for d, cells in cells_by_dim.items()}
    rk = {}
    for d in range(1, top + 1):
        rows, cols = len(cells_by_dim.get(d - 1, [])), len(cells_by_dim.get(d, []))
        m = sympy.zeros(rows, cols)
        for j, c in enumerate(cells_by_dim.get(d, [])):
            for face, v in boundary(c).terms.items():
                m[index[d - 1][face], j] = v
        rk[d] = m.rank() if rows and cols else 0
    return [len(cells_by_dim.get(d, [])) - rk.get(d, 0) - rk.get(d + 1, 0) for d in range(top + 1)]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_k_is_acyclic(n):
    cells = {}
    for t in all_trees(n):
        cells.setdefault(k_dim(t), []).append(t)
    assert _ranks(cells, n - 2) == [1] + [0] * (n - 2)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_w_is_acyclic(n):
    cells = {}
    for c in all_metric_trees(n):
        cells.setdefault(c.dim, []).append(c)
    assert _ranks(cells, n - 2) == [1] + [0] * (n - 2)


def test_f_vectors():
    def fvec(n):
        counts = [0] * (n - 1)
        for t in all_trees(n):
            counts[k_dim(t)] += 1
        return tuple(counts)

    assert fvec(4) == (5, 5, 1)
    assert fvec(5) == (14, 21, 9, 1)


# ---------------------------------------------------------------- tensors

def test_tensor_boundary_example():
    c3 = corolla(3)
    d = Chain.cell(max_tree(3)) * xi(max_tree(3)) - Chain.cell(min_tree(3)) * xi(min_tree(3))
    expected = tensor(d, c3) - tensor(c3, d)
    assert tensor_boundary(tensor(c3, c3)) == expected


def test_tensor_boundary_of_vertices():
    assert tensor_boundary(tensor(min_tree(4), max_tree(4))) == 0


def _random_tensor(rng, n, order, terms=6):
    cells = list(all_trees(n))
    x = TensorChain("K", n)
    for _ in range(terms):
        x.add_term(tuple(rng.choice(cells) for _ in range(order)), rng.randint(-3, 3))
    return x


@pytest.mark.parametrize("seed", range(20))
def test_tensor_boundary_squares(seed):
    rng = random.Random(seed)
    for order in (2, 3):
        x = _random_tensor(rng, 4, order)
        assert tensor_boundary(tensor_boundary(x)) == 0


@pytest.mark.parametrize("seed", range(10))
def test_flip_is_an_involutive_chain_map(seed):
    x = _random_tensor(random.Random(seed), 4, 2)
    assert flip(flip(x)) == x
    assert flip(tensor_boundary(x)) == tensor_boundary(flip(x))


# ---------------------------------------------------------------- arithmetic and JSON

def test_chain_arithmetic():
    x = Chain.cell(corolla(3)) * 2
    assert x - x == 0 and not (x - x)
    assert (x + Chain.cell(corolla(3), -2)).terms == {}
    assert Chain.cell(corolla(3), 0) == 0
    assert -x == x * -1


def test_mixing_complexes_rejected():
    with pytest.raises(ValueError):
        Chain.cell(corolla(3)) + Chain.cell(corolla(4))
    with pytest.raises(TypeError):
        Chain.cell(corolla(3)) + tensor(corolla(3), corolla(3))


def test_json_format():
    x = boundary(corolla(3)) * -1
    data = json.loads(x.to_json())
    assert data == {"complex": "K", "n": 3, "terms": [
        {"coeff": -1, "tree": "((**)*)"}, {"coeff": -1, "tree": "(*(**))"}]}
    w = Chain.cell(W("((**)!*)"))
    assert w.to_dict()["terms"] == [{"coeff": 1, "tree": "((**)*)", "nonmetric": [1]}]


@given(st.lists(st.tuples(trees(5), st.integers(-4, 4)), min_size=1, max_size=5))
@settings(max_examples=60)
def test_json_round_trip_k(pairs):
    n = leaf_count(pairs[0][0])
    x = Chain("K", n)
    for t, c in pairs:
        if leaf_count(t) == n:
            x.add_term(t, c)
    assert Chain.from_dict(json.loads(x.to_json())) == x


@given(metric_trees(5), metric_trees(5), st.integers(-3, 3))
def test_json_round_trip_tensor(a, b, c):
    if leaf_count(a.tree) != leaf_count(b.tree):
        return
    x = tensor(a, b) * c
    y = TensorChain.from_dict(json.loads(x.to_json()))
    assert y == x
    assert y.to_json() == x.to_json()
