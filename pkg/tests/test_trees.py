from functools import lru_cache
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from associahedra.orientation import graft_word
from associahedra.trees import (
    MetricTree,
    TreeSyntaxError,
    all_metric_trees,
    all_trees,
    contract,
    corolla,
    edge_count,
    enumerate_binary,
    enumerate_trees,
    expansions,
    fill_max,
    fill_min,
    graft,
    in_M,
    is_binary,
    k_dim,
    leaf_count,
    left_leaning_edges,
    max_tree,
    min_tree,
    moves_up,
    parse_tree,
    render,
    tamari_leq,
)
from strategies import metric_trees, trees

P = parse_tree


# ---------------------------------------------------------------- independent oracles

def catalan_rec(m):
    """Binary trees with m + 1 leaves, by splitting at the root."""
    c = [1]
    for k in range(1, m + 1):
        c.append(sum(c[j] * c[k - 1 - j] for j in range(k)))
    return c[m]


@lru_cache(maxsize=None)
def planar_count(n):
    """Planar trees with n leaves: a root over an ordered forest of >= 2 trees."""
    if n == 1:
        return 1
    return sum(planar_count(k) * forests(n - k) for k in range(1, n))


@lru_cache(maxsize=None)
def forests(t):
    """Ordered forests of planar trees with t leaves in total."""
    if t == 0:
        return 1
    return sum(planar_count(k) * forests(t - k) for k in range(1, t + 1))


def kirkman_cayley(n, m):
    """Dissections of an (n+1)-gon by m diagonals = n-leaf trees with m internal edges."""
    return comb(n - 2, m) * comb(n + m, m) // (m + 1)


def rotations_up(t):
    """All trees reached from t by one move (xy)z -> x(yz), written independently."""
    out = []
    if t == ():
        return out
    left, right = t
    if left != ():
        x, y = left
        out.append((x, (y, right)))
    out += [(l, right) for l in rotations_up(left)]
    out += [(left, r) for r in rotations_up(right)]
    return out


def closure_up(t):
    seen, stack = {t}, [t]
    while stack:
        for s in rotations_up(stack.pop()):
            if s not in seen:
                seen.add(s)
                stack.append(s)
    return seen


# ---------------------------------------------------------------- parsing

def test_parse_examples():
    assert P("(***)") == corolla(3)
    t = P("((**)*)")
    assert is_binary(t) and edge_count(t) == 1
    m = P("((**)!*)", metric=True)
    assert m == MetricTree(t, frozenset({1})) and m.dim == 0


@pytest.mark.parametrize("text", ["(*)", "(**)!", "(*!*)", "((**)*", "(**))", "x", "", "(* *"])
def test_parse_rejects(text):
    with pytest.raises(TreeSyntaxError):
        P(text, metric=True)


def test_bang_needs_metric_mode():
    with pytest.raises(TreeSyntaxError):
        P("((**)!*)")


def test_syntax_error_reports_position():
    with pytest.raises(TreeSyntaxError) as info:
        P("((*)*)")
    assert info.value.position == 1


@given(trees(7))
def test_render_round_trip(t):
    assert P(render(t)) == t


@given(metric_trees(6))
def test_metric_round_trip(cell):
    assert P(str(cell), metric=True) == cell


# ---------------------------------------------------------------- graft and contract

def test_graft_examples():
    assert graft(P("(**)"), 2, P("(**)")) == P("(*(**))")
    assert graft(P("(***)"), 2, P("(**)")) == P("(*(**)*)")
    assert graft(P("(**)"), 2, graft(P("(**)"), 2, P("(**)"))) == max_tree(4)


def test_graft_index_checked():
    with pytest.raises(ValueError):
        graft(P("(**)"), 3, P("(**)"))


def test_contract_examples():
    assert contract(P("((**)*)"), 1) == corolla(3)
    assert contract(P("(*(**)*)"), 1) == corolla(4)
    assert contract(max_tree(4), 1) == P("(**(**))")


def test_contract_rejects_non_metric_edge():
    with pytest.raises(ValueError):
        contract(P("((**)!*)", metric=True), 1)
    with pytest.raises(ValueError):
        contract(P("((**)*)"), 2)


@given(trees(4), trees(4), st.data())
def test_graft_then_contract(s, t, data):
    i = data.draw(st.integers(1, leaf_count(s)))
    g, _, _, new = graft_word(s, i, t)
    assert g == graft(s, i, t)
    assert leaf_count(g) == leaf_count(s) + leaf_count(t) - 1
    assert edge_count(g) == edge_count(s) + edge_count(t) + 1
    c = contract(g, new)
    assert edge_count(c) == edge_count(s) + edge_count(t)


@given(trees(7), st.data())
def test_expansions_are_a_section_of_contract(t, data):
    if edge_count(t) == 0:
        return
    e = data.draw(st.integers(1, edge_count(t)))
    assert (t, e) in expansions(contract(t, e))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_expansions_brute_force(n):
    for m in range(n - 2):
        for t in enumerate_trees(n, m):
            brute = {(s, e) for s in enumerate_trees(n, m + 1) for e in range(1, m + 2) if contract(s, e) == t}
            got = expansions(t)
            assert len(got) == len(set(got))
            assert set(got) == brute


def test_expansions_examples():
    assert set(expansions(P("(***)"))) == {(P("((**)*)"), 1), (P("(*(**))"), 1)}
    assert expansions(P("(**)")) == []
    assert len(expansions(corolla(4))) == 5


# ---------------------------------------------------------------- enumeration

@pytest.mark.parametrize("n", range(2, 10))
def test_binary_count_catalan(n):
    assert len(enumerate_binary(n)) == catalan_rec(n - 1)


@pytest.mark.parametrize("n", range(1, 8))
def test_planar_count(n):
    assert len(all_trees(n)) == planar_count(n)


@pytest.mark.parametrize("n", range(2, 8))
def test_cells_by_edge_count(n):
    for m in range(n - 1):
        assert len(enumerate_trees(n, m)) == kirkman_cayley(n, m)


def test_enumeration_examples():
    assert enumerate_trees(4, 0) == [corolla(4)]
    assert len(enumerate_trees(4, 2)) == 5
    assert len(enumerate_trees(5, 1)) == kirkman_cayley(5, 1) == 9


def test_enumeration_is_sorted_by_literal():
    lits = [render(t) for t in all_trees(5)]
    assert lits == sorted(lits)


def test_w_cells_count():
    # every internal edge is metric or not
    for n in range(2, 6):
        assert len(all_metric_trees(n)) == sum(2 ** edge_count(t) for t in all_trees(n))


def test_dimensions():
    assert k_dim(corolla(5)) == 3
    assert k_dim(min_tree(5)) == 0
    assert k_dim(()) == 0


# ---------------------------------------------------------------- Tamari order

@pytest.mark.parametrize("n", [3, 4, 5])
def test_tamari_matches_brute_force_closure(n):
    bins = enumerate_binary(n)
    for s in bins:
        up = closure_up(s)
        for t in bins:
            assert tamari_leq(s, t) == (t in up)


@pytest.mark.parametrize("n", range(3, 7))
def test_moves_up_independent(n):
    for t in enumerate_binary(n):
        assert sorted(moves_up(t)) == sorted(rotations_up(t))


def test_tamari_examples():
    lo = P("(((**)*)*)")
    assert all(tamari_leq(lo, t) for t in enumerate_binary(4))
    assert tamari_leq(P("((*(**))*)"), P("(*((**)*))"))
    assert not tamari_leq(P("((**)(**))"), P("((*(**))*)"))


@pytest.mark.parametrize("n", range(3, 7))
def test_tamari_extremes(n):
    bins = enumerate_binary(n)
    assert [t for t in bins if all(tamari_leq(t, s) for s in bins)] == [min_tree(n)]
    assert [t for t in bins if all(tamari_leq(s, t) for s in bins)] == [max_tree(n)]


def test_tamari_rejects_mismatched_input():
    with pytest.raises(ValueError):
        tamari_leq(P("(**)"), P("((**)*)"))
    with pytest.raises(ValueError):
        tamari_leq(P("(***)"), P("((**)*)"))


@pytest.mark.parametrize("n", range(3, 7))
def test_left_leaning_count_weakly_increases(n):
    # (xy)z -> x(yz) gains the edge above yz and loses the one above y if y is a vertex
    for t in enumerate_binary(n):
        for s in moves_up(t):
            assert len(left_leaning_edges(s)) >= len(left_leaning_edges(t))
    full = [t for t in enumerate_binary(n) if len(left_leaning_edges(t)) == n - 2]
    assert full == [max_tree(n)]


def test_left_leaning_examples():
    assert left_leaning_edges(max_tree(4)) == {1, 2}
    assert left_leaning_edges(min_tree(4)) == frozenset()
    assert len(left_leaning_edges(P("((**)(**))"))) == 1


@pytest.mark.parametrize("n", range(3, 7))
def test_maximal_chains_have_length_at_least_n_minus_2(n):
    # shortest upward path from min to max
    frontier, steps = {min_tree(n)}, 0
    while max_tree(n) not in frontier:
        frontier = {s for t in frontier for s in moves_up(t)}
        steps += 1
    assert steps == n - 2


# ---------------------------------------------------------------- fill-in

def test_fill_examples():
    b, f = fill_min(P("(***)"))
    assert b == P("((**)*)") and len(f) == 1
    assert fill_min(corolla(4))[0] == min_tree(4)
    assert fill_max(corolla(4))[0] == max_tree(4)


@given(trees(7))
@settings(max_examples=200)
def test_fill_properties(t):
    n = leaf_count(t)
    for fill, leaning in ((fill_min, False), (fill_max, True)):
        b, new = fill(t)
        assert is_binary(b) and edge_count(b) == n - 2
        assert len(new) == n - 2 - edge_count(t)
        left = left_leaning_edges(b)
        assert all((e in left) == leaning for e in new)
        back = b
        for e in sorted(new, reverse=True):
            back = contract(back, e)
        assert back == t


def test_M_lists():
    from associahedra.diagonal import enumerate_M

    assert enumerate_M(1) == [()] and enumerate_M(2) == [corolla(2)]
    assert set(enumerate_M(3)) == {max_tree(3), corolla(3)}
    assert set(enumerate_M(4)) == {P(s) for s in ("(*(*(**)))", "(*(**)*)", "(*(***))", "(**(**))", "(****)")}


def _no_first_child(t):
    if t == ():
        return True
    return t[0] == () and all(_no_first_child(c) for c in t)


def test_M_characterisations_agree():
    from associahedra.diagonal import in_M_by_leaning

    for n in range(2, 8):
        for t in all_trees(n):
            assert in_M(t) == _no_first_child(t) == in_M_by_leaning(t)


def test_M_closed_under_grafting_into_corollas():
    # c(k) o_i S with i >= 2 stays in M, o_1 leaves it
    for s in all_trees(4):
        if not in_M(s):
            continue
        for k in (2, 3):
            assert in_M(graft(corolla(k), k, s))
            assert not in_M(graft(corolla(k), 1, s))
