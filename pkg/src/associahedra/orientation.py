"""Signs of wedge words, the standard orientations omega_T and xi_T, and
the transport of edge labels along Tamari moves.

Every stored cell carries its canonical orientation: the wedge of its
(metric) edges in ascending EdgeId order.  A wedge word is any sequence
of distinct edge ids; :func:`word_sign` gives its sign against the
ascending word.
"""
from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Hashable, Sequence

from .trees import (
    LEAF,
    Tree,
    edge_count,
    is_binary,
    labeled,
    leaf_count,
    left_leaning_edges,
    lgraft,
    lrotations_down,
    max_tree,
    split_with_maps,
    unlabel,
)


class DegenerateOrientation(ValueError):
    """A wedge word with a repeated letter (the zero orientation)."""


def perm_sign(seq: Sequence) -> int:
    """Sign of the permutation sorting ``seq`` (letters must be distinct)."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        raise DegenerateOrientation(f"repeated letter in {seq}")
    order = sorted(range(len(seq)), key=lambda k: seq[k])
    seen = [False] * len(seq)
    sign = 1
    for start in range(len(seq)):
        if seen[start]:
            continue
        j, length = start, 0
        while not seen[j]:
            seen[j] = True
            j = order[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


word_sign = perm_sign


def normalize(word: Sequence, sign: int = 1) -> tuple[tuple, int]:
    """Return ``(ascending word, sign)`` representing ``sign * word``."""
    return tuple(sorted(word)), sign * perm_sign(word)


def contract_orientation(labels: Sequence, word: Sequence, sign: int = 1) -> tuple[tuple, int]:
    """Interior product ``labels ⌟ (sign * word)``.

    The last letter of ``labels`` is contracted first; removing a letter at
    1-based position p contributes ``(-1)**(p-1)``.
    """
    word = list(word)
    for letter in reversed(list(labels)):
        try:
            pos = word.index(letter)
        except ValueError:
            raise KeyError(f"letter {letter!r} not in wedge word") from None
        if pos % 2:
            sign = -sign
        del word[pos]
    return tuple(word), sign


# ---------------------------------------------------------------- omega

@lru_cache(maxsize=None)
def omega_table(n: int) -> dict:
    """Standard orientation of every fully metric binary n-tree.

    Starts at max(n) with e_1..e_{n-2} root-outward and sign +1, then
    walks downward covering moves; each move flips the sign and keeps the
    labels (the rotated edge's label moves with it).  Values are signs
    against the canonical EdgeId word.  Raises if two paths disagree.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    top = labeled(max_tree(n))
    start = (top, 1)
    table: dict = {max_tree(n): 1}
    queue = deque([start])
    while queue:
        lt, sign = queue.popleft()
        for new, _, _ in lrotations_down(lt):
            tree, ids = unlabel(new)
            word = [ids[k] for k in range(1, n - 1)]
            value = -sign * perm_sign(word)
            if tree in table:
                if table[tree] != value:
                    raise AssertionError(f"omega is path dependent at {tree}")
                continue
            table[tree] = value
            queue.append((new, -sign))
    return table


def std_orientation_w(t: Tree) -> int:
    """omega_T as a sign against the ascending EdgeId word."""
    if not is_binary(t) or t == LEAF:
        raise ValueError("omega is defined for binary trees with at least 2 leaves")
    return omega_table(leaf_count(t))[t]


# ---------------------------------------------------------------- xi

def k_compose_sign(r: int, i: int, s: int, l: int) -> int:
    """Sign (-1)^{r l + i (s+1)} of the K-composition."""
    return -1 if (r * l + i * (s + 1)) % 2 else 1


def graft_word(a: Tree, i: int, b: Tree) -> tuple[Tree, list, list, int]:
    """Graft with edge tracking.

    Returns ``(tree, a_edges, b_edges, new_edge)`` where the lists give the
    new ids of the edges 1..m of ``a`` and of ``b``.
    """
    lt = lgraft(labeled(a, "a"), i, labeled(b, "b"))
    tree, ids = unlabel(lt)
    a_edges = [ids[("a", e)] for e in range(1, edge_count(a) + 1)]
    b_edges = [ids[("b", e)] for e in range(1, edge_count(b) + 1)]
    return tree, a_edges, b_edges, ids[("b", 0)]


@lru_cache(maxsize=None)
def compose_k_cells(a: Tree, i: int, b: Tree) -> tuple[Tree, int]:
    """(a, can) o_i (b, can) = sign * (a o_i b, can)."""
    r, s = leaf_count(a), leaf_count(b)
    l = s - 2 - edge_count(b)
    tree, wa, wb, new = graft_word(a, i, b)
    return tree, k_compose_sign(r, i, s, l) * perm_sign(wa + wb + [new])


@lru_cache(maxsize=None)
def std_orientation_k(t: Tree) -> int:
    """xi_T: sign of the composite of 2-leaf corollas giving T."""
    if not is_binary(t) or t == LEAF:
        raise ValueError("xi is defined for binary trees with at least 2 leaves")
    left, right = t
    cur, sign = (LEAF, LEAF), 1
    if right != LEAF:
        cur, s = compose_k_cells(cur, 2, right)
        sign *= s * std_orientation_k(right)
    if left != LEAF:
        cur, s = compose_k_cells(cur, 1, left)
        sign *= s * std_orientation_k(left)
    assert cur == t
    return sign


def xi_decompositions(t: Tree) -> set[int]:
    """xi_T computed through every single-edge splitting S o_i U = T."""
    out = set()
    for outer, i, inner in splittings(t):
        tree, s = compose_k_cells(outer, i, inner)
        assert tree == t
        out.add(s * std_orientation_k(outer) * std_orientation_k(inner))
    return out


def splittings(t: Tree) -> list[tuple[Tree, int, Tree]]:
    """All ways to write t = S o_i U by cutting one internal edge."""
    return [split_at(t, e) for e in range(1, edge_count(t) + 1)]


def split_at(t: Tree, e: int) -> tuple[Tree, int, Tree]:
    """Cut internal edge e: t = outer o_i inner."""
    outer, i, inner, _, _ = split_with_maps(t, e)
    return outer, i, inner


# ---------------------------------------------------------------- labels

def propagate_labels(source: Tree, target: Tree, labels: dict | None = None):
    """Transport labels of left-leaning edges of ``source`` down to ``target``.

    ``labels`` maps the left-leaning EdgeIds of ``source`` to labels
    (default: 1..k in ascending EdgeId order).  Returns a dict EdgeId of
    ``target`` -> label, or ``None`` when ``target`` has fewer left-leaning
    edges, so that every path to it drops the count.
    """
    from .trees import downset

    lean = sorted(left_leaning_edges(source))
    if labels is None:
        labels = {e: j + 1 for j, e in enumerate(lean)}
    if set(labels) != set(lean):
        raise ValueError("labels must cover exactly the left-leaning edges")
    if leaf_count(source) != leaf_count(target) or target not in downset(source):
        raise ValueError("target is not below source in the Tamari order")
    reached = labeled_downset(_attach(source, labels))
    return reached.get(target)


def _attach(t: Tree, labels: dict):
    counter = [0]

    def walk(s):
        if s == LEAF:
            return None
        me = counter[0]
        counter[0] += 1
        lab = labels[me] if me in labels else ("u", me)
        return (lab, tuple(walk(c) for c in s))

    return walk(t)


def count_preserving_moves(lt):
    """Downward moves keeping the number of left-leaning edges.

    At v = [x, w], w = [y, z] the move gives [[x, y], z].  The left-leaning
    edge above w passes its label to y; the new vertex [x, y] takes y's old
    label.  When y is a leaf the count drops and the move is skipped.
    """
    if lt is None:
        return
    vl, (x, w) = lt
    if w is not None:
        wl, (y, z) = w
        if y is not None:
            yl, ykids = y
            yield (vl, ((yl, (x, (wl, ykids))), z))
    for sub in count_preserving_moves(x):
        yield (vl, (sub, w))
    for sub in count_preserving_moves(w):
        yield (vl, (x, sub))


def labeled_downset(lt) -> dict:
    """Map tree -> {EdgeId: label} for every tree reached by count-preserving moves."""
    return {t: labels for t, (_, labels) in labeled_downset_states(lt).items()}


def labeled_downset_states(lt) -> dict:
    """Map tree -> (labeled tree, {EdgeId: label}) over count-preserving moves.

    Placeholders (tuples whose first entry is a string, and the root label
    0) are not reported as labels.  Raises if two paths disagree.
    """
    out: dict = {}
    queue = deque([lt])
    while queue:
        cur = queue.popleft()
        tree, ids = unlabel(cur)
        labels = {ids[k]: k for k in ids if _is_label(k)}
        if tree in out:
            if out[tree][1] != labels:
                raise AssertionError(f"label propagation is ambiguous at {tree}")
            continue
        out[tree] = (cur, labels)
        queue.extend(count_preserving_moves(cur))
    return out


def _is_label(k: Hashable) -> bool:
    return not (isinstance(k, tuple) and k and isinstance(k[0], str)) and k != 0


def grafted_maxima(r: int, i: int, s: int) -> Tree:
    """max(r) o_i max(s) with 1 <= i < r: one right-leaning edge."""
    from .trees import graft

    return graft(max_tree(r), i, max_tree(s))
