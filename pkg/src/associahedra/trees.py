"""Planar rooted trees, the cell labels of K_n and W_n.

A tree is a nested tuple: ``()`` is a leaf and an internal vertex is the
tuple of its (two or more) children, left to right.  Internal edges are
named by the pre-order index of their lower vertex among the internal
vertices (the root has index 0, so edges are numbered ``1..m``).

Operations that must track edges through a rearrangement work on
*labeled* trees: a leaf is ``None`` and an internal vertex is
``(label, children)``.  ``labeled`` and ``unlabel`` convert back and forth.
"""
from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Hashable, Iterator, NamedTuple

Tree = tuple
LEAF: Tree = ()


class TreeSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class MetricTree(NamedTuple):
    """A cell of W_n: a planar tree and the set of its non-metric edges."""

    tree: Tree
    nonmetric: frozenset = frozenset()

    @property
    def metric(self) -> tuple[int, ...]:
        return tuple(e for e in range(1, edge_count(self.tree) + 1) if e not in self.nonmetric)

    @property
    def dim(self) -> int:
        return edge_count(self.tree) - len(self.nonmetric)

    def __str__(self) -> str:
        return render(self.tree, self.nonmetric)


# ---------------------------------------------------------------- basics

def is_leaf(t: Tree) -> bool:
    return t == ()


def corolla(n: int) -> Tree:
    if n < 2:
        raise ValueError("a corolla needs at least 2 leaves")
    return (LEAF,) * n


@lru_cache(maxsize=None)
def leaf_count(t: Tree) -> int:
    if t == ():
        return 1
    return sum(leaf_count(c) for c in t)


@lru_cache(maxsize=None)
def edge_count(t: Tree) -> int:
    """Number of internal edges (= internal vertices minus the root)."""
    if t == ():
        return 0
    return sum(edge_count(c) + (c != ()) for c in t)


def k_dim(t: Tree) -> int:
    """Dimension of the K_n cell labeled by ``t`` (the leaf is the 0-dimensional unit)."""
    if t == ():
        return 0
    return leaf_count(t) - 2 - edge_count(t)


def is_binary(t: Tree) -> bool:
    if t == ():
        return True
    return len(t) == 2 and all(is_binary(c) for c in t)


def vertices(t: Tree) -> list[Tree]:
    """Internal vertices in pre-order; index = vertex id."""
    out: list[Tree] = []

    def walk(s):
        if s != ():
            out.append(s)
            for c in s:
                walk(c)

    walk(t)
    return out


def max_tree(n: int) -> Tree:
    """The right comb ``(*(*(...(**))))``, maximum of the Tamari order."""
    t: Tree = (LEAF, LEAF)
    for _ in range(n - 2):
        t = (LEAF, t)
    return t


def min_tree(n: int) -> Tree:
    """The left comb ``(((**)*)...*)``, minimum of the Tamari order."""
    t: Tree = (LEAF, LEAF)
    for _ in range(n - 2):
        t = (t, LEAF)
    return t


# ---------------------------------------------------------------- literals

@lru_cache(maxsize=None)
def _render(t: Tree) -> str:
    if t == ():
        return "*"
    return "(" + "".join(_render(c) for c in t) + ")"


def render(t: Tree, nonmetric=()) -> str:
    if not nonmetric:
        return _render(t)
    nonmetric = set(nonmetric)
    parts: list[str] = []
    counter = [0]

    def walk(s):
        if s == ():
            parts.append("*")
            return
        me = counter[0]
        counter[0] += 1
        parts.append("(")
        for c in s:
            walk(c)
        parts.append(")")
        if me in nonmetric:
            parts.append("!")

    walk(t)
    return "".join(parts)


def parse_tree(text: str, metric: bool = False):
    """Parse a tree literal.

    Grammar: ``tree := '*' | '(' tree tree+ ')'``.  With ``metric=True`` a
    subtree may carry a trailing ``!`` marking its root edge non-metric and
    a :class:`MetricTree` is returned.
    """
    s = "".join(text.split())
    pos = 0
    nonmetric: set[int] = set()
    counter = [0]

    def node(is_root: bool):
        nonlocal pos
        if pos >= len(s):
            raise TreeSyntaxError("unexpected end of input", pos)
        ch = s[pos]
        if ch == "*":
            pos += 1
            if pos < len(s) and s[pos] == "!":
                raise TreeSyntaxError("'!' cannot mark a leaf", pos)
            return LEAF
        if ch != "(":
            raise TreeSyntaxError(f"unexpected character {ch!r}", pos)
        start = pos
        me = counter[0]
        counter[0] += 1
        pos += 1
        kids = []
        while pos < len(s) and s[pos] != ")":
            kids.append(node(False))
        if pos >= len(s):
            raise TreeSyntaxError("unbalanced '('", start)
        if len(kids) < 2:
            raise TreeSyntaxError("vertex with fewer than two children", start)
        pos += 1
        if pos < len(s) and s[pos] == "!":
            if is_root:
                raise TreeSyntaxError("'!' cannot mark the root", pos)
            if not metric:
                raise TreeSyntaxError("'!' is only allowed for metric trees", pos)
            nonmetric.add(me)
            pos += 1
        return tuple(kids)

    t = node(True)
    if pos != len(s):
        raise TreeSyntaxError("trailing characters", pos)
    if metric:
        return MetricTree(t, frozenset(nonmetric))
    return t


def literal_key(t: Tree) -> str:
    return _render(t)


def cell_key(cell) -> tuple:
    """Sort key for K-cells (trees) and W-cells (metric trees)."""
    if isinstance(cell, MetricTree):
        return (_render(cell.tree), tuple(sorted(cell.nonmetric)))
    return (_render(cell), ())


# ---------------------------------------------------------------- labeled trees

def labeled(t: Tree, tag=None):
    """Label internal vertices by pre-order id (optionally paired with ``tag``)."""
    counter = [0]

    def walk(s):
        if s == ():
            return None
        me = counter[0]
        counter[0] += 1
        return (me if tag is None else (tag, me), tuple(walk(c) for c in s))

    return walk(t)


def unlabel(lt) -> tuple[Tree, dict]:
    """Strip labels; return the tree and the map label -> canonical edge id."""
    ids: dict = {}
    counter = [0]

    def walk(s):
        if s is None:
            return LEAF
        ids[s[0]] = counter[0]
        counter[0] += 1
        return tuple(walk(c) for c in s[1])

    t = walk(lt)
    return t, ids


def lleaf_count(lt) -> int:
    if lt is None:
        return 1
    return sum(lleaf_count(c) for c in lt[1])


def lgraft(a, i: int, b):
    """Replace the i-th leaf (1-based) of labeled tree ``a`` by ``b``."""
    count = [0]

    def walk(s):
        if s is None:
            count[0] += 1
            return b if count[0] == i else None
        return (s[0], tuple(walk(c) for c in s[1]))

    out = walk(a)
    if count[0] < i or i < 1:
        raise ValueError(f"leaf index {i} out of range 1..{count[0]}")
    return out


def lcontract(lt, label):
    """Collapse the edge whose lower vertex carries ``label``."""
    found = [False]

    def walk(s):
        if s is None:
            return None
        kids = []
        for c in s[1]:
            if c is not None and c[0] == label:
                found[0] = True
                kids.extend(walk(g) for g in c[1])
            else:
                kids.append(walk(c))
        return (s[0], tuple(kids))

    if lt is not None and lt[0] == label:
        raise ValueError("the root is not an edge")
    out = walk(lt)
    if not found[0]:
        raise ValueError(f"no edge labeled {label!r}")
    return out


def lexpansions(lt, new_label) -> Iterator:
    """All labeled trees that collapse to ``lt`` along an edge labeled ``new_label``."""
    if lt is None:
        return
    label, kids = lt
    r = len(kids)
    for a in range(r):
        for b in range(a + 2, r + 1):
            if b - a == r:
                continue
            inner = (new_label, kids[a:b])
            yield (label, kids[:a] + (inner,) + kids[b:])
    for j, c in enumerate(kids):
        for sub in lexpansions(c, new_label):
            yield (label, kids[:j] + (sub,) + kids[j + 1:])


def lfind_parent_edges(lt) -> dict:
    """Map each non-root vertex label to (parent label, child position)."""
    out = {}

    def walk(s):
        for j, c in enumerate(s[1]):
            if c is not None:
                out[c[0]] = (s[0], j)
                walk(c)

    if lt is not None:
        walk(lt)
    return out


def lrotations_down(lt) -> Iterator[tuple]:
    """Downward Tamari moves ``x(yz) -> (xy)z`` on a labeled binary tree.

    Yields ``(new tree, rotated label, label of y or None)``.  The vertex
    ``w = (yz)`` keeps its label, now carried by the new vertex ``(xy)``.
    """
    if lt is None:
        return
    label, (x, w) = lt
    if w is not None:
        wl, (y, z) = w
        yield (label, ((wl, (x, y)), z)), wl, (None if y is None else y[0])
    for sub, rl, yl in lrotations_down(x):
        yield (label, (sub, w)), rl, yl
    for sub, rl, yl in lrotations_down(w):
        yield (label, (x, sub)), rl, yl


def lfill(lt, how: str, tag="f"):
    """Fill every vertex of arity r > 2 by a binary comb.

    ``how="min"`` uses the left comb (new edges right-leaning),
    ``how="max"`` the right comb (new edges left-leaning).  New vertices get
    labels ``(tag, k)``.
    """
    counter = [0]

    def fresh():
        counter[0] += 1
        return (tag, counter[0])

    def walk(s):
        if s is None:
            return None
        label, kids = s
        kids = [walk(c) for c in kids]
        if how == "min":
            acc = kids[0]
            for j in range(1, len(kids) - 1):
                acc = (fresh(), (acc, kids[j]))
            return (label, (acc, kids[-1]))
        if how == "max":
            acc = kids[-1]
            for j in range(len(kids) - 2, 0, -1):
                acc = (fresh(), (kids[j], acc))
            return (label, (kids[0], acc))
        raise ValueError(how)

    return walk(lt)


# ---------------------------------------------------------------- operations

def graft(s: Tree, i: int, t: Tree) -> Tree:
    """``s o_i t``: graft ``t`` onto the i-th leaf (1-based) of ``s``."""
    r = leaf_count(s)
    if not 1 <= i <= r:
        raise ValueError(f"leaf index {i} out of range 1..{r}")
    out, _ = unlabel(lgraft(labeled(s), i, labeled(t, "b")))
    return out


def contract(t, e: int):
    """Collapse internal edge ``e``; for a MetricTree the edge must be metric."""
    if isinstance(t, MetricTree):
        if e in t.nonmetric:
            raise ValueError(f"edge {e} is not metric")
        lt = lcontract(labeled(t.tree), _check_edge(t.tree, e))
        tree, ids = unlabel(lt)
        return MetricTree(tree, frozenset(ids[x] for x in t.nonmetric))
    tree, _ = unlabel(lcontract(labeled(t), _check_edge(t, e)))
    return tree


def _check_edge(t: Tree, e: int) -> int:
    if not 1 <= e <= edge_count(t):
        raise ValueError(f"edge {e} not present (tree has {edge_count(t)} edges)")
    return e


@lru_cache(maxsize=None)
def expansions_with_map(t: Tree) -> tuple:
    """All ``(T', e', idmap)`` with ``T'/e' = t``; ``idmap`` sends edges of t to edges of T'."""
    out = []
    for lt in lexpansions(labeled(t), "new"):
        tree, ids = unlabel(lt)
        new = ids.pop("new")
        ids.pop(0)
        out.append((tree, new, ids))
    out.sort(key=lambda x: (_render(x[0]), x[1]))
    return tuple(out)


def expansions(t: Tree) -> list[tuple[Tree, int]]:
    return [(tree, e) for tree, e, _ in expansions_with_map(t)]


@lru_cache(maxsize=None)
def _all_trees(n: int) -> tuple:
    if n == 1:
        return (LEAF,)
    out = []
    for comp in _compositions(n):
        for kids in _products([_all_trees(k) for k in comp]):
            out.append(tuple(kids))
    return tuple(out)


def _compositions(n: int) -> Iterator[tuple[int, ...]]:
    """Compositions of n into at least two positive parts."""
    def rec(rest, acc):
        if rest == 0:
            if len(acc) >= 2:
                yield tuple(acc)
            return
        for k in range(1, rest + 1):
            if k == n:
                continue
            yield from rec(rest - k, acc + [k])

    yield from rec(n, [])


def _products(pools):
    if not pools:
        yield ()
        return
    for head in pools[0]:
        for tail in _products(pools[1:]):
            yield (head,) + tail


@lru_cache(maxsize=None)
def all_trees(n: int) -> tuple:
    """Every planar tree with n leaves, sorted by literal."""
    if n < 1:
        raise ValueError("n must be positive")
    return tuple(sorted(_all_trees(n), key=_render))


def enumerate_trees(n: int, m: int) -> list[Tree]:
    """Trees with n leaves and m internal edges, sorted by literal."""
    if n < 2 or not 0 <= m <= n - 2:
        raise ValueError(f"need n >= 2 and 0 <= m <= n-2 (got n={n}, m={m})")
    return [t for t in all_trees(n) if edge_count(t) == m]


def enumerate_binary(n: int) -> list[Tree]:
    return enumerate_trees(n, n - 2)


def all_metric_trees(n: int, fully_metric: bool = False) -> list[MetricTree]:
    """Every cell of W_n (or only the interior ones)."""
    out = []
    for t in all_trees(n):
        m = edge_count(t)
        if fully_metric:
            out.append(MetricTree(t))
            continue
        for mask in range(1 << m):
            out.append(MetricTree(t, frozenset(e for e in range(1, m + 1) if mask >> (e - 1) & 1)))
    out.sort(key=cell_key)
    return out


# ---------------------------------------------------------------- Tamari order

def _require_binary(*ts):
    for t in ts:
        if not is_binary(t):
            raise ValueError(f"{_render(t)} is not binary")


def moves_up(t: Tree) -> Iterator[Tree]:
    """Covering moves ``(xy)z -> x(yz)`` at every vertex."""
    if t == ():
        return
    a, z = t
    if a != ():
        x, y = a
        yield (x, (y, z))
    for s in moves_up(a):
        yield (s, z)
    for s in moves_up(z):
        yield (a, s)


def moves_down(t: Tree) -> Iterator[Tree]:
    if t == ():
        return
    x, w = t
    if w != ():
        y, z = w
        yield ((x, y), z)
    for s in moves_down(x):
        yield (s, w)
    for s in moves_down(w):
        yield (x, s)


@lru_cache(maxsize=None)
def upset(t: Tree) -> frozenset:
    seen = {t}
    queue = deque([t])
    while queue:
        s = queue.popleft()
        for u in moves_up(s):
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return frozenset(seen)


@lru_cache(maxsize=None)
def downset(t: Tree) -> frozenset:
    seen = {t}
    queue = deque([t])
    while queue:
        s = queue.popleft()
        for u in moves_down(s):
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return frozenset(seen)


def tamari_leq(s: Tree, t: Tree) -> bool:
    _require_binary(s, t)
    if leaf_count(s) != leaf_count(t):
        raise ValueError("trees have different leaf counts")
    return t in upset(s)


def left_leaning_edges(t: Tree) -> frozenset:
    """Edges whose lower vertex is the right child of its parent."""
    _require_binary(t)
    out = set()
    counter = [0]

    def walk(s, is_right):
        me = counter[0]
        counter[0] += 1
        if is_right and me:
            out.add(me)
        for j, c in enumerate(s):
            if c != ():
                walk(c, j == 1)

    walk(t, False)
    return frozenset(out)


def fill_min(t: Tree) -> tuple[Tree, frozenset]:
    """Fill non-binary vertices by left combs; return the tree and its new edges."""
    return _fill(t, "min")


def fill_max(t: Tree) -> tuple[Tree, frozenset]:
    return _fill(t, "max")


@lru_cache(maxsize=None)
def _fill(t: Tree, how: str):
    tree, ids = unlabel(lfill(labeled(t), how, tag="new"))
    return tree, frozenset(v for k, v in ids.items() if isinstance(k, tuple))


def in_M(t: Tree) -> bool:
    """Whether no internal vertex is a first child (the M_n trees)."""
    if t == ():
        return True
    return t[0] == () and all(in_M(c) for c in t)


def label_hashable(x) -> Hashable:
    return x


def split_with_maps(t: Tree, e: int) -> tuple[Tree, int, Tree, dict, dict]:
    """Cut internal edge ``e`` so that ``t = outer o_i inner``.

    Returns ``(outer, i, inner, outer_ids, inner_ids)``; the dicts send the
    edges of ``t`` (other than ``e``) to edges of the two pieces.
    """
    _check_edge(t, e)
    lt = labeled(t)
    leaves = [0]
    found: list = []

    def walk(s):
        if s is None:
            leaves[0] += 1
            return None
        if s[0] == e:
            found.append((s, leaves[0] + 1))
            leaves[0] += lleaf_count(s)
            return None
        return (s[0], tuple(walk(c) for c in s[1]))

    outer_l = walk(lt)
    inner_l, i = found[0]
    outer, oids = unlabel(outer_l)
    inner, iids = unlabel(inner_l)
    oids.pop(0)
    iids.pop(e)
    return outer, i, inner, oids, iids


def split_metric(cell: MetricTree, e: int) -> tuple[MetricTree, int, MetricTree]:
    """Cut a non-metric edge of a W-cell into two W-cells."""
    if e not in cell.nonmetric:
        raise ValueError(f"edge {e} is metric")
    outer, i, inner, oids, iids = split_with_maps(cell.tree, e)
    return (
        MetricTree(outer, frozenset(oids[x] for x in cell.nonmetric if x in oids)),
        i,
        MetricTree(inner, frozenset(iids[x] for x in cell.nonmetric if x in iids)),
    )
