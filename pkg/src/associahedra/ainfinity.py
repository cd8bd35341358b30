"""Finite-dimensional A∞-algebras over Q, the action of K-cells on them,
and the tensor product induced by the Saneblidze-Umble diagonal.

Degrees are homological: m_k has degree k - 2 (so m_1 lowers degree by
one).  An :class:`Op` is a sparse multilinear map on basis indices.  The
Stasheff identities are the statement that cells act compatibly with
boundaries: act(∂_K c(n)) = m_1 ∘ m_n - (-1)^n Σ_j m_n ∘_j m_1.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

try:  # exact rationals; gmpy2 is much faster than Fraction for the big tables
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover
    Q = Fraction

from .chains import Chain, boundary_k
from .diagonal import su_diagonal
from .transfer import extend_k
from .trees import corolla, edge_count, leaf_count


class CapExceeded(ValueError):
    pass


class Op:
    """A multilinear map V^{⊗k} -> V of fixed degree, stored sparsely."""

    __slots__ = ("arity", "degree", "degs", "table")

    def __init__(self, arity: int, degree: int, degs: tuple, table=None):
        self.arity = arity
        self.degree = degree
        self.degs = degs
        self.table: dict = {}
        for ins, outs in (table or {}).items():
            for o, c in outs.items():
                self._add(ins, o, c)

    def _add(self, ins, o, c):
        if c == 0:
            return
        row = self.table.setdefault(ins, {})
        v = row.get(o, 0) + c
        if v == 0:
            del row[o]
            if not row:
                del self.table[ins]
        else:
            row[o] = v

    def copy(self) -> "Op":
        return Op(self.arity, self.degree, self.degs, self.table)

    def __add__(self, other: "Op") -> "Op":
        out = self.copy()
        for ins, outs in other.table.items():
            for o, c in outs.items():
                out._add(ins, o, c)
        return out

    def __neg__(self) -> "Op":
        return self * -1

    def __sub__(self, other: "Op") -> "Op":
        return self + (-other)

    def __mul__(self, scalar) -> "Op":
        out = Op(self.arity, self.degree, self.degs)
        if scalar != 0:
            out.table = {i: {o: c * scalar for o, c in outs.items()} for i, outs in self.table.items()}
        return out

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Op):
            return NotImplemented
        return self.arity == other.arity and self.table == other.table

    def __bool__(self):
        return bool(self.table)

    def __call__(self, *args: int) -> dict:
        return dict(self.table.get(tuple(args), {}))

    def compose(self, i: int, g: "Op") -> "Op":
        """(f ∘_i g)(x) = (-1)^{|g|(|x_1|+...+|x_{i-1}|)} f(x_1, .., g(x_i, ..), ..)."""
        if not 1 <= i <= self.arity:
            raise ValueError(f"input {i} out of range 1..{self.arity}")
        out = Op(self.arity + g.arity - 1, self.degree + g.degree, self.degs)
        by_slot: dict = {}
        for ins, outs in self.table.items():
            by_slot.setdefault(ins[i - 1], []).append((ins, outs))
        odd = g.degree % 2
        for gins, gouts in g.table.items():
            for mid, gc in gouts.items():
                for fins, fouts in by_slot.get(mid, ()):
                    before = fins[: i - 1]
                    sign = -1 if odd and sum(self.degs[b] for b in before) % 2 else 1
                    key = before + gins + fins[i:]
                    for o, fc in fouts.items():
                        out._add(key, o, sign * gc * fc)
        return out

    def discrepancy(self, other: "Op"):
        """First input tuple where two operations differ, with both values."""
        for ins in sorted(set(self.table) | set(other.table)):
            a, b = self.table.get(ins, {}), other.table.get(ins, {})
            if a != b:
                return ins, a, b
        return None


def end_compose(f: Op, i: int, g: Op) -> Op:
    return f.compose(i, g)


@dataclass
class AInfAlgebra:
    """Graded basis with degrees and structure maps m_1..m_cap."""

    names: list
    degrees: list
    ops: dict = field(default_factory=dict)
    cap: int = 5

    def __post_init__(self):
        self.degs = tuple(self.degrees)

    @property
    def dim(self) -> int:
        return len(self.names)

    def m(self, k: int) -> Op:
        if k > self.cap:
            raise CapExceeded(f"arity {k} exceeds cap {self.cap}")
        op = self.ops.get(k)
        if op is None:
            op = Op(k, k - 2, self.degs)
        return op

    def set(self, k: int, ins, out, coeff) -> None:
        """Add ``coeff`` to m_k(ins) at basis element ``out`` (names or indices)."""
        idx = self._index
        ins = [idx(x) for x in ins]
        if self.degrees[idx(out)] != sum(self.degrees[j] for j in ins) + k - 2:
            raise ValueError(f"m_{k} entry {ins} -> {out} has the wrong degree")
        if k not in self.ops:
            self.ops[k] = Op(k, k - 2, self.degs)
        self.ops[k]._add(tuple(ins), idx(out), Q(coeff))

    def _index(self, x) -> int:
        return x if isinstance(x, int) else self.names.index(x)

    def to_dict(self) -> dict:
        ops = {}
        for k in sorted(self.ops):
            rows = []
            for ins in sorted(self.ops[k].table):
                for o, c in sorted(self.ops[k].table[ins].items()):
                    rows.append([[self.names[j] for j in ins], self.names[o], str(c)])
            if rows:
                ops[str(k)] = rows
        return {
            "basis": [{"name": n, "degree": d} for n, d in zip(self.names, self.degrees)],
            "cap": self.cap,
            "operations": ops,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=1)

    @classmethod
    def from_dict(cls, data: dict) -> "AInfAlgebra":
        names = [b["name"] for b in data["basis"]]
        degrees = [int(b["degree"]) for b in data["basis"]]
        if len(set(names)) != len(names):
            raise ValueError("basis names must be distinct")
        alg = cls(names, degrees, cap=int(data.get("cap", 5)))
        for k, rows in data.get("operations", {}).items():
            k = int(k)
            for ins, out, c in rows:
                if len(ins) != k:
                    raise ValueError(f"m_{k} entry with {len(ins)} inputs")
                alg.set(k, ins, out, Q(Fraction(c)))
        return alg


# ---------------------------------------------------------------- action

def act(x, A: AInfAlgebra) -> Op:
    """The operation assigned to a K-cell (canonical orientation) or K-chain."""
    if isinstance(x, Chain):
        out = Op(x.n, 0, A.degs)
        first = True
        for cell, c in x.terms.items():
            term = _act_cell(cell, A) * c
            if first:
                out, first = term, False
            else:
                out = out + term
        return out
    return _act_cell(x, A)


def _act_cell(t, A: AInfAlgebra) -> Op:
    if leaf_count(t) > A.cap:
        raise CapExceeded(f"arity {leaf_count(t)} exceeds cap {A.cap}")
    return extend_k(A.m, end_compose, t)


def act_on(x, A: AInfAlgebra, args) -> dict:
    """Evaluate the action of a cell on basis elements (names or indices)."""
    return act(x, A)(*(A._index(a) for a in args))


def d_commutator(A: AInfAlgebra, f: Op) -> Op:
    """[m_1, f] = m_1 ∘ f - (-1)^{|f|} Σ_j f ∘_j m_1."""
    m1 = A.m(1)
    out = m1.compose(1, f)
    sign = -1 if f.degree % 2 == 0 else 1
    for j in range(1, f.arity + 1):
        out = out + f.compose(j, m1) * sign
    return out


@dataclass
class StasheffReport:
    ok: bool
    checked: list
    failure: tuple | None = None

    def __str__(self):
        if self.ok:
            return f"Stasheff identities hold for arities {self.checked}"
        k, ins, lhs, rhs = self.failure
        return f"Stasheff identity fails at arity {k}, inputs {ins}: act(∂c) gives {lhs}, [m1, m] gives {rhs}"


def check_stasheff(A: AInfAlgebra, upto: int | None = None) -> StasheffReport:
    """Check m_1² = 0 and act(∂_K c(n)) = [m_1, m_n] for n <= upto."""
    upto = A.cap if upto is None else upto
    if upto > A.cap:
        raise CapExceeded(f"arity {upto} exceeds cap {A.cap}")
    checked = []
    m1 = A.m(1)
    sq = m1.compose(1, m1)
    if sq:
        ins, a, _ = sq.discrepancy(Op(1, -2, A.degs))
        return StasheffReport(False, checked, (1, ins, a, {}))
    checked.append(1)
    for n in range(2, upto + 1):
        lhs = act(boundary_k(corolla(n)), A)
        rhs = d_commutator(A, A.m(n))
        diff = lhs.discrepancy(rhs)
        if diff is not None:
            return StasheffReport(False, checked, (n,) + diff)
        checked.append(n)
    return StasheffReport(True, checked)


# ---------------------------------------------------------------- tensor product

def tensor_product(A: AInfAlgebra, B: AInfAlgebra, cap: int | None = None) -> AInfAlgebra:
    """A ⊙ B on V ⊗ W with m_k built from Δ^su(c(k)).

    m_1 is the tensor differential, and for k >= 2
    m_k(x_1⊗y_1, ..., x_k⊗y_k) = Σ_{u⊗t} c (-1)^{ε} act(u)(x) ⊗ act(t)(y),
    ε = Σ_{i<j}|y_i||x_j| + |t| Σ|x_i|.
    """
    cap = min(A.cap, B.cap) if cap is None else cap
    if cap > A.cap or cap > B.cap:
        raise CapExceeded(f"cap {cap} exceeds a factor's cap")
    pairs = [(a, b) for a in range(A.dim) for b in range(B.dim)]
    index = {pr: j for j, pr in enumerate(pairs)}
    names = [f"{A.names[a]}⊗{B.names[b]}" for a, b in pairs]
    degrees = [A.degrees[a] + B.degrees[b] for a, b in pairs]
    C = AInfAlgebra(names, degrees, cap=cap)
    degs = C.degs

    # m_1 = ∂⊗1 + 1⊗∂
    m1 = Op(1, -1, degs)
    for (a, b), j in index.items():
        for o, c in A.m(1)(a).items():
            m1._add((j,), index[(o, b)], c)
        sign = -1 if A.degrees[a] % 2 else 1
        for o, c in B.m(1)(b).items():
            m1._add((j,), index[(a, o)], sign * c)
    C.ops[1] = m1

    for k in range(2, cap + 1):
        mk = Op(k, k - 2, degs)
        for (u, t), c in su_diagonal(corolla(k)).terms.items():
            F, G = act(u, A), act(t, B)
            tdim = k - 2 - edge_count(t)
            for xs, fouts in F.table.items():
                xdeg = [A.degrees[x] for x in xs]
                base = tdim * sum(xdeg)
                for ys, gouts in G.table.items():
                    eps = base
                    for j in range(k):
                        if xdeg[j] % 2:
                            eps += sum(B.degrees[y] for y in ys[:j])
                    sign = -c if eps % 2 else c
                    key = tuple(index[(x, y)] for x, y in zip(xs, ys))
                    for fo, fc in fouts.items():
                        for go, gc in gouts.items():
                            mk._add(key, index[(fo, go)], sign * fc * gc)
        C.ops[k] = mk
    return C


# ---------------------------------------------------------------- examples

def ground_field(cap: int = 5) -> AInfAlgebra:
    A = AInfAlgebra(["1"], [0], cap=cap)
    A.set(2, ["1", "1"], "1", 1)
    return A


def _small(rng: random.Random):
    return Q(rng.randint(-3, 3), rng.choice([1, 1, 2, 3]))


def random_dga(seed: int, cap: int = 5) -> AInfAlgebra:
    """A small dg-algebra: the ground field, a square-zero extension, or a bare differential."""
    rng = random.Random(seed)
    kind = rng.randrange(3)
    if kind == 0:
        return ground_field(cap)
    A = AInfAlgebra(["e", "y"], [0, -1], cap=cap)
    if kind == 1:
        # e idempotent, y of degree -1 with e y = y e = y and y y = 0
        A.set(2, ["e", "e"], "e", 1)
        A.set(2, ["e", "y"], "y", 1)
        A.set(2, ["y", "e"], "y", 1)
        return A
    A.set(1, ["e"], "y", rng.choice([1, 2, -1, 3]))
    return A


def random_ainf(seed: int, dim: int = 3, cap: int = 5, density: float = 0.5) -> AInfAlgebra:
    """A random A∞-algebra with non-trivial higher operations.

    Basis x (deg 0), y (deg -1) and, if dim = 3, z (deg 0); m_1 x = c y.
    With h(y) = x / c and π the projection onto z, m_2 = λ z z -> z + [m_1, R_2]
    and m_n = h ∘ Q_n + [m_1, R_n] where Q_n is the action of ∂_K c(n).
    The R_n are random with outputs in span(x, y); then π Q_n = 0 and the
    Stasheff identities hold exactly.
    """
    if dim not in (1, 2, 3):
        raise ValueError("dim must be 1, 2 or 3")
    rng = random.Random(seed)
    if dim == 1:
        A = ground_field(cap)
        lam = Q(rng.choice([1, 2, -1, 3]))
        A.ops[2] = A.m(2) * lam
        return A
    names = ["x", "y", "z"][:dim]
    degrees = [0, -1, 0][:dim]
    A = AInfAlgebra(names, degrees, cap=cap)
    c = Q(rng.choice([1, 2, -1, -2, 3]))
    A.set(1, ["x"], "y", c)
    h = Op(1, 1, A.degs, {(1,): {0: 1 / c}})
    for n in range(2, cap + 1):
        R = _random_op(rng, A, n, n - 1, density)
        m = d_commutator(A, R)
        if n == 2:
            if dim == 3:
                m._add((2, 2), 2, Q(rng.choice([1, -1, 2])))
        else:
            q_n = act(boundary_k(corolla(n)), A)
            m = m + h.compose(1, q_n)
        A.ops[n] = m
    return A


def _random_op(rng, A: AInfAlgebra, arity: int, degree: int, density: float) -> Op:
    """Random sparse operation with outputs in span(x, y) of the given degree."""
    op = Op(arity, degree, A.degs)
    for ins in product(range(A.dim), repeat=arity):
        target = sum(A.degrees[i] for i in ins) + degree
        for o in (0, 1):
            if A.degrees[o] == target and rng.random() < density:
                op._add(ins, o, _small(rng))
    return op
