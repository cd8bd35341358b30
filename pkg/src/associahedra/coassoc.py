"""Exhaustive search for a coassociative diagonal on C(K) through arity 4.

A candidate diagonal is given by its values on the corollas c(2), c(3),
c(4) with unknown coefficients; it is extended to composite cells as an
operad map.  The constraints (chain map, coassociativity) are read off
from the live chain machinery as polynomial equations and solved exactly:
linear equations by elimination, quadratic ones by splitting on
idempotent variables (x² = x) and rational roots of univariate equations.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from sympy import Poly, Symbol
from sympy.polys.domains import GF, QQ
from sympy.polys.polyroots import roots
from sympy.polys.rings import ring

from . import linalg
from .chains import TensorChain, boundary_k, cell_dim, flip, tensor_boundary, tensor_compose
from .diagonal import coassoc_defect, su_diagonal, xi_sign
from .transfer import extend_k
from .trees import all_trees, corolla, k_dim, max_tree, min_tree


class OperadicDiagonal:
    """A diagonal defined on corollas and extended to all K-cells as an operad map."""

    def __init__(self, values: dict):
        self.values = values
        self._cache: dict = {}

    def corolla_value(self, n: int) -> TensorChain:
        if n not in self.values:
            raise KeyError(f"no value given on c({n})")
        return self.values[n]

    def __call__(self, x) -> TensorChain:
        if isinstance(x, TensorChain):
            raise TypeError("apply to cells or K-chains")
        if hasattr(x, "terms"):
            out = TensorChain("K", x.n)
            for cell, c in x.terms.items():
                out = out + self(cell) * c
            return out
        if x not in self._cache:
            self._cache[x] = extend_k(self.corolla_value, tensor_compose, x)
        return self._cache[x]


def chain_map_residual(diag, n: int) -> TensorChain:
    """∂Δ(c(n)) - Δ(∂c(n))."""
    return tensor_boundary(diag(corolla(n))) - diag(boundary_k(corolla(n)))


def coassoc_residual(diag, n: int) -> TensorChain:
    return coassoc_defect(n, diag=diag)


def equations_of(x: TensorChain) -> list:
    """The coefficients of a residual, in canonical term order."""
    return [c for _, c in x.items()]


# ---------------------------------------------------------------- polynomial solving

def _to_field(c, modulus):
    if modulus is None:
        return Fraction(int(c.numerator), int(c.denominator))
    return int(c) % modulus


def _degree(p) -> int:
    if not p:
        return -1
    return max(sum(m) for m in p.monoms())


def _linear_row(p, modulus):
    row, const = {}, 0
    for monom, c in p.terms():
        value = _to_field(c, modulus)
        if sum(monom) == 0:
            const = value
        else:
            row[monom.index(1)] = value
    return row, -const


def _boolean_var(p):
    """Index of x if p is a nonzero multiple of x² - x."""
    terms = p.terms()
    if len(terms) != 2:
        return None
    (m1, c1), (m2, c2) = sorted(terms, key=lambda t: -sum(t[0]))
    if sum(m1) != 2 or sum(m2) != 1 or c1 != -c2:
        return None
    j = m2.index(1)
    return j if m1[j] == 2 else None


def _univariate(p):
    used = {j for m in p.monoms() for j, e in enumerate(m) if e}
    return used.pop() if len(used) == 1 else None


@dataclass
class Leaf:
    """One case of the split: the decisions taken and the outcome."""

    decisions: list
    status: str  # "infeasible", "feasible" or "undetermined"
    solution: dict = field(default_factory=dict)
    certificate: linalg.Certificate | None = None
    certificate_ok: bool = False
    equations_used: int = 0

    def to_dict(self, names) -> dict:
        out = {
            "decisions": [[names[j], str(v)] for j, v in self.decisions],
            "status": self.status,
        }
        if self.solution:
            out["solution"] = {names[j]: str(v) for j, v in sorted(self.solution.items())}
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_dict()
            out["certificate_verified"] = self.certificate_ok
        return out


class PolynomialSystem:
    """Equations in a sympy polynomial ring, solved by elimination and case splits."""

    def __init__(self, R, gens, equations, modulus=None):
        self.R = R
        self.gens = gens
        self.equations = [e for e in equations if e]
        self.modulus = modulus

    def solve(self) -> list[Leaf]:
        return self._solve(list(self.equations), [], {})

    def _substitute(self, eqs, values: dict):
        if not values:
            return eqs
        pairs = [(self.gens[j], v) for j, v in values.items()]
        return [e.compose(pairs) for e in eqs]

    def _solve(self, eqs, decisions, solved) -> list[Leaf]:
        R = self.R
        solved = dict(solved)
        while True:
            eqs = [e for e in eqs if e]
            lin = [e for e in eqs if _degree(e) <= 1]
            if not lin:
                break
            rows, rhs = zip(*(_linear_row(e, self.modulus) for e in lin))
            status, payload, _ = linalg.solve(list(rows), list(rhs), self.modulus, want_reduced=True)
            if status == "infeasible":
                return [self._leaf_infeasible(decisions)]
            values = {}
            for col, (free, b) in payload.items():
                expr = R(self._ring_const(b))
                for j, v in free.items():
                    expr -= R(self._ring_const(v)) * self.gens[j]
                values[col] = expr
            solved = {j: e.compose([(self.gens[c], v) for c, v in values.items()]) for j, e in solved.items()}
            solved.update(values)
            eqs = self._substitute([e for e in eqs if _degree(e) > 1], values)
        if not eqs:
            return [Leaf(decisions, "feasible", solution=solved)]
        for e in eqs:
            j = _boolean_var(e)
            if j is not None:
                return self._branch(eqs, decisions, solved, j, [0, 1])
        for e in eqs:
            j = _univariate(e)
            if j is not None:
                return self._branch(eqs, decisions, solved, j, self._roots(e, j))
        return [Leaf(decisions, "undetermined", solution=solved)]

    def _ring_const(self, v):
        if self.modulus is None:
            return QQ(v.numerator, v.denominator) if isinstance(v, Fraction) else QQ(v)
        return int(v)

    def _roots(self, e, j):
        if self.modulus is not None:
            return [v for v in range(self.modulus) if not e.compose([(self.gens[j], self.R(v))])]
        x = Symbol("x")
        coeffs: dict = {}
        for monom, c in e.terms():
            coeffs[monom[j]] = Fraction(int(c.numerator), int(c.denominator))
        poly = Poly(sum(c * x ** k for k, c in coeffs.items()), x, domain="QQ")
        return sorted(Fraction(int(r.p), int(r.q)) for r in roots(poly, filter="Q"))

    def _branch(self, eqs, decisions, solved, j, values) -> list[Leaf]:
        leaves = []
        for v in values:
            fixed = self.gens[j] - self.R(self._ring_const(v) if isinstance(v, Fraction) else v)
            leaves.extend(self._solve(eqs + [fixed], decisions + [(j, v)], solved))
        if not values:
            leaves.append(Leaf(decisions, "infeasible"))
        return leaves

    def _leaf_infeasible(self, decisions) -> Leaf:
        """Certificate from the original equations with the decisions substituted."""
        fixed = {j: self.R(self._ring_const(v) if isinstance(v, Fraction) else v) for j, v in decisions}
        subst = self._substitute(self.equations, fixed)
        idx = [i for i, e in enumerate(subst) if _degree(e) <= 1 and e]
        leaf = Leaf(decisions, "infeasible")
        if not idx:
            return leaf
        rows, rhs = zip(*(_linear_row(subst[i], self.modulus) for i in idx))
        status, cert, _ = linalg.solve(list(rows), list(rhs), self.modulus)
        if status == "infeasible":
            cert.multipliers = {idx[i]: c for i, c in cert.multipliers.items()}
            full_rows = [dict() for _ in subst]
            full_rhs = [0] * len(subst)
            for i in idx:
                full_rows[i], full_rhs[i] = _linear_row(subst[i], self.modulus)
            leaf.certificate = cert
            leaf.certificate_ok = linalg.check_certificate(full_rows, full_rhs, cert, self.modulus)
            leaf.equations_used = len(cert.multipliers)
        return leaf


# ---------------------------------------------------------------- arity 3

def _xi_chain(R, weights: dict) -> dict:
    """Binary trees in ξ-shorthand with ring coefficients -> canonical coefficients."""
    return {t: R(xi_sign(t)) * w for t, w in weights.items()}


def ansatz3(R, a, b, c, d) -> OperadicDiagonal:
    """Δ(c2) = c2⊗c2, Δ(c3) = (a min3 + b max3)⊗c3 + c3⊗(c min3 + d max3) in ξ-shorthand."""
    c2, c3 = corolla(2), corolla(3)
    lo, hi = min_tree(3), max_tree(3)
    d3 = TensorChain("K", 3)
    for t, w in _xi_chain(R, {lo: a, hi: b}).items():
        d3.add_term((t, c3), w)
    for t, w in _xi_chain(R, {lo: c, hi: d}).items():
        d3.add_term((c3, t), w)
    return OperadicDiagonal({2: TensorChain("K", 2, {(c2, c2): R(1)}), 3: d3})


def arity3_system(modulus=None):
    domain = QQ if modulus is None else GF(modulus)
    R, a, b, c, d = ring("a,b,c,d", domain)
    diag = ansatz3(R, a, b, c, d)
    chain_eqs = equations_of(chain_map_residual(diag, 3))
    coassoc_eqs = equations_of(coassoc_residual(diag, 3))
    return R, (a, b, c, d), chain_eqs, coassoc_eqs


def solve_arity3(modulus=None) -> list[tuple]:
    """All (a, b, c, d) making the arity-3 ansatz a coassociative chain map."""
    R, gens, chain_eqs, coassoc_eqs = arity3_system(modulus)
    system = PolynomialSystem(R, gens, chain_eqs + coassoc_eqs, modulus)
    out = []
    for leaf in system.solve():
        if leaf.status == "undetermined":
            raise AssertionError("arity-3 system not resolved by case splitting")
        if leaf.status != "feasible":
            continue
        if len(leaf.solution) != 4 or any(_degree(v) > 0 for v in leaf.solution.values()):
            raise AssertionError("arity-3 solution is not isolated")
        vals = []
        for j in range(4):
            const = dict(leaf.solution[j].terms()).get((0, 0, 0, 0), 0)
            vals.append(_to_field(const, modulus))
        out.append(tuple(vals))
    return sorted(set(out), reverse=True)


def diagonal_from_arity3(solution, R=None) -> OperadicDiagonal:
    R = R or ring("t", QQ)[0]
    a, b, c, d = (R(QQ(Fraction(v).numerator, Fraction(v).denominator)) for v in solution)
    return ansatz3(R, a, b, c, d)


# ---------------------------------------------------------------- arity 4

def ansatz_basis(n: int = 4) -> list[tuple]:
    """Basis of (C⊗C)_{n-2}(K_n): pairs of cells with dimensions summing to n-2."""
    cells = all_trees(n)
    out = [(u, v) for u in cells for v in cells if k_dim(u) + k_dim(v) == n - 2]
    return sorted(out, key=lambda uv: (-k_dim(uv[1]), uv))


def cycle_space_rank(n: int = 4, degree: int = 1) -> int:
    """Rank of the cycles in C_degree(K_n)."""
    cells = [t for t in all_trees(n) if k_dim(t) == degree]
    rows: dict = {}
    for j, t in enumerate(cells):
        for face, c in boundary_k(t).terms.items():
            rows.setdefault(face, {})[j] = c
    return len(cells) - linalg.rank(list(rows.values()))


@dataclass
class SearchResult:
    branch: tuple
    modulus: int | None
    unknowns: int
    chain_equations: int
    coassoc_equations: int
    leaves: list
    names: list

    @property
    def infeasible(self) -> bool:
        return all(leaf.status == "infeasible" for leaf in self.leaves)

    @property
    def certified(self) -> bool:
        return self.infeasible and all(leaf.certificate_ok for leaf in self.leaves)

    def to_dict(self) -> dict:
        return {
            "branch": [str(v) for v in self.branch],
            "field": "Q" if self.modulus is None else f"GF({self.modulus})",
            "unknowns": self.unknowns,
            "chain_map_equations": self.chain_equations,
            "coassociativity_equations": self.coassoc_equations,
            "infeasible": self.infeasible,
            "certified": self.certified,
            "cases": [leaf.to_dict(self.names) for leaf in self.leaves],
        }


def arity4_system(branch, modulus=None):
    basis = ansatz_basis(4)
    names = [f"y{j}" for j in range(len(basis))]
    domain = QQ if modulus is None else GF(modulus)
    R, *gens = ring(",".join(names), domain)
    if modulus is None:
        consts = [R(QQ(Fraction(v).numerator, Fraction(v).denominator)) for v in branch]
    else:
        consts = [R(int(v) % modulus) for v in branch]
    base = ansatz3(R, *consts)
    d4 = TensorChain("K", 4)
    for (u, v), y in zip(basis, gens):
        d4.add_term((u, v), y)
    values = dict(base.values)
    values[4] = d4
    diag = OperadicDiagonal(values)
    chain_eqs = equations_of(chain_map_residual(diag, 4))
    coassoc_eqs = equations_of(coassoc_residual(diag, 4))
    return R, gens, names, basis, chain_eqs, coassoc_eqs


def search_arity4(branch, modulus=None) -> SearchResult:
    """Decide whether the arity-3 solution ``branch`` extends coassociatively to c(4)."""
    R, gens, names, basis, chain_eqs, coassoc_eqs = arity4_system(branch, modulus)
    system = PolynomialSystem(R, gens, chain_eqs + coassoc_eqs, modulus)
    leaves = system.solve()
    return SearchResult(tuple(branch), modulus, len(gens), len(chain_eqs), len(coassoc_eqs), leaves, names)


def known_extension(branch) -> TensorChain:
    """Δ^su(c(4)) for the first branch, its flip for the second."""
    d = su_diagonal(corolla(4))
    if tuple(branch) == (1, 0, 0, 1):
        return d
    if tuple(branch) == (0, 1, 1, 0):
        return flip(d)
    raise ValueError("no known extension for this branch")


def perturbation_facts(branch) -> dict:
    """Reproduce the one-parameter reduction around a known chain-map extension.

    With the (2,0) and (0,2) parts fixed to those of the known extension,
    the chain-map equations leave a one-dimensional family in the (1,1)
    block, spanned by ∂c(4) ⊗ ∂c(4).  Adding coassociativity makes the
    system infeasible.
    """
    R, gens, names, basis, chain_eqs, coassoc_eqs = arity4_system(branch)
    known = known_extension(branch)
    fixed = {}
    for j, (u, v) in enumerate(basis):
        if (cell_dim(u), cell_dim(v)) != (1, 1):
            fixed[j] = R(known.coeff((u, v)))
    pairs = [(gens[j], val) for j, val in fixed.items()]
    chain_sub = [e.compose(pairs) for e in chain_eqs]
    chain_sub = [e for e in chain_sub if e]
    rows, rhs = zip(*(_linear_row(e, None) for e in chain_sub)) if chain_sub else ((), ())
    status, echelon, rank = linalg.solve(list(rows), list(rhs), want_reduced=True)
    free = [j for j in range(len(basis)) if j not in fixed and j not in echelon]
    # residual of the known extension in the chain-map equations
    known_vals = [(gens[j], R(known.coeff(uv))) for j, uv in enumerate(basis)]
    known_chain_residual = [e.compose(known_vals) for e in chain_eqs]
    # direction of the free parameter
    direction = {}
    if status == "solution" and len(free) == 1:
        f = free[0]
        direction[f] = Fraction(1)
        for col, (row, _) in echelon.items():
            direction[col] = -row.get(f, 0)
    bb = boundary_k(corolla(4))
    target = {(u, v): bb.coeff(u) * bb.coeff(v) for (u, v) in basis if (cell_dim(u), cell_dim(v)) == (1, 1)}
    proportional = False
    if direction:
        ratio = None
        proportional = True
        for j, (u, v) in enumerate(basis):
            if j in fixed:
                continue
            t, dv = target.get((u, v), 0), direction.get(j, 0)
            if t == 0 and dv == 0:
                continue
            if t == 0 or dv == 0:
                proportional = False
                break
            r = Fraction(dv) / t
            ratio = ratio if ratio is not None else r
            proportional &= r == ratio
    full = PolynomialSystem(R, gens, [e.compose(pairs) for e in chain_eqs + coassoc_eqs])
    leaves = full.solve()
    return {
        "chain_map_residual_of_known_extension_is_zero": not any(known_chain_residual),
        "free_parameters_in_bidegree_1_1_block": len(free) if status == "solution" else None,
        "free_direction_proportional_to_boundary_tensor": proportional,
        "infeasible_with_coassociativity": all(l.status == "infeasible" for l in leaves),
    }


def run_search(modulus=None) -> dict:
    """The complete arity-3 and arity-4 verification."""
    sols = solve_arity3(modulus)
    report = {
        "field": "Q" if modulus is None else f"GF({modulus})",
        "arity3_solutions": [[str(v) for v in s] for s in sols],
        "ansatz_dimension": len(ansatz_basis(4)),
        "cycle_space_rank_C1_K4": cycle_space_rank(4, 1),
        "branches": [],
    }
    for s in sols:
        res = search_arity4(s, modulus)
        entry = res.to_dict()
        if modulus is None and tuple(s) in {(1, 0, 0, 1), (0, 1, 1, 0)}:
            entry["perturbation"] = perturbation_facts(s)
        report["branches"].append(entry)
    report["nonexistence"] = all(b["infeasible"] for b in report["branches"])
    return report
