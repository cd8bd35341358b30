"""Exact sparse linear algebra over Q (or a prime field) with certificates."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


@dataclass
class Certificate:
    """Infeasibility witness: Σ multipliers[i] * row_i = 0 while Σ multipliers[i] * rhs_i ≠ 0."""

    multipliers: dict
    value: object
    pivots: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "multipliers": [[i, str(c)] for i, c in sorted(self.multipliers.items())],
            "combined_rhs": str(self.value),
            "pivot_trace": [[r, str(c)] for r, c in self.pivots],
        }


class Field:
    """Arithmetic over Q (modulus None) or GF(p)."""

    def __init__(self, modulus: int | None = None):
        self.modulus = modulus

    def __call__(self, x):
        if self.modulus is None:
            return Fraction(x)
        x = Fraction(x)
        return (x.numerator * pow(x.denominator, -1, self.modulus)) % self.modulus

    def inv(self, x):
        if self.modulus is None:
            return 1 / x
        return pow(x, -1, self.modulus)

    def norm(self, x):
        return x if self.modulus is None else x % self.modulus


def solve(rows: list[dict], rhs: list, modulus: int | None = None, want_reduced: bool = False):
    """Solve Σ_j rows[i][j] x_j = rhs[i].

    Returns ``("solution", {j: value}, rank)`` (free variables set to 0) or
    ``("infeasible", Certificate, rank)``.  Each equation is tracked as a
    combination of the original ones, so the certificate can be re-checked.
    With ``want_reduced`` a feasible result carries the reduced echelon form
    ``{pivot: ({free column: coefficient}, rhs)}`` meaning
    x_pivot + Σ coefficient * x_free = rhs.
    """
    F = Field(modulus)
    work = []
    for i, (row, b) in enumerate(zip(rows, rhs)):
        r = {j: F(v) for j, v in row.items() if F(v) != 0}
        work.append([r, F(b), {i: F(1)}])
    pivots: dict = {}  # column -> index into reduced list
    reduced = []
    trace = []
    for row, b, combo in work:
        row, combo = dict(row), dict(combo)
        for col, idx in pivots.items():
            if col in row:
                prow, pb, pcombo = reduced[idx]
                f = row[col]
                for j, v in prow.items():
                    nv = F.norm(row.get(j, 0) - f * v)
                    if nv == 0:
                        row.pop(j, None)
                    else:
                        row[j] = nv
                b = F.norm(b - f * pb)
                for j, v in pcombo.items():
                    nv = F.norm(combo.get(j, 0) - f * v)
                    if nv == 0:
                        combo.pop(j, None)
                    else:
                        combo[j] = nv
        if not row:
            if b != 0:
                cert = Certificate(combo, b, trace)
                return "infeasible", cert, len(reduced)
            continue
        col = min(row)
        pivot_value = row[col]
        inv = F.inv(pivot_value)
        row = {j: F.norm(v * inv) for j, v in row.items()}
        b = F.norm(b * inv)
        combo = {j: F.norm(v * inv) for j, v in combo.items()}
        # eliminate the new pivot column from earlier pivot rows
        for c2, idx in pivots.items():
            prow, pb, pcombo = reduced[idx]
            if col in prow:
                f = prow[col]
                for j, v in row.items():
                    nv = F.norm(prow.get(j, 0) - f * v)
                    if nv == 0:
                        prow.pop(j, None)
                    else:
                        prow[j] = nv
                pb = F.norm(pb - f * b)
                for j, v in combo.items():
                    nv = F.norm(pcombo.get(j, 0) - f * v)
                    if nv == 0:
                        pcombo.pop(j, None)
                    else:
                        pcombo[j] = nv
                reduced[idx] = [prow, pb, pcombo]
        pivots[col] = len(reduced)
        reduced.append([row, b, combo])
        trace.append((col, pivot_value))
    sol = {col: reduced[idx][1] for col, idx in pivots.items()}
    if want_reduced:
        echelon = {col: ({j: v for j, v in reduced[idx][0].items() if j != col}, reduced[idx][1])
                   for col, idx in pivots.items()}
        return "solution", echelon, len(reduced)
    return "solution", {j: v for j, v in sol.items() if v != 0}, len(reduced)


def check_certificate(rows: list[dict], rhs: list, cert: Certificate, modulus: int | None = None) -> bool:
    """Re-verify Σ y_i row_i = 0 and Σ y_i rhs_i ≠ 0 from the original system."""
    F = Field(modulus)
    acc: dict = {}
    total = F(0)
    for i, y in cert.multipliers.items():
        for j, v in rows[i].items():
            acc[j] = F.norm(acc.get(j, 0) + y * F(v))
        total = F.norm(total + y * F(rhs[i]))
    return all(v == 0 for v in acc.values()) and total != 0


def rank(rows: list[dict], modulus: int | None = None) -> int:
    status, _, r = solve(rows, [0] * len(rows), modulus)
    return r


def solve_chain(columns: list, target) -> dict | None:
    """Find coefficients x with Σ x_j columns[j] = target for Chain-like columns."""
    index: dict = {}
    for col in columns:
        for key in col.terms:
            index.setdefault(key, len(index))
    for key in target.terms:
        if key not in index:
            index.setdefault(key, len(index))
    rows: list[dict] = [dict() for _ in index]
    for j, col in enumerate(columns):
        for key, v in col.terms.items():
            rows[index[key]][j] = v
    rhs = [0] * len(index)
    for key, v in target.terms.items():
        rhs[index[key]] = v
    status, sol, _ = solve(rows, rhs)
    return sol if status == "solution" else None
