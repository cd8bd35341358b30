import random
from fractions import Fraction

import pytest
import sympy

from associahedra.chains import Chain, boundary
from associahedra.linalg import check_certificate, rank, solve, solve_chain
from associahedra.trees import corolla, max_tree, min_tree


def test_solve_unique():
    status, sol, r = solve([{0: 1, 1: 1}, {0: 1, 1: -1}], [3, 1])
    assert status == "solution" and r == 2
    assert sol == {0: 2, 1: 1}


def test_solve_underdetermined_sets_free_to_zero():
    status, sol, r = solve([{0: 1, 1: 2}], [4])
    assert status == "solution" and r == 1 and sol == {0: 4}


def test_reduced_form():
    status, ech, _ = solve([{0: 1, 1: 2, 2: 1}, {1: 1, 2: 1}], [1, 1], want_reduced=True)
    assert status == "solution"
    # x0 - x2 = -1 and x1 + x2 = 1
    assert ech == {0: ({2: -1}, -1), 1: ({2: 1}, 1)}


def test_infeasible_certificate():
    rows = [{0: 1, 1: 1}, {1: 1}, {0: 1, 1: 2}]
    rhs = [1, 1, 3]
    status, cert, _ = solve(rows, rhs)
    assert status == "infeasible"
    assert check_certificate(rows, rhs, cert)
    assert cert.to_dict()["combined_rhs"] != "0"


def test_certificate_check_rejects_forgeries():
    rows, rhs = [{0: 1}, {0: 1}], [0, 1]
    status, cert, _ = solve(rows, rhs)
    assert check_certificate(rows, rhs, cert)
    cert.multipliers = {0: Fraction(1)}
    assert not check_certificate(rows, rhs, cert)


def test_prime_field():
    # 2x = 1 has no solution mod 2 but x = 2 mod 3
    assert solve([{0: 2}], [1], modulus=2)[0] == "infeasible"
    assert solve([{0: 2}], [1], modulus=3)[1] == {0: 2}
    assert solve([{0: 2}], [1])[1] == {0: Fraction(1, 2)}


@pytest.mark.parametrize("seed", range(15))
def test_rank_matches_sympy(seed):
    rng = random.Random(seed)
    m, n = rng.randint(1, 6), rng.randint(1, 6)
    dense = [[rng.choice([0, 0, 1, -1, 2]) for _ in range(n)] for _ in range(m)]
    rows = [{j: v for j, v in enumerate(r) if v} for r in dense]
    assert rank(rows) == sympy.Matrix(dense).rank()


@pytest.mark.parametrize("seed", range(15))
def test_random_solutions_check(seed):
    rng = random.Random(seed)
    m, n = rng.randint(1, 5), rng.randint(1, 5)
    dense = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(m)]
    rhs = [rng.randint(-3, 3) for _ in range(m)]
    rows = [{j: v for j, v in enumerate(r) if v} for r in dense]
    status, payload, _ = solve(rows, rhs)
    consistent = sympy.Matrix(dense).rank() == sympy.Matrix([r + [b] for r, b in zip(dense, rhs)]).rank()
    assert (status == "solution") == consistent
    if status == "solution":
        for r, b in zip(dense, rhs):
            assert sum(v * payload.get(j, 0) for j, v in enumerate(r)) == b
    else:
        assert check_certificate(rows, rhs, payload)


def test_solve_chain():
    cols = [Chain.cell(max_tree(3)), Chain.cell(min_tree(3))]
    assert solve_chain(cols, boundary(corolla(3))) == {0: 1, 1: 1}
    assert solve_chain(cols[:1], boundary(corolla(3))) is None
