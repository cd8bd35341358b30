"""Acceptance gate: one check per criterion, each at its stated bounds and exact.

Run ``pytest tests/test_acceptance.py -v`` for the gate alone; the PASS/FAIL
summary lines are printed at the end of the session (and by running this
file as a script).
"""
import sys

import pytest

from associahedra.verify import run_suite

CRITERIA = [
    (1, "boundary squares vanish: K_n n <= 7, W_n n <= 6", "boundary"),
    (2, "Leibniz rule for o_i in both complexes, n <= 5", "leibniz"),
    (3, "q commutes with the boundaries, n <= 6", "q-chain-map"),
    (4, "p commutes with the boundaries, fully metric n <= 6, all W-cells n <= 5", "p-chain-map"),
    (5, "p(max) = c(n), p(corolla) = (min, xi), p q = id, n <= 6", "p-anchors"),
    (6, "table of p values for n <= 4, including the single minus sign", "p-table"),
    (7, "Serre diagonal is coassociative and o_i-compatible, n <= 5", "serre"),
    (8, "SU diagonal on c(2), c(3), c(4); composite = direct, n <= 6", "su-diagonal"),
    (9, "orientations: pentagon, omega path independence, xi, grafted maxima, eta", "orientation"),
    (10, "cocommutativity and coassociativity defects up to the convention sign", "defects"),
    (11, "no coassociative diagonal: 2 arity-3 solutions, certified arity-4 infeasibility", "nonexistence"),
    (12, "tensor products of random A-infinity algebras, 100 seeds, arity 5; dg formulas", "ainfinity"),
    (13, "contraction identities for p on all applicable trees, n <= 6", "identities"),
    (14, "Catalan, Schroeder-Hipparchus and f-vector counts", "enumeration"),
]

RESULTS: dict = {}


def summary_lines() -> list[str]:
    lines = []
    for number, title, _ in CRITERIA:
        if number in RESULTS:
            ok, result = RESULTS[number]
            lines.append(f"{'PASS' if ok else 'FAIL'} criterion {number:2d}: {title}")
            lines += ["    " + line for line in result.lines() if line.startswith(("INFO", "FAIL"))]
    return lines


@pytest.mark.parametrize("number,title,suite", CRITERIA, ids=[f"criterion-{c[0]:02d}-{c[2]}" for c in CRITERIA])
def test_criterion(number, title, suite):
    result = run_suite(suite)
    RESULTS[number] = (result.ok, result)
    print(f"{'PASS' if result.ok else 'FAIL'} criterion {number:2d}: {title}")
    for line in result.lines():
        print("    " + line)
    failed = [line for line in result.lines() if line.startswith("FAIL")]
    assert result.ok, "\n".join(failed)


if __name__ == "__main__":
    status = 0
    for number, title, suite in CRITERIA:
        result = run_suite(suite)
        print(f"{'PASS' if result.ok else 'FAIL'} criterion {number:2d}: {title}", flush=True)
        for line in result.lines():
            if line.startswith(("INFO", "FAIL")):
                print("    " + line)
        status |= not result.ok
    sys.exit(status)
