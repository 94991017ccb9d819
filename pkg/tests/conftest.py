"""Independent brute-force oracles shared by the tests.

Nothing here imports the enumeration or map code under test; families
are rebuilt from itertools.product and the raw definitions.
"""
import itertools

import pytest

PHI1_TABLE_N3 = [
    ("(0,1,2,3,2,1,0)", "(0,1,2,3,4,5,6)"),
    ("(0,1,2,1,2,1,0)", "(0,1,2,3,2,3,4)"),
    ("(0,1,2,1,0,1,0)", "(0,1,2,3,4,3,4)"),
    ("(0,1,2,1,0,-1,0)", "(0,1,2,3,4,5,4)"),
    ("(0,1,0,1,2,1,0)", "(0,1,2,1,2,3,4)"),
    ("(0,1,0,1,0,1,0)", "(0,1,2,1,2,1,2)"),
    ("(0,1,0,1,0,-1,0)", "(0,1,2,1,2,3,2)"),
    ("(0,1,0,-1,0,1,0)", "(0,1,2,3,2,1,2)"),
    ("(0,1,0,-1,0,-1,0)", "(0,1,2,3,2,3,2)"),
    ("(0,1,0,-1,-2,-1,0)", "(0,1,2,3,4,3,2)"),
]

PHI2_TABLE_N4 = [
    ("(0,1,2,3,4,3,2,1,0)", "(0,1,2,3,2,1,0,1,0)"),
    ("(0,1,2,3,2,3,2,1,0)", "(0,1,2,1,2,1,0,1,0)"),
    ("(0,1,2,3,2,1,2,1,0)", "(0,1,2,1,0,1,2,1,0)"),
    ("(0,1,2,1,2,3,2,1,0)", "(0,1,0,1,2,3,2,1,0)"),
    ("(0,1,2,1,2,1,2,1,0)", "(0,1,0,1,2,1,2,1,0)"),
]


def all_walks(n):
    """Every 2n-step walk as a position tuple, steps in lex order with -1 < +1."""
    for steps in itertools.product((-1, 1), repeat=2 * n):
        yield tuple(itertools.accumulate(steps, initial=0))


def oracle_member(pos, tag):
    n2 = len(pos) - 1
    interior_zeros = sum(1 for i in range(2, n2, 2) if pos[i] == 0)
    t = pos[n2] == 0 and min(pos[1:n2], default=0) >= 0
    return {
        "S": True,
        "A": pos[n2] == 0,
        "B": 0 not in pos[1:],
        "Aprime": pos[1] > 0 and pos[n2] == 0,
        "Bprime": min(pos[1:]) > 0,
        "T": t,
        "C": t and interior_zeros == 0,
        "D": t and interior_zeros == 1,
    }[tag]


def oracle_family(n, tag):
    return [w for w in all_walks(n) if oracle_member(w, tag)]


def oracle_valleys(pos):
    """a_k, b_k straight from the min/max definitions (backward in k)."""
    two_n = len(pos) - 1
    M = max(pos[1:])
    a = {M: min(i for i in range(1, two_n + 1) if pos[i] == M)}
    b = {0: 0}
    for k in range(M - 1, 0, -1):
        hits = [i for i in range(1, a[k + 1] + 1) if pos[i] == k]
        a[k], b[k] = min(hits), max(hits)
    return M, a, b


def oracle_ascents(pos):
    two_n = len(pos) - 1
    h = pos[two_n] // 2
    c, d = {}, {0: 0}
    for k in range(1, h + 1):
        hits = [i for i in range(d[k - 1], two_n + 1) if pos[i] == k]
        c[k], d[k] = min(hits), max(hits)
    return h, c, d


@pytest.fixture(scope="session")
def phi1_table():
    return PHI1_TABLE_N3


@pytest.fixture(scope="session")
def phi2_table():
    return PHI2_TABLE_N4
