import itertools

import pytest
from hypothesis import strategies as st

from seidel_skew.tournament import Tournament, paley_tournament, transitive_tournament

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def cycle3():
    return Tournament([[0, 1, 0], [0, 0, 1], [1, 0, 0]])


@pytest.fixture
def edge2():
    return Tournament([[0, 1], [0, 0]])


@pytest.fixture
def trans3():
    return transitive_tournament(3)


@pytest.fixture
def trans4():
    return transitive_tournament(4)


@pytest.fixture(scope="session")
def paley7():
    return paley_tournament(7)


def tournament_from_bits(n, bits):
    rows = [[0] * n for _ in range(n)]
    for (i, j), b in zip(itertools.combinations(range(n), 2), bits):
        if b:
            rows[i][j] = 1
        else:
            rows[j][i] = 1
    return Tournament(rows)


@st.composite
def tournaments(draw, min_size=0, max_size=9):
    n = draw(st.integers(min_size, max_size))
    bits = draw(st.lists(st.booleans(), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    return tournament_from_bits(n, bits)


def all_tournaments(n):
    for bits in itertools.product((0, 1), repeat=n * (n - 1) // 2):
        yield tournament_from_bits(n, bits)


# -- independent determinant oracle ------------------------------------------

def _perm_sign(p):
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _pmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def leibniz_char_poly(m):
    """Coefficient list (ascending) of det(M - xI) by summing over permutations."""
    n = len(m)
    total = [0] * (n + 1)
    for p in itertools.permutations(range(n)):
        term = [_perm_sign(p)]
        for i in range(n):
            entry = [m[i][p[i]], -1] if p[i] == i else [m[i][p[i]]]
            term = _pmul(term, entry)
        for k, c in enumerate(term):
            total[k] += c
    while total and total[-1] == 0:
        total.pop()
    return total
