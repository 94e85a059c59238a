import random

import pytest

from antiflips.errors import NoSolution
from antiflips.exact import (
    IntMatrix,
    egcd,
    smith_normal_form,
    smith_normal_form_with_inverses,
    solve_congruence,
)
from oracles import brute_congruence


def test_egcd_identity_cases():
    assert egcd(1, 0) == (1, 1, 0)
    assert egcd(3, 0) == (3, 1, 0)
    assert egcd(0, 0) == (0, 0, 0)


def test_egcd_bezout_exhaustive():
    for a in range(-30, 31):
        for b in range(-30, 31):
            g, x, y = egcd(a, b)
            assert g >= 0
            assert a * x + b * y == g
            if a or b:
                assert a % g == 0 and b % g == 0


def test_egcd_example_4_6():
    g, x, y = egcd(4, 6)
    assert g == 2 and 4 * x + 6 * y == 2
    # the stated oracle: some solution exists in a small window
    assert any(
        4 * u + 6 * v == 2 for u in range(-6, 7) for v in range(-6, 7)
    )


def test_solve_congruence_examples():
    assert solve_congruence(-2, -1, 3) == 2
    assert solve_congruence(1, 0, 5) == 0
    with pytest.raises(NoSolution):
        solve_congruence(2, 1, 4)


def test_solve_congruence_brute_force():
    for n in range(1, 25):
        for a in range(-n, n):
            for b in range(-n, n):
                expected = brute_congruence(a, b, n)
                if expected is None:
                    with pytest.raises(NoSolution):
                        solve_congruence(a, b, n)
                else:
                    t = solve_congruence(a, b, n)
                    assert t == expected  # brute force finds the smallest
                    assert (a * t - b) % n == 0


def _check_snf(a: IntMatrix):
    u, d, v = smith_normal_form(a)
    assert (u @ a @ v).entries == d.entries
    assert u.det() in (1, -1) and v.det() in (1, -1)
    assert d.is_diagonal()
    diag = d.diagonal()
    assert all(x >= 0 for x in diag)
    for x, y in zip(diag, diag[1:]):
        if x != 0:
            assert y % x == 0
        else:
            assert y == 0
    if a.nrows == a.ncols:
        prod = 1
        for x in diag:
            prod *= x
        assert prod == abs(a.det())
    return diag


def test_snf_identity():
    ident = IntMatrix.identity(3)
    u, d, v = smith_normal_form(ident)
    assert d.entries == ident.entries
    assert u.entries == ident.entries
    assert v.entries == ident.entries


def test_snf_lattice_matrices():
    # (m1', a1', m2', a2', c) = (3, 1, 7, 4, 1): c(k-1) = 1, c(k) = -3, delta = 2
    a = IntMatrix.from_rows([[1, 0, 0], [0, 3, -1], [0, -7, 3]])
    assert _check_snf(a) == (1, 1, 2)
    b = IntMatrix.from_rows([[1, 0, 0], [0, 3, 1], [0, -7, 1]])
    assert _check_snf(b) == (1, 1, 10)


def test_snf_random_and_edge():
    rng = random.Random(7)
    for _ in range(200):
        a = IntMatrix.from_rows(
            [[rng.randint(-50, 50) for _ in range(3)] for _ in range(3)]
        )
        _check_snf(a)
    _check_snf(IntMatrix.from_rows([[0, 0], [0, 0]]))
    _check_snf(IntMatrix.from_rows([[2, 4, 4]]))
    _check_snf(IntMatrix.from_rows([[2], [4], [6]]))
    _check_snf(IntMatrix.from_rows([[2, 0], [0, 3]]))  # divisibility fix-up


def test_snf_random_rectangular():
    rng = random.Random(99)
    for _ in range(150):
        nr, nc = rng.randint(1, 4), rng.randint(1, 4)
        a = IntMatrix.from_rows(
            [[rng.randint(-9, 9) for _ in range(nc)] for _ in range(nr)]
        )
        _check_snf(a)


def test_snf_inverses():
    a = IntMatrix.from_rows([[6, 4], [8, 10]])
    u, d, v, uinv, vinv = smith_normal_form_with_inverses(a)
    assert (u @ uinv).entries == IntMatrix.identity(2).entries
    assert (vinv @ v).entries == IntMatrix.identity(2).entries


def test_matrix_helpers():
    a = IntMatrix.from_rows([[1, 2], [3, 4]])
    assert a.det() == -2
    assert (a @ IntMatrix.identity(2)).entries == a.entries
    m = IntMatrix.from_rows([[0, 1], [-1, 0]])
    assert (m @ m.inverse_unimodular()).entries == IntMatrix.identity(2).entries
