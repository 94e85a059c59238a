"""Exact integer kernel: Bezout, linear congruences, Smith normal form.

Everything here runs on Python's arbitrary-precision integers.  No floating
point is used anywhere in the package; rational values are
``fractions.Fraction`` instances.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InvalidInput, NoSolution

Rational = Fraction


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: return ``(g, x, y)`` with ``g = gcd(a, b) >= 0`` and
    ``a*x + b*y = g``.  ``egcd(0, 0)`` returns ``(0, 0, 0)``.
    """
    if a == 0 and b == 0:
        return 0, 0, 0
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def modinv(a: int, n: int) -> int:
    g, x, _ = egcd(a, n)
    if g != 1:
        raise NoSolution(f"{a} is not invertible mod {n}")
    return x % n


def solve_congruence(a: int, b: int, n: int) -> int:
    """Smallest t in [0, n) with ``a*t = b (mod n)``.

    Raises :class:`NoSolution` unless gcd(a, n) divides b.  When the gcd is 1
    the solution is unique in [0, n); otherwise the minimal representative of
    the solution class mod n/g is returned.
    """
    if n <= 0:
        raise InvalidInput("modulus must be positive")
    a %= n
    b %= n
    g = gcd(a, n)
    if b % g != 0:
        raise NoSolution(f"gcd({a}, {n}) = {g} does not divide {b}")
    if a == 0:
        return 0
    n_red = n // g
    return (b // g) * modinv(a // g, n_red) % n_red


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, stored as a tuple of row tuples."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.entries or not self.entries[0]:
            raise InvalidInput("matrix must be nonempty")
        width = len(self.entries[0])
        if any(len(row) != width for row in self.entries):
            raise InvalidInput("ragged rows")

    @classmethod
    def from_rows(cls, rows) -> "IntMatrix":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0])

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries[ij[0]][ij[1]]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise InvalidInput("dimension mismatch")
        cols = list(zip(*other.entries))
        return IntMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.entries
            )
        )

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries)))

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        if self.nrows != self.ncols:
            raise InvalidInput("determinant of a non-square matrix")
        n = self.nrows
        m = [list(row) for row in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def inverse_unimodular(self) -> "IntMatrix":
        """Inverse of a matrix with determinant +-1 (adjugate method)."""
        d = self.det()
        if d not in (1, -1):
            raise InvalidInput("matrix is not unimodular")
        n = self.nrows
        adj = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                minor = IntMatrix(
                    tuple(
                        tuple(self.entries[r][c] for c in range(n) if c != j)
                        for r in range(n)
                        if r != i
                    )
                ) if n > 1 else None
                cof = 1 if minor is None else minor.det()
                adj[j][i] = (-1) ** (i + j) * cof * d
        return IntMatrix.from_rows(adj)

    def is_diagonal(self) -> bool:
        return all(
            self.entries[i][j] == 0
            for i in range(self.nrows)
            for j in range(self.ncols)
            if i != j
        )

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(min(self.nrows, self.ncols)))


def _pivot(m: list[list[int]], start: int) -> tuple[int, int] | None:
    # Smallest nonzero |entry| in the trailing submatrix; ties go to the
    # lowest row, then the lowest column.  Pinned for deterministic output.
    best = None
    for i in range(start, len(m)):
        for j in range(start, len(m[0])):
            v = abs(m[i][j])
            if v != 0 and (best is None or v < best[0]):
                best = (v, i, j)
    return None if best is None else (best[1], best[2])


def smith_normal_form(a: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form: ``(U, D, V)`` with ``U @ A @ V == D``.

    U and V are unimodular, D is diagonal with nonnegative entries forming a
    divisibility chain d1 | d2 | ...
    """
    u, d, v, _, _ = smith_normal_form_with_inverses(a)
    return u, d, v


def smith_normal_form_with_inverses(
    a: IntMatrix,
) -> tuple[IntMatrix, IntMatrix, IntMatrix, IntMatrix, IntMatrix]:
    """As :func:`smith_normal_form`, also returning ``U^-1`` and ``V^-1``."""
    nr, nc = a.nrows, a.ncols
    d = [list(row) for row in a.entries]
    u = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]
    uinv = [row[:] for row in u]
    v = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)]
    vinv = [row[:] for row in v]

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]
        for r in uinv:
            r[i], r[j] = r[j], r[i]

    def swap_cols(i, j):
        for r in d:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]
        vinv[i], vinv[j] = vinv[j], vinv[i]

    def add_row(src, dst, k):
        # row[dst] += k * row[src]
        d[dst] = [x + k * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]
        for r in uinv:
            r[src] -= k * r[dst]

    def add_col(src, dst, k):
        for r in d:
            r[dst] += k * r[src]
        for r in v:
            r[dst] += k * r[src]
        vinv[src] = [x - k * y for x, y in zip(vinv[src], vinv[dst])]

    def negate_row(i):
        d[i] = [-x for x in d[i]]
        u[i] = [-x for x in u[i]]
        for r in uinv:
            r[i] = -r[i]

    n = min(nr, nc)
    for t in range(n):
        while True:
            p = _pivot(d, t)
            if p is None:
                break
            pi, pj = p
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            # Reduce the pivot row and column.
            dirty = False
            for i in range(t + 1, nr):
                if d[i][t] != 0:
                    add_row(t, i, -(d[i][t] // d[t][t]))
                    dirty = dirty or d[i][t] != 0
            for j in range(t + 1, nc):
                if d[t][j] != 0:
                    add_col(t, j, -(d[t][j] // d[t][t]))
                    dirty = dirty or d[t][j] != 0
            if dirty:
                continue
            # Pivot divides its row and column; enforce divisibility into the
            # rest of the submatrix by folding a bad entry into the pivot col.
            bad = None
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if d[i][j] % d[t][t] != 0:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(bad, t, 1)

    for i in range(n):
        if d[i][i] < 0:
            negate_row(i)

    U = IntMatrix.from_rows(u)
    D = IntMatrix.from_rows(d)
    V = IntMatrix.from_rows(v)
    Uinv = IntMatrix.from_rows(uinv)
    Vinv = IntMatrix.from_rows(vinv)
    assert (U @ a @ V).entries == D.entries
    assert (U @ Uinv).entries == IntMatrix.identity(nr).entries
    assert (Vinv @ V).entries == IntMatrix.identity(nc).entries
    return U, D, V, Uinv, Vinv
