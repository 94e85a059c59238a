"""Independent brute-force oracles used by the tests.

Nothing here shares code paths with the library implementations it checks:
chains are evaluated with Fractions, congruences by exhaustive search,
quotient singularities by enumerating invariant monomials of an explicit
sublattice of the exponent plane and reading the Hilbert-basis relations.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key

from antiflips.exact import IntMatrix, smith_normal_form_with_inverses
from antiflips.singularities import SMOOTH_SURFACE, SurfaceCQS


def eval_chain_fractions(chain) -> Fraction:
    """Evaluate b1 - 1/(b2 - 1/(...)) by direct rational arithmetic."""
    value = Fraction(chain[-1])
    for b in reversed(chain[:-1]):
        value = b - 1 / value
    return value


def brute_congruence(a: int, b: int, n: int) -> int | None:
    for t in range(n):
        if (a * t - b) % n == 0:
            return t
    return None


def wahl_chain_generator(max_len: int):
    """All Wahl chains of length <= max_len via the classical recursion:
    start from [4]; append 2 and bump the first entry, or prepend 2 and bump
    the last."""
    level = [(4,)]
    seen = [(4,)]
    for _ in range(max_len - 1):
        nxt = []
        for ch in level:
            nxt.append((ch[0] + 1,) + ch[1:] + (2,))
            nxt.append((2,) + ch[:-1] + (ch[-1] + 1,))
        level = nxt
        seen.extend(level)
    return seen


def reid_tai_ages(r: int, weights) -> list[Fraction]:
    return [
        sum(Fraction((j * w) % r, r) for w in weights) for j in range(1, r)
    ]


# -- invariant-monomial lattice oracle ----------------------------------------

def lattice_basis_2d(gens: list[tuple[int, int]]) -> tuple[tuple[int, int], tuple[int, int]]:
    """A basis of the rank-2 lattice spanned by ``gens`` (rows)."""
    a = IntMatrix.from_rows(gens)
    _, d, _, _, vinv = smith_normal_form_with_inverses(a)
    rows = []
    for i in range(2):
        di = d.entries[i][i] if i < len(d.entries) and i < len(d.entries[0]) else 0
        if di == 0:
            raise ValueError("lattice does not have rank 2")
        rows.append(tuple(di * x for x in vinv.row(i)))
    return rows[0], rows[1]


def _det2(u, v) -> int:
    return u[0] * v[1] - u[1] * v[0]


def _member(basis, point) -> bool:
    b1, b2 = basis
    d = _det2(b1, b2)
    s, t = _det2(point, b2), _det2(b1, point)
    return s % d == 0 and t % d == 0


def cqs_from_quadrant_lattice(gens: list[tuple[int, int]]) -> SurfaceCQS:
    """The cyclic quotient germ whose invariant lattice is spanned by
    ``gens`` with cone the first quadrant.

    Enumerates the Hilbert basis of the semigroup and reads the singularity
    off the chain of generator relations u_{i-1} + u_{i+1} = a_i * u_i.
    """
    basis = lattice_basis_2d(gens)
    index = abs(_det2(*basis))
    x0 = next(x for x in range(1, index + 1) if _member(basis, (x, 0)))
    y0 = next(y for y in range(1, index + 1) if _member(basis, (0, y)))
    cands = {
        (x, y)
        for x in range(x0 + 1)
        for y in range(y0 + 1)
        if (x, y) != (0, 0) and _member(basis, (x, y))
    }
    irreducible = [
        u
        for u in cands
        if not any(
            v != u and v[0] <= u[0] and v[1] <= u[1] and (u[0] - v[0], u[1] - v[1]) in cands
            for v in cands
        )
    ]
    # ascending angle from the x-axis; one irreducible per ray
    hb = sorted(irreducible, key=cmp_to_key(lambda u, v: _det2(v, u)))
    if len(hb) == 2:
        return SMOOTH_SURFACE
    entries = []
    for i in range(1, len(hb) - 1):
        sx = hb[i - 1][0] + hb[i + 1][0]
        sy = hb[i - 1][1] + hb[i + 1][1]
        ax, rx = divmod(sx, hb[i][0]) if hb[i][0] else (None, 1)
        ay, ry = divmod(sy, hb[i][1]) if hb[i][1] else (None, 1)
        if ax is None:
            ax, rx = ay, ry
        if ay is None:
            ay, ry = ax, rx
        assert rx == 0 and ry == 0 and ax == ay and ax >= 2, (hb, i)
        entries.append(ax)
    value = eval_chain_fractions(entries)
    m, w = value.numerator, value.denominator
    return SurfaceCQS(m, (1, m - w))


def s1_lattice_oracle(delta: int, rho: int) -> SurfaceCQS:
    """Normalization of the first fiber chart, computed from scratch.

    The normalization of (XYZ = Y^delta + Z^delta) is the toric surface on
    the exponent lattice spanned by (delta-1, 1) and (1, delta-1); the chart
    group acts with weight 1 on the first generator and rho on the second.
    The quotient corresponds to the kernel sublattice of that character.
    """
    zvec, yvec = (delta - 1, 1), (1, delta - 1)
    gens = [tuple(delta * x for x in zvec), tuple(delta * x for x in yvec)]
    for a in range(delta):
        for b in range(delta):
            if (a + b * rho) % delta == 0:
                gens.append((a * zvec[0] + b * yvec[0], a * zvec[1] + b * yvec[1]))
    return cqs_from_quadrant_lattice(gens)


def t1_lattice_oracle(delta: int) -> SurfaceCQS:
    return cqs_from_quadrant_lattice([(delta - 1, 1), (1, delta - 1)])


def cyclic_pair_oracle(m: int, a: int) -> SurfaceCQS:
    """Germ of A^2 / (1/m)(1, a) with a possibly sharing a factor with m,
    from the invariant lattice {(i, j) : i + a*j = 0 mod m}."""
    gens = [(m, 0), (0, m)]
    for i in range(m):
        for j in range(m):
            if (i + a * j) % m == 0:
                gens.append((i, j))
    return cqs_from_quadrant_lattice(gens)


def small_presolutions(target_delta: int, count: int, max_m: int = 15, max_c: int = 8):
    """Deterministic extremal P-resolutions with the given delta and small
    indices.  (K.C+ = delta/(m1'*m2') > 0 holds automatically, so every
    such tuple carries a relatively ample canonical class.)"""
    from math import gcd

    from antiflips.presolution import ExtremalPRes

    out = []
    for c in range(1, max_c + 1):
        for m1 in range(1, max_m + 1):
            for a1 in range(1, m1 + 1):
                if (m1, a1) != (1, 1) and (a1 >= m1 or gcd(m1, a1) != 1):
                    continue
                for m2 in range(1, max_m + 1):
                    for a2 in range(1, m2 + 1):
                        if (m2, a2) != (1, 1) and (a2 >= m2 or gcd(m2, a2) != 1):
                            continue
                        if c * m1 * m2 - m1 * a2 - m2 * a1 != target_delta:
                            continue
                        out.append(ExtremalPRes.from_params(m1, a1, m2, a2, c))
                        if len(out) >= count:
                            return out
    return out
