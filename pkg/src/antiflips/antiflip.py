"""Toric construction of the antiflip of a diagonal smoothing.

Starting from an extremal P-resolution, build the initial extremal
neighbourhood, run the index/coefficient recursions, assemble the five
lattice vectors

    w1, w2, w3 = standard basis,
    w4 = m1'*w1 + w2 - c(k-1)*w3,
    w5 = -m2'*w1 + w2 - c(k)*w3,

and read off the two charts of the anticanonical model:

    chart 1 of order delta with weights (-rho - 1, rho, 1),
    chart 2 of order F = m1' + m2' with weights (lam, 1, -1),

where rho = r*m2' + s*c(k) for any Bezout pair r*m1' - s*c(k-1) = 1 (well
defined mod delta) and lam = c(k-1) - c(k).  The same weights are recovered
independently from Smith normal forms of the two lattice bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import (
    DeltaTooSmall,
    InternalInvariantError,
    InvalidInput,
    NonIntegralA1,
    NoTermination,
)
from .exact import IntMatrix, egcd, smith_normal_form_with_inverses
from .presolution import ExtremalPRes
from .singularities import ThreefoldCQS

Vec3 = tuple[int, int, int]

_MAX_SEQ = 10_000


def initial_neighborhood(p: ExtremalPRes) -> tuple[int, int, int, int]:
    """Wahl parameters (m1, a1, m2, a2) of the extremal neighbourhood whose
    flip recovers the P-resolution.

    m2 = m1'; a2 = m1' - a1' (or 1 at a smooth side); m1 = delta*m1' + m2';
    a1 = (delta + m1*m2 - a2*m1) / m2, whose integrality is asserted.
    """
    d = p.delta
    m1p, a1p, m2p = p.w1.m, p.w1.a, p.w2.m
    m2 = m1p
    a2 = m1p - a1p if m1p != a1p else 1
    m1 = d * m1p + m2p
    num = d + m1 * m2 - a2 * m1
    if num % m2 != 0:
        raise NonIntegralA1(f"a1 = {num}/{m2} is not an integer for {p.display()}")
    a1 = num // m2
    return m1, a1, m2, a2


@dataclass(frozen=True)
class MoriData:
    """The index sequence d and coefficient sequence c of the neighbourhood.

    d(1) = m1, d(2) = m2, d(i+1) = delta*d(i) - d(i-1); k is the first index
    with d(k) <= 0.  c(1) = a1, c(2) = m2 - a2, same three-term recursion up
    to i = k - 1, then extended by c(k+1) = -c(k-1) and c(k+2) = -c(k).
    """

    m1: int
    a1: int
    m2: int
    a2: int
    delta: int
    d_seq: tuple[int, ...]
    c_seq: tuple[int, ...]
    k: int

    def d(self, i: int) -> int:
        return self.d_seq[i - 1]

    def c(self, i: int) -> int:
        return self.c_seq[i - 1]


def mori_sequences(p: ExtremalPRes) -> MoriData:
    m1, a1, m2, a2 = initial_neighborhood(p)
    d = p.delta
    d_seq = [m1, m2]
    while d_seq[-1] > 0:
        if len(d_seq) > _MAX_SEQ:
            raise NoTermination("index sequence stayed positive; invalid input")
        d_seq.append(d * d_seq[-1] - d_seq[-2])
    k = len(d_seq)
    if d_seq[k - 2] <= 0:
        raise InternalInvariantError("expected d(k-1) > 0 at termination")
    c_seq = [a1, m2 - a2]
    for i in range(2, k):  # three-term recursion defines c(3) .. c(k)
        c_seq.append(d * c_seq[-1] - c_seq[-2])
    c_seq.append(-c_seq[k - 2])  # c(k+1) = -c(k-1)
    c_seq.append(-c_seq[k - 1])  # c(k+2) = -c(k)
    data = MoriData(m1, a1, m2, a2, d, tuple(d_seq), tuple(c_seq), k)
    check = -(p.w1.m * data.c(k) + p.w2.m * data.c(k - 1))
    if check != d:
        raise InternalInvariantError(
            f"delta identity failed: -(m1'*c(k) + m2'*c(k-1)) = {check} != {d}"
        )
    return data


@dataclass(frozen=True)
class FanData:
    """The five lattice vectors and the four maximal cones.

    sigma1, sigma2 subdivide the ambient cone (w2, w3, w4, w5) into the fan
    of the smoothing of the P-resolution; sigma3, sigma4 give the other
    subdivision, the fan of the anticanonical model.
    """

    w1: Vec3
    w2: Vec3
    w3: Vec3
    w4: Vec3
    w5: Vec3

    @property
    def sigma1(self) -> tuple[Vec3, Vec3, Vec3]:
        return (self.w2, self.w3, self.w4)

    @property
    def sigma2(self) -> tuple[Vec3, Vec3, Vec3]:
        return (self.w2, self.w3, self.w5)

    @property
    def sigma3(self) -> tuple[Vec3, Vec3, Vec3]:
        return (self.w2, self.w4, self.w5)

    @property
    def sigma4(self) -> tuple[Vec3, Vec3, Vec3]:
        return (self.w3, self.w4, self.w5)

    @property
    def ambient_cone(self) -> tuple[Vec3, Vec3, Vec3, Vec3]:
        return (self.w2, self.w3, self.w4, self.w5)


def det3(u: Vec3, v: Vec3, w: Vec3) -> int:
    return (
        u[0] * (v[1] * w[2] - v[2] * w[1])
        - u[1] * (v[0] * w[2] - v[2] * w[0])
        + u[2] * (v[0] * w[1] - v[1] * w[0])
    )


def _primitive(v: Vec3) -> bool:
    return gcd(gcd(abs(v[0]), abs(v[1])), abs(v[2])) == 1


def build_fans(p: ExtremalPRes) -> FanData:
    seq = mori_sequences(p)
    m1p, m2p = p.w1.m, p.w2.m
    ck1, ck = seq.c(seq.k - 1), seq.c(seq.k)
    fan = FanData(
        w1=(1, 0, 0),
        w2=(0, 1, 0),
        w3=(0, 0, 1),
        w4=(m1p, 1, -ck1),
        w5=(-m2p, 1, -ck),
    )
    for v in (fan.w4, fan.w5):
        if not _primitive(v):
            raise InternalInvariantError(f"non-primitive ray {v}")
    # Support bookkeeping: both subdivisions cover the ambient cone exactly
    # when the new ray pairs sit strictly on opposite sides of the common
    # separating plane.
    d234 = det3(fan.w2, fan.w3, fan.w4)
    d235 = det3(fan.w2, fan.w3, fan.w5)
    d452 = det3(fan.w4, fan.w5, fan.w2)
    d453 = det3(fan.w4, fan.w5, fan.w3)
    if not (d234 > 0 > d235 and (d452 > 0 > d453 or d453 > 0 > d452)):
        raise InternalInvariantError("cone subdivisions do not cover the support")
    checks = (
        (abs(d234), m1p),
        (abs(d235), m2p),
        (abs(det3(fan.w2, fan.w4, fan.w5)), p.delta),
        (abs(det3(fan.w3, fan.w4, fan.w5)), m1p + m2p),
    )
    for got, expected in checks:
        if got != expected:
            raise InternalInvariantError(f"cone index {got} != {expected}")
    return fan


def cone_coordinates(
    gens: tuple[Vec3, Vec3, Vec3], point: Vec3
) -> tuple[Fraction, Fraction, Fraction]:
    """Coordinates of a point in the basis of a simplicial cone (Cramer)."""
    d = det3(*gens)
    if d == 0:
        raise InvalidInput("degenerate cone")
    return tuple(
        Fraction(det3(*(gens[:i] + (point,) + gens[i + 1 :])), d) for i in range(3)
    )


def in_cone(gens: tuple[Vec3, Vec3, Vec3], point: Vec3) -> bool:
    return all(x >= 0 for x in cone_coordinates(gens, point))


@dataclass(frozen=True)
class AntiflipCharts:
    """Chart data of the anticanonical model: orders, weights, invariants."""

    delta: int
    rho: int  # canonical representative in [0, delta)
    lam: int
    F: int
    chart1: ThreefoldCQS  # order delta, weights (-rho-1, rho, 1)
    chart2: ThreefoldCQS  # order F, weights (lam, 1, -1)
    bezout: tuple[int, int]
    m1p: int
    m2p: int


def antiflip_charts(p: ExtremalPRes) -> AntiflipCharts:
    """Closed-form chart extraction; requires delta >= 2 (chart 1 has order
    delta, and delta = 1 neighbourhoods flip terminally instead)."""
    d = p.delta
    if d < 2:
        raise DeltaTooSmall(f"delta = {d} < 2")
    seq = mori_sequences(p)
    m1p, m2p = p.w1.m, p.w2.m
    ck1, ck = seq.c(seq.k - 1), seq.c(seq.k)
    g, r, s_neg = egcd(m1p, ck1)
    if g != 1:
        raise InternalInvariantError(f"gcd(m1', c(k-1)) = {g} != 1")
    s = -s_neg  # r*m1' - s*c(k-1) = 1
    rho = (r * m2p + s * ck) % d
    lam = ck1 - ck
    F = m1p + m2p
    return AntiflipCharts(
        delta=d,
        rho=rho,
        lam=lam,
        F=F,
        chart1=ThreefoldCQS(d, (-rho - 1, rho, 1)),
        chart2=ThreefoldCQS(F, (lam, 1, -1)),
        bezout=(r, s),
        m1p=m1p,
        m2p=m2p,
    )


def _quotient_weights(
    lattice_rows: tuple[Vec3, Vec3, Vec3],
    basis: tuple[Vec3, Vec3, Vec3],
    cone_gens: tuple[Vec3, Vec3, Vec3],
) -> tuple[int, tuple[int, int, int]]:
    """Order and action weights of N / <lattice_rows> on the chart of
    ``cone_gens`` via the Smith normal form.

    ``lattice_rows`` holds the coordinates of the cone generators in the
    (unimodular) ``basis``.  The quotient is cyclic here; its generator is
    read off the inverse column transform, and its weight on chart
    coordinate i is the i-th coefficient of the generator in the cone basis,
    scaled by the group order.
    """
    a = IntMatrix.from_rows(lattice_rows)
    _, dmat, _, _, vinv = smith_normal_form_with_inverses(a)
    diag = dmat.diagonal()
    if diag[0] != 1 or diag[1] != 1:
        raise InternalInvariantError(f"unexpected invariant factors {diag}")
    order = diag[2]
    gen_coeffs = vinv.row(2)  # preimage of the order-`order` factor
    gen = tuple(
        sum(gen_coeffs[t] * basis[t][i] for t in range(3)) for i in range(3)
    )
    coords = cone_coordinates(cone_gens, gen)
    weights = []
    for x in coords:
        scaled = x * order
        if scaled.denominator != 1:
            raise InternalInvariantError("generator weight is not integral")
        weights.append(scaled.numerator % order)
    return order, tuple(weights)


def charts_via_snf(p: ExtremalPRes) -> AntiflipCharts:
    """Independent recomputation of both charts through Smith normal forms.

    Cross-checks the closed form: the SNF path recovers some generator of
    each cyclic quotient group, so its weight triple must be a unit multiple
    of the closed-form triple; orders must match exactly.
    """
    charts = antiflip_charts(p)
    seq = mori_sequences(p)
    fan = build_fans(p)
    m1p, m2p = p.w1.m, p.w2.m
    ck1, ck = seq.c(seq.k - 1), seq.c(seq.k)

    order1, wts1 = _quotient_weights(
        ((1, 0, 0), (0, m1p, -ck1), (0, -m2p, -ck)),
        (fan.w2, fan.w1, fan.w3),
        fan.sigma3,
    )
    order2, wts2 = _quotient_weights(
        ((1, 0, 0), (0, m1p, 1), (0, -m2p, 1)),
        (fan.w3, fan.w1, fan.w2),
        fan.sigma4,
    )
    if order1 != charts.delta or order2 != charts.F:
        raise InternalInvariantError("SNF chart orders disagree with closed form")
    _match_up_to_unit(wts1, charts.chart1.weights, order1)
    _match_up_to_unit(wts2, charts.chart2.weights, order2)
    return AntiflipCharts(
        delta=order1,
        rho=charts.rho,
        lam=charts.lam,
        F=order2,
        chart1=ThreefoldCQS(order1, wts1),
        chart2=ThreefoldCQS(order2, wts2),
        bezout=charts.bezout,
        m1p=m1p,
        m2p=m2p,
    )


def _match_up_to_unit(
    got: tuple[int, int, int], expected: tuple[int, int, int], order: int
) -> None:
    # Two generators of the same cyclic action differ by a unit mod order.
    for u in range(1, max(order, 2)):
        if gcd(u, order) != 1:
            continue
        if all(u * e % order == g for g, e in zip(got, expected)):
            return
    raise InternalInvariantError(
        f"weights {got} are not a unit multiple of {expected} mod {order}"
    )


@dataclass(frozen=True)
class MFanRays:
    """Rays of the parameter surface fan: v1 = (1, 0), v2 = (delta, 1),
    v(i+1) = delta*v(i) - v(i-1).  All rays are primitive."""

    delta: int
    rays: tuple[tuple[int, int], ...]


def mfan_rays(delta: int, count: int) -> MFanRays:
    if delta < 1:
        raise InvalidInput("delta must be >= 1")
    if count < 2:
        raise InvalidInput("need at least two rays")
    rays = [(1, 0), (delta, 1)]
    while len(rays) < count:
        (x1, y1), (x2, y2) = rays[-2], rays[-1]
        rays.append((delta * x2 - x1, delta * y2 - y1))
    for v in rays:
        if gcd(abs(v[0]), abs(v[1])) != 1:
            raise InternalInvariantError(f"non-primitive ray {v}")
    return MFanRays(delta, tuple(rays))
