"""Special fiber of the antiflip and the (f, p) correspondence.

For delta >= 3 the fiber is non-normal along a rational curve with an
A_{delta-1} transversal slice; the minimal resolution of its normalization
carries a chain

    [a_r, ..., a_1] - (-1) - [c_1, ..., c_l] - (-1) - [b_1, ..., b_s]

whose outer chains resolve the two conjugate branches of the orbifold normal
crossing at the second chart and whose middle chain resolves the
normalization of the first chart.

For delta = 2 the fiber acquires two pinch points and the data collapses to
a pair (f, p) = (F/2, lam/2); conversely every coprime pair 1 <= p <= f/2
arises from exactly two extremal P-resolutions, the single exception being
the cone over the rational normal curve of degree four.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from math import gcd

from .antiflip import AntiflipCharts, antiflip_charts
from .contfrac import (
    Chain,
    MarkedChain,
    Piece,
    format_diagram,
    hj_expand,
    reverse,
)
from .errors import (
    DeltaTooSmall,
    ExcludedCase,
    InternalInvariantError,
    InvalidFP,
    NotDelta2,
)
from .exact import solve_congruence
from .presolution import Delta2Case, ExtremalPRes, case_analysis_delta2
from .singularities import (
    ONCData,
    SurfaceCQS,
    min_resolution,
    onc_from_threefold,
    reduce_cyclic_pair,
    wahl_chain,
)


# -- chart equations ---------------------------------------------------------

@dataclass(frozen=True)
class ChartEquations:
    chart1: str
    chart2: str
    gluing: tuple[str, str, str]


def _mono(*factors: tuple[str, int]) -> str:
    parts = []
    for name, exp in factors:
        parts.append(name if exp == 1 else f"{name}^{exp}")
    return "·".join(parts)


def chart_equations(charts: AntiflipCharts) -> ChartEquations:
    """Local equations of the two fiber charts, with the gluing monomials."""
    d, F = charts.delta, charts.F
    if d < 2:
        raise DeltaTooSmall(f"delta = {d} < 2")
    w1 = ",".join(str(w) for w in charts.chart1.weights)
    w2 = ",".join(str(w) for w in charts.chart2.weights)
    eq1 = f"X1·Y1·Z1 = Y1^{d} + Z1^{d} in A^3/(1/{d})({w1})"
    eq2 = (
        f"Y2·Z2 = {_mono(('X2', charts.m1p), ('Z2', d))}"
        f" + {_mono(('X2', charts.m2p), ('Y2', d))}"
        f" in A^3/(1/{F})({w2})"
    )
    gluing = (
        f"X1^{d} = X2^{-F}",
        f"Y1^{d} = {_mono(('X2', charts.m2p), ('Y2', d))}",
        f"Z1^{d} = {_mono(('X2', charts.m1p), ('Z2', d))}",
    )
    return ChartEquations(eq1, eq2, gluing)


# -- normalization of the first chart ----------------------------------------

def t1_normalization(delta: int) -> SurfaceCQS:
    """Normalization of (XYZ = Y^delta + Z^delta) in A^3, before dividing by
    the chart group: the germ 1/(delta(delta-2))(1, (delta-2)(delta-1) - 1).
    """
    if delta < 3:
        raise DeltaTooSmall("the formula degenerates for delta <= 2")
    return SurfaceCQS(delta * (delta - 2), (1, (delta - 2) * (delta - 1) - 1))


def s1_normalization(delta: int, rho: int) -> SurfaceCQS:
    """Singularity of the normalized first chart of the fiber.

    The chart group of order delta acts monomially on the normalization
    above, with weight -rho-1 on the degree-delta(delta-2) invariants and
    rho, 1 on the two middle ones.  With d = gcd(rho+1, delta):

    * d = 1: the exponent t solves t(rho+1) = rho mod delta and the quotient
      is 1/(delta^2(delta-2))(1, delta^2(delta-2) - t*delta(delta-2) - delta + 1);
    * d > 1: writing rho+1 = d*h and delta = d*j, the congruence divides
      down to t*h = rho mod j (h is invertible mod j, so the solution is
      unique) and the quotient is
      1/(j*delta(delta-2))(1, j*delta(delta-2) - t*delta(delta-2) - d(delta-1)).

    Either form may come out non-reduced when the action has reflections;
    the germ is returned reduced and normalized, possibly smooth.
    """
    if delta < 3:
        raise DeltaTooSmall("handled by the delta = 2 pinch-point analysis")
    rho %= delta
    base = delta * (delta - 2)
    d = gcd(rho + 1, delta)
    if d == 1:
        t = solve_congruence(-(rho + 1), -rho, delta)
        order = delta * base
        weight = order - t * base - delta + 1
    else:
        h, j = (rho + 1) // d, delta // d
        t = solve_congruence(-h, -rho, j)
        order = j * base
        weight = order - t * base - d * (delta - 1)
    return reduce_cyclic_pair(order, weight % order)


# -- (f, p) pairs ------------------------------------------------------------

@dataclass(frozen=True)
class FPPair:
    """A coprime pair with 1 <= p <= f/2 labelling the conjugate branch
    singularities 1/f(p, 1) and 1/f(p, -1) of the normalized fiber."""

    f: int
    p: int

    def __post_init__(self):
        if self.f < 2 or not 1 <= self.p or 2 * self.p > self.f:
            raise InvalidFP(f"need 1 <= p <= f/2, got (f, p) = ({self.f}, {self.p})")
        if gcd(self.p, self.f) != 1:
            raise InvalidFP(f"gcd({self.p}, {self.f}) != 1")


def fp_of(p: ExtremalPRes, charts: AntiflipCharts | None = None) -> FPPair:
    """The canonical (f, p) of a delta = 2 resolution: f = F/2, p = lam/2,
    folded to p <= f/2 (the two orientations give isomorphic fibers).

    The degree-4 cone (both sides smooth) is excluded.
    """
    if p.delta != 2:
        raise NotDelta2(f"delta = {p.delta}")
    analysis = case_analysis_delta2(p)
    if analysis.case is Delta2Case.SMOOTH:
        raise ExcludedCase("the degree-4 cone sits outside the correspondence")
    charts = charts if charts is not None else antiflip_charts(p)
    lam, F = charts.lam, charts.F
    if analysis.case is Delta2Case.ONE_SINGULARITY and p.w1.is_smooth and lam != 2:
        raise InternalInvariantError(f"one-singularity case must have lam = 2, got {lam}")
    if F % 2 != 0 or lam % 2 != 0:
        raise InternalInvariantError(f"F = {F} and lam = {lam} must both be even")
    f = F // 2
    p_raw = (lam // 2) % f
    if p_raw == 0:
        raise InternalInvariantError("branch weight collapsed to zero")
    p_canon = p_raw if 2 * p_raw <= f else f - p_raw
    return FPPair(f, p_canon)


def _constructions(f: int, p: int) -> tuple[ExtremalPRes, ExtremalPRes]:
    """The two resolutions for a raw coprime pair, 1 <= p <= f - 1.

    p = 1 and p = f - 1 are the closed-form mirror pair around a smooth
    side; otherwise both sides are singular and the Wahl parameters come
    from the two Bezout solves m1'*p - a1'*f = 1 and q*f - m2'*p = 1.
    """
    if f < 2 or not 1 <= p < f or gcd(p, f) != 1:
        raise InvalidFP(f"need a coprime pair with 1 <= p < f, got ({f}, {p})")
    if p == 1:
        first = ExtremalPRes.from_params(1, 1, 2 * f - 1, 2 * f - 3, 2)
        if f == 2:
            second = ExtremalPRes.from_params(3, 1, 1, 1, 2)
        else:
            second = ExtremalPRes.from_params(f + 1, 1, f - 1, f - 2, 1)
        return first, second
    if p == f - 1:
        first = ExtremalPRes.from_params(f - 1, f - 2, f + 1, 1, 1)
        second = ExtremalPRes.from_params(2 * f - 1, 2 * f - 3, 1, 1, 2)
        return first, second
    p_inv = pow(p, -1, f)
    m1p = p_inv
    a1p = (m1p * p - 1) // f
    first = ExtremalPRes.from_params(m1p, a1p, 2 * f - m1p, 2 * f - m1p + a1p - 2 * p, 1)
    m2p = f - p_inv
    q = (m2p * p + 1) // f
    second = ExtremalPRes.from_params(2 * f - m2p, 2 * p - q, m2p, m2p - q, 1)
    return first, second


def presolutions_of(fp: FPPair) -> tuple[ExtremalPRes, ExtremalPRes]:
    """The two extremal P-resolutions mapping to a canonical (f, p); both
    have delta = 2 and round-trip through :func:`fp_of`."""
    first, second = _constructions(fp.f, fp.p)
    for res in (first, second):
        if res.delta != 2:
            raise InternalInvariantError(f"construction gave delta = {res.delta}")
    return first, second


def xnu_chain(fp: FPPair) -> MarkedChain:
    """Resolution diagram of the normalized fiber: the chains of 1/f(1, p)
    and its conjugate flank the folded curve of self-intersection -5."""
    return MarkedChain(
        left=hj_expand(fp.f, fp.p),
        mark=-5,
        right=reverse(hj_expand(fp.f, fp.f - fp.p)),
    )


def xplus_chain(p: ExtremalPRes) -> MarkedChain:
    """Resolution diagram of the P-resolution: second Wahl chain reversed,
    the curve of self-intersection -c, then the first Wahl chain."""
    left = reverse(wahl_chain(p.w2)) if not p.w2.is_smooth else ()
    right = wahl_chain(p.w1) if not p.w1.is_smooth else ()
    return MarkedChain(left=left, mark=-p.c, right=right)


# -- fiber description --------------------------------------------------------

@dataclass(frozen=True)
class FiberDescription:
    delta: int
    transversal_slice: str
    local_eq_chart1: str
    onc: ONCData
    s1nu: SurfaceCQS | None
    chain: tuple[Piece, ...]
    pinch_points: int
    fp: FPPair | None
    notes: tuple[str, ...]

    @property
    def chain_display(self) -> str:
        return format_diagram(self.chain)


def fiber_description(
    p: ExtremalPRes, charts: AntiflipCharts | None = None
) -> FiberDescription:
    """Assemble the structure of the special fiber of the antiflip."""
    charts = charts if charts is not None else antiflip_charts(p)
    d = charts.delta
    eqs = chart_equations(charts)
    onc = onc_from_threefold(charts.chart2)
    notes: list[str] = [
        f"non-normal along a rational curve; transversal slice is A_{d - 1}"
    ]
    if onc.reduced_by > 1:
        notes.append(
            f"double-curve stabilizer of order {onc.reduced_by} divided out of"
            f" the second chart; orbifold normal crossing has order {onc.m}"
        )
    if d >= 3:
        s1nu = s1_normalization(d, charts.rho)
        mid: Chain = () if s1nu.is_smooth else min_resolution(s1nu)
        left = () if onc.branch_plus.is_smooth else reverse(min_resolution(onc.branch_plus))
        right = () if onc.branch_minus.is_smooth else min_resolution(onc.branch_minus)
        chain: tuple[Piece, ...] = (left, -1, mid, -1, right)
        if s1nu.is_smooth:
            notes.append("normalized first chart is smooth at the non-terminal point")
        notes.append(
            "diagram assembled from the branch germs and the normalized chart"
            " germ joined by (-1)-curves"
        )
        notes.append(
            f"non-terminal point is the quotient of a degenerate cusp"
            f" of type T^3_{{{d - 2},{d - 2}}}"
        )
        return FiberDescription(
            delta=d,
            transversal_slice=f"A_{d - 1}",
            local_eq_chart1=eqs.chart1,
            onc=onc,
            s1nu=s1nu,
            chain=chain,
            pinch_points=0,
            fp=None,
            notes=tuple(notes),
        )
    # delta = 2: two pinch points, and the fiber is classified by (f, p).
    if charts.rho % 2 == 0:
        notes.append(
            "pinch points: the two on the double curve are exchanged and a new"
            " one appears at the chart origin"
        )
    else:
        notes.append("pinch points at the images of (2,0,0) and (-2,0,0)")
    try:
        fp = fp_of(p, charts)
    except ExcludedCase:
        notes.append("degree-4 cone: the normalization is smooth and isomorphic"
                      " to the resolution upstairs")
        return FiberDescription(
            delta=2,
            transversal_slice="A_1",
            local_eq_chart1=eqs.chart1,
            onc=onc,
            s1nu=None,
            chain=(-4,),
            pinch_points=2,
            fp=None,
            notes=tuple(notes),
        )
    marked = xnu_chain(fp)
    notes.append(f"folded curve has self-intersection -5; (f, p) = ({fp.f}, {fp.p})")
    return FiberDescription(
        delta=2,
        transversal_slice="A_1",
        local_eq_chart1=eqs.chart1,
        onc=onc,
        s1nu=None,
        chain=(marked.left, marked.mark, marked.right),
        pinch_points=2,
        fp=fp,
        notes=tuple(notes),
    )


# -- the table ----------------------------------------------------------------

@dataclass(frozen=True)
class TableRow:
    f: int
    p: int
    xplus_1: MarkedChain
    xplus_2: MarkedChain
    xnu: MarkedChain

    def __post_init__(self):
        if self.xnu.mark != -5:
            raise InternalInvariantError("normalized-fiber curve must be a (-5)")
        if self.xplus_1.mark not in (-1, -2) or self.xplus_2.mark not in (-1, -2):
            raise InternalInvariantError("resolution curve must be a (-1) or (-2)")


def table_rows(f_max: int) -> list[TableRow]:
    """All rows with 2 <= f <= f_max, 1 <= p <= f/2, gcd(p, f) = 1, sorted by
    (f, p).  Within a row the two resolutions are sorted by display string."""
    if f_max < 2:
        raise InvalidFP("f_max must be >= 2")
    rows = []
    for f in range(2, f_max + 1):
        for p in range(1, f // 2 + 1):
            if gcd(p, f) != 1:
                continue
            fp = FPPair(f, p)
            chains = sorted(
                (xplus_chain(r) for r in presolutions_of(fp)),
                key=lambda ch: ch.display(),
            )
            rows.append(TableRow(f, p, chains[0], chains[1], xnu_chain(fp)))
    return rows


TABLE_HEADER = ("f", "p", "xplus_1", "xplus_2", "xnu")


def row_fields(row: TableRow) -> tuple[str, str, str, str, str]:
    return (
        str(row.f),
        str(row.p),
        row.xplus_1.display(),
        row.xplus_2.display(),
        row.xnu.display(),
    )


def render_table_text(rows: list[TableRow]) -> str:
    lines = [" ".join(TABLE_HEADER)]
    lines.extend(" ".join(row_fields(r)) for r in rows)
    return "\n".join(lines) + "\n"


def render_table_csv(rows: list[TableRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(TABLE_HEADER)
    for r in rows:
        writer.writerow(row_fields(r))
    return buf.getvalue()


def rows_as_records(rows: list[TableRow]) -> list[dict]:
    return [dict(zip(TABLE_HEADER, row_fields(r))) for r in rows]
