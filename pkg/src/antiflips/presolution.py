"""Extremal P-resolution data.

An extremal P-resolution is a partial resolution of a cyclic quotient surface
singularity whose exceptional set is a single rational curve carrying at most
two Wahl singularities 1/m1'^2(1, m1'a1' - 1) and 1/m2'^2(1, m2'a2' - 1),
with the canonical class relatively ample.  It is encoded here by the two
Wahl parameter pairs together with c >= 1, where -c is the self-intersection
of the proper transform of the curve in the minimal resolution.

The governing integer is

    delta = c*m1'*m2' - m1'*a2' - m2'*a1'
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .contfrac import Chain, hj_eval, reverse
from .errors import InternalInvariantError, InvalidInput, NotDelta2
from .singularities import WahlData, wahl_chain


@dataclass(frozen=True)
class ExtremalPRes:
    """Wahl pairs (m1', a1'), (m2', a2') and the curve parameter c.

    Side order is significant: it fixes the display orientation and all
    derived data.  The constructor requires delta >= 1; delta <= 0 belongs to
    germs whose flip runs the other way and is rejected.
    """

    w1: WahlData
    w2: WahlData
    c: int

    def __post_init__(self):
        if self.c < 1:
            raise InvalidInput("c must be >= 1")
        if self.delta < 1:
            raise InvalidInput(f"delta = {self.delta} must be >= 1")

    @classmethod
    def from_params(cls, m1: int, a1: int, m2: int, a2: int, c: int) -> "ExtremalPRes":
        return cls(WahlData(m1, a1), WahlData(m2, a2), c)

    @property
    def delta(self) -> int:
        m1, a1 = self.w1.m, self.w1.a
        m2, a2 = self.w2.m, self.w2.a
        return self.c * m1 * m2 - m1 * a2 - m2 * a1

    @property
    def params(self) -> tuple[int, int, int, int, int]:
        return (self.w1.m, self.w1.a, self.w2.m, self.w2.a, self.c)

    def display(self) -> str:
        m1, a1, m2, a2, c = self.params
        return f"((m1',a1')=({m1},{a1}), (m2',a2')=({m2},{a2}), c={c})"


def delta(p: ExtremalPRes) -> int:
    return p.delta


@dataclass(frozen=True)
class AmbientSing:
    """The cyclic quotient singularity that the P-resolution resolves.

    Its minimal-resolution diagram is the second Wahl chain reversed, then
    the curve of self-intersection -c, then the first Wahl chain; evaluating
    that composite chain gives the singularity parameters (num, den).
    """

    chain: Chain
    num: int
    den: int

    def display(self) -> str:
        return f"1/{self.num}(1,{self.den})"


def ambient(p: ExtremalPRes) -> AmbientSing:
    left = reverse(wahl_chain(p.w2)) if not p.w2.is_smooth else ()
    right = wahl_chain(p.w1) if not p.w1.is_smooth else ()
    chain = left + (p.c,) + right
    num, den = hj_eval(chain)
    return AmbientSing(chain, num, den)


class Delta2Case(enum.Enum):
    SMOOTH = "smooth"
    ONE_SINGULARITY = "one_singularity"
    TWO_SINGULARITIES = "two_singularities"


@dataclass(frozen=True)
class Delta2Analysis:
    case: Delta2Case
    k: int | None  # one-singularity case: the singular side is (2k+1, 2k-1)
    F: int


def case_analysis_delta2(p: ExtremalPRes) -> Delta2Analysis:
    """The three delta = 2 shapes: smooth with c = 4, one singularity
    (2k+1, 2k-1) with c = 2, or two singularities with c = 1.  F = m1' + m2'
    is always even here.
    """
    if p.delta != 2:
        raise NotDelta2(f"delta = {p.delta}")
    F = p.w1.m + p.w2.m
    if F % 2 != 0:
        raise InvalidInput("delta = 2 forces an even index sum")
    smooth_sides = p.w1.is_smooth + p.w2.is_smooth
    if smooth_sides == 2:
        if p.c != 4:
            raise InvalidInput("both sides smooth forces c = 4")
        return Delta2Analysis(Delta2Case.SMOOTH, None, F)
    if smooth_sides == 1:
        w = p.w2 if p.w1.is_smooth else p.w1
        if p.c != 2 or w.m % 2 == 0 or w.m - w.a != 2:
            raise InvalidInput("one-singularity shape must be (2k+1, 2k-1), c=2")
        return Delta2Analysis(Delta2Case.ONE_SINGULARITY, (w.m - 1) // 2, F)
    if p.c != 1:
        raise InvalidInput("two singularities force c = 1")
    return Delta2Analysis(Delta2Case.TWO_SINGULARITIES, None, F)


def cplus_self_intersection(p: ExtremalPRes) -> Fraction:
    """Self-intersection of the exceptional curve downstairs:
    -c plus the two resolution correction terms (m'a' - 1)/m'^2."""
    m1, a1, m2, a2, _ = p.params
    return (
        Fraction(-p.c)
        + Fraction(m1 * a1 - 1, m1 * m1)
        + Fraction(m2 * a2 - 1, m2 * m2)
    )


def k_dot_cplus(p: ExtremalPRes) -> Fraction:
    """Intersection of the canonical class with the exceptional curve:
    adjunction with the two orbifold-point corrections 1 - 1/m'^2.
    Simplifies to delta/(m1'*m2'), so it is positive exactly when delta is,
    which is relative ampleness of the canonical class."""
    m1, m2 = p.w1.m, p.w2.m
    return (
        Fraction(-2)
        + (1 - Fraction(1, m1 * m1))
        + (1 - Fraction(1, m2 * m2))
        - cplus_self_intersection(p)
    )


@dataclass(frozen=True)
class Discrepancy:
    a: Fraction  # coefficient of the exceptional curve in the pullback of K
    a2_csq: Fraction  # a^2 * (C+)^2; equals -4/F^2 when delta = 2


def discrepancy_data(p: ExtremalPRes) -> Discrepancy:
    if p.delta != 2:
        raise NotDelta2(f"delta = {p.delta}")
    m1, m2 = p.w1.m, p.w2.m
    F = m1 + m2
    a = Fraction(-2 * m1 * m2, F * F)
    a2_csq = a * a * cplus_self_intersection(p)
    if a2_csq != Fraction(-4, F * F):
        raise InternalInvariantError(f"a^2(C+)^2 = {a2_csq} != -4/F^2")
    return Discrepancy(a, a2_csq)


@dataclass(frozen=True)
class SmoothingParams:
    """Axial multiplicities of a one-parameter smoothing; the toric pipeline
    here covers the diagonal alpha1 == alpha2."""

    alpha1: int
    alpha2: int

    def __post_init__(self):
        if self.alpha1 < 1 or self.alpha2 < 1:
            raise InvalidInput("axial multiplicities must be >= 1")


def in_canonical_region(s: SmoothingParams, delta: int) -> bool:
    """True iff alpha1^2 - delta*alpha1*alpha2 + alpha2^2 <= 0, the region
    where the anticanonical model of the smoothing is non-terminal."""
    a1, a2 = s.alpha1, s.alpha2
    return a1 * a1 - delta * a1 * a2 + a2 * a2 <= 0
