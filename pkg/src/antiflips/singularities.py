"""Cyclic quotient singularities of surfaces and threefolds.

Surface germs are written 1/m(q1, q2); the normalized form 1/m(1, q) pins a
representative, unique up to replacing q by its inverse mod m.  Threefold
germs 1/r(w1, w2, w3) are classified by the Reid-Tai criterion.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import permutations
from math import gcd, isqrt

from .contfrac import Chain, hj_expand, hj_eval
from .errors import (
    InvalidInput,
    NotIsolatedAction,
    NotONCForm,
    NotWellFormed,
    SmoothPoint,
)


@dataclass(frozen=True)
class SurfaceCQS:
    """Surface cyclic quotient germ 1/m(q1, q2), weights taken mod m."""

    m: int
    weights: tuple[int, int]

    def __post_init__(self):
        if self.m < 1:
            raise InvalidInput("order must be positive")
        object.__setattr__(self, "weights", tuple(w % self.m for w in self.weights))

    @property
    def is_smooth(self) -> bool:
        return self.m == 1

    def display(self) -> str:
        if self.is_smooth:
            return "smooth"
        return f"1/{self.m}({self.weights[0]},{self.weights[1]})"


SMOOTH_SURFACE = SurfaceCQS(1, (0, 0))


def normalize_surface(s: SurfaceCQS) -> SurfaceCQS:
    """Rescale the action so the first weight is 1, giving the form 1/m(1, q).

    Idempotent.  Order-1 germs normalize to the smooth marker.  Raises
    :class:`NotWellFormed` when a weight shares a factor with the order (the
    fixed locus is then positive-dimensional and this is not an isolated
    surface germ).
    """
    if s.m == 1:
        return SMOOTH_SURFACE
    q1, q2 = s.weights
    if gcd(q1, s.m) != 1 or gcd(q2, s.m) != 1:
        raise NotWellFormed(f"{s.display()} is not an isolated germ")
    inv = pow(q1, -1, s.m)
    return SurfaceCQS(s.m, (1, q2 * inv % s.m))


def reduce_cyclic_pair(m: int, a: int) -> SurfaceCQS:
    """Normalized germ of the quotient 1/m(1, a) when gcd(a, m) may exceed 1.

    The subgroup of order g = gcd(a, m) acts by reflections on the first
    coordinate, so the germ equals 1/(m/g)(1, a/g).
    """
    if m < 1:
        raise InvalidInput("order must be positive")
    a %= m
    g = gcd(a, m) if a else m
    m, a = m // g, a // g
    return SMOOTH_SURFACE if m == 1 else SurfaceCQS(m, (1, a))


def min_resolution(s: SurfaceCQS) -> Chain:
    """Chain of the minimal resolution of the normalized germ."""
    if s.is_smooth:
        raise SmoothPoint("smooth germ has no exceptional curves")
    n = normalize_surface(s)
    return hj_expand(n.m, n.weights[1])


def same_germ(s: SurfaceCQS, t: SurfaceCQS) -> bool:
    """Equality as abstract germs: 1/m(1, q) matches 1/m(1, q') iff q' is q
    or its inverse mod m (the two coordinate orderings)."""
    a, b = normalize_surface(s), normalize_surface(t)
    if a.m != b.m:
        return False
    if a.is_smooth:
        return True
    qa, qb = a.weights[1], b.weights[1]
    return qa == qb or qa * qb % a.m == 1


@dataclass(frozen=True)
class WahlData:
    """Parameters (m, a) of the singularity 1/m^2(1, ma - 1).

    The pair m = a = 1 is the convention for a smooth point.
    """

    m: int
    a: int

    def __post_init__(self):
        if self.m == self.a == 1:
            return
        if self.m < 2 or not 1 <= self.a < self.m or gcd(self.m, self.a) != 1:
            raise InvalidInput(f"invalid Wahl parameters ({self.m}, {self.a})")

    @property
    def is_smooth(self) -> bool:
        return self.m == 1

    def surface(self) -> SurfaceCQS:
        if self.is_smooth:
            return SMOOTH_SURFACE
        return SurfaceCQS(self.m * self.m, (1, self.m * self.a - 1))

    def display(self) -> str:
        return f"1/{self.m * self.m}(1,{self.m * self.a - 1})"


def wahl_chain(w: WahlData) -> Chain:
    if w.is_smooth:
        raise SmoothPoint("no chain at a smooth point")
    return hj_expand(w.m * w.m, w.m * w.a - 1)


def recognize_wahl(chain: Chain) -> WahlData | None:
    """Inverse of :func:`wahl_chain`: the (m, a) whose chain this is, if any."""
    num, den = hj_eval(chain)
    m = isqrt(num) if num >= 0 else 0
    if m < 2 or m * m != num or (den + 1) % m != 0:
        return None
    a = (den + 1) // m
    if not 1 <= a < m or gcd(m, a) != 1:
        return None
    return WahlData(m, a)


@dataclass(frozen=True)
class ThreefoldCQS:
    """Threefold cyclic quotient germ 1/r(w1, w2, w3), weights stored mod r."""

    r: int
    weights: tuple[int, int, int]

    def __post_init__(self):
        if self.r < 1:
            raise InvalidInput("order must be positive")
        object.__setattr__(self, "weights", tuple(w % self.r for w in self.weights))

    def display(self) -> str:
        return f"1/{self.r}({','.join(str(w) for w in self.weights)})"


class Terminality(enum.Enum):
    TERMINAL = "terminal"
    CANONICAL_NOT_TERMINAL = "canonical_not_terminal"
    NOT_CANONICAL = "not_canonical"


@dataclass(frozen=True)
class ReidTaiResult:
    label: Terminality
    non_isolated: bool  # some group element fixes a curve through the origin


def reid_tai_classify(t: ThreefoldCQS) -> ReidTaiResult:
    """Reid-Tai criterion.

    Terminal iff every nontrivial element has age sum_i frac(j*w_i/r) > 1,
    canonical iff every age is >= 1.  Ages are compared exactly via integer
    sums.  An element fixing a divisor (two zero weights) makes the criterion
    inapplicable and raises :class:`NotIsolatedAction`; an element fixing
    only a curve is permitted and flagged.
    """
    r = t.r
    non_isolated = False
    min_age_times_r = None
    for j in range(1, r):
        residues = [j * w % r for w in t.weights]
        zeros = sum(1 for x in residues if x == 0)
        if zeros >= 2:
            raise NotIsolatedAction(
                f"element {j} of {t.display()} fixes a divisor or acts trivially"
            )
        if zeros == 1:
            non_isolated = True
        age_times_r = sum(residues)
        if min_age_times_r is None or age_times_r < min_age_times_r:
            min_age_times_r = age_times_r
    if min_age_times_r is None or min_age_times_r > r:
        label = Terminality.TERMINAL
    elif min_age_times_r == r:
        label = Terminality.CANONICAL_NOT_TERMINAL
    else:
        label = Terminality.NOT_CANONICAL
    return ReidTaiResult(label, non_isolated)


def same_threefold_germ(s: ThreefoldCQS, t: ThreefoldCQS, bound: int = 200) -> bool:
    """Isomorphism of quotient germs by finite search over generator choices
    and coordinate permutations.  Only intended for small orders."""
    if s.r != t.r:
        return False
    r = s.r
    if r > bound:
        raise InvalidInput(f"finite germ search is limited to order <= {bound}")
    target = set(permutations(t.weights))
    for u in range(1, max(r, 2)):
        if gcd(u, r) != 1:
            continue
        if tuple(u * w % r for w in s.weights) in target:
            return True
    return False


@dataclass(frozen=True)
class ONCData:
    """Orbifold normal crossing (YZ=0) in A^3/(1/m)(1, a, -a).

    ``branch_plus`` and ``branch_minus`` are the germs of the two branches,
    conjugate to each other: 1/m(1, a) and 1/m(1, -a).  ``reduced_by``
    records the order of the subgroup fixing the double curve pointwise that
    was divided out of the presenting chart (1 when none).
    """

    m: int
    a: int
    branch_plus: SurfaceCQS
    branch_minus: SurfaceCQS
    reduced_by: int = 1

    def display(self) -> str:
        return f"(YZ=0) in A^3/(1/{self.m})(1,{self.a},{(-self.a) % self.m})"


def onc_from_threefold(t: ThreefoldCQS) -> ONCData:
    """Orbifold-normal-crossing data of (YZ=0) inside the germ ``t``.

    Expects the chart shape 1/r(c, u, -u) with gcd(u, r) = 1: the first
    coordinate runs along the double curve and the last two cut the branches.
    The stabilizer of the double curve (order g = gcd(c, r)) acts by
    reflections on each branch, so the germ reduces to an orbifold normal
    crossing of order r/g.
    """
    r = t.r
    c, u, u_opp = t.weights
    if (u + u_opp) % r != 0 or gcd(u, r) != 1:
        raise NotONCForm(f"{t.display()} does not have shape 1/r(c, u, -u)")
    lam = c * pow(u, -1, r) % r if r > 1 else 0
    g = gcd(lam, r) if lam else r
    m = r // g
    lam0 = lam // g
    if m == 1:
        return ONCData(1, 0, SMOOTH_SURFACE, SMOOTH_SURFACE, reduced_by=g)
    a = pow(lam0, -1, m)
    return ONCData(
        m,
        a,
        SurfaceCQS(m, (1, a)),
        SurfaceCQS(m, (1, -a)),
        reduced_by=g,
    )
