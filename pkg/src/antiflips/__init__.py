"""Exact toric computation of antiflips of diagonal smoothings of extremal
P-resolutions of cyclic quotient surface singularities."""

from .antiflip import (
    AntiflipCharts,
    FanData,
    MFanRays,
    MoriData,
    antiflip_charts,
    build_fans,
    charts_via_snf,
    initial_neighborhood,
    mfan_rays,
    mori_sequences,
)
from .contfrac import (
    MarkedChain,
    conjugate,
    format_chain,
    format_diagram,
    format_marked,
    hj_eval,
    hj_expand,
    reverse,
)
from .exact import IntMatrix, Rational, egcd, smith_normal_form, solve_congruence
from .fiber import (
    FPPair,
    FiberDescription,
    TableRow,
    chart_equations,
    fiber_description,
    fp_of,
    presolutions_of,
    s1_normalization,
    t1_normalization,
    table_rows,
    xnu_chain,
    xplus_chain,
)
from .presolution import (
    AmbientSing,
    Delta2Case,
    ExtremalPRes,
    SmoothingParams,
    ambient,
    case_analysis_delta2,
    cplus_self_intersection,
    delta,
    discrepancy_data,
    in_canonical_region,
    k_dot_cplus,
)
from .singularities import (
    ONCData,
    SurfaceCQS,
    Terminality,
    ThreefoldCQS,
    WahlData,
    min_resolution,
    normalize_surface,
    onc_from_threefold,
    recognize_wahl,
    reid_tai_classify,
    same_germ,
    wahl_chain,
)

__version__ = "0.1.0"
