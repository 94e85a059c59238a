"""Command-line front end.

Subcommands: hj, wahl, antiflip, fiber, fp, table.  Every command accepts
--json for a machine-readable envelope with deterministic key order and
arbitrary-precision integers.  Exit codes: 0 success, 2 invalid input or
usage, 1 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import fiber as fib
from .antiflip import antiflip_charts, build_fans, charts_via_snf
from .contfrac import conjugate, format_chain, hj_expand, reverse
from .errors import DomainError
from .presolution import (
    ExtremalPRes,
    cplus_self_intersection,
    discrepancy_data,
)
from .singularities import (
    SurfaceCQS,
    ThreefoldCQS,
    WahlData,
    reid_tai_classify,
    wahl_chain,
)

SCHEMA_VERSION = "1"


def _emit(args, command: str, inputs: dict, result, diagnostics: list[str], text: str):
    if getattr(args, "json", False):
        payload = {
            "schema_version": SCHEMA_VERSION,
            "command": command,
            "inputs": inputs,
            "result": result,
            "diagnostics": diagnostics,
        }
        print(json.dumps(payload, indent=2))
    else:
        out = text if not diagnostics else text + "\n" + "\n".join(
            f"note: {d}" for d in diagnostics
        )
        print(out)


def _frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _threefold(t: ThreefoldCQS) -> dict:
    return {"order": t.r, "weights": list(t.weights), "display": t.display()}


def _surface(s: SurfaceCQS) -> dict:
    return {"order": s.m, "weights": list(s.weights), "display": s.display()}


# -- subcommands ---------------------------------------------------------------

def cmd_hj(args) -> None:
    m, q = args.m, args.q
    if args.conjugate:
        m, q = conjugate(m, q)
    chain = hj_expand(m, q)
    if args.reverse:
        chain = reverse(chain)
    _emit(
        args,
        "hj",
        {"m": args.m, "q": args.q, "conjugate": args.conjugate, "reverse": args.reverse},
        {"chain": list(chain), "display": format_chain(chain)},
        [],
        format_chain(chain),
    )


def cmd_wahl(args) -> None:
    w = WahlData(args.m, args.a)
    chain = wahl_chain(w)
    _emit(
        args,
        "wahl",
        {"m": args.m, "a": args.a},
        {
            "singularity": w.display(),
            "chain": list(chain),
            "display": format_chain(chain),
        },
        [],
        f"{w.display()}: {format_chain(chain)}",
    )


def _presolution(args) -> ExtremalPRes:
    return ExtremalPRes.from_params(args.m1p, args.a1p, args.m2p, args.a2p, args.c)


def cmd_antiflip(args) -> None:
    p = _presolution(args)
    charts = antiflip_charts(p)
    snf_charts = charts_via_snf(p)  # cross-validates orders and weights
    fan = build_fans(p)
    rt1 = reid_tai_classify(charts.chart1)
    rt2 = reid_tai_classify(charts.chart2)
    diagnostics = []
    for name, rt in (("chart1", rt1), ("chart2", rt2)):
        if rt.non_isolated:
            diagnostics.append(f"reid_tai:{name}: some element fixes a curve")
    result = {
        "delta": charts.delta,
        "rho": charts.rho,
        "lam": charts.lam,
        "F": charts.F,
        "chart1": {**_threefold(charts.chart1), "reid_tai": rt1.label.value},
        "chart2": {**_threefold(charts.chart2), "reid_tai": rt2.label.value},
        "chart1_snf": _threefold(snf_charts.chart1),
        "chart2_snf": _threefold(snf_charts.chart2),
        "bezout": list(charts.bezout),
        "fan": {
            name: list(getattr(fan, name)) for name in ("w1", "w2", "w3", "w4", "w5")
        },
    }
    text = "\n".join(
        [
            f"delta = {charts.delta}",
            f"rho   = {charts.rho}",
            f"lam   = {charts.lam}",
            f"F     = {charts.F}",
            f"chart1 = {charts.chart1.display()}  [{rt1.label.value}]",
            f"chart2 = {charts.chart2.display()}  [{rt2.label.value}]",
            "fan:   " + "  ".join(
                f"{n}={getattr(fan, n)}" for n in ("w1", "w2", "w3", "w4", "w5")
            ),
        ]
    )
    _emit(args, "antiflip", _pres_inputs(args), result, diagnostics, text)


def _pres_inputs(args) -> dict:
    return {
        "m1p": args.m1p,
        "a1p": args.a1p,
        "m2p": args.m2p,
        "a2p": args.a2p,
        "c": args.c,
    }


def cmd_fiber(args) -> None:
    p = _presolution(args)
    charts = antiflip_charts(p)
    desc = fib.fiber_description(p, charts)
    eqs = fib.chart_equations(charts)
    diagnostics = []
    if reid_tai_classify(charts.chart2).non_isolated:
        diagnostics.append("reid_tai:chart2: some element fixes a curve")
    result = {
        "delta": desc.delta,
        "transversal_slice": desc.transversal_slice,
        "local_eq_chart1": desc.local_eq_chart1,
        "local_eq_chart2": eqs.chart2,
        "gluing": list(eqs.gluing),
        "onc": {
            "display": desc.onc.display(),
            "order": desc.onc.m,
            "weight": desc.onc.a,
            "branch_plus": _surface(desc.onc.branch_plus),
            "branch_minus": _surface(desc.onc.branch_minus),
            "reduced_by": desc.onc.reduced_by,
        },
        "s1nu": None if desc.s1nu is None else _surface(desc.s1nu),
        "chain": desc.chain_display,
        "pinch_points": desc.pinch_points,
        "fp": None if desc.fp is None else {"f": desc.fp.f, "p": desc.fp.p},
        "notes": list(desc.notes),
    }
    intersection = cplus_self_intersection(p)
    lines = [
        f"delta = {desc.delta}",
        f"transversal slice: {desc.transversal_slice}",
        f"chart1 equation: {desc.local_eq_chart1}",
        f"chart2 equation: {eqs.chart2}",
        "gluing: " + "; ".join(eqs.gluing),
        f"orbifold normal crossing: {desc.onc.display()}",
        f"chain: {desc.chain_display}",
        f"pinch points: {desc.pinch_points}",
        f"(C+)^2 = {_frac(intersection)}",
    ]
    if desc.s1nu is not None:
        lines.insert(6, f"normalized chart1 germ: {desc.s1nu.display()}")
    if desc.fp is not None:
        lines.append(f"(f, p) = ({desc.fp.f}, {desc.fp.p})")
        disc = discrepancy_data(p)
        lines.append(f"a = {_frac(disc.a)}, a^2(C+)^2 = {_frac(disc.a2_csq)}")
    for note in desc.notes:
        lines.append(f"note: {note}")
    _emit(args, "fiber", _pres_inputs(args), result, diagnostics, "\n".join(lines))


def cmd_fp(args) -> None:
    fp = fib.FPPair(args.f, args.p)
    first, second = fib.presolutions_of(fp)
    xnu = fib.xnu_chain(fp)
    entries = []
    for res in (first, second):
        entries.append(
            {
                "params": dict(
                    zip(("m1p", "a1p", "m2p", "a2p", "c"), res.params)
                ),
                "display": fib.xplus_chain(res).display(),
            }
        )
    result = {"resolutions": entries, "xnu": xnu.display()}
    text = "\n".join(
        [
            f"first:  {entries[0]['display']}   {first.display()}",
            f"second: {entries[1]['display']}   {second.display()}",
            f"xnu:    {xnu.display()}",
        ]
    )
    _emit(args, "fp", {"f": args.f, "p": args.p}, result, [], text)


def cmd_table(args) -> None:
    rows = fib.table_rows(args.fmax)
    if args.format == "json" or args.json:
        args.json = True
        _emit(
            args,
            "table",
            {"fmax": args.fmax, "format": args.format},
            {"rows": fib.rows_as_records(rows)},
            [],
            fib.render_table_text(rows).rstrip("\n"),
        )
        return
    if args.format == "csv":
        sys.stdout.write(fib.render_table_csv(rows))
    else:
        sys.stdout.write(fib.render_table_text(rows))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="antiflips",
        description="Exact toric antiflip data of diagonal smoothings of"
        " extremal P-resolutions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    hj = sub.add_parser("hj", help="Hirzebruch-Jung expansion of m/q")
    hj.add_argument("m", type=int)
    hj.add_argument("q", type=int)
    hj.add_argument("--conjugate", action="store_true")
    hj.add_argument("--reverse", action="store_true")
    hj.add_argument("--json", action="store_true")
    hj.set_defaults(func=cmd_hj)

    wahl = sub.add_parser("wahl", help="chain of the Wahl singularity (m, a)")
    wahl.add_argument("m", type=int)
    wahl.add_argument("a", type=int)
    wahl.add_argument("--json", action="store_true")
    wahl.set_defaults(func=cmd_wahl)

    for name, func, help_text in (
        ("antiflip", cmd_antiflip, "chart data of the anticanonical model"),
        ("fiber", cmd_fiber, "structure of the special fiber"),
    ):
        cmd = sub.add_parser(name, help=help_text)
        for arg in ("m1p", "a1p", "m2p", "a2p", "c"):
            cmd.add_argument(arg, type=int)
        cmd.add_argument("--json", action="store_true")
        cmd.set_defaults(func=func)

    fp = sub.add_parser("fp", help="the two resolutions attached to (f, p)")
    fp.add_argument("f", type=int)
    fp.add_argument("p", type=int)
    fp.add_argument("--json", action="store_true")
    fp.set_defaults(func=cmd_fp)

    table = sub.add_parser("table", help="the (f, p) correspondence table")
    table.add_argument("--fmax", type=int, default=7)
    table.add_argument(
        "--format", choices=("text", "csv", "json"), default="text"
    )
    table.add_argument("--json", action="store_true")
    table.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except DomainError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001 - surface invariant failures loudly
        print(f"internal-error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
