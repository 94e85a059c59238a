"""From an extremal P-resolution to the charts of its antiflip.

An extremal P-resolution is encoded by two Wahl parameter pairs and the
self-intersection -c of its exceptional curve upstairs.  For a diagonal
one-parameter smoothing the total space is toric, and the anticanonical
model is covered by exactly two cyclic quotient charts:

    chart 1 = 1/delta(-rho - 1, rho, 1),
    chart 2 = 1/F(lam, 1, -1),           F = m1' + m2'.

This script builds those charts along with the lattice fan, checks them
independently through Smith normal forms, and classifies both germs by the
Reid-Tai criterion.

Run:  python3 demos/02_antiflip_charts.py
"""

from antiflips import (
    ExtremalPRes,
    SmoothingParams,
    ambient,
    antiflip_charts,
    build_fans,
    charts_via_snf,
    in_canonical_region,
    mfan_rays,
    mori_sequences,
    reid_tai_classify,
)

p = ExtremalPRes.from_params(3, 1, 7, 4, 1)
print(f"P-resolution {p.display()}")
print(f"resolves the singularity {ambient(p).display()}"
      f" via the chain {ambient(p).chain}")

seq = mori_sequences(p)
print(f"index sequence d = {seq.d_seq} (k = {seq.k}),"
      f" coefficient sequence c = {seq.c_seq}")

fan = build_fans(p)
print(f"rays: w4 = {fan.w4}, w5 = {fan.w5}")

charts = antiflip_charts(p)
print(f"delta = {charts.delta}, rho = {charts.rho},"
      f" lam = {charts.lam}, F = {charts.F}")
for name, chart in (("chart1", charts.chart1), ("chart2", charts.chart2)):
    res = reid_tai_classify(chart)
    print(f"{name} = {chart.display()}  [{res.label.value}]")

snf = charts_via_snf(p)
print(f"Smith-normal-form route agrees: {snf.chart1.display()},"
      f" {snf.chart2.display()}")

print()
print("== The parameter-surface fan and the canonical region ==")
print("Smoothing directions live on a fan with rays v1 = (1,0), v2 = (delta,1)")
print("and v(i+1) = delta*v(i) - v(i-1); for delta = 2 the rays converge to")
print("the diagonal, the canonical region:")
print("  ", mfan_rays(2, 6).rays)
print("Axial multiplicities (a1, a2) give a non-terminal anticanonical model")
print("exactly when a1^2 - delta*a1*a2 + a2^2 <= 0:")
for d_, pair in [(2, (1, 1)), (2, (1, 2)), (3, (1, 2)), (4, (1, 3))]:
    inside = in_canonical_region(SmoothingParams(*pair), d_)
    print(f"  delta = {d_}, alpha = {pair}: {'inside' if inside else 'outside'}")

print()
print("== The cones over rational normal curves ==")
print("The minimal resolution of the degree-n cone is the P-resolution")
print("(1,1,1,1,c=n); its antiflip charts are 1/(n-2)(-2,1,1) and an")
print("order-2 chart depending on the parity of n:")
for n in range(5, 11):
    q = ExtremalPRes.from_params(1, 1, 1, 1, n)
    ch = antiflip_charts(q)
    print(f"  n = {n}: chart1 = {ch.chart1.display()},"
          f" chart2 = {ch.chart2.display()}")
