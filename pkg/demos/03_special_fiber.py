"""Anatomy of the special fiber of the antiflip.

The special fiber is a non-normal surface, singular along a rational curve
with an A_{delta-1} transversal slice.  Its shape depends on delta:

* delta >= 3: the normalization carries a chain of singular points whose
  minimal resolution is  [a..] - (-1) - [c..] - (-1) - [b..]; the outer
  chains are conjugate branch singularities of an orbifold normal crossing,
  the middle one resolves the normalized first chart.
* delta = 2: the fiber acquires two pinch points, the folded curve has
  self-intersection -5, and everything is governed by the pair (f, p).

Run:  python3 demos/03_special_fiber.py
"""

from antiflips import (
    ExtremalPRes,
    antiflip_charts,
    chart_equations,
    fiber_description,
    s1_normalization,
    t1_normalization,
)

print("== delta = 3: smoothing the degree-5 cone ==")
p = ExtremalPRes.from_params(1, 1, 1, 1, 5)
charts = antiflip_charts(p)
eqs = chart_equations(charts)
print("chart equations:")
print(f"  {eqs.chart1}")
print(f"  {eqs.chart2}")
print("gluing:", "; ".join(eqs.gluing))

print(f"normalization of the bare first chart: {t1_normalization(3).display()}")
print(f"after dividing by the chart group:     "
      f"{s1_normalization(3, charts.rho).display()}")

desc = fiber_description(p, charts)
print(f"resolution diagram of the normalized fiber: {desc.chain_display}")
print(f"orbifold normal crossing at the second chart: {desc.onc.display()}")

print()
print("== The gcd(rho + 1, delta) > 1 branch ==")
print("The quotient of the normalized chart can drop in order, or even")
print("become smooth, when rho + 1 shares a factor with delta:")
for d, rho in [(4, 1), (3, 2), (6, 2)]:
    print(f"  delta = {d}, rho = {rho}: {s1_normalization(d, rho).display()}")

print()
print("== delta = 2: pinch points ==")
q = ExtremalPRes.from_params(3, 1, 7, 4, 1)
desc = fiber_description(q)
print(f"transversal slice {desc.transversal_slice},"
      f" {desc.pinch_points} pinch points")
print(f"(f, p) = ({desc.fp.f}, {desc.fp.p});"
      f" normalized fiber diagram {desc.chain_display}")
for note in desc.notes:
    print(f"  note: {note}")
