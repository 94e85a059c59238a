"""The two-to-one correspondence for delta = 2.

Every coprime pair (f, p) with 1 <= p <= f/2 labels the conjugate branch
singularities 1/f(p, 1) and 1/f(p, -1) on the normalized special fiber, and
arises from exactly two extremal P-resolutions.  The one exception is the
cone over the rational normal curve of degree 4, which has a single
resolution and a smooth normalized fiber.

Run:  python3 demos/04_fp_correspondence.py
"""

from antiflips import (
    ExtremalPRes,
    FPPair,
    fiber_description,
    fp_of,
    presolutions_of,
    xnu_chain,
    xplus_chain,
)
from antiflips.fiber import render_table_text, table_rows

print("== One pair, two resolutions ==")
fp = FPPair(5, 2)
first, second = presolutions_of(fp)
for res in (first, second):
    print(f"{xplus_chain(res).display():32}  {res.display()}")
print(f"normalized fiber for both: {xnu_chain(fp).display()}")
print(f"round trips: {fp_of(first)}, {fp_of(second)}")

print()
print("== The excluded degree-4 cone ==")
cone = ExtremalPRes.from_params(1, 1, 1, 1, 4)
desc = fiber_description(cone)
print(f"diagram {desc.chain_display}, {desc.pinch_points} pinch points,"
      " smooth normalization")

print()
print("== The correspondence for f <= 7 ==")
print(render_table_text(table_rows(7)))
