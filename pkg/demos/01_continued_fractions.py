"""Hirzebruch-Jung continued fractions and Wahl chains.

A cyclic quotient surface singularity 1/m(1, q) is resolved by a chain of
rational curves whose negated self-intersections are the entries of the
continued fraction m/q = [b1, ..., bs].  This script walks through the basic
calculus: expansion, evaluation, conjugation, reversal, and the special
chains of Wahl singularities 1/m^2(1, ma - 1).

Run:  python3 demos/01_continued_fractions.py
"""

from antiflips import (
    WahlData,
    conjugate,
    format_chain,
    hj_eval,
    hj_expand,
    recognize_wahl,
    reverse,
    wahl_chain,
)

print("== Expansion and evaluation ==")
for m, q in [(4, 1), (49, 27), (36, 13)]:
    chain = hj_expand(m, q)
    print(f"{m}/{q} = {format_chain(chain)}  (evaluates back to {hj_eval(chain)})")

print()
print("== Conjugation reverses the resolution diagram ==")
for m, q in [(3, 1), (7, 3), (19, 7)]:
    mc, qc = conjugate(m, q)
    print(
        f"1/{m}(1,{q}) has chain {format_chain(hj_expand(m, q))}; its conjugate"
        f" 1/{mc}(1,{qc}) has chain {format_chain(hj_expand(mc, qc))}"
    )

print()
print("== Reversal computes the inverse weight ==")
m, q = 11, 4
rev = reverse(hj_expand(m, q))
print(f"reverse of the chain of {m}/{q} evaluates to {hj_eval(rev)};"
      f" indeed {q} * {hj_eval(rev)[1]} = 1 mod {m}")

print()
print("== Wahl chains ==")
for mm, aa in [(2, 1), (3, 1), (5, 2), (7, 3)]:
    chain = wahl_chain(WahlData(mm, aa))
    print(f"1/{mm * mm}(1,{mm * aa - 1}) = {format_chain(chain)}")

print()
print("Recognition is the inverse of chain construction:")
for chain in [(4,), (5, 2), (3, 5, 2), (3, 3)]:
    got = recognize_wahl(chain)
    label = f"Wahl ({got.m},{got.a})" if got else "not a Wahl chain"
    print(f"  {format_chain(chain)} -> {label}")
