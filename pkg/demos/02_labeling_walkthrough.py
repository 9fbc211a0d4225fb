#!/usr/bin/env python3
"""
The deficiency labeling, step by step
=====================================

With the conventions v_0 = 0 and v_k = q, the deficiency of a point is
r(v) = max over t of (t - v_t), and i(v) is the first index where the max
is hit.  The color is i(v) + 1.  Admissibility means the chosen color c
always satisfies v_c > v_{c-1}, and the whole point of the construction
is that any cell of the subdivision sees at most two distinct colors.
"""

from simplexlattice import (
    LabelUndefined,
    Params,
    argmin_index,
    coordinate,
    deficiency,
    enumerate_vertices,
    label,
    label_all,
    label_pi,
)

p = Params(3, 4)

print("k=3, q=4: the full computation per point")
print(f"{'v':>8}  {'t - v_t':>16}  r  i  color")
for v in enumerate_vertices(p):
    profile = [t - coordinate(v, t, p) for t in range(p.k + 1)]
    r = deficiency(v, p)
    i = argmin_index(v, p)
    print(f"{str(v):>8}  {str(profile):>16}  {r}  {i}  {label(v, p)}")

# the corners behave as advertised
assert label((0, 0), p) == 3
assert label((4, 4), p) == 1

print("\nbelow q = k the rule runs out of colors somewhere:")
for q in (1, 2, 3, 4):
    try:
        label_all(Params(3, q))
        print(f"  q={q}: total")
    except LabelUndefined as err:
        print(f"  q={q}: undefined at {err.vertex}")

print("\nthe permutation variant re-scans in the order 0, pi(1), ..., k:")
v = (1, 2)
print(f"  v={v}: plain color {label(v, p)}, "
      f"pi=(2,1) color {label_pi(v, (2, 1), p)}")

lab = label_all(p, (2, 1))
print(f"\nfull labeling under pi=(2,1): {lab.colors}")
print(f"rule descriptor: {lab.rule}")
