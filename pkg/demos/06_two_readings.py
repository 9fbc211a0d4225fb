#!/usr/bin/env python3
"""
Two readings of the permutation rule
====================================

The permutation variant scans indices in the order 0, pi(1), ...,
pi(k-1), k and stops at the first one attaining the deficiency.  The
color can then be built from the INDEX that was selected (what this
package does) or from the POSITION in the scan at which it was found.
The two coincide for the identity permutation and disagree otherwise;
the comparison below shows the position reading is not even
Sperner-admissible, which is why the selected-index reading is the one
the package stands behind.
"""

from simplexlattice import (
    Params,
    compare_pi_readings,
    enumerate_vertices,
    label_pi,
)

p = Params(3, 4)
pi = (2, 1)

print(f"k=3, q=4, pi={pi}: pointwise comparison")
print(f"{'v':>8} {'selected-index':>15} {'position':>9}")
for v in enumerate_vertices(p):
    sel = label_pi(v, pi, p, "selected-index")
    pos = label_pi(v, pi, p, "position")
    marker = "" if sel == pos else "  <- differ"
    print(f"{str(v):>8} {sel:>15} {pos:>9}{marker}")

sel_report, pos_report = compare_pi_readings(p, pi)

print(f"\nselected-index reading: sperner_ok={sel_report.sperner_ok}, "
      f"max colors per cell {sel_report.max_colors_per_edge}, "
      f"passed={sel_report.passed}")
print(f"position reading:       sperner_ok={pos_report.sperner_ok}, "
      f"violations at {[v for v, _ in pos_report.sperner_violations]}")

print("\nexample: v=(0,0) has its deficiency at index 2, found at scan")
print("position 1; the position reading colors it 2, but admissibility")
print("needs v_2 > v_1 (0 > 0 fails), while the selected-index color 3")
print("needs v_3 > v_2 (4 > 0 holds).")

print("\nwith the identity permutation the readings agree everywhere:")
sel_report, pos_report = compare_pi_readings(p, (1, 2))
print(f"  reports identical: {sel_report == pos_report}")
