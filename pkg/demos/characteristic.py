"""The six-vertex projective plane: homological answers depend on the field.

Over Q the real projective plane is acyclic, so its Stanley-Reisner
ideal has a 2-linear resolution.  Over F2 the top class survives and the
regularity jumps to 3.  The Cohen-Macaulay test on the Alexander dual tracks
the same switch.
"""

from homchord import (F2, Q, alexander_dual, betti_numbers, betti_table, has_linear_resolution,
                      is_cohen_macaulay, is_resolution_chordal)
from homchord.corpus import rp2_6

rp = rp2_6()
print(f"rp2_6: {len(rp.facet_list())} triangles on {rp.vertex_mask.bit_count()} vertices")

for field in (Q, F2):
    table = betti_table(rp, field)
    dual_cm = is_cohen_macaulay(alexander_dual(rp, rp.vertex_mask), field)
    print(f"\nover {field.name}:")
    print("  reduced Betti numbers (deg -1..2):", betti_numbers(rp, field))
    print("  resolution 2-chordal:", is_resolution_chordal(rp, 2, field).holds)
    print("  regularity:", table.regularity, " linear resolution:", has_linear_resolution(rp, field))
    print("  Alexander dual Cohen-Macaulay:", dual_cm)
    for row in table.rows():
        print("   ", row)
