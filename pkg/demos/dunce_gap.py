"""A flag dunce hat separates decomposition chordality from the Dirac property.

The complex is contractible and every 2-cycle of it decomposes trivially, so
it is decomposition 2-chordal.  Yet no face has an extended link that is a
two-sided homology cut, and the exhaustive Dirac search fails.
"""

import time

from homchord import Q, betti_numbers, dirac_search, extended_link_two_sided, is_decomposition_chordal
from homchord.corpus import flag_dunce

fd = flag_dunce()
print(f"flag_dunce: {fd.vertex_mask.bit_count()} vertices, f-vector {fd.f_vector()}")
print("reduced Betti numbers over Q:", betti_numbers(fd, Q))
print("decomposition 2-chordal:", is_decomposition_chordal(fd, 2, Q).holds)

t0 = time.perf_counter()
res = dirac_search(fd, 2)
print(f"2-Dirac search: {res.status} after {res.nodes} nodes ({time.perf_counter() - t0:.2f}s)")

faces = [f for f in fd.faces if f]
sides = [extended_link_two_sided(fd, f, 2, Q) for f in faces]
print(f"faces whose extended link is a cut: {sum(s.is_cut for s in sides)}/{len(faces)}")
print(f"  of those, two-sided homology cuts: {sum(bool(s.two_sided) for s in sides)}")
