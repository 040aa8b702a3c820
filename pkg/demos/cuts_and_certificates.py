"""Minimal cuts from extended links, and a Dirac certificate that replays.

The octahedron is a 2-sphere, so the face-adjacency graph of its triangles
has a minimal edge cut built from the extended link of an edge.  The join of
a square with two points is 2-Dirac; the search returns the elimination
order, which replays against the facets alone.
"""

from homchord import dirac_search, find_extended_link_minimal_cut, replay
from homchord.corpus import octahedron, woodroofe_join

octa = octahedron()
sigma, rep = find_extended_link_minimal_cut(octa, 2)
print("octahedron, face", octa.face_labels(sigma))
print("  cut between", octa.face_labels(rep.source), "and", octa.face_labels(rep.target))
for face in sorted(rep.cut):
    print("   ", octa.face_labels(face))
print("  minimal:", rep.is_minimal, " homology source:", rep.homology_source)

wj = woodroofe_join()
for k in (2, 3):
    res = dirac_search(wj, k)
    print(f"\nwoodroofe_join, k={k}: {res.status} ({res.nodes} nodes)")
    if res.certificate:
        print("  steps:", res.certificate.steps())
        print("  replays:", replay(res.certificate, wj.facet_list()))
