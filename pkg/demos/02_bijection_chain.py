"""One object pushed through the whole bijection chain, then an exhaustive
bijectivity check at a small size.

canopy interval -> synchronized interval -> decorated tree -> planar map,
and back again.
"""

from itertools import product

from tamarimaps import (
    CanopyInterval,
    GridPath,
    canopy_to_sync,
    enumerate_canopy_intervals,
    enumerate_nonseparable,
    interval_to_tree,
    map_to_canopy,
    tree_to_map,
)

C = CanopyInterval(GridPath("NE"), GridPath("NE"), GridPath("EN"))
print("canopy interval      :", C.to_text())

I = canopy_to_sync(C)
print("synchronized interval:", I.to_text())
print("  contacts of lower  :", I.lower.contacts())

T = interval_to_tree(I)
print("decorated tree       :", T.to_text())
print("  charges            :", T.compute_charges().charges)

M = tree_to_map(T)
print("planar map           :")
for line in M.to_text().strip().splitlines():
    print("   ", line)
print("  outer face degree  :", M.outer_face_degree)
print("  root vertex degree :", M.root_vertex_degree)

assert map_to_canopy(M) == C
print("chain inverts back to", C.to_text())
print()

k = 2
canopy_intervals = [
    ci
    for w in product("EN", repeat=k)
    for ci in enumerate_canopy_intervals(GridPath("".join(w)))
]
maps = enumerate_nonseparable(k + 2)
images = {map_to_canopy(Mp).to_text() for Mp in maps}
print(
    "all %d canopy intervals of length %d hit the %d maps with %d edges bijectively: %s"
    % (
        len(canopy_intervals),
        k,
        len(maps),
        k + 2,
        images == {ci.to_text() for ci in canopy_intervals},
    )
)
