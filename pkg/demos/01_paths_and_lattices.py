"""Dyck paths, grid paths, and the lattice attached to a canopy.

Walks through the path statistics (matching, distance, type, contacts),
shows one canopy lattice in full, and checks the partition of the Dyck
paths of one size by their type.
"""

from tamarimaps import (
    DyckPath,
    GridPath,
    catalan,
    dyck_rotation_covers,
    enumerate_dyck_paths,
    enumerate_tam,
    tam_covers,
    tamari_leq,
)

P = DyckPath("uududd")
print("Dyck path            :", P.word)
print("heights              :", P.heights())
print("matches (up -> down) :", [(i, P.match_up(i)) for i in range(1, P.size + 1)])
print("distance vector      :", P.distance_vector())
print("type                 :", P.type_of().word)
print("contacts             :", P.contacts())
print()

v = GridPath("EEN")
print("canopy", v.word, "with levels", v.levels())
elements = enumerate_tam(v)
print("elements above it    :", [e.word for e in elements])
for e in elements:
    print("  covers of %-4s     : %s" % (e.word, [c.word for c in tam_covers(v, e)]))
print()

n = 4
fibers = {}
for Q in enumerate_dyck_paths(n):
    fibers.setdefault(Q.type_of().word, []).append(Q.word)
print("the %d Dyck paths of size %d split into %d type fibers:" % (catalan(n), n, len(fibers)))
for word in sorted(fibers):
    print("  type %-3s -> %s" % (word, fibers[word]))
print()

low, high = DyckPath("udud"), DyckPath("uudd")
print("%s <= %s in the rotation order: %s" % (low.word, high.word, tamari_leq(low, high)))
print("one rotation step from %s: %s" % (low.word, [c.word for c in dyck_rotation_covers(low)]))
