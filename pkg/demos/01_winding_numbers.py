# # Winding numbers of 3-colorings
#
# Color the vertices of a cycle with 1, 2, 3 so that neighbours differ.
# Walking around the cycle every step goes either "up" (1->2, 2->3, 3->1)
# or "down".  The winding number counts the 1->2 steps minus the 2->1
# steps, which is the same as (ups - downs) / 3.

# In[1]:

import itertools
import random

from planar3col import make_grid, solve_3coloring
from planar3col.coloring import recolor_permuted
from planar3col.hosts import cycle_graph, octahedron
from planar3col.winding import OrientedFacialCycle, face_windings, face_winding_sum, winding_number


def cyc(colors):
    vs = tuple(range(len(colors)))
    return OrientedFacialCycle(vs, "demo"), dict(zip(vs, colors))


for colors in [(1, 2, 1, 2), (1, 2, 3), (1, 2, 3, 1, 2, 3), (1, 3, 2, 1, 3, 2, 3, 2)]:
    print(colors, "winding", winding_number(*cyc(colors)))

# A 4-cycle can never wind: it has 18 proper colorings and all give 0.

# In[2]:

c4 = [c for c in itertools.product((1, 2, 3), repeat=4) if all(c[i] != c[(i + 1) % 4] for i in range(4))]
print(len(c4), "colorings of C4, windings:", sorted({winding_number(*cyc(c)) for c in c4}))

# Swapping two colors flips the sign, rotating the colors keeps it, and so
# does reading the cycle backwards.

# In[3]:

c, phi = cyc((1, 2, 3, 1, 2, 3, 1, 2, 3))
print("w =", winding_number(c, phi))
print("swap 1<->2:", winding_number(c, recolor_permuted(phi, (2, 1, 3))))
print("rotate colors:", winding_number(c, recolor_permuted(phi, (2, 3, 1))))
print("reversed cycle:", winding_number(c.reversed("back"), phi))

# On a plane graph every face is a cycle read with the face on its left.
# Each edge is crossed once in each direction, so the windings of all
# faces add up to zero for any proper coloring.

# In[4]:

e = cycle_graph(5)
phi = solve_3coloring(e)
print("pentagon, both faces:", face_windings(e, phi))

rng = random.Random(1)
for host in (octahedron(), make_grid(6, 4).embedding):
    phi = solve_3coloring(host, rng=rng)
    print(f"{host!r}: face windings {face_windings(host, phi)}, sum {face_winding_sum(host, phi)}")
