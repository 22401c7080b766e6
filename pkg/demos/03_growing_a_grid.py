# # Finding a cylinder inside a plane graph
#
# Measure distances from a source set S.  When every face in a band of
# distances is a 4-cycle with two vertices at distance t and two at t+1
# (an S-tight face), the band looks like a cylinder.  Starting from a
# cycle whose vertices all share one distance we stack hoops outward.

# In[1]:

from planar3col import make_grid
from planar3col.hosts import figure_eight_host, perturbed_grid
from planar3col.tightness import (
    GridGrowthError,
    bfs_layers,
    classify_face,
    contaminated_angles,
    equidistant_length_audit,
    find_equidistant_cycle,
    find_quiet_window,
    grow_cylindrical_grid,
)

host = make_grid(6, 26)
L = bfs_layers(host.embedding, host.hoop(1))
kinds = {}
for idx in range(len(host.embedding.faces)):
    k = classify_face(host.embedding, L, idx).kind
    kinds[k] = kinds.get(k, 0) + 1
print("face kinds:", kinds)

C0 = find_equidistant_cycle(host.embedding, L, 3)
grown = grow_cylindrical_grid(host.embedding, L, list(C0), window=12)
print(f"grid {grown.r}x{grown.p} starting at distance {grown.t}")

# ## Restarts
#
# In the figure-eight host two rings of faces pinch together.  The
# growing hoop collides with itself and the search restarts from the
# shorter cycle it found.

# In[2]:

e, S = figure_eight_host()
L = bfs_layers(e, S)
C0 = find_equidistant_cycle(e, L, 2)
grown = grow_cylindrical_grid(e, L, list(C0), window=11)
print("started from a", len(C0), "cycle")
for rs in grown.restarts:
    print(" restart:", rs)
print(f"grid {grown.r}x{grown.p}")

# ## When it fails
#
# A pentagon or a triangle in the window is reported with the face that
# broke the hypothesis; a window that is too narrow runs out of room.

# In[3]:

g = make_grid(5, 25)
for name, h, window in [("pentagon", perturbed_grid(5, 25, "subdivide", 6), 11),
                        ("triangle", perturbed_grid(5, 25, "diagonal", 6), 11),
                        ("narrow", g.embedding, 5)]:
    try:
        grow_cylindrical_grid(h, bfs_layers(h, g.hoop(1)), g.hoop(4), window=window)
    except GridGrowthError as exc:
        print(f"{name}: {type(exc).__name__}: {exc.witness}")

# ## Where long faces sit
#
# Angles between near vertices and long faces are the only places the
# structure can break.  A window that avoids all their distances is quiet.

# In[4]:

h = perturbed_grid(5, 25, "subdivide", 6)
L = bfs_layers(h, g.hoop(1))
angles = contaminated_angles(h, L, 20)
print("contaminated distances:", sorted({a.distance for a in angles}))
print("first quiet window of width 6 starts at", find_quiet_window(angles, 20, 6))
for row in equidistant_length_audit(g.embedding, bfs_layers(g.embedding, g.hoop(1)), 6):
    print(row)
