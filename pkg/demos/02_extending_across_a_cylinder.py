# # Coloring a cylinder from its rims
#
# The r x s cylindrical grid is a stack of s hoops (r-cycles).  We fix the
# colors on the first hoop and ask whether they extend upward.  The
# winding number of the first hoop is the obstruction: it can never
# change from hoop to hoop, and the top of a tall enough grid can always
# be nearly two-colored when |w| <= 1.

# In[1]:

from planar3col import extend_one_cuff, extend_two_cuffs, lemma_height, make_grid
from planar3col.coloring import validate_coloring
from planar3col.cylinder import WindingMismatch, WindingTooLarge, cuff_windings, push_hoop, segmentation_of
from planar3col.winding import sequence_winding

# ## One hoop at a time
#
# A hoop coloring is cut into segments: runs that alternate between a
# flag color a and a+1 and start and end on a.  Pushing to the next hoop
# shifts colors and merges segments, so the count drops by two per hoop
# until at most two remain.

# In[2]:

colors = (1, 2, 3, 1, 3, 2, 3, 1, 2)
seg = segmentation_of(colors)
print("hoop 1", colors, "blocks", seg.k, "winding", sequence_winding(colors))
cur = list(colors)
for j in range(2, 6):
    cur, seg = push_hoop(cur, seg, w_target=sequence_winding(colors))
    print(f"hoop {j}", tuple(cur), "blocks", seg.k, "winding", sequence_winding(cur))

# ## One precolored rim
#
# On the grid of height ceil((r+3)/2) the whole grid gets colored and the
# top hoop uses only two colors apart from one chosen vertex v0.

# In[3]:

r = 7
g = make_grid(r, lemma_height(r))
trace = []
psi = extend_one_cuff(g, (1, 2, 1, 3, 2, 3, 2), g.hoop(g.s)[3], trace)
validate_coloring(g.embedding, psi)
for rec in trace:
    print(rec)
print("top hoop:", [psi[v] for v in g.hoop(g.s)])

# A rim that winds twice cannot be flattened.

# In[4]:

try:
    g6 = make_grid(6, lemma_height(6))
    extend_one_cuff(g6, (1, 2, 3, 1, 2, 3), g6.hoop(g6.s)[0])
except WindingTooLarge as exc:
    print("refused:", exc)

# ## Both rims precolored
#
# With r + 5 hoops any two rim colorings extend as long as the two cap
# faces have opposite windings.

# In[5]:

g = make_grid(5, 10)
phi = dict(zip(g.hoop(1), (1, 2, 1, 2, 3)))
phi.update(zip(g.hoop(10), (3, 1, 3, 1, 2)))
print("cap windings", cuff_windings(g, phi))
psi = extend_two_cuffs(g, phi)
validate_coloring(g.embedding, psi)
for j in range(1, 11):
    print(f"hoop {j:2d}:", [psi[v] for v in g.hoop(j)])

# In[6]:

phi.update(zip(g.hoop(10), (1, 3, 2, 1, 2)))
try:
    extend_two_cuffs(g, phi)
except WindingMismatch as exc:
    print("refused:", exc)
