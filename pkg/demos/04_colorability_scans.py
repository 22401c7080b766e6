# # Scanning small plane graphs
#
# Every connected plane graph on a few vertices is generated up to
# isomorphism (mirror images identified) and checked with the exact
# solver.  Three questions are asked.

# In[1]:

import tempfile

from planar3col.generate import exhaustive_maps, plane_trees
from planar3col.scans import load_witnesses, scan_aksionov, scan_grotzsch, scan_havel

print("plane trees:", [len(plane_trees(n)) for n in range(1, 9)])
print("all plane maps:", [sum(1 for _ in exhaustive_maps(n)) for n in range(1, 7)])

# ## Triangle-free graphs
#
# None of them needs a fourth color.

# In[2]:

rep = scan_grotzsch(n=7, jobs=1)
print(rep.to_text())

# ## One triangle, a precolored short face
#
# With at most one triangle, any proper coloring of a face of length at
# most five extends (five-faces touching the triangle are left out).

# In[3]:

rep = scan_aksionov(n=7, jobs=1)
print(rep.to_text())

# ## Triangles close together
#
# Without a distance condition on triangles, uncolorable graphs appear.
# The minimal ones on six vertices or fewer are K4 and the 5-wheel.

# In[4]:

rep = scan_havel(n=6, delta=0, jobs=1)
print(rep.to_text())
with tempfile.TemporaryDirectory() as tmp:
    rep.write_witnesses(tmp)
    back = load_witnesses(tmp)
    print(len(back), "witnesses written and re-verified")
    print("smallest:", back[0].embedding)
