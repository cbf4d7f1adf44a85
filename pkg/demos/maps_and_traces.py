"""
Rooted bipartite maps and root-edge deletion
============================================

Maps are stored as three involutions on flags.  Deleting the root edge
again and again labels every edge as a bridge, border, twisted edge or
handle.
"""

# %%
from collections import Counter

from bmaps import enumerate_maps, map_type, genus2x, is_orientable, trace
from bmaps.mapcore import canonical_key, key_to_string, twist

# %%
# 1, 4, 25, 208, 2146 rooted bipartite maps on all surfaces.
print([sum(1 for _ in enumerate_maps(n)) for n in range(1, 6)])

# %%
# Genus distribution at four edges (stored as 2g; odd values are non-orientable).
print(sorted(Counter(genus2x(m) for m in enumerate_maps(4)).items()))

# %%
# A map with a handle: look at its trace and at what twisting the handle does.
m = next(m for m in enumerate_maps(4) if trace(m).handles and is_orientable(m))
print(map_type(m), [str(t) for t in trace(m).types()])
m2 = twist(m, [s.label for s in trace(m).steps if str(s.edge_type) == "Handle"][0])
print(map_type(m2), [str(t) for t in trace(m2).types()], "orientable:", is_orientable(m2))

# %%
# Canonical keys identify rooted maps independently of flag names.
print(key_to_string(canonical_key(m)))
