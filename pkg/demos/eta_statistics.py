"""
Measures of non-orientability
=============================

An orientation rule fixes a direction on every face; each non-bridge root
edge is then of the first or second kind, and eta counts the second-kind
edges.  Different rules give different eta but the same marginals.
"""

# %%
from bmaps import OrientationRule, extract_h, h_eta_table
from bmaps.harness import fmt_triple
from bmaps.mapstats import CANONICAL

rules = [CANONICAL, OrientationRule(1), OrientationRule(2)]

# %%
# H_eta at three edges under three rules, against h from the Jack side.
h = extract_h(3)
tables = {str(r): h_eta_table(3, r) for r in rules}
for key, hpoly in h.items(3):
    if not hpoly:
        continue
    row = [str(tables[str(r)].h.get(key, 0)) for r in rules]
    print(fmt_triple(key), "h =", hpoly, "| H_eta:", row)

# %%
# The split by number of handles: a_i(beta) has degree at most i.
t = h_eta_table(4)
for key in sorted(t.a):
    if len(t.a[key]) > 1:
        print(fmt_triple(key), {i: str(p) for i, p in t.a[key].items()})
