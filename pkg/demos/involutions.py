"""
Sign-reversing involutions on unicellular maps
==============================================

Twisting well-chosen edges pairs up unicellular maps with at least one
handle so that eta changes parity.  At beta = -1 only unhandled maps
survive, which is the unicellular beta = -1 theorem.
"""

# %%
from collections import Counter

from bmaps import extract_h, sigma_eta, sigma_two_handles
from bmaps.harness import unicellular_maps
from bmaps.mapstats import eta, handle_count, ReconnectionGap
from bmaps.mapcore import map_type, genus2x

# %%
maps = unicellular_maps(5)
with_handle = [m for m in maps if handle_count(m) > 0]
flips = Counter((eta(m) + eta(sigma_eta(m))) % 2 for m in with_handle)
print(len(with_handle), "maps with a handle; parity flips:", flips)

# %%
h = extract_h(5)
n = 5
for (mu, nu, tau), poly in h.items(n):
    if tau == (n,) and poly:
        unhandled = sum(1 for m in maps if map_type(m).as_tuple() == (mu, nu, tau) and handle_count(m) == 0)
        print(f"({mu};{nu})  h(-1) = {poly(-1)}   unhandled = {unhandled}")

# %%
# The two-handle involution sends eta to 2 - eta.
two = [m for m in maps if genus2x(m) == 4 and handle_count(m) == 2]
print(Counter((eta(m), eta(sigma_two_handles(m))) for m in two))

# %%
# At six edges eight maps fall outside the reconnection construction.
gap = 0
for m in unicellular_maps(6):
    if genus2x(m) == 4 and handle_count(m) == 2:
        try:
            sigma_two_handles(m)
        except ReconnectionGap:
            gap += 1
print("maps without a bipartite reconnection:", gap)
