"""
The coefficients h_{mu,nu}^tau(beta)
====================================

Take the triple Jack series, its logarithm, substitute alpha = beta + 1,
and read off polynomials in beta.
"""

# %%
from bmaps import extract_h
from bmaps.hseries import build_phi, expansion_check, marginal_sum_check

# %%
# The degree-1 slice of the series is p_1 p_1 p_1 / alpha.
phi = build_phi(2)
print(phi.slices[1])

# %%
table = extract_h(4)
for (mu, nu, tau), h in table.items(2):
    print(f"h_{{{mu};{nu}}}^{{{tau}}} = {h}")

# %%
# Every coefficient is a polynomial with nonnegative integer coefficients.
# Evaluating at 0 and 1 counts orientable maps and all maps.
for (mu, nu, tau), h in table.items(3):
    if h:
        print(f"({mu};{nu};{tau})  h = {h}   h(0) = {h(0)}   h(1) = {h(1)}")

# %%
# Summing over tau gives a power of (1 + beta) times h at 0, and every
# entry expands in the basis beta^(g-2i) (1+beta)^i.
print(marginal_sum_check(table, 4), expansion_check(table, 4))
