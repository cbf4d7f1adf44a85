"""
Jack polynomials from scratch
=============================

Build J_lambda by orthogonalizing monomials under the alpha-deformed Hall
product, then look at the closed forms that come for free.
"""

# %%
from bmaps import build_jack, jack, jack_norm
from bmaps.exactalg import RatFunc
from bmaps.symfun import hall_scalar, specialize_single_variable

# %%
# Degree 2 is small enough to read off directly.
for lam in ([2], [1, 1]):
    print(f"J_{lam} =", jack(lam).to_json()["coeffs"])
    print("   norm:", jack_norm(lam))

# %%
# The two are orthogonal, and only the one-part Jack survives at (t, 0, 0, ...).
print(hall_scalar(jack([2]), jack([1, 1])))
print(specialize_single_variable(jack([2])), specialize_single_variable(jack([1, 1])))

# %%
# At alpha = 1 Jack polynomials are hook-product multiples of Schur functions.
table = build_jack(4)
for lam, f in table.p.items():
    at_one = {str(mu): str(c(1)) for mu, c in f.coeffs.items() if c(1)}
    print(lam, at_one)

# %%
# The norm of J_(n) factors as n! alpha^n (1+alpha)(1+2alpha)...
a = RatFunc.var()
print(jack_norm([3]) == (a + 1) * (a * 2 + 1) * a**3 * 6)
