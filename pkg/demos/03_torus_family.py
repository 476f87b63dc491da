# %% [markdown]
# # Tori
#
# For the abelian algebra ℝⁿ every d vanishes, so Hᵏ has dimension C(n, k)
# and the product x₁⋯xₙ is a nonzero top class.

# %%
from nilcoh import CohomologyRing, cup_length, is_cohomologically_symplectic, torus
from nilcoh.exterior import format_element

for n in range(2, 7):
    ring = CohomologyRing.of(torus(n))
    line = f"T^{n}: betti {' '.join(map(str, ring.betti_numbers))}, cl = {cup_length(ring).cl}"
    if n % 2 == 0:
        res = is_cohomologically_symplectic(ring)
        line += f", ω = {format_element(res.witness_form)}, ω^{n // 2} = {ring.format_class(res.top_power)}"
    print(line)
