# %% [markdown]
# # The Kodaira-Thurston manifold
#
# K = (N₃/Γ) × S¹ comes from the algebra h₃ ⊕ ℝ with the single bracket
# [e1, e2] = e3.  Its dual generators α, β, γ, δ are e1..e4 here.

# %%
from nilcoh import CohomologyRing, build_complex, cup_length, kodaira_thurston
from nilcoh.exterior import ExteriorElement, format_element
from nilcoh.invariants import verify_class
from nilcoh.io import parse_expression

kt = kodaira_thurston()
cx = build_complex(kt)
for k in range(1, 5):
    dx = cx.apply(ExteriorElement.generator(4, k))
    print(f"d e{k} = {format_element(dx)}")

# %% [markdown]
# Only γ = e3 has a nonzero differential: dγ = α∧β.  The Betti numbers
# follow, along with representative cocycles in each degree.

# %%
ring = CohomologyRing.of(kt)
print("betti:", *ring.betti_numbers)
for k in range(5):
    print(f"H^{k}:", ", ".join(f"[{format_element(r)}]" for r in ring.representatives(k)))

# %% [markdown]
# [α]·[β] vanishes because α∧β = dγ.  The longest nonzero product has
# three factors.

# %%
a, b, d = ring.basis_classes(1)
print("[e1]·[e2] =", ring.format_class(ring.cup(a, b)))
res = cup_length(ring)
print(f"cl = {res.cl}, witness:", "·".join(ring.format_class(w) for w in res.witness))

# %% [markdown]
# The class of α∧δ + β∧γ is symplectic: it is closed and not exact, and its
# square is twice the top class.

# %%
omega = parse_expression("e1^e4 + e2^e3", 4)
v = verify_class(ring, omega)
print("closed:", v.closed, "exact:", v.exact, "ω^2 =", ring.format_class(v.top_power))
