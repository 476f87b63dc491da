# %% [markdown]
# # A completely solvable example
#
# solv3 has brackets [e1, e3] = e1 and [e2, e3] = -e2.  It is solvable but
# not nilpotent.  ad e3 has real eigenvalues, and a flag of ideals
# certifies complete solvability.  Lattice existence is not checked.

# %%
from nilcoh import CohomologyRing, LieAlgebra, classify, full_report, lookup
from nilcoh.linalg import charpoly

s = lookup("solv3")
r = classify(s)
print("nilpotent:", r.is_nilpotent, " solvable:", r.is_solvable)
print("char poly of ad e3 (ascending):", [str(c) for c in charpoly(s.ad(3))])
print("certified flag:", r.certified_completely_solvable)
print("betti:", *CohomologyRing.of(s).betti_numbers)

# %% [markdown]
# Crossing with a circle gives a 4-dimensional candidate whose report
# derives asphericity from the certificate.

# %%
print(full_report(lookup("solv3_sum_r")).to_text())

# %% [markdown]
# A rotation algebra has complex spectrum, so no flag exists and the
# asphericity question stays open.

# %%
rot = LieAlgebra(3, {(1, 3, 2): -1, (2, 3, 1): 1}, name="rotation")
r = classify(rot)
print("real spectrum:", r.real_spectrum_on_basis, " certificate:", r.completely_solvable_certificate)
