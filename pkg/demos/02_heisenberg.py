# %% [markdown]
# # Heisenberg nilmanifolds
#
# h₃ and h₅ have one central direction.  Their cup-length stays below the
# dimension, although the category of the nilmanifold equals it.

# %%
from nilcoh import CohomologyRing, classify, cup_length, cup_length_oracle, heisenberg
from nilcoh.bounds import cat_of_nilmanifold
from nilcoh.cohomology import betti_by_ranks

for n in (3, 5):
    h = heisenberg(n)
    report = classify(h)
    ring = CohomologyRing.of(h)
    print(f"heisenberg({n}): lower central series {list(report.lower_central_series)}")
    print("  betti:", *ring.betti_numbers, "  (from ranks alone:", *betti_by_ranks(ring.complex), ")")
    print(f"  cl = {cup_length(ring).cl} (oracle {cup_length_oracle(ring)}), cat = {cat_of_nilmanifold(h)}")

# %% [markdown]
# The flag of ideals certifying complete solvability for h₃ is read off the
# classification report.

# %%
flag = classify(heisenberg(3)).completely_solvable_certificate
for k, basis in enumerate(flag, start=1):
    print(f"I_{k} =", [tuple(int(x) for x in v) for v in basis])
