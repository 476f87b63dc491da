# %% [markdown]
# # Closed-orbit bounds
#
# For a closed symplectic 2m-manifold M, the cup-length count gives at least
# m + cl(M) closed trajectories on low energy levels.  When M is
# symplectically aspherical, a strict-category-weight argument raises this to
# 3m.  Every step below carries its citation and is re-checked arithmetically.

# %%
from nilcoh import check_steps, full_report, lookup, swgt_chain

report = full_report(lookup("kodaira_thurston"))
print(report.to_text())
print("steps check:", check_steps(report.steps))

# %% [markdown]
# The weight chain on its own, for a ℂPⁿ-fibration over an aspherical base:

# %%
bound, steps = swgt_chain(3, 2)
for s in steps:
    print(f"{s.statement:55s} [{s.citation}]")
print("cat E ≥", bound)

# %% [markdown]
# Across the even-dimensional catalog the aspherical bound wins unless the
# cup-length is maximal, as for tori.

# %%
for name in ["torus(4)", "kodaira_thurston", "filiform(4)", "h3_sum_h3", "h3_sum_r3", "h5_sum_r"]:
    r = full_report(lookup(name))
    if not r.symplectic:
        print(f"{name:18s} cl={r.cl}  no class with ω^m ≠ 0, no orbit bound")
        continue
    print(f"{name:18s} cl={r.cl}  m+cl={r.orbit_bound_kerman}  3m={r.orbit_bound_aspherical}  ({r.stronger})")
