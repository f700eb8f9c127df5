# %% [markdown]
# # Coboundary injectivity by exact rank
#
# The extension class is a coefficient vector `sigma_{-1}, ..., sigma_{d2+1}`.
# A twisted section `(s_0, ..., s_{d1})` is killed by the coboundary iff
# `Theta s = 0`, with `Theta[j, i] = sigma_{j-i}` for `d3 < j < 0`.

# %%
from toledo.cech import (
    construct_generic_sigma,
    delta_injective,
    exact_rank,
    lemma_equivalence_scan,
    theta_matrix,
    verify_generic,
)

g = construct_generic_sigma(-5)
print("generic sigma:", g.as_strings(), "verified:", verify_generic(g))
t = theta_matrix(g, 2, -5)
for j, row in zip(t.rows, t.entries):
    print(j, [str(x) for x in row])
print("rank", exact_rank(t.entries), "injective", delta_injective(g, 2, -5))

# %% [markdown]
# Scan the grid of `(d1, d3)` and compare with
# `d1 + 1 <= min(-d2 - 1, -d3 - 1)`; `I` marks injective cells.

# %%
for d2 in range(-2, -7, -1):
    rep = lemma_equivalence_scan(d2, 8, random_trials=20, seed=0)
    print("d2 =", d2, "mismatches:", rep.mismatches)

rep = lemma_equivalence_scan(-4, 6)
d3s = sorted({c.d3 for c in rep.cells}, reverse=True)
cell = {(c.d1, c.d3): c for c in rep.cells}
for d1 in range(7):
    print(d1, "".join("I" if cell[d1, d3].injective else "." for d3 in d3s))
