# %% [markdown]
# # Checking parameter tuples against the Higgs bundle families
#
# Over (2,3,11) there are four bundles worth looking at: two stable
# ternary, one stable binary and the trivial one.

# %%
from toledo.divisors import parse_divisor
from toledo.families import (
    Family,
    FamilyWitness,
    admissible_c_tuples,
    check_witness,
    derived_quantities,
    toledo_of_witness,
)
from toledo.seifert import parse_signature

sig = parse_signature("2,3,11")
b = parse_divisor(sig, "-2:1,2,10")
tuples = {
    "V1": FamilyWitness(Family.STABLE_TERNARY, parse_divisor(sig, "-1:1,1,1"), b),
    "V2": FamilyWitness.trivial(sig),
    "V3": FamilyWitness(Family.STABLE_BINARY, parse_divisor(sig, "-1:0,1,7"), b),
    "V4": FamilyWitness(Family.STABLE_TERNARY, parse_divisor(sig, "-1:1,1,2"), b),
}
for name, w in tuples.items():
    print(name, w.family.value, check_witness(w).ok, toledo_of_witness(w))

# %% [markdown]
# The binary condition quantifies over classes `c` with `d1 >= 0` and
# `C >= (2/3)(A + B)`.  For V3 exactly one such `c` exists, namely `b`.

# %%
w = tuples["V3"]
q = derived_quantities(w.a, w.b)
print("A =", q.A, "B =", q.B, "d2 =", q.d2)
for c in admissible_c_tuples(w.a, w.b):
    print("admissible c:", c, derived_quantities(w.a, w.b, c))

# %% [markdown]
# A rejected tuple reports every failed condition.

# %%
bad = FamilyWitness(Family.STABLE_TERNARY, parse_divisor(sig, "0:0,0,0"), b)
print(check_witness(bad).describe())
