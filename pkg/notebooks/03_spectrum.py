# %% [markdown]
# # The Toledo spectrum
#
# `toledo_spectrum` scans all four families in integer lattice coordinates
# and closes the result under negation.

# %%
import time

import numpy as np

from toledo.report import spectrum_table
from toledo.seifert import parse_signature
from toledo.spectrum import GroupVariant, completeness_margin_check, toledo_spectrum

rep = toledo_spectrum(parse_signature("2,3,11"))
print(spectrum_table(rep))

# %% [markdown]
# Smaller and larger signatures.  PU(2,1) uses only the stable families.

# %%
for text in ["2,3,7", "3,4,5", "2,5,7", "3,5,7", "2,3,5,7"]:
    sig = parse_signature(text)
    u = toledo_spectrum(sig, witness_cap=1)
    p = toledo_spectrum(sig, GroupVariant.PU21, witness_cap=1, margin_delta=None)
    print(f"{str(sig):>10}  U21 {u.component_lower_bound:>5}  PU21 {p.component_lower_bound:>5}"
          f"  margin {u.margin_check_passed}")

# %% [markdown]
# A four-fibre example with M = 3465.  Witness records are built lazily, so
# asking only for values stays quick.

# %%
sig = parse_signature("5,7,9,11")
t0 = time.perf_counter()
big = toledo_spectrum(sig, witness_cap=3, margin_delta=None)
print(big.component_lower_bound, "values in", round(time.perf_counter() - t0, 1), "s")
print(big.family_counts)
vals = np.array([float(v) for v in big.value_set()])
print("range", vals.min(), vals.max())
hist, edges = np.histogram(vals, bins=8)
for h, lo, hi in zip(hist, edges[:-1], edges[1:]):
    print(f"[{lo:+.2f}, {hi:+.2f})  {h}")

# %%
print("margin check, delta=2:", completeness_margin_check(sig, 2))
