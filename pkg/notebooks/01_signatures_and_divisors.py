# %% [markdown]
# # Signatures and vertical divisors
#
# A signature is just the list of multiple-fibre orders.  Vertical divisor
# classes `aF + sum a_k F_k` are kept in normal form `0 <= a_k < m_k`.

# %%
from fractions import Fraction

from toledo.divisors import (
    a_value,
    canonical_divisor,
    cohomology_dims,
    lattice_coordinate,
    normalize,
    parse_divisor,
    star_certificate,
)
from toledo.seifert import orbifold_presentation, parse_signature

sig = parse_signature("2,3,11")
print(sig, "M =", sig.M)
print(orbifold_presentation(sig))

# %% [markdown]
# Normalization carries multiples of `m_k` into the F-coefficient.

# %%
print(normalize(sig, -1, [0, 0, 12]))           # 12 F_3 = F + F_3
b = parse_divisor(sig, "-2:1,2,10")
print(b, a_value(b))                            # 5/66

# %% [markdown]
# The value map is injective, so `M * value` is an integer coordinate for a
# class; the enumeration code works entirely in these coordinates.

# %%
print(lattice_coordinate(b), Fraction(lattice_coordinate(b), sig.M))

# %%
K = canonical_divisor(sig)
print("K =", K, "h0, h1 =", cohomology_dims(K))
for a in range(-3, 3):
    print(a, cohomology_dims(normalize(sig, a, [0, 0, 0])))

# %% [markdown]
# Divisibility by three of a summed class, with a certificate
# `3y + sum s_k = total`, `3 y_k - m_k s_k = t_k`.

# %%
cert = star_certificate(sig, -3, [2, 3, 12])
print(cert, cert.verify(sig, -3, [2, 3, 12]))
print(star_certificate(sig, 0, [0, 1, 0]))     # None: blocked mod 3
