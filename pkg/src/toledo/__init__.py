"""Orbifold Toledo invariants of Seifert fibered homology 3-spheres.

The public surface is re-exported here; submodules hold the details:
``seifert`` (signatures), ``divisors`` (vertical divisor classes),
``families`` (Higgs bundle family checks), ``lattice`` and ``spectrum``
(enumeration), ``cech`` (the coboundary rank oracle), ``report`` and ``cli``.
"""

from .cech import (
    BadShape,
    ScanReport,
    SearchExhausted,
    SigmaVector,
    ThetaMatrix,
    construct_generic_sigma,
    delta_injective,
    h0_extension_twist,
    lemma_equivalence_scan,
    theta_matrix,
)
from .divisors import (
    StarCertificate,
    VerticalDivisor,
    a_value,
    canonical_divisor,
    cohomology_dims,
    divisible_by_three,
    normalize,
    parse_divisor,
    star_certificate,
    star_certificate_floorform,
    twisted_one_form_h0,
)
from .families import (
    Family,
    FamilyWitness,
    Verdict,
    check_reducible_ternary,
    check_stable_binary,
    check_stable_ternary,
    check_witness,
    toledo_of_witness,
)
from .seifert import SeifertSignature, SignatureError, parse_signature, validate_signature
from .spectrum import (
    GroupVariant,
    SpectrumReport,
    ToledoValue,
    completeness_margin_check,
    enumerate_family,
    toledo_spectrum,
)

__version__ = "0.1.0"
