"""Witness certificates for gcds and principal ideals over Z and Z[x].

Every result carries explicit coefficients and multipliers, so it can be
re-checked with exact ring arithmetic alone.
"""

from .combine import (
    CombinationCertificate,
    Combine3Trace,
    certificate_failures,
    combine2,
    combine3,
    combine_n,
    trace_failures,
    verify_certificate,
)
from .cyclo import (
    DivisorInstance,
    InvalidInstanceError,
    OracleDisagreement,
    build_p,
    divisors_of,
    gcd_oracle,
    pairwise_witness,
    theorem0_certificate,
    theorem0_products,
)
from .integers import INT, IntRing, ext_gcd
from .polyz import POLYZ, PolyZ, PolyZRing, binomial_bezout, binomial_pair, content, primitive_part
from .products import (
    LemmaWitness,
    PrincipalSumWitness,
    SumProductsCertificate,
    int_subset_witness,
    int_sum_of_products,
    intersect_principal,
    sum_of_products,
    verify_sum_products,
)
from .ring import (
    BezoutPair,
    CertificateError,
    DivisionError,
    MissingWitnessError,
    RingAdapter,
    WitnessError,
    verify_bezout,
)

__version__ = "0.1.0"
