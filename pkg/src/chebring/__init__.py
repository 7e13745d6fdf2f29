"""Chebyshev-polynomial arithmetic over residue rings.

The package exposes modular Chebyshev evaluation, an Euler-style primality
criterion with pseudoprime and mod-p^2 exception searches, the order-class
structure of the residue partition, exact cyclotomic factorizations,
exponential-sum computations over the partition cells, a toy key-exchange
protocol, and polynomial-congruence primality checks.
"""

from .aks import (
    ModPolynomial,
    ResourceLimitError,
    chebyshev_poly_mod,
    coefficient_formula,
    lucas_step_check,
    prime_iff_power_check,
    shifted_congruence_check,
)
from .criteria import (
    CharPair,
    PseudoprimeVerdict,
    WieferichHit,
    characters,
    euler_criterion_failures,
    euler_test,
    euler_test_modp2,
    full_pseudoprime_test,
    lucas_lehmer,
    pseudoprime_search,
    strong_profile,
    taxicab_search,
    weak_pseudoprime_test,
    wieferich_search,
)
from .crypto import (
    DhParty,
    PrimitiveRootReport,
    ProtocolError,
    decode_fields,
    dh_finish,
    dh_keygen,
    discrete_log_bruteforce,
    encode_fields,
    is_chebyshev_square,
    primitive_root_search,
)
from .expsum import (
    ExpSumReport,
    conjugacy_check,
    difference_lemma_check,
    gauss_sums,
    partition_sums,
    shifted_character_sums,
    weil_sum,
)
from .modarith import (
    ChebPair,
    Modulus,
    RingElement,
    TransferMatrix,
    cheb_compose_check,
    cheb_eval,
    cheb_t,
    element,
    identity_pair,
    jacobi,
    pair_mul,
)
from .primes import divisors, euler_phi, factorize, is_prime, primes_in, primes_upto
from .structure import (
    IntPolynomial,
    PartitionTable,
    ResidueDomain,
    ShiftRefinement,
    character_transport_check,
    cyclotomic,
    cyclotomic_factorization_check,
    omega_order,
    order_class_decomposition,
    partition,
    psi,
    real_cyclotomic,
    residue_shift_refinement,
    splitting_check,
    splitting_roots,
)

__version__ = "0.1.0"

__all__ = [
    "CharPair",
    "ChebPair",
    "DhParty",
    "ExpSumReport",
    "IntPolynomial",
    "ModPolynomial",
    "Modulus",
    "PartitionTable",
    "PrimitiveRootReport",
    "ProtocolError",
    "PseudoprimeVerdict",
    "ResidueDomain",
    "ResourceLimitError",
    "RingElement",
    "ShiftRefinement",
    "TransferMatrix",
    "WieferichHit",
    "character_transport_check",
    "characters",
    "cheb_compose_check",
    "cheb_eval",
    "cheb_t",
    "chebyshev_poly_mod",
    "coefficient_formula",
    "conjugacy_check",
    "cyclotomic",
    "cyclotomic_factorization_check",
    "decode_fields",
    "dh_finish",
    "dh_keygen",
    "difference_lemma_check",
    "discrete_log_bruteforce",
    "divisors",
    "element",
    "encode_fields",
    "euler_criterion_failures",
    "euler_phi",
    "euler_test",
    "euler_test_modp2",
    "factorize",
    "full_pseudoprime_test",
    "gauss_sums",
    "identity_pair",
    "is_chebyshev_square",
    "is_prime",
    "jacobi",
    "lucas_lehmer",
    "lucas_step_check",
    "omega_order",
    "order_class_decomposition",
    "pair_mul",
    "partition",
    "partition_sums",
    "prime_iff_power_check",
    "primes_in",
    "primes_upto",
    "primitive_root_search",
    "pseudoprime_search",
    "psi",
    "real_cyclotomic",
    "residue_shift_refinement",
    "shifted_character_sums",
    "shifted_congruence_check",
    "splitting_check",
    "splitting_roots",
    "strong_profile",
    "taxicab_search",
    "weak_pseudoprime_test",
    "weil_sum",
    "wieferich_search",
]
