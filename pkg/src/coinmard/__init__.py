"""coinmard: two-coin Frobenius representations, power-of-two exponent
certificates and bound audits, and Hadamard matrix construction with
bit-packed verification."""

from .exponents import (
    AuditRow,
    BoundModel,
    ExponentCertificate,
    MinimalExponentWitness,
    audit,
    audit_range,
    bound_value,
    corollary7_certificate,
    gcd_class,
    minimal_exponent,
    multiplicativity_check,
    paper_k,
    sylvester_threshold,
)
from .frobenius import (
    CoinPair,
    Representation,
    frobenius_number,
    is_representable,
    represent,
    represent_oracle,
)
from .hadamard import (
    HadamardMatrix,
    is_hadamard,
    kronecker,
    order_admissible,
    paley_i,
    sylvester,
    target_order,
)
from .kernels import KERNEL

__all__ = [
    "AuditRow",
    "BoundModel",
    "CoinPair",
    "ExponentCertificate",
    "HadamardMatrix",
    "KERNEL",
    "MinimalExponentWitness",
    "Representation",
    "audit",
    "audit_range",
    "bound_value",
    "corollary7_certificate",
    "frobenius_number",
    "gcd_class",
    "is_hadamard",
    "is_representable",
    "kronecker",
    "minimal_exponent",
    "multiplicativity_check",
    "order_admissible",
    "paley_i",
    "paper_k",
    "represent",
    "represent_oracle",
    "sylvester",
    "sylvester_threshold",
    "target_order",
]
