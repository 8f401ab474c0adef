"""theta-stable parabolic classes of su(p,q), their invariants, and the Q minus D check."""
from .cohomology import PoincarePolynomial, gaussian_binomial, hodge_polynomial, hodge_type_admissible
from .decomposability import SymmetricPair, is_discretely_decomposable, non_decomposability_witness
from .enumeration import BudgetExceeded, count_patterns, enumerate_all, enumerate_Q
from .parabolic import (
    DominanceError,
    Lambda,
    LevelPattern,
    ParabolicInvariants,
    canonicalize,
    distinguished_class,
    invariants,
)
from .roots import Root, Signature, compact_positive_roots, noncompact_weights, pairing
from .verifier import (
    BlockProfile,
    VerificationReport,
    block_profile,
    check_proof_inequalities,
    compute_t,
    cycle_dimensions,
    verify_theorem,
)

__version__ = "0.1.0"
