"""SRIM/SCRIM factors of x^n +- 1 over finite fields and LCD negacyclic codes.

The package factors x^n +- 1 over F_q and F_{q^2} through cyclotomic
cosets, classifies each irreducible factor as self-reciprocal (SRIM) or
self-conjugate-reciprocal (SCRIM), evaluates the closed-form and recursive
counting formulas for those factors, and enumerates/counts Euclidean and
Hermitian complementary-dual negacyclic codes.  Every formula is backed by
an independent brute-force route exercised in the test suite.
"""

from .cosets import (CyclotomicCoset, coset, is_scrim_coset, is_srim_coset,
                     partition_by_additive_order, representatives)
from .codes import (LcdCensus, NegacyclicCode, brute_dual, count_lcd,
                    dual_generator, enumerate_lcd, intersection_dim, is_lcd,
                    make_code)
from .counting import (CountBreakdown, ExtremeClass, classify_extreme_scrim,
                       classify_extreme_srim, count_scrim_cyclic,
                       count_scrim_cyclic_recursive, count_scrim_negacyclic,
                       count_scrim_negacyclic_recursive, count_srim_cyclic,
                       count_srim_cyclic_recursive, count_srim_negacyclic,
                       count_srim_negacyclic_recursive, count_two_prime_scrim,
                       count_two_prime_srim, lem2_check)
from .factorization import (FactorizationReport, FactorRecord, decompose_length,
                            factor_xn, minimal_poly_from_coset, report_from_json,
                            report_to_json, verify_report)
from .finitefield import (FieldCtx, RootOfUnity, frobenius, make_field,
                          primitive_root_of_unity)
from .numtheory import (FactoredInt, PrimePower, additive_ord, euler_phi,
                        exact_divide, factorize, is_good, is_good_oracle,
                        is_oddly_good, is_oddly_good_oracle, mult_ord)
from .polyring import Poly, is_irreducible

__version__ = "0.1.0"
