#pragma once

#include "confjord/matfam.hpp"
#include "confjord/report.hpp"
#include "confjord/rng.hpp"

namespace confjord {

/// Subalgebra closure: every structure-map component of every pair of family
/// basis elements up to w_max, and every derivation image, passes membership.
VerificationReport closure_check(const FamilyKind& f, long w_max);

/// Same products, membership tested against a different family; used to
/// validate that the checker detects escapes.
VerificationReport closure_check_cross(const FamilyKind& products_of,
                                       const FamilyKind& membership_in, long w_max);

/// Simplicity probe: saturates the span of a nonzero seed under the
/// derivation and under left/right structure-map components by family basis
/// elements of weight <= w_max (results capped at top weight w_cap), then
/// requires the full family span at every weight <= w_target.
VerificationReport ideal_probe(const FamilyKind& f, const MatElement& seed, long w_max,
                               long w_target, long w_cap);

/// Random nonzero combination of the family basis up to w_max.
MatElement random_family_element(const FamilyKind& f, long w_max, Rng& rng);

/// Commutativity plus the Jordan identity on the minimal-weight slice:
/// exhaustive on the four-variable linearization over basis quadruples plus
/// direct (x o y) o x^2 = x o (y o x^2) on random elements. L must be even.
VerificationReport check_jordan(const FamilyKind& f, long random_trials, Rng& rng);

/// Anticommutativity plus the Jacobi identity, basis triples plus random
/// elements. L must be odd.
VerificationReport check_lie(const FamilyKind& f, long random_trials, Rng& rng);

struct IdentifyResult {
    std::string label;  // JordanA, JordanB, JordanC, gl, o, sp
    Rational lambda;    // fitted global scalar: product = lambda * model product
};

/// Matches the minimal-weight product table against the model algebras of the
/// right parity, allowing one global scalar. Throws KernelError when nothing
/// matches (that would falsify the classification at this size).
IdentifyResult identify_model(const FamilyKind& f, VerificationReport& rep);

/// Generation from the minimal-weight slice: fixed-point component saturation
/// truncated at w_max, compared per weight against the family dimensions.
/// Outside the theorem's hypotheses (dagger with k = 2) the observed
/// dimensions are recorded without failing the report.
VerificationReport generation_check(const FamilyKind& f, long w_max);

}  // namespace confjord
