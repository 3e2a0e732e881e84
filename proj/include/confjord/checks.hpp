#pragma once

#include "confjord/conformal.hpp"
#include "confjord/report.hpp"

namespace confjord {

/// Skew-symmetry of a single pair, three ways: the canonical product, the
/// literal residue transport of the flipped product, and the derived
/// component identity a_n(b) = sum_i (-1)^{n+i+1} d^i(b_{n+i}(a)) / i!.
/// All three must agree componentwise.
VerificationReport check_skew(const ConformalAlgebra& alg, const ConformalElement& a,
                              const ConformalElement& b, const std::string& a_name,
                              const std::string& b_name);
VerificationReport check_skew(const ConformalAlgebra& alg, BasisId a, BasisId b);

/// Jacobi-type axiom of a single triple, two ways: the component identity
///   a_m(b_n(c)) - b_n(a_m(c)) = sum_i C(m,i) (a_i(b))_{m+n-i}(c)
/// over the locality-derived (m, n) window, and the same statement assembled
/// as a two-variable series from the residue expansion of the right side.
VerificationReport check_jacobi(const ConformalAlgebra& alg, const ConformalElement& a,
                                const ConformalElement& b, const ConformalElement& c,
                                const std::string& a_name, const std::string& b_name,
                                const std::string& c_name);
VerificationReport check_jacobi(const ConformalAlgebra& alg, BasisId a, BasisId b, BasisId c);

/// Translation covariance over all listed basis pairs and d-powers up to
/// sample_depth: Y(dA, z)B = d/dz Y(A, z)B, the commutator form
/// d(Y(A,z)B) - Y(A,z)dB = Y(dA,z)B, and the skew transport of Y(dA, z)B
/// against its direct value. The transport leg ties covariance to the axioms,
/// so corrupted structure maps are caught here with a concrete witness.
VerificationReport check_translation(const ConformalAlgebra& alg,
                                     const std::vector<BasisId>& basis, long sample_depth);

/// Generator sufficiency: runs skew/Jacobi on generator pairs/triples and
/// independently on d-shifted elements, then asserts the two verdicts agree.
/// A disagreement would contradict the generator-sufficiency theorem and is
/// flagged as a kernel bug (errored report).
VerificationReport check_on_generators(const ConformalAlgebra& alg, long extended_depth,
                                       std::size_t max_triples = SIZE_MAX);

/// Weight grading: components shift weights as predicted and the per-weight
/// generator slices are bounded; reports the observed growth bound N0.
VerificationReport check_weight_grading(const ConformalAlgebra& alg,
                                        const std::vector<BasisId>& basis, long max_weight);

}  // namespace confjord
