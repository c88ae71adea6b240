#pragma once

#include <stdexcept>
#include <vector>

#include "srr/classes.hpp"
#include "srr/ids.hpp"
#include "srr/partition.hpp"

// The explicit weight-preserving maps between ordinary and signed classes,
// with their inverses.  Every public map validates source membership
// before mapping and target membership after; a violation throws
// map_error rather than silently producing a value.

namespace srr {

class map_error : public std::domain_error {
public:
    explicit map_error(const std::string& what) : std::domain_error(what) {}
};

// Parity-alternating prefix sequence added to the source partition before
// reading off its least-weight gap-free companion.
enum class BVariant { ZERO_START, ONE_START, ALL_ZERO };

enum class MapFamily { F, H, G, PHI };

struct MapInfo {
    MapId id;
    ClassId source;  // ordinary class
    ClassId target;  // signed class
    MapFamily family;
    BVariant b_variant;          // meaningful for family F
    ParityVariant parity;        // meaningful for families H, G, PHI
};

const MapInfo& map_info(MapId id);

// t(B): t_1 = b_1, t_j = t_{j-1} + [b_j != b_{j-1}].  The result is weakly
// increasing with t_j <= j and t_j = b_j (mod 2) termwise; an initial run
// of 0s is retained.  Throws std::invalid_argument on empty input.
std::vector<int> t_of(const BinarySequence& bits);

// Family f (ascending view): A = (lambda + B) mod 2; if A is all zero the
// partition is its own image, otherwise positives = lambda + t(A) and
// negative sizes = conjugate(t(A)).  id selects among F_P, F_D, F_RR1,
// F_RR2 (which fixes both the B variant and the class pair).
SignedPartition map_f(const Partition& lambda, MapId id,
                      const ClassSystem& sys = ClassSystem::standard());

// Inverse of family f: subtract the conjugate of the negative sizes
// (padded with initial zeros) from the positives on the ascending view.
Partition map_f_inverse(const SignedPartition& gamma, MapId id,
                        const ClassSystem& sys = ClassSystem::standard());

// Family h (descending view, j parts):
//   pi_k = gamma_k + 4k - 2j - 2 + w(gamma_k) + 2 * sum_{i>k} w(gamma_i),
// negative sizes w(gamma_k)*(2k-1), zeros dropped; w is the parity
// indicator (swapped to EVEN_IS_1 for H_LG2).
SignedPartition map_h(const Partition& gamma, MapId id,
                      const ClassSystem& sys = ClassSystem::standard());

// Inverse of family h via the flag vector f_j = [size 2j-1 is present]:
//   gamma_j = pi_j - 4j + 2r + 2 - f_j - 2 * sum_{i>j} f_i.
Partition map_h_inverse(const SignedPartition& pi, MapId id,
                        const ClassSystem& sys = ClassSystem::standard());

// Family g (descending view):
//   tau_j = lambda_j + w(lambda_j) + 2 * sum_{i>j} w(lambda_i),
// negative sizes w(lambda_k)*(2k-1); every tau_j is even and consecutive
// tau differ by at least 4.
SignedPartition map_g(const Partition& lambda, MapId id,
                      const ClassSystem& sys = ClassSystem::standard());

// Inverse of family g: lambda_j = tau_j - f_j - 2 * sum_{i>j} f_i.
Partition map_g_inverse(const SignedPartition& tau, MapId id,
                        const ClassSystem& sys = ClassSystem::standard());

// Family phi (descending view):
//   pi_j = lambda_j + w(lambda_j) + 2 * sum_{i<j} w(lambda_i),
// and size 2i-1 is a negative exactly when the i-th SMALLEST part is odd
// (the pairing runs in reversed part order, unlike h and g).
SignedPartition map_phi(const Partition& lambda, MapId id,
                        const ClassSystem& sys = ClassSystem::standard());

// Inverse of family phi with reversed flag indexing:
//   lambda_j = pi_j - f_{k-j+1} - 2 * sum_{i=1}^{j-1} f_{k-i+1}.
Partition map_phi_inverse(const SignedPartition& pi, MapId id,
                          const ClassSystem& sys = ClassSystem::standard());

// Dispatch by MapId.
SignedPartition apply_forward(MapId id, const Partition& source,
                              const ClassSystem& sys = ClassSystem::standard());
Partition apply_inverse(MapId id, const SignedPartition& target,
                        const ClassSystem& sys = ClassSystem::standard());

} // namespace srr
