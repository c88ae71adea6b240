#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "srr/ids.hpp"
#include "srr/partition.hpp"

// Membership predicates and exhaustive enumeration for every ordinary and
// signed partition class in the catalog.
//
// Each class is described by one declarative definition (difference
// conditions, parity pattern, part bounds, negative-size rule, coupling
// clause).  Both the predicate and the enumerator interpret that same
// definition, so they cannot drift apart; corruption experiments
// (MutationId) replace one clause of a definition and rely on the
// cross-oracle harness to notice.

namespace srr {

class class_error : public std::domain_error {
public:
    explicit class_error(const std::string& what) : std::domain_error(what) {}
};

// Ordinary classes: local conditions on the weakly decreasing view.
struct OrdinaryDef {
    int min_part = 1;
    int min_gap = 0;                // required difference between consecutive parts
    bool even_pair_gap4 = false;    // both parts even  -> difference >= 4
    bool odd_pair_gap4 = false;     // both parts odd   -> difference >= 4
    bool smallest_is_1_or_2 = false;
};

// Positive-part pattern of a signed class, on the ascending view
// (1-indexed from the smallest part).
enum class PosParity {
    AlternatingEvenStart,  // part i = i-1 (mod 2): even, odd, even, ...
    AlternatingOddStart,   // part i = i (mod 2): odd, even, odd, ...
    AllEven,
    AllOdd,
};

struct PositiveRule {
    PosParity parity;
    int min_gap;             // part_{i+1} - part_i >= min_gap
    int min_part_const = 1;  // every part >= max(min_part_const,
    int min_part_k_coeff = 0;//                   k_coeff*k + k_offset)
    int min_part_k_offset = 0;
};

// Negative-part sizes are drawn from {first, first+step, first+2*step, ...}
// bounded by bound_k_coeff*k + bound_k_offset (k = number of positives).
struct NegativeRule {
    int first = 1;
    int step = 1;
    int bound_k_coeff = 1;
    int bound_k_offset = 0;
    bool distinct = true;
};

// Extra clause tying the smallest positive part to the negatives
// (t = number of negatives, u = smallest negative size, delta = [u == 1]).
// Vacuous when there are no negatives.
enum class Coupling {
    None,
    SmallestPosOver2TMinusDelta,  // smallest positive > 2t - delta
    SmallestPosOver2TPlusDelta,   // smallest positive > 2t + delta
    SmallestPosOver2T,            // corrupted variant: delta dropped
};

struct SignedDef {
    PositiveRule pos;
    NegativeRule neg;
    Coupling coupling = Coupling::None;
};

struct ClassInfo {
    ClassId id;
    Side side;
    std::string description;
    std::string notes;  // recorded reading resolutions, empty when none
    std::variant<OrdinaryDef, SignedDef> def;
};

// Documented single-clause corruptions for falsifiability experiments.
enum class MutationId {
    GG1A_NEGATIVES_NOT_DISTINCT,  // GG1_ANDREWS_SIGNED: negatives may repeat
    RR1_GAP_ONE,                  // RR1: minimum difference 2 -> 1
    P_SIGNED_SMALLEST_ODD,        // P_SIGNED: alternation starts odd, not even
    E_THRESHOLD_NO_DELTA,         // LG1_E_SIGNED: threshold 2t - [u=1] -> 2t
    GG2_MIN_PART_TWO,             // GG2: minimum part 3 -> 2
    LG2_H_NEG_MOD_ONE,            // LG2_H_SIGNED: negatives = 3 (mod 4) -> 1 (mod 4)
};

const std::vector<MutationId>& all_mutations();
std::string_view to_string(MutationId id);
std::string_view mutation_description(MutationId id);

class ClassSystem {
public:
    static const ClassSystem& standard();

    // A copy of this system with one clause corrupted.
    ClassSystem mutated(MutationId mutation) const;

    const ClassInfo& info(ClassId id) const;

    // Membership.  Throws class_error when the object's side does not
    // match the class's side.
    bool is_member(ClassId id, const Partition& p) const;
    bool is_member(ClassId id, const SignedPartition& s) const;

    // Exhaustive enumeration of the weight-n members, each emitted once.
    void for_each(ClassId id, int n, const std::function<void(const Partition&)>& fn) const;
    void for_each(ClassId id, int n, const std::function<void(const SignedPartition&)>& fn) const;

    // Materialized, canonically sorted.
    std::vector<Partition> enumerate_ordinary(ClassId id, int n) const;
    std::vector<SignedPartition> enumerate_signed(ClassId id, int n) const;

    std::uint64_t count(ClassId id, int n) const;

    // Bounding data used by the signed enumerator (exposed for tests):
    // the smallest positive total reachable with k positive parts, the
    // largest negative total allowed with k positive parts, and the
    // largest k a weight-n member can have.
    long long min_positive_total(ClassId id, int k) const;
    long long max_negative_total(ClassId id, int k) const;
    int max_positive_parts(ClassId id, int n) const;

private:
    ClassSystem();
    std::vector<ClassInfo> infos_;
};

// Convenience wrappers over ClassSystem::standard().
bool is_member(ClassId id, const Partition& p);
bool is_member(ClassId id, const SignedPartition& s);
std::uint64_t count_class(ClassId id, int n);
std::vector<Partition> enumerate_class_ordinary(ClassId id, int n);
std::vector<SignedPartition> enumerate_class_signed(ClassId id, int n);

} // namespace srr
