#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Core value types: ordinary partitions, signed partitions and binary
// sequences.  All values are immutable after construction and every
// operation is a pure function, so they can be shared across threads
// without coordination.

namespace srr {

// Thrown when textual input cannot be parsed; `position` is the 0-based
// character offset of the offending token.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// A partition of a nonnegative integer.  Parts are stored canonically in
// weakly decreasing order; constructing from any permutation of the same
// multiset yields an identical value.  The empty partition has weight 0.
class Partition {
public:
    Partition() = default;

    // Canonicalizes (sorts) the given parts; every part must be >= 1.
    explicit Partition(std::vector<int> parts);

    // Parts in weakly decreasing order.
    const std::vector<int>& parts() const { return parts_; }

    // Parts in weakly increasing order (a copy; the formulas of the
    // alternating-parity bijections index from the smallest part).
    std::vector<int> ascending() const;

    long long weight() const { return weight_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    int largest() const { return parts_.empty() ? 0 : parts_.front(); }
    int smallest() const { return parts_.empty() ? 0 : parts_.back(); }

    bool contains(int part) const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;  // weakly decreasing
    long long weight_ = 0;
};

// Transpose of the Ferrers diagram: part j of the conjugate counts the
// parts of p that are >= j.  An involution; preserves weight.
Partition conjugate(const Partition& p);

// True when the distinct part sizes of p form an interval {1, 2, ..., m}.
// (The conjugate of such a partition has distinct parts whose largest
// equals the length of p.)
bool is_gap_free_with_one(const Partition& p);

// A signed partition: positives minus negatives.  `negatives` stores the
// absolute values of the negative parts; rendering them with a leading
// minus is a display concern.  weight = |positives| - |negatives| and may
// be any integer at the type level.
class SignedPartition {
public:
    SignedPartition() = default;
    SignedPartition(Partition positives, Partition negatives)
        : positives_(std::move(positives)), negatives_(std::move(negatives)) {}

    const Partition& positives() const { return positives_; }
    const Partition& negatives() const { return negatives_; }

    long long weight() const { return positives_.weight() - negatives_.weight(); }
    bool empty() const { return positives_.empty() && negatives_.empty(); }

    auto operator<=>(const SignedPartition&) const = default;

private:
    Partition positives_;
    Partition negatives_;
};

inline long long weight_of(const SignedPartition& s) { return s.weight(); }

// A finite 0/1 sequence (the input of the least-weight gap-free partition
// construction).
using BinarySequence = std::vector<int>;

enum class ParityVariant { ODD_IS_1, EVEN_IS_1 };

// Parity indicator: under ODD_IS_1 returns 1 iff k is odd, under
// EVEN_IS_1 returns 1 iff k is even.
inline int parity_indicator(long long k, ParityVariant variant)
{
    const int odd = static_cast<int>(((k % 2) + 2) % 2);
    return variant == ParityVariant::ODD_IS_1 ? odd : 1 - odd;
}

// Textual form: comma-separated integers, negatives with a leading minus,
// e.g. "16,16,16,-3,-5".  Empty objects render as "(empty)".  Parsing
// accepts the parts in any order and canonicalizes.
std::string format(const Partition& p);
std::string format(const SignedPartition& s);

Partition parse_partition(std::string_view text);
SignedPartition parse_signed_partition(std::string_view text);

} // namespace srr
