#include "srr/classes.hpp"

#include <algorithm>

namespace srr {

namespace {

constexpr std::size_t kClassCount = 24;

std::size_t index_of(ClassId id) { return static_cast<std::size_t>(id); }

int required_parity(PosParity pattern, int position)
{
    switch (pattern) {
    case PosParity::AlternatingEvenStart: return (position - 1) % 2;
    case PosParity::AlternatingOddStart: return position % 2;
    case PosParity::AllEven: return 0;
    case PosParity::AllOdd: return 1;
    }
    return 0;
}

int min_part_bound(const PositiveRule& rule, int k)
{
    return std::max(rule.min_part_const, rule.min_part_k_coeff * k + rule.min_part_k_offset);
}

// Smallest admissible value at `position` (ascending, 1-indexed) given the
// previous part (0 when there is none).
int next_min_value(const PositiveRule& rule, int k, int position, int prev)
{
    int lo = min_part_bound(rule, k);
    if (position > 1) lo = std::max(lo, prev + rule.min_gap);
    if (lo < 1) lo = 1;
    if ((lo & 1) != required_parity(rule.parity, position)) ++lo;
    return lo;
}

long long min_tail_total(const PositiveRule& rule, int k, int from_position, int prev)
{
    long long total = 0;
    int p = prev;
    for (int pos = from_position; pos <= k; ++pos) {
        p = next_min_value(rule, k, pos, p);
        total += p;
    }
    return total;
}

int negative_bound(const NegativeRule& rule, int k)
{
    return rule.bound_k_coeff * k + rule.bound_k_offset;
}

std::vector<int> allowed_negative_sizes(const NegativeRule& rule, int k)
{
    std::vector<int> sizes;
    for (int v = rule.first; v <= negative_bound(rule, k); v += rule.step) sizes.push_back(v);
    return sizes;
}

bool check_ordinary(const OrdinaryDef& def, const Partition& p)
{
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < def.min_part) return false;
        if (i + 1 < parts.size()) {
            const int a = parts[i], b = parts[i + 1];
            int gap = def.min_gap;
            if (def.even_pair_gap4 && a % 2 == 0 && b % 2 == 0) gap = 4;
            if (def.odd_pair_gap4 && a % 2 == 1 && b % 2 == 1) gap = 4;
            if (a - b < gap) return false;
        }
    }
    if (def.smallest_is_1_or_2 && (p.empty() || p.smallest() > 2)) return false;
    return true;
}

bool check_signed(const SignedDef& def, const SignedPartition& sp)
{
    const int k = static_cast<int>(sp.positives().length());
    const auto asc = sp.positives().ascending();
    const int lo = min_part_bound(def.pos, k);
    for (int i = 1; i <= k; ++i) {
        const int v = asc[static_cast<std::size_t>(i - 1)];
        if (v < lo) return false;
        if ((v & 1) != required_parity(def.pos.parity, i)) return false;
        if (i > 1 && v - asc[static_cast<std::size_t>(i - 2)] < def.pos.min_gap) return false;
    }

    const int bound = negative_bound(def.neg, k);
    const auto sizes = sp.negatives().ascending();
    int prev = 0;
    for (int v : sizes) {
        if (v > bound) return false;
        if (v < def.neg.first || (v - def.neg.first) % def.neg.step != 0) return false;
        if (def.neg.distinct && v == prev) return false;
        prev = v;
    }

    if (def.coupling != Coupling::None && !sizes.empty()) {
        const long long t = static_cast<long long>(sizes.size());
        const int delta = sizes.front() == 1 ? 1 : 0;
        long long threshold = 0;
        switch (def.coupling) {
        case Coupling::SmallestPosOver2TMinusDelta: threshold = 2 * t - delta; break;
        case Coupling::SmallestPosOver2TPlusDelta: threshold = 2 * t + delta; break;
        case Coupling::SmallestPosOver2T: threshold = 2 * t; break;
        case Coupling::None: break;
        }
        if (k == 0 || asc.front() <= threshold) return false;
    }
    return true;
}

void enumerate_ordinary_rec(const OrdinaryDef& def, int remaining, int prev,
                            std::vector<int>& acc,
                            const std::function<void(const Partition&)>& fn)
{
    if (remaining == 0) {
        if (!def.smallest_is_1_or_2 || (!acc.empty() && acc.back() <= 2)) {
            std::vector<int> parts = acc;
            fn(Partition(std::move(parts)));
        }
        return;
    }
    int hi = remaining;
    if (prev > 0) hi = std::min(hi, prev - def.min_gap);
    for (int v = hi; v >= def.min_part; --v) {
        if (prev > 0) {
            int gap = def.min_gap;
            if (def.even_pair_gap4 && prev % 2 == 0 && v % 2 == 0) gap = 4;
            if (def.odd_pair_gap4 && prev % 2 == 1 && v % 2 == 1) gap = 4;
            if (prev - v < gap) continue;
        }
        acc.push_back(v);
        enumerate_ordinary_rec(def, remaining - v, v, acc, fn);
        acc.pop_back();
    }
}

void enumerate_positive_tuples(const PositiveRule& rule, int k, long long sum,
                               std::vector<int>& acc,
                               const std::function<void(const std::vector<int>&)>& fn)
{
    const int position = static_cast<int>(acc.size()) + 1;
    if (position > k) {
        if (sum == 0) fn(acc);
        return;
    }
    const int prev = acc.empty() ? 0 : acc.back();
    for (int v = next_min_value(rule, k, position, prev);; v += 2) {
        const long long need = v + min_tail_total(rule, k, position + 1, v);
        if (need > sum) break;
        acc.push_back(v);
        enumerate_positive_tuples(rule, k, sum - v, acc, fn);
        acc.pop_back();
    }
}

// Subsets of `sizes` (ascending, distinct) with the given total.
void enumerate_size_subsets(const std::vector<int>& sizes,
                            const std::vector<long long>& prefix, int idx, long long target,
                            std::vector<int>& acc,
                            const std::function<void(const std::vector<int>&)>& fn)
{
    if (target == 0) {
        fn(acc);
        return;
    }
    if (idx < 0 || prefix[static_cast<std::size_t>(idx) + 1] < target) return;
    const int v = sizes[static_cast<std::size_t>(idx)];
    if (v <= target) {
        acc.push_back(v);
        enumerate_size_subsets(sizes, prefix, idx - 1, target - v, acc, fn);
        acc.pop_back();
    }
    enumerate_size_subsets(sizes, prefix, idx - 1, target, acc, fn);
}

// Multisets over `sizes` with the given total (used only by corrupted
// non-distinct rules).
void enumerate_size_multisets(const std::vector<int>& sizes, int idx, long long target,
                              std::vector<int>& acc,
                              const std::function<void(const std::vector<int>&)>& fn)
{
    if (target == 0) {
        fn(acc);
        return;
    }
    if (idx < 0) return;
    const int v = sizes[static_cast<std::size_t>(idx)];
    for (long long c = 0; c * v <= target; ++c) {
        for (long long j = 0; j < c; ++j) acc.push_back(v);
        enumerate_size_multisets(sizes, idx - 1, target - c * v, acc, fn);
        for (long long j = 0; j < c; ++j) acc.pop_back();
    }
}

} // namespace

const std::vector<MutationId>& all_mutations()
{
    static const std::vector<MutationId> ids{
        MutationId::GG1A_NEGATIVES_NOT_DISTINCT, MutationId::RR1_GAP_ONE,
        MutationId::P_SIGNED_SMALLEST_ODD,       MutationId::E_THRESHOLD_NO_DELTA,
        MutationId::GG2_MIN_PART_TWO,            MutationId::LG2_H_NEG_MOD_ONE,
    };
    return ids;
}

std::string_view to_string(MutationId id)
{
    switch (id) {
    case MutationId::GG1A_NEGATIVES_NOT_DISTINCT: return "GG1A_NEGATIVES_NOT_DISTINCT";
    case MutationId::RR1_GAP_ONE: return "RR1_GAP_ONE";
    case MutationId::P_SIGNED_SMALLEST_ODD: return "P_SIGNED_SMALLEST_ODD";
    case MutationId::E_THRESHOLD_NO_DELTA: return "E_THRESHOLD_NO_DELTA";
    case MutationId::GG2_MIN_PART_TWO: return "GG2_MIN_PART_TWO";
    case MutationId::LG2_H_NEG_MOD_ONE: return "LG2_H_NEG_MOD_ONE";
    }
    return "?";
}

std::string_view mutation_description(MutationId id)
{
    switch (id) {
    case MutationId::GG1A_NEGATIVES_NOT_DISTINCT:
        return "GG1_ANDREWS_SIGNED: negatives are no longer required to be distinct";
    case MutationId::RR1_GAP_ONE:
        return "RR1: minimum difference between parts weakened from 2 to 1";
    case MutationId::P_SIGNED_SMALLEST_ODD:
        return "P_SIGNED: positive parts alternate starting from an odd smallest part";
    case MutationId::E_THRESHOLD_NO_DELTA:
        return "LG1_E_SIGNED: smallest-positive threshold 2t-[u=1] replaced by 2t";
    case MutationId::GG2_MIN_PART_TWO:
        return "GG2: minimum part weakened from 3 to 2";
    case MutationId::LG2_H_NEG_MOD_ONE:
        return "LG2_H_SIGNED: negatives congruent to 1 (mod 4) instead of 3 (mod 4)";
    }
    return "?";
}

ClassSystem::ClassSystem()
{
    infos_.resize(kClassCount);
    auto set = [&](ClassId id, std::string description, std::string notes,
                   std::variant<OrdinaryDef, SignedDef> def) {
        infos_[index_of(id)] =
            ClassInfo{id, side_of(id), std::move(description), std::move(notes), def};
    };

    set(ClassId::P, "all partitions", "", OrdinaryDef{1, 0, false, false, false});
    set(ClassId::D, "partitions into distinct parts", "", OrdinaryDef{1, 1, false, false, false});
    set(ClassId::RR1, "parts differ by at least 2", "", OrdinaryDef{1, 2, false, false, false});
    set(ClassId::RR2, "parts > 1 and differ by at least 2", "",
        OrdinaryDef{2, 2, false, false, false});
    set(ClassId::GG1, "parts differ by at least 2, and by at least 4 when both are even", "",
        OrdinaryDef{1, 2, true, false, false});
    set(ClassId::GG2, "parts at least 3, differing by at least 2 and by at least 4 when both are even",
        "", OrdinaryDef{3, 2, true, false, false});
    set(ClassId::GG_DIFF, "GG1-type partitions whose smallest part is 1 or 2",
        "such a partition has at most one part in {1,2}, so 'exactly one part equal to 1 or 2' "
        "is the same as 'smallest part is 1 or 2'",
        OrdinaryDef{1, 2, true, false, true});
    set(ClassId::LG1, "parts differ by at least 2, and by at least 4 when both are odd", "",
        OrdinaryDef{1, 2, false, true, false});
    set(ClassId::LG2, "parts at least 2, differing by at least 2 and by at least 4 when both are odd",
        "", OrdinaryDef{2, 2, false, true, false});

    const std::string forced_distinct =
        "negatives implemented as distinct: the generating factor (-1/q;1/q)_n forces it even "
        "though the prose clause states only the bound";

    set(ClassId::P_SIGNED,
        "positives alternate in parity from an even smallest part; negatives distinct, each at "
        "most the number of positives",
        "",
        SignedDef{PositiveRule{PosParity::AlternatingEvenStart, 1, 1, 0, 0},
                  NegativeRule{1, 1, 1, 0, true}, Coupling::None});
    set(ClassId::D_SIGNED,
        "positives even and distinct; negatives distinct, each at most the number of positives",
        forced_distinct,
        SignedDef{PositiveRule{PosParity::AllEven, 2, 2, 0, 0}, NegativeRule{1, 1, 1, 0, true},
                  Coupling::None});
    set(ClassId::RR1_SIGNED,
        "positives differ by at least 3 and alternate in parity from an even smallest part; "
        "negatives distinct, each at most the number of positives",
        forced_distinct,
        SignedDef{PositiveRule{PosParity::AlternatingEvenStart, 3, 1, 0, 0},
                  NegativeRule{1, 1, 1, 0, true}, Coupling::None});
    set(ClassId::RR2_SIGNED,
        "positives differ by at least 3, alternate in parity from an odd smallest part and "
        "exclude 1; negatives distinct, each at most the number of positives",
        forced_distinct,
        SignedDef{PositiveRule{PosParity::AlternatingOddStart, 3, 2, 0, 0},
                  NegativeRule{1, 1, 1, 0, true}, Coupling::None});
    set(ClassId::GG1_ANDREWS_SIGNED,
        "positives even, each at least twice the number of positives; negatives odd, distinct, "
        "each at most twice the number of positives",
        "",
        SignedDef{PositiveRule{PosParity::AllEven, 0, 2, 2, 0}, NegativeRule{1, 2, 2, 0, true},
                  Coupling::None});
    set(ClassId::GG1_PRIME_SIGNED,
        "positives even, differing by at least 4; negatives odd, distinct, each at most 2k-1 "
        "for k positives",
        "",
        SignedDef{PositiveRule{PosParity::AllEven, 4, 2, 0, 0}, NegativeRule{1, 2, 2, -1, true},
                  Coupling::None});
    set(ClassId::GG2_ANDREWS_SIGNED,
        "positives even, each at least 2(k+1) for k positives; negatives odd, distinct, each at "
        "most 2k",
        "",
        SignedDef{PositiveRule{PosParity::AllEven, 0, 2, 2, 2}, NegativeRule{1, 2, 2, 0, true},
                  Coupling::None});
    set(ClassId::GG2_PRIME_SIGNED,
        "positives even, at least 4, differing by at least 4; negatives odd, distinct, each at "
        "most 2k-1",
        "",
        SignedDef{PositiveRule{PosParity::AllEven, 4, 4, 0, 0}, NegativeRule{1, 2, 2, -1, true},
                  Coupling::None});
    set(ClassId::LG1_E_SIGNED,
        "positives even and distinct (k of them); negatives odd, distinct, below 2k (t of "
        "them); smallest positive exceeds 2t-[u=1] where u is the smallest negative size",
        "threshold vacuous when there are no negatives",
        SignedDef{PositiveRule{PosParity::AllEven, 2, 2, 0, 0}, NegativeRule{1, 2, 2, -1, true},
                  Coupling::SmallestPosOver2TMinusDelta});
    set(ClassId::LG2_T_SIGNED,
        "positives even and distinct (k of them); negatives odd, distinct, below 2k (t of "
        "them); smallest positive exceeds 2t+[u=1] where u is the smallest negative size",
        "u read as the smallest negative size (positives are even, so the odd parts are exactly "
        "the negatives); since positives are even the threshold is equivalent to smallest "
        "positive >= 2t+2, which the paired enumeration and bijective sweep both confirm; "
        "vacuous when there are no negatives",
        SignedDef{PositiveRule{PosParity::AllEven, 2, 2, 0, 0}, NegativeRule{1, 2, 2, -1, true},
                  Coupling::SmallestPosOver2TPlusDelta});
    set(ClassId::LG1_SHIFT_SIGNED,
        "positives odd, at least 5, differing by at least 4; negatives odd, distinct, each at "
        "most 2k+1",
        "bound 2k+1 verified against the series: the n-th term carries n positives (staircase "
        "5,9,...,4n+1 plus even padding) and negative sizes up to 2n+1",
        SignedDef{PositiveRule{PosParity::AllOdd, 4, 5, 0, 0}, NegativeRule{1, 2, 2, 1, true},
                  Coupling::None});
    set(ClassId::LG1_PRIME_SIGNED,
        "positives even and distinct; negatives congruent to 1 (mod 4), distinct, each at most "
        "2k",
        "",
        SignedDef{PositiveRule{PosParity::AllEven, 2, 2, 0, 0}, NegativeRule{1, 4, 2, 0, true},
                  Coupling::None});
    set(ClassId::LG2_ANDREWS_SIGNED,
        "positives odd, each at least twice the number of positives; negatives odd, distinct, "
        "each at most 2k",
        "",
        SignedDef{PositiveRule{PosParity::AllOdd, 0, 1, 2, 0}, NegativeRule{1, 2, 2, 0, true},
                  Coupling::None});
    set(ClassId::LG2_PRIME_SIGNED,
        "positives odd, at least 3, differing by at least 4; negatives odd, distinct, each at "
        "most 2k-1",
        "'differ by 4' read as 'differ by at least 4' (the staircase plus even padding reaches "
        "every larger odd difference)",
        SignedDef{PositiveRule{PosParity::AllOdd, 4, 3, 0, 0}, NegativeRule{1, 2, 2, -1, true},
                  Coupling::None});
    set(ClassId::LG2_H_SIGNED,
        "positives even and distinct; negatives congruent to 3 (mod 4), distinct, below twice "
        "the number of positives",
        "",
        SignedDef{PositiveRule{PosParity::AllEven, 2, 2, 0, 0}, NegativeRule{3, 4, 2, -1, true},
                  Coupling::None});
}

const ClassSystem& ClassSystem::standard()
{
    static const ClassSystem system;
    return system;
}

ClassSystem ClassSystem::mutated(MutationId mutation) const
{
    ClassSystem copy = *this;
    auto signed_def = [&](ClassId id) -> SignedDef& {
        return std::get<SignedDef>(copy.infos_[index_of(id)].def);
    };
    auto ordinary_def = [&](ClassId id) -> OrdinaryDef& {
        return std::get<OrdinaryDef>(copy.infos_[index_of(id)].def);
    };
    switch (mutation) {
    case MutationId::GG1A_NEGATIVES_NOT_DISTINCT:
        signed_def(ClassId::GG1_ANDREWS_SIGNED).neg.distinct = false;
        break;
    case MutationId::RR1_GAP_ONE:
        ordinary_def(ClassId::RR1).min_gap = 1;
        break;
    case MutationId::P_SIGNED_SMALLEST_ODD:
        signed_def(ClassId::P_SIGNED).pos.parity = PosParity::AlternatingOddStart;
        break;
    case MutationId::E_THRESHOLD_NO_DELTA:
        signed_def(ClassId::LG1_E_SIGNED).coupling = Coupling::SmallestPosOver2T;
        break;
    case MutationId::GG2_MIN_PART_TWO:
        ordinary_def(ClassId::GG2).min_part = 2;
        break;
    case MutationId::LG2_H_NEG_MOD_ONE:
        signed_def(ClassId::LG2_H_SIGNED).neg.first = 1;
        break;
    }
    return copy;
}

const ClassInfo& ClassSystem::info(ClassId id) const { return infos_[index_of(id)]; }

bool ClassSystem::is_member(ClassId id, const Partition& p) const
{
    const ClassInfo& ci = info(id);
    if (ci.side != Side::Ordinary)
        throw class_error("class " + std::string(to_string(id)) +
                          " is a signed class; got an ordinary partition");
    return check_ordinary(std::get<OrdinaryDef>(ci.def), p);
}

bool ClassSystem::is_member(ClassId id, const SignedPartition& s) const
{
    const ClassInfo& ci = info(id);
    if (ci.side != Side::Signed)
        throw class_error("class " + std::string(to_string(id)) +
                          " is an ordinary class; got a signed partition");
    return check_signed(std::get<SignedDef>(ci.def), s);
}

void ClassSystem::for_each(ClassId id, int n,
                           const std::function<void(const Partition&)>& fn) const
{
    const ClassInfo& ci = info(id);
    if (ci.side != Side::Ordinary)
        throw class_error("class " + std::string(to_string(id)) + " is not an ordinary class");
    if (n < 0) throw std::invalid_argument("weight must be >= 0");
    const auto& def = std::get<OrdinaryDef>(ci.def);
    std::vector<int> acc;
    enumerate_ordinary_rec(def, n, 0, acc, fn);
}

void ClassSystem::for_each(ClassId id, int n,
                           const std::function<void(const SignedPartition&)>& fn) const
{
    const ClassInfo& ci = info(id);
    if (ci.side != Side::Signed)
        throw class_error("class " + std::string(to_string(id)) + " is not a signed class");
    if (n < 0) throw std::invalid_argument("weight must be >= 0");
    const auto& def = std::get<SignedDef>(ci.def);

    // Every catalog class has min_positive_total(k) - max_negative_total(k)
    // >= k, so a weight-n member has at most n positive parts and the
    // margin test below is the real bound.  The k cap only matters for
    // corrupted definitions, whose classes can be infinite per weight; it
    // keeps their enumeration finite (and still count-divergent enough for
    // the falsifiability checks).
    for (int k = 0; k <= n + 8; ++k) {
        const long long min_pos = min_positive_total(id, k);
        const long long max_neg = max_negative_total(id, k);
        if (min_pos - max_neg > n) break;

        const auto sizes = allowed_negative_sizes(def.neg, k);
        std::vector<long long> prefix(sizes.size() + 1, 0);
        for (std::size_t i = 0; i < sizes.size(); ++i) prefix[i + 1] = prefix[i] + sizes[i];

        const long long lo = std::max<long long>(n, min_pos);
        const long long hi = static_cast<long long>(n) + max_neg;
        for (long long s = lo; s <= hi; ++s) {
            std::vector<int> pos_acc;
            enumerate_positive_tuples(def.pos, k, s, pos_acc, [&](const std::vector<int>& pos) {
                const long long neg_target = s - n;
                auto emit = [&](const std::vector<int>& negs) {
                    SignedPartition candidate{Partition(pos), Partition(negs)};
                    // The coupling clause (and nothing else) can still
                    // reject an assembled candidate.
                    if (check_signed(def, candidate)) fn(candidate);
                };
                std::vector<int> neg_acc;
                if (def.neg.distinct) {
                    enumerate_size_subsets(sizes, prefix, static_cast<int>(sizes.size()) - 1,
                                           neg_target, neg_acc, emit);
                } else {
                    enumerate_size_multisets(sizes, static_cast<int>(sizes.size()) - 1,
                                             neg_target, neg_acc, emit);
                }
            });
        }
    }
}

std::vector<Partition> ClassSystem::enumerate_ordinary(ClassId id, int n) const
{
    std::vector<Partition> out;
    for_each(id, n, std::function<void(const Partition&)>([&](const Partition& p) {
                 out.push_back(p);
             }));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SignedPartition> ClassSystem::enumerate_signed(ClassId id, int n) const
{
    std::vector<SignedPartition> out;
    for_each(id, n, std::function<void(const SignedPartition&)>([&](const SignedPartition& s) {
                 out.push_back(s);
             }));
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t ClassSystem::count(ClassId id, int n) const
{
    std::uint64_t c = 0;
    if (info(id).side == Side::Ordinary)
        for_each(id, n, std::function<void(const Partition&)>([&](const Partition&) { ++c; }));
    else
        for_each(id, n,
                 std::function<void(const SignedPartition&)>([&](const SignedPartition&) { ++c; }));
    return c;
}

long long ClassSystem::min_positive_total(ClassId id, int k) const
{
    const auto& def = std::get<SignedDef>(info(id).def);
    return min_tail_total(def.pos, k, 1, 0);
}

long long ClassSystem::max_negative_total(ClassId id, int k) const
{
    // Enumeration horizon.  Computed from the distinct rule even when a
    // corruption drops distinctness (the corrupted class is infinite per
    // weight; the horizon keeps enumeration finite and still exposes the
    // count disagreement).
    const auto& def = std::get<SignedDef>(info(id).def);
    const int bound = negative_bound(def.neg, k);
    if (bound < def.neg.first) return 0;
    const long long m = (bound - def.neg.first) / def.neg.step + 1;
    return m * def.neg.first + def.neg.step * m * (m - 1) / 2;
}

int ClassSystem::max_positive_parts(ClassId id, int n) const
{
    int k = 0;
    while (k < n + 8 && min_positive_total(id, k + 1) - max_negative_total(id, k + 1) <= n) ++k;
    return k;
}

bool is_member(ClassId id, const Partition& p) { return ClassSystem::standard().is_member(id, p); }
bool is_member(ClassId id, const SignedPartition& s)
{
    return ClassSystem::standard().is_member(id, s);
}

std::uint64_t count_class(ClassId id, int n) { return ClassSystem::standard().count(id, n); }

std::vector<Partition> enumerate_class_ordinary(ClassId id, int n)
{
    return ClassSystem::standard().enumerate_ordinary(id, n);
}

std::vector<SignedPartition> enumerate_class_signed(ClassId id, int n)
{
    return ClassSystem::standard().enumerate_signed(id, n);
}

} // namespace srr
