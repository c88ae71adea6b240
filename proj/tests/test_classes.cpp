#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "srr/classes.hpp"
#include "srr/series.hpp"

using namespace srr;

TEST_CASE("membership worked values")
{
    CHECK(is_member(ClassId::GG1, Partition({20, 17, 15, 12, 9, 7, 4, 1})));
    CHECK(is_member(ClassId::GG1_PRIME_SIGNED,
                    parse_signed_partition("30,26,22,18,14,10,6,2,-3,-5,-9,-11,-15")));
    CHECK_FALSE(is_member(ClassId::RR1, Partition({2, 1})));
    CHECK(is_member(ClassId::GG1_ANDREWS_SIGNED,
                    parse_signed_partition("16,16,16,16,16,16,16,16,-3,-5,-9,-11,-15")));

    // Side mismatches are errors, not false.
    CHECK_THROWS_AS(is_member(ClassId::RR1, SignedPartition{}), class_error);
    CHECK_THROWS_AS(is_member(ClassId::P_SIGNED, Partition{}), class_error);
}

TEST_CASE("membership details")
{
    // GG1 allows odd parts at distance 2 but not even ones.
    CHECK(is_member(ClassId::GG1, Partition({7, 5})));
    CHECK_FALSE(is_member(ClassId::GG1, Partition({6, 4})));
    CHECK(is_member(ClassId::GG1, Partition({6, 2})));
    // LG1 swaps the roles.
    CHECK(is_member(ClassId::LG1, Partition({6, 4})));
    CHECK_FALSE(is_member(ClassId::LG1, Partition({7, 5})));

    // Alternating-parity positives, smallest even.
    CHECK(is_member(ClassId::P_SIGNED, parse_signed_partition("3,2,-2")));
    CHECK_FALSE(is_member(ClassId::P_SIGNED, parse_signed_partition("4,2")));  // parity break
    CHECK_FALSE(is_member(ClassId::P_SIGNED, parse_signed_partition("3")));    // smallest odd

    // Negative bound is the number of positives.
    CHECK(is_member(ClassId::P_SIGNED, parse_signed_partition("4,-1")));
    CHECK_FALSE(is_member(ClassId::P_SIGNED, parse_signed_partition("6,-3")));
}

TEST_CASE("coupling thresholds of the E and T classes")
{
    // u = 1 relaxes E's threshold by one.
    CHECK(is_member(ClassId::LG1_E_SIGNED, parse_signed_partition("2,-1")));
    CHECK_FALSE(is_member(ClassId::LG2_T_SIGNED, parse_signed_partition("2,-1")));
    CHECK(is_member(ClassId::LG2_T_SIGNED, parse_signed_partition("4,-1")));
    // u != 1 does not.
    CHECK_FALSE(is_member(ClassId::LG1_E_SIGNED, parse_signed_partition("2,4,-3")));
    CHECK(is_member(ClassId::LG1_E_SIGNED, parse_signed_partition("4,6,-3")));
    // No negatives: thresholds vacuous.
    CHECK(is_member(ClassId::LG1_E_SIGNED, parse_signed_partition("2")));
    CHECK(is_member(ClassId::LG2_T_SIGNED, parse_signed_partition("2")));
    // Negatives must stay below twice the positive count.
    CHECK_FALSE(is_member(ClassId::LG1_E_SIGNED, parse_signed_partition("6,4,-5")));
}

TEST_CASE("enumeration worked values")
{
    const auto p3 = enumerate_class_signed(ClassId::P_SIGNED, 3);
    const std::set<SignedPartition> expected = {
        parse_signed_partition("4,-1"),
        parse_signed_partition("3,2,-2"),
        parse_signed_partition("4,3,2,-1,-2,-3"),
    };
    CHECK(std::set<SignedPartition>(p3.begin(), p3.end()) == expected);

    const auto gg1_8 = enumerate_class_ordinary(ClassId::GG1, 8);
    const std::set<Partition> expected_gg1 = {Partition({8}), Partition({7, 1}),
                                              Partition({6, 2}), Partition({5, 3})};
    CHECK(std::set<Partition>(gg1_8.begin(), gg1_8.end()) == expected_gg1);

    CHECK(enumerate_class_ordinary(ClassId::GG1, 0) == std::vector<Partition>{Partition()});
    CHECK(enumerate_class_signed(ClassId::LG2_H_SIGNED, 0) ==
          std::vector<SignedPartition>{SignedPartition()});
    // The difference class has no weight-0 member (its members are nonempty).
    CHECK(count_class(ClassId::GG_DIFF, 0) == 0);
}

TEST_CASE("count worked values")
{
    CHECK(count_class(ClassId::RR1, 9) == 5);
    CHECK(count_class(ClassId::P, 5) == 7);
    CHECK(count_class(ClassId::D, 0) == 1);
}

TEST_CASE("ordinary counts match the brute-force oracle")
{
    using Pred = std::function<bool(const oracle::Parts&)>;
    const std::vector<std::pair<ClassId, Pred>> table = {
        {ClassId::P, [](const oracle::Parts&) { return true; }},
        {ClassId::D, oracle::is_distinct},
        {ClassId::RR1, oracle::is_rr1},
        {ClassId::RR2, oracle::is_rr2},
        {ClassId::GG1, oracle::is_gg1},
        {ClassId::GG2, oracle::is_gg2},
        {ClassId::GG_DIFF, oracle::is_gg_diff},
        {ClassId::LG1, oracle::is_lg1},
        {ClassId::LG2, oracle::is_lg2},
    };
    for (const auto& [id, pred] : table)
        for (int n = 0; n <= 22; ++n)
            CHECK(count_class(id, n) == oracle::count_partitions_if(n, pred));
}

TEST_CASE("every enumerated member passes its own predicate")
{
    const auto& sys = ClassSystem::standard();
    for (ClassId id : all_class_ids()) {
        for (int n = 0; n <= 14; ++n) {
            if (side_of(id) == Side::Ordinary) {
                for (const auto& p : sys.enumerate_ordinary(id, n)) {
                    CHECK(sys.is_member(id, p));
                    CHECK(p.weight() == n);
                }
            } else {
                for (const auto& s : sys.enumerate_signed(id, n)) {
                    CHECK(sys.is_member(id, s));
                    CHECK(s.weight() == n);
                }
            }
        }
    }
}

TEST_CASE("enumeration yields no duplicates")
{
    const auto& sys = ClassSystem::standard();
    for (ClassId id : all_class_ids()) {
        if (side_of(id) != Side::Signed) continue;
        for (int n = 0; n <= 12; ++n) {
            const auto members = sys.enumerate_signed(id, n);
            const std::set<SignedPartition> unique(members.begin(), members.end());
            CHECK(unique.size() == members.size());
        }
    }
}

TEST_CASE("signed bounding data lines up with the sum-side staircases")
{
    const auto& sys = ClassSystem::standard();
    const std::vector<std::pair<ClassId, IdentityId>> aligned = {
        {ClassId::P_SIGNED, IdentityId::P_SIGNED},
        {ClassId::D_SIGNED, IdentityId::D_SIGNED},
        {ClassId::RR1_SIGNED, IdentityId::RR1_SIGNED},
        {ClassId::RR2_SIGNED, IdentityId::RR2_SIGNED},
        {ClassId::GG1_ANDREWS_SIGNED, IdentityId::GG1_ANDREWS},
        {ClassId::GG1_PRIME_SIGNED, IdentityId::GG1_PRIME},
        {ClassId::GG2_ANDREWS_SIGNED, IdentityId::GG2_3WAY},
        {ClassId::GG2_PRIME_SIGNED, IdentityId::GG2_3WAY},
        {ClassId::LG2_ANDREWS_SIGNED, IdentityId::LG2_3WAY},
        {ClassId::LG2_PRIME_SIGNED, IdentityId::LG2_3WAY},
    };
    for (const auto& [cls, identity] : aligned)
        for (int k = 0; k <= 10; ++k) {
            CHECK(sys.min_positive_total(cls, k) == staircase_exponent(identity, k));
            CHECK(sys.max_negative_total(cls, k) == max_negative_total(identity, k));
        }
    // The shifted identity's staircase carries the fixed extra q.
    for (int k = 0; k <= 10; ++k)
        CHECK(sys.min_positive_total(ClassId::LG1_SHIFT_SIGNED, k) + 1 ==
              staircase_exponent(IdentityId::LG1_SHIFT, k));
}

TEST_CASE("weight-n members never have more positive parts than the bounding function")
{
    const auto& sys = ClassSystem::standard();
    for (ClassId id : all_class_ids()) {
        if (side_of(id) != Side::Signed) continue;
        for (int n = 0; n <= 12; ++n) {
            const int k_max = sys.max_positive_parts(id, n);
            for (const auto& s : sys.enumerate_signed(id, n))
                CHECK(static_cast<int>(s.positives().length()) <= k_max);
        }
    }
}

TEST_CASE("shifted class: LG-1(n) = LG1(n+1) through enumeration alone")
{
    for (int n = 0; n <= 20; ++n)
        CHECK(count_class(ClassId::LG1_SHIFT_SIGNED, n) == count_class(ClassId::LG1, n + 1));
}

TEST_CASE("mutations change exactly what they claim")
{
    CHECK(all_mutations().size() >= 5);
    const auto& standard = ClassSystem::standard();
    for (MutationId m : all_mutations()) {
        CHECK(!mutation_description(m).empty());
        const ClassSystem mutated = standard.mutated(m);
        // Each corruption changes some small count.
        bool differs = false;
        for (ClassId id : all_class_ids()) {
            for (int n = 0; n <= 8 && !differs; ++n)
                differs = mutated.count(id, n) != standard.count(id, n);
            if (differs) break;
        }
        CHECK(differs);
    }

    // Spot checks of the corrupted predicates.
    const ClassSystem no_distinct =
        standard.mutated(MutationId::GG1A_NEGATIVES_NOT_DISTINCT);
    CHECK(no_distinct.is_member(ClassId::GG1_ANDREWS_SIGNED,
                                parse_signed_partition("4,-1,-1")));
    CHECK_FALSE(standard.is_member(ClassId::GG1_ANDREWS_SIGNED,
                                   parse_signed_partition("4,-1,-1")));

    const ClassSystem no_delta = standard.mutated(MutationId::E_THRESHOLD_NO_DELTA);
    CHECK_FALSE(no_delta.is_member(ClassId::LG1_E_SIGNED, parse_signed_partition("2,-1")));
    CHECK(standard.is_member(ClassId::LG1_E_SIGNED, parse_signed_partition("2,-1")));
}
