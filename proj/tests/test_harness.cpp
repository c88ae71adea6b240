#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "srr/harness.hpp"
#include "srr/series.hpp"

using namespace srr;

TEST_CASE("catalog shape")
{
    CHECK(catalog().size() == 14);
    for (IdentityId id : all_identity_ids()) CHECK(descriptor(id).id == id);

    CHECK(descriptor(IdentityId::LG1_SHIFT).index_offset == -1);
    CHECK(descriptor(IdentityId::GG_DIFF).difference_of ==
          std::make_pair(ClassId::GG1, ClassId::GG2));
    CHECK(descriptor(IdentityId::GG2_3WAY).signed_classes.size() == 2);
    CHECK(descriptor(IdentityId::LG2_3WAY).maps ==
          std::vector<MapId>{MapId::H_LG2, MapId::G_LG2});
    CHECK_FALSE(descriptor(IdentityId::LG1_E).sum_side_stated);
    CHECK(descriptor(IdentityId::RR1_SIGNED).product_side_stated);

    int with_sum = 0;
    for (const auto& d : catalog()) with_sum += d.sum_side_stated ? 1 : 0;
    CHECK(with_sum == 12);
}

TEST_CASE("verify_counts worked values")
{
    const auto report = verify_counts(IdentityId::P_SIGNED, 10);
    CHECK(report.pass);
    CHECK(report.failures.empty());
    const std::vector<std::uint64_t> expected = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) {
        CHECK(count_class(ClassId::P, n) == expected[static_cast<std::size_t>(n)]);
        CHECK(count_class(ClassId::P_SIGNED, n) == expected[static_cast<std::size_t>(n)]);
    }

    CHECK(verify_counts(IdentityId::GG2_3WAY, 0).pass);
    CHECK(verify_counts(IdentityId::LG1_SHIFT, 10).pass);
    CHECK(verify_counts(IdentityId::GG_DIFF, 15).pass);
}

TEST_CASE("verify_series worked values")
{
    CHECK(verify_series(IdentityId::RR1_SIGNED, 60).pass);
    CHECK(verify_series(IdentityId::GG1_ANDREWS, 60).pass);
    CHECK(verify_series(IdentityId::P_SIGNED, 0).pass);

    const auto no_series = verify_series(IdentityId::LG1_E, 10);
    CHECK(no_series.pass);
    CHECK(!no_series.note.empty());
}

TEST_CASE("verify_bijection worked values")
{
    CHECK(verify_bijection(MapId::F_P, 20).pass);
    CHECK(verify_bijection(MapId::H_GG1, 0).pass);
    CHECK(verify_bijection(MapId::PHI_LG1, 20).pass);
}

TEST_CASE("full suite: counts to 40, series to 60, bijections to 35")
{
    const auto reports = run_full_suite(40, 60, 60, 35);
    CHECK(reports.size() == 14 * 2 + 12);
    for (const auto& r : reports) {
        INFO(r.subject, " ", r.check);
        CHECK(r.pass);
    }
}

TEST_CASE("every documented corruption is caught with a witness")
{
    for (MutationId m : all_mutations()) {
        const ClassSystem mutated = ClassSystem::standard().mutated(m);
        bool failed = false;
        std::size_t witnesses = 0;
        for (const auto& desc : catalog()) {
            auto inspect = [&](const VerificationReport& r) {
                if (r.pass) return;
                failed = true;
                for (const auto& f : r.failures) witnesses += f.witness.empty() ? 0 : 1;
            };
            inspect(verify_counts(desc.id, 8, mutated));
            inspect(verify_series(desc.id, 12, 12, mutated));
            for (MapId map : desc.maps) inspect(verify_bijection(map, 8, mutated));
        }
        INFO("mutation ", to_string(m));
        CHECK(failed);
        CHECK(witnesses > 0);
    }
}

TEST_CASE("reports are deterministic and serialize to the documented schema")
{
    const auto a = verify_series(IdentityId::GG1_PRIME, 20);
    const auto b = verify_series(IdentityId::GG1_PRIME, 20);
    CHECK(report_json(a) == report_json(b));

    const ClassSystem mutated = ClassSystem::standard().mutated(MutationId::RR1_GAP_ONE);
    const auto failing = verify_counts(IdentityId::RR1_SIGNED, 6, mutated);
    CHECK_FALSE(failing.pass);
    const auto parsed = nlohmann::json::parse(report_json(failing));
    CHECK(parsed.at("identity") == "RR1_SIGNED");
    CHECK(parsed.at("status") == "FAIL");
    CHECK(parsed.at("range").at("hi") == 6);
    REQUIRE(!parsed.at("failures").empty());
    const auto& failure = parsed.at("failures").front();
    for (const char* key : {"n", "oracle_a", "oracle_b", "value_a", "value_b", "witness"})
        CHECK(failure.contains(key));
    // The smallest counterexample: mutated RR1 admits (2,1) at n = 3.
    CHECK(failure.at("n") == 3);

    const auto all = nlohmann::json::parse(
        reports_json(run_full_suite(4, 6, 6, 4)));
    CHECK(all.is_array());
    CHECK(all.size() == 14 * 2 + 12);
}
