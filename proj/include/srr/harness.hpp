#pragma once

#include <string>
#include <vector>

#include "srr/catalog.hpp"
#include "srr/classes.hpp"
#include "srr/ids.hpp"

// The cross-verification engine: counts vs counts, series vs counts,
// series vs product, and exhaustive bijection sweeps.  The three oracles
// (class enumeration, series expansion, bijective transport) share no
// counting code, so their agreement is evidence rather than tautology.
// Reports are deterministic: fixed iteration order, sorted members.

namespace srr {

struct CheckFailure {
    int n;
    std::string oracle_a;
    std::string oracle_b;
    std::string value_a;
    std::string value_b;
    std::string witness;
};

struct VerificationReport {
    std::string subject;  // identity or map id
    std::string check;    // "counts", "series" or "bijection"
    int range_lo = 0;
    int range_hi = 0;
    bool pass = true;
    std::string note;
    std::vector<CheckFailure> failures;

    const char* status() const { return pass ? "PASS" : "FAIL"; }
};

// Count equality between the ordinary class and every signed class of the
// identity (with the identity's index offset), n = 0..n_max.  For the
// difference identity the ordinary count is compared against the
// difference of the two base-class counts.
VerificationReport verify_counts(IdentityId id, int n_max,
                                 const ClassSystem& sys = ClassSystem::standard());

// Sum-side coefficients against enumeration counts (both sides, offset
// applied) for n <= count_max, and against the product side for n <=
// n_order where a product is stated.  count_max = -1 means n_order.
// Identities without a stated series form pass with an explanatory note.
VerificationReport verify_series(IdentityId id, int n_order, int count_max = -1,
                                 const ClassSystem& sys = ClassSystem::standard());

// Exhaustive sweep over weights 0..n_max: forward image in target class,
// inverse roundtrip, forward-of-inverse roundtrip, injectivity and full
// target cardinality.
VerificationReport verify_bijection(MapId id, int n_max,
                                    const ClassSystem& sys = ClassSystem::standard());

// Every counts/series/bijection report for the whole catalog.
std::vector<VerificationReport> run_full_suite(int counts_max, int series_order,
                                               int series_count_max, int bijection_max,
                                               const ClassSystem& sys = ClassSystem::standard());

// JSON form: {"identity", "check", "range", "status", "note",
// "failures": [{n, oracle_a, oracle_b, value_a, value_b, witness}]}.
std::string report_json(const VerificationReport& report);
std::string reports_json(const std::vector<VerificationReport>& reports);

} // namespace srr
