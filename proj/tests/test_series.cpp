#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "srr/series.hpp"

using namespace srr;

namespace {

TruncatedSeries make(std::vector<long long> coeffs)
{
    TruncatedSeries s = TruncatedSeries::zero(static_cast<int>(coeffs.size()) - 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) s.coeff[i] = coeffs[i];
    return s;
}

const std::vector<IdentityId> kSumSideIds = {
    IdentityId::P_SIGNED,   IdentityId::D_SIGNED,  IdentityId::RR1_SIGNED,
    IdentityId::RR2_SIGNED, IdentityId::GG1_ANDREWS, IdentityId::GG1_PRIME,
    IdentityId::GG2_3WAY,   IdentityId::GG_DIFF,   IdentityId::LG1_SHIFT,
    IdentityId::LG1_PRIME,  IdentityId::LG2_3WAY,  IdentityId::LG2_H,
};

} // namespace

TEST_CASE("series multiplication")
{
    // (1-q) * (1+q+q^2+...) telescopes to 1.
    TruncatedSeries geometric = TruncatedSeries::one(5);
    geometric.divide_one_minus_power(1);
    const TruncatedSeries one_minus_q = make({1, -1, 0, 0, 0, 0});
    CHECK(series_mul(one_minus_q, geometric) == TruncatedSeries::one(5));

    // (1-q)(1-q^2) = 1 - q - q^2 + q^3.
    const TruncatedSeries one_minus_q2 = make({1, 0, -1, 0, 0, 0});
    CHECK(series_mul(one_minus_q, one_minus_q2) == make({1, -1, -1, 1, 0, 0}));

    // Multiplicative identity.
    const TruncatedSeries arbitrary = make({3, 1, 4, 1, 5, 9});
    CHECK(series_mul(arbitrary, TruncatedSeries::one(5)) == arbitrary);

    CHECK_THROWS_AS(series_mul(TruncatedSeries::one(4), TruncatedSeries::one(5)),
                    std::invalid_argument);
    CHECK_THROWS_AS(TruncatedSeries::one(4).add(TruncatedSeries::one(5)),
                    std::invalid_argument);
}

TEST_CASE("pochhammer expansion")
{
    // (1-q)(1-q^2) with nonnegative exponents comes back truncated.
    const auto plain = pochhammer_series(1, 1, 2, Sign::MINUS, 5);
    REQUIRE(std::holds_alternative<TruncatedSeries>(plain));
    CHECK(std::get<TruncatedSeries>(plain) == make({1, -1, -1, 1, 0, 0}));

    // (1+q^{-1})(1+q^{-3}) is a Laurent polynomial.
    const auto reversed = pochhammer_series(-1, -2, 2, Sign::PLUS, 10);
    REQUIRE(std::holds_alternative<LaurentTerm>(reversed));
    const LaurentTerm& lt = std::get<LaurentTerm>(reversed);
    CHECK(lt.min_exponent == -4);
    CHECK(lt.coeff == std::vector<BigInt>{1, 1, 0, 1, 1});

    // Empty product.
    const auto empty = pochhammer_series(1, 1, 0, Sign::MINUS, 5);
    REQUIRE(std::holds_alternative<TruncatedSeries>(empty));
    CHECK(std::get<TruncatedSeries>(empty) == TruncatedSeries::one(5));
}

TEST_CASE("laurent terms shift nonnegative and truncate")
{
    LaurentTerm t = LaurentTerm::one();
    t.multiply_one_plus_power(-1);
    t.multiply_one_plus_power(-3);
    CHECK_THROWS_AS(t.to_truncated(5), std::logic_error);
    t.shift(4);
    const TruncatedSeries s = t.to_truncated(5);
    CHECK(s == make({1, 1, 0, 1, 1, 0}));
}

TEST_CASE("inverse even pochhammer")
{
    CHECK(inverse_even_pochhammer(0, 4) == TruncatedSeries::one(4));
    CHECK(inverse_even_pochhammer(1, 6) == make({1, 0, 1, 0, 1, 0, 1}));
    // Coefficient of q^4 in 1/((1-q^2)(1-q^4)): partitions of 4 into parts
    // from {2,4}.
    CHECK(inverse_even_pochhammer(2, 6)[4] == 2);
}

TEST_CASE("staircase exponents")
{
    CHECK(staircase_exponent(IdentityId::RR1_SIGNED, 3) == 15);  // 2+5+8
    CHECK(staircase_exponent(IdentityId::GG2_3WAY, 2) == 12);    // 4+8

    for (IdentityId id : kSumSideIds) {
        if (id == IdentityId::LG1_SHIFT) continue;
        CHECK(staircase_exponent(id, 0) == 0);
    }
    // The shifted identity carries a fixed extra q.
    CHECK(staircase_exponent(IdentityId::LG1_SHIFT, 0) == 1);

    // Closed forms match the arithmetic progressions they abbreviate.
    for (int n = 0; n <= 12; ++n) {
        long long sums[6] = {0, 0, 0, 0, 0, 0};
        for (int i = 1; i <= n; ++i) {
            sums[0] += i + 1;       // 2+3+...+(n+1)
            sums[1] += 3 * i - 1;   // 2+5+...+(3n-1)
            sums[2] += 4 * i - 2;   // 2+6+...+(4n-2)
            sums[3] += 4 * i;       // 4+8+...+4n
            sums[4] += 4 * i - 1;   // 3+7+...+(4n-1)
            sums[5] += 4 * i + 1;   // 5+9+...+(4n+1)
        }
        CHECK(staircase_exponent(IdentityId::P_SIGNED, n) == sums[0]);
        CHECK(staircase_exponent(IdentityId::RR1_SIGNED, n) == sums[1]);
        CHECK(staircase_exponent(IdentityId::GG1_ANDREWS, n) == sums[2]);
        CHECK(staircase_exponent(IdentityId::GG2_3WAY, n) == sums[3]);
        CHECK(staircase_exponent(IdentityId::LG2_3WAY, n) == sums[4]);
        CHECK(staircase_exponent(IdentityId::LG1_SHIFT, n) == 1 + sums[5]);
    }

    CHECK_THROWS_AS(staircase_exponent(IdentityId::LG1_E, 3), series_not_stated);
}

TEST_CASE("sum sides against frozen brute-force values")
{
    CHECK(coefficient_strings(sum_side(IdentityId::P_SIGNED, 6)) ==
          std::vector<std::string>{"1", "1", "2", "3", "5", "7", "11"});
    CHECK(coefficient_strings(sum_side(IdentityId::RR1_SIGNED, 6)) ==
          std::vector<std::string>{"1", "1", "1", "1", "2", "2", "3"});

    for (IdentityId id : kSumSideIds) {
        const TruncatedSeries s = sum_side(id, 0);
        CHECK(s[0] == (id == IdentityId::GG_DIFF ? 0 : 1));
    }
    CHECK_THROWS_AS(sum_side(IdentityId::LG2_T, 10), series_not_stated);
}

TEST_CASE("sum sides agree with the ordinary brute-force counts")
{
    const int n_max = 18;
    auto check_counts = [&](IdentityId id, const std::function<bool(const oracle::Parts&)>& pred) {
        const TruncatedSeries s = sum_side(id, n_max);
        for (int n = 0; n <= n_max; ++n)
            CHECK(s[n] == BigInt(oracle::count_partitions_if(n, pred)));
    };
    check_counts(IdentityId::P_SIGNED, [](const oracle::Parts&) { return true; });
    check_counts(IdentityId::D_SIGNED, oracle::is_distinct);
    check_counts(IdentityId::RR1_SIGNED, oracle::is_rr1);
    check_counts(IdentityId::RR2_SIGNED, oracle::is_rr2);
    check_counts(IdentityId::GG1_ANDREWS, oracle::is_gg1);
    check_counts(IdentityId::GG2_3WAY, oracle::is_gg2);
    check_counts(IdentityId::GG_DIFF, oracle::is_gg_diff);
    check_counts(IdentityId::LG1_SHIFT, oracle::is_lg1);
    check_counts(IdentityId::LG1_PRIME, oracle::is_lg1);
    check_counts(IdentityId::LG2_3WAY, oracle::is_lg2);
    check_counts(IdentityId::LG2_H, oracle::is_lg2);
}

TEST_CASE("product sides")
{
    CHECK(coefficient_strings(product_side(IdentityId::RR1_SIGNED, 6)) ==
          std::vector<std::string>{"1", "1", "1", "1", "2", "2", "3"});
    CHECK(product_side(IdentityId::GG1_ANDREWS, 8)[8] == 4);
    CHECK(product_side(IdentityId::GG1_PRIME, 0) == TruncatedSeries::one(0));
    CHECK_THROWS_AS(product_side(IdentityId::P_SIGNED, 10), product_not_stated);
    CHECK_THROWS_AS(product_side(IdentityId::LG2_H, 10), product_not_stated);

    // Residue-class counts from the brute-force oracle.
    const TruncatedSeries rr1 = product_side(IdentityId::RR1_SIGNED, 18);
    const TruncatedSeries gg2 = product_side(IdentityId::GG2_3WAY, 18);
    for (int n = 0; n <= 18; ++n) {
        CHECK(rr1[n] == BigInt(oracle::count_partitions_if(n, [](const oracle::Parts& v) {
                  return oracle::parts_in_residues(v, 5, {1, 4});
              })));
        CHECK(gg2[n] == BigInt(oracle::count_partitions_if(n, [](const oracle::Parts& v) {
                  return oracle::parts_in_residues(v, 8, {3, 4, 5});
              })));
    }
}

TEST_CASE("monotone truncation")
{
    for (IdentityId id : kSumSideIds)
        CHECK(sum_side(id, 40).restricted(25) == sum_side(id, 25));
    CHECK(product_side(IdentityId::GG2_3WAY, 50).restricted(30) ==
          product_side(IdentityId::GG2_3WAY, 30));
}

TEST_CASE("difference series equals the difference of the two sum sides")
{
    const int n_max = 40;
    const TruncatedSeries diff = sum_side(IdentityId::GG_DIFF, n_max);
    const TruncatedSeries gg1 = sum_side(IdentityId::GG1_ANDREWS, n_max);
    const TruncatedSeries gg2 = sum_side(IdentityId::GG2_3WAY, n_max);
    for (int n = 0; n <= n_max; ++n) {
        CHECK(diff[n] == gg1[n] - gg2[n]);
        CHECK(diff[n] >= 0);
    }
}

TEST_CASE("csv table shape")
{
    const std::string csv = to_csv(sum_side(IdentityId::RR1_SIGNED, 3));
    CHECK(csv == "n,coefficient\n0,1\n1,1\n2,1\n3,1\n");
}

TEST_CASE("coefficients stay exact far beyond 64 bits")
{
    // p(700) = 60378285202834474611028659, which no native integer holds.
    const TruncatedSeries s = sum_side(IdentityId::P_SIGNED, 700);
    CHECK(s[700].str() == "60378285202834474611028659");
}
