#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "srr/ids.hpp"

// Exact truncated power-series arithmetic in q, plus the per-identity sum
// and product sides as coefficient vectors.  All coefficients are exact
// unbounded integers; coefficients beyond the truncation order are
// undefined and never read.  Everything here is a pure function over
// immutable values.

namespace srr {

using BigInt = boost::multiprecision::cpp_int;

class product_not_stated : public std::domain_error {
public:
    explicit product_not_stated(IdentityId id)
        : std::domain_error("no product side is stated for identity " +
                            std::string(to_string(id))) {}
};

class series_not_stated : public std::domain_error {
public:
    explicit series_not_stated(IdentityId id)
        : std::domain_error("no series form is stated for identity " +
                            std::string(to_string(id))) {}
};

// Coefficients c[0..N] of a formal power series truncated at order N.
struct TruncatedSeries {
    int order = 0;                  // N
    std::vector<BigInt> coeff;      // size N+1

    static TruncatedSeries zero(int n_order);
    static TruncatedSeries one(int n_order);

    const BigInt& operator[](int n) const { return coeff.at(static_cast<std::size_t>(n)); }

    // In-place multiplication by (1 - q^k)^{-1} = 1 + q^k + q^{2k} + ...
    void divide_one_minus_power(int k);

    // In-place multiplication by (1 +/- q^k) for k >= 1.
    void multiply_one_plus_power(int k, int sign);

    void add(const TruncatedSeries& other);

    // Coefficients 0..m of this series (m <= order).
    TruncatedSeries restricted(int m) const;

    bool operator==(const TruncatedSeries&) const = default;
};

// Exact Cauchy product truncated at the common order.  Throws
// std::invalid_argument on mismatched truncation orders.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

// A finite Laurent polynomial: coefficients indexed from min_exponent.
// Used only while assembling sum-side terms, where reversed Pochhammer
// factors contribute negative exponents that the staircase monomial then
// shifts back up; every completed identity term is nonnegative-exponent.
struct LaurentTerm {
    int min_exponent = 0;
    std::vector<BigInt> coeff;      // coeff[i] is the coefficient of q^(min_exponent + i)

    static LaurentTerm one();

    // Multiply by (1 + q^e); e may be negative or zero.
    void multiply_one_plus_power(int e);

    // Multiply by q^s.
    void shift(int s) { min_exponent += s; }

    // Truncate to [0, N].  Throws std::logic_error if a nonzero
    // coefficient sits at a negative exponent.
    TruncatedSeries to_truncated(int n_order) const;
};

enum class Sign { PLUS, MINUS };

// Expansion of prod_{i=0}^{count-1} (1 +/- q^{first_exponent + i*step}).
// Returns a LaurentTerm when any factor exponent is negative, otherwise a
// TruncatedSeries at order N.  count = 0 yields the constant 1.
std::variant<TruncatedSeries, LaurentTerm>
pochhammer_series(int first_exponent, int step, int count, Sign sign, int n_order);

// Expansion of 1/((1-q^2)(1-q^4)...(1-q^{2 count})) to order N: the
// generating function for partitions into even parts each <= 2*count.
TruncatedSeries inverse_even_pochhammer(int count, int n_order);

// True for the twelve identities whose sum side has a stated series form
// (all except LG1_E and LG2_T, which are count/bijection identities).
bool has_sum_side(IdentityId id);

// Exponent of the staircase monomial of the n-th sum-side term: the
// minimal positive-part total realizable by that term (plus the fixed
// shift q^1 for LG1_SHIFT).  Throws series_not_stated where no series
// form exists.
long long staircase_exponent(IdentityId id, int n);

// Sum over the n-th term's negative Pochhammer exponents: the largest
// total the negative parts of term n can reach.  Determines the summation
// cutoff staircase_exponent(id, n) - max_negative_total(id, n) > N.
long long max_negative_total(IdentityId id, int n);

// The identity's sum side as a coefficient vector c[0..N].  Every term is
// assembled staircase-first: the monomial q^{staircase} multiplies the
// Laurent factor before any truncated multiplication, so no intermediate
// negative exponents survive.
TruncatedSeries sum_side(IdentityId id, int n_order);

// True for the identities with a stated product side (RR1_SIGNED,
// GG1_ANDREWS, GG1_PRIME, GG2_3WAY).
bool has_product_side(IdentityId id);

// Residue classes of the product side, as {modulus, residues}.
struct ProductForm {
    int modulus;
    std::vector<int> residues;
};

// The identity's product side: expansion of prod 1/(1-q^k) over all k >= 1
// in the stated residue classes.  Throws product_not_stated otherwise.
TruncatedSeries product_side(IdentityId id, int n_order);
ProductForm product_form(IdentityId id);

// CSV with header "n,coefficient", one row per order.
std::string to_csv(const TruncatedSeries& s);

// Coefficients as decimal strings (they outgrow native integers).
std::vector<std::string> coefficient_strings(const TruncatedSeries& s);

} // namespace srr
