#include "srr/series.hpp"

#include <algorithm>

namespace srr {

TruncatedSeries TruncatedSeries::zero(int n_order)
{
    if (n_order < 0) throw std::invalid_argument("truncation order must be >= 0");
    TruncatedSeries s;
    s.order = n_order;
    s.coeff.assign(static_cast<std::size_t>(n_order) + 1, BigInt(0));
    return s;
}

TruncatedSeries TruncatedSeries::one(int n_order)
{
    TruncatedSeries s = zero(n_order);
    s.coeff[0] = 1;
    return s;
}

void TruncatedSeries::divide_one_minus_power(int k)
{
    // 1/(1-q^k): running prefix sums with stride k.
    if (k < 1) throw std::invalid_argument("power must be >= 1");
    for (int i = k; i <= order; ++i)
        coeff[static_cast<std::size_t>(i)] += coeff[static_cast<std::size_t>(i - k)];
}

void TruncatedSeries::multiply_one_plus_power(int k, int sign)
{
    if (k < 1) throw std::invalid_argument("power must be >= 1");
    for (int i = order; i >= k; --i) {
        if (sign >= 0)
            coeff[static_cast<std::size_t>(i)] += coeff[static_cast<std::size_t>(i - k)];
        else
            coeff[static_cast<std::size_t>(i)] -= coeff[static_cast<std::size_t>(i - k)];
    }
}

void TruncatedSeries::add(const TruncatedSeries& other)
{
    if (other.order != order)
        throw std::invalid_argument("mismatched truncation orders in series addition");
    for (int i = 0; i <= order; ++i)
        coeff[static_cast<std::size_t>(i)] += other.coeff[static_cast<std::size_t>(i)];
}

TruncatedSeries TruncatedSeries::restricted(int m) const
{
    if (m < 0 || m > order)
        throw std::invalid_argument("restriction order out of range");
    TruncatedSeries s;
    s.order = m;
    s.coeff.assign(coeff.begin(), coeff.begin() + m + 1);
    return s;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (a.order != b.order)
        throw std::invalid_argument("mismatched truncation orders in series product");
    TruncatedSeries out = TruncatedSeries::zero(a.order);
    for (int i = 0; i <= a.order; ++i) {
        if (a.coeff[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; i + j <= a.order; ++j) {
            if (b.coeff[static_cast<std::size_t>(j)] == 0) continue;
            out.coeff[static_cast<std::size_t>(i + j)] +=
                a.coeff[static_cast<std::size_t>(i)] * b.coeff[static_cast<std::size_t>(j)];
        }
    }
    return out;
}

LaurentTerm LaurentTerm::one()
{
    LaurentTerm t;
    t.min_exponent = 0;
    t.coeff = {BigInt(1)};
    return t;
}

void LaurentTerm::multiply_one_plus_power(int e)
{
    if (e == 0) {
        for (auto& c : coeff) c *= 2;
        return;
    }
    const int old_min = min_exponent;
    const int old_max = min_exponent + static_cast<int>(coeff.size()) - 1;
    const int new_min = std::min(old_min, old_min + e);
    const int new_max = std::max(old_max, old_max + e);
    std::vector<BigInt> out(static_cast<std::size_t>(new_max - new_min) + 1, BigInt(0));
    for (std::size_t i = 0; i < coeff.size(); ++i) {
        const int x = old_min + static_cast<int>(i);
        out[static_cast<std::size_t>(x - new_min)] += coeff[i];
        out[static_cast<std::size_t>(x + e - new_min)] += coeff[i];
    }
    min_exponent = new_min;
    coeff = std::move(out);
}

TruncatedSeries LaurentTerm::to_truncated(int n_order) const
{
    TruncatedSeries s = TruncatedSeries::zero(n_order);
    for (std::size_t i = 0; i < coeff.size(); ++i) {
        if (coeff[i] == 0) continue;
        const int x = min_exponent + static_cast<int>(i);
        if (x < 0)
            throw std::logic_error("Laurent term still has a negative exponent after assembly");
        if (x <= n_order) s.coeff[static_cast<std::size_t>(x)] += coeff[i];
    }
    return s;
}

std::variant<TruncatedSeries, LaurentTerm>
pochhammer_series(int first_exponent, int step, int count, Sign sign, int n_order)
{
    if (count < 0) throw std::invalid_argument("pochhammer count must be >= 0");
    bool any_negative = false;
    for (int i = 0; i < count; ++i)
        if (first_exponent + i * step < 0) any_negative = true;

    const int s = sign == Sign::PLUS ? +1 : -1;
    if (!any_negative) {
        TruncatedSeries out = TruncatedSeries::one(n_order);
        for (int i = 0; i < count; ++i) {
            const int e = first_exponent + i * step;
            if (e == 0) {
                // (1 +/- 1) is a constant factor.
                for (auto& c : out.coeff) c *= (1 + s);
            } else if (e <= n_order) {
                out.multiply_one_plus_power(e, s);
            }
            // Factors with exponent > N are 1 within the truncation.
        }
        return out;
    }

    LaurentTerm out = LaurentTerm::one();
    for (int i = 0; i < count; ++i) {
        const int e = first_exponent + i * step;
        if (sign == Sign::PLUS) {
            out.multiply_one_plus_power(e);
        } else {
            // (1 - q^e) = (1 + q^e) - 2 q^e; handled directly instead.
            LaurentTerm factor;
            factor.min_exponent = std::min(0, e);
            factor.coeff.assign(static_cast<std::size_t>(std::abs(e)) + 1, BigInt(0));
            factor.coeff[static_cast<std::size_t>(0 - factor.min_exponent)] = 1;
            factor.coeff[static_cast<std::size_t>(e - factor.min_exponent)] -= 1;
            // Multiply out = out * factor by brute force.
            LaurentTerm prod;
            prod.min_exponent = out.min_exponent + factor.min_exponent;
            prod.coeff.assign(out.coeff.size() + factor.coeff.size() - 1, BigInt(0));
            for (std::size_t a = 0; a < out.coeff.size(); ++a)
                for (std::size_t b = 0; b < factor.coeff.size(); ++b)
                    prod.coeff[a + b] += out.coeff[a] * factor.coeff[b];
            out = std::move(prod);
        }
    }
    return out;
}

TruncatedSeries inverse_even_pochhammer(int count, int n_order)
{
    if (count < 0) throw std::invalid_argument("pochhammer count must be >= 0");
    TruncatedSeries out = TruncatedSeries::one(n_order);
    for (int i = 1; i <= count; ++i) {
        if (2 * i > n_order) break;
        out.divide_one_minus_power(2 * i);
    }
    return out;
}

bool has_sum_side(IdentityId id)
{
    return id != IdentityId::LG1_E && id != IdentityId::LG2_T;
}

long long staircase_exponent(IdentityId id, int n)
{
    if (n < 0) throw std::invalid_argument("staircase index must be >= 0");
    const long long m = n;
    switch (id) {
    case IdentityId::P_SIGNED: return m * (m + 3) / 2;       // 2+3+...+(n+1)
    case IdentityId::D_SIGNED: return m * (m + 1);           // 2+4+...+2n
    case IdentityId::RR1_SIGNED: return m * (3 * m + 1) / 2; // 2+5+...+(3n-1)
    case IdentityId::RR2_SIGNED: return 3 * m * (m + 1) / 2; // 3+6+...+3n
    case IdentityId::GG1_ANDREWS:
    case IdentityId::GG1_PRIME: return 2 * m * m;            // 2+6+...+(4n-2)
    case IdentityId::GG2_3WAY: return 2 * m * (m + 1);       // 4+8+...+4n
    case IdentityId::GG_DIFF: return n == 0 ? 0 : 2 * m * m; // 2n + (n-1)*2n
    case IdentityId::LG1_SHIFT: return 2 * m * m + 3 * m + 1; // 1 + (5+9+...+(4n+1))
    case IdentityId::LG1_PRIME: return 2 * m * (2 * m - 1);  // 0+2+...+(4n-2)
    case IdentityId::LG2_3WAY: return m * (2 * m + 1);       // 3+7+...+(4n-1)
    case IdentityId::LG2_H: return m * (2 * m + 1);
    case IdentityId::LG1_E:
    case IdentityId::LG2_T: throw series_not_stated(id);
    }
    throw std::invalid_argument("unknown identity id");
}

long long max_negative_total(IdentityId id, int n)
{
    if (n < 0) throw std::invalid_argument("term index must be >= 0");
    const long long m = n;
    switch (id) {
    case IdentityId::P_SIGNED:
    case IdentityId::D_SIGNED:
    case IdentityId::RR1_SIGNED:
    case IdentityId::RR2_SIGNED: return m * (m + 1) / 2;     // 1+2+...+n
    case IdentityId::GG1_ANDREWS:
    case IdentityId::GG1_PRIME:
    case IdentityId::GG2_3WAY:
    case IdentityId::GG_DIFF:
    case IdentityId::LG2_3WAY: return m * m;                 // 1+3+...+(2n-1)
    case IdentityId::LG1_SHIFT: return (m + 1) * (m + 1);    // 1+3+...+(2n+1)
    case IdentityId::LG1_PRIME: return m * (2 * m - 1);      // 1+5+...+(4n-3)
    case IdentityId::LG2_H: return n == 0 ? 0 : 1;           // only the q^{-1} factor
    case IdentityId::LG1_E:
    case IdentityId::LG2_T: throw series_not_stated(id);
    }
    throw std::invalid_argument("unknown identity id");
}

namespace {

// Exponents e of the factors (1 + q^e) making up the n-th term's
// Pochhammer part, after the staircase rewriting.  Negative entries are
// the allowed negative-part sizes (negated).
std::vector<int> term_pochhammer_exponents(IdentityId id, int n)
{
    std::vector<int> e;
    switch (id) {
    case IdentityId::P_SIGNED:
    case IdentityId::D_SIGNED:
    case IdentityId::RR1_SIGNED:
    case IdentityId::RR2_SIGNED:
        for (int i = 1; i <= n; ++i) e.push_back(-i);
        break;
    case IdentityId::GG1_ANDREWS:
    case IdentityId::GG1_PRIME:
    case IdentityId::GG2_3WAY:
    case IdentityId::GG_DIFF:
    case IdentityId::LG2_3WAY:
        for (int i = 1; i <= n; ++i) e.push_back(-(2 * i - 1));
        break;
    case IdentityId::LG1_SHIFT:
        for (int i = 0; i <= n; ++i) e.push_back(-(2 * i + 1));
        break;
    case IdentityId::LG1_PRIME:
        for (int i = 1; i <= n; ++i) e.push_back(-(4 * i - 3));
        break;
    case IdentityId::LG2_H:
        // (1+q^{-1})(1+q^3)(1+q^7)...(1+q^{4n-5})
        for (int i = 0; i < n; ++i) e.push_back(4 * i - 1);
        break;
    case IdentityId::LG1_E:
    case IdentityId::LG2_T:
        throw series_not_stated(id);
    }
    return e;
}

int term_denominator_count(IdentityId id, int n)
{
    switch (id) {
    case IdentityId::GG_DIFF: return n == 0 ? 0 : n - 1;
    case IdentityId::LG1_PRIME:
    case IdentityId::LG2_H: return 2 * n;
    default: return n;
    }
}

} // namespace

TruncatedSeries sum_side(IdentityId id, int n_order)
{
    if (!has_sum_side(id)) throw series_not_stated(id);
    if (n_order < 0) throw std::invalid_argument("truncation order must be >= 0");

    TruncatedSeries acc = TruncatedSeries::zero(n_order);
    TruncatedSeries term = TruncatedSeries::zero(n_order);
    for (int n = 0;; ++n) {
        if (id == IdentityId::GG_DIFF && n == 0) continue;  // that sum starts at n = 1
        const long long staircase = staircase_exponent(id, n);
        const long long reach = staircase - max_negative_total(id, n);
        if (reach > n_order) break;  // strictly increasing in n, so no later term contributes

        // Staircase monomial into the Laurent factor first: each reversed
        // factor (1+q^{-a}) is q^{-a}(1+q^a), so the whole term equals
        // q^reach times a plain polynomial product, and every exponent in
        // the truncated arithmetic below is >= 0.
        const int shift = static_cast<int>(reach);
        const int poly_order = n_order - shift;
        TruncatedSeries poly = TruncatedSeries::one(poly_order);
        for (int e : term_pochhammer_exponents(id, n)) {
            const int a = e < 0 ? -e : e;
            if (a <= poly_order) poly.multiply_one_plus_power(a, +1);
        }

        for (auto& c : term.coeff) c = 0;
        for (int i = 0; i <= poly_order; ++i)
            term.coeff[static_cast<std::size_t>(i + shift)] =
                std::move(poly.coeff[static_cast<std::size_t>(i)]);

        const int denom = term_denominator_count(id, n);
        for (int i = 1; i <= denom; ++i) {
            if (2 * i > n_order) break;
            term.divide_one_minus_power(2 * i);
        }
        acc.add(term);
    }
    return acc;
}

bool has_product_side(IdentityId id)
{
    switch (id) {
    case IdentityId::RR1_SIGNED:
    case IdentityId::GG1_ANDREWS:
    case IdentityId::GG1_PRIME:
    case IdentityId::GG2_3WAY:
        return true;
    default:
        return false;
    }
}

ProductForm product_form(IdentityId id)
{
    switch (id) {
    case IdentityId::RR1_SIGNED: return {5, {1, 4}};
    case IdentityId::GG1_ANDREWS:
    case IdentityId::GG1_PRIME: return {8, {1, 4, 7}};
    case IdentityId::GG2_3WAY: return {8, {3, 4, 5}};
    default: throw product_not_stated(id);
    }
}

TruncatedSeries product_side(IdentityId id, int n_order)
{
    const ProductForm form = product_form(id);
    if (n_order < 0) throw std::invalid_argument("truncation order must be >= 0");
    TruncatedSeries out = TruncatedSeries::one(n_order);
    for (int k = 1; k <= n_order; ++k) {
        const int r = k % form.modulus;
        if (std::find(form.residues.begin(), form.residues.end(), r) != form.residues.end())
            out.divide_one_minus_power(k);
    }
    return out;
}

std::string to_csv(const TruncatedSeries& s)
{
    std::string out = "n,coefficient\n";
    for (int n = 0; n <= s.order; ++n) {
        out += std::to_string(n);
        out.push_back(',');
        out += s[n].str();
        out.push_back('\n');
    }
    return out;
}

std::vector<std::string> coefficient_strings(const TruncatedSeries& s)
{
    std::vector<std::string> out;
    out.reserve(s.coeff.size());
    for (const auto& c : s.coeff) out.push_back(c.str());
    return out;
}

} // namespace srr
