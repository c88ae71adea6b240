#include "srr/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

namespace srr {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("partition part must be >= 1, got " + std::to_string(p));
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

std::vector<int> Partition::ascending() const
{
    return {parts_.rbegin(), parts_.rend()};
}

bool Partition::contains(int part) const
{
    return std::binary_search(parts_.begin(), parts_.end(), part, std::greater<int>());
}

Partition conjugate(const Partition& p)
{
    if (p.empty()) return {};
    std::vector<int> conj(static_cast<std::size_t>(p.largest()));
    for (int j = 1; j <= p.largest(); ++j) {
        int count = 0;
        for (int part : p.parts()) {
            if (part >= j) ++count;
            else break;  // parts are sorted decreasing
        }
        conj[static_cast<std::size_t>(j - 1)] = count;
    }
    return Partition(std::move(conj));
}

bool is_gap_free_with_one(const Partition& p)
{
    if (p.empty() || p.smallest() != 1) return false;
    // Sorted decreasing, so the sizes cover {1..largest} iff consecutive
    // parts never drop by more than 1.
    int prev = p.largest();
    for (int part : p.parts()) {
        if (part != prev && part != prev - 1) return false;
        prev = part;
    }
    return true;
}

namespace {

std::vector<long long> parse_int_list(std::string_view text)
{
    std::vector<long long> out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };

    skip_ws();
    if (i >= n) return out;
    while (true) {
        skip_ws();
        const std::size_t tok = i;
        bool neg = false;
        if (i < n && (text[i] == '-' || text[i] == '+')) {
            neg = text[i] == '-';
            ++i;
        }
        if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw parse_error("expected an integer", tok);
        long long value = 0;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            value = value * 10 + (text[i] - '0');
            if (value > 1'000'000'000LL) throw parse_error("part out of range", tok);
            ++i;
        }
        out.push_back(neg ? -value : value);
        skip_ws();
        if (i == n) break;
        if (text[i] != ',') throw parse_error("expected ','", i);
        ++i;
        if (i == n) throw parse_error("trailing ','", i - 1);
    }
    return out;
}

bool is_empty_marker(std::string_view text)
{
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    return t.empty() || t == "(empty)";
}

} // namespace

std::string format(const Partition& p)
{
    if (p.empty()) return "(empty)";
    std::string out;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

std::string format(const SignedPartition& s)
{
    if (s.empty()) return "(empty)";
    std::string out;
    bool first = true;
    for (int p : s.positives().parts()) {
        if (!first) out.push_back(',');
        out += std::to_string(p);
        first = false;
    }
    // Negative parts in decreasing integer order, i.e. -3 before -5.
    const auto sizes = s.negatives().ascending();
    for (int v : sizes) {
        if (!first) out.push_back(',');
        out += std::to_string(-v);
        first = false;
    }
    return out;
}

Partition parse_partition(std::string_view text)
{
    if (is_empty_marker(text)) return {};
    std::vector<int> parts;
    for (long long v : parse_int_list(text)) {
        if (v < 1) throw parse_error("ordinary partition part must be positive, got " + std::to_string(v), 0);
        parts.push_back(static_cast<int>(v));
    }
    return Partition(std::move(parts));
}

SignedPartition parse_signed_partition(std::string_view text)
{
    if (is_empty_marker(text)) return {};
    std::vector<int> pos, neg;
    for (long long v : parse_int_list(text)) {
        if (v == 0) throw parse_error("signed partition parts must be nonzero", 0);
        if (v > 0)
            pos.push_back(static_cast<int>(v));
        else
            neg.push_back(static_cast<int>(-v));
    }
    return {Partition(std::move(pos)), Partition(std::move(neg))};
}

} // namespace srr
