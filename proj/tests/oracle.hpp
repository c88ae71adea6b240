#pragma once

// Test-side brute-force oracles.  Everything here enumerates plain integer
// partitions and filters them with predicates written directly from the
// class definitions.  Deliberately independent of the library's class
// machinery so agreement means something.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using Parts = std::vector<int>;  // weakly decreasing

inline void partitions_rec(int remaining, int max_part, Parts& acc,
                           const std::function<void(const Parts&)>& fn)
{
    if (remaining == 0) {
        fn(acc);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        partitions_rec(remaining - p, p, acc, fn);
        acc.pop_back();
    }
}

inline void for_each_partition(int n, const std::function<void(const Parts&)>& fn)
{
    Parts acc;
    partitions_rec(n, n == 0 ? 1 : n, acc, fn);
}

inline std::uint64_t count_partitions_if(int n, const std::function<bool(const Parts&)>& pred)
{
    std::uint64_t c = 0;
    for_each_partition(n, [&](const Parts& p) {
        if (pred(p)) ++c;
    });
    return c;
}

inline bool min_diff(const Parts& v, int d)
{
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] - v[i + 1] < d) return false;
    return true;
}

inline bool all_parts_at_least(const Parts& v, int m)
{
    return v.empty() || v.back() >= m;
}

inline bool is_distinct(const Parts& v) { return min_diff(v, 1); }

inline bool is_rr1(const Parts& v) { return min_diff(v, 2); }
inline bool is_rr2(const Parts& v) { return is_rr1(v) && all_parts_at_least(v, 2); }

inline bool is_gg1(const Parts& v)
{
    if (!min_diff(v, 2)) return false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] % 2 == 0 && v[i + 1] % 2 == 0 && v[i] - v[i + 1] < 4) return false;
    return true;
}
inline bool is_gg2(const Parts& v) { return is_gg1(v) && all_parts_at_least(v, 3); }
inline bool is_gg_diff(const Parts& v) { return is_gg1(v) && !v.empty() && v.back() <= 2; }

inline bool is_lg1(const Parts& v)
{
    if (!min_diff(v, 2)) return false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] % 2 == 1 && v[i + 1] % 2 == 1 && v[i] - v[i + 1] < 4) return false;
    return true;
}
inline bool is_lg2(const Parts& v) { return is_lg1(v) && all_parts_at_least(v, 2); }

inline bool parts_in_residues(const Parts& v, int modulus, std::vector<int> residues)
{
    for (int p : v)
        if (std::find(residues.begin(), residues.end(), p % modulus) == residues.end())
            return false;
    return true;
}

} // namespace oracle
