#include "srr/bijections.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace srr {

namespace {

const std::array<MapInfo, 12> kMaps{{
    {MapId::F_P, ClassId::P, ClassId::P_SIGNED, MapFamily::F, BVariant::ZERO_START,
     ParityVariant::ODD_IS_1},
    {MapId::F_D, ClassId::D, ClassId::D_SIGNED, MapFamily::F, BVariant::ALL_ZERO,
     ParityVariant::ODD_IS_1},
    {MapId::F_RR1, ClassId::RR1, ClassId::RR1_SIGNED, MapFamily::F, BVariant::ZERO_START,
     ParityVariant::ODD_IS_1},
    {MapId::F_RR2, ClassId::RR2, ClassId::RR2_SIGNED, MapFamily::F, BVariant::ONE_START,
     ParityVariant::ODD_IS_1},
    {MapId::H_GG1, ClassId::GG1, ClassId::GG1_ANDREWS_SIGNED, MapFamily::H, BVariant::ZERO_START,
     ParityVariant::ODD_IS_1},
    {MapId::H_GG2, ClassId::GG2, ClassId::GG2_ANDREWS_SIGNED, MapFamily::H, BVariant::ZERO_START,
     ParityVariant::ODD_IS_1},
    {MapId::G_GG1, ClassId::GG1, ClassId::GG1_PRIME_SIGNED, MapFamily::G, BVariant::ZERO_START,
     ParityVariant::ODD_IS_1},
    {MapId::G_GG2, ClassId::GG2, ClassId::GG2_PRIME_SIGNED, MapFamily::G, BVariant::ZERO_START,
     ParityVariant::ODD_IS_1},
    {MapId::PHI_LG1, ClassId::LG1, ClassId::LG1_E_SIGNED, MapFamily::PHI, BVariant::ZERO_START,
     ParityVariant::ODD_IS_1},
    {MapId::PHI_LG2, ClassId::LG2, ClassId::LG2_T_SIGNED, MapFamily::PHI, BVariant::ZERO_START,
     ParityVariant::ODD_IS_1},
    {MapId::H_LG2, ClassId::LG2, ClassId::LG2_ANDREWS_SIGNED, MapFamily::H, BVariant::ZERO_START,
     ParityVariant::EVEN_IS_1},
    {MapId::G_LG2, ClassId::LG2, ClassId::LG2_PRIME_SIGNED, MapFamily::G, BVariant::ZERO_START,
     ParityVariant::EVEN_IS_1},
}};

[[noreturn]] void bad_family(MapId id, const char* family)
{
    throw std::invalid_argument("map " + std::string(to_string(id)) + " is not a " + family +
                                "-family map");
}

void require_source(const MapInfo& info, const Partition& p, const ClassSystem& sys)
{
    if (!sys.is_member(info.source, p))
        throw map_error("input " + format(p) + " is not in source class " +
                        std::string(to_string(info.source)) + " of map " +
                        std::string(to_string(info.id)));
}

void require_target(const MapInfo& info, const SignedPartition& s, const ClassSystem& sys)
{
    if (!sys.is_member(info.target, s))
        throw map_error("object " + format(s) + " is not in target class " +
                        std::string(to_string(info.target)) + " of map " +
                        std::string(to_string(info.id)));
}

void require_weight(long long in, long long out, MapId id)
{
    if (in != out)
        throw map_error("map " + std::string(to_string(id)) + " failed to preserve weight: " +
                        std::to_string(in) + " vs " + std::to_string(out));
}

BinarySequence make_b(BVariant variant, std::size_t length)
{
    BinarySequence bits(length, 0);
    switch (variant) {
    case BVariant::ZERO_START:
        for (std::size_t i = 0; i < length; ++i) bits[i] = static_cast<int>(i % 2);
        break;
    case BVariant::ONE_START:
        for (std::size_t i = 0; i < length; ++i) bits[i] = static_cast<int>((i + 1) % 2);
        break;
    case BVariant::ALL_ZERO:
        break;
    }
    return bits;
}

// Flags of the inverse maps: flag[j] (0-indexed, size r) says whether the
// size 2(j+1)-1 occurs among the negatives.  Requires every negative size
// to be representable, which target-class membership guarantees.
std::vector<int> negative_flags(const SignedPartition& sp, std::size_t r, MapId id)
{
    std::vector<int> flags(r, 0);
    for (int v : sp.negatives().parts()) {
        if (v % 2 == 0 || v > 2 * static_cast<int>(r) - 1)
            throw map_error("negative part size " + std::to_string(v) +
                            " cannot be indexed by map " + std::string(to_string(id)));
        flags[static_cast<std::size_t>((v - 1) / 2)] = 1;
    }
    return flags;
}

enum class Ordering { WeaklyIncreasing, WeaklyDecreasing };

// Builds a partition from map output, rejecting nonpositive or misordered
// parts (Partition would silently re-sort, hiding a formula defect).
Partition positives_from(const std::vector<int>& values, MapId id, Ordering ordering)
{
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < 1)
            throw map_error("map " + std::string(to_string(id)) +
                            " produced a nonpositive part " + std::to_string(values[i]));
        if (i > 0) {
            const bool ok = ordering == Ordering::WeaklyIncreasing
                                ? values[i] >= values[i - 1]
                                : values[i] <= values[i - 1];
            if (!ok)
                throw map_error("map " + std::string(to_string(id)) +
                                " produced misordered parts");
        }
    }
    return Partition(values);
}

} // namespace

const MapInfo& map_info(MapId id)
{
    for (const auto& m : kMaps)
        if (m.id == id) return m;
    throw std::invalid_argument("unknown map id");
}

std::vector<int> t_of(const BinarySequence& bits)
{
    if (bits.empty()) throw std::invalid_argument("t_of requires a nonempty binary sequence");
    std::vector<int> t(bits.size());
    t[0] = bits[0];
    for (std::size_t j = 1; j < bits.size(); ++j)
        t[j] = t[j - 1] + (bits[j] != bits[j - 1] ? 1 : 0);
    return t;
}

SignedPartition map_f(const Partition& lambda, MapId id, const ClassSystem& sys)
{
    const MapInfo& info = map_info(id);
    if (info.family != MapFamily::F) bad_family(id, "f");
    require_source(info, lambda, sys);

    const auto asc = lambda.ascending();
    const BinarySequence b = make_b(info.b_variant, asc.size());
    BinarySequence a(asc.size());
    bool all_zero = true;
    for (std::size_t i = 0; i < asc.size(); ++i) {
        a[i] = (asc[i] + b[i]) % 2;
        if (a[i] != 0) all_zero = false;
    }

    SignedPartition result;
    if (all_zero) {
        result = SignedPartition(lambda, Partition());
    } else {
        const std::vector<int> t = t_of(a);
        std::vector<int> positives(asc.size());
        for (std::size_t i = 0; i < asc.size(); ++i) positives[i] = asc[i] + t[i];
        std::vector<int> t_parts;
        for (int v : t)
            if (v > 0) t_parts.push_back(v);
        result = SignedPartition(positives_from(positives, id, Ordering::WeaklyIncreasing),
                                 conjugate(Partition(std::move(t_parts))));
    }
    require_weight(lambda.weight(), result.weight(), id);
    require_target(info, result, sys);
    return result;
}

Partition map_f_inverse(const SignedPartition& gamma, MapId id, const ClassSystem& sys)
{
    const MapInfo& info = map_info(id);
    if (info.family != MapFamily::F) bad_family(id, "f");
    require_target(info, gamma, sys);

    if (gamma.negatives().empty()) {
        require_source(info, gamma.positives(), sys);
        return gamma.positives();
    }

    const auto u = gamma.positives().ascending();
    const auto v_conj = conjugate(gamma.negatives()).ascending();
    if (v_conj.size() > u.size())
        throw map_error("signed partition has more negative columns than positive parts");

    // Pad with initial 0s on the ascending view.
    std::vector<int> result(u.size());
    const std::size_t pad = u.size() - v_conj.size();
    for (std::size_t i = 0; i < u.size(); ++i) {
        const int sub = i < pad ? 0 : v_conj[i - pad];
        result[i] = u[i] - sub;
    }
    Partition out = positives_from(result, id, Ordering::WeaklyIncreasing);
    require_source(info, out, sys);
    require_weight(gamma.weight(), out.weight(), id);
    return out;
}

SignedPartition map_h(const Partition& gamma, MapId id, const ClassSystem& sys)
{
    const MapInfo& info = map_info(id);
    if (info.family != MapFamily::H) bad_family(id, "h");
    require_source(info, gamma, sys);

    const auto& parts = gamma.parts();  // descending
    const int j = static_cast<int>(parts.size());
    std::vector<int> w(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i)
        w[i] = parity_indicator(parts[i], info.parity);

    std::vector<int> positives(parts.size());
    std::vector<int> negatives;
    int suffix = 0;  // sum of w over indices > k, built from the right
    for (int k = j - 1; k >= 0; --k) {
        const std::size_t i = static_cast<std::size_t>(k);
        positives[i] = parts[i] + 4 * (k + 1) - 2 * j - 2 + w[i] + 2 * suffix;
        suffix += w[i];
        if (w[i]) negatives.push_back(2 * (k + 1) - 1);
    }

    SignedPartition result(positives_from(positives, id, Ordering::WeaklyDecreasing),
                           Partition(std::move(negatives)));
    require_weight(gamma.weight(), result.weight(), id);
    require_target(info, result, sys);
    return result;
}

Partition map_h_inverse(const SignedPartition& pi, MapId id, const ClassSystem& sys)
{
    const MapInfo& info = map_info(id);
    if (info.family != MapFamily::H) bad_family(id, "h");
    require_target(info, pi, sys);

    const auto& pos = pi.positives().parts();
    const int r = static_cast<int>(pos.size());
    const std::vector<int> flags = negative_flags(pi, pos.size(), id);

    std::vector<int> gamma(pos.size());
    int suffix = 0;
    for (int k = r - 1; k >= 0; --k) {
        const std::size_t i = static_cast<std::size_t>(k);
        gamma[i] = pos[i] - 4 * (k + 1) + 2 * r + 2 - flags[i] - 2 * suffix;
        suffix += flags[i];
    }

    Partition out = positives_from(gamma, id, Ordering::WeaklyDecreasing);
    require_source(info, out, sys);
    require_weight(pi.weight(), out.weight(), id);
    return out;
}

SignedPartition map_g(const Partition& lambda, MapId id, const ClassSystem& sys)
{
    const MapInfo& info = map_info(id);
    if (info.family != MapFamily::G) bad_family(id, "g");
    require_source(info, lambda, sys);

    const auto& parts = lambda.parts();
    std::vector<int> positives(parts.size());
    std::vector<int> negatives;
    int suffix = 0;
    for (int k = static_cast<int>(parts.size()) - 1; k >= 0; --k) {
        const std::size_t i = static_cast<std::size_t>(k);
        const int wk = parity_indicator(parts[i], info.parity);
        positives[i] = parts[i] + wk + 2 * suffix;
        suffix += wk;
        if (wk) negatives.push_back(2 * (k + 1) - 1);
    }

    SignedPartition result(positives_from(positives, id, Ordering::WeaklyDecreasing),
                           Partition(std::move(negatives)));
    require_weight(lambda.weight(), result.weight(), id);
    require_target(info, result, sys);
    return result;
}

Partition map_g_inverse(const SignedPartition& tau, MapId id, const ClassSystem& sys)
{
    const MapInfo& info = map_info(id);
    if (info.family != MapFamily::G) bad_family(id, "g");
    require_target(info, tau, sys);

    const auto& pos = tau.positives().parts();
    const std::vector<int> flags = negative_flags(tau, pos.size(), id);

    std::vector<int> lambda(pos.size());
    int suffix = 0;
    for (int k = static_cast<int>(pos.size()) - 1; k >= 0; --k) {
        const std::size_t i = static_cast<std::size_t>(k);
        lambda[i] = pos[i] - flags[i] - 2 * suffix;
        suffix += flags[i];
    }

    Partition out = positives_from(lambda, id, Ordering::WeaklyDecreasing);
    require_source(info, out, sys);
    require_weight(tau.weight(), out.weight(), id);
    return out;
}

SignedPartition map_phi(const Partition& lambda, MapId id, const ClassSystem& sys)
{
    const MapInfo& info = map_info(id);
    if (info.family != MapFamily::PHI) bad_family(id, "phi");
    require_source(info, lambda, sys);

    const auto& parts = lambda.parts();  // descending
    const std::size_t k = parts.size();
    std::vector<int> positives(k);
    std::vector<int> negatives;
    int prefix = 0;  // sum of w over indices < j
    for (std::size_t j = 0; j < k; ++j) {
        const int wj = parity_indicator(parts[j], info.parity);
        positives[j] = parts[j] + wj + 2 * prefix;
        prefix += wj;
        // Size 2i-1 pairs with the i-th smallest part; parts[j] is the
        // (k-j)-th smallest.
        if (wj) negatives.push_back(2 * static_cast<int>(k - j) - 1);
    }

    SignedPartition result(positives_from(positives, id, Ordering::WeaklyDecreasing),
                           Partition(std::move(negatives)));
    require_weight(lambda.weight(), result.weight(), id);
    require_target(info, result, sys);
    return result;
}

Partition map_phi_inverse(const SignedPartition& pi, MapId id, const ClassSystem& sys)
{
    const MapInfo& info = map_info(id);
    if (info.family != MapFamily::PHI) bad_family(id, "phi");
    require_target(info, pi, sys);

    const auto& pos = pi.positives().parts();
    const std::size_t k = pos.size();
    const std::vector<int> flags = negative_flags(pi, k, id);

    std::vector<int> lambda(k);
    int prefix = 0;  // sum of flags f_{k-i+1} for i < j
    for (std::size_t j = 0; j < k; ++j) {
        const int fj = flags[k - 1 - j];  // f_{k-j+1} in 1-based terms
        lambda[j] = pos[j] - fj - 2 * prefix;
        prefix += fj;
    }

    Partition out = positives_from(lambda, id, Ordering::WeaklyDecreasing);
    require_source(info, out, sys);
    require_weight(pi.weight(), out.weight(), id);
    return out;
}

SignedPartition apply_forward(MapId id, const Partition& source, const ClassSystem& sys)
{
    switch (map_info(id).family) {
    case MapFamily::F: return map_f(source, id, sys);
    case MapFamily::H: return map_h(source, id, sys);
    case MapFamily::G: return map_g(source, id, sys);
    case MapFamily::PHI: return map_phi(source, id, sys);
    }
    throw std::invalid_argument("unknown map family");
}

Partition apply_inverse(MapId id, const SignedPartition& target, const ClassSystem& sys)
{
    switch (map_info(id).family) {
    case MapFamily::F: return map_f_inverse(target, id, sys);
    case MapFamily::H: return map_h_inverse(target, id, sys);
    case MapFamily::G: return map_g_inverse(target, id, sys);
    case MapFamily::PHI: return map_phi_inverse(target, id, sys);
    }
    throw std::invalid_argument("unknown map family");
}

} // namespace srr
