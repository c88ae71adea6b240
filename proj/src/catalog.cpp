#include "srr/catalog.hpp"

#include <stdexcept>

namespace srr {

const std::vector<IdentityDescriptor>& catalog()
{
    static const std::vector<IdentityDescriptor> entries = [] {
        std::vector<IdentityDescriptor> v;
        v.push_back({IdentityId::P_SIGNED,
                     "p(n) = p_-1(n)",
                     "Euler's partition count, signed interpretation",
                     ClassId::P,
                     {ClassId::P_SIGNED},
                     {MapId::F_P},
                     true,
                     false,
                     0,
                     std::nullopt});
        v.push_back({IdentityId::D_SIGNED,
                     "D(n) = D_-1(n)",
                     "distinct-parts count, signed interpretation",
                     ClassId::D,
                     {ClassId::D_SIGNED},
                     {MapId::F_D},
                     true,
                     false,
                     0,
                     std::nullopt});
        v.push_back({IdentityId::RR1_SIGNED,
                     "RR1(n) = RR-1(n)",
                     "first Rogers-Ramanujan identity, signed interpretation",
                     ClassId::RR1,
                     {ClassId::RR1_SIGNED},
                     {MapId::F_RR1},
                     true,
                     true,
                     0,
                     std::nullopt});
        v.push_back({IdentityId::RR2_SIGNED,
                     "RR2(n) = RR-2(n)",
                     "second Rogers-Ramanujan identity, signed interpretation",
                     ClassId::RR2,
                     {ClassId::RR2_SIGNED},
                     {MapId::F_RR2},
                     true,
                     false,
                     0,
                     std::nullopt});
        v.push_back({IdentityId::GG1_ANDREWS,
                     "GG1(n) = GG-1(n)",
                     "first Gollnitz-Gordon identity, Andrews's signed form",
                     ClassId::GG1,
                     {ClassId::GG1_ANDREWS_SIGNED},
                     {MapId::H_GG1},
                     true,
                     true,
                     0,
                     std::nullopt});
        v.push_back({IdentityId::GG1_PRIME,
                     "GG1(n) = GG'-1(n)",
                     "first Gollnitz-Gordon identity, primed signed form",
                     ClassId::GG1,
                     {ClassId::GG1_PRIME_SIGNED},
                     {MapId::G_GG1},
                     true,
                     true,
                     0,
                     std::nullopt});
        v.push_back({IdentityId::GG2_3WAY,
                     "GG2(n) = GG-2(n) = GG'-2(n)",
                     "second Gollnitz-Gordon identity, three-way signed form",
                     ClassId::GG2,
                     {ClassId::GG2_ANDREWS_SIGNED, ClassId::GG2_PRIME_SIGNED},
                     {MapId::H_GG2, MapId::G_GG2},
                     true,
                     true,
                     0,
                     std::nullopt});
        v.push_back({IdentityId::GG_DIFF,
                     "GG1(n) - GG2(n) = #{GG1-partitions with smallest part 1 or 2}",
                     "difference of the Gollnitz-Gordon counts",
                     ClassId::GG_DIFF,
                     {},
                     {},
                     true,
                     false,
                     0,
                     std::make_pair(ClassId::GG1, ClassId::GG2)});
        v.push_back({IdentityId::LG1_E,
                     "LG1(n) = E(n)",
                     "first little Gollnitz identity, signed interpretation",
                     ClassId::LG1,
                     {ClassId::LG1_E_SIGNED},
                     {MapId::PHI_LG1},
                     false,
                     false,
                     0,
                     std::nullopt});
        v.push_back({IdentityId::LG2_T,
                     "LG2(n) = T(n)",
                     "second little Gollnitz identity, signed interpretation",
                     ClassId::LG2,
                     {ClassId::LG2_T_SIGNED},
                     {MapId::PHI_LG2},
                     false,
                     false,
                     0,
                     std::nullopt});
        v.push_back({IdentityId::LG1_SHIFT,
                     "LG1(n) = LG-1(n-1)",
                     "first little Gollnitz identity, shifted signed form",
                     ClassId::LG1,
                     {ClassId::LG1_SHIFT_SIGNED},
                     {},
                     true,
                     false,
                     -1,
                     std::nullopt});
        v.push_back({IdentityId::LG1_PRIME,
                     "LG1(n) = LG'-1(n)",
                     "first little Gollnitz identity, mod-4 signed form",
                     ClassId::LG1,
                     {ClassId::LG1_PRIME_SIGNED},
                     {},
                     true,
                     false,
                     0,
                     std::nullopt});
        v.push_back({IdentityId::LG2_3WAY,
                     "LG2(n) = LG-2(n) = LG'-2(n)",
                     "second little Gollnitz identity, three-way signed form "
                     "(parity-swapped maps)",
                     ClassId::LG2,
                     {ClassId::LG2_ANDREWS_SIGNED, ClassId::LG2_PRIME_SIGNED},
                     {MapId::H_LG2, MapId::G_LG2},
                     true,
                     false,
                     0,
                     std::nullopt});
        v.push_back({IdentityId::LG2_H,
                     "LG2(n) = H(n)",
                     "second little Gollnitz identity, mod-4 signed form",
                     ClassId::LG2,
                     {ClassId::LG2_H_SIGNED},
                     {},
                     true,
                     false,
                     0,
                     std::nullopt});
        return v;
    }();
    return entries;
}

const IdentityDescriptor& descriptor(IdentityId id)
{
    for (const auto& d : catalog())
        if (d.id == id) return d;
    throw std::invalid_argument("unknown identity id");
}

} // namespace srr
