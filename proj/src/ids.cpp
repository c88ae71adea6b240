#include "srr/ids.hpp"

#include <array>
#include <utility>

namespace srr {

namespace {

constexpr std::array<std::pair<ClassId, std::string_view>, 24> kClassNames{{
    {ClassId::P, "P"},
    {ClassId::P_SIGNED, "P_SIGNED"},
    {ClassId::D, "D"},
    {ClassId::D_SIGNED, "D_SIGNED"},
    {ClassId::RR1, "RR1"},
    {ClassId::RR1_SIGNED, "RR1_SIGNED"},
    {ClassId::RR2, "RR2"},
    {ClassId::RR2_SIGNED, "RR2_SIGNED"},
    {ClassId::GG1, "GG1"},
    {ClassId::GG1_ANDREWS_SIGNED, "GG1_ANDREWS_SIGNED"},
    {ClassId::GG1_PRIME_SIGNED, "GG1_PRIME_SIGNED"},
    {ClassId::GG2, "GG2"},
    {ClassId::GG2_ANDREWS_SIGNED, "GG2_ANDREWS_SIGNED"},
    {ClassId::GG2_PRIME_SIGNED, "GG2_PRIME_SIGNED"},
    {ClassId::GG_DIFF, "GG_DIFF"},
    {ClassId::LG1, "LG1"},
    {ClassId::LG1_E_SIGNED, "LG1_E_SIGNED"},
    {ClassId::LG1_SHIFT_SIGNED, "LG1_SHIFT_SIGNED"},
    {ClassId::LG1_PRIME_SIGNED, "LG1_PRIME_SIGNED"},
    {ClassId::LG2, "LG2"},
    {ClassId::LG2_T_SIGNED, "LG2_T_SIGNED"},
    {ClassId::LG2_ANDREWS_SIGNED, "LG2_ANDREWS_SIGNED"},
    {ClassId::LG2_PRIME_SIGNED, "LG2_PRIME_SIGNED"},
    {ClassId::LG2_H_SIGNED, "LG2_H_SIGNED"},
}};

constexpr std::array<std::pair<IdentityId, std::string_view>, 14> kIdentityNames{{
    {IdentityId::P_SIGNED, "P_SIGNED"},
    {IdentityId::D_SIGNED, "D_SIGNED"},
    {IdentityId::RR1_SIGNED, "RR1_SIGNED"},
    {IdentityId::RR2_SIGNED, "RR2_SIGNED"},
    {IdentityId::GG1_ANDREWS, "GG1_ANDREWS"},
    {IdentityId::GG1_PRIME, "GG1_PRIME"},
    {IdentityId::GG2_3WAY, "GG2_3WAY"},
    {IdentityId::GG_DIFF, "GG_DIFF"},
    {IdentityId::LG1_E, "LG1_E"},
    {IdentityId::LG2_T, "LG2_T"},
    {IdentityId::LG1_SHIFT, "LG1_SHIFT"},
    {IdentityId::LG1_PRIME, "LG1_PRIME"},
    {IdentityId::LG2_3WAY, "LG2_3WAY"},
    {IdentityId::LG2_H, "LG2_H"},
}};

constexpr std::array<std::pair<MapId, std::string_view>, 12> kMapNames{{
    {MapId::F_P, "F_P"},
    {MapId::F_D, "F_D"},
    {MapId::F_RR1, "F_RR1"},
    {MapId::F_RR2, "F_RR2"},
    {MapId::H_GG1, "H_GG1"},
    {MapId::H_GG2, "H_GG2"},
    {MapId::G_GG1, "G_GG1"},
    {MapId::G_GG2, "G_GG2"},
    {MapId::PHI_LG1, "PHI_LG1"},
    {MapId::PHI_LG2, "PHI_LG2"},
    {MapId::H_LG2, "H_LG2"},
    {MapId::G_LG2, "G_LG2"},
}};

template <typename Table, typename Id>
std::string_view name_of(const Table& table, Id id)
{
    for (const auto& [k, v] : table)
        if (k == id) return v;
    return "?";
}

template <typename Table, typename Id>
std::optional<Id> id_of(const Table& table, std::string_view s)
{
    for (const auto& [k, v] : table)
        if (v == s) return k;
    return std::nullopt;
}

} // namespace

std::string_view to_string(ClassId id) { return name_of(kClassNames, id); }
std::string_view to_string(IdentityId id) { return name_of(kIdentityNames, id); }
std::string_view to_string(MapId id) { return name_of(kMapNames, id); }

std::optional<ClassId> parse_class_id(std::string_view s)
{
    return id_of<decltype(kClassNames), ClassId>(kClassNames, s);
}

std::optional<IdentityId> parse_identity_id(std::string_view s)
{
    return id_of<decltype(kIdentityNames), IdentityId>(kIdentityNames, s);
}

std::optional<MapId> parse_map_id(std::string_view s)
{
    return id_of<decltype(kMapNames), MapId>(kMapNames, s);
}

const std::vector<ClassId>& all_class_ids()
{
    static const std::vector<ClassId> ids = [] {
        std::vector<ClassId> v;
        for (const auto& [k, _] : kClassNames) v.push_back(k);
        return v;
    }();
    return ids;
}

const std::vector<IdentityId>& all_identity_ids()
{
    static const std::vector<IdentityId> ids = [] {
        std::vector<IdentityId> v;
        for (const auto& [k, _] : kIdentityNames) v.push_back(k);
        return v;
    }();
    return ids;
}

const std::vector<MapId>& all_map_ids()
{
    static const std::vector<MapId> ids = [] {
        std::vector<MapId> v;
        for (const auto& [k, _] : kMapNames) v.push_back(k);
        return v;
    }();
    return ids;
}

Side side_of(ClassId id)
{
    switch (id) {
    case ClassId::P:
    case ClassId::D:
    case ClassId::RR1:
    case ClassId::RR2:
    case ClassId::GG1:
    case ClassId::GG2:
    case ClassId::GG_DIFF:
    case ClassId::LG1:
    case ClassId::LG2:
        return Side::Ordinary;
    default:
        return Side::Signed;
    }
}

} // namespace srr
