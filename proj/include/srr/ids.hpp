#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Shared identifier enums for partition classes, catalog identities and
// bijective maps.  The spellings returned by to_string() are the wire
// spellings used by the CLI, the CSV/JSON outputs and the test suite.

namespace srr {

enum class ClassId {
    P,
    P_SIGNED,
    D,
    D_SIGNED,
    RR1,
    RR1_SIGNED,
    RR2,
    RR2_SIGNED,
    GG1,
    GG1_ANDREWS_SIGNED,
    GG1_PRIME_SIGNED,
    GG2,
    GG2_ANDREWS_SIGNED,
    GG2_PRIME_SIGNED,
    GG_DIFF,
    LG1,
    LG1_E_SIGNED,
    LG1_SHIFT_SIGNED,
    LG1_PRIME_SIGNED,
    LG2,
    LG2_T_SIGNED,
    LG2_ANDREWS_SIGNED,
    LG2_PRIME_SIGNED,
    LG2_H_SIGNED,
};

// One entry per verified identity; *_3WAY entries carry two signed classes.
enum class IdentityId {
    P_SIGNED,
    D_SIGNED,
    RR1_SIGNED,
    RR2_SIGNED,
    GG1_ANDREWS,
    GG1_PRIME,
    GG2_3WAY,
    GG_DIFF,
    LG1_E,
    LG2_T,
    LG1_SHIFT,
    LG1_PRIME,
    LG2_3WAY,
    LG2_H,
};

enum class MapId {
    F_P,
    F_D,
    F_RR1,
    F_RR2,
    H_GG1,
    H_GG2,
    G_GG1,
    G_GG2,
    PHI_LG1,
    PHI_LG2,
    H_LG2,
    G_LG2,
};

enum class Side { Ordinary, Signed };

std::string_view to_string(ClassId id);
std::string_view to_string(IdentityId id);
std::string_view to_string(MapId id);

std::optional<ClassId> parse_class_id(std::string_view s);
std::optional<IdentityId> parse_identity_id(std::string_view s);
std::optional<MapId> parse_map_id(std::string_view s);

const std::vector<ClassId>& all_class_ids();
const std::vector<IdentityId>& all_identity_ids();
const std::vector<MapId>& all_map_ids();

Side side_of(ClassId id);

} // namespace srr
