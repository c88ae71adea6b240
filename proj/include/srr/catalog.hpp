#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "srr/ids.hpp"

// The identity catalog: one descriptor per verified identity, binding the
// ordinary class, the signed class(es), the optional product side, the
// bijections and the index offset.

namespace srr {

struct IdentityDescriptor {
    IdentityId id;
    std::string statement;   // counting statement, e.g. "RR1(n) = RR-1(n)"
    std::string source;      // literature name of the identity
    ClassId ordinary;
    std::vector<ClassId> signed_classes;
    std::vector<MapId> maps;
    bool sum_side_stated;
    bool product_side_stated;
    int index_offset;        // signed index = ordinary index + offset

    // Set for the difference identity: ordinary-class counts equal
    // count(first) - count(second).
    std::optional<std::pair<ClassId, ClassId>> difference_of;
};

const std::vector<IdentityDescriptor>& catalog();
const IdentityDescriptor& descriptor(IdentityId id);

} // namespace srr
