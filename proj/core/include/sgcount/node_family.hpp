#pragma once

#include <array>
#include <string>
#include <string_view>

namespace sgcount {

enum class NodeFamilyId {
  EquidistantInterior,
  EquidistantBoundary,
  Chebyshev1,
  Chebyshev2,
  Leja,
  SymmetricLeja,
};

inline constexpr std::array<NodeFamilyId, 6> kAllNodeFamilies = {
    NodeFamilyId::EquidistantInterior, NodeFamilyId::EquidistantBoundary,
    NodeFamilyId::Chebyshev1,          NodeFamilyId::Chebyshev2,
    NodeFamilyId::Leja,                NodeFamilyId::SymmetricLeja,
};

/// Names used on the command line and in JSON, e.g. "chebyshev1".
std::string_view family_name(NodeFamilyId family);

/// Inverse of family_name; throws ContractError on unknown names.
NodeFamilyId parse_family(std::string_view text);

}  // namespace sgcount
