#pragma once

#include <string_view>
#include <vector>

#include "commgraph/constructions.hpp"
#include "commgraph/group.hpp"
#include "commgraph/subgroup.hpp"

namespace testing {

inline commgraph::GroupPtr sym4() {
  static const commgraph::GroupPtr g = commgraph::construct(commgraph::GroupSpec::sym(4));
  return g;
}

// Element of a permutation group from 1-based cycle text.
inline commgraph::ElementId perm(const commgraph::GroupTable& g, std::string_view cycles, std::size_t points = 4) {
  return g.find_label(commgraph::cycle_label(commgraph::parse_cycles(cycles, points))).value();
}

inline commgraph::SubgroupSet gen(const commgraph::GroupPtr& g, std::initializer_list<std::string_view> cycles) {
  std::vector<commgraph::ElementId> ids;
  for (auto c : cycles) ids.push_back(perm(*g, c));
  return commgraph::subgroup_closure(g, ids);
}

inline commgraph::SubgroupSet klein4(const commgraph::GroupPtr& g) { return gen(g, {"(1,2)(3,4)", "(1,3)(2,4)"}); }
inline commgraph::SubgroupSet alt4(const commgraph::GroupPtr& g) { return gen(g, {"(1,2,3)", "(1,2)(3,4)"}); }

}  // namespace testing
