#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tritris/perm.hpp"

namespace tritris {

struct GroupFingerprint {
  std::uint32_t degree = 0;
  std::uint64_t order = 0;
  std::map<std::uint64_t, std::uint64_t> element_order_multiset;
  bool abelian = true;
  std::string name;  // catalog label or "unidentified(order=N)"
};

// Checks the input is a group (identity present, closed under composition;
// inverses follow by finiteness), computes the invariants, and names the
// group from a catalog keyed on (order, abelian, element-order multiset).
// Throws ValidationError when the input is not a group.
GroupFingerprint identify_group(const std::vector<Perm>& perms);

}  // namespace tritris
