#include "tritris/group_id.hpp"

#include <algorithm>
#include <set>

#include "tritris/errors.hpp"

namespace tritris {

namespace {

using OrderMultiset = std::map<std::uint64_t, std::uint64_t>;

OrderMultiset multiset(std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> xs) {
  return OrderMultiset(xs.begin(), xs.end());
}

struct CatalogEntry {
  std::uint64_t order;
  bool abelian;
  OrderMultiset orders;
  const char* name;
};

// Non-cyclic groups distinguished by (order, abelian, element orders) at
// the sizes this project meets.  Cyclic groups are recognized generically.
const CatalogEntry kCatalog[] = {
    {4, true, multiset({{1, 1}, {2, 3}}), "C2xC2"},
    {6, false, multiset({{1, 1}, {2, 3}, {3, 2}}), "S3"},
    {8, true, multiset({{1, 1}, {2, 7}}), "C2xC2xC2"},
    {8, true, multiset({{1, 1}, {2, 3}, {4, 4}}), "C4xC2"},
    {8, false, multiset({{1, 1}, {2, 5}, {4, 2}}), "D4"},
    {8, false, multiset({{1, 1}, {2, 1}, {4, 6}}), "Q8"},
    {9, true, multiset({{1, 1}, {3, 8}}), "C3xC3"},
    {10, false, multiset({{1, 1}, {2, 5}, {5, 4}}), "D5"},
    {12, true, multiset({{1, 1}, {2, 3}, {3, 2}, {6, 6}}), "C6xC2"},
    {12, false, multiset({{1, 1}, {2, 3}, {3, 8}}), "A4"},
    {12, false, multiset({{1, 1}, {2, 7}, {3, 2}, {6, 2}}), "D6"},
    {12, false, multiset({{1, 1}, {2, 1}, {3, 2}, {4, 6}, {6, 2}}), "Dic3"},
    {14, false, multiset({{1, 1}, {2, 7}, {7, 6}}), "D7"},
    {24, false, multiset({{1, 1}, {2, 9}, {3, 8}, {4, 6}}), "S4"},
    {60, false, multiset({{1, 1}, {2, 15}, {3, 20}, {5, 24}}), "A5"},
    {120, false,
     multiset({{1, 1}, {2, 25}, {3, 20}, {4, 30}, {5, 24}, {6, 20}}), "S5"},
};

}  // namespace

GroupFingerprint identify_group(const std::vector<Perm>& perms) {
  if (perms.empty()) throw ValidationError("identify_group: empty input");
  const std::size_t degree = perms.front().size();
  std::set<Perm> members;
  for (const Perm& p : perms) {
    if (p.size() != degree || !is_permutation(p)) {
      throw ValidationError("identify_group: element is not a permutation");
    }
    if (!members.insert(p).second) {
      throw ValidationError("identify_group: duplicate element");
    }
  }
  if (!members.count(identity_perm(static_cast<std::uint32_t>(degree)))) {
    throw ValidationError("identify_group: identity missing");
  }
  for (const Perm& a : perms) {
    for (const Perm& b : perms) {
      if (!members.count(compose_perm(a, b))) {
        throw ValidationError("identify_group: not closed under composition");
      }
    }
  }

  GroupFingerprint fp;
  fp.degree = static_cast<std::uint32_t>(degree);
  fp.order = perms.size();
  for (const Perm& p : perms) ++fp.element_order_multiset[perm_order(p)];
  fp.abelian = true;
  for (std::size_t i = 0; i < perms.size() && fp.abelian; ++i) {
    for (std::size_t j = i + 1; j < perms.size(); ++j) {
      if (compose_perm(perms[i], perms[j]) != compose_perm(perms[j], perms[i])) {
        fp.abelian = false;
        break;
      }
    }
  }

  if (fp.order == 1) {
    fp.name = "trivial";
    return fp;
  }
  // An element of full order makes the group cyclic.
  if (fp.element_order_multiset.count(fp.order)) {
    fp.name = "C" + std::to_string(fp.order);
    return fp;
  }
  for (const CatalogEntry& e : kCatalog) {
    if (e.order == fp.order && e.abelian == fp.abelian &&
        e.orders == fp.element_order_multiset) {
      fp.name = e.name;
      return fp;
    }
  }
  fp.name = "unidentified(order=" + std::to_string(fp.order) + ")";
  return fp;
}

}  // namespace tritris
