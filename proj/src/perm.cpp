#include "tritris/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tritris/errors.hpp"

namespace tritris {

bool is_permutation(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (std::uint32_t v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Perm identity_perm(std::uint32_t degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

Perm compose_perm(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) {
    throw ValidationError("cannot compose permutations of different degree");
  }
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

Perm inverse_perm(const Perm& p) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<std::uint32_t>(i);
  return out;
}

std::vector<std::uint32_t> cycle_lengths(const Perm& p) {
  std::vector<std::uint32_t> out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::uint32_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::uint64_t perm_order(const Perm& p) {
  std::uint64_t ord = 1;
  for (std::uint32_t len : cycle_lengths(p)) {
    ord = std::lcm<std::uint64_t>(ord, len);
  }
  return ord;
}

std::string cycle_notation(const Perm& p) {
  std::ostringstream out;
  std::vector<bool> seen(p.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) {
      seen[i] = true;
      continue;
    }
    out << '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      if (!first) out << ' ';
      out << j;
      first = false;
    }
    out << ')';
    any = true;
  }
  return any ? out.str() : "id";
}

std::string cycle_type_string(const Perm& p) {
  std::string out;
  for (std::uint32_t len : cycle_lengths(p)) {
    if (len == 1) continue;
    if (!out.empty()) out += ',';
    out += std::to_string(len);
  }
  return out.empty() ? "id" : out;
}

std::set<Perm> generate_group(const std::vector<Perm>& gens,
                              std::size_t max_elements) {
  if (gens.empty()) throw ValidationError("generate_group: no generators");
  const std::size_t degree = gens.front().size();
  for (const Perm& g : gens) {
    if (g.size() != degree || !is_permutation(g)) {
      throw ValidationError("generate_group: invalid generator");
    }
  }
  std::set<Perm> group{identity_perm(static_cast<std::uint32_t>(degree))};
  std::vector<Perm> frontier(group.begin(), group.end());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& p : frontier) {
      for (const Perm& g : gens) {
        Perm q = compose_perm(p, g);
        if (group.insert(q).second) {
          if (group.size() > max_elements) {
            throw BudgetError("group closure cap exceeded", group.size() - 1);
          }
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }
  return group;
}

}  // namespace tritris
