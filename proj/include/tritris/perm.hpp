#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace tritris {

// Permutation of {0, ..., n-1}; p[i] is the image of i.
using Perm = std::vector<std::uint32_t>;

bool is_permutation(const Perm& p);
Perm identity_perm(std::uint32_t degree);

// Left-to-right: (a then b)[i] = b[a[i]].
Perm compose_perm(const Perm& a, const Perm& b);
Perm inverse_perm(const Perm& p);

// Cycle lengths sorted descending, fixed points included.
std::vector<std::uint32_t> cycle_lengths(const Perm& p);
std::uint64_t perm_order(const Perm& p);

// "(0 2 4)(1 3)" on nontrivial cycles, "id" for the identity.
std::string cycle_notation(const Perm& p);

// "5" for a 5-cycle on 5 points, "3,2", "id", ...; fixed points omitted.
std::string cycle_type_string(const Perm& p);

// Closure of the given permutations under composition.  All inputs must be
// permutations of equal degree.  Throws BudgetError past max_elements.
std::set<Perm> generate_group(const std::vector<Perm>& gens,
                              std::size_t max_elements = 1'000'000);

}  // namespace tritris
