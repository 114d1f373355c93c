#pragma once

#include <cstdint>
#include <vector>

namespace tritris {

// Total map on {0, ..., degree-1}; map[i] is the image of i.
struct Transformation {
  std::vector<std::uint32_t> map;

  std::uint32_t degree() const { return static_cast<std::uint32_t>(map.size()); }
  bool operator==(const Transformation&) const = default;
};

Transformation identity_transformation(std::uint32_t degree);

// Left-to-right action: (a then b), result.map[i] = b.map[a.map[i]].
// Throws ValidationError on degree mismatch.
Transformation compose(const Transformation& a, const Transformation& b);

// t^e for e >= 1, by repeated squaring.
Transformation power(const Transformation& t, std::uint64_t e);

// True iff some power t^m satisfies t^{m+1} = t^m, i.e. the eventual cycle
// of t has period 1.  The index of any map on d points is at most d-1, so
// checking u = t^(2^ceil(log2 d)) against u.t suffices.
bool element_is_aperiodic(const Transformation& t);

}  // namespace tritris
