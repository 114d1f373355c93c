#include "tritris/transformation.hpp"

#include <numeric>

#include "tritris/errors.hpp"
#include "tritris/kernels.hpp"

namespace tritris {

Transformation identity_transformation(std::uint32_t degree) {
  Transformation t;
  t.map.resize(degree);
  std::iota(t.map.begin(), t.map.end(), 0u);
  return t;
}

Transformation compose(const Transformation& a, const Transformation& b) {
  if (a.degree() != b.degree()) {
    throw ValidationError("cannot compose transformations of different degree");
  }
  Transformation out;
  out.map.resize(a.degree());
  kernels::apply_table(out.map.data(), a.map.data(), b.map.data(), a.degree());
  return out;
}

Transformation power(const Transformation& t, std::uint64_t e) {
  if (e == 0) return identity_transformation(t.degree());
  Transformation base = t;
  Transformation acc;
  bool have_acc = false;
  while (e > 0) {
    if (e & 1) {
      acc = have_acc ? compose(acc, base) : base;
      have_acc = true;
    }
    e >>= 1;
    if (e > 0) base = compose(base, base);
  }
  return acc;
}

bool element_is_aperiodic(const Transformation& t) {
  if (t.degree() <= 1) return true;
  // Square past the index: after ceil(log2 d) squarings the exponent is a
  // power of two >= d-1, which lands inside the eventual cycle.
  Transformation u = t;
  for (std::uint32_t reach = 1; reach < t.degree() - 1; reach <<= 1) {
    u = compose(u, u);
  }
  return compose(u, t) == u;
}

}  // namespace tritris
