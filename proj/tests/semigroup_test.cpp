#include <doctest.h>

#include <random>

#include "tritris/errors.hpp"
#include "tritris/semigroup.hpp"
#include "tritris/statespace.hpp"

using namespace tritris;

namespace {

GameConfig std3x3(Variant variant = Variant::Standard) {
  GameConfig c;
  c.variant = variant;
  c.pieces = pieces_by_labels(triomino_catalog(), {"LS", "RS", "LUS", "RUS", "V"});
  return c;
}

Transformation eval_witness(const SemigroupEnumeration& sg, const ActionTable& act,
                            std::uint32_t id) {
  Transformation t = identity_transformation(act.num_states);
  for (std::uint32_t g : sg.witness(id)) {
    Transformation gen;
    gen.map = act.tables[g];
    t = compose(t, gen);
  }
  return t;
}

}  // namespace

TEST_CASE("flip-flop generates exactly three elements") {
  const auto act = flip_flop();
  const auto sg = enumerate_semigroup(act);
  CHECK(sg.size() == 3);
  // Composition of the two resets in either order gives a reset, identity
  // is neutral.
  Transformation a, b, i;
  a.map = act.tables[0];
  b.map = act.tables[1];
  i.map = act.tables[2];
  CHECK(compose(a, b) == b);
  CHECK(compose(b, a) == a);
  CHECK(compose(i, a) == a);
  CHECK(compose(a, i) == a);
}

TEST_CASE("composition order: left factor acts first") {
  // a sends everything to 0, g sends 0 to 1: the event sequence "a then g"
  // must send everything to 1.
  Transformation a, g;
  a.map = {0, 0, 0};
  g.map = {1, 2, 0};
  const Transformation ag = compose(a, g);
  CHECK(ag.map == std::vector<std::uint32_t>{1, 1, 1});
}

TEST_CASE("3x3 standard: 2056 elements, all with a sound witness") {
  const auto space = enumerate_state_space(std3x3());
  const auto act = action_table(space);
  const auto sg = enumerate_semigroup(act);
  REQUIRE(sg.size() == 2056);

  for (std::uint32_t id = 0; id < sg.size(); ++id) {
    CHECK(eval_witness(sg, act, id) == sg.transformation(id));
  }
}

TEST_CASE("enumeration is right-closed under the generators") {
  const auto act = flip_flop();
  const auto sg = enumerate_semigroup(act);
  for (std::uint32_t id = 0; id < sg.size(); ++id) {
    for (std::uint32_t g = 0; g < act.tables.size(); ++g) {
      Transformation gen;
      gen.map = act.tables[g];
      CHECK(sg.find(compose(sg.transformation(id), gen)).has_value());
    }
  }
}

TEST_CASE("sampled associativity on the 3x3 semigroup") {
  const auto space = enumerate_state_space(std3x3(Variant::Periodic));
  const auto act = action_table(space);
  const auto sg = enumerate_semigroup(act);
  std::mt19937 rng(13);
  std::uniform_int_distribution<std::uint32_t> pick(0, sg.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = sg.transformation(pick(rng));
    const auto b = sg.transformation(pick(rng));
    const auto c = sg.transformation(pick(rng));
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("element cap raises a budget error carrying progress") {
  const auto space = enumerate_state_space(std3x3());
  SemigroupOptions opts;
  opts.element_cap = 100;
  try {
    enumerate_semigroup(action_table(space), opts);
    FAIL("expected BudgetError");
  } catch (const BudgetError& e) {
    CHECK(e.reached == 100);
  }
}

TEST_CASE("aperiodicity of single transformations") {
  Transformation id3 = identity_transformation(3);
  CHECK(element_is_aperiodic(id3));
  Transformation swap2;
  swap2.map = {1, 0};
  CHECK(!element_is_aperiodic(swap2));
  Transformation constant;
  constant.map = {2, 2, 2};
  CHECK(element_is_aperiodic(constant));
  Transformation cycle3;
  cycle3.map = {1, 2, 0, 0};  // 3-cycle plus a tail
  CHECK(!element_is_aperiodic(cycle3));
  Transformation eventually_fixed;
  eventually_fixed.map = {1, 2, 2};
  CHECK(element_is_aperiodic(eventually_fixed));
}

TEST_CASE("the standard 3x3 semigroup is aperiodic, the periodic one is not") {
  const auto std_sg =
      enumerate_semigroup(action_table(enumerate_state_space(std3x3())));
  CHECK(semigroup_is_aperiodic_elementwise(std_sg));

  const auto per_sg = enumerate_semigroup(
      action_table(enumerate_state_space(std3x3(Variant::Periodic))));
  CHECK(per_sg.size() == 118637);
  CHECK(!semigroup_is_aperiodic_elementwise(per_sg));
}

TEST_CASE("power agrees with iterated composition") {
  Transformation t;
  t.map = {1, 2, 3, 0, 0};
  Transformation acc = t;
  for (int e = 2; e <= 9; ++e) {
    acc = compose(acc, t);
    CHECK(power(t, e) == acc);
  }
  CHECK(power(t, 1) == t);
  CHECK(power(t, 0) == identity_transformation(5));
}
