#include <doctest.h>

#include "beldec/errors.hpp"
#include "beldec/mass.hpp"

using namespace beldec;

namespace {

HybridModel stage1_model() {
  const Frame f({"E", "F", "G"});
  const PartSet eg = free_atom(f, 1).intersect(free_atom(f, 3));
  const PartSet fg = free_atom(f, 2).intersect(free_atom(f, 3));
  return apply_constraints(f, {eg, fg});
}

MassEntry entry(const Frame& f, int i, double v) {
  return {free_atom(f, i), v, f.label(i)};
}

}  // namespace

TEST_CASE("from_assignments accepts the stage-1 bba") {
  const auto model = stage1_model();
  const auto m = MassFunction::from_assignments(
      model, {entry(model.frame(), 1, 0.51), entry(model.frame(), 2, 0.49)}, "S1");
  CHECK(m.focal_elements().size() == 2);
  CHECK(m.mass_of(free_atom(model.frame(), 1)) == doctest::Approx(0.51).epsilon(1e-12));
  CHECK(m.source() == "S1");
}

TEST_CASE("from_assignments rejects bad inputs") {
  const auto model = stage1_model();
  SUBCASE("sum below 1") {
    CHECK_THROWS_AS(MassFunction::from_assignments(
                        model, {entry(model.frame(), 1, 0.5), entry(model.frame(), 3, 0.4)}, "S"),
                    ValidationError);
  }
  SUBCASE("mass on constrained-empty element") {
    const PartSet eg = free_atom(model.frame(), 1).intersect(free_atom(model.frame(), 3));
    CHECK_THROWS_AS(MassFunction::from_assignments(
                        model, {{eg, 0.2, "E∩G"}, entry(model.frame(), 1, 0.8)}, "S"),
                    ValidationError);
  }
  SUBCASE("negative mass") {
    CHECK_THROWS_AS(MassFunction::from_assignments(
                        model, {entry(model.frame(), 1, -0.1), entry(model.frame(), 2, 1.1)}, "S"),
                    ValidationError);
  }
  SUBCASE("mass on the empty element") {
    CHECK_THROWS_AS(MassFunction::from_assignments(
                        model, {{PartSet{}, 0.3, "∅"}, entry(model.frame(), 1, 0.7)}, "S"),
                    ValidationError);
  }
}

TEST_CASE("in-tolerance sums are renormalized exactly") {
  const auto model = stage1_model();
  const auto m = MassFunction::from_assignments(
      model, {entry(model.frame(), 1, 0.5 + 2e-10), entry(model.frame(), 2, 0.5)}, "S");
  double sum = 0.0;
  for (const auto& e : m.focal_elements()) sum += e.value;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("duplicate keys merge additively") {
  const auto model = stage1_model();
  const auto m = MassFunction::from_assignments(
      model, {entry(model.frame(), 1, 0.3), entry(model.frame(), 1, 0.2),
              entry(model.frame(), 2, 0.5)},
      "S");
  CHECK(m.focal_elements().size() == 2);
  CHECK(m.mass_of(free_atom(model.frame(), 1)) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("vacuous bba") {
  SUBCASE("free 3D") {
    const auto model = HybridModel::free_model(Frame({"a", "b", "c"}));
    const auto m = MassFunction::vacuous(model);
    REQUIRE(m.focal_elements().size() == 1);
    CHECK(m.focal_elements()[0].element == free_total(model.frame()));
    CHECK(m.focal_elements()[0].value == 1.0);
  }
  SUBCASE("hybrid model: full union has cardinality 4") {
    const auto model = stage1_model();
    const auto m = MassFunction::vacuous(model);
    CHECK(model.cardinality(m.focal_elements()[0].element) == 4);
  }
  SUBCASE("1D frame") {
    const auto model = HybridModel::free_model(Frame({"only"}));
    const auto m = MassFunction::vacuous(model);
    CHECK(m.mass_of(free_atom(model.frame(), 1)) == 1.0);
  }
}

TEST_CASE("focal elements are ordered and positive") {
  const auto model = stage1_model();
  const auto m = MassFunction::from_assignments(
      model, {entry(model.frame(), 2, 0.49), entry(model.frame(), 1, 0.51)}, "S1");
  REQUIRE(m.focal_elements().size() == 2);
  // Canonical order, not insertion order.
  CHECK(m.focal_elements()[0].label == "E");
  CHECK(m.focal_elements()[1].label == "F");
  for (const auto& e : m.focal_elements()) CHECK(e.value > 0.0);
}
