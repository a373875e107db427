#include <doctest.h>

#include <cmath>

#include "beldec/errors.hpp"
#include "beldec/staging.hpp"

using namespace beldec;

namespace {

// The five-hypothesis case study: E/F/G in stage 1, winner + R/U in stage 2.
const std::vector<std::string> kHypotheses = {"E", "F", "G", "R", "U"};

std::vector<ElementSpec> case_constraints() {
  return {ElementSpec::intersect_atoms({"E", "G"}), ElementSpec::intersect_atoms({"E", "U"}),
          ElementSpec::intersect_atoms({"F", "G"}), ElementSpec::intersect_atoms({"R", "U"})};
}

BbaSpec bba(std::string source, std::vector<std::pair<std::string, double>> atoms) {
  BbaSpec s;
  s.source = std::move(source);
  for (auto& [name, v] : atoms) s.entries.push_back({ElementSpec::atom(name), v});
  return s;
}

std::vector<StageResult> run_case_study() {
  const auto constraints = case_constraints();
  std::vector<StageResult> results;
  results.push_back(run_stage({"E", "F", "G"}, constraints,
                              bba("S1", {{"E", 0.51}, {"F", 0.49}}),
                              bba("S2", {{"E", 0.52}, {"G", 0.48}})));
  results.push_back(run_stage({results[0].winner, "R", "U"}, constraints,
                              bba("S1", {{"E", 0.5}, {"R", 0.5}}),
                              bba("S2", {{"E", 0.48}, {"U", 0.52}})));
  return results;
}

double value_of(const std::vector<std::pair<std::string, double>>& table,
                const std::string& label) {
  for (const auto& [l, v] : table)
    if (l == label) return v;
  FAIL("missing label " << label);
  return 0.0;
}

}  // namespace

TEST_CASE("stage planning") {
  SUBCASE("n = 3: one stage, no residues") {
    const auto plan = plan_stages(Frame({"a", "b", "c"}), {});
    CHECK(plan.stages.size() == 1);
    CHECK(plan.subproblems == 1);
    CHECK(plan.residue_count == 0);
    CHECK(!plan.single_stage_fallback);
    CHECK(plan.stages[0].members() == std::vector<std::string>{"a", "b", "c"});
  }
  SUBCASE("n = 5: second stage carries the winner plus the two leftovers") {
    const auto plan = plan_stages(Frame(kHypotheses), {});
    REQUIRE(plan.stages.size() == 2);
    CHECK(plan.subproblems == 1);
    CHECK(plan.residue_count == 2);
    CHECK(plan.stages[0].members() == std::vector<std::string>{"E", "F", "G"});
    CHECK(plan.stages[1].carries_winner);
    CHECK(plan.stages[1].members("E") == std::vector<std::string>{"E", "R", "U"});
  }
  SUBCASE("n = 7: three stages") {
    const auto plan =
        plan_stages(Frame({"a", "b", "c", "d", "e", "f", "g"}), {});
    REQUIRE(plan.stages.size() == 3);
    CHECK(plan.subproblems == 2);
    CHECK(plan.residue_count == 1);
    CHECK(plan.stages[1].members("b") == std::vector<std::string>{"b", "d", "e"});
    CHECK(plan.stages[2].members("d") == std::vector<std::string>{"d", "f", "g"});
    CHECK(plan.stages[2].residues == std::vector<std::string>{"f", "g"});
  }
  SUBCASE("n = 6: leftovers are consumed two at a time") {
    const auto plan = plan_stages(Frame({"a", "b", "c", "d", "e", "f"}), {});
    REQUIRE(plan.stages.size() == 3);
    CHECK(plan.residue_count == 0);
    CHECK(plan.stages[1].residues == std::vector<std::string>{"d", "e"});
    CHECK(plan.stages[2].residues == std::vector<std::string>{"f"});
  }
  SUBCASE("n < 3 falls back to a single whole-frame stage") {
    const auto plan = plan_stages(Frame({"a", "b"}), {});
    CHECK(plan.single_stage_fallback);
    REQUIRE(plan.stages.size() == 1);
    CHECK(plan.stages[0].members() == std::vector<std::string>{"a", "b"});
  }
}

TEST_CASE("running the two case-study stages") {
  const auto results = run_case_study();

  SUBCASE("stage 1 selects the first hypothesis") {
    CHECK(results[0].winner == "E");
    CHECK(results[0].subframe.size() == 3);
    // Constraints restricted to stage members: E∩G and F∩G apply, the ones
    // mentioning R or U do not.
    CHECK(results[0].model.constraints().size() == 2);
    CHECK(std::abs(value_of(results[0].belief_table, "E") - 0.391) < 5e-4);
    CHECK(std::abs(value_of(results[0].belief_table, "E∩F") - 0.255) < 5e-4);
  }
  SUBCASE("stage 2 keeps it") {
    CHECK(results[1].winner == "E");
    CHECK(results[1].model.constraints().size() == 2);
    CHECK(std::abs(value_of(results[1].belief_table, "E") - 0.3675) < 5e-4);
    CHECK(std::abs(value_of(results[1].belief_table, "E∩R") - 0.24) < 5e-4);
  }
  SUBCASE("stage BetP tables carry the reference values") {
    double e1 = 0.0;
    for (const auto& b : results[0].betp_table)
      if (b.label == "E") e1 = b.probability;
    CHECK(std::abs(e1 - 0.706) < 2e-3);
  }
}

TEST_CASE("combining stage tables") {
  const auto results = run_case_study();
  const auto combined = combine_stages(results);

  SUBCASE("beliefs take the maximum per shared proposition, unrenormalized") {
    // E appears in both stages: max(0.391309..., 0.367451...).
    CHECK(std::abs(value_of(combined.beliefs, "E") - 0.3913) < 5e-4);
    CHECK(std::abs(value_of(combined.beliefs, "F") - 0.1188) < 5e-4);
    CHECK(std::abs(value_of(combined.beliefs, "R") - 0.1275) < 5e-4);
    CHECK(std::abs(value_of(combined.beliefs, "U") - 0.2651) < 5e-4);
    CHECK(std::abs(value_of(combined.beliefs, "G") - 0.2351) < 5e-4);
    CHECK(std::abs(value_of(combined.beliefs, "E∩F") - 0.2548) < 5e-4);
    CHECK(std::abs(value_of(combined.beliefs, "E∩R") - 0.24) < 5e-4);
    double sum = 0.0;
    for (const auto& [l, v] : combined.beliefs) sum += v;
    CHECK(sum > 1.5);  // deliberately not a probability distribution
  }
  SUBCASE("aggregated pignistic row") {
    CHECK(std::abs(value_of(combined.betp, "E") - 0.7055) < 2e-3);
    CHECK(std::abs(value_of(combined.betp, "F") - 0.5693) < 2e-3);
    CHECK(std::abs(value_of(combined.betp, "R") - 0.5512) < 2e-3);
    CHECK(std::abs(value_of(combined.betp, "U") - 0.2651) < 2e-3);
    CHECK(std::abs(value_of(combined.betp, "G") - 0.2351) < 2e-3);
  }
  SUBCASE("overall winner is the best aggregated singleton") {
    CHECK(combined.winner == "E");
  }
  SUBCASE("zero-valued composite columns are dropped") {
    for (const auto& [l, v] : combined.beliefs)
      if (l.find("∩") != std::string::npos) CHECK(v > 0.0);
  }
}

TEST_CASE("single-stage combination is the identity") {
  const auto constraints = case_constraints();
  const auto stage = run_stage({"E", "F", "G"}, constraints,
                               bba("S1", {{"E", 0.51}, {"F", 0.49}}),
                               bba("S2", {{"E", 0.52}, {"G", 0.48}}));
  const auto combined = combine_stages({stage});
  CHECK(combined.winner == stage.winner);
  for (const auto& [l, v] : combined.betp) {
    for (const auto& b : stage.betp_table)
      if (b.label == l) CHECK(v == doctest::Approx(b.probability).epsilon(1e-12));
  }
}

TEST_CASE("winner ties break lexicographically") {
  // Symmetric sources over a free model: a and b end with identical BetP.
  const auto stage = run_stage({"b", "a", "c"}, {},
                               bba("S1", {{"a", 0.5}, {"b", 0.5}}),
                               bba("S2", {{"a", 0.5}, {"b", 0.5}}));
  CHECK(stage.winner == "a");
}

TEST_CASE("stage rejects a bba mentioning outside hypotheses") {
  CHECK_THROWS_AS(run_stage({"E", "F", "G"}, case_constraints(),
                            bba("S1", {{"E", 0.5}, {"R", 0.5}}),
                            bba("S2", {{"E", 1.0}})),
                  ValidationError);
}
