#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "beldec/errors.hpp"
#include "beldec/io.hpp"

using namespace beldec;
namespace fs = std::filesystem;

namespace {

io::json parse(const char* text) { return io::json::parse(text); }

struct TempDir {
  fs::path dir;
  TempDir() {
    dir = fs::temp_directory_path() / ("beldec-io-" + std::to_string(std::rand()));
    fs::create_directories(dir);
  }
  ~TempDir() { fs::remove_all(dir); }
  fs::path write(const std::string& name, const std::string& content) const {
    const fs::path p = dir / name;
    std::ofstream(p) << content;
    return p;
  }
};

}  // namespace

TEST_CASE("frame documents") {
  const auto doc = io::parse_frame(parse(R"({
    "hypotheses": ["E", "F", "G"],
    "empty": [["E", "G"], ["F", "G"]]
  })"));
  CHECK(doc.frame.size() == 3);
  REQUIRE(doc.constraints.size() == 2);
  const auto model = doc.make_model();
  CHECK(model.cardinality(model.atom(1)) == 2);
  CHECK(model.model_empty(free_atom(doc.frame, 1).intersect(free_atom(doc.frame, 3))));

  SUBCASE("missing hypotheses key") {
    CHECK_THROWS_AS(io::parse_frame(parse(R"({"empty": []})")), ValidationError);
  }
  SUBCASE("constraint over unknown hypothesis") {
    CHECK_THROWS_AS(io::parse_frame(parse(R"({
      "hypotheses": ["E"], "empty": [["E", "X"]]
    })")),
                    ValidationError);
  }
}

TEST_CASE("element expressions round-trip") {
  const Frame f({"E", "F", "G"});
  SUBCASE("atom as a bare string") {
    const auto e = io::parse_element(parse(R"("F")"));
    CHECK(e.label() == "F");
    CHECK(e.eval(f) == free_atom(f, 2));
  }
  SUBCASE("array form is an intersection") {
    const auto e = io::parse_element(parse(R"(["E", "F"])"));
    CHECK(e.label() == "E∩F");
    CHECK(e.eval(f) == free_atom(f, 1).intersect(free_atom(f, 2)));
  }
  SUBCASE("explicit union") {
    const auto e = io::parse_element(parse(R"({"union": ["E", "G"]})"));
    CHECK(e.eval(f) == free_atom(f, 1).unite(free_atom(f, 3)));
  }
  SUBCASE("serialization recovers a readable form") {
    const auto lens = free_atom(f, 1).intersect(free_atom(f, 2));
    const auto j = io::element_to_json(f, lens);
    CHECK(io::parse_element(j).eval(f) == lens);
    const auto u = free_atom(f, 2).unite(free_atom(f, 3));
    CHECK(io::parse_element(io::element_to_json(f, u)).eval(f) == u);
  }
  SUBCASE("an element with no short expression survives via parts") {
    // (E∩F)∪(E∩G) has no single-∩/∪ expression over atoms.
    const auto odd = free_atom(f, 1).intersect(free_atom(f, 2))
                         .unite(free_atom(f, 1).intersect(free_atom(f, 3)));
    CHECK(io::parse_element(io::element_to_json(f, odd)).eval(f) == odd);
  }
  SUBCASE("bad element shapes") {
    CHECK_THROWS_AS(io::parse_element(parse(R"(42)")), ValidationError);
    CHECK_THROWS_AS(io::parse_element(parse(R"({"neither": []})")), ValidationError);
  }
}

TEST_CASE("bba round-trip") {
  const auto spec = io::parse_bba(parse(R"({
    "source": "S1",
    "masses": [
      {"element": "E", "value": 0.51},
      {"element": "F", "value": 0.49}
    ]
  })"));
  CHECK(spec.source == "S1");
  REQUIRE(spec.entries.size() == 2);
  CHECK(spec.entries[0].second == 0.51);

  const Frame f({"E", "F", "G"});
  const auto model = HybridModel::free_model(f);
  std::vector<MassEntry> entries;
  for (const auto& [expr, v] : spec.entries)
    entries.push_back({expr.eval(f), v, expr.label()});
  const auto m = MassFunction::from_assignments(model, entries, spec.source);

  const auto j = io::mass_to_json(m);
  const auto spec2 = io::parse_bba(j);
  CHECK(spec2.source == "S1");
  REQUIRE(spec2.entries.size() == 2);
  CHECK(spec2.entries[0].first.eval(f) == free_atom(f, 1));
  CHECK(spec2.entries[0].second == doctest::Approx(0.51).epsilon(1e-12));

  SUBCASE("negative or malformed values are rejected") {
    CHECK_THROWS_AS(io::parse_bba(parse(R"({"source":"S","masses":[{"element":"E"}]})")),
                    ValidationError);
    CHECK_THROWS_AS(io::parse_bba(parse(R"({"source":"S","masses":"nope"})")),
                    ValidationError);
  }
}

TEST_CASE("network round-trip") {
  const char* text = R"({
    "nodes": [
      {"name": "A", "states": ["t", "f"], "parents": [], "cpt": [[0.3, 0.7]]},
      {"name": "B", "states": ["t", "f"], "parents": ["A"],
       "cpt": [[0.9, 0.1], [0.2, 0.8]]}
    ]
  })";
  const auto net = io::parse_network(parse(text));
  CHECK(validate(net).empty());
  CHECK(net.nodes()[1].parents == std::vector<std::string>{"A"});

  const auto j = io::network_to_json(net);
  const auto net2 = io::parse_network(j);
  REQUIRE(net2.nodes().size() == 2);
  CHECK(net2.nodes()[1].cpt[1][0] == 0.2);

  SUBCASE("shape errors surface at parse time") {
    CHECK_THROWS_AS(io::parse_network(parse(R"({"nodes": [{"name": "A"}]})")),
                    ValidationError);
  }
}

TEST_CASE("evidence parsing") {
  const auto ev = io::parse_evidence(parse(R"({
    "hard": {"A": "t"},
    "soft": {"B": [0.9, 0.1]}
  })"));
  CHECK(ev.hard.at("A") == "t");
  CHECK(ev.soft.at("B")[0] == 0.9);
  CHECK(io::parse_evidence(parse(R"({})")).hard.empty());
  CHECK_THROWS_AS(io::parse_evidence(parse(R"({"hard": {"A": 3}})")), ValidationError);
}

TEST_CASE("file loading") {
  TempDir tmp;
  SUBCASE("missing file") {
    CHECK_THROWS_AS(io::load_json_file((tmp.dir / "absent.json").string()), ValidationError);
  }
  SUBCASE("malformed JSON") {
    const auto p = tmp.write("bad.json", "{not json");
    CHECK_THROWS_AS(io::load_json_file(p.string()), ValidationError);
  }
  SUBCASE("pipeline config resolves paths relative to itself") {
    tmp.write("frame.json", R"({"hypotheses":["E","F","G"],"empty":[["E","G"],["F","G"]]})");
    tmp.write("s1.json", R"({"source":"S1","masses":[{"element":"E","value":0.51},
                             {"element":"F","value":0.49}]})");
    tmp.write("s2.json", R"({"source":"S2","masses":[{"element":"E","value":0.52},
                             {"element":"G","value":0.48}]})");
    const auto cfg = tmp.write("pipeline.json", R"({
      "frame_file": "frame.json",
      "stages": [{"s1": "s1.json", "s2": "s2.json"}],
      "output": {"round": 4, "format": "json"}
    })");
    const auto pc = io::load_pipeline_config(cfg.string());
    CHECK(pc.frame.frame.size() == 3);
    REQUIRE(pc.stage_sources.size() == 1);
    CHECK(pc.stage_sources[0].first.source == "S1");
    CHECK(!pc.has_bn);
    CHECK(pc.round_digits == 4);
    CHECK(pc.format == "json");
  }
  SUBCASE("unknown binding mode is rejected") {
    tmp.write("frame.json", R"({"hypotheses":["E","F"],"empty":[]})");
    tmp.write("s.json", R"({"source":"S","masses":[{"element":"E","value":1.0}]})");
    tmp.write("net.json", R"({"nodes":[{"name":"M","states":["E","F"],"parents":[],
                              "cpt":[[0.5,0.5]]}]})");
    const auto cfg = tmp.write("pipeline.json", R"({
      "frame_file": "frame.json",
      "stages": [{"s1": "s.json", "s2": "s.json"}],
      "bn": {"file": "net.json", "input_node": "M", "binding": "psychic"}
    })");
    CHECK_THROWS_AS(io::load_pipeline_config(cfg.string()), ValidationError);
  }
}
