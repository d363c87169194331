#include <doctest.h>

#include "fcig/errors.hpp"
#include "fcig/spec_io.hpp"

using namespace fcig;

namespace {

const std::filesystem::path kSpecs = FCIG_SPECS_DIR;

Json doc(const char* text) { return Json::parse(text); }

}  // namespace

TEST_SUITE("spec_io") {

TEST_CASE("parses the Z(5^inf) family") {
  const FciGroupSpec s = load_spec(kSpecs / "z5inf_c4.json");
  CHECK(s.m == 4);
  CHECK_FALSE(s.dedekind.has_q8);
  REQUIRE(s.dedekind.component(5));
  CHECK(s.dedekind.component(5)->quasicyclic_count == 1);
  CHECK(std::get<TeichmullerUnit>(s.phi.per_prime.at(5)).t0 == 2);
  CHECK(s.n.is_identity());
}

TEST_CASE("integer units are read modulo the component exponent") {
  const FciGroupSpec s = load_spec(kSpecs / "z5inf_c9.json");
  const auto& u = std::get<UnitResidue>(s.phi.per_prime.at(3));
  CHECK(u.modulus() == 9);
  CHECK(u.value == 8);
}

TEST_CASE("fiber elements and tails") {
  const FciGroupSpec f = load_spec(kSpecs / "z2inf_inv_fiber.json");
  CHECK(f.n.parts.at(2).quasicyclic == std::vector<std::pair<u64, int>>{{1, 1}});
  CHECK(f.n.required_depth() == 1);
  const FciGroupSpec t = load_spec(kSpecs / "tail_m4.json");
  REQUIRE(t.dedekind.tail);
  CHECK(t.dedekind.tail->m == 4);
  CHECK(t.dedekind.tail->min_prime == 5);
  CHECK(t.phi.tail_rule_least_order_m);
}

TEST_CASE("serialisation round-trips") {
  for (const auto& path : bundled_spec_files()) {
    const Json once = to_json(load_spec(path));
    CHECK(to_json(parse_spec(once)) == once);
  }
  CHECK(bundled_spec_files().size() >= 10);
}

TEST_CASE("schema errors") {
  CHECK_THROWS_AS(load_spec(kSpecs / "invalid" / "malformed.json"), SpecParseError);
  CHECK_THROWS_AS(load_spec(kSpecs / "invalid" / "missing_phi.json"), SpecParseError);
  CHECK_THROWS_AS(load_spec(kSpecs / "invalid" / "unknown_label.json"), SpecParseError);
  CHECK_THROWS_AS(load_spec(kSpecs / "does_not_exist.json"), SpecParseError);
  CHECK_THROWS_AS(parse_spec(doc("[]")), SpecParseError);
  CHECK_THROWS_AS(parse_spec(doc(R"({"dedekind":{"components":[{"p":"5"}]},"phi":{},"extension":{"m":1}})")),
                  SpecParseError);
  CHECK_THROWS_AS(parse_spec(doc(R"({"dedekind":{},"phi":{},"extension":{"m":0}})")), SpecParseError);
  CHECK_THROWS_AS(parse_spec(doc(R"({"dedekind":{},"phi":{},"extension":{"m":1,"n":{"q8":"l"}}})")), SpecParseError);
  CHECK_THROWS_AS(parse_spec(doc(R"({"dedekind":{},"phi":{"tail_rule":"primitive"},"extension":{"m":1}})")),
                  SpecParseError);
  CHECK_THROWS_AS(
      parse_spec(doc(R"({"dedekind":{"components":[{"p":5},{"p":5}]},"phi":{},"extension":{"m":1}})")),
      SpecParseError);
}

TEST_CASE("cross-field violations are left to the validators") {
  for (const char* name : {"q8_c4.json", "n_not_central.json", "n_not_fixed.json", "wrong_m.json"}) {
    const FciGroupSpec s = load_spec(kSpecs / "invalid" / name);
    CHECK_FALSE(validate_extension(s).empty());
  }
}

TEST_CASE("report shape") {
  const Json c = to_json(classify(load_spec(kSpecs / "z5inf_c4.json")));
  CHECK(c["classification"] == "fci");
  CHECK(c["certificate"]["m"] == 4);
  CHECK(c["certificate"]["pi0"] == Json::array());
  CHECK(c["certificate"]["pi1"] == Json::array());
  CHECK(c["certificate"]["M"] == 1);
  CHECK(c["certificate"]["bound"] == 4);
  const Json d = to_json(classify(load_spec(kSpecs / "dedekind_z5inf_c3.json")));
  CHECK(d["classification"] == "dedekind");
  CHECK_FALSE(d.contains("certificate"));
  CHECK(to_json(Cardinal::infinite()) == "infinite");
}

}
