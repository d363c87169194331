#include <doctest.h>

#include "fcig/errors.hpp"
#include "fcig/verify.hpp"

using namespace fcig;

namespace {

const std::filesystem::path kSpecs = FCIG_SPECS_DIR;

SpecEvidence z5_evidence() { return collect_evidence("z5inf_c4", load_spec(kSpecs / "z5inf_c4.json"), {{1, 2}, {0}}); }

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("fixed-point scan on a single prime") {
  const SuiteResult r = verify_fixed_points({{{3, 81}}});
  CHECK(r.pass);
  // partitions of 1..4
  CHECK(r.details["groups"] == 1 + 2 + 3 + 5);
  CHECK_THROWS_AS(verify_fixed_points({{{4, 64}}}), InvalidArgument);
}

TEST_CASE("evidence for the Z(5^inf) family") {
  const SpecEvidence ev = z5_evidence();
  REQUIRE(ev.truncations.size() == 2);
  for (const auto& t : ev.truncations) {
    CHECK(t.built);
    CHECK(t.faithful);
    CHECK(t.bci.max_centralizer_order == 4);
    CHECK(t.kernel_set_is_d);
  }
  CHECK(verify_global_bound({ev}).pass);
  CHECK(verify_kernel_set({ev}).pass);
  CHECK(verify_metabelian({ev}).pass);
  CHECK(verify_bci_constant({ev}).pass);
}

TEST_CASE("spec suites report violations") {
  SpecEvidence ev = z5_evidence();
  ev.truncations[1].bci.max_centralizer_order = 5;
  ev.truncations[0].metabelian = false;
  ev.truncations[0].quotient_cyclic_of_order_m = false;
  const SuiteResult thm = verify_global_bound({ev});
  CHECK_FALSE(thm.pass);
  CHECK(thm.details["failures"].size() == 1);
  CHECK_FALSE(verify_bci_constant({ev}).pass);
  CHECK_FALSE(verify_metabelian({ev}).pass);
  CHECK_FALSE(verify_kernel_set({ev}).pass);
}

TEST_CASE("unfaithful truncations are not held to the bound") {
  SpecEvidence ev = z5_evidence();
  ev.truncations[0].faithful = false;
  ev.truncations[0].bci.max_centralizer_order = 100;
  CHECK(verify_global_bound({ev}).pass);
  CHECK_FALSE(verify_bci_constant({ev}).pass);
}

TEST_CASE("skipped truncations are reported, not failed") {
  const SpecEvidence ev = collect_evidence("z5inf_c4", load_spec(kSpecs / "z5inf_c4.json"), {{1, 3}, {0}, 200});
  REQUIRE(ev.truncations.size() == 2);
  CHECK(ev.truncations[0].built);
  CHECK_FALSE(ev.truncations[1].built);
  CHECK_FALSE(ev.truncations[1].skipped_reason.empty());
  CHECK(verify_global_bound({ev}).pass);
}

TEST_CASE("spec arguments") {
  CHECK(resolve_spec_argument("bundled/all") == bundled_spec_files());
  CHECK(resolve_spec_argument((kSpecs / "z5inf_c4.json").string()).size() == 1);
  CHECK(resolve_spec_argument((kSpecs / "invalid").string()).size() >= 5);
  CHECK_THROWS_AS(resolve_spec_argument("/nonexistent/spec.json"), SpecParseError);
  CHECK(suite_names().size() == 9);
}

TEST_CASE("small-scale suites pass") {
  CHECK(verify_q8_power_automorphisms().pass);
  CHECK(verify_quotient_bound(24).pass);
  CHECK(verify_dihedral_centralizers(16).pass);
}

}
