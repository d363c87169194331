#include "fcig/verify.hpp"

#include <optional>

#include "fcig/catalog.hpp"
#include "fcig/errors.hpp"

namespace fcig {

namespace {

Json evidence_row(const std::string& name, const TruncationEvidence& ev) {
  Json j = to_json(ev);
  j["spec"] = name;
  return j;
}

int max_exponent_for(u64 p, u64 max_order) {
  int e = 0;
  for (u64 q = p; q <= max_order; q *= p) ++e;
  return e;
}

// Literal scan of A for one unit power s = t^k: number of fixed elements and
// whether Ω₁(A) is pointwise fixed.
struct FixedScan {
  u64 fixed = 0;
  bool omega1_fixed = true;
};

FixedScan scan_fixed(const FiniteAbelianP& a, u64 s) {
  const std::size_t r = a.exponents.size();
  std::vector<u64> mods(r);
  for (std::size_t i = 0; i < r; ++i) mods[i] = a.summand_modulus(i);
  std::vector<u64> digit(r, 0);
  FixedScan out;
  const u64 n = a.order();
  for (u64 idx = 0; idx < n; ++idx) {
    bool fixed = true, in_omega = true;
    for (std::size_t i = 0; i < r; ++i) {
      const u64 c = digit[i];
      if (mulmod(c, s, mods[i]) != c) fixed = false;
      if (mulmod(c, a.p, mods[i]) != 0) in_omega = false;
    }
    if (fixed) ++out.fixed;
    if (in_omega && !fixed) out.omega1_fixed = false;
    for (std::size_t i = 0; i < r; ++i) {
      if (++digit[i] < mods[i]) break;
      digit[i] = 0;
    }
  }
  return out;
}

std::string group_name(const FiniteAbelianP& a) {
  std::string s;
  for (int e : a.exponents) {
    if (!s.empty()) s += "x";
    s += "C" + std::to_string(ipow(a.p, e));
  }
  return s;
}

}  // namespace

SuiteResult verify_fixed_points(const FixedPointOptions& opts) {
  auto targets = opts.prime_max_orders;
  if (targets.empty()) targets = {{2, 1024}, {3, 729}, {5, 625}, {7, 2401}};
  SuiteResult res{"lemma32", true, Json::object()};
  std::size_t groups = 0, units = 0, checks = 0;
  Json failures = Json::array();
  auto fail = [&](Json f) {
    res.pass = false;
    if (failures.size() < 20) failures.push_back(std::move(f));
  };
  for (auto [p, max_order] : targets) {
    if (!is_prime(p)) throw InvalidArgument("fixed-point suite: p must be prime");
    for (const FiniteAbelianP& a : abelian_p_groups(p, max_exponent_for(p, max_order))) {
      ++groups;
      const int e1 = a.max_exponent();
      const u64 mod = a.exponent();
      // one scan per residue s = t^k
      std::vector<std::optional<FixedScan>> scans(mod);
      for (u64 t = 1; t < mod; ++t) {
        if (t % p == 0) continue;
        const UnitResidue unit{p, e1, t};
        const u64 m = unit_order(unit);
        if (m == 1) continue;
        ++units;
        const bool case_i = p > 2 && (p - 1) % m == 0;
        const bool case_ii = p > 2 && (p - 1) % m != 0;
        bool some_k_fixes_omega = false;
        for (u64 k = 1; k < m; ++k) {
          ++checks;
          const u64 s = powmod(t, k, mod);
          if (!scans[s]) scans[s] = scan_fixed(a, s);
          const FixedScan& scan = *scans[s];
          const u64 formula = fixed_subgroup_order(a, unit, k);
          some_k_fixes_omega = some_k_fixes_omega || scan.omega1_fixed;
          const Json where = {{"group", group_name(a)}, {"t", t}, {"m", m}, {"k", k}};
          if (scan.fixed != formula) {
            Json f = where;
            f["brute_force"] = scan.fixed;
            f["formula"] = formula;
            fail(f);
          }
          if (case_i && scan.fixed != 1) {
            Json f = where;
            f["case"] = "i";
            fail(f);
          }
          if (p == 2 && !scan.omega1_fixed) {
            Json f = where;
            f["case"] = "iii";
            fail(f);
          }
        }
        if (case_ii && !some_k_fixes_omega)
          fail({{"group", group_name(a)}, {"t", t}, {"m", m}, {"case", "ii"}});
      }
    }
  }
  res.details = {{"groups", groups}, {"units", units}, {"checks", checks}, {"failures", failures}};
  return res;
}

SuiteResult verify_q8_power_automorphisms() {
  const Q8AutReport r = q8_automorphisms();
  SuiteResult res{"pautq8", r.aut_count == 24 && r.power_count == 4 && r.power_equals_inner, {}};
  res.details = {{"aut", r.aut_count},
                 {"paut", r.power_count},
                 {"inner", r.inner_count},
                 {"paut_equals_inner", r.power_equals_inner}};
  return res;
}

SuiteResult verify_quotient_bound(std::size_t max_order) {
  SuiteResult res{"prop22", true, {}};
  std::size_t groups = 0, pairs = 0, triples = 0, non_normal = 0;
  double worst = 0.0;
  Json failures = Json::array();
  for (const NamedGroup& ng : small_group_catalog(max_order)) {
    ++groups;
    for (const SubgroupHandle& n : normal_subgroups(ng.group)) {
      ++pairs;
      const QuotientBoundReport r = check_quotient_bound(ng.group, n);
      triples += r.checked;
      non_normal += r.checked_non_normal;
      worst = std::max(worst, r.worst_ratio);
      if (!r.holds) {
        res.pass = false;
        failures.push_back({{"group", ng.name}, {"normal_subgroup_order", n.size()}, {"x", *r.counterexample}});
      }
    }
  }
  res.details = {{"groups", groups},
                 {"group_normal_subgroup_pairs", pairs},
                 {"triples", triples},
                 {"triples_with_non_normal_x", non_normal},
                 {"quantification", "every x in G"},
                 {"worst_ratio", worst},
                 {"failures", failures}};
  return res;
}

SuiteResult verify_dihedral_centralizers(std::size_t max_order) {
  SuiteResult res{"example21", true, {}};
  std::size_t checked = 0, skipped = 0, elements = 0;
  Json failures = Json::array();
  for (const auto& moduli : abelian_group_types(max_order)) {
    const DihedralReport r = check_dihedral_centralizers(abelian_group(moduli));
    if (!r.applicable) {
      ++skipped;
      continue;
    }
    ++checked;
    elements += r.elements_checked;
    if (!r.holds) {
      res.pass = false;
      failures.push_back({{"moduli", moduli}, {"x", *r.counterexample}});
    }
  }
  res.details = {{"groups_checked", checked},
                 {"elementary_abelian_skipped", skipped},
                 {"elements_checked", elements},
                 {"failures", failures}};
  return res;
}

SpecEvidence collect_evidence(const std::string& name, const FciGroupSpec& spec, const SweepOptions& opts) {
  SpecEvidence ev{name, spec, classify(spec), {}};
  const auto kind = ev.classification.kind;
  if (kind != Classification::Kind::Fci && kind != Classification::Kind::Dedekind) return ev;
  for (const TruncationParams& p : truncation_grid(spec, opts.depths, opts.tail_counts))
    ev.truncations.push_back(inspect_truncation(spec, p, opts.cap));
  return ev;
}

std::vector<SpecEvidence> collect_evidence(const std::vector<std::filesystem::path>& files, const SweepOptions& opts) {
  std::vector<SpecEvidence> out;
  for (const auto& f : files) out.push_back(collect_evidence(f.stem().string(), load_spec(f), opts));
  return out;
}

namespace {

template <class Check>
SuiteResult spec_suite(const std::string& suite, const std::vector<SpecEvidence>& corpus, bool faithful_only,
                       Check&& check) {
  SuiteResult res{suite, true, {}};
  Json rows = Json::array();
  Json failures = Json::array();
  std::size_t specs = 0, checked = 0;
  for (const SpecEvidence& se : corpus) {
    if (se.classification.kind != Classification::Kind::Fci) continue;
    ++specs;
    for (const TruncationEvidence& ev : se.truncations) {
      if (!ev.built || (faithful_only && !ev.faithful)) continue;
      ++checked;
      Json row = evidence_row(se.name, ev);
      const bool ok = check(se, ev, row);
      row["ok"] = ok;
      if (!ok) {
        res.pass = false;
        failures.push_back(row);
      }
      rows.push_back(std::move(row));
    }
  }
  res.details = {{"fci_specs", specs}, {"truncations_checked", checked}, {"truncations", rows}, {"failures", failures}};
  return res;
}

}  // namespace

SuiteResult verify_global_bound(const std::vector<SpecEvidence>& corpus) {
  return spec_suite("thm45", corpus, true, [](const SpecEvidence& se, const TruncationEvidence& ev, Json& row) {
    const Cardinal bound = se.classification.certificate->bound;
    row["bound"] = to_json(bound);
    return Cardinal(ev.bci.max_centralizer_order) <= bound;
  });
}

SuiteResult verify_metabelian(const std::vector<SpecEvidence>& corpus) {
  return spec_suite("cor42", corpus, false,
                    [](const SpecEvidence&, const TruncationEvidence& ev, Json&) { return ev.metabelian; });
}

SuiteResult verify_kernel_set(const std::vector<SpecEvidence>& corpus) {
  return spec_suite("prop41", corpus, true, [](const SpecEvidence&, const TruncationEvidence& ev, Json&) {
    return ev.kernel_set_is_d && ev.kernel_set_is_subgroup && ev.quotient_cyclic_of_order_m;
  });
}

SuiteResult verify_bci_constant(const std::vector<SpecEvidence>& corpus) {
  SuiteResult res = spec_suite("cor46", corpus, false, [](const SpecEvidence& se, const TruncationEvidence& ev, Json& row) {
    const Cardinal bound = se.classification.certificate->bound;
    row["bci_constant"] = to_json(bound);
    return bound.is_finite() && Cardinal(ev.bci.max_centralizer_order) <= bound;
  });
  for (const SpecEvidence& se : corpus)
    if (se.classification.kind == Classification::Kind::Fci && se.classification.certificate->bound.is_infinite())
      res.pass = false;
  return res;
}

SuiteResult verify_pq_elements(std::size_t max_order) {
  SuiteResult res{"lucido", true, {}};
  Json rows = Json::array();
  std::size_t applicable = 0;
  auto check = [&](const std::string& name, const CayleyGroup& g) {
    const PqElementResult r = check_pq_element(g);
    const char* verdict = r == PqElementResult::Holds ? "holds" : r == PqElementResult::Fails ? "fails" : "not_applicable";
    if (r != PqElementResult::NotApplicable) ++applicable;
    if (r == PqElementResult::Fails) res.pass = false;
    rows.push_back({{"group", name}, {"order", g.order()}, {"result", verdict}});
  };
  for (const NamedGroup& ng : three_prime_catalog(max_order)) check(ng.name, ng.group);
  // soluble truncations of the bundled FCI specs with three primes
  for (const auto& path : bundled_spec_files()) {
    const FciGroupSpec spec = load_spec(path);
    if (classify(spec).kind != Classification::Kind::Fci) continue;
    for (const TruncationParams& p : truncation_grid(spec, {1, 2, 3}, {0, 1, 2})) {
      std::optional<ExtensionTruncation> t;
      try {
        t.emplace(spec, p, max_order);
      } catch (const ResourceLimit&) {
        continue;
      }
      if (prime_divisors(t->order()).size() < 3) continue;
      check(path.stem().string() + "@j" + std::to_string(p.quasicyclic_depth) + "t" + std::to_string(p.tail_count),
            t->to_cayley());
    }
  }
  if (applicable == 0) res.pass = false;
  res.details = {{"applicable", applicable}, {"groups", rows}};
  return res;
}

std::vector<std::filesystem::path> resolve_spec_argument(const std::string& arg) {
  if (arg.empty() || arg == "bundled/all" || arg == "bundled") return bundled_spec_files();
  const std::filesystem::path p(arg);
  if (std::filesystem::is_directory(p)) return bundled_spec_files(p);
  if (!std::filesystem::exists(p)) throw SpecParseError("no such spec file: " + arg);
  return {p};
}

std::vector<std::string> suite_names() {
  return {"lemma32", "pautq8", "prop22", "example21", "thm45", "cor42", "prop41", "cor46", "lucido"};
}

}  // namespace fcig
