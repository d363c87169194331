#include "fcig/spec_io.hpp"

#include <algorithm>
#include <fstream>

#include "fcig/errors.hpp"

namespace fcig {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw SpecParseError(where + ": " + what);
}

const Json& require(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) fail(where, std::string("missing key \"") + key + "\"");
  return obj.at(key);
}

u64 as_u64(const Json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) fail(where, "expected a non-negative integer");
  return v.get<u64>();
}

int as_int(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) fail(where, "expected an integer");
  return v.get<int>();
}

UnitLabel parse_unit(const Json& v, u64 p, const DedekindSpec& d, const std::string& where) {
  if (v.is_number_integer()) {
    const long long raw = v.get<long long>();
    if (raw <= 0) fail(where, "unit must be a positive integer");
    const auto* c = d.component(p);
    const int e = (c && c->is_finite() && !c->cyclic_exponents.empty()) ? c->cyclic_exponents.front() : 1;
    u64 mod = 0;
    try {
      mod = ipow(p, e);
    } catch (const InvalidArgument&) {
      fail(where, "modulus too large");
    }
    return UnitResidue{p, e, static_cast<u64>(raw) % mod};
  }
  if (!v.is_string()) fail(where, "unit must be an integer or a string");
  const std::string s = v.get<std::string>();
  if (s == "identity") return IdentityUnit{};
  if (s == "inversion") return InversionUnit{};
  const std::string prefix = "teichmuller:";
  if (s.rfind(prefix, 0) == 0) {
    const std::string digits = s.substr(prefix.size());
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) fail(where, "bad Teichmuller residue");
    return TeichmullerUnit{std::stoull(digits)};
  }
  fail(where, "unknown unit label \"" + s + "\"");
}

FiberElement parse_fiber(const Json& v, const std::string& where) {
  FiberElement n;
  if (v.is_string()) {
    if (v.get<std::string>() != "identity") fail(where, "element must be \"identity\" or an object");
    return n;
  }
  if (!v.is_object()) fail(where, "element must be \"identity\" or an object");
  if (v.contains("q8")) {
    try {
      n.q8 = Q8Element::parse(v.at("q8").get<std::string>());
    } catch (const std::exception&) {
      fail(where + ".q8", "expected one of 1,-1,i,-i,j,-j,k,-k");
    }
  }
  if (v.contains("parts")) {
    const Json& parts = v.at("parts");
    if (!parts.is_array()) fail(where + ".parts", "expected an array");
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const std::string w = where + ".parts[" + std::to_string(i) + "]";
      const u64 p = as_u64(require(parts[i], "p", w), w + ".p");
      FiberElement::Part part;
      if (parts[i].contains("cyclic")) {
        const Json& cyc = parts[i].at("cyclic");
        if (!cyc.is_array()) fail(w + ".cyclic", "expected an array");
        for (const auto& c : cyc) part.cyclic.push_back(as_u64(c, w + ".cyclic"));
      }
      if (parts[i].contains("quasicyclic")) {
        const Json& qc = parts[i].at("quasicyclic");
        if (!qc.is_array()) fail(w + ".quasicyclic", "expected an array");
        for (const auto& f : qc) {
          if (!f.is_array() || f.size() != 2) fail(w + ".quasicyclic", "expected [numerator, denominator_exponent]");
          part.quasicyclic.emplace_back(as_u64(f[0], w + ".quasicyclic"), as_int(f[1], w + ".quasicyclic"));
        }
      }
      if (!n.parts.emplace(p, std::move(part)).second) fail(w, "duplicate prime");
    }
  }
  return n;
}

}  // namespace

FciGroupSpec parse_spec(const Json& doc) {
  if (!doc.is_object()) fail("spec", "top level must be an object");
  FciGroupSpec spec;

  const Json& dj = require(doc, "dedekind", "spec");
  DedekindSpec& d = spec.dedekind;
  if (dj.contains("has_q8")) {
    if (!dj.at("has_q8").is_boolean()) fail("dedekind.has_q8", "expected a boolean");
    d.has_q8 = dj.at("has_q8").get<bool>();
  }
  if (dj.contains("components")) {
    const Json& comps = dj.at("components");
    if (!comps.is_array()) fail("dedekind.components", "expected an array");
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const std::string w = "dedekind.components[" + std::to_string(i) + "]";
      AbelianPComponent c;
      c.p = as_u64(require(comps[i], "p", w), w + ".p");
      if (comps[i].contains("cyclic")) {
        const Json& cyc = comps[i].at("cyclic");
        if (!cyc.is_array()) fail(w + ".cyclic", "expected an array");
        for (const auto& e : cyc) c.cyclic_exponents.push_back(as_int(e, w + ".cyclic"));
      }
      if (comps[i].contains("quasicyclic")) c.quasicyclic_count = as_int(comps[i].at("quasicyclic"), w + ".quasicyclic");
      if (!d.components.emplace(c.p, std::move(c)).second) fail(w, "duplicate component prime");
    }
  }
  if (dj.contains("tail") && !dj.at("tail").is_null()) {
    const Json& t = dj.at("tail");
    d.tail = TailRule{as_u64(require(t, "m", "dedekind.tail"), "dedekind.tail.m"),
                      as_u64(require(t, "min_prime", "dedekind.tail"), "dedekind.tail.min_prime")};
  }

  const Json& pj = require(doc, "phi", "spec");
  if (pj.contains("per_prime")) {
    const Json& pp = pj.at("per_prime");
    if (!pp.is_array()) fail("phi.per_prime", "expected an array");
    for (std::size_t i = 0; i < pp.size(); ++i) {
      const std::string w = "phi.per_prime[" + std::to_string(i) + "]";
      const u64 p = as_u64(require(pp[i], "p", w), w + ".p");
      UnitLabel label = parse_unit(require(pp[i], "unit", w), p, d, w + ".unit");
      if (!spec.phi.per_prime.emplace(p, std::move(label)).second) fail(w, "duplicate prime");
    }
  }
  if (pj.contains("tail_rule") && !pj.at("tail_rule").is_null()) {
    if (pj.at("tail_rule") != "least_order_m") fail("phi.tail_rule", "only \"least_order_m\" is supported");
    spec.phi.tail_rule_least_order_m = true;
  }

  const Json& ej = require(doc, "extension", "spec");
  const u64 m = as_u64(require(ej, "m", "extension"), "extension.m");
  if (m < 1) fail("extension.m", "must be >= 1");
  spec.m = m;
  if (ej.contains("n")) spec.n = parse_fiber(ej.at("n"), "extension.n");
  return spec;
}

FciGroupSpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SpecParseError("cannot open " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SpecParseError(path.string() + ": " + e.what());
  }
  return parse_spec(doc);
}

Json to_json(const FciGroupSpec& spec) {
  Json d;
  d["has_q8"] = spec.dedekind.has_q8;
  d["components"] = Json::array();
  for (const auto& [p, c] : spec.dedekind.components)
    d["components"].push_back({{"p", p}, {"cyclic", c.cyclic_exponents}, {"quasicyclic", c.quasicyclic_count}});
  if (spec.dedekind.tail) d["tail"] = {{"m", spec.dedekind.tail->m}, {"min_prime", spec.dedekind.tail->min_prime}};

  Json phi;
  phi["per_prime"] = Json::array();
  for (const auto& [p, label] : spec.phi.per_prime) {
    Json unit;
    if (const auto* u = std::get_if<UnitResidue>(&label)) unit = u->value;
    else unit = to_string(label);
    phi["per_prime"].push_back({{"p", p}, {"unit", unit}});
  }
  if (spec.phi.tail_rule_least_order_m) phi["tail_rule"] = "least_order_m";

  Json n;
  if (spec.n.is_identity() && spec.n.parts.empty()) {
    n = "identity";
  } else {
    n["q8"] = std::string(spec.n.q8.name());
    n["parts"] = Json::array();
    for (const auto& [p, part] : spec.n.parts) {
      Json qc = Json::array();
      for (auto [num, s] : part.quasicyclic) qc.push_back({num, s});
      n["parts"].push_back({{"p", p}, {"cyclic", part.cyclic}, {"quasicyclic", qc}});
    }
  }
  Json doc;
  doc["dedekind"] = d;
  doc["phi"] = phi;
  doc["extension"] = {{"m", spec.m}, {"n", n}};
  return doc;
}

Json to_json(const Cardinal& c) {
  if (c.is_infinite()) return "infinite";
  return c.value();
}

Json to_json(const Classification& c) {
  Json j;
  j["classification"] = to_string(c.kind);
  if (c.certificate) {
    const Certificate& cert = *c.certificate;
    j["certificate"] = {{"m", cert.m},       {"pi0", cert.pi0},           {"pi1", cert.pi1},
                        {"M", to_json(cert.M)}, {"bound", to_json(cert.bound)}, {"omega1_D2", cert.omega1_d2}};
  }
  if (!c.reason.empty()) j["reason"] = c.reason;
  return j;
}

Json to_json(const TruncationParams& p) { return {{"depth", p.quasicyclic_depth}, {"tail_count", p.tail_count}}; }

Json to_json(const TruncationEvidence& ev) {
  Json j;
  j["params"] = to_json(ev.params);
  if (!ev.built) {
    j["skipped"] = ev.skipped_reason;
    return j;
  }
  j["group_order"] = ev.group_order;
  j["d_order"] = ev.d_order;
  j["faithful"] = ev.faithful;
  j["truncated_phi_order"] = ev.truncated_phi_order;
  j["dedekind_truncation"] = ev.bci.dedekind;
  j["empirical_max_centralizer"] = ev.bci.max_centralizer_order;
  j["empirical_max_index"] = ev.bci.max_index;
  j["kernel_set_is_D"] = ev.kernel_set_is_d;
  j["quotient_cyclic_of_order_m"] = ev.quotient_cyclic_of_order_m;
  j["metabelian"] = ev.metabelian;
  j["g_power_is_n"] = ev.g_power_is_fiber;
  return j;
}

std::vector<std::filesystem::path> bundled_spec_files(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") out.push_back(entry.path());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fcig
