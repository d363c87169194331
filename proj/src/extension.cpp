#include "fcig/extension.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fcig/errors.hpp"

namespace fcig {

bool FiberElement::is_identity() const {
  if (q8 != Q8Element::one()) return false;
  for (const auto& [p, part] : parts) {
    for (u64 c : part.cyclic)
      if (c != 0) return false;
    for (auto [num, s] : part.quasicyclic)
      if (num % ipow(p, s) != 0) return false;
  }
  return true;
}

int FiberElement::required_depth() const {
  int depth = 1;
  for (const auto& [p, part] : parts)
    for (auto [num, s] : part.quasicyclic) depth = std::max(depth, s);
  return depth;
}

std::vector<std::string> FiberElement::violations(const DedekindSpec& d) const {
  std::vector<std::string> out;
  if (!d.has_q8 && q8 != Q8Element::one()) out.push_back("n: Q8 part given but D has no Q8 factor");
  for (const auto& [p, part] : parts) {
    const std::string tag = "n: part " + std::to_string(p) + ": ";
    const auto* c = d.component(p);
    if (!c) {
      out.push_back(tag + "prime is not an explicit component of D");
      continue;
    }
    if (part.cyclic.size() != c->cyclic_exponents.size())
      out.push_back(tag + "cyclic coordinate count does not match the component");
    else
      for (std::size_t i = 0; i < part.cyclic.size(); ++i)
        if (part.cyclic[i] >= ipow(p, c->cyclic_exponents[i])) out.push_back(tag + "cyclic coordinate out of range");
    if (part.quasicyclic.size() != static_cast<std::size_t>(c->quasicyclic_count))
      out.push_back(tag + "quasicyclic coordinate count does not match the component");
    for (auto [num, s] : part.quasicyclic)
      if (s < 0 || s > 30) out.push_back(tag + "quasicyclic denominator exponent out of range");
  }
  return out;
}

DedekindElement FiberElement::in(const DedekindInstance& inst) const {
  const int depth = inst.params().quasicyclic_depth;
  if (depth < required_depth()) throw InvalidArgument("truncation too shallow to contain n");
  DedekindElement x = inst.identity();
  x.q8 = q8;
  for (const auto& [p, part] : parts) {
    const auto* tp = inst.part(p);
    if (!tp || tp->from_tail) throw InvalidArgument("n: prime " + std::to_string(p) + " missing from truncation");
    AbelianPVector v = AbelianPVector::zero(tp->group);
    std::size_t ci = 0, qi = 0;
    for (std::size_t s = 0; s < v.coords.size(); ++s) {
      if (!tp->quasicyclic[s]) {
        if (ci < part.cyclic.size()) v.coords[s] = part.cyclic[ci];
        ++ci;
      } else if (qi < part.quasicyclic.size()) {
        const auto [num, den] = part.quasicyclic[qi++];
        v.coords[s] = (num % ipow(p, den)) * ipow(p, depth - den);
      }
    }
    x.parts[p] = std::move(v);
  }
  return x;
}

std::vector<std::string> validate_extension(const FciGroupSpec& spec) {
  const DedekindSpec& d = spec.dedekind;
  std::vector<std::string> out = validate_spec(d);
  if (!out.empty()) return out;
  out = validate_phi(spec.phi, d);
  if (!out.empty()) return out;

  if (spec.m < 1) out.push_back("m must be >= 1");
  const u64 order = phi_order(spec.phi, d);
  if (spec.m > 1 && spec.m != order)
    out.push_back("declared m = " + std::to_string(spec.m) + " differs from the order of φ (" +
                  std::to_string(order) + ")");
  if (spec.m == 1 && order != 1) out.push_back("m = 1 requires the identity automorphism");
  if (spec.m > 1 && d.tail && d.tail->m != spec.m) out.push_back("tail rule order differs from m");

  auto nv = spec.n.violations(d);
  if (!nv.empty()) {
    out.insert(out.end(), nv.begin(), nv.end());
    return out;
  }
  if (!spec.n.q8.is_central()) out.push_back("n not central");
  if (!spec.n.is_identity()) {
    const DedekindInstance inst(d, {spec.n.required_depth(), 0});
    const DedekindElement n = spec.n.in(inst);
    if (!(inst.encode(apply(spec.phi, n, inst)) == inst.encode(n))) out.push_back("n not fixed by φ");
  }
  return out;
}

std::string to_string(Classification::Kind kind) {
  switch (kind) {
    case Classification::Kind::Dedekind: return "dedekind";
    case Classification::Kind::Fci: return "fci";
    case Classification::Kind::NotFci: return "not_fci";
    case Classification::Kind::Rejected: return "rejected";
  }
  return "rejected";
}

Classification classify(const FciGroupSpec& spec) {
  if (auto v = validate_extension(spec); !v.empty()) throw InvalidSpec("invalid extension spec: " + v.front());
  const DedekindSpec& d = spec.dedekind;
  Classification c;
  if (!d.is_infinite()) {
    c.kind = Classification::Kind::Rejected;
    c.reason = "D finite: theorem governs infinite groups";
    return c;
  }
  if (spec.m == 1) {
    c.kind = Classification::Kind::Dedekind;
    return c;
  }
  c.kind = Classification::Kind::NotFci;
  if (d.sylow_order(2).is_infinite()) {
    const bool inversion = std::holds_alternative<InversionUnit>(label_for(spec.phi, d, 2));
    if (!inversion || spec.m != 2) {
      c.reason = "infinite D_2 requires φ_2 = inversion and m = 2";
      return c;
    }
  }
  const PrimeSets s = pi0_pi1(spec.phi, d, spec.m);
  for (const auto* set : {&s.pi0, &s.pi1})
    for (u64 p : *set)
      if (d.sylow_order(p).is_infinite()) {
        c.reason = "D_" + std::to_string(p) + " is infinite for a prime in π₀ ∪ π₁";
        return c;
      }
  if (!finiteness_check(spec.phi, d)) throw InternalError("classify: finiteness check disagrees with prime scan");

  Certificate cert;
  cert.m = spec.m;
  cert.pi0 = s.pi0;
  cert.pi1 = s.pi1;
  cert.M = M_value(d);
  cert.bound = Cardinal(spec.m) * centralizer_bound(spec.phi, d);
  cert.omega1_d2 = omega1_d2_order(d);
  c.kind = Classification::Kind::Fci;
  c.certificate = std::move(cert);
  return c;
}

Cardinal global_bound(const FciGroupSpec& spec) {
  const Classification c = classify(spec);
  if (c.kind != Classification::Kind::Fci) throw InvalidArgument("global_bound: spec is not an FCI case");
  return c.certificate->bound;
}

ExtensionTruncation::ExtensionTruncation(const FciGroupSpec& spec, TruncationParams params, std::size_t cap)
    : inst_([&] {
        if (auto v = validate_extension(spec); !v.empty()) throw InvalidSpec("invalid extension spec: " + v.front());
        return DedekindInstance(spec.dedekind, params);
      }()),
      phi_(spec.phi, inst_),
      m_(spec.m),
      d_order_(inst_.order()),
      cap_(cap) {
  if (d_order_ > cap / m_)
    throw ResourceLimit("extension truncation: order " + std::to_string(m_) + " * " + std::to_string(d_order_) +
                        " exceeds cap " + std::to_string(cap));
  fiber_ = inst_.encode(spec.n.in(inst_));
  phi_table_.resize(m_ * d_order_);
  for (std::size_t d = 0; d < d_order_; ++d) phi_table_[d] = d;
  for (u64 j = 1; j < m_; ++j)
    for (std::size_t d = 0; d < d_order_; ++d) phi_table_[j * d_order_ + d] = phi_.apply(phi_table_[(j - 1) * d_order_ + d]);
}

std::size_t ExtensionTruncation::encode(const ExtensionElement& x) const {
  if (x.i >= m_) throw InvalidArgument("ExtensionElement: i out of range");
  return x.i * d_order_ + inst_.encode(x.d);
}

ExtensionElement ExtensionTruncation::decode(std::size_t index) const {
  if (index >= order()) throw InvalidArgument("ExtensionTruncation::decode: index out of range");
  return {index / d_order_, inst_.decode(index % d_order_)};
}

std::size_t ExtensionTruncation::multiply(std::size_t x, std::size_t y) const {
  const u64 i = x / d_order_, j = y / d_order_;
  const std::size_t d = x % d_order_, e = y % d_order_;
  const u64 sum = i + j;
  std::size_t left = phi_pow(j, d);
  if (sum >= m_) left = inst_.multiply(fiber_, left);
  return (sum % m_) * d_order_ + inst_.multiply(left, e);
}

ExtensionElement ExtensionTruncation::multiply(const ExtensionElement& x, const ExtensionElement& y) const {
  return decode(multiply(encode(x), encode(y)));
}

std::size_t ExtensionTruncation::inverse(std::size_t x) const {
  const u64 i = x / d_order_;
  const std::size_t d = x % d_order_;
  const u64 j = (m_ - i) % m_;
  std::size_t left = phi_pow(j, d);
  if (i + j >= m_) left = inst_.multiply(fiber_, left);
  return j * d_order_ + inst_.inverse(left);
}

CayleyGroup ExtensionTruncation::to_cayley() const {
  return CayleyGroup::from_function(order(), [this](std::size_t a, std::size_t b) { return multiply(a, b); }, {}, cap_);
}

CayleyGroup truncate_group(const FciGroupSpec& spec, TruncationParams params, std::size_t cap) {
  return ExtensionTruncation(spec, params, cap).to_cayley();
}

BciProfile empirical_bci(const CayleyGroup& g) {
  BciProfile r;
  for (CayleyGroup::Index x = 0; x < g.order(); ++x) {
    if (is_normal_cyclic(g, x)) continue;
    ++r.non_normal_count;
    const std::size_t c = centralizer(g, x).size();
    const std::size_t idx = c / element_order(g, x);
    if (c > r.max_centralizer_order) {
      r.max_centralizer_order = c;
      r.witness_centralizer = x;
    }
    if (idx > r.max_index) {
      r.max_index = idx;
      r.witness_index = x;
    }
  }
  r.dedekind = r.non_normal_count == 0;
  return r;
}

TruncationEvidence inspect_truncation(const FciGroupSpec& spec, TruncationParams params, std::size_t cap) {
  TruncationEvidence ev;
  ev.params = params;
  std::optional<ExtensionTruncation> t;
  try {
    t.emplace(spec, params, cap);
  } catch (const ResourceLimit& e) {
    ev.skipped_reason = e.what();
    return ev;
  }
  const CayleyGroup g = t->to_cayley();
  ev.built = true;
  ev.group_order = g.order();
  ev.d_order = t->d_order();
  ev.faithful = t->faithful();
  ev.truncated_phi_order = t->truncated_phi_order();
  ev.bci = empirical_bci(g);

  SubgroupHandle d;
  d.elements.resize(t->d_order());
  std::iota(d.elements.begin(), d.elements.end(), CayleyGroup::Index{0});
  const KernelSet k = kernel_set(g);
  ev.kernel_set_is_d = k.elements == d.elements;
  ev.kernel_set_is_subgroup = k.is_subgroup;
  const Quotient q = quotient(g, d);
  ev.quotient_cyclic_of_order_m = q.group.order() == spec.m && is_cyclic(q.group);
  ev.metabelian = is_metabelian(g);
  ev.d_elements_normal = std::all_of(d.elements.begin(), d.elements.end(),
                                     [&](CayleyGroup::Index x) { return is_normal_cyclic(g, x); });
  // g = (1, 1) when m > 1; its m-th power should be (0, n)
  if (spec.m > 1) {
    CayleyGroup::Index gen = static_cast<CayleyGroup::Index>(t->d_order()), p = 0;
    for (u64 i = 0; i < spec.m; ++i) p = g.mul(p, gen);
    ev.g_power_is_fiber = p == t->fiber();
  } else {
    ev.g_power_is_fiber = true;
  }
  return ev;
}

std::vector<TruncationParams> truncation_grid(const FciGroupSpec& spec, const std::vector<int>& depths,
                                              const std::vector<std::size_t>& tail_counts) {
  const DedekindSpec& d = spec.dedekind;
  const bool has_qc = std::any_of(d.components.begin(), d.components.end(),
                                  [](const auto& kv) { return kv.second.quasicyclic_count > 0; });
  std::set<int> ds;
  for (int j : depths)
    if (j >= spec.n.required_depth()) ds.insert(has_qc ? j : 1);
  std::set<std::size_t> ts;
  for (std::size_t k : tail_counts) ts.insert(d.tail ? k : 0);
  std::vector<TruncationParams> out;
  for (int j : ds)
    for (std::size_t k : ts) out.push_back({j, k});
  return out;
}

}  // namespace fcig
