#include "fcig/power_aut.hpp"

#include <algorithm>
#include <numeric>

#include "fcig/errors.hpp"

namespace fcig {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

// residue mod p of a torsion label on an infinite component (p odd)
u64 torsion_residue(const UnitLabel& label, u64 p) {
  return std::visit(Overloaded{
                        [](IdentityUnit) -> u64 { return 1; },
                        [p](InversionUnit) -> u64 { return p - 1; },
                        [p](TeichmullerUnit t) -> u64 { return t.t0 % p; },
                        [](const UnitResidue&) -> u64 {
                          throw InvalidSpec("residue label on an infinite-exponent component");
                        },
                    },
                    label);
}

u64 prime_order(const PowerAutSpec& phi, const DedekindSpec& d, u64 p) {
  const auto* c = d.component(p);
  if (!c) return 1;  // Q8-only 2-part, acted on trivially
  return component_order(label_for(phi, d, p), *c);
}

}  // namespace

std::string to_string(const UnitLabel& label) {
  return std::visit(Overloaded{
                        [](IdentityUnit) -> std::string { return "identity"; },
                        [](InversionUnit) -> std::string { return "inversion"; },
                        [](TeichmullerUnit t) { return "teichmuller:" + std::to_string(t.t0); },
                        [](const UnitResidue& u) { return std::to_string(u.value); },
                    },
                    label);
}

std::vector<std::string> validate_phi(const PowerAutSpec& phi, const DedekindSpec& d) {
  std::vector<std::string> out;
  for (const auto& [p, c] : d.components)
    if (!phi.per_prime.contains(p)) out.push_back("missing unit label for prime " + std::to_string(p));
  for (const auto& [p, label] : phi.per_prime) {
    const std::string tag = "label for prime " + std::to_string(p) + ": ";
    const auto* c = d.component(p);
    if (!c) {
      if (p == 2 && d.has_q8) {
        if (!std::holds_alternative<IdentityUnit>(label)) out.push_back(tag + "action on Q8 is fixed to the identity");
      } else {
        out.push_back(tag + "prime not in D");
      }
      continue;
    }
    std::visit(Overloaded{
                   [](IdentityUnit) {},
                   [](InversionUnit) {},
                   [&](TeichmullerUnit t) {
                     if (p == 2) out.push_back(tag + "Teichmuller labels need an odd prime");
                     else if (t.t0 % p == 0) out.push_back(tag + "Teichmuller residue is not a unit");
                   },
                   [&](const UnitResidue& u) {
                     if (!c->is_finite()) {
                       out.push_back(tag + "infinite-exponent component needs a torsion label");
                     } else if (u.p != p || u.modulus_exponent != c->cyclic_exponents.front()) {
                       out.push_back(tag + "unit must be given modulo exp(D_p)");
                     } else if (u.value % p == 0) {
                       out.push_back(tag + "not a unit");
                     }
                   },
               },
               label);
  }
  if (d.tail && !phi.tail_rule_least_order_m) out.push_back("tail primes have no unit rule");
  if (!d.tail && phi.tail_rule_least_order_m) out.push_back("tail unit rule given but D has no tail");
  return out;
}

u64 unit_at_depth(const UnitLabel& label, u64 p, int depth) {
  const u64 mod = ipow(p, depth);
  return std::visit(Overloaded{
                        [&](IdentityUnit) -> u64 { return 1 % mod; },
                        [&](InversionUnit) -> u64 { return mod - 1; },
                        [&](TeichmullerUnit t) -> u64 { return teichmuller_lift(t.t0, p, depth).value; },
                        [&](const UnitResidue& u) -> u64 { return u.reduce(depth).value; },
                    },
                    label);
}

u64 component_order(const UnitLabel& label, const AbelianPComponent& c) {
  if (c.is_finite()) {
    const int e1 = c.cyclic_exponents.front();
    return unit_order(UnitResidue{c.p, e1, unit_at_depth(label, c.p, e1)});
  }
  if (std::holds_alternative<IdentityUnit>(label)) return 1;
  if (std::holds_alternative<InversionUnit>(label)) return 2;
  if (c.p == 2) throw InvalidSpec("infinite 2-component admits only identity or inversion");
  return multiplicative_order(torsion_residue(label, c.p), c.p, c.p - 1);
}

UnitLabel label_for(const PowerAutSpec& phi, const DedekindSpec& d, u64 p) {
  if (auto it = phi.per_prime.find(p); it != phi.per_prime.end()) return it->second;
  if (p == 2 && d.has_q8 && !d.component(2)) return IdentityUnit{};
  throw InvalidSpec("no unit label for prime " + std::to_string(p));
}

u64 phi_order(const PowerAutSpec& phi, const DedekindSpec& d) {
  u64 m = 1;
  for (const auto& [p, c] : d.components) m = std::lcm(m, component_order(label_for(phi, d, p), c));
  if (d.tail) m = std::lcm(m, d.tail->m);
  return m;
}

PrimeSets pi0_pi1(const PowerAutSpec& phi, const DedekindSpec& d, u64 m) {
  // tail primes have order m and are 1 mod m
  if (d.tail && d.tail->m != m) throw InvalidSpec("tail rule order differs from m");
  PrimeSets s;
  for (u64 p : d.explicit_primes()) {
    const u64 o = prime_order(phi, d, p);
    if (o < m) s.pi0.push_back(p);
    else if (o == m && p > 2 && p % m != 1) s.pi1.push_back(p);
  }
  return s;
}

bool finiteness_check(const PowerAutSpec& phi, const DedekindSpec& d) {
  const u64 m = phi_order(phi, d);
  if (m < 2) throw InvalidArgument("finiteness_check: φ must have order > 1");
  if (d.tail && d.tail->m != m) return false;  // infinitely many tail primes in π₀
  const PrimeSets s = pi0_pi1(phi, d, m);
  auto finite = [&](u64 p) { return d.sylow_order(p).is_finite(); };
  return std::all_of(s.pi0.begin(), s.pi0.end(), finite) && std::all_of(s.pi1.begin(), s.pi1.end(), finite);
}

Cardinal M_value(const DedekindSpec& d) {
  const Cardinal d2 = d.sylow_order(2);
  if (d2.is_finite()) return d2;
  return ipow(2, d.rank_2());
}

u64 omega1_d2_order(const DedekindSpec& d) {
  // Ω₁(Q8) = {±1}
  u64 r = d.has_q8 ? 2 : 1;
  if (const auto* c = d.component(2)) r *= ipow(2, c->rank());
  return r;
}

Cardinal centralizer_bound(const PowerAutSpec& phi, const DedekindSpec& d) {
  if (!finiteness_check(phi, d)) return Cardinal::infinite();
  const PrimeSets s = pi0_pi1(phi, d, phi_order(phi, d));
  Cardinal bound = M_value(d);
  for (u64 p : s.pi0) bound *= d.sylow_order(p);
  for (u64 p : s.pi1) bound *= d.sylow_order(p);
  return bound;
}

std::vector<CentralizerFactor> centralizer_factors(const PowerAutSpec& phi, const DedekindSpec& d, u64 k) {
  const u64 m = phi_order(phi, d);
  if (k < 1 || k >= m) throw InvalidArgument("centralizer: k must lie in 1..m-1");
  std::vector<CentralizerFactor> out;
  for (u64 p : d.explicit_primes()) {
    Cardinal factor = (p == 2 && d.has_q8) ? 8 : 1;
    if (const auto* c = d.component(p)) {
      const UnitLabel label = label_for(phi, d, p);
      if (c->is_finite()) {
        const int e1 = c->cyclic_exponents.front();
        factor *= fixed_subgroup_order(c->truncate(1), UnitResidue{p, e1, unit_at_depth(label, p, e1)}, k);
      } else if (p != 2) {
        factor *= powmod(torsion_residue(label, p), k, p) == 1 ? Cardinal::infinite() : Cardinal(1);
      } else if (std::holds_alternative<InversionUnit>(label) && k % 2 == 1) {
        factor *= ipow(2, c->rank());  // inversion fixes exactly Ω₁
      } else {
        factor = Cardinal::infinite();
      }
    }
    out.push_back({p, factor});
  }
  if (d.tail) out.push_back({0, k % d.tail->m == 0 ? Cardinal::infinite() : Cardinal(1)});
  return out;
}

Cardinal symbolic_centralizer_order(const PowerAutSpec& phi, const DedekindSpec& d, u64 k) {
  Cardinal total = 1;
  for (const auto& f : centralizer_factors(phi, d, k)) total *= f.order;
  return total;
}

TruncatedPowerAut::TruncatedPowerAut(const PowerAutSpec& phi, const DedekindInstance& inst) : inst_(&inst) {
  const DedekindSpec& d = inst.spec();
  for (const auto& part : inst.parts()) {
    const u64 p = part.group.p;
    const int e = part.group.max_exponent();
    u64 u;
    if (part.from_tail) {
      if (!phi.tail_rule_least_order_m) throw InvalidSpec("tail prime " + std::to_string(p) + " has no unit rule");
      u = least_unit_of_order(d.tail->m, p);
    } else {
      u = unit_at_depth(label_for(phi, d, p), p, e);
    }
    const UnitResidue unit{p, e, u};
    units_.emplace(p, unit);
    order_ = std::lcm(order_, unit_order(unit));
    for (std::size_t i = 0; i < part.group.exponents.size(); ++i) multipliers_.push_back(u % part.group.summand_modulus(i));
  }
}

std::size_t TruncatedPowerAut::apply_power(std::size_t x, u64 k) const {
  const std::size_t qr = inst_->has_q8() ? 8 : 1;
  const std::size_t q = x % qr;
  x /= qr;
  std::size_t r = 0, scale = 1;
  for (std::size_t s = 0; s < multipliers_.size(); ++s) {
    const u64 mod = inst_->summand_modulus(s);
    const u64 mult = k == 1 ? multipliers_[s] : powmod(multipliers_[s], k, mod);
    r += mulmod(x % mod, mult, mod) * scale;
    x /= mod;
    scale *= mod;
  }
  return r * qr + q;
}

std::size_t TruncatedPowerAut::apply(std::size_t x) const { return apply_power(x, 1); }

DedekindElement apply(const PowerAutSpec& phi, const DedekindElement& x, const DedekindInstance& inst) {
  for (const auto& [p, v] : x.parts) {
    const auto* part = inst.part(p);
    if (part && !part->from_tail) (void)label_for(phi, inst.spec(), p);
  }
  const TruncatedPowerAut t(phi, inst);
  return inst.decode(t.apply(inst.encode(x)));
}

}  // namespace fcig
