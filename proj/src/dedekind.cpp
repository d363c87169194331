#include "fcig/dedekind.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "fcig/errors.hpp"

namespace fcig {

bool DedekindSpec::is_infinite() const {
  if (tail) return true;
  return std::any_of(components.begin(), components.end(),
                     [](const auto& kv) { return !kv.second.is_finite(); });
}

std::vector<u64> DedekindSpec::explicit_primes() const {
  std::vector<u64> out;
  if (has_q8) out.push_back(2);
  for (const auto& [p, c] : components)
    if (p != 2 || !has_q8) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

const AbelianPComponent* DedekindSpec::component(u64 p) const {
  auto it = components.find(p);
  return it == components.end() ? nullptr : &it->second;
}

Cardinal DedekindSpec::sylow_order(u64 p) const {
  Cardinal order = 1;
  if (p == 2 && has_q8) order = 8;
  if (const auto* c = component(p)) order *= c->order();
  if (tail && tail->contains(p)) order *= p;
  return order;
}

int DedekindSpec::rank_2() const {
  int r = has_q8 ? 2 : 0;
  if (const auto* c = component(2)) r += c->rank();
  return r;
}

std::vector<std::string> validate_spec(const DedekindSpec& spec) {
  std::vector<std::string> out;
  for (const auto& [p, c] : spec.components) {
    if (c.p != p) out.push_back("component keyed by " + std::to_string(p) + " has prime " + std::to_string(c.p));
    auto v = c.violations();
    out.insert(out.end(), v.begin(), v.end());
  }
  if (spec.has_q8) {
    if (const auto* c2 = spec.component(2); c2 && !c2->is_elementary())
      out.push_back("2-component not elementary abelian");
  }
  if (spec.tail) {
    const TailRule& t = *spec.tail;
    if (t.m < 2) out.push_back("tail rule: m must be >= 2");
    if (t.min_prime < 2) out.push_back("tail rule: min_prime must be >= 2");
    if (t.m >= 2)
      for (const auto& [p, c] : spec.components)
        if (t.contains(p)) out.push_back("tail rule overlaps explicit component prime " + std::to_string(p));
  }
  return out;
}

DedekindInstance::DedekindInstance(const DedekindSpec& spec, TruncationParams params)
    : spec_(spec), params_(params) {
  if (params.quasicyclic_depth < 1) throw InvalidArgument("truncation: quasicyclic depth must be >= 1");
  for (const auto& [p, c] : spec.components) {
    Part part{c.truncate(params.quasicyclic_depth), false, {}};
    part.quasicyclic.assign(c.cyclic_exponents.size(), false);
    part.quasicyclic.insert(part.quasicyclic.end(), static_cast<std::size_t>(c.quasicyclic_count), true);
    parts_.push_back(std::move(part));
  }
  if (spec.tail && params.tail_count > 0)
    for (u64 p : spec.tail->primes(params.tail_count)) parts_.push_back({FiniteAbelianP{p, {1}}, true, {false}});
  std::sort(parts_.begin(), parts_.end(), [](const Part& a, const Part& b) { return a.group.p < b.group.p; });

  order_ = q8_radix();
  for (const auto& part : parts_)
    for (std::size_t s = 0; s < part.group.exponents.size(); ++s) {
      const u64 mod = part.group.summand_modulus(s);
      if (order_ > std::numeric_limits<std::size_t>::max() / mod)
        throw ResourceLimit("truncation: order overflows");
      order_ *= mod;
      moduli_.push_back(mod);
    }
}

const DedekindInstance::Part* DedekindInstance::part(u64 p) const {
  for (const auto& part : parts_)
    if (part.group.p == p) return &part;
  return nullptr;
}

std::size_t DedekindInstance::encode(const DedekindElement& x) const {
  for (const auto& [p, v] : x.parts) {
    const Part* part = this->part(p);
    if (!part || !(v.shape == part->group) || v.coords.size() != part->group.exponents.size())
      throw InvalidArgument("DedekindInstance::encode: part " + std::to_string(p) + " does not match truncation");
  }
  if (!spec_.has_q8 && x.q8 != Q8Element::one())
    throw InvalidArgument("DedekindInstance::encode: Q8 part given for a spec without Q8");
  std::size_t index = 0, scale = 1;
  std::size_t s = 0;
  for (const auto& part : parts_) {
    auto it = x.parts.find(part.group.p);
    for (std::size_t i = 0; i < part.group.exponents.size(); ++i, ++s) {
      const u64 c = it == x.parts.end() ? 0 : it->second.coords[i];
      if (c >= moduli_[s]) throw InvalidArgument("DedekindInstance::encode: coordinate out of range");
      index += c * scale;
      scale *= moduli_[s];
    }
  }
  return index * q8_radix() + x.q8.index();
}

DedekindElement DedekindInstance::decode(std::size_t index) const {
  if (index >= order_) throw InvalidArgument("DedekindInstance::decode: index out of range");
  DedekindElement x;
  x.q8 = Q8Element(static_cast<std::uint8_t>(index % q8_radix()));
  index /= q8_radix();
  std::size_t s = 0;
  for (const auto& part : parts_) {
    AbelianPVector v = AbelianPVector::zero(part.group);
    for (auto& c : v.coords) {
      c = index % moduli_[s];
      index /= moduli_[s];
      ++s;
    }
    x.parts.emplace(part.group.p, std::move(v));
  }
  return x;
}

std::size_t DedekindInstance::multiply(std::size_t a, std::size_t b) const {
  const std::size_t qr = q8_radix();
  std::size_t q = 0;
  if (qr == 8)
    q = (Q8Element(static_cast<std::uint8_t>(a % 8)) * Q8Element(static_cast<std::uint8_t>(b % 8))).index();
  a /= qr;
  b /= qr;
  std::size_t r = 0, scale = 1;
  for (u64 mod : moduli_) {
    r += ((a % mod + b % mod) % mod) * scale;
    a /= mod;
    b /= mod;
    scale *= mod;
  }
  return r * qr + q;
}

std::size_t DedekindInstance::inverse(std::size_t a) const {
  const std::size_t qr = q8_radix();
  const std::size_t q = qr == 8 ? Q8Element(static_cast<std::uint8_t>(a % 8)).inverse().index() : 0;
  a /= qr;
  std::size_t r = 0, scale = 1;
  for (u64 mod : moduli_) {
    r += ((mod - a % mod) % mod) * scale;
    a /= mod;
    scale *= mod;
  }
  return r * qr + q;
}

DedekindElement DedekindInstance::multiply(const DedekindElement& a, const DedekindElement& b) const {
  return decode(multiply(encode(a), encode(b)));
}

std::size_t DedekindInstance::element_order(std::size_t a) const {
  const std::size_t qr = q8_radix();
  std::size_t ord = 1;
  if (qr == 8) {
    const std::uint8_t q = static_cast<std::uint8_t>(a % 8);
    ord = q == 0 ? 1 : (q == 1 ? 2 : 4);
  }
  a /= qr;
  for (u64 mod : moduli_) {
    const u64 c = a % mod;
    a /= mod;
    ord = std::lcm(ord, mod / std::gcd(c, mod));
  }
  return ord;
}

u64 DedekindInstance::exponent() const {
  u64 e = spec_.has_q8 ? 4 : 1;
  for (u64 mod : moduli_) e = std::lcm(e, mod);
  return e;
}

std::vector<std::size_t> DedekindInstance::center_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < order_; ++x)
    if (!spec_.has_q8 || x % 8 < 2) out.push_back(x);
  return out;
}

std::size_t DedekindInstance::embed_into(const DedekindInstance& deeper, std::size_t x) const {
  if (!(deeper.spec_.has_q8 == spec_.has_q8) || deeper.params_.quasicyclic_depth < params_.quasicyclic_depth ||
      deeper.params_.tail_count < params_.tail_count)
    throw InvalidArgument("embed_into: target is not a deeper truncation of the same spec");
  const DedekindElement e = decode(x);
  DedekindElement img;
  img.q8 = e.q8;
  for (const auto& [p, v] : e.parts) {
    const Part* src = part(p);
    const Part* dst = deeper.part(p);
    if (!dst) throw InvalidArgument("embed_into: prime missing in target");
    AbelianPVector w = AbelianPVector::zero(dst->group);
    for (std::size_t i = 0; i < v.coords.size(); ++i) {
      const int shift = dst->group.exponents[i] - src->group.exponents[i];
      w.coords[i] = v.coords[i] * ipow(p, shift);
    }
    img.parts.emplace(p, std::move(w));
  }
  return deeper.encode(img);
}

CayleyGroup DedekindInstance::to_cayley(std::size_t cap) const {
  check_order_cap(order_, cap, "Dedekind truncation");
  return CayleyGroup::from_function(order_, [this](std::size_t a, std::size_t b) { return multiply(a, b); }, {}, cap);
}

DedekindInstance truncate(const DedekindSpec& spec, TruncationParams params, std::size_t cap) {
  if (auto v = validate_spec(spec); !v.empty()) throw InvalidSpec("invalid Dedekind spec: " + v.front());
  DedekindInstance inst(spec, params);
  check_order_cap(inst.order(), cap, "Dedekind truncation");
  return inst;
}

}  // namespace fcig
