#include <doctest.h>

#include "fcig/catalog.hpp"
#include "fcig/errors.hpp"
#include "fcig/extension.hpp"
#include "fcig/spec_io.hpp"

using namespace fcig;

namespace {

AbelianPComponent comp(u64 p, std::vector<int> e, int q = 0) { return AbelianPComponent::make(p, std::move(e), q); }

FciGroupSpec make(bool q8, std::vector<std::pair<AbelianPComponent, UnitLabel>> parts, u64 m,
                  std::optional<TailRule> tail = {}) {
  FciGroupSpec s;
  s.dedekind.has_q8 = q8;
  s.dedekind.tail = tail;
  s.phi.tail_rule_least_order_m = tail.has_value();
  for (auto& [a, label] : parts) {
    s.dedekind.components.emplace(a.p, a);
    s.phi.per_prime.emplace(a.p, label);
  }
  s.m = m;
  return s;
}

FciGroupSpec z5_c4() { return make(false, {{comp(5, {}, 1), TeichmullerUnit{2}}}, 4); }
FciGroupSpec c5_c4() { return make(false, {{comp(5, {1}), UnitResidue::make(5, 1, 2)}}, 4); }
FciGroupSpec z2_inv() { return make(false, {{comp(2, {}, 1), InversionUnit{}}}, 2); }
FciGroupSpec q8_z3() { return make(true, {{comp(3, {}, 1), InversionUnit{}}}, 2); }

FiberElement involution() {
  FiberElement n;
  n.parts[2].quasicyclic = {{1, 1}};
  return n;
}

bool contains(const std::vector<std::string>& v, const std::string& needle) {
  for (const auto& s : v)
    if (s.find(needle) != std::string::npos) return true;
  return false;
}

DedekindElement d_at(const DedekindInstance& inst, u64 p, u64 coord) {
  DedekindElement e = inst.identity();
  e.parts.at(p).coords = {coord};
  return e;
}

}  // namespace

TEST_SUITE("extension") {

TEST_CASE("multiplication law examples") {
  const ExtensionTruncation t(c5_c4(), {});
  const DedekindInstance& d = t.base();
  const auto one = d.identity();
  for (std::size_t a = 0; a < d.order(); ++a)
    for (std::size_t b = 0; b < d.order(); ++b)
      CHECK(t.multiply(ExtensionElement{0, d.decode(a)}, ExtensionElement{0, d.decode(b)}) ==
            ExtensionElement{0, d.decode(d.multiply(a, b))});
  // with g^-1 a g = a^2: a g = g a^2 and g a = g a
  CHECK(t.multiply(ExtensionElement{0, d_at(d, 5, 1)}, ExtensionElement{1, one}) == ExtensionElement{1, d_at(d, 5, 2)});
  CHECK(t.multiply(ExtensionElement{1, one}, ExtensionElement{0, d_at(d, 5, 1)}) == ExtensionElement{1, d_at(d, 5, 1)});
  CHECK(t.multiply(ExtensionElement{3, one}, ExtensionElement{1, one}) == ExtensionElement{0, one});

  FciGroupSpec fiber = z2_inv();
  fiber.n = involution();
  const ExtensionTruncation tf(fiber, {3, 0});
  const auto n = fiber.n.in(tf.base());
  CHECK(tf.multiply(ExtensionElement{1, tf.base().identity()}, ExtensionElement{1, tf.base().identity()}) ==
        ExtensionElement{0, n});
  CHECK(n.parts.at(2).coords == std::vector<u64>{4});
}

TEST_CASE("C5 by C4 embeds in the affine group of Z/5") {
  // x -> u x + b, composed left to right as in the table (x then y).
  struct Affine {
    u64 u, b;
  };
  const auto compose = [](Affine x, Affine y) { return Affine{x.u * y.u % 5, (x.b * y.u + y.b) % 5}; };
  const ExtensionTruncation t(c5_c4(), {});
  bool found = false;
  for (u64 u : {2ULL, 3ULL}) {
    const auto image = [&](std::size_t e) {
      const ExtensionElement x = t.decode(e);
      Affine a{1, 0};
      for (u64 i = 0; i < x.i; ++i) a = compose(a, Affine{u, 0});
      return compose(a, Affine{1, x.d.parts.at(5).coords[0]});
    };
    bool hom = true;
    for (std::size_t a = 0; a < t.order() && hom; ++a)
      for (std::size_t b = 0; b < t.order() && hom; ++b) {
        const Affine lhs = image(t.multiply(a, b));
        const Affine rhs = compose(image(a), image(b));
        hom = lhs.u == rhs.u && lhs.b == rhs.b;
      }
    found = found || hom;
  }
  CHECK(found);
}

TEST_CASE("validation examples") {
  CHECK(validate_extension(z5_c4()).empty());
  FciGroupSpec q8 = make(true, {}, 1);
  q8.dedekind.components.emplace(3, comp(3, {}, 1));
  q8.phi.per_prime.emplace(3, IdentityUnit{});
  q8.n.q8 = Q8Element::parse("i");
  CHECK(contains(validate_extension(q8), "n not central"));
  FciGroupSpec moved = z5_c4();
  moved.n.parts[5].quasicyclic = {{1, 1}};
  CHECK(contains(validate_extension(moved), "n not fixed by φ"));
  FciGroupSpec wrong_m = z5_c4();
  wrong_m.m = 2;
  CHECK(contains(validate_extension(wrong_m), "differs from the order"));
  FciGroupSpec central = z2_inv();
  central.n = involution();
  CHECK(validate_extension(central).empty());
  FciGroupSpec q8_minus = q8_z3();
  q8_minus.n.q8 = Q8Element::minus_one();
  CHECK(validate_extension(q8_minus).empty());
}

TEST_CASE("classification examples") {
  const Classification a = classify(z5_c4());
  REQUIRE(a.kind == Classification::Kind::Fci);
  CHECK(a.certificate->bound == Cardinal(4));
  CHECK(a.certificate->M == Cardinal(1));
  CHECK(a.certificate->pi0.empty());

  CHECK(classify(z2_inv()).certificate->bound == Cardinal(4));
  CHECK(classify(make(false, {{comp(2, {}, 1), IdentityUnit{}}}, 1)).kind == Classification::Kind::Dedekind);
  CHECK(global_bound(q8_z3()) == Cardinal(128));
  const FciGroupSpec c3_z7 = make(false, {{comp(3, {1}), IdentityUnit{}}, {comp(7, {}, 1), TeichmullerUnit{2}}}, 3);
  CHECK(global_bound(c3_z7) == Cardinal(9));

  const FciGroupSpec z2_identity = make(false, {{comp(2, {}, 1), IdentityUnit{}}, {comp(3, {}, 1), InversionUnit{}}}, 2);
  const Classification r = classify(z2_identity);
  CHECK(r.kind == Classification::Kind::NotFci);
  CHECK_FALSE(r.certificate.has_value());
  CHECK(r.reason.find("inversion") != std::string::npos);
  CHECK_THROWS_AS(global_bound(z2_identity), InvalidArgument);

  const FciGroupSpec z4 = make(false, {{comp(2, {}, 1), InversionUnit{}}, {comp(5, {}, 1), TeichmullerUnit{2}}}, 4);
  CHECK(classify(z4).kind == Classification::Kind::NotFci);

  const Classification fin = classify(c5_c4());
  CHECK(fin.kind == Classification::Kind::Rejected);
  CHECK(fin.reason == "D finite: theorem governs infinite groups");

  FciGroupSpec broken = z5_c4();
  broken.m = 3;
  CHECK_THROWS_AS(classify(broken), InvalidSpec);
}

TEST_CASE("truncated group orders") {
  CHECK(truncate_group(z5_c4(), {1, 0}).order() == 20);
  CHECK(truncate_group(q8_z3(), {1, 0}).order() == 48);
  CHECK(truncate_group(q8_z3(), {2, 0}).order() == 144);
  const FciGroupSpec ded = make(false, {{comp(5, {}, 1), IdentityUnit{}}}, 1);
  const CayleyGroup g = truncate_group(ded, {2, 0});
  CHECK(g.order() == 25);
  CHECK(g.is_abelian());
  CHECK_THROWS_AS(truncate_group(z5_c4(), {4, 0}, 1000), ResourceLimit);
}

TEST_CASE("empirical BCI profile examples") {
  const BciProfile d8 = empirical_bci(dihedral_group(4));
  CHECK(d8.max_centralizer_order == 4);
  CHECK(d8.max_index == 2);
  CHECK_FALSE(d8.dedekind);
  CHECK(empirical_bci(quaternion_group()).dedekind);
  CHECK(empirical_bci(truncate_group(c5_c4(), {})).max_centralizer_order == 4);
}

TEST_CASE("faithfulness tracks the truncated order") {
  CHECK_FALSE(ExtensionTruncation(z2_inv(), {1, 0}).faithful());
  CHECK(ExtensionTruncation(z2_inv(), {2, 0}).faithful());
  const FciGroupSpec tail = make(false, {{comp(3, {1}), InversionUnit{}}}, 4, TailRule{4, 5});
  CHECK_FALSE(ExtensionTruncation(tail, {1, 0}).faithful());
  CHECK(ExtensionTruncation(tail, {1, 1}).faithful());
}

TEST_CASE("bundled truncations are groups of order m |D| with g^m = n") {
  for (const auto& path : bundled_spec_files()) {
    const FciGroupSpec spec = load_spec(path);
    const auto kind = classify(spec).kind;
    if (kind != Classification::Kind::Fci && kind != Classification::Kind::Dedekind) continue;
    for (const TruncationParams& p : truncation_grid(spec, {1, 2, 3}, {0, 1, 2})) {
      INFO(path.stem().string() << " depth " << p.quasicyclic_depth << " tail " << p.tail_count);
      std::optional<ExtensionTruncation> t;
      try {
        t.emplace(spec, p, 2000);
      } catch (const ResourceLimit&) {
        continue;
      }
      CHECK(t->order() == spec.m * t->d_order());
      const CayleyGroup g = t->to_cayley();  // validates the axioms
      for (std::size_t x = 0; x < t->order(); ++x) {
        CHECK(t->multiply(x, t->inverse(x)) == 0);
        CHECK(t->multiply(t->inverse(x), x) == 0);
        CHECK(t->encode(t->decode(x)) == x);
      }
      // g^m = n
      const std::size_t gen = t->encode(ExtensionElement{spec.m > 1 ? 1u : 0u, t->base().identity()});
      std::size_t power = 0;
      for (u64 k = 0; k < spec.m; ++k) power = t->multiply(power, gen);
      if (spec.m > 1) CHECK(t->decode(power) == ExtensionElement{0, spec.n.in(t->base())});
      // g^-1 d g = φ(d)
      const TruncatedPowerAut phi(spec.phi, t->base());
      for (std::size_t d = 0; d < t->d_order(); ++d)
        CHECK(t->multiply(t->multiply(t->inverse(gen), d), gen) == phi.apply(d));
    }
  }
}

TEST_CASE("D generates normal subgroups on faithful truncations") {
  for (const auto& path : bundled_spec_files()) {
    const FciGroupSpec spec = load_spec(path);
    if (classify(spec).kind != Classification::Kind::Fci) continue;
    for (const TruncationParams& p : truncation_grid(spec, {1, 2}, {0, 1})) {
      const TruncationEvidence ev = inspect_truncation(spec, p, 1000);
      if (!ev.built || !ev.faithful) continue;
      INFO(path.stem().string());
      CHECK(ev.d_elements_normal);
      CHECK(ev.g_power_is_fiber);
    }
  }
}

TEST_CASE("truncation grid") {
  const auto g = truncation_grid(c5_c4(), {1, 2, 3}, {0, 1, 2});
  CHECK(g.size() == 1);
  const auto t = truncation_grid(make(false, {{comp(3, {1}), InversionUnit{}}}, 4, TailRule{4, 5}), {1, 2, 3}, {0, 1, 2});
  CHECK(t.size() == 3);
  FciGroupSpec deep = z2_inv();
  deep.n.parts[2].quasicyclic = {{1, 2}};
  CHECK(truncation_grid(deep, {1, 2, 3}, {0}).size() == 2);
}

}
