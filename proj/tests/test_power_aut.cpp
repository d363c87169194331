#include <doctest.h>

#include "fcig/errors.hpp"
#include "fcig/power_aut.hpp"
#include "oracle.hpp"

using namespace fcig;

namespace {

AbelianPComponent comp(u64 p, std::vector<int> e, int q = 0) { return AbelianPComponent::make(p, std::move(e), q); }

struct Case {
  DedekindSpec d;
  PowerAutSpec phi;
};

Case make(bool q8, std::vector<std::pair<AbelianPComponent, UnitLabel>> parts, std::optional<TailRule> tail = {}) {
  Case c;
  c.d.has_q8 = q8;
  c.d.tail = tail;
  c.phi.tail_rule_least_order_m = tail.has_value();
  for (auto& [a, label] : parts) {
    c.d.components.emplace(a.p, a);
    c.phi.per_prime.emplace(a.p, label);
  }
  return c;
}

UnitResidue res(u64 p, int n, u64 v) { return UnitResidue::make(p, n, v); }

const Case& z5_c4() {
  static const Case c = make(false, {{comp(5, {}, 1), TeichmullerUnit{2}}});
  return c;
}
const Case& q8_z3() {
  static const Case c = make(true, {{comp(3, {}, 1), InversionUnit{}}});
  return c;
}

bool is_power_of(const DedekindInstance& inst, std::size_t x, std::size_t y) {
  std::size_t p = 0;
  do {
    if (p == y) return true;
    p = inst.multiply(p, x);
  } while (p != 0);
  return false;
}

}  // namespace

TEST_SUITE("power_aut") {

TEST_CASE("component orders") {
  CHECK(component_order(res(5, 1, 2), comp(5, {1})) == 4);
  CHECK(component_order(InversionUnit{}, comp(2, {}, 1)) == 2);
  CHECK(component_order(IdentityUnit{}, comp(3, {2})) == 1);
  CHECK(component_order(TeichmullerUnit{3}, comp(7, {}, 1)) == 6);
}

TEST_CASE("phi order") {
  CHECK(phi_order(z5_c4().phi, z5_c4().d) == 4);
  const Case inv = make(false, {{comp(3, {1}), res(3, 1, 2)}, {comp(5, {1}), res(5, 1, 4)}});
  CHECK(phi_order(inv.phi, inv.d) == 2);
  const Case id = make(false, {{comp(3, {1}), IdentityUnit{}}});
  CHECK(phi_order(id.phi, id.d) == 1);
  const Case tail = make(false, {{comp(3, {1}), InversionUnit{}}}, TailRule{4, 5});
  CHECK(phi_order(tail.phi, tail.d) == 4);
}

TEST_CASE("pi0 and pi1") {
  const PrimeSets a = pi0_pi1(q8_z3().phi, q8_z3().d, 2);
  CHECK(a.pi0 == std::vector<u64>{2});
  CHECK(a.pi1.empty());

  const Case c7 = make(false, {{comp(7, {1}), res(7, 1, 2)}});
  const PrimeSets b = pi0_pi1(c7.phi, c7.d, 3);
  CHECK(b.pi0.empty());
  CHECK(b.pi1.empty());

  const Case c57 = make(false, {{comp(5, {1}), res(5, 1, 2)}, {comp(7, {1}), res(7, 1, 6)}});
  const PrimeSets c = pi0_pi1(c57.phi, c57.d, 4);
  CHECK(c.pi0 == std::vector<u64>{7});
  CHECK(c.pi1.empty());

  const Case c9 = make(false, {{comp(3, {2}), res(3, 2, 4)}});
  CHECK(pi0_pi1(c9.phi, c9.d, 3).pi1 == std::vector<u64>{3});
}

TEST_CASE("finiteness check") {
  CHECK(finiteness_check(z5_c4().phi, z5_c4().d));
  CHECK(finiteness_check(q8_z3().phi, q8_z3().d));
  const Case c37 = make(false, {{comp(3, {1}), IdentityUnit{}}, {comp(7, {}, 1), TeichmullerUnit{2}}});
  CHECK(finiteness_check(c37.phi, c37.d));
  const Case bad = make(false, {{comp(3, {}, 1), IdentityUnit{}}, {comp(7, {}, 1), TeichmullerUnit{2}}});
  CHECK_FALSE(finiteness_check(bad.phi, bad.d));
}

TEST_CASE("M value") {
  DedekindSpec d;
  d.has_q8 = true;
  d.components.emplace(2, comp(2, {1}));
  CHECK(M_value(d) == Cardinal(16));
  DedekindSpec z2;
  z2.components.emplace(2, comp(2, {}, 1));
  CHECK(M_value(z2) == Cardinal(2));
  CHECK(M_value(DedekindSpec{}) == Cardinal(1));
}

TEST_CASE("centralizer bound") {
  CHECK(centralizer_bound(z5_c4().phi, z5_c4().d) == Cardinal(1));
  CHECK(centralizer_bound(q8_z3().phi, q8_z3().d) == Cardinal(64));
  const Case c57 = make(false, {{comp(5, {1}), res(5, 1, 2)}, {comp(7, {1}), res(7, 1, 6)}});
  CHECK(centralizer_bound(c57.phi, c57.d) == Cardinal(7));
  const Case bad = make(false, {{comp(3, {}, 1), IdentityUnit{}}, {comp(7, {}, 1), TeichmullerUnit{2}}});
  CHECK(centralizer_bound(bad.phi, bad.d).is_infinite());
}

TEST_CASE("symbolic centralizer orders") {
  CHECK(symbolic_centralizer_order(z5_c4().phi, z5_c4().d, 2) == Cardinal(1));
  const Case z2 = make(false, {{comp(2, {}, 1), InversionUnit{}}});
  CHECK(symbolic_centralizer_order(z2.phi, z2.d, 1) == Cardinal(2));
  CHECK(symbolic_centralizer_order(q8_z3().phi, q8_z3().d, 1) == Cardinal(8));
  CHECK_THROWS_AS(symbolic_centralizer_order(z5_c4().phi, z5_c4().d, 0), InvalidArgument);
  CHECK_THROWS_AS(symbolic_centralizer_order(z5_c4().phi, z5_c4().d, 4), InvalidArgument);
}

TEST_CASE("apply examples") {
  DedekindSpec d;
  d.components.emplace(5, comp(5, {}, 1));
  const DedekindInstance inst(d, {2, 0});
  DedekindElement x = inst.identity();
  x.parts.at(5).coords = {1};
  CHECK(apply(z5_c4().phi, x, inst).parts.at(5).coords == std::vector<u64>{7});

  const Case c8 = make(false, {{comp(2, {3}), InversionUnit{}}});
  const DedekindInstance i8(c8.d, {});
  DedekindElement y = i8.identity();
  y.parts.at(2).coords = {3};
  CHECK(apply(c8.phi, y, i8).parts.at(2).coords == std::vector<u64>{5});

  const Case id = make(true, {{comp(3, {1}), IdentityUnit{}}});
  const DedekindInstance iq(id.d, {});
  for (std::size_t a = 0; a < iq.order(); ++a) CHECK(apply(id.phi, iq.decode(a), iq) == iq.decode(a));
}

TEST_CASE("truncated actions are power automorphisms") {
  const std::vector<Case> cases = {
      z5_c4(),
      q8_z3(),
      make(false, {{comp(3, {1}), InversionUnit{}}}, TailRule{4, 5}),
      make(false, {{comp(3, {2}), res(3, 2, 4)}}, TailRule{3, 7}),
      make(false, {{comp(2, {}, 1), InversionUnit{}}, {comp(5, {}, 1), InversionUnit{}}}),
      make(false, {{comp(3, {2}), res(3, 2, 8)}, {comp(5, {}, 1), TeichmullerUnit{2}}}),
      make(true, {{comp(2, {1}), IdentityUnit{}}, {comp(7, {}, 1), TeichmullerUnit{6}}}),
  };
  for (const Case& c : cases)
    for (int j : {1, 2})
      for (std::size_t tail : {0, 1}) {
        if (!c.d.tail && tail) continue;
        const DedekindInstance inst(c.d, {j, tail});
        if (inst.order() > 2000) continue;
        const TruncatedPowerAut f(c.phi, inst);
        std::vector<bool> hit(inst.order(), false);
        for (std::size_t a = 0; a < inst.order(); ++a) {
          const std::size_t fa = f.apply(a);
          CHECK_FALSE(hit[fa]);
          hit[fa] = true;
          CHECK(is_power_of(inst, a, fa));
          CHECK(inst.decode(fa) == apply(c.phi, inst.decode(a), inst));
          for (std::size_t b = a; b < std::min<std::size_t>(inst.order(), a + 40); ++b)
            CHECK(f.apply(inst.multiply(a, b)) == inst.multiply(fa, f.apply(b)));
        }
      }
}

TEST_CASE("symbolic centralizer orders match brute force on truncations") {
  const std::vector<Case> cases = {
      z5_c4(),
      q8_z3(),
      make(false, {{comp(2, {}, 1), InversionUnit{}}}),
      make(false, {{comp(2, {1}, 1), InversionUnit{}}}),
      make(false, {{comp(3, {1}), IdentityUnit{}}, {comp(7, {}, 1), TeichmullerUnit{2}}}),
      make(false, {{comp(3, {2}), res(3, 2, 8)}, {comp(5, {}, 1), TeichmullerUnit{2}}}),
      make(false, {{comp(3, {2}), res(3, 2, 4)}}, TailRule{3, 7}),
      make(false, {{comp(3, {1}), InversionUnit{}}}, TailRule{4, 5}),
      make(false, {{comp(5, {}, 1), TeichmullerUnit{2}}, {comp(7, {}, 1), InversionUnit{}}}),
  };
  for (const Case& c : cases) {
    const u64 m = phi_order(c.phi, c.d);
    bool all_finite = true;
    for (u64 k = 1; k < m; ++k) {
      const Cardinal sym = symbolic_centralizer_order(c.phi, c.d, k);
      all_finite = all_finite && sym.is_finite();
      std::vector<std::size_t> counts;
      for (int j : {1, 2, 3}) {
        const DedekindInstance inst(c.d, {j, c.d.tail ? std::size_t{2} : std::size_t{0}});
        if (inst.order() > 3000) continue;
        const TruncatedPowerAut f(c.phi, inst);
        if (f.order() != m) continue;  // the truncation must keep the full order
        std::size_t fixed = 0;
        for (std::size_t a = 0; a < inst.order(); ++a) fixed += f.apply_power(a, k) == a;
        counts.push_back(fixed);
        if (sym.is_finite()) CHECK(fixed == sym.value());
      }
      // an infinite centralizer shows up as growth with depth
      if (sym.is_infinite() && counts.size() >= 2 && c.d.components.size() > 0) CHECK(counts.back() > counts.front());
      if (sym.is_finite() && finiteness_check(c.phi, c.d)) CHECK(sym <= centralizer_bound(c.phi, c.d));
    }
    CHECK(finiteness_check(c.phi, c.d) == all_finite);
  }
}

TEST_CASE("label validation") {
  Case missing = z5_c4();
  missing.phi.per_prime.clear();
  CHECK_FALSE(validate_phi(missing.phi, missing.d).empty());
  Case extra = z5_c4();
  extra.phi.per_prime.emplace(7, IdentityUnit{});
  CHECK_FALSE(validate_phi(extra.phi, extra.d).empty());
  const Case q8_inv = make(true, {{comp(3, {1}), InversionUnit{}}});
  Case bad_q8 = q8_inv;
  bad_q8.phi.per_prime.emplace(2, InversionUnit{});
  CHECK_FALSE(validate_phi(bad_q8.phi, bad_q8.d).empty());
  CHECK(validate_phi(q8_inv.phi, q8_inv.d).empty());
  Case tail_no_rule = make(false, {{comp(3, {1}), InversionUnit{}}}, TailRule{4, 5});
  tail_no_rule.phi.tail_rule_least_order_m = false;
  CHECK_FALSE(validate_phi(tail_no_rule.phi, tail_no_rule.d).empty());
  const Case z2_teich = make(false, {{comp(2, {}, 1), TeichmullerUnit{1}}});
  CHECK_FALSE(validate_phi(z2_teich.phi, z2_teich.d).empty());
}

}
