#include "fcig/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "fcig/arith.hpp"
#include "fcig/errors.hpp"
#include "fcig/quaternion.hpp"

namespace fcig {

namespace {

std::size_t generous_cap(std::size_t n) { return std::max(default_order_cap(), n); }

}  // namespace

CayleyGroup cyclic_group(std::size_t n) {
  return CayleyGroup::from_function(n, [n](std::size_t a, std::size_t b) { return (a + b) % n; }, {},
                                    generous_cap(n));
}

CayleyGroup abelian_group(const std::vector<std::size_t>& moduli) {
  std::size_t n = 1;
  for (std::size_t m : moduli) n *= m;
  return CayleyGroup::from_function(n, [&](std::size_t a, std::size_t b) {
    std::size_t r = 0, scale = 1;
    for (std::size_t m : moduli) {
      r += ((a % m + b % m) % m) * scale;
      a /= m;
      b /= m;
      scale *= m;
    }
    return r;
  }, {}, generous_cap(n));
}

CayleyGroup direct_product(const CayleyGroup& a, const CayleyGroup& b) {
  const std::size_t nb = b.order();
  return CayleyGroup::from_function(a.order() * nb, [&](std::size_t x, std::size_t y) {
    return static_cast<std::size_t>(a.mul(static_cast<CayleyGroup::Index>(x / nb), static_cast<CayleyGroup::Index>(y / nb))) * nb +
           b.mul(static_cast<CayleyGroup::Index>(x % nb), static_cast<CayleyGroup::Index>(y % nb));
  }, {}, generous_cap(a.order() * nb));
}

CayleyGroup dihedral_group(std::size_t n) { return dih(cyclic_group(n)); }

CayleyGroup quaternion_group() {
  std::vector<std::string> labels;
  for (std::uint8_t i = 0; i < 8; ++i) labels.emplace_back(Q8Element(i).name());
  return CayleyGroup::from_function(8, [](std::size_t a, std::size_t b) {
    return (Q8Element(static_cast<std::uint8_t>(a)) * Q8Element(static_cast<std::uint8_t>(b))).index();
  }, std::move(labels));
}

CayleyGroup semidirect_cyclic(std::size_t n, std::size_t m, std::size_t u) {
  if (std::gcd(u, n) != 1 || powmod(u, m, n) != 1 % n)
    throw InvalidArgument("semidirect_cyclic: u must be a unit with u^m = 1 mod n");
  // (i, a)(j, b) = (i + j, a u^j + b): g^-1 a g = a^u
  std::vector<std::size_t> upow(m);
  for (std::size_t j = 0; j < m; ++j) upow[j] = powmod(u, j, n);
  return CayleyGroup::from_function(n * m, [&](std::size_t x, std::size_t y) {
    const std::size_t i = x / n, a = x % n, j = y / n, b = y % n;
    return ((i + j) % m) * n + (a * upow[j] + b) % n;
  }, {}, generous_cap(n * m));
}

CayleyGroup permutation_group(std::size_t degree, const std::vector<std::vector<std::size_t>>& gens) {
  using Perm = std::vector<std::size_t>;
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::map<Perm, std::size_t> index{{id, 0}};
  std::vector<Perm> elems{id};
  // (p * q)(x) = q(p(x)): apply p first
  auto compose = [degree](const Perm& p, const Perm& q) {
    Perm r(degree);
    for (std::size_t x = 0; x < degree; ++x) r[x] = q[p[x]];
    return r;
  };
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& s : gens) {
      Perm r = compose(elems[i], s);
      if (index.emplace(r, elems.size()).second) elems.push_back(std::move(r));
    }
  return CayleyGroup::from_function(elems.size(), [&](std::size_t a, std::size_t b) {
    return index.at(compose(elems[a], elems[b]));
  }, {}, generous_cap(elems.size()));
}

CayleyGroup symmetric_group(std::size_t degree) {
  if (degree < 2) return cyclic_group(1);
  std::vector<std::size_t> swap(degree), cycle(degree);
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  for (std::size_t i = 0; i < degree; ++i) cycle[i] = (i + 1) % degree;
  return permutation_group(degree, {swap, cycle});
}

CayleyGroup alternating_group(std::size_t degree) {
  if (degree < 3) return cyclic_group(1);
  // 3-cycles (0 1 k) generate A_n
  std::vector<std::vector<std::size_t>> gens;
  for (std::size_t k = 2; k < degree; ++k) {
    std::vector<std::size_t> p(degree);
    std::iota(p.begin(), p.end(), 0);
    p[0] = 1;
    p[1] = k;
    p[k] = 0;
    gens.push_back(std::move(p));
  }
  return permutation_group(degree, gens);
}

std::vector<std::vector<std::size_t>> abelian_group_types(std::size_t max_order) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t n = 1; n <= max_order; ++n) {
    // cartesian product over primes of partitions of the exponent
    std::vector<std::vector<std::vector<std::size_t>>> per_prime;
    for (auto [p, e] : factorize(n)) {
      std::vector<std::vector<std::size_t>> choices;
      std::vector<std::size_t> parts;
      std::function<void(int, int)> rec = [&](int rem, int cap) {
        if (rem == 0) {
          choices.push_back(parts);
          return;
        }
        for (int k = std::min(rem, cap); k >= 1; --k) {
          parts.push_back(ipow(p, k));
          rec(rem - k, k);
          parts.pop_back();
        }
      };
      rec(e, e);
      per_prime.push_back(std::move(choices));
    }
    std::vector<std::size_t> current;
    std::function<void(std::size_t)> combine = [&](std::size_t i) {
      if (i == per_prime.size()) {
        out.push_back(current.empty() ? std::vector<std::size_t>{1} : current);
        return;
      }
      for (const auto& c : per_prime[i]) {
        const std::size_t before = current.size();
        current.insert(current.end(), c.begin(), c.end());
        combine(i + 1);
        current.resize(before);
      }
    };
    combine(0);
  }
  return out;
}

std::vector<NamedGroup> small_group_catalog(std::size_t max_order) {
  std::vector<NamedGroup> out;
  auto add = [&](std::string name, auto&& make) {
    CayleyGroup g = make();
    if (g.order() <= max_order) out.push_back({std::move(name), std::move(g)});
  };
  for (std::size_t n : {1, 2, 3, 4, 6, 8, 12, 30}) add("C" + std::to_string(n), [n] { return cyclic_group(n); });
  add("C2xC2", [] { return abelian_group({2, 2}); });
  add("C2xC4", [] { return abelian_group({2, 4}); });
  add("C2^3", [] { return abelian_group({2, 2, 2}); });
  add("C2^4", [] { return abelian_group({2, 2, 2, 2}); });
  add("C3xC3", [] { return abelian_group({3, 3}); });
  add("C4xC4", [] { return abelian_group({4, 4}); });
  for (std::size_t n : {3, 4, 5, 6, 8, 10, 12, 100})
    add("D" + std::to_string(2 * n), [n] { return dihedral_group(n); });
  add("Q8", [] { return quaternion_group(); });
  add("Q8xC2", [] { return direct_product(quaternion_group(), cyclic_group(2)); });
  add("Q8xC3", [] { return direct_product(quaternion_group(), cyclic_group(3)); });
  add("Q8xS3", [] { return direct_product(quaternion_group(), symmetric_group(3)); });
  add("C3:C4", [] { return semidirect_cyclic(3, 4, 2); });
  add("C4:C4", [] { return semidirect_cyclic(4, 4, 3); });
  add("M16", [] { return semidirect_cyclic(8, 2, 5); });
  add("SD16", [] { return semidirect_cyclic(8, 2, 3); });
  add("C5:C4", [] { return semidirect_cyclic(5, 4, 2); });
  add("C7:C3", [] { return semidirect_cyclic(7, 3, 2); });
  add("C7:C6", [] { return semidirect_cyclic(7, 6, 3); });
  add("C9:C6", [] { return semidirect_cyclic(9, 6, 2); });
  add("C11:C5", [] { return semidirect_cyclic(11, 5, 3); });
  add("C13:C4", [] { return semidirect_cyclic(13, 4, 5); });
  add("A4", [] { return alternating_group(4); });
  add("A4xC2", [] { return direct_product(alternating_group(4), cyclic_group(2)); });
  add("A4xC3", [] { return direct_product(alternating_group(4), cyclic_group(3)); });
  add("S4", [] { return symmetric_group(4); });
  add("S4xC2", [] { return direct_product(symmetric_group(4), cyclic_group(2)); });
  add("S4xC3", [] { return direct_product(symmetric_group(4), cyclic_group(3)); });
  add("A5", [] { return alternating_group(5); });
  add("S5", [] { return symmetric_group(5); });
  add("S3xC3", [] { return direct_product(symmetric_group(3), cyclic_group(3)); });
  add("S3xS3", [] { return direct_product(symmetric_group(3), symmetric_group(3)); });
  add("D8xC3", [] { return direct_product(dihedral_group(4), cyclic_group(3)); });
  add("S3xD8", [] { return direct_product(symmetric_group(3), dihedral_group(4)); });
  add("Dih(C4xC2)", [] { return dih(abelian_group({4, 2})); });
  add("Dih(C3xC3)", [] { return dih(abelian_group({3, 3})); });
  add("Dih(C5xC5)", [] { return dih(abelian_group({5, 5})); });
  add("C5:C4xD10", [] { return direct_product(semidirect_cyclic(5, 4, 2), dihedral_group(5)); });
  return out;
}

std::vector<NamedGroup> three_prime_catalog(std::size_t max_order) {
  std::vector<NamedGroup> out;
  auto add = [&](std::string name, auto&& make) {
    CayleyGroup g = make();
    if (g.order() <= max_order) out.push_back({std::move(name), std::move(g)});
  };
  add("C30", [] { return cyclic_group(30); });
  add("S3xC5", [] { return direct_product(symmetric_group(3), cyclic_group(5)); });
  add("D30", [] { return dihedral_group(15); });
  add("C7:C6", [] { return semidirect_cyclic(7, 6, 3); });
  add("D42", [] { return dihedral_group(21); });
  add("C5:C4xC3", [] { return direct_product(semidirect_cyclic(5, 4, 2), cyclic_group(3)); });
  add("A4xC5", [] { return direct_product(alternating_group(4), cyclic_group(5)); });
  add("S3xD10", [] { return direct_product(symmetric_group(3), dihedral_group(5)); });
  add("A4xC7", [] { return direct_product(alternating_group(4), cyclic_group(7)); });
  add("C11:C5xC2", [] { return direct_product(semidirect_cyclic(11, 5, 3), cyclic_group(2)); });
  add("S4xC5", [] { return direct_product(symmetric_group(4), cyclic_group(5)); });
  add("C13:C4xC3", [] { return direct_product(semidirect_cyclic(13, 4, 5), cyclic_group(3)); });
  add("C7:C3xD10", [] { return direct_product(semidirect_cyclic(7, 3, 2), dihedral_group(5)); });
  add("S4xD10", [] { return direct_product(symmetric_group(4), dihedral_group(5)); });
  add("C31:C15", [] { return semidirect_cyclic(31, 15, 9); });
  add("C5:C4xS3", [] { return direct_product(semidirect_cyclic(5, 4, 2), symmetric_group(3)); });
  add("A5", [] { return alternating_group(5); });
  add("S5", [] { return symmetric_group(5); });
  add("A5xC7", [] { return direct_product(alternating_group(5), cyclic_group(7)); });
  return out;
}

}  // namespace fcig
