#pragma once

// Concrete finite groups used as oracle inputs.

#include <cstdint>
#include <string>
#include <vector>

#include "fcig/cayley.hpp"

namespace fcig {

struct NamedGroup {
  std::string name;
  CayleyGroup group;
};

CayleyGroup cyclic_group(std::size_t n);
/// Direct product of cyclic groups C_{n_1} x ... x C_{n_r}.
CayleyGroup abelian_group(const std::vector<std::size_t>& moduli);
CayleyGroup direct_product(const CayleyGroup& a, const CayleyGroup& b);
/// Dihedral group of order 2n.
CayleyGroup dihedral_group(std::size_t n);
CayleyGroup quaternion_group();
/// C_n ⋊ C_m with the generator acting as a -> a^u; requires u^m = 1 mod n.
CayleyGroup semidirect_cyclic(std::size_t n, std::size_t m, std::size_t u);
/// Closure of the given permutations of {0..degree-1}.
CayleyGroup permutation_group(std::size_t degree, const std::vector<std::vector<std::size_t>>& gens);
CayleyGroup symmetric_group(std::size_t degree);
CayleyGroup alternating_group(std::size_t degree);

/// Every finite abelian group of order <= max_order, as prime-power cyclic
/// moduli lists (one entry per isomorphism class).
std::vector<std::vector<std::size_t>> abelian_group_types(std::size_t max_order);

/// Groups of order <= 200 with a manageable number of normal subgroups.
std::vector<NamedGroup> small_group_catalog(std::size_t max_order = 200);

/// Soluble and insoluble groups of order <= max_order whose orders have at
/// least three prime divisors, plus a few controls.
std::vector<NamedGroup> three_prime_catalog(std::size_t max_order = 500);

}  // namespace fcig
