#pragma once

// Dense Cayley-table groups and the brute-force oracles built on them.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fcig {

/// Upper bound on the order of any concrete group built by this library.
/// Read from FCIG_ORDER_CAP when set, 5000 otherwise.
std::size_t default_order_cap();

/// A finite group as a dense multiplication table, element 0 the identity.
class CayleyGroup {
 public:
  using Index = std::uint32_t;

  CayleyGroup() = default;

  // Validates the group axioms (full associativity for order <= 500,
  // 10^5 sampled triples above that). Throws InvalidArgument on failure and
  // ResourceLimit when n exceeds the cap.
  static CayleyGroup from_table(std::size_t n, std::vector<Index> table,
                                std::vector<std::string> labels = {},
                                std::size_t cap = default_order_cap());

  template <class Mul>
  static CayleyGroup from_function(std::size_t n, Mul&& mul, std::vector<std::string> labels = {},
                                   std::size_t cap = default_order_cap());

  std::size_t order() const { return n_; }
  Index mul(Index a, Index b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Index inv(Index a) const { return inverse_[a]; }
  Index conj(Index x, Index g) const { return mul(mul(inv(g), x), g); }  // g^-1 x g
  std::span<const Index> table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Index a) const;
  bool is_abelian() const;

 private:
  void validate();

  std::size_t n_ = 0;
  std::vector<Index> table_;
  std::vector<Index> inverse_;
  std::vector<std::string> labels_;
};

void check_order_cap(std::size_t n, std::size_t cap, const char* what);

template <class Mul>
CayleyGroup CayleyGroup::from_function(std::size_t n, Mul&& mul, std::vector<std::string> labels,
                                       std::size_t cap) {
  check_order_cap(n, cap, "CayleyGroup");
  std::vector<Index> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Index>(mul(a, b));
  return from_table(n, std::move(table), std::move(labels), cap);
}

/// Sorted set of element indices, closed under the group operation.
struct SubgroupHandle {
  std::vector<CayleyGroup::Index> elements;

  std::size_t size() const { return elements.size(); }
  bool contains(CayleyGroup::Index x) const;
  friend bool operator==(const SubgroupHandle&, const SubgroupHandle&) = default;
};

std::size_t element_order(const CayleyGroup& g, CayleyGroup::Index x);
SubgroupHandle cyclic_subgroup(const CayleyGroup& g, CayleyGroup::Index x);
SubgroupHandle generate_subgroup(const CayleyGroup& g, std::span<const CayleyGroup::Index> gens);
SubgroupHandle whole_group(const CayleyGroup& g);
SubgroupHandle centralizer(const CayleyGroup& g, CayleyGroup::Index x);
SubgroupHandle center(const CayleyGroup& g);
bool is_normal(const CayleyGroup& g, const SubgroupHandle& h);
bool is_normal_cyclic(const CayleyGroup& g, CayleyGroup::Index x);
SubgroupHandle normal_closure(const CayleyGroup& g, std::span<const CayleyGroup::Index> xs);
std::vector<SubgroupHandle> normal_subgroups(const CayleyGroup& g);

/// True iff every cyclic subgroup is normal.
bool is_dedekind_bruteforce(const CayleyGroup& g);

struct KernelSet {
  std::vector<CayleyGroup::Index> elements;  // {x : <x> normal in G}, ascending
  bool is_subgroup = false;
};
KernelSet kernel_set(const CayleyGroup& g);

struct Quotient {
  CayleyGroup group;
  std::vector<CayleyGroup::Index> projection;       // element -> coset index
  std::vector<CayleyGroup::Index> representatives;  // coset -> least element
};
/// Throws InvalidArgument if n is not normal.
Quotient quotient(const CayleyGroup& g, const SubgroupHandle& n);

SubgroupHandle commutator_subgroup(const CayleyGroup& g, const SubgroupHandle& h);
SubgroupHandle derived_subgroup(const CayleyGroup& g);
bool is_metabelian(const CayleyGroup& g);
bool is_soluble(const CayleyGroup& g);
int derived_length(const CayleyGroup& g);  // -1 when insoluble
bool is_cyclic(const CayleyGroup& g);

struct Fingerprint {
  std::vector<std::size_t> order_counts;  // order_counts[d] = #elements of order d
  std::size_t center_order = 0;
  int derived_length = 0;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};
Fingerprint fingerprint(const CayleyGroup& g);

/// |C_Gbar(xbar):<xbar>| <= |N| |C_G(x):<x>|, checked for every x in G.
struct QuotientBoundReport {
  bool holds = true;
  std::size_t checked = 0;            // all x in G
  std::size_t checked_non_normal = 0; // x with <x> not normal in G
  double worst_ratio = 0.0;           // max lhs / rhs
  std::optional<CayleyGroup::Index> counterexample;
};
QuotientBoundReport check_quotient_bound(const CayleyGroup& g, const SubgroupHandle& n);

/// Generalised dihedral group A ⋊ C2, C2 inverting A. Elements 0..|A|-1 are A.
CayleyGroup dih(const CayleyGroup& a);

struct DihedralReport {
  bool applicable = false;  // false when A is elementary abelian
  bool holds = true;
  std::size_t elements_checked = 0;
  std::size_t involutions_in_a = 0;  // |{a : a^2 = 1}|
  std::optional<CayleyGroup::Index> counterexample;
};
DihedralReport check_dihedral_centralizers(const CayleyGroup& a);

using GroupMap = std::vector<CayleyGroup::Index>;
std::vector<GroupMap> automorphisms(const CayleyGroup& g);
std::vector<GroupMap> inner_automorphisms(const CayleyGroup& g);
bool is_power_map(const CayleyGroup& g, const GroupMap& f);

struct Q8AutReport {
  std::size_t aut_count = 0;
  std::size_t power_count = 0;
  std::size_t inner_count = 0;
  bool power_equals_inner = false;
};
Q8AutReport q8_automorphisms();

enum class PqElementResult { Holds, Fails, NotApplicable };
PqElementResult check_pq_element(const CayleyGroup& g);

/// Plain-text table: first line N, then N rows of N space-separated indices.
void write_table(std::ostream& os, const CayleyGroup& g);
CayleyGroup read_table(std::istream& is, std::size_t cap = default_order_cap());

}  // namespace fcig
