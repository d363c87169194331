#include "fcig/cayley.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "fcig/arith.hpp"
#include "fcig/catalog.hpp"
#include "fcig/errors.hpp"

namespace fcig {

using Index = CayleyGroup::Index;

namespace {

constexpr std::size_t kFullAssociativityLimit = 500;
constexpr std::size_t kSampledTriples = 100000;

SubgroupHandle from_flags(const std::vector<char>& flags) {
  SubgroupHandle h;
  for (std::size_t i = 0; i < flags.size(); ++i)
    if (flags[i]) h.elements.push_back(static_cast<Index>(i));
  return h;
}

std::vector<char> to_flags(const CayleyGroup& g, const SubgroupHandle& h) {
  std::vector<char> flags(g.order(), 0);
  for (Index x : h.elements) flags[x] = 1;
  return flags;
}

// closure of a generating set under multiplication
SubgroupHandle closure(const CayleyGroup& g, std::span<const Index> gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Index> list{0};
  in[0] = 1;
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (Index s : gens) {
      const Index y = g.mul(list[i], s);
      if (!in[y]) {
        in[y] = 1;
        list.push_back(y);
      }
    }
  }
  return from_flags(in);
}

std::vector<Index> small_generating_set(const CayleyGroup& g) {
  std::vector<Index> gens;
  std::vector<char> in(g.order(), 0);
  in[0] = 1;
  std::size_t covered = 1;
  for (Index x = 0; x < g.order() && covered < g.order(); ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    auto h = closure(g, gens);
    std::fill(in.begin(), in.end(), 0);
    for (Index y : h.elements) in[y] = 1;
    covered = h.size();
  }
  return gens;
}

}  // namespace

std::size_t default_order_cap() {
  if (const char* env = std::getenv("FCIG_ORDER_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 5000;
}

void check_order_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap)
    throw ResourceLimit(std::string(what) + ": order " + std::to_string(n) + " exceeds cap " +
                        std::to_string(cap));
}

CayleyGroup CayleyGroup::from_table(std::size_t n, std::vector<Index> table,
                                    std::vector<std::string> labels, std::size_t cap) {
  check_order_cap(n, cap, "CayleyGroup");
  if (n == 0) throw InvalidArgument("CayleyGroup: empty group");
  if (table.size() != n * n) throw InvalidArgument("CayleyGroup: table size is not N*N");
  if (!labels.empty() && labels.size() != n) throw InvalidArgument("CayleyGroup: label count mismatch");
  CayleyGroup g;
  g.n_ = n;
  g.table_ = std::move(table);
  g.labels_ = std::move(labels);
  g.validate();
  return g;
}

void CayleyGroup::validate() {
  const std::size_t n = n_;
  for (Index v : table_)
    if (v >= n) throw InvalidArgument("CayleyGroup: table entry out of range");
  for (std::size_t a = 0; a < n; ++a)
    if (mul(0, static_cast<Index>(a)) != a || mul(static_cast<Index>(a), 0) != a)
      throw InvalidArgument("CayleyGroup: element 0 is not the identity");
  // Latin square in rows and columns
  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) seen[mul(static_cast<Index>(a), static_cast<Index>(b))] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw InvalidArgument("CayleyGroup: row is not a permutation");
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) seen[mul(static_cast<Index>(b), static_cast<Index>(a))] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw InvalidArgument("CayleyGroup: column is not a permutation");
  }
  inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (mul(static_cast<Index>(a), static_cast<Index>(b)) == 0) {
        if (mul(static_cast<Index>(b), static_cast<Index>(a)) != 0)
          throw InvalidArgument("CayleyGroup: left and right inverses differ");
        inverse_[a] = static_cast<Index>(b);
        break;
      }
    }
  }
  auto assoc = [&](Index a, Index b, Index c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      throw InvalidArgument("CayleyGroup: associativity fails at (" + std::to_string(a) + "," +
                            std::to_string(b) + "," + std::to_string(c) + ")");
  };
  if (n <= kFullAssociativityLimit) {
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) {
        const Index ab = mul(a, b);
        for (Index c = 0; c < n; ++c)
          if (mul(ab, c) != mul(a, mul(b, c))) assoc(a, b, c);
      }
  } else {
    std::mt19937_64 rng(0x5eed'f00dULL ^ n);
    std::uniform_int_distribution<Index> pick(0, static_cast<Index>(n - 1));
    for (std::size_t t = 0; t < kSampledTriples; ++t) assoc(pick(rng), pick(rng), pick(rng));
  }
}

std::string CayleyGroup::label(Index a) const {
  return labels_.empty() ? std::to_string(a) : labels_.at(a);
}

bool CayleyGroup::is_abelian() const {
  for (Index a = 0; a < n_; ++a)
    for (Index b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool SubgroupHandle::contains(Index x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

std::size_t element_order(const CayleyGroup& g, Index x) {
  std::size_t k = 1;
  for (Index y = x; y != 0; y = g.mul(y, x)) ++k;
  return k;
}

SubgroupHandle cyclic_subgroup(const CayleyGroup& g, Index x) {
  SubgroupHandle h{{0}};
  for (Index y = x; y != 0; y = g.mul(y, x)) h.elements.push_back(y);
  std::sort(h.elements.begin(), h.elements.end());
  return h;
}

SubgroupHandle generate_subgroup(const CayleyGroup& g, std::span<const Index> gens) {
  return closure(g, gens);
}

SubgroupHandle whole_group(const CayleyGroup& g) {
  SubgroupHandle h;
  h.elements.resize(g.order());
  std::iota(h.elements.begin(), h.elements.end(), Index{0});
  return h;
}

SubgroupHandle centralizer(const CayleyGroup& g, Index x) {
  SubgroupHandle h;
  for (Index y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == g.mul(y, x)) h.elements.push_back(y);
  return h;
}

SubgroupHandle center(const CayleyGroup& g) {
  SubgroupHandle h;
  const auto gens = small_generating_set(g);
  for (Index y = 0; y < g.order(); ++y) {
    bool central = true;
    for (Index s : gens)
      if (g.mul(s, y) != g.mul(y, s)) {
        central = false;
        break;
      }
    if (central) h.elements.push_back(y);
  }
  return h;
}

bool is_normal(const CayleyGroup& g, const SubgroupHandle& h) {
  const auto flags = to_flags(g, h);
  for (Index s = 0; s < g.order(); ++s)
    for (Index x : h.elements)
      if (!flags[g.conj(x, s)]) return false;
  return true;
}

namespace {

// <x> is normal iff every conjugate of x lies in <x>; one flag buffer reused
bool cyclic_normal_with(const CayleyGroup& g, Index x, std::vector<char>& flags) {
  std::vector<Index> members{0};
  for (Index y = x; y != 0; y = g.mul(y, x)) members.push_back(y);
  for (Index m : members) flags[m] = 1;
  bool normal = true;
  for (Index s = 0; s < g.order() && normal; ++s)
    if (!flags[g.conj(x, s)]) normal = false;
  for (Index m : members) flags[m] = 0;
  return normal;
}

}  // namespace

bool is_normal_cyclic(const CayleyGroup& g, Index x) {
  std::vector<char> flags(g.order(), 0);
  return cyclic_normal_with(g, x, flags);
}

SubgroupHandle normal_closure(const CayleyGroup& g, std::span<const Index> xs) {
  std::vector<Index> gens;
  std::vector<char> seen(g.order(), 0);
  for (Index x : xs)
    for (Index s = 0; s < g.order(); ++s) {
      const Index c = g.conj(x, s);
      if (!seen[c]) {
        seen[c] = 1;
        gens.push_back(c);
      }
    }
  return closure(g, gens);
}

std::vector<SubgroupHandle> normal_subgroups(const CayleyGroup& g) {
  // Every normal subgroup is a join of normal closures of single elements.
  std::set<std::vector<Index>> found;
  std::vector<SubgroupHandle> layer;
  for (Index x = 0; x < g.order(); ++x) {
    const Index xs[] = {x};
    auto h = normal_closure(g, xs);
    if (found.insert(h.elements).second) layer.push_back(h);
  }
  std::vector<SubgroupHandle> all = layer;
  std::vector<SubgroupHandle> minimal = layer;
  while (!layer.empty()) {
    std::vector<SubgroupHandle> next;
    for (const auto& a : layer)
      for (const auto& b : minimal) {
        std::vector<Index> gens = a.elements;
        gens.insert(gens.end(), b.elements.begin(), b.elements.end());
        auto j = closure(g, gens);
        if (found.insert(j.elements).second) {
          next.push_back(j);
          all.push_back(j);
        }
      }
    layer = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](const SubgroupHandle& a, const SubgroupHandle& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.elements < b.elements;
  });
  return all;
}

bool is_dedekind_bruteforce(const CayleyGroup& g) {
  std::vector<char> flags(g.order(), 0);
  for (Index x = 0; x < g.order(); ++x)
    if (!cyclic_normal_with(g, x, flags)) return false;
  return true;
}

KernelSet kernel_set(const CayleyGroup& g) {
  KernelSet k;
  std::vector<char> flags(g.order(), 0);
  std::vector<char> in(g.order(), 0);
  for (Index x = 0; x < g.order(); ++x)
    if (cyclic_normal_with(g, x, flags)) {
      k.elements.push_back(x);
      in[x] = 1;
    }
  k.is_subgroup = true;
  for (Index a : k.elements) {
    for (Index b : k.elements)
      if (!in[g.mul(a, b)]) {
        k.is_subgroup = false;
        break;
      }
    if (!k.is_subgroup) break;
  }
  return k;
}

Quotient quotient(const CayleyGroup& g, const SubgroupHandle& n) {
  if (!is_normal(g, n)) throw InvalidArgument("quotient: subgroup is not normal");
  const Index none = static_cast<Index>(g.order());
  std::vector<Index> rep_of(g.order(), none);
  Quotient q;
  for (Index x = 0; x < g.order(); ++x) {
    if (rep_of[x] != none) continue;
    // scanning in order makes x the least element of its coset
    for (Index y : n.elements) rep_of[g.mul(x, y)] = x;
    q.representatives.push_back(x);
  }
  std::vector<Index> coset_index(g.order(), none);
  for (std::size_t i = 0; i < q.representatives.size(); ++i) coset_index[q.representatives[i]] = static_cast<Index>(i);
  q.projection.resize(g.order());
  for (Index x = 0; x < g.order(); ++x) q.projection[x] = coset_index[rep_of[x]];
  const auto& reps = q.representatives;
  std::vector<std::string> labels;
  for (Index r : reps) labels.push_back(g.label(r) + "N");
  q.group = CayleyGroup::from_function(
      reps.size(),
      [&](std::size_t a, std::size_t b) { return q.projection[g.mul(reps[a], reps[b])]; },
      std::move(labels), std::max(g.order(), reps.size()));
  return q;
}

SubgroupHandle commutator_subgroup(const CayleyGroup& g, const SubgroupHandle& h) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Index> gens;
  for (Index a : h.elements)
    for (Index b : h.elements) {
      const Index c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
      if (!seen[c]) {
        seen[c] = 1;
        gens.push_back(c);
      }
    }
  return closure(g, gens);
}

SubgroupHandle derived_subgroup(const CayleyGroup& g) { return commutator_subgroup(g, whole_group(g)); }

bool is_metabelian(const CayleyGroup& g) {
  const auto d = derived_subgroup(g);
  for (Index a : d.elements)
    for (Index b : d.elements)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

int derived_length(const CayleyGroup& g) {
  SubgroupHandle h = whole_group(g);
  int len = 0;
  while (h.size() > 1) {
    auto next = commutator_subgroup(g, h);
    if (next.size() == h.size()) return -1;
    h = std::move(next);
    ++len;
  }
  return len;
}

bool is_soluble(const CayleyGroup& g) { return derived_length(g) >= 0; }

bool is_cyclic(const CayleyGroup& g) {
  for (Index x = 0; x < g.order(); ++x)
    if (element_order(g, x) == g.order()) return true;
  return false;
}

Fingerprint fingerprint(const CayleyGroup& g) {
  Fingerprint f;
  f.order_counts.assign(g.order() + 1, 0);
  for (Index x = 0; x < g.order(); ++x) ++f.order_counts[element_order(g, x)];
  f.center_order = center(g).size();
  f.derived_length = derived_length(g);
  return f;
}

QuotientBoundReport check_quotient_bound(const CayleyGroup& g, const SubgroupHandle& n) {
  const Quotient q = quotient(g, n);
  const CayleyGroup& gbar = q.group;
  std::vector<std::size_t> bar_cent(gbar.order(), 0), bar_cyc(gbar.order(), 0);
  for (Index c = 0; c < gbar.order(); ++c) {
    bar_cent[c] = centralizer(gbar, c).size();
    bar_cyc[c] = element_order(gbar, c);
  }
  QuotientBoundReport r;
  std::vector<char> flags(g.order(), 0);
  for (Index x = 0; x < g.order(); ++x) {
    const Index xb = q.projection[x];
    const std::size_t cent = centralizer(g, x).size();
    const std::size_t cyc = element_order(g, x);
    // |C(xb)| / |<xb>| <= |N| |C(x)| / |<x>|, cross-multiplied
    const std::size_t lhs = bar_cent[xb] * cyc;
    const std::size_t rhs = n.size() * cent * bar_cyc[xb];
    ++r.checked;
    if (!cyclic_normal_with(g, x, flags)) ++r.checked_non_normal;
    const double ratio = static_cast<double>(lhs) / static_cast<double>(rhs);
    r.worst_ratio = std::max(r.worst_ratio, ratio);
    if (lhs > rhs && r.holds) {
      r.holds = false;
      r.counterexample = x;
    }
  }
  return r;
}

CayleyGroup dih(const CayleyGroup& a) {
  if (!a.is_abelian()) throw InvalidArgument("dih: input group is not abelian");
  const std::size_t n = a.order();
  // element s*n + x stands for (x, t^s); (x,t^s)(y,t^u) = (x * y^{(-1)^s}, t^{s+u})
  return CayleyGroup::from_function(2 * n, [&](std::size_t u, std::size_t v) {
    const Index x = static_cast<Index>(u % n), y = static_cast<Index>(v % n);
    const std::size_t s = u / n, t = v / n;
    const Index prod = a.mul(x, s ? a.inv(y) : y);
    return ((s + t) % 2) * n + prod;
  }, {}, std::max(default_order_cap(), 2 * n));
}

DihedralReport check_dihedral_centralizers(const CayleyGroup& a) {
  DihedralReport r;
  const std::size_t n = a.order();
  for (Index x = 0; x < n; ++x)
    if (a.mul(x, x) == 0) ++r.involutions_in_a;
  r.applicable = r.involutions_in_a != n;
  if (!r.applicable) return r;
  const CayleyGroup g = dih(a);
  std::vector<char> flags(g.order(), 0);
  for (Index x = 0; x < g.order(); ++x) {
    const bool in_a = x < n;
    const bool normal = cyclic_normal_with(g, x, flags);
    bool ok = (normal == in_a);
    if (!in_a) ok = ok && centralizer(g, x).size() == 2 * r.involutions_in_a;
    ++r.elements_checked;
    if (!ok && r.holds) {
      r.holds = false;
      r.counterexample = x;
    }
  }
  return r;
}

std::vector<GroupMap> automorphisms(const CayleyGroup& g) {
  const auto gens = small_generating_set(g);
  std::vector<std::vector<Index>> candidates;
  for (Index s : gens) {
    std::vector<Index> c;
    const std::size_t ord = element_order(g, s);
    for (Index y = 0; y < g.order(); ++y)
      if (element_order(g, y) == ord) c.push_back(y);
    candidates.push_back(std::move(c));
  }
  std::vector<GroupMap> out;
  std::vector<std::size_t> choice(gens.size(), 0);
  const Index none = static_cast<Index>(g.order());
  for (;;) {
    GroupMap f(g.order(), none);
    f[0] = 0;
    std::vector<Index> queue{0};
    bool consistent = true;
    for (std::size_t i = 0; i < queue.size() && consistent; ++i) {
      for (std::size_t j = 0; j < gens.size(); ++j) {
        const Index y = g.mul(queue[i], gens[j]);
        const Index img = g.mul(f[queue[i]], candidates[j][choice[j]]);
        if (f[y] == none) {
          f[y] = img;
          queue.push_back(y);
        } else if (f[y] != img) {
          consistent = false;
          break;
        }
      }
    }
    if (consistent) {
      std::vector<char> hit(g.order(), 0);
      for (Index v : f) hit[v] = 1;
      bool bijective = std::find(hit.begin(), hit.end(), 0) == hit.end();
      bool hom = bijective;
      for (Index a = 0; a < g.order() && hom; ++a)
        for (Index b = 0; b < g.order(); ++b)
          if (f[g.mul(a, b)] != g.mul(f[a], f[b])) {
            hom = false;
            break;
          }
      if (hom) out.push_back(std::move(f));
    }
    std::size_t j = 0;
    while (j < gens.size() && ++choice[j] == candidates[j].size()) choice[j++] = 0;
    if (j == gens.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupMap> inner_automorphisms(const CayleyGroup& g) {
  std::set<GroupMap> maps;
  for (Index s = 0; s < g.order(); ++s) {
    GroupMap f(g.order());
    for (Index x = 0; x < g.order(); ++x) f[x] = g.conj(x, s);
    maps.insert(std::move(f));
  }
  return {maps.begin(), maps.end()};
}

bool is_power_map(const CayleyGroup& g, const GroupMap& f) {
  for (Index x = 0; x < g.order(); ++x)
    if (!cyclic_subgroup(g, x).contains(f[x])) return false;
  return true;
}

Q8AutReport q8_automorphisms() {
  const CayleyGroup q8 = quaternion_group();
  const auto aut = automorphisms(q8);
  const auto inner = inner_automorphisms(q8);
  std::vector<GroupMap> power;
  for (const auto& f : aut)
    if (is_power_map(q8, f)) power.push_back(f);
  Q8AutReport r;
  r.aut_count = aut.size();
  r.power_count = power.size();
  r.inner_count = inner.size();
  r.power_equals_inner = power == inner;  // both sorted
  return r;
}

PqElementResult check_pq_element(const CayleyGroup& g) {
  const auto primes = prime_divisors(g.order());
  if (primes.size() < 3 || !is_soluble(g)) return PqElementResult::NotApplicable;
  for (Index x = 0; x < g.order(); ++x)
    if (prime_divisors(element_order(g, x)).size() >= 2) return PqElementResult::Holds;
  return PqElementResult::Fails;
}

void write_table(std::ostream& os, const CayleyGroup& g) {
  const std::size_t n = g.order();
  os << n << '\n';
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (b) os << ' ';
      os << g.mul(static_cast<Index>(a), static_cast<Index>(b));
    }
    os << '\n';
  }
}

CayleyGroup read_table(std::istream& is, std::size_t cap) {
  long long n = 0;
  if (!(is >> n) || n <= 0) throw InvalidArgument("read_table: missing or bad order line");
  check_order_cap(static_cast<std::size_t>(n), cap, "read_table");
  std::vector<Index> table(static_cast<std::size_t>(n * n));
  for (auto& v : table) {
    long long x = 0;
    if (!(is >> x) || x < 0 || x >= n) throw InvalidArgument("read_table: bad or missing entry");
    v = static_cast<Index>(x);
  }
  return CayleyGroup::from_table(static_cast<std::size_t>(n), std::move(table), {}, cap);
}

}  // namespace fcig
