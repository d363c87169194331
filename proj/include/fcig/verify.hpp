#pragma once

// Verification suites: each runs a family of brute-force checks and returns
// a machine-readable verdict.

#include <filesystem>
#include <string>
#include <vector>

#include "fcig/extension.hpp"
#include "fcig/spec_io.hpp"

namespace fcig {

struct SuiteResult {
  std::string suite;
  bool pass = false;
  Json details;
};

struct FixedPointOptions {
  // Empty: {2: 2^10, 3: 3^6, 5: 5^4, 7: 7^4}.
  std::vector<std::pair<u64, u64>> prime_max_orders;
};

SuiteResult verify_fixed_points(const FixedPointOptions& opts = {});
SuiteResult verify_q8_power_automorphisms();
SuiteResult verify_quotient_bound(std::size_t max_order = 200);
SuiteResult verify_dihedral_centralizers(std::size_t max_order = 64);
SuiteResult verify_pq_elements(std::size_t max_order = 500);

/// One spec together with its classification and truncation evidence.
struct SpecEvidence {
  std::string name;
  FciGroupSpec spec;
  Classification classification;
  std::vector<TruncationEvidence> truncations;
};

struct SweepOptions {
  std::vector<int> depths{1, 2, 3};
  std::vector<std::size_t> tail_counts{0, 1, 2};
  std::size_t cap = default_order_cap();
};

SpecEvidence collect_evidence(const std::string& name, const FciGroupSpec& spec, const SweepOptions& opts = {});
std::vector<SpecEvidence> collect_evidence(const std::vector<std::filesystem::path>& files,
                                           const SweepOptions& opts = {});

/// Bound of the global centralizer inequality on every faithful truncation.
SuiteResult verify_global_bound(const std::vector<SpecEvidence>& corpus);
/// Metabelian on every truncation of an FCI spec.
SuiteResult verify_metabelian(const std::vector<SpecEvidence>& corpus);
/// Kernel set = D, a subgroup, and G/D cyclic of order m on faithful truncations.
SuiteResult verify_kernel_set(const std::vector<SpecEvidence>& corpus);
/// A finite certificate constant that no tested truncation exceeds.
SuiteResult verify_bci_constant(const std::vector<SpecEvidence>& corpus);

/// Spec files named by a CLI argument: "bundled/all", a directory or a file.
std::vector<std::filesystem::path> resolve_spec_argument(const std::string& arg);

std::vector<std::string> suite_names();

}  // namespace fcig
