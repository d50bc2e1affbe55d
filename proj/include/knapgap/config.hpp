#pragma once

#include <stdexcept>
#include <string>

namespace knapgap {

// Thrown when a requested computation exceeds the configured enumeration
// budget. Callers that can retry with larger caps should catch this; the CLI
// maps it to exit code 3.
class ScaleRefusal : public std::runtime_error {
 public:
  explicit ScaleRefusal(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration budgets. These are configuration values, not constants: the CLI
// accepts overrides via KNAPGAP_CAPS, --config and --workers so that larger
// sweeps can raise them.
struct Caps {
  // candidate tuples for one fiber enumeration call
  unsigned long long fiber_tuple_cap = 100'000'000ULL;
  // residue-table sizes for semigroup / group-relaxation shortest paths
  unsigned long long residue_table_cap = 10'000'000ULL;
  // total candidate points held by a distance scanner
  unsigned long long scanner_candidate_cap = 50'000'000ULL;
  // right-hand-side iterations for gap scans and b-windows
  unsigned long long scan_iteration_cap = 20'000'000ULL;
  // simplex covering brute force
  unsigned long long simplex_det_cap = 64;
  unsigned simplex_dim_cap = 4;
  // box doublings for the bracketed integer-program search
  unsigned ip_expansion_rounds = 8;
  // exhaustive sampling threshold: enumerate Q(H) when (2H+1)^n is below this
  unsigned long long exhaustive_sample_cap = 200'000ULL;
  unsigned workers = 1;
};

// Parses "key=value,key=value" (also accepts newline-separated pairs, '#'
// comments). Unknown keys throw std::invalid_argument.
void apply_caps_overrides(Caps& caps, const std::string& spec);

}  // namespace knapgap
