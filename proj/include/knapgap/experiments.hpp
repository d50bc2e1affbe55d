#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knapgap/config.hpp"
#include "knapgap/numeric.hpp"

namespace knapgap {

enum class SampleMode { Auto, MonteCarlo, Exhaustive };

struct SampleSpec {
  size_t n = 3;
  Int H = 10;
  size_t sample_count = 1000;
  uint64_t seed = 0;
  Rat epsilon = make_rat(1, 2);
  SampleMode mode = SampleMode::Auto;
  // scan window override for max_distance_over_b; negative means the
  // default f_plus(a) + |a|_1
  Int window_override = -1;
};

struct DistanceScan {
  Rat d_max;      // certified maximum over the scanned window
  Int argmax_b;   // smallest attaining right-hand side
  Int window;     // scanned |b| <= window
};

struct ExperimentRecord {
  IntVec a;
  Int b_argmax;
  Rat d_max;
  Int f_plus;
  Rat eps;
  RootVal normalized;     // d_max / max_norm^eps
  RootVal upper_proxy;    // equals normalized (|c|_1-normalized trivial cost)
  std::optional<RootVal> lower_witness;  // all-positive samples only
  std::string seed_path;
};

struct TailRow {
  Rat t;
  Rat ratio;         // empirical tail frequency, exact
  double reference;  // fitted C * t^(-alpha)
};

struct TailReport {
  std::vector<TailRow> rows;
  Rat alpha;  // (n-2) / ((1-eps) n)
  Rat fitted_at;
  Rat fitted_c;  // empirical ratio at the smallest grid point
  size_t population;
  bool exhaustive;
  // window-limited scan makes every empirical count a lower estimate of
  // the all-b supremum statistic
  std::string window_note;
};

struct AverageReport {
  double upper_proxy_mean;
  double lower_witness_mean;
  size_t population;
  size_t positive_population;  // samples entering the lower witness
};

/// Primitive nonzero-entry vectors with max-norm at most H: seeded uniform
/// rejection sampling, or full lexicographic enumeration when (2H+1)^n is
/// within the configured cap. Deterministic for a fixed spec; per-sample
/// sub-seeds make parallel and serial runs identical.
std::vector<IntVec> sample_Q(const SampleSpec& spec, const Caps& caps = Caps{});

/// Certified-window maximum of the vertex distance over b in [-W, W],
/// W = f_plus(a) + |a|_1 unless overridden.
DistanceScan max_distance_over_b(const IntVec& a, const Int& window_override,
                                 const Caps& caps = Caps{});

std::vector<ExperimentRecord> run_experiment(const SampleSpec& spec,
                                             const Caps& caps = Caps{});

TailReport tail_ratio(const SampleSpec& spec, const std::vector<Rat>& t_grid,
                      const Caps& caps = Caps{});

/// Builds the tail report from precomputed records (one scan, many grids).
TailReport tail_ratio_from_records(const SampleSpec& spec,
                                   const std::vector<ExperimentRecord>& records,
                                   const std::vector<Rat>& t_grid,
                                   bool exhaustive);

AverageReport avg_normalized_gap(const SampleSpec& spec,
                                 const Caps& caps = Caps{});

/// Fixed-schema CSV:
/// a,b_argmax,Dmax,f_plus,eps,normalized,upper_proxy,lower_witness,seed
/// Vectors are semicolon-joined, rationals "p/q", root values as decimals
/// with 12 significant digits. Byte-identical for identical records.
std::string render_csv(const std::vector<ExperimentRecord>& records);
void emit_csv(const std::vector<ExperimentRecord>& records,
              const std::string& path);

std::vector<Rat> default_tail_grid();

}  // namespace knapgap
