#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "knapgap/config.hpp"
#include "knapgap/experiments.hpp"
#include "knapgap/numeric.hpp"

namespace knapgap {

struct SweepResult {
  std::string name;
  bool pass = false;
  unsigned long long checked = 0;
  unsigned long long violations = 0;
  std::string details;
};

struct GapSweepResults {
  SweepResult gap_bound;       // IG <= (max_norm - 1) |c|_1, equality family
  SweepResult distance_bound;  // IG <= d(a,b) |c|_1
};

/// Visits every primitive nonzero-entry vector of dimension n with
/// max-norm at most `max_norm`, in lexicographic order.
void for_each_primitive(size_t n, long max_norm, bool positive_only,
                        const std::function<void(const IntVec&)>& fn);

/// d(a,b) <= max_norm - 1 on every feasible instance of the sweep; batched
/// scanner cross-checked against the box search every `stride` hits.
SweepResult sweep_distance_bound(long max_norm, const std::vector<size_t>& dims,
                                 long b_range, unsigned long stride,
                                 const Caps& caps = Caps{});

/// The witness family attains the distance bound exactly.
SweepResult sweep_witness_equality(size_t n_max, long k_max,
                                   const Caps& caps = Caps{});

/// min l1 distance from each vertex <= 2 (max_norm - 1) on bounded feasible
/// instances.
SweepResult sweep_l1_refinement(long max_norm, const std::vector<size_t>& dims,
                                long b_max, const Caps& caps = Caps{});

/// Brute-force discrete covering radius equals g(a) + a_n.
SweepResult sweep_covering_identity(long max_norm, size_t n,
                                    const Caps& caps = Caps{});

/// Two-generator closed form g = a1 a2 - a1 - a2 on coprime pairs.
SweepResult sweep_sylvester(long limit, const Caps& caps = Caps{});

/// g(a) never exceeds the classical product bound.
SweepResult sweep_schur(long max_norm, size_t n_max, const Caps& caps = Caps{});

/// gap_special == g + a_n == lattice_gap == discrete brute force.
SweepResult sweep_gap_triangulation(long max_norm, size_t n,
                                    const Caps& caps = Caps{});

/// Randomized gap bounds; also asserts equality on the witness family.
GapSweepResults sweep_random_gaps(size_t samples, uint64_t seed, long max_norm,
                                  size_t n_max, long b_range, long c_limit,
                                  unsigned long stride,
                                  const Caps& caps = Caps{});

/// lattice_gap >= covering-constant lower bound (exact roots for dims 1-2,
/// equality for two generators), plus the attained small example.
SweepResult sweep_rho_bound(long max_norm, const Caps& caps = Caps{});

/// Tail experiment: non-increasing empirical ratios bounded by the fitted
/// reference curve.
std::pair<SweepResult, TailReport> sweep_tail(size_t n, long H, const Rat& eps,
                                              size_t samples, uint64_t seed,
                                              const Caps& caps = Caps{});

/// Constructive point finder honors its contract across a mixed-sign sweep.
SweepResult sweep_proof_construction(long max_norm,
                                     const std::vector<size_t>& dims,
                                     long b_range, const Caps& caps = Caps{});

/// Suite used by `knapgap verify`: reduced scale by default, acceptance
/// scale with full = true.
std::vector<SweepResult> run_verify(bool full, uint64_t seed,
                                    const Caps& caps = Caps{});

std::string format_sweep(const SweepResult& result);

}  // namespace knapgap
