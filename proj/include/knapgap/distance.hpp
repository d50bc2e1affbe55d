#pragma once

#include <optional>
#include <vector>

#include "knapgap/config.hpp"
#include "knapgap/knapsack.hpp"
#include "knapgap/numeric.hpp"

namespace knapgap {

struct VertexDistance {
  Vertex vertex;
  IntVec nearest;  // lexicographically smallest minimizer
  Rat distance;    // exact l_inf distance
};

/// Maximum over vertices of the distance to the nearest feasible integer
/// point. `value` is empty exactly when the instance has no feasible
/// integer point (the -inf case).
struct DistanceResult {
  std::optional<Rat> value;
  std::vector<VertexDistance> per_vertex;
};

struct L1Check {
  Rat value;      // max over vertices of the min l1 distance
  Int bound;      // 2 * (max_norm - 1)
  bool ok;        // value <= bound
  size_t argmax;  // vertex index attaining the max
};

struct ReferenceBounds {
  Int cook_linf;  // n * max_norm
  Int ew_l1;      // 2 * max_norm + 1 (single-row matrix case)
  Int vertex_linf;  // max_norm - 1
};

struct TightWitness {
  KnapsackInstance instance;
  Int expected_distance;  // k - 1
};

/// Exact nearest feasible point in l_inf for one vertex. Certified by the
/// box-radius argument: a feasible point within max_norm - 1 always exists,
/// so the search box of that radius contains a minimizer. Throws
/// std::invalid_argument on infeasible instances (the -inf case).
VertexDistance nearest_feasible_linf(const KnapsackInstance& inst,
                                     const Vertex& v,
                                     const Caps& caps = Caps{});

DistanceResult vertex_distance(const KnapsackInstance& inst,
                               const Caps& caps = Caps{});

/// Constructive feasible point within max_norm - 1 of the vertex, built by
/// the inductive case analysis (residue shortest path for one-signed
/// vectors, dilated-simplex covering for the bounded-projection case,
/// right-hand-side transfer plus induction otherwise). Output is verified
/// against the contract before returning.
IntVec proof_guided_point(const KnapsackInstance& inst, const Vertex& v,
                          const Caps& caps = Caps{});

/// l1 refinement for bounded feasible instances: max over vertices of the
/// min l1 distance, compared against 2 * (max_norm - 1).
L1Check l1_nearest_check(const KnapsackInstance& inst,
                         const Caps& caps = Caps{});

/// Family attaining the distance bound with equality: a = (k,...,k,1),
/// b = k - 1, expected distance k - 1.
TightWitness tight_witness(size_t n, const Int& k);

ReferenceBounds reference_bounds(const IntVec& a);

/// Batched exact distances for a fixed `a` over many right-hand sides.
/// Per vertex index j, candidate projections within the certified radius
/// are grouped by residue mod |a_j| and sorted by their weighted value, so
/// each query costs one binary search per active vertex. Exact rational
/// results, identical to vertex_distance.
class DistanceScanner {
 public:
  explicit DistanceScanner(IntVec a, const Caps& caps = Caps{});

  /// d(a,b); empty when infeasible.
  std::optional<Rat> distance(const Int& b) const;

  const IntVec& a() const { return a_; }

 private:
  struct Entry {
    Int value;  // weighted value of the candidate projection
    Rat best;   // running min of the objective from the valid side
  };
  struct VertexTable {
    bool side_le = true;  // a_j > 0: candidates need value <= b
    Int modulus;
    std::vector<std::vector<Entry>> by_residue;
  };

  IntVec a_;           // as given
  IntVec work_;        // sign-normalized copy (never all-negative)
  bool negated_ = false;
  bool all_positive_ = false;
  Int max_norm_;
  std::vector<Int> apery_;  // feasibility table for the one-signed case
  Int apery_mod_;
  std::vector<VertexTable> tables_;
};

}  // namespace knapgap
