#pragma once

#include <vector>

#include "knapgap/config.hpp"
#include "knapgap/core_lattice.hpp"
#include "knapgap/numeric.hpp"

namespace knapgap {

/// A validated instance of the single-equation polyhedron
/// P(a,b) = { x >= 0 : a.x = b }. Construction throws
/// std::invalid_argument when `a` fails validate_knapsack_vector.
class KnapsackInstance {
 public:
  KnapsackInstance(IntVec a, Int b);

  const IntVec& a() const { return a_; }
  const Int& b() const { return b_; }
  size_t dim() const { return a_.size(); }
  Int max_norm() const { return linf_norm(a_); }

 private:
  IntVec a_;
  Int b_;
};

/// Vertex of P(a,b): at most one nonzero coordinate, value b/a_index >= 0.
/// For b == 0 the single vertex is the origin (index 0, value 0).
struct Vertex {
  size_t index;
  Rat value;

  RatVec point(size_t dim) const;
};

struct FeasibleSet {
  std::vector<IntVec> points;  // lexicographically sorted
  bool exhaustive = false;
  RatVec center;
  Int radius;
};

enum class Shape { Empty, Bounded, Unbounded };

std::vector<Vertex> vertices(const KnapsackInstance& inst);

Shape classify(const KnapsackInstance& inst);

/// Exact integer feasibility of P(a,b): true for mixed signs, semigroup
/// membership via the residue table otherwise.
bool is_integer_feasible(const KnapsackInstance& inst,
                         const Caps& caps = Caps{});

/// Independent brute-force route: box search of radius max_norm - 1 around
/// a vertex. Used to cross-validate is_integer_feasible.
bool is_integer_feasible_oracle(const KnapsackInstance& inst,
                                const Caps& caps = Caps{});

/// All integer points x >= 0 with a.x = b and |x - center|_inf <= radius.
/// Enumerates the non-pivot coordinates and solves the pivot coordinate
/// (largest |a_i|, lowest index on ties) by divisibility.
FeasibleSet enumerate_fiber_in_box(const KnapsackInstance& inst,
                                   const RatVec& center, const Int& radius,
                                   const Caps& caps = Caps{});

/// Whole fiber of a bounded instance (P(a,b) is inside the cube of side
/// b / min |a_i|). Throws std::invalid_argument when unbounded.
FeasibleSet enumerate_bounded_fiber(const KnapsackInstance& inst,
                                    const Caps& caps = Caps{});

/// Some nonnegative integer solution of a.x = b for all-positive `a`
/// (after sign normalization), via the residue table; nullopt if none.
std::optional<IntVec> semigroup_representation(const IntVec& a, const Int& b,
                                               const Caps& caps = Caps{});

}  // namespace knapgap
