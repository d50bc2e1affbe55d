#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knapgap/config.hpp"
#include "knapgap/core_lattice.hpp"
#include "knapgap/knapsack.hpp"
#include "knapgap/numeric.hpp"

namespace knapgap {

enum class SolveStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
  SolveStatus status = SolveStatus::Infeasible;
  Rat value;
  std::optional<Vertex> argmin;
};

struct IpResult {
  SolveStatus status = SolveStatus::Infeasible;
  Rat value;
  IntVec argmin;
  bool group_certified = false;  // optimum proved by a lifted group witness
};

struct GapReport {
  LpResult lp;
  IpResult ip;
  Rat gap;        // ip - lp, >= 0
  Rat bound;      // (max_norm - 1) * |c|_1
};

/// Group relaxation instance: minimize costs . x over nonnegative integer
/// x congruent to `residue` modulo the lattice. Costs must be positive.
struct GroupProblem {
  CongruenceLattice lattice;
  RatVec costs;
  IntVec residue;
};

struct GroupEntry {
  Rat cost;
  IntVec witness;
};

struct GroupTable {
  std::vector<GroupEntry> per_residue;  // indexed by class value mod modulus
};

struct LatticeGapResult {
  Rat gap;
  Int argmax_residue;
  GroupTable table;
};

struct GapScanResult {
  Rat max_gap;
  Int argmax_b;
  unsigned long evaluated = 0;  // right-hand sides with feasible bounded IP
};

/// Lower bound for the integer programming gap of a generic pair: the
/// covering-constant bound evaluated on the dual slack vector. The root
/// term is kept symbolic; `rho_exact` is false when the covering constant
/// is replaced by its factorial lower bound (dimension >= 3).
struct GenericGapBound {
  bool generic = false;
  size_t tau = 0;       // basic variable of the relaxation optimum
  RatVec dual_slack;    // l = pi_tau(c) - c_tau / a_tau * pi_tau(a)
  RootVal term;         // rho_{n-1}^{n-1} * a_tau * prod(l) under the root
  Rat offset;           // |l|_1
  bool rho_exact = false;

  /// sign of (term - offset) - x, exact
  int compare(const Rat& x) const { return term.compare(x + offset); }
  double to_double() const { return term.to_double() - offset.get_d(); }
};

struct CoveringConstant {
  unsigned dim;
  Rat pow_d;    // rho_d^d, exact for dim <= 2, else the d! lower bound
  bool exact;
  std::string note;
};

LpResult lp_value(const RatVec& costs, const KnapsackInstance& inst);

/// Exact integer optimum. Bounded polyhedra enumerate the fiber (after a
/// group-lift shortcut); unbounded polyhedra with bounded relaxations use
/// the group bound plus a bracketed expanding box search, certified by
/// value discreteness. Throws ScaleRefusal with the open bracket when the
/// expansion cap is hit.
IpResult ip_value(const RatVec& costs, const KnapsackInstance& inst,
                  const Caps& caps = Caps{});

/// Requires a feasible bounded integer program; propagates
/// std::invalid_argument otherwise.
GapReport integrality_gap(const RatVec& costs, const KnapsackInstance& inst,
                          const Caps& caps = Caps{});

/// Minimal cost and witness for one residue class, by shortest path on the
/// cycle group of order `modulus` with arcs weight_i at cost costs_i.
GroupEntry group_value(const GroupProblem& problem, const Caps& caps = Caps{});

/// One multi-target shortest-path pass: the full per-residue table, its
/// maximum and the attaining class.
LatticeGapResult lattice_gap(const CongruenceLattice& lattice,
                             const RatVec& costs, const Caps& caps = Caps{});

/// Worst-case group-relaxation value of the projection lattice of an
/// all-positive vector, with the first n-1 entries as costs. Equals the
/// Frobenius number plus the last entry.
Int gap_special(const IntVec& a, const Caps& caps = Caps{});

/// Scanned maximum of the integrality gap over b in [0, b_max]; a lower
/// approximation of the integer programming gap, exact for the special
/// cost pattern once the window passes the Frobenius scale.
GapScanResult gap_scan(const RatVec& costs, const KnapsackInstance& inst,
                       const Int& b_max, const Caps& caps = Caps{});

/// Default scan window: f_plus of the vector (the Frobenius-scale bound on
/// useful right-hand sides).
Int default_scan_window(const IntVec& a, const Caps& caps = Caps{});

GenericGapBound generic_gap_lower_bound(const IntVec& a, const RatVec& costs,
                                        const Caps& caps = Caps{});

/// rho_d: exact for d in {1,2}; the (d!)^(1/d) lower bound otherwise.
CoveringConstant covering_constant(unsigned d);

/// Projection lattice of a knapsack vector: weights are the first n-1
/// entries, modulus |a_n|.
CongruenceLattice projection_lattice(const IntVec& a);

}  // namespace knapgap
