#include "knapgap/gaps.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "knapgap/detail/modular_paths.hpp"
#include "knapgap/frobenius.hpp"

namespace knapgap {

namespace {

void require_cost_dim(const RatVec& costs, const KnapsackInstance& inst) {
  if (costs.size() != inst.dim())
    throw std::invalid_argument("cost vector dimension mismatch");
}

Int lcm_denominators(const RatVec& costs) {
  Int d = 1;
  for (const Rat& c : costs)
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den().get_mpz_t());
  return d;
}

struct GroupPass {
  detail::ModularPaths<Rat> paths;
  std::vector<size_t> coord;  // arc -> coordinate in the weight vector
  size_t modulus;
};

GroupPass run_group_pass(const IntVec& weights, const Int& modulus,
                         const RatVec& costs, const Caps& caps) {
  if (modulus < 1)
    throw std::invalid_argument("group relaxation: modulus must be >= 1");
  if (modulus > static_cast<unsigned long>(caps.residue_table_cap))
    throw ScaleRefusal("group relaxation: modulus above cap");
  GroupPass pass;
  pass.modulus = modulus.get_ui();
  std::vector<size_t> steps;
  RatVec arc_costs;
  for (size_t i = 0; i < weights.size(); ++i) {
    steps.push_back(mod_nonneg(weights[i], modulus).get_ui());
    arc_costs.push_back(costs[i]);
    pass.coord.push_back(i);
  }
  pass.paths = detail::modular_shortest_paths<Rat>(pass.modulus, steps, arc_costs);
  return pass;
}

IntVec group_witness(const GroupPass& pass, size_t rho, size_t dim) {
  auto counts = detail::arc_counts(pass.paths, rho, pass.coord.size());
  IntVec x(dim, 0);
  for (size_t k = 0; k < counts.size(); ++k) x[pass.coord[k]] = counts[k];
  return x;
}

// Basis index on the sign side matching b whose ratio c_tau / a_tau is the
// binding end of the dual interval; its reduced costs are nonnegative
// whenever the relaxation is bounded, and c_tau * b / a_tau equals the
// relaxation optimum.
size_t bounded_basis(const RatVec& costs, const IntVec& a, const Int& b) {
  bool use_positive = sgn(b) >= 0;
  std::optional<size_t> tau;
  std::optional<Rat> best;
  for (size_t i = 0; i < a.size(); ++i) {
    if ((sign(a[i]) > 0) != use_positive) continue;
    Rat ratio = costs[i] / Rat(a[i]);
    if (!best || (use_positive ? ratio < *best : ratio > *best)) {
      best = ratio;
      tau = i;
    }
  }
  if (!tau) throw std::logic_error("bounded_basis: no coordinate on the b side");
  return *tau;
}

// Reduced costs for basis tau: l = pi_tau(c) - c_tau / a_tau * pi_tau(a).
RatVec reduced_costs(const RatVec& costs, const IntVec& a, size_t tau) {
  RatVec l;
  l.reserve(a.size() - 1);
  Rat ratio = costs[tau] / Rat(a[tau]);
  for (size_t i = 0; i < a.size(); ++i) {
    if (i == tau) continue;
    l.push_back(costs[i] - ratio * Rat(a[i]));
  }
  return l;
}

bool all_nonnegative(const RatVec& v) {
  for (const Rat& x : v)
    if (sgn(x) < 0) return false;
  return true;
}

// Group-relaxation lower bound at basis tau; lifts to an exact optimum when
// the basic coordinate of the witness is nonnegative.
struct GroupLift {
  Rat bound;          // lp vertex value + relaxation value
  bool lifted = false;
  IntVec point;       // feasible witness when lifted
};

std::optional<GroupLift> try_group_lift(const RatVec& costs,
                                        const KnapsackInstance& inst,
                                        size_t tau, const Caps& caps) {
  RatVec l = reduced_costs(costs, inst.a(), tau);
  if (!all_nonnegative(l)) return std::nullopt;
  IntVec weights;
  for (size_t i = 0; i < inst.dim(); ++i)
    if (i != tau) weights.push_back(inst.a()[i]);
  Int modulus = abs(inst.a()[tau]);
  auto pass = run_group_pass(weights, modulus, l, caps);
  size_t rho = mod_nonneg(inst.b(), modulus).get_ui();
  if (!pass.paths.reached[rho]) return std::nullopt;  // gcd obstruction

  GroupLift lift;
  Rat vertex_value = costs[tau] * make_rat(inst.b(), inst.a()[tau]);
  lift.bound = vertex_value + pass.paths.dist[rho];

  IntVec proj = group_witness(pass, rho, inst.dim() - 1);
  Int carried = inst.b();
  {
    size_t k = 0;
    for (size_t i = 0; i < inst.dim(); ++i) {
      if (i == tau) continue;
      carried -= inst.a()[i] * proj[k++];
    }
  }
  assert(mpz_divisible_p(carried.get_mpz_t(), inst.a()[tau].get_mpz_t()));
  Int basic = carried / inst.a()[tau];
  if (basic >= 0) {
    lift.lifted = true;
    size_t k = 0;
    lift.point.assign(inst.dim(), 0);
    for (size_t i = 0; i < inst.dim(); ++i) {
      if (i == tau) continue;
      lift.point[i] = proj[k++];
    }
    lift.point[tau] = basic;
    assert(dot(inst.a(), lift.point) == inst.b());
  }
  return lift;
}

// Minimum of the costs over the fiber restricted to 0 <= x_i <= ub_i; the
// coordinate with the widest range is solved from the equation rather than
// enumerated. Any negative bound marks an empty box.
void fiber_min_in_ranges(const RatVec& costs, const KnapsackInstance& inst,
                         const IntVec& ubs, const Caps& caps, bool* have,
                         Rat* value, IntVec* point) {
  const size_t n = inst.dim();
  for (const Int& u : ubs)
    if (u < 0) return;
  size_t pivot = 0;
  for (size_t i = 1; i < n; ++i)
    if (ubs[i] > ubs[pivot]) pivot = i;
  Int volume = 1;
  for (size_t i = 0; i < n; ++i)
    if (i != pivot) volume *= ubs[i] + 1;
  if (volume > static_cast<unsigned long>(caps.fiber_tuple_cap))
    throw ScaleRefusal("ip_value: level-set box above the fiber cap");

  IntVec x(n, 0);
  const Int& ap = inst.a()[pivot];
  while (true) {
    Int rem = inst.b();
    for (size_t i = 0; i < n; ++i)
      if (i != pivot) rem -= inst.a()[i] * x[i];
    if (mpz_divisible_p(rem.get_mpz_t(), ap.get_mpz_t())) {
      Int xp = rem / ap;
      if (xp >= 0 && xp <= ubs[pivot]) {
        x[pivot] = xp;
        Rat v = dot_rat(costs, x);
        if (!*have || v < *value || (v == *value && x < *point)) {
          *have = true;
          *value = v;
          *point = x;
        }
        x[pivot] = 0;
      }
    }
    bool advanced = false;
    for (size_t i = n; i-- > 0;) {
      if (i == pivot) continue;
      if (x[i] < ubs[i]) {
        x[i] += 1;
        advanced = true;
        break;
      }
      x[i] = 0;
    }
    if (!advanced) break;
  }
}

// Complete certificate for unbounded polyhedra with bounded relaxations.
// Any optimum can be walked down along zero-cost recession rays without
// changing its value, and such reduced optima live in explicit boxes:
// coordinates with positive reduced cost l_i obey l_i x_i <= UB - LP, and
// inside the zero-reduced-cost block at most one sign side can exceed
// max_norm - 1 (a reduced point cannot dominate a two-support zero-cost
// ray), with the fiber equation bounding the open side. Enumerating the
// boxes against the incumbent settles the optimum.
bool certify_by_level_set(const RatVec& costs, const KnapsackInstance& inst,
                          const LpResult& lp, const Caps& caps, Rat* value,
                          IntVec* point) {
  const size_t n = inst.dim();
  size_t tau = bounded_basis(costs, inst.a(), inst.b());
  Rat lambda = costs[tau] / Rat(inst.a()[tau]);
  if (lambda * Rat(inst.b()) != lp.value) return false;
  Rat slack_budget = *value - lp.value;  // incumbent above the relaxation

  std::vector<char> degenerate(n, 0);
  IntVec base_ub(n, 0);
  for (size_t i = 0; i < n; ++i) {
    Rat l = costs[i] - lambda * Rat(inst.a()[i]);
    if (sgn(l) < 0) return false;  // dual interval violated
    if (sgn(l) == 0)
      degenerate[i] = 1;
    else
      base_ub[i] = floor_rat(slack_budget / l);
  }

  bool deg_pos = false, deg_neg = false;
  for (size_t i = 0; i < n; ++i)
    if (degenerate[i]) (sign(inst.a()[i]) > 0 ? deg_pos : deg_neg) = true;

  // bound the degenerate coordinates on `open_side` from the equation and
  // the bounds already placed on every other coordinate
  auto balance_fill = [&](IntVec& ubs, int open_side) {
    Int v = open_side > 0 ? inst.b() : Int(-inst.b());
    for (size_t i = 0; i < n; ++i) {
      if (degenerate[i] && sign(inst.a()[i]) == open_side) continue;
      Int worst = inst.a()[i] * ubs[i];
      if (open_side > 0 ? worst < 0 : worst > 0) v += abs(worst);
    }
    if (v < 0) return false;
    for (size_t i = 0; i < n; ++i)
      if (degenerate[i] && sign(inst.a()[i]) == open_side)
        ubs[i] = floor_div(v, abs(inst.a()[i]));
    return true;
  };

  bool have = true;
  if (!(deg_pos && deg_neg)) {
    IntVec ubs = base_ub;
    if (deg_pos || deg_neg) {
      for (size_t i = 0; i < n; ++i)
        if (degenerate[i]) ubs[i] = 0;
      if (!balance_fill(ubs, deg_pos ? 1 : -1)) return true;  // empty box
    }
    fiber_min_in_ranges(costs, inst, ubs, caps, &have, value, point);
    return true;
  }
  Int cap_small = inst.max_norm() - 1;
  for (int open_side : {1, -1}) {
    IntVec ubs = base_ub;
    for (size_t i = 0; i < n; ++i)
      if (degenerate[i]) ubs[i] = sign(inst.a()[i]) == open_side ? 0 : cap_small;
    if (!balance_fill(ubs, open_side)) continue;
    fiber_min_in_ranges(costs, inst, ubs, caps, &have, value, point);
  }
  return true;
}

}  // namespace

LpResult lp_value(const RatVec& costs, const KnapsackInstance& inst) {
  require_cost_dim(costs, inst);
  LpResult out;
  auto verts = vertices(inst);
  if (verts.empty()) return out;  // infeasible

  // extreme rays of {x >= 0 : a.x = 0} have two-coordinate support
  for (size_t i = 0; i < inst.dim(); ++i) {
    for (size_t k = i + 1; k < inst.dim(); ++k) {
      if (sign(inst.a()[i]) == sign(inst.a()[k])) continue;
      Rat along = costs[i] * Rat(abs(inst.a()[k])) +
                  costs[k] * Rat(abs(inst.a()[i]));
      if (sgn(along) < 0) {
        out.status = SolveStatus::Unbounded;
        return out;
      }
    }
  }

  out.status = SolveStatus::Optimal;
  bool first = true;
  for (const Vertex& v : verts) {
    Rat value = costs[v.index] * v.value;
    if (first || value < out.value) {
      out.value = value;
      out.argmin = v;
      first = false;
    }
  }
  return out;
}

IpResult ip_value(const RatVec& costs, const KnapsackInstance& inst,
                  const Caps& caps) {
  require_cost_dim(costs, inst);
  IpResult out;
  if (!is_integer_feasible(inst, caps)) return out;  // infeasible

  LpResult lp = lp_value(costs, inst);
  if (lp.status == SolveStatus::Unbounded) {
    // integer recession rays exist, so the integer program is unbounded too
    out.status = SolveStatus::Unbounded;
    return out;
  }
  assert(lp.status == SolveStatus::Optimal);

  // any basis with nonnegative reduced costs yields a valid lower bound; a
  // lifted witness certifies the optimum outright
  std::optional<Rat> group_lower;
  for (size_t tau = 0; tau < inst.dim(); ++tau) {
    auto lift = try_group_lift(costs, inst, tau, caps);
    if (!lift) continue;
    if (lift->lifted) {
      out.status = SolveStatus::Optimal;
      out.value = lift->bound;
      out.argmin = lift->point;
      out.group_certified = true;
      return out;
    }
    if (!group_lower || lift->bound > *group_lower) group_lower = lift->bound;
  }

  if (classify(inst) == Shape::Bounded) {
    auto fiber = enumerate_bounded_fiber(inst, caps);
    assert(!fiber.points.empty());
    bool first = true;
    for (const IntVec& z : fiber.points) {
      Rat value = dot_rat(costs, z);
      if (first || value < out.value) {  // lex-smallest on ties
        out.value = value;
        out.argmin = z;
        first = false;
      }
    }
    out.status = SolveStatus::Optimal;
    return out;
  }

  // unbounded polyhedron, bounded relaxation
  Rat lower = lp.value;
  if (group_lower && *group_lower > lower) lower = *group_lower;
  Rat step = make_rat(1, lcm_denominators(costs));
  RatVec center = lp.argmin->point(inst.dim());
  Int radius = inst.max_norm() - 1;
  if (radius < 1) radius = 1;

  // incumbent from the certified-radius box around the optimal vertex
  bool have_incumbent = false;
  auto seed = enumerate_fiber_in_box(inst, center, radius, caps);
  for (const IntVec& z : seed.points) {
    Rat value = dot_rat(costs, z);
    if (!have_incumbent || value < out.value) {
      out.value = value;
      out.argmin = z;
      have_incumbent = true;
    }
  }
  assert(have_incumbent);
  if (out.value - lower < step) {  // optimum pinned by value discreteness
    out.status = SolveStatus::Optimal;
    return out;
  }

  try {
    if (certify_by_level_set(costs, inst, lp, caps, &out.value, &out.argmin)) {
      out.status = SolveStatus::Optimal;
      return out;
    }
  } catch (const ScaleRefusal&) {
    // level-set boxes above the cap: fall through to the doubling search
  }

  for (unsigned round = 0; round <= caps.ip_expansion_rounds; ++round) {
    radius *= 2;
    auto fiber = enumerate_fiber_in_box(inst, center, radius, caps);
    for (const IntVec& z : fiber.points) {
      Rat value = dot_rat(costs, z);
      if (value < out.value) {
        out.value = value;
        out.argmin = z;
      }
    }
    if (out.value - lower < step) {
      out.status = SolveStatus::Optimal;
      return out;
    }
  }
  throw ScaleRefusal("ip_value: expansion cap reached with open bracket [" +
                     to_decimal(lower) + ", " + to_decimal(out.value) + "]");
}

GapReport integrality_gap(const RatVec& costs, const KnapsackInstance& inst,
                          const Caps& caps) {
  GapReport report;
  report.ip = ip_value(costs, inst, caps);
  if (report.ip.status == SolveStatus::Infeasible)
    throw std::invalid_argument("integrality_gap: integer program infeasible");
  if (report.ip.status == SolveStatus::Unbounded)
    throw std::invalid_argument("integrality_gap: integer program unbounded");
  report.lp = lp_value(costs, inst);
  assert(report.lp.status == SolveStatus::Optimal);
  report.gap = report.ip.value - report.lp.value;
  report.bound = Rat(inst.max_norm() - 1) * l1_norm(costs);
  if (sgn(report.gap) < 0 || report.gap > report.bound)
    throw std::logic_error("integrality_gap: report violates its invariants");
  return report;
}

GroupEntry group_value(const GroupProblem& problem, const Caps& caps) {
  if (problem.costs.size() != problem.lattice.dim())
    throw std::invalid_argument("group_value: cost dimension mismatch");
  for (const Rat& c : problem.costs)
    if (sgn(c) <= 0)
      throw std::invalid_argument("group_value: costs must be positive");
  if (!problem.lattice.is_primitive())
    throw std::invalid_argument("group_value: lattice determinant mismatch");
  auto pass = run_group_pass(problem.lattice.weights, problem.lattice.modulus,
                             problem.costs, caps);
  size_t rho =
      mod_nonneg(dot(problem.lattice.weights, problem.residue),
                 problem.lattice.modulus)
          .get_ui();
  if (!pass.paths.reached[rho])
    throw std::logic_error("group_value: unreachable residue class");
  return GroupEntry{pass.paths.dist[rho],
                    group_witness(pass, rho, problem.lattice.dim())};
}

LatticeGapResult lattice_gap(const CongruenceLattice& lattice,
                             const RatVec& costs, const Caps& caps) {
  if (costs.size() != lattice.dim())
    throw std::invalid_argument("lattice_gap: cost dimension mismatch");
  for (const Rat& c : costs)
    if (sgn(c) <= 0)
      throw std::invalid_argument("lattice_gap: costs must be positive");
  if (!lattice.is_primitive())
    throw std::invalid_argument("lattice_gap: lattice determinant mismatch");
  auto pass = run_group_pass(lattice.weights, lattice.modulus, costs, caps);

  LatticeGapResult out;
  out.table.per_residue.resize(pass.modulus);
  bool first = true;
  for (size_t rho = 0; rho < pass.modulus; ++rho) {
    if (!pass.paths.reached[rho])
      throw std::logic_error("lattice_gap: unreachable residue class");
    out.table.per_residue[rho] =
        GroupEntry{pass.paths.dist[rho], group_witness(pass, rho, lattice.dim())};
    if (first || pass.paths.dist[rho] > out.gap) {
      out.gap = pass.paths.dist[rho];
      out.argmax_residue = Int(static_cast<unsigned long>(rho));
      first = false;
    }
  }
  return out;
}

CongruenceLattice projection_lattice(const IntVec& a) {
  if (a.size() < 2)
    throw std::invalid_argument("projection_lattice: need n >= 2");
  CongruenceLattice lattice;
  lattice.weights.assign(a.begin(), a.end() - 1);
  lattice.modulus = abs(a.back());
  return lattice;
}

Int gap_special(const IntVec& a, const Caps& caps) {
  for (const Int& x : a)
    if (sgn(x) <= 0)
      throw std::invalid_argument("gap_special: entries must be positive");
  if (gcd_vector(a) != 1)
    throw std::invalid_argument("gap_special: gcd must be 1");
  if (a.size() < 2) throw std::invalid_argument("gap_special: need n >= 2");
  RatVec costs;
  for (size_t i = 0; i + 1 < a.size(); ++i) costs.push_back(Rat(a[i]));
  auto result = lattice_gap(projection_lattice(a), costs, caps);
  assert(result.gap.get_den() == 1);
  return Int(result.gap.get_num());
}

Int default_scan_window(const IntVec& a, const Caps& caps) {
  return f_plus(a, caps);
}

GapScanResult gap_scan(const RatVec& costs, const KnapsackInstance& inst,
                       const Int& b_max, const Caps& caps) {
  require_cost_dim(costs, inst);
  if (b_max < 0) throw std::invalid_argument("gap_scan: negative window");
  if (b_max + 1 > static_cast<unsigned long>(caps.scan_iteration_cap))
    throw ScaleRefusal("gap_scan: window above iteration cap");

  GapScanResult out;
  out.max_gap = 0;
  out.argmax_b = -1;
  bool first = true;
  for (Int b = 0; b <= b_max; ++b) {
    KnapsackInstance shifted(inst.a(), b);
    if (!is_integer_feasible(shifted, caps)) continue;
    if (lp_value(costs, shifted).status != SolveStatus::Optimal) continue;
    auto report = integrality_gap(costs, shifted, caps);
    ++out.evaluated;
    if (first || report.gap > out.max_gap) {
      out.max_gap = report.gap;
      out.argmax_b = b;
      first = false;
    }
  }
  return out;
}

CoveringConstant covering_constant(unsigned d) {
  if (d < 1) throw std::invalid_argument("covering_constant: need d >= 1");
  if (d == 1) return CoveringConstant{1, Rat(1), true, "exact"};
  if (d == 2) return CoveringConstant{2, Rat(3), true, "exact: sqrt(3)"};
  Int fact = 1;
  for (unsigned i = 2; i <= d; ++i) fact *= i;
  return CoveringConstant{
      d, Rat(fact), false,
      "(d!)^(1/d) lower bound; exact value unknown for d >= 3"};
}

GenericGapBound generic_gap_lower_bound(const IntVec& a, const RatVec& costs,
                                        const Caps& caps) {
  (void)caps;
  for (const Int& x : a)
    if (sgn(x) <= 0)
      throw std::invalid_argument("generic_gap_lower_bound: entries must be positive");
  if (gcd_vector(a) != 1)
    throw std::invalid_argument("generic_gap_lower_bound: gcd must be 1");
  if (costs.size() != a.size())
    throw std::invalid_argument("generic_gap_lower_bound: dimension mismatch");
  if (a.size() < 2)
    throw std::invalid_argument("generic_gap_lower_bound: need n >= 2");

  GenericGapBound out;
  // the relaxation optimum for positive b sits on the unique argmin of c_i/a_i
  size_t tau = 0;
  bool tie = false;
  Rat best = costs[0] / Rat(a[0]);
  for (size_t i = 1; i < a.size(); ++i) {
    Rat r = costs[i] / Rat(a[i]);
    if (r < best) {
      best = r;
      tau = i;
      tie = false;
    } else if (r == best) {
      tie = true;
    }
  }
  if (tie) return out;  // non-generic: no bound

  out.generic = true;
  out.tau = tau;
  out.dual_slack = reduced_costs(costs, a, tau);

  unsigned d = static_cast<unsigned>(a.size() - 1);
  CoveringConstant rho = covering_constant(d);
  out.rho_exact = rho.exact;
  Rat radicand = rho.pow_d * Rat(a[tau]);
  for (const Rat& l : out.dual_slack) radicand *= l;
  out.term = RootVal{radicand, d};
  out.offset = l1_norm(out.dual_slack);
  return out;
}

}  // namespace knapgap
