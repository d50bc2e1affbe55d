#include "knapgap/knapsack.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "knapgap/detail/modular_paths.hpp"

namespace knapgap {

KnapsackInstance::KnapsackInstance(IntVec a, Int b)
    : a_(std::move(a)), b_(std::move(b)) {
  auto verdict = validate_knapsack_vector(a_);
  if (!verdict.ok) throw std::invalid_argument(verdict.message);
}

RatVec Vertex::point(size_t dim) const {
  RatVec p(dim, Rat(0));
  p[index] = value;
  return p;
}

std::vector<Vertex> vertices(const KnapsackInstance& inst) {
  std::vector<Vertex> out;
  if (inst.b() == 0) {
    out.push_back(Vertex{0, Rat(0)});
    return out;
  }
  for (size_t j = 0; j < inst.dim(); ++j) {
    Rat value = make_rat(inst.b(), inst.a()[j]);
    if (sgn(value) >= 0) out.push_back(Vertex{j, value});
  }
  return out;
}

Shape classify(const KnapsackInstance& inst) {
  int first = sign(inst.a()[0]);
  for (const Int& ai : inst.a())
    if (sign(ai) != first) return Shape::Unbounded;
  int sb = sign(inst.b());
  if (sb == 0 || sb == first) return Shape::Bounded;
  return Shape::Empty;
}

namespace {

size_t pivot_index(const IntVec& a) {
  size_t pivot = 0;
  Int best = abs(a[0]);
  for (size_t i = 1; i < a.size(); ++i) {
    Int cur = abs(a[i]);
    if (cur > best) {
      best = cur;
      pivot = i;
    }
  }
  return pivot;
}

// residue table of minimal semigroup elements mod the smallest generator
std::vector<Int> semigroup_table(const IntVec& positive, size_t* pivot_out,
                                 const Caps& caps) {
  size_t piv = 0;
  for (size_t i = 1; i < positive.size(); ++i)
    if (positive[i] < positive[piv]) piv = i;
  if (pivot_out) *pivot_out = piv;
  const Int& p = positive[piv];
  if (p > static_cast<unsigned long>(caps.residue_table_cap))
    throw ScaleRefusal("semigroup table: residue count above cap");
  size_t m = p.get_ui();
  std::vector<size_t> steps;
  std::vector<Int> costs;
  for (size_t i = 0; i < positive.size(); ++i) {
    if (i == piv) continue;
    steps.push_back(mod_nonneg(positive[i], p).get_ui());
    costs.push_back(positive[i]);
  }
  auto paths = detail::modular_shortest_paths<Int>(m, steps, costs);
  return paths.dist;  // gcd of all generators is 1, so every node is reached
}

}  // namespace

bool is_integer_feasible(const KnapsackInstance& inst, const Caps& caps) {
  Shape shape = classify(inst);
  if (shape == Shape::Empty) return false;
  if (shape == Shape::Unbounded) return true;  // mixed signs, gcd 1
  IntVec a = inst.a();
  Int b = inst.b();
  if (sign(a[0]) < 0) {
    for (Int& ai : a) ai = -ai;
    b = -b;
  }
  if (b == 0) return true;
  auto table = semigroup_table(a, nullptr, caps);
  Int p(static_cast<unsigned long>(table.size()));
  return table[mod_nonneg(b, p).get_ui()] <= b;
}

bool is_integer_feasible_oracle(const KnapsackInstance& inst,
                                const Caps& caps) {
  auto verts = vertices(inst);
  if (verts.empty()) return false;
  Int radius = inst.max_norm() - 1;
  auto fiber =
      enumerate_fiber_in_box(inst, verts.front().point(inst.dim()), radius, caps);
  return !fiber.points.empty();
}

std::optional<IntVec> semigroup_representation(const IntVec& a, const Int& b,
                                               const Caps& caps) {
  IntVec pos = a;
  Int rhs = b;
  bool all_neg = std::all_of(pos.begin(), pos.end(),
                             [](const Int& x) { return sgn(x) < 0; });
  if (all_neg) {
    for (Int& x : pos) x = -x;
    rhs = -rhs;
  }
  for (const Int& x : pos)
    if (sgn(x) <= 0)
      throw std::invalid_argument("semigroup_representation: entries must share a sign");
  if (rhs < 0) return std::nullopt;

  size_t piv = 0;
  for (size_t i = 1; i < pos.size(); ++i)
    if (pos[i] < pos[piv]) piv = i;
  const Int& p = pos[piv];
  if (p > static_cast<unsigned long>(caps.residue_table_cap))
    throw ScaleRefusal("semigroup_representation: residue count above cap");
  size_t m = p.get_ui();
  std::vector<size_t> steps;
  std::vector<Int> costs;
  std::vector<size_t> arc_index;  // arc -> coordinate
  for (size_t i = 0; i < pos.size(); ++i) {
    if (i == piv) continue;
    steps.push_back(mod_nonneg(pos[i], p).get_ui());
    costs.push_back(pos[i]);
    arc_index.push_back(i);
  }
  auto paths = detail::modular_shortest_paths<Int>(m, steps, costs);
  size_t rho = mod_nonneg(rhs, p).get_ui();
  if (paths.dist[rho] > rhs) return std::nullopt;
  auto counts = detail::arc_counts(paths, rho, steps.size());
  IntVec x(pos.size(), 0);
  for (size_t k = 0; k < counts.size(); ++k) x[arc_index[k]] = counts[k];
  x[piv] = (rhs - paths.dist[rho]) / p;
  assert(dot(pos, x) == rhs);
  return x;
}

FeasibleSet enumerate_fiber_in_box(const KnapsackInstance& inst,
                                   const RatVec& center, const Int& radius,
                                   const Caps& caps) {
  const size_t n = inst.dim();
  if (center.size() != n)
    throw std::invalid_argument("enumerate_fiber_in_box: center dimension mismatch");
  if (radius < 0)
    throw std::invalid_argument("enumerate_fiber_in_box: negative radius");

  FeasibleSet out;
  out.exhaustive = true;
  out.center = center;
  out.radius = radius;

  const size_t pivot = pivot_index(inst.a());
  IntVec lo(n), hi(n);
  Int volume = 1;
  for (size_t i = 0; i < n; ++i) {
    if (i == pivot) continue;
    lo[i] = ceil_rat(center[i] - Rat(radius));
    if (lo[i] < 0) lo[i] = 0;
    hi[i] = floor_rat(center[i] + Rat(radius));
    if (hi[i] < lo[i]) return out;  // empty range, empty fiber slice
    volume *= hi[i] - lo[i] + 1;
  }
  if (volume > static_cast<unsigned long>(caps.fiber_tuple_cap))
    throw ScaleRefusal("enumerate_fiber_in_box: " + to_decimal(volume) +
                       " candidate tuples exceed cap");

  IntVec x(lo);
  x[pivot] = 0;
  const Int& ap = inst.a()[pivot];
  while (true) {
    Int rem = inst.b();
    for (size_t i = 0; i < n; ++i)
      if (i != pivot) rem -= inst.a()[i] * x[i];
    if (mpz_divisible_p(rem.get_mpz_t(), ap.get_mpz_t())) {
      Int xp = rem / ap;
      if (xp >= 0) {
        Rat dist = rat_abs(Rat(xp) - center[pivot]);
        if (dist <= Rat(radius)) {
          x[pivot] = xp;
          out.points.push_back(x);
          x[pivot] = 0;
        }
      }
    }
    bool advanced = false;
    for (size_t i = n; i-- > 0;) {
      if (i == pivot) continue;
      if (x[i] < hi[i]) {
        x[i] += 1;
        advanced = true;
        break;
      }
      x[i] = lo[i];
    }
    if (!advanced) break;
  }
  std::sort(out.points.begin(), out.points.end());
  return out;
}

FeasibleSet enumerate_bounded_fiber(const KnapsackInstance& inst,
                                    const Caps& caps) {
  if (classify(inst) == Shape::Unbounded)
    throw std::invalid_argument("enumerate_bounded_fiber: unbounded polyhedron");
  IntVec a = inst.a();
  Int b = inst.b();
  if (sign(a[0]) < 0) {
    for (Int& ai : a) ai = -ai;
    b = -b;
  }
  FeasibleSet out;
  out.exhaustive = true;
  out.center.assign(inst.dim(), Rat(0));
  out.radius = 0;
  if (b < 0) return out;  // empty polyhedron

  Int amin = a[0];
  for (const Int& ai : a) amin = std::min(amin, ai);
  Int radius = floor_div(b, amin);
  out = enumerate_fiber_in_box(inst, RatVec(inst.dim(), Rat(0)), radius, caps);
  return out;
}

}  // namespace knapgap
