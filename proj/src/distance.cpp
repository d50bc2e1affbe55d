#include "knapgap/distance.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "knapgap/detail/modular_paths.hpp"
#include "knapgap/frobenius.hpp"

namespace knapgap {

namespace {

IntVec drop_coord(const IntVec& v, size_t i) {
  IntVec out;
  out.reserve(v.size() - 1);
  for (size_t k = 0; k < v.size(); ++k)
    if (k != i) out.push_back(v[k]);
  return out;
}

IntVec insert_coord(const IntVec& v, size_t i, Int val) {
  IntVec out;
  out.reserve(v.size() + 1);
  for (size_t k = 0; k < i; ++k) out.push_back(v[k]);
  out.push_back(std::move(val));
  for (size_t k = i; k < v.size(); ++k) out.push_back(v[k]);
  return out;
}

// Group-relaxation route for one-signed (positive) vectors: minimal
// weighted value in the residue class of b mod a_j lifts to a feasible
// point whenever that value is <= b; otherwise any semigroup
// representation of b stays within the bound because the whole polytope
// does.
IntVec positive_case_point(const IntVec& a, const Int& b, size_t j,
                           const Caps& caps) {
  const size_t n = a.size();
  const Int& aj = a[j];
  if (aj > static_cast<unsigned long>(caps.residue_table_cap))
    throw ScaleRefusal("proof_guided_point: residue count above cap");
  size_t m = aj.get_ui();
  std::vector<size_t> steps;
  std::vector<Int> costs;
  std::vector<size_t> coord;
  for (size_t i = 0; i < n; ++i) {
    if (i == j) continue;
    steps.push_back(mod_nonneg(a[i], aj).get_ui());
    costs.push_back(a[i]);
    coord.push_back(i);
  }
  auto paths = detail::modular_shortest_paths<Int>(m, steps, costs);
  size_t rho = mod_nonneg(b, aj).get_ui();
  if (paths.dist[rho] <= b) {
    auto counts = detail::arc_counts(paths, rho, steps.size());
    IntVec z(n, 0);
    for (size_t k = 0; k < counts.size(); ++k) z[coord[k]] = counts[k];
    z[j] = (b - paths.dist[rho]) / aj;
    return z;
  }
  auto rep = semigroup_representation(a, b, caps);
  if (!rep) throw std::logic_error("positive_case_point: infeasible input");
  return *rep;
}

// Lexicographically smallest s >= 0 with sum(s) <= an - 1 and
// weights.(base + s) == b (mod an). Exists by the discrete covering of
// Z^{d} by the (an-1)-dilated standard simplex.
IntVec covering_simplex_point(const IntVec& weights, const Int& an,
                              const IntVec& base, const Int& b) {
  const size_t d = weights.size();
  Int budget = an - 1;
  IntVec s(d, 0);
  Int used = 0;
  Int base_dot = dot(weights, base);
  while (true) {
    if (mod_nonneg(base_dot + dot(weights, s) - b, an) == 0) {
      IntVec y(d);
      for (size_t i = 0; i < d; ++i) y[i] = base[i] + s[i];
      return y;
    }
    bool advanced = false;
    for (size_t i = d; i-- > 0;) {
      if (used < budget) {
        s[i] += 1;
        used += 1;
        advanced = true;
        break;
      }
      used -= s[i];
      s[i] = 0;
    }
    if (!advanced) break;
  }
  throw std::logic_error("covering_simplex_point: no class point in the simplex");
}

// Largest t <= hi with h | t and t == b (mod an); requires gcd(h, an) = 1.
Int transfer_rhs(const Int& hi, const Int& h, const Int& an, const Int& b) {
  auto k0 = solve_congruence(h, b, an);
  if (!k0) throw std::logic_error("transfer_rhs: moduli not coprime");
  Int t0 = h * *k0;  // one solution of the pair of congruences
  Int period = h * an;
  return hi - mod_nonneg(hi - t0, period);
}

// Deterministic vertex pick for P(weights, t): preferred index if valid,
// else the lowest index with t / weights_i >= 0.
size_t choose_vertex(const IntVec& weights, const Int& t, size_t prefer) {
  if (t == 0) return 0;
  int st = sgn(t);
  if (prefer != static_cast<size_t>(-1) && sign(weights[prefer]) == st)
    return prefer;
  for (size_t i = 0; i < weights.size(); ++i)
    if (sign(weights[i]) == st) return i;
  throw std::logic_error("choose_vertex: no vertex for the transfer target");
}

IntVec proof_point_rec(IntVec a, Int b, size_t j, const Caps& caps) {
  const size_t n = a.size();
  if (b == 0) return IntVec(n, 0);
  if (n == 1) {
    assert(abs(a[0]) == 1);
    Int q = b * a[0];  // b / a[0] for a unit entry
    assert(q > 0);
    return IntVec{q};
  }
  bool has_pos = false, has_neg = false;
  for (const Int& x : a) (sgn(x) > 0 ? has_pos : has_neg) = true;

  if (!(has_pos && has_neg)) {
    if (!has_pos) {
      for (Int& x : a) x = -x;
      b = -b;
    }
    assert(b > 0);
    return positive_case_point(a, b, j, caps);
  }

  // mixed signs: normalize the smallest-magnitude entry to be positive and
  // move it to the back
  size_t p = 0;
  for (size_t i = 1; i < n; ++i)
    if (abs(a[i]) < abs(a[p])) p = i;
  if (sgn(a[p]) < 0) {
    for (Int& x : a) x = -x;
    b = -b;  // same polyhedron, same vertices
  }
  Int max_norm = linf_norm(a);
  if (abs(a[p]) == max_norm) {
    // every |a_i| = 1: the vertex itself is integral
    IntVec z(n, 0);
    z[j] = b / a[j];
    assert(z[j] * a[j] == b && z[j] >= 0);
    return z;
  }

  std::vector<size_t> order;
  order.reserve(n);
  for (size_t i = 0; i < n; ++i)
    if (i != p) order.push_back(i);
  order.push_back(p);
  IntVec ap(n);
  for (size_t k = 0; k < n; ++k) ap[k] = a[order[k]];
  size_t jp = 0;
  while (order[jp] != j) ++jp;

  const size_t m = n - 1;
  const Int an = ap[m];  // smallest magnitude, positive
  IntVec pi(ap.begin(), ap.end() - 1);

  bool pi_all_neg = true;
  for (const Int& x : pi)
    if (sgn(x) > 0) pi_all_neg = false;

  IntVec zp;
  if (pi_all_neg) {
    // projection bounded or empty: one covering-simplex step suffices
    IntVec base(m, 0);
    if (b > 0) {
      assert(jp == m);
    } else {
      assert(jp < m);
      base[jp] = ceil_rat(make_rat(b, pi[jp]));
    }
    IntVec y = covering_simplex_point(pi, an, base, b);
    Int last = b - dot(pi, y);
    assert(mpz_divisible_p(last.get_mpz_t(), an.get_mpz_t()));
    last /= an;
    zp = y;
    zp.push_back(last);
  } else {
    Int h = gcd_vector(pi);
    if (jp < m) {
      if (mpz_divisible_p(b.get_mpz_t(), h.get_mpz_t())) {
        IntVec child(m);
        for (size_t i = 0; i < m; ++i) child[i] = pi[i] / h;
        zp = proof_point_rec(child, b / h, jp, caps);
        zp.push_back(Int(0));
      } else {
        Int t = transfer_rhs(b - 1, h, an, b);
        assert(t > b - h * an && t < b);
        size_t q = choose_vertex(pi, t, jp);
        IntVec child(m);
        for (size_t i = 0; i < m; ++i) child[i] = pi[i] / h;
        zp = proof_point_rec(child, t / h, q, caps);
        zp.push_back((b - t) / an);
      }
    } else {
      // vertex sits on the transferred coordinate; b > 0 here
      if (max_norm == h) {
        size_t ipos = 0;
        while (sgn(pi[ipos]) <= 0) ++ipos;
        IntVec child = drop_coord(ap, ipos);
        assert(gcd_vector(child) == 1);
        zp = proof_point_rec(child, b, m - 1, caps);
        zp = insert_coord(zp, ipos, Int(0));
      } else {
        Int t = transfer_rhs(Int(0), h, an, b);
        assert(t > -h * an && t <= 0);
        size_t q = choose_vertex(pi, t, static_cast<size_t>(-1));
        IntVec child(m);
        for (size_t i = 0; i < m; ++i) child[i] = pi[i] / h;
        zp = proof_point_rec(child, t / h, q, caps);
        zp.push_back((b - t) / an);
      }
    }
  }

  IntVec z(n);
  for (size_t k = 0; k < n; ++k) z[order[k]] = zp[k];
  return z;
}

}  // namespace

VertexDistance nearest_feasible_linf(const KnapsackInstance& inst,
                                     const Vertex& v, const Caps& caps) {
  if (!is_integer_feasible(inst, caps))
    throw std::invalid_argument(
        "nearest_feasible_linf: no feasible integer point (distance is -inf)");
  Int radius = inst.max_norm() - 1;
  auto fiber = enumerate_fiber_in_box(inst, v.point(inst.dim()), radius, caps);
  if (fiber.points.empty())
    throw std::logic_error("nearest_feasible_linf: certified box is empty");

  VertexDistance out{v, fiber.points.front(), Rat(0)};
  bool first = true;
  RatVec vp = v.point(inst.dim());
  for (const IntVec& z : fiber.points) {
    Rat dist(0);
    for (size_t i = 0; i < z.size(); ++i) {
      Rat c = rat_abs(Rat(z[i]) - vp[i]);
      if (c > dist) dist = c;
    }
    if (first || dist < out.distance) {  // points are lex sorted: ties keep
      out.nearest = z;                   // the lexicographically smallest
      out.distance = dist;
      first = false;
    }
  }
  return out;
}

DistanceResult vertex_distance(const KnapsackInstance& inst, const Caps& caps) {
  DistanceResult out;
  if (!is_integer_feasible(inst, caps)) return out;  // -inf
  Rat best(0);
  bool first = true;
  for (const Vertex& v : vertices(inst)) {
    auto vd = nearest_feasible_linf(inst, v, caps);
    if (first || vd.distance > best) best = vd.distance;
    first = false;
    out.per_vertex.push_back(std::move(vd));
  }
  out.value = best;
  return out;
}

IntVec proof_guided_point(const KnapsackInstance& inst, const Vertex& v,
                          const Caps& caps) {
  if (!is_integer_feasible(inst, caps))
    throw std::invalid_argument("proof_guided_point: infeasible instance");
  IntVec z = proof_point_rec(inst.a(), inst.b(), v.index, caps);

  // verify the output contract rather than trusting the construction
  Int residual = inst.b() - dot(inst.a(), z);
  bool feasible = residual == 0;
  for (const Int& x : z)
    if (sgn(x) < 0) feasible = false;
  RatVec vp = v.point(inst.dim());
  Rat dist(0);
  for (size_t i = 0; i < z.size(); ++i) {
    Rat c = rat_abs(Rat(z[i]) - vp[i]);
    if (c > dist) dist = c;
  }
  if (!feasible || dist > Rat(inst.max_norm() - 1))
    throw std::logic_error("proof_guided_point: construction violated its contract");
  return z;
}

L1Check l1_nearest_check(const KnapsackInstance& inst, const Caps& caps) {
  if (classify(inst) == Shape::Unbounded)
    throw std::invalid_argument("l1_nearest_check: instance must be bounded");
  if (!is_integer_feasible(inst, caps))
    throw std::invalid_argument("l1_nearest_check: infeasible instance");
  auto fiber = enumerate_bounded_fiber(inst, caps);
  assert(!fiber.points.empty());

  L1Check out{Rat(0), 2 * (inst.max_norm() - 1), true, 0};
  bool first = true;
  for (const Vertex& v : vertices(inst)) {
    RatVec vp = v.point(inst.dim());
    Rat best(0);
    bool bfirst = true;
    for (const IntVec& z : fiber.points) {
      Rat dist(0);
      for (size_t i = 0; i < z.size(); ++i) dist += rat_abs(Rat(z[i]) - vp[i]);
      if (bfirst || dist < best) best = dist;
      bfirst = false;
    }
    if (first || best > out.value) {
      out.value = best;
      out.argmax = v.index;
    }
    first = false;
  }
  out.ok = out.value <= Rat(out.bound);
  return out;
}

TightWitness tight_witness(size_t n, const Int& k) {
  if (n < 2) throw std::invalid_argument("tight_witness: need n >= 2");
  if (k < 1) throw std::invalid_argument("tight_witness: need k >= 1");
  IntVec a(n, k);
  a.back() = 1;
  return TightWitness{KnapsackInstance(std::move(a), k - 1), k - 1};
}

ReferenceBounds reference_bounds(const IntVec& a) {
  auto verdict = validate_knapsack_vector(a);
  if (!verdict.ok) throw std::invalid_argument(verdict.message);
  Int max_norm = linf_norm(a);
  return ReferenceBounds{Int(a.size()) * max_norm, 2 * max_norm + 1,
                         max_norm - 1};
}

DistanceScanner::DistanceScanner(IntVec a, const Caps& caps)
    : a_(std::move(a)) {
  auto verdict = validate_knapsack_vector(a_);
  if (!verdict.ok) throw std::invalid_argument(verdict.message);
  work_ = a_;
  bool has_pos = false, has_neg = false;
  for (const Int& x : work_) (sgn(x) > 0 ? has_pos : has_neg) = true;
  if (!has_pos) {
    for (Int& x : work_) x = -x;
    negated_ = true;
  }
  all_positive_ = !(has_pos && has_neg);
  max_norm_ = linf_norm(work_);
  const size_t n = work_.size();

  if (all_positive_) {
    auto frob = frobenius_number(work_, caps);
    apery_ = std::move(frob.apery);
    apery_mod_ = work_[frob.pivot];
  }

  Int range = max_norm_;  // candidate coordinates live in [0, max_norm - 1]
  Int count = Int(n);
  for (size_t i = 0; i + 1 < n; ++i) count *= range;
  if (count > static_cast<unsigned long>(caps.scanner_candidate_cap))
    throw ScaleRefusal("DistanceScanner: candidate volume above cap");

  tables_.resize(n);
  for (size_t j = 0; j < n; ++j) {
    VertexTable& tbl = tables_[j];
    tbl.side_le = sgn(work_[j]) > 0;
    tbl.modulus = abs(work_[j]);
    size_t mod_sz = tbl.modulus.get_ui();
    tbl.by_residue.assign(mod_sz, {});

    IntVec weights;
    for (size_t i = 0; i < n; ++i)
      if (i != j) weights.push_back(work_[i]);
    const size_t d = n - 1;
    IntVec x(d, 0);
    Int val = 0;
    const Int hi = max_norm_ - 1;
    while (true) {
      Int lf = linf_norm(x);
      Rat obj = Rat(lf);
      Rat centered = make_rat(abs(val), tbl.modulus);
      if (centered > obj) obj = centered;
      size_t rho = mod_nonneg(val, tbl.modulus).get_ui();
      tbl.by_residue[rho].push_back(Entry{val, obj});

      bool advanced = false;
      for (size_t i = d; i-- > 0;) {
        if (x[i] < hi) {
          x[i] += 1;
          val += weights[i];
          advanced = true;
          break;
        }
        val -= weights[i] * x[i];
        x[i] = 0;
      }
      if (!advanced) break;
    }

    for (auto& bucket : tbl.by_residue) {
      std::sort(bucket.begin(), bucket.end(),
                [](const Entry& l, const Entry& r) { return l.value < r.value; });
      if (tbl.side_le) {
        for (size_t i = 1; i < bucket.size(); ++i)
          if (bucket[i - 1].best < bucket[i].best)
            bucket[i].best = bucket[i - 1].best;
      } else {
        for (size_t i = bucket.size(); i-- > 1;)
          if (bucket[i].best < bucket[i - 1].best)
            bucket[i - 1].best = bucket[i].best;
      }
    }
  }
}

std::optional<Rat> DistanceScanner::distance(const Int& b) const {
  Int bb = negated_ ? Int(-b) : b;
  if (all_positive_) {
    if (sgn(bb) < 0) return std::nullopt;
    if (bb == 0) return Rat(0);
    size_t rho = mod_nonneg(bb, apery_mod_).get_ui();
    if (apery_[rho] > bb) return std::nullopt;
  } else if (bb == 0) {
    return Rat(0);
  }

  const int sb = sgn(bb);
  Rat dmax(0);
  for (size_t j = 0; j < work_.size(); ++j) {
    if (sign(work_[j]) != sb) continue;  // b / a_j < 0: not a vertex
    const VertexTable& tbl = tables_[j];
    size_t rho = mod_nonneg(bb, tbl.modulus).get_ui();
    const auto& bucket = tbl.by_residue[rho];
    const Rat* dj = nullptr;
    if (tbl.side_le) {
      auto it = std::upper_bound(
          bucket.begin(), bucket.end(), bb,
          [](const Int& lhs, const Entry& e) { return lhs < e.value; });
      if (it != bucket.begin()) dj = &std::prev(it)->best;
    } else {
      auto it = std::lower_bound(
          bucket.begin(), bucket.end(), bb,
          [](const Entry& e, const Int& rhs) { return e.value < rhs; });
      if (it != bucket.end()) dj = &it->best;
    }
    if (dj == nullptr)
      throw std::logic_error("DistanceScanner: no candidate for a feasible rhs");
    if (*dj > dmax) dmax = *dj;
  }
  return dmax;
}

}  // namespace knapgap
