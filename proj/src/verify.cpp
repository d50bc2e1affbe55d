#include "knapgap/verify.hpp"

#include <numeric>
#include <random>

#include "knapgap/distance.hpp"
#include "knapgap/frobenius.hpp"
#include "knapgap/gaps.hpp"
#include "knapgap/knapsack.hpp"

namespace knapgap {

void for_each_primitive(size_t n, long max_norm, bool positive_only,
                        const std::function<void(const IntVec&)>& fn) {
  const long lo = positive_only ? 1 : -max_norm;
  std::vector<long> v(n, lo);
  IntVec a(n);
  while (true) {
    bool has_zero = false;
    for (long x : v)
      if (x == 0) has_zero = true;
    if (!has_zero) {
      long g = 0;
      for (long x : v) g = std::gcd(g, std::labs(x));
      if (g == 1) {
        for (size_t i = 0; i < n; ++i) a[i] = Int(v[i]);
        fn(a);
      }
    }
    bool advanced = false;
    for (size_t i = n; i-- > 0;) {
      if (v[i] < max_norm) {
        v[i] += 1;
        advanced = true;
        break;
      }
      v[i] = lo;
    }
    if (!advanced) break;
  }
}

SweepResult sweep_distance_bound(long max_norm, const std::vector<size_t>& dims,
                                 long b_range, unsigned long stride,
                                 const Caps& caps) {
  SweepResult r;
  r.name = "vertex distance <= max_norm - 1";
  unsigned long long cross_checked = 0;
  for (size_t n : dims) {
    for_each_primitive(n, max_norm, false, [&](const IntVec& a) {
      DistanceScanner scanner(a, caps);
      Rat bound(linf_norm(a) - 1);
      for (long b = -b_range; b <= b_range; ++b) {
        auto d = scanner.distance(Int(b));
        if (!d) continue;
        ++r.checked;
        if (*d > bound) ++r.violations;
        if (stride != 0 && r.checked % stride == 0) {
          ++cross_checked;
          auto ref = vertex_distance(KnapsackInstance(a, Int(b)), caps);
          if (!ref.value || *ref.value != *d) ++r.violations;
        }
      }
    });
  }
  r.pass = r.violations == 0;
  r.details = "cross-checked " + std::to_string(cross_checked) +
              " instances against the box search";
  return r;
}

SweepResult sweep_witness_equality(size_t n_max, long k_max, const Caps& caps) {
  SweepResult r;
  r.name = "witness family attains the distance bound";
  for (size_t n = 2; n <= n_max; ++n) {
    for (long k = 1; k <= k_max; ++k) {
      auto witness = tight_witness(n, Int(k));
      auto result = vertex_distance(witness.instance, caps);
      ++r.checked;
      if (!result.value || *result.value != Rat(witness.expected_distance))
        ++r.violations;
    }
  }
  r.pass = r.violations == 0;
  return r;
}

SweepResult sweep_l1_refinement(long max_norm, const std::vector<size_t>& dims,
                                long b_max, const Caps& caps) {
  SweepResult r;
  r.name = "l1 distance <= 2 (max_norm - 1) on bounded instances";
  // instances with all-negative a and b <= 0 describe the same polyhedra
  for (size_t n : dims) {
    for_each_primitive(n, max_norm, true, [&](const IntVec& a) {
      for (long b = 0; b <= b_max; ++b) {
        KnapsackInstance inst(a, Int(b));
        if (!is_integer_feasible(inst, caps)) continue;
        ++r.checked;
        if (!l1_nearest_check(inst, caps).ok) ++r.violations;
      }
    });
  }
  r.pass = r.violations == 0;
  return r;
}

SweepResult sweep_covering_identity(long max_norm, size_t n, const Caps& caps) {
  SweepResult r;
  r.name = "discrete covering radius identity";
  for_each_primitive(n, max_norm, true, [&](const IntVec& a) {
    ++r.checked;
    Int expected = frobenius_number(a, caps).g + a.back();
    if (discrete_radius_bruteforce(a, caps) != expected) ++r.violations;
  });
  r.pass = r.violations == 0;
  return r;
}

SweepResult sweep_sylvester(long limit, const Caps& caps) {
  SweepResult r;
  r.name = "two-generator closed form";
  for (long a1 = 1; a1 <= limit; ++a1) {
    for (long a2 = 1; a2 <= limit; ++a2) {
      if (std::gcd(a1, a2) != 1) continue;
      IntVec a{Int(a1), Int(a2)};
      ++r.checked;
      if (frobenius_number(a, caps).g != Int(a1) * Int(a2) - a1 - a2)
        ++r.violations;
    }
  }
  r.pass = r.violations == 0;
  return r;
}

SweepResult sweep_schur(long max_norm, size_t n_max, const Caps& caps) {
  SweepResult r;
  r.name = "product bound on the Frobenius number";
  for (size_t n = 2; n <= n_max; ++n) {
    for_each_primitive(n, max_norm, true, [&](const IntVec& a) {
      ++r.checked;
      if (frobenius_number(a, caps).g > schur_bound(a)) ++r.violations;
    });
  }
  r.pass = r.violations == 0;
  return r;
}

SweepResult sweep_gap_triangulation(long max_norm, size_t n, const Caps& caps) {
  SweepResult r;
  r.name = "special-cost gap triangulation";
  for_each_primitive(n, max_norm, true, [&](const IntVec& a) {
    ++r.checked;
    Int special = gap_special(a, caps);
    Int identity = frobenius_number(a, caps).g + a.back();
    Int brute = discrete_radius_bruteforce(a, caps);
    if (special != identity || special != brute) ++r.violations;
  });
  r.pass = r.violations == 0;
  return r;
}

namespace {

long draw_in(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

}  // namespace

GapSweepResults sweep_random_gaps(size_t samples, uint64_t seed, long max_norm,
                                  size_t n_max, long b_range, long c_limit,
                                  unsigned long stride, const Caps& caps) {
  GapSweepResults out;
  out.gap_bound.name = "integrality gap <= (max_norm - 1) |c|_1";
  out.distance_bound.name = "integrality gap <= d(a,b) |c|_1";

  std::mt19937_64 rng(seed);
  for (size_t s = 0; s < samples; ++s) {
    size_t n = 2 + static_cast<size_t>(rng() % (n_max - 1));
    IntVec a(n);
    while (true) {
      for (size_t i = 0; i < n; ++i) {
        long x = 0;
        while (x == 0) x = draw_in(rng, -max_norm, max_norm);
        a[i] = Int(x);
      }
      if (gcd_vector(a) == 1) break;
    }
    RatVec c(n);
    for (size_t i = 0; i < n; ++i)
      c[i] = make_rat(Int(draw_in(rng, -c_limit, c_limit)),
                      Int(draw_in(rng, 1, c_limit)));
    Int b(draw_in(rng, -b_range, b_range));

    KnapsackInstance inst(a, b);
    if (!is_integer_feasible(inst, caps)) continue;
    if (lp_value(c, inst).status != SolveStatus::Optimal) continue;

    auto report = integrality_gap(c, inst, caps);
    ++out.gap_bound.checked;
    if (report.gap > report.bound) ++out.gap_bound.violations;

    DistanceScanner scanner(a, caps);
    auto d = scanner.distance(b);
    ++out.distance_bound.checked;
    if (!d || report.gap > *d * l1_norm(c)) ++out.distance_bound.violations;

    if (stride != 0 && out.gap_bound.checked % stride == 0) {
      // route cross-checks: scanner vs box search, group route vs fiber min
      auto ref = vertex_distance(inst, caps);
      if (!ref.value || !d || *ref.value != *d) ++out.distance_bound.violations;
      if (classify(inst) == Shape::Bounded) {
        auto fiber = enumerate_bounded_fiber(inst, caps);
        Rat best;
        bool first = true;
        for (const IntVec& z : fiber.points) {
          Rat v = dot_rat(c, z);
          if (first || v < best) best = v;
          first = false;
        }
        if (first || best != report.ip.value) ++out.gap_bound.violations;
      }
    }
  }

  // equality family: a = (k,...,k,1), b = k - 1, unit cost on the last
  // coordinate gives gap (k-1) |c|_1 exactly
  unsigned long long equality_checked = 0;
  for (size_t n = 2; n <= 5; ++n) {
    for (long k = 1; k <= 10; ++k) {
      auto witness = tight_witness(n, Int(k));
      RatVec c(n, Rat(0));
      c[n - 1] = 1;
      auto report = integrality_gap(c, witness.instance, caps);
      ++out.gap_bound.checked;
      ++equality_checked;
      if (report.gap != report.bound || report.gap != Rat(Int(k) - 1))
        ++out.gap_bound.violations;
    }
  }
  out.gap_bound.details =
      "includes " + std::to_string(equality_checked) + " equality-family instances";
  out.gap_bound.pass = out.gap_bound.violations == 0;
  out.distance_bound.pass = out.distance_bound.violations == 0;
  return out;
}

SweepResult sweep_rho_bound(long max_norm, const Caps& caps) {
  SweepResult r;
  r.name = "covering-constant lower bound on lattice gaps";

  // two generators: the dimension-1 bound holds with equality
  for_each_primitive(2, max_norm, true, [&](const IntVec& a) {
    CongruenceLattice lattice = projection_lattice(a);
    RatVec costs{Rat(a[0])};
    auto lg = lattice_gap(lattice, costs, caps);
    ++r.checked;
    if (lg.gap != Rat(a[0]) * Rat(a[1] - 1)) ++r.violations;
  });

  // three generators: exact sqrt(3) comparison via squared cross terms
  for_each_primitive(3, max_norm, true, [&](const IntVec& a) {
    CongruenceLattice lattice = projection_lattice(a);
    RatVec costs{Rat(a[0]), Rat(a[1])};
    auto lg = lattice_gap(lattice, costs, caps);
    Rat offset = costs[0] + costs[1];
    RootVal term{Rat(3) * Rat(lattice.modulus) * costs[0] * costs[1], 2};
    ++r.checked;
    if (term.compare(lg.gap + offset) > 0) ++r.violations;
  });

  // attained example: two generators, unit slack
  {
    IntVec a{3, 5};
    RatVec c{Rat(1), Rat(0)};
    auto bound = generic_gap_lower_bound(a, c, caps);
    CongruenceLattice lattice{{Int(3)}, Int(5)};
    auto lg = lattice_gap(lattice, bound.dual_slack, caps);
    ++r.checked;
    bool ok = bound.generic && bound.rho_exact && bound.tau == 1 &&
              lg.gap == Rat(4) && bound.compare(Rat(4)) == 0;
    KnapsackInstance inst(a, Int(0));
    auto scan = gap_scan(c, inst, default_scan_window(a, caps), caps);
    ok = ok && scan.max_gap == Rat(4);
    if (!ok) ++r.violations;
  }

  r.pass = r.violations == 0;
  return r;
}

std::pair<SweepResult, TailReport> sweep_tail(size_t n, long H, const Rat& eps,
                                              size_t samples, uint64_t seed,
                                              const Caps& caps) {
  SweepResult r;
  r.name = "tail frequencies decay under the fitted reference";

  SampleSpec spec;
  spec.n = n;
  spec.H = Int(H);
  spec.sample_count = samples;
  spec.seed = seed;
  spec.epsilon = eps;
  spec.mode = SampleMode::MonteCarlo;

  auto records = run_experiment(spec, caps);
  auto report = tail_ratio_from_records(spec, records, default_tail_grid(), false);

  for (const auto& rec : records) {
    ++r.checked;
    if (rec.d_max > Rat(linf_norm(rec.a) - 1)) ++r.violations;
  }

  // exact comparisons: ratio(t)^q * t^p <= C^q * t0^p with alpha = p/q
  unsigned long q = report.alpha.get_den().get_ui();
  unsigned long p = report.alpha.get_num().get_ui();
  const Rat rhs = rat_pow(report.fitted_c, q) * rat_pow(report.fitted_at, p);
  for (size_t i = 0; i < report.rows.size(); ++i) {
    const auto& row = report.rows[i];
    ++r.checked;
    if (row.ratio > 1) ++r.violations;
    if (i > 0 && row.ratio > report.rows[i - 1].ratio) ++r.violations;
    if (rat_pow(row.ratio, q) * rat_pow(row.t, p) > rhs) ++r.violations;
  }
  r.pass = r.violations == 0;
  r.details = "population " + std::to_string(report.population);
  return {r, report};
}

SweepResult sweep_proof_construction(long max_norm,
                                     const std::vector<size_t>& dims,
                                     long b_range, const Caps& caps) {
  SweepResult r;
  r.name = "constructive point finder honors its contract";
  for (size_t n : dims) {
    for_each_primitive(n, max_norm, false, [&](const IntVec& a) {
      for (long b = -b_range; b <= b_range; ++b) {
        KnapsackInstance inst(a, Int(b));
        if (!is_integer_feasible(inst, caps)) continue;
        for (const Vertex& v : vertices(inst)) {
          ++r.checked;
          try {
            IntVec z = proof_guided_point(inst, v, caps);
            Rat dist(0);
            RatVec vp = v.point(n);
            for (size_t i = 0; i < n; ++i) {
              Rat c = rat_abs(Rat(z[i]) - vp[i]);
              if (c > dist) dist = c;
            }
            auto nearest = nearest_feasible_linf(inst, v, caps);
            if (nearest.distance > dist) ++r.violations;
          } catch (const std::logic_error&) {
            ++r.violations;
          }
        }
      }
    });
  }
  r.pass = r.violations == 0;
  return r;
}

std::vector<SweepResult> run_verify(bool full, uint64_t seed, const Caps& caps) {
  std::vector<SweepResult> out;
  if (full) {
    out.push_back(sweep_distance_bound(12, {2, 3}, 40, 997, caps));
    out.push_back(sweep_witness_equality(5, 10, caps));
    out.push_back(sweep_l1_refinement(12, {2, 3}, 40, caps));
    out.push_back(sweep_covering_identity(25, 3, caps));
    out.push_back(sweep_sylvester(200, caps));
    out.push_back(sweep_schur(20, 4, caps));
    out.push_back(sweep_gap_triangulation(25, 3, caps));
    auto gaps = sweep_random_gaps(10000, seed, 15, 4, 40, 10, 211, caps);
    out.push_back(gaps.gap_bound);
    out.push_back(gaps.distance_bound);
    out.push_back(sweep_rho_bound(25, caps));
    out.push_back(sweep_tail(3, 30, make_rat(1, 2), 10000, seed, caps).first);
    out.push_back(sweep_proof_construction(6, {2, 3}, 20, caps));
  } else {
    out.push_back(sweep_distance_bound(6, {2, 3}, 20, 211, caps));
    out.push_back(sweep_witness_equality(4, 6, caps));
    out.push_back(sweep_l1_refinement(6, {2, 3}, 20, caps));
    out.push_back(sweep_covering_identity(12, 3, caps));
    out.push_back(sweep_sylvester(60, caps));
    out.push_back(sweep_schur(10, 3, caps));
    out.push_back(sweep_gap_triangulation(12, 3, caps));
    auto gaps = sweep_random_gaps(500, seed, 10, 3, 30, 10, 97, caps);
    out.push_back(gaps.gap_bound);
    out.push_back(gaps.distance_bound);
    out.push_back(sweep_rho_bound(12, caps));
    out.push_back(sweep_tail(3, 8, make_rat(1, 2), 400, seed, caps).first);
    out.push_back(sweep_proof_construction(5, {2, 3}, 12, caps));
  }
  return out;
}

std::string format_sweep(const SweepResult& result) {
  std::string line = result.pass ? "[PASS] " : "[FAIL] ";
  line += result.name;
  line += ": checked=" + std::to_string(result.checked);
  line += " violations=" + std::to_string(result.violations);
  if (!result.details.empty()) line += " (" + result.details + ")";
  return line;
}

}  // namespace knapgap
