#include "knapgap/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cmath>
#include <fstream>
#include <functional>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

#include "knapgap/distance.hpp"
#include "knapgap/frobenius.hpp"
#include "knapgap/gaps.hpp"

namespace knapgap {

namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

uint64_t sample_seed(uint64_t seed, size_t index) {
  return splitmix64(seed ^ splitmix64(static_cast<uint64_t>(index) + 1));
}

void validate_spec(const SampleSpec& spec, bool tail) {
  if (spec.n < 2) throw std::invalid_argument("SampleSpec: need n >= 2");
  if (spec.H < 1) throw std::invalid_argument("SampleSpec: need H >= 1");
  if (tail) {
    if (spec.n < 3)
      throw std::invalid_argument("SampleSpec: tail statistics need n >= 3");
    if (sgn(spec.epsilon) <= 0 || spec.epsilon >= make_rat(3, 4))
      throw std::invalid_argument("SampleSpec: epsilon must lie in (0, 3/4)");
  }
}

bool use_exhaustive(const SampleSpec& spec, const Caps& caps) {
  if (spec.mode == SampleMode::Exhaustive) return true;
  if (spec.mode == SampleMode::MonteCarlo) return false;
  Int lattice_points = int_pow(2 * spec.H + 1, static_cast<unsigned long>(spec.n));
  return lattice_points <= static_cast<unsigned long>(caps.exhaustive_sample_cap);
}

// deterministic draw in [-H, H] \ {0}; modulo bias is negligible for the
// experiment scale and keeps the generator implementation-independent
long draw_coordinate(std::mt19937_64& rng, long H) {
  while (true) {
    long v = static_cast<long>(rng() % static_cast<uint64_t>(2 * H + 1)) - H;
    if (v != 0) return v;
  }
}

void parallel_for(size_t count, unsigned workers,
                  const std::function<void(size_t)>& body) {
  if (workers <= 1 || count < 2) {
    for (size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= count) break;
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next.store(count);
          break;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::vector<IntVec> sample_Q(const SampleSpec& spec, const Caps& caps) {
  validate_spec(spec, false);
  std::vector<IntVec> out;
  if (use_exhaustive(spec, caps)) {
    if (!spec.H.fits_slong_p())
      throw ScaleRefusal("sample_Q: H too large for exhaustive enumeration");
    long H = spec.H.get_si();
    IntVec v(spec.n, Int(-H));
    while (true) {
      bool zero = false;
      for (const Int& x : v)
        if (x == 0) zero = true;
      if (!zero && gcd_vector(v) == 1) out.push_back(v);
      size_t i = spec.n;
      bool advanced = false;
      while (i-- > 0) {
        if (v[i] < H) {
          v[i] += 1;
          advanced = true;
          break;
        }
        v[i] = -H;
      }
      if (!advanced) break;
    }
    return out;
  }

  if (!spec.H.fits_slong_p())
    throw ScaleRefusal("sample_Q: H too large for sampling");
  long H = spec.H.get_si();
  out.reserve(spec.sample_count);
  for (size_t idx = 0; idx < spec.sample_count; ++idx) {
    std::mt19937_64 rng(sample_seed(spec.seed, idx));
    IntVec v(spec.n);
    while (true) {
      for (size_t i = 0; i < spec.n; ++i) v[i] = Int(draw_coordinate(rng, H));
      if (gcd_vector(v) == 1) break;
    }
    out.push_back(v);
  }
  return out;
}

DistanceScan max_distance_over_b(const IntVec& a, const Int& window_override,
                                 const Caps& caps) {
  DistanceScan out;
  out.window = window_override >= 0 ? window_override
                                    : f_plus(a, caps) + l1_norm(a);
  if (2 * out.window + 1 > static_cast<unsigned long>(caps.scan_iteration_cap))
    throw ScaleRefusal("max_distance_over_b: window above iteration cap");

  DistanceScanner scanner(a, caps);
  bool first = true;
  for (Int b = -out.window; b <= out.window; ++b) {
    auto d = scanner.distance(b);
    if (!d) continue;
    if (first || *d > out.d_max) {
      out.d_max = *d;
      out.argmax_b = b;
      first = false;
    }
  }
  assert(!first);  // b = 0 is always feasible for a primitive vector
  return out;
}

std::vector<ExperimentRecord> run_experiment(const SampleSpec& spec,
                                             const Caps& caps) {
  validate_spec(spec, false);
  bool exhaustive = use_exhaustive(spec, caps);
  auto samples = sample_Q(spec, caps);
  std::vector<ExperimentRecord> records(samples.size());

  parallel_for(samples.size(), caps.workers, [&](size_t i) {
    const IntVec& a = samples[i];
    ExperimentRecord rec;
    rec.a = a;
    rec.eps = spec.epsilon;
    auto scan = max_distance_over_b(a, spec.window_override, caps);
    rec.d_max = scan.d_max;
    rec.b_argmax = scan.argmax_b;
    rec.f_plus = f_plus(a, caps);
    Int max_norm = linf_norm(a);
    rec.normalized = scaled_power_ratio(rec.d_max, max_norm, spec.epsilon);
    rec.upper_proxy = rec.normalized;
    bool all_pos = true;
    for (const Int& x : a)
      if (sgn(x) <= 0) all_pos = false;
    if (all_pos) {
      Int special = gap_special(a, caps);  // g(a) + a_n
      Int cost_l1 = l1_norm(a) - a.back();
      rec.lower_witness =
          scaled_power_ratio(make_rat(special, cost_l1), max_norm, spec.epsilon);
    }
    rec.seed_path = (exhaustive ? "exhaustive:" : std::to_string(spec.seed) + ":") +
                    std::to_string(i);
    records[i] = std::move(rec);
  });
  return records;
}

TailReport tail_ratio_from_records(const SampleSpec& spec,
                                   const std::vector<ExperimentRecord>& records,
                                   const std::vector<Rat>& t_grid,
                                   bool exhaustive) {
  if (t_grid.empty()) throw std::invalid_argument("tail_ratio: empty grid");
  TailReport report;
  report.population = records.size();
  report.exhaustive = exhaustive;
  report.alpha = make_rat(Int(spec.n) - 2, 1) /
                 ((Rat(1) - spec.epsilon) * Rat(static_cast<unsigned long>(spec.n)));
  report.window_note =
      "tail counts use the certified scan window, hence lower-estimate the "
      "all-b statistic";

  std::vector<Rat> grid = t_grid;
  std::sort(grid.begin(), grid.end());
  Rat N(static_cast<unsigned long>(records.size()));
  for (const Rat& t : grid) {
    unsigned long count = 0;
    for (const auto& rec : records)
      if (rec.normalized > t) ++count;
    TailRow row;
    row.t = t;
    row.ratio = make_rat(Int(count), Int(records.size()));
    report.rows.push_back(row);
  }
  report.fitted_at = grid.front();
  report.fitted_c = report.rows.front().ratio;
  double alpha = report.alpha.get_d();
  double c = report.fitted_c.get_d() * std::pow(report.fitted_at.get_d(), alpha);
  for (auto& row : report.rows)
    row.reference = c * std::pow(row.t.get_d(), -alpha);
  return report;
}

TailReport tail_ratio(const SampleSpec& spec, const std::vector<Rat>& t_grid,
                      const Caps& caps) {
  validate_spec(spec, true);
  auto records = run_experiment(spec, caps);
  return tail_ratio_from_records(spec, records, t_grid,
                                 use_exhaustive(spec, caps));
}

AverageReport avg_normalized_gap(const SampleSpec& spec, const Caps& caps) {
  validate_spec(spec, false);
  if (spec.n < 3)
    throw std::invalid_argument("avg_normalized_gap: need n >= 3");
  auto records = run_experiment(spec, caps);
  AverageReport report{0.0, 0.0, records.size(), 0};
  if (records.empty()) return report;
  double upper = 0.0, lower = 0.0;
  for (const auto& rec : records) {
    upper += rec.upper_proxy.to_double();
    if (rec.lower_witness) {
      lower += rec.lower_witness->to_double();
      ++report.positive_population;
    }
  }
  report.upper_proxy_mean = upper / static_cast<double>(records.size());
  report.lower_witness_mean =
      report.positive_population
          ? lower / static_cast<double>(report.positive_population)
          : 0.0;
  return report;
}

namespace {

std::string join_vector(const IntVec& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ';';
    out += to_decimal(v[i]);
  }
  return out;
}

}  // namespace

std::string render_csv(const std::vector<ExperimentRecord>& records) {
  std::string out =
      "a,b_argmax,Dmax,f_plus,eps,normalized,upper_proxy,lower_witness,seed\n";
  for (const auto& rec : records) {
    out += join_vector(rec.a);
    out += ',';
    out += to_decimal(rec.b_argmax);
    out += ',';
    out += to_decimal(rec.d_max);
    out += ',';
    out += to_decimal(rec.f_plus);
    out += ',';
    out += to_decimal(rec.eps);
    out += ',';
    out += rec.normalized.decimal();
    out += ',';
    out += rec.upper_proxy.decimal();
    out += ',';
    out += rec.lower_witness ? rec.lower_witness->decimal() : std::string();
    out += ',';
    out += rec.seed_path;
    out += '\n';
  }
  return out;
}

void emit_csv(const std::vector<ExperimentRecord>& records,
              const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("emit_csv: cannot open " + path);
  file << render_csv(records);
  if (!file.good()) throw std::runtime_error("emit_csv: write failed for " + path);
}

std::vector<Rat> default_tail_grid() {
  return {Rat(1),        make_rat(3, 2), Rat(2), Rat(3),
          Rat(4),        Rat(6),         Rat(8), Rat(12)};
}

}  // namespace knapgap
