// knapgap: exact distances, Frobenius numbers, covering radii and
// integer-programming gaps for single-equation knapsack polyhedra.
//
// Exit codes: 0 success, 2 invalid input, 3 scale refusal,
// 4 verification failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "knapgap/config.hpp"
#include "knapgap/distance.hpp"
#include "knapgap/experiments.hpp"
#include "knapgap/frobenius.hpp"
#include "knapgap/gaps.hpp"
#include "knapgap/json_io.hpp"
#include "knapgap/verify.hpp"

namespace {

using namespace knapgap;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitScale = 3;
constexpr int kExitVerify = 4;

IntVec require_vector(const std::string& text, const std::string& flag) {
  auto v = parse_int_vector(text);
  if (!v)
    throw std::invalid_argument(flag + ": expected comma-separated integers");
  return *v;
}

RatVec require_rat_vector(const std::string& text, const std::string& flag) {
  auto v = parse_rat_vector(text);
  if (!v)
    throw std::invalid_argument(flag +
                                ": expected comma-separated rationals (p/q)");
  return *v;
}

Int require_int(const std::string& text, const std::string& flag) {
  auto v = parse_int(text);
  if (!v) throw std::invalid_argument(flag + ": expected an integer");
  return *v;
}

KnapsackInstance make_instance(const std::string& a_text,
                               const std::string& b_text) {
  return KnapsackInstance(require_vector(a_text, "--a"),
                          require_int(b_text, "--b"));
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct CommonOpts {
  std::string caps_spec;
  std::string config_path;
  unsigned workers = 0;
  std::string format = "json";
};

Caps build_caps(const CommonOpts& opts) {
  Caps caps;
  if (const char* env = std::getenv("KNAPGAP_CAPS"))
    apply_caps_overrides(caps, env);
  if (!opts.config_path.empty()) {
    std::ifstream file(opts.config_path);
    if (!file)
      throw std::invalid_argument("--config: cannot open " + opts.config_path);
    std::string content((std::istreambuf_iterator<char>(file)),
                        std::istreambuf_iterator<char>());
    apply_caps_overrides(caps, content);
  }
  if (!opts.caps_spec.empty()) apply_caps_overrides(caps, opts.caps_spec);
  if (opts.workers > 0) caps.workers = opts.workers;
  return caps;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact knapsack-polyhedron distance and gap toolkit"};
  app.require_subcommand(1);

  CommonOpts common;
  app.add_option("--caps", common.caps_spec,
                 "cap overrides, key=value[,key=value...]");
  app.add_option("--config", common.config_path, "key=value config file");
  app.add_option("--workers", common.workers, "worker threads for experiments");
  app.add_option("--format", common.format, "output format (json|csv)")
      ->check(CLI::IsMember({"json", "csv"}));

  std::string a_text, b_text, c_text, l_text, residue_text, out_path;
  std::string eps_text = "1/2", bmax_text, window_text;
  size_t witness_n = 3, exp_n = 3;
  std::string witness_k = "5", exp_h = "10";
  size_t exp_samples = 1000;
  uint64_t seed = 42;
  bool verify_full = false;
  bool covering_brute = true;

  auto* cmd_distance = app.add_subcommand("distance", "exact vertex distance");
  cmd_distance->add_option("--a", a_text, "knapsack vector, e.g. 5,5,1")
      ->required();
  cmd_distance->add_option("--b", b_text, "right-hand side")->required();

  auto* cmd_frobenius =
      app.add_subcommand("frobenius", "Frobenius number and residue table");
  cmd_frobenius->add_option("--a", a_text)->required();

  auto* cmd_covering = app.add_subcommand(
      "covering", "covering radii with optional brute-force check");
  cmd_covering->add_option("--a", a_text)->required();
  cmd_covering->add_flag("--brute,!--no-brute", covering_brute,
                         "run the brute-force cross check");

  auto* cmd_gap = app.add_subcommand("gap", "LP/IP values and integrality gap");
  cmd_gap->add_option("--a", a_text)->required();
  cmd_gap->add_option("--b", b_text)->required();
  cmd_gap->add_option("--c", c_text, "cost vector, rationals allowed")
      ->required();

  auto* cmd_group =
      app.add_subcommand("group", "group-relaxation table over residues");
  cmd_group->add_option("--a", a_text)->required();
  cmd_group->add_option("--l", l_text,
                        "positive costs (defaults to |a_1|..|a_{n-1}|)");
  cmd_group->add_option("--residue", residue_text,
                        "integer vector; reports a single class");

  auto* cmd_witness =
      app.add_subcommand("witness", "distance-bound witness family");
  cmd_witness->add_option("--n", witness_n)->required();
  cmd_witness->add_option("--k", witness_k)->required();

  auto* cmd_bounds = app.add_subcommand("bounds", "reference distance bounds");
  cmd_bounds->add_option("--a", a_text)->required();

  auto* cmd_scan = app.add_subcommand("gapscan", "scanned integer-programming gap");
  cmd_scan->add_option("--a", a_text)->required();
  cmd_scan->add_option("--c", c_text)->required();
  cmd_scan->add_option("--bmax", bmax_text, "scan window (default f_plus)");

  auto* cmd_verify = app.add_subcommand("verify", "invariant sweeps");
  cmd_verify->add_flag("--full", verify_full, "acceptance-scale sweeps");
  cmd_verify->add_option("--seed", seed);

  auto* cmd_experiment =
      app.add_subcommand("experiment", "seeded sampling experiments");
  cmd_experiment->require_subcommand(1);
  auto* cmd_tail = cmd_experiment->add_subcommand("tail", "tail frequencies");
  auto* cmd_avg =
      cmd_experiment->add_subcommand("avg", "averaged normalized gaps");
  for (auto* cmd : {cmd_tail, cmd_avg}) {
    cmd->add_option("--n", exp_n);
    cmd->add_option("--H", exp_h);
    cmd->add_option("--eps", eps_text);
    cmd->add_option("--samples", exp_samples);
    cmd->add_option("--seed", seed);
    cmd->add_option("--out", out_path, "CSV path for per-sample records");
    cmd->add_option("--window", window_text, "b-scan window override");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    Caps caps = build_caps(common);

    if (*cmd_distance) {
      auto inst = make_instance(a_text, b_text);
      print_json(json_distance(inst, vertex_distance(inst, caps)));
    } else if (*cmd_frobenius) {
      IntVec a = require_vector(a_text, "--a");
      print_json(json_frobenius(a, frobenius_number(a, caps)));
    } else if (*cmd_covering) {
      IntVec a = require_vector(a_text, "--a");
      auto radii = kannan_radii(a, caps);
      std::optional<Int> brute;
      if (covering_brute) brute = discrete_radius_bruteforce(a, caps);
      auto j = json_covering(a, radii, brute);
      if (brute && *brute != radii.discrete) {
        print_json(j);
        return kExitVerify;
      }
      print_json(j);
    } else if (*cmd_gap) {
      auto inst = make_instance(a_text, b_text);
      RatVec c = require_rat_vector(c_text, "--c");
      print_json(json_gap_report(c, inst, integrality_gap(c, inst, caps)));
    } else if (*cmd_group) {
      IntVec a = require_vector(a_text, "--a");
      if (a.size() < 2)
        throw std::invalid_argument("--a: need at least two entries");
      CongruenceLattice lattice = projection_lattice(a);
      RatVec costs;
      if (l_text.empty()) {
        for (const Int& w : lattice.weights) costs.push_back(Rat(abs(w)));
      } else {
        costs = require_rat_vector(l_text, "--l");
      }
      if (!residue_text.empty()) {
        GroupProblem problem{lattice, costs,
                             require_vector(residue_text, "--residue")};
        auto entry = group_value(problem, caps);
        Json j = json_group_entry(entry);
        j["schema"] = kSchema;
        print_json(j);
      } else {
        print_json(json_group_table(lattice, lattice_gap(lattice, costs, caps)));
      }
    } else if (*cmd_witness) {
      auto witness = tight_witness(witness_n, require_int(witness_k, "--k"));
      auto check = vertex_distance(witness.instance, caps);
      print_json(json_witness(witness, check));
      if (!check.value || *check.value != Rat(witness.expected_distance))
        return kExitVerify;
    } else if (*cmd_bounds) {
      IntVec a = require_vector(a_text, "--a");
      print_json(json_reference_bounds(a, reference_bounds(a)));
    } else if (*cmd_scan) {
      IntVec a = require_vector(a_text, "--a");
      RatVec c = require_rat_vector(c_text, "--c");
      KnapsackInstance inst(a, Int(0));
      Int window = bmax_text.empty() ? default_scan_window(a, caps)
                                     : require_int(bmax_text, "--bmax");
      auto result = gap_scan(c, inst, window, caps);
      Json j;
      j["schema"] = kSchema;
      j["a"] = json_vector(a);
      j["c"] = json_vector(c);
      j["bMax"] = to_decimal(window);
      j["maxGap"] = to_decimal(result.max_gap);
      j["argmaxB"] = to_decimal(result.argmax_b);
      j["evaluated"] = result.evaluated;
      print_json(j);
    } else if (*cmd_verify) {
      auto results = run_verify(verify_full, seed, caps);
      bool all_pass = true;
      for (const auto& r : results) {
        std::cout << format_sweep(r) << "\n";
        all_pass = all_pass && r.pass;
      }
      std::cout << (all_pass ? "verify: all sweeps passed"
                             : "verify: sweeps FAILED")
                << "\n";
      if (!all_pass) return kExitVerify;
    } else if (*cmd_tail || *cmd_avg) {
      SampleSpec spec;
      spec.n = exp_n;
      spec.H = require_int(exp_h, "--H");
      spec.sample_count = exp_samples;
      spec.seed = seed;
      auto eps = parse_rat(eps_text);
      if (!eps) throw std::invalid_argument("--eps: expected a rational");
      spec.epsilon = *eps;
      if (!window_text.empty())
        spec.window_override = require_int(window_text, "--window");

      auto records = run_experiment(spec, caps);
      if (!out_path.empty()) emit_csv(records, out_path);
      if (*cmd_tail) {
        auto report =
            tail_ratio_from_records(spec, records, default_tail_grid(), false);
        if (common.format == "csv") {
          std::cout << "t,ratio,reference\n";
          for (const auto& row : report.rows)
            std::cout << to_decimal(row.t) << "," << to_decimal(row.ratio)
                      << "," << format_double(row.reference) << "\n";
        } else {
          print_json(json_tail_report(report));
        }
      } else {
        AverageReport report{0.0, 0.0, records.size(), 0};
        double upper = 0.0, lower = 0.0;
        for (const auto& rec : records) {
          upper += rec.upper_proxy.to_double();
          if (rec.lower_witness) {
            lower += rec.lower_witness->to_double();
            ++report.positive_population;
          }
        }
        if (!records.empty())
          report.upper_proxy_mean = upper / static_cast<double>(records.size());
        if (report.positive_population)
          report.lower_witness_mean =
              lower / static_cast<double>(report.positive_population);
        print_json(json_average_report(report));
      }
    }
    return kExitOk;
  } catch (const ScaleRefusal& ex) {
    std::cerr << "scale refusal: " << ex.what() << "\n";
    return kExitScale;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "invalid input: " << ex.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
}
