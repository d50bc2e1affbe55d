// CLI surface checks: JSON shapes, exit codes, flag parsing. Takes the
// binary path as argv[1].

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

int failures = 0;
std::string cli;

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string out_path = "knapgap_cli_out.txt";
  int rc = std::system((cli + " " + args + " > " + out_path + " 2>/dev/null").c_str());
  std::ifstream file(out_path, std::ios::binary);
  std::stringstream ss;
  ss << file.rdbuf();
  std::remove(out_path.c_str());
  int code = -1;
  if (WIFEXITED(rc)) code = WEXITSTATUS(rc);
  return {code, ss.str()};
}

void check(bool ok, const std::string& what) {
  std::printf("[%s] %s\n", ok ? "PASS" : "FAIL", what.c_str());
  if (!ok) ++failures;
}

nlohmann::json parse(const std::string& text) {
  return nlohmann::json::parse(text, nullptr, false);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::printf("usage: cli_checks <knapgap binary>\n");
    return 1;
  }
  cli = argv[1];

  {
    auto r = run("distance --a 5,5,1 --b 4");
    auto j = parse(r.out);
    check(r.exit_code == 0 && !j.is_discarded() && j["d"] == "4" &&
              j["schema"] == "knapgap/1" && j["perVertex"].size() == 3,
          "distance reports d=4 for the witness instance");
  }
  {
    auto r = run("distance --a 3,5 --b 1");
    auto j = parse(r.out);
    check(r.exit_code == 0 && !j.is_discarded() && j["d"] == "-inf",
          "infeasible distance reports -inf");
  }
  {
    auto r = run("distance --a 3,-2 --b -1");
    auto j = parse(r.out);
    check(r.exit_code == 0 && !j.is_discarded() && j["d"] == "3/2",
          "fractional distances serialize as p/q");
  }
  {
    auto r = run("frobenius --a 3,5");
    auto j = parse(r.out);
    check(r.exit_code == 0 && !j.is_discarded() && j["g"] == "7",
          "frobenius reports the two-generator value");
  }
  {
    check(run("distance --a 3,0,7 --b 1").exit_code == 2,
          "zero entry rejected with exit 2");
    check(run("distance --a 2,4 --b 1").exit_code == 2,
          "non-primitive vector rejected with exit 2");
    check(run("distance --a 3,x --b 1").exit_code == 2,
          "malformed vector rejected with exit 2");
  }
  {
    check(run("covering --a 3,101").exit_code == 3,
          "covering brute force above caps refuses with exit 3");
    auto r = run("covering --a 3,5,7");
    auto j = parse(r.out);
    check(r.exit_code == 0 && !j.is_discarded() && j["continuous"] == "19" &&
              j["discrete"] == "11" && j["identityHolds"] == true,
          "covering radii with brute-force agreement");
  }
  {
    auto r = run("gap --a 5,5,1 --b 4 --c 0,0,1");
    auto j = parse(r.out);
    check(r.exit_code == 0 && !j.is_discarded() && j["ig"] == "4" &&
              j["boundLinf"] == "4" && j["lp"]["value"] == "0" &&
              j["ip"]["value"] == "4",
          "gap report for the equality family instance");
  }
  {
    auto r = run("gap --a 3,5 --b 1 --c 1,0");
    check(r.exit_code == 2, "gap on an infeasible fiber exits 2");
  }
  {
    auto r = run("group --a 3,5,7");
    auto j = parse(r.out);
    check(r.exit_code == 0 && !j.is_discarded() && j["gap"] == "11" &&
              j["argmaxResidue"] == "4" && j["table"].size() == 7,
          "group table over the projection lattice");
  }
  {
    auto r = run("group --a 3,5,7 --l 3,5 --residue 1,1");
    auto j = parse(r.out);
    check(r.exit_code == 0 && !j.is_discarded() && j["m"] == "8",
          "single-residue group value");
  }
  {
    auto r = run("witness --n 3 --k 5");
    auto j = parse(r.out);
    check(r.exit_code == 0 && !j.is_discarded() && j["attained"] == true &&
              j["expected"] == "4",
          "witness subcommand verifies the attained distance");
  }
  {
    auto r = run("bounds --a 9,-4");
    auto j = parse(r.out);
    check(r.exit_code == 0 && !j.is_discarded() && j["cookLinf"] == "18" &&
              j["ewL1"] == "19" && j["vertexLinf"] == "8",
          "reference bounds");
  }
  {
    auto r = run("gapscan --a 3,5,7 --c 3,5,0 --bmax 34");
    auto j = parse(r.out);
    check(r.exit_code == 0 && !j.is_discarded() && j["maxGap"] == "11",
          "gap scan attains the special-cost value");
  }
  {
    auto r = run("experiment tail --n 3 --H 3 --eps 1/2 --samples 50 --seed 5");
    auto j = parse(r.out);
    check(r.exit_code == 0 && !j.is_discarded() && j["alpha"] == "2/3" &&
              j["rows"].size() == 8,
          "tail experiment reports the decay table");
  }
  {
    auto r = run("--format csv experiment tail --n 3 --H 3 --eps 1/2 "
                 "--samples 50 --seed 5");
    check(r.exit_code == 0 && r.out.rfind("t,ratio,reference\n", 0) == 0,
          "tail experiment honors --format csv");
  }
  {
    auto r = run("experiment avg --n 3 --H 3 --eps 2/3 --samples 40 --seed 9");
    auto j = parse(r.out);
    check(r.exit_code == 0 && !j.is_discarded() &&
              j.contains("upperProxyMean") && j.contains("lowerWitnessMean"),
          "averaged proxies");
  }
  {
    auto r = run("--caps residue_table_cap=2 frobenius --a 3,5");
    check(r.exit_code == 3, "caps overrides are honored (exit 3)");
    check(run("--caps bogus=1 frobenius --a 3,5").exit_code == 2,
          "unknown caps key rejected");
  }
  {
    std::string saved = cli;
    cli = "KNAPGAP_CAPS=residue_table_cap=2 " + saved;
    check(run("frobenius --a 3,5").exit_code == 3,
          "KNAPGAP_CAPS environment override is honored");
    cli = saved;
  }
  {
    std::ofstream cfg("knapgap_test.cfg");
    cfg << "# caps for the test\nresidue_table_cap=2\n";
    cfg.close();
    check(run("--config knapgap_test.cfg frobenius --a 3,5").exit_code == 3,
          "config file overrides are honored");
    check(run("--config missing_file.cfg frobenius --a 3,5").exit_code == 2,
          "missing config file rejected");
    std::remove("knapgap_test.cfg");
  }

  std::printf("%s: %d check(s) failed\n", failures ? "FAIL" : "OK", failures);
  return failures ? 1 : 0;
}
