#include "knapgap/config.hpp"

#include <cstdlib>

namespace knapgap {

namespace {

unsigned long long parse_ull(const std::string& value) {
  size_t pos = 0;
  unsigned long long v = std::stoull(value, &pos);
  if (pos != value.size())
    throw std::invalid_argument("caps override: bad number '" + value + "'");
  return v;
}

}  // namespace

void apply_caps_overrides(Caps& caps, const std::string& spec) {
  size_t pos = 0;
  while (pos < spec.size()) {
    size_t end = spec.find_first_of(",\n", pos);
    if (end == std::string::npos) end = spec.size();
    std::string item = spec.substr(pos, end - pos);
    pos = end + 1;
    // trim
    size_t first = item.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    size_t last = item.find_last_not_of(" \t\r");
    item = item.substr(first, last - first + 1);
    if (item.empty() || item[0] == '#') continue;

    size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("caps override: expected key=value, got '" +
                                  item + "'");
    std::string key = item.substr(0, eq);
    std::string value = item.substr(eq + 1);
    if (key == "fiber_tuple_cap")
      caps.fiber_tuple_cap = parse_ull(value);
    else if (key == "residue_table_cap")
      caps.residue_table_cap = parse_ull(value);
    else if (key == "scanner_candidate_cap")
      caps.scanner_candidate_cap = parse_ull(value);
    else if (key == "scan_iteration_cap")
      caps.scan_iteration_cap = parse_ull(value);
    else if (key == "simplex_det_cap")
      caps.simplex_det_cap = parse_ull(value);
    else if (key == "simplex_dim_cap")
      caps.simplex_dim_cap = static_cast<unsigned>(parse_ull(value));
    else if (key == "ip_expansion_rounds")
      caps.ip_expansion_rounds = static_cast<unsigned>(parse_ull(value));
    else if (key == "exhaustive_sample_cap")
      caps.exhaustive_sample_cap = parse_ull(value);
    else if (key == "workers")
      caps.workers = static_cast<unsigned>(parse_ull(value));
    else
      throw std::invalid_argument("caps override: unknown key '" + key + "'");
  }
}

}  // namespace knapgap
