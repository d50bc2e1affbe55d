#include "knapgap/json_io.hpp"

namespace knapgap {

Json json_vector(const IntVec& v) {
  Json arr = Json::array();
  for (const Int& x : v) arr.push_back(to_decimal(x));
  return arr;
}

Json json_vector(const RatVec& v) {
  Json arr = Json::array();
  for (const Rat& x : v) arr.push_back(to_decimal(x));
  return arr;
}

Json json_instance(const KnapsackInstance& inst) {
  Json j;
  j["a"] = json_vector(inst.a());
  j["b"] = to_decimal(inst.b());
  return j;
}

std::optional<KnapsackInstance> instance_from_json(const Json& j) {
  if (!j.contains("a") || !j.contains("b")) return std::nullopt;
  IntVec a;
  for (const auto& item : j["a"]) {
    auto v = parse_int(item.get<std::string>());
    if (!v) return std::nullopt;
    a.push_back(*v);
  }
  auto b = parse_int(j["b"].get<std::string>());
  if (!b) return std::nullopt;
  if (!validate_knapsack_vector(a).ok) return std::nullopt;
  return KnapsackInstance(std::move(a), *b);
}

Json json_hnf(const HnfBasis& basis) {
  Json j;
  j["schema"] = kSchema;
  Json rows = Json::array();
  for (const auto& row : basis.rows) rows.push_back(json_vector(row));
  j["rows"] = rows;
  j["det"] = to_decimal(basis.det);
  return j;
}

Json json_distance(const KnapsackInstance& inst, const DistanceResult& result) {
  Json j;
  j["schema"] = kSchema;
  j["a"] = json_vector(inst.a());
  j["b"] = to_decimal(inst.b());
  j["d"] = result.value ? to_decimal(*result.value) : "-inf";
  Json per = Json::array();
  for (const auto& vd : result.per_vertex) {
    Json entry;
    entry["vertex"] = Json{{"index", vd.vertex.index},
                           {"value", to_decimal(vd.vertex.value)}};
    entry["nearest"] = json_vector(vd.nearest);
    entry["distance"] = to_decimal(vd.distance);
    per.push_back(entry);
  }
  j["perVertex"] = per;
  return j;
}

Json json_frobenius(const IntVec& a, const FrobeniusResult& result) {
  Json j;
  j["schema"] = kSchema;
  j["a"] = json_vector(a);
  j["g"] = to_decimal(result.g);
  j["pivot"] = result.pivot;
  Json apery = Json::array();
  for (const Int& x : result.apery) apery.push_back(to_decimal(x));
  j["apery"] = apery;
  return j;
}

Json json_covering(const IntVec& a, const CoveringRadii& radii,
                   const std::optional<Int>& brute) {
  Json j;
  j["schema"] = kSchema;
  j["a"] = json_vector(a);
  j["continuous"] = to_decimal(radii.continuous);
  j["discrete"] = to_decimal(radii.discrete);
  if (brute) {
    j["discreteBruteForce"] = to_decimal(*brute);
    j["identityHolds"] = (*brute == radii.discrete);
  }
  return j;
}

namespace {
const char* status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal:
      return "optimal";
    case SolveStatus::Unbounded:
      return "unbounded";
    default:
      return "infeasible";
  }
}
}  // namespace

Json json_gap_report(const RatVec& costs, const KnapsackInstance& inst,
                     const GapReport& report) {
  Json j;
  j["schema"] = kSchema;
  j["a"] = json_vector(inst.a());
  j["b"] = to_decimal(inst.b());
  j["c"] = json_vector(costs);
  j["lp"] = Json{{"status", status_name(report.lp.status)},
                 {"value", to_decimal(report.lp.value)}};
  if (report.lp.argmin) {
    j["lp"]["vertexIndex"] = report.lp.argmin->index;
    j["lp"]["vertexValue"] = to_decimal(report.lp.argmin->value);
  }
  j["ip"] = Json{{"status", status_name(report.ip.status)},
                 {"value", to_decimal(report.ip.value)},
                 {"argmin", json_vector(report.ip.argmin)},
                 {"groupCertified", report.ip.group_certified}};
  j["ig"] = to_decimal(report.gap);
  j["boundLinf"] = to_decimal(report.bound);
  return j;
}

Json json_group_entry(const GroupEntry& entry) {
  Json j;
  j["m"] = to_decimal(entry.cost);
  j["witness"] = json_vector(entry.witness);
  return j;
}

Json json_group_table(const CongruenceLattice& lattice,
                      const LatticeGapResult& result) {
  Json j;
  j["schema"] = kSchema;
  j["weights"] = json_vector(lattice.weights);
  j["modulus"] = to_decimal(lattice.modulus);
  Json table = Json::array();
  for (const auto& entry : result.table.per_residue)
    table.push_back(json_group_entry(entry));
  j["table"] = table;
  j["gap"] = to_decimal(result.gap);
  j["argmaxResidue"] = to_decimal(result.argmax_residue);
  return j;
}

Json json_witness(const TightWitness& witness, const DistanceResult& check) {
  Json j;
  j["schema"] = kSchema;
  j["a"] = json_vector(witness.instance.a());
  j["b"] = to_decimal(witness.instance.b());
  j["expected"] = to_decimal(witness.expected_distance);
  j["d"] = check.value ? to_decimal(*check.value) : "-inf";
  j["attained"] =
      check.value.has_value() && *check.value == Rat(witness.expected_distance);
  return j;
}

Json json_reference_bounds(const IntVec& a, const ReferenceBounds& bounds) {
  Json j;
  j["schema"] = kSchema;
  j["a"] = json_vector(a);
  j["cookLinf"] = to_decimal(bounds.cook_linf);
  j["ewL1"] = to_decimal(bounds.ew_l1);
  j["vertexLinf"] = to_decimal(bounds.vertex_linf);
  return j;
}

Json json_tail_report(const TailReport& report) {
  Json j;
  j["schema"] = kSchema;
  j["alpha"] = to_decimal(report.alpha);
  j["population"] = report.population;
  j["exhaustive"] = report.exhaustive;
  j["fittedAt"] = to_decimal(report.fitted_at);
  j["fittedC"] = to_decimal(report.fitted_c);
  j["windowNote"] = report.window_note;
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    rows.push_back(Json{{"t", to_decimal(row.t)},
                        {"ratio", to_decimal(row.ratio)},
                        {"reference", format_double(row.reference)}});
  }
  j["rows"] = rows;
  return j;
}

Json json_average_report(const AverageReport& report) {
  Json j;
  j["schema"] = kSchema;
  j["population"] = report.population;
  j["positivePopulation"] = report.positive_population;
  j["upperProxyMean"] = format_double(report.upper_proxy_mean);
  j["lowerWitnessMean"] = format_double(report.lower_witness_mean);
  return j;
}

}  // namespace knapgap
