#pragma once

#include <json.hpp>

#include "knapgap/core_lattice.hpp"
#include "knapgap/distance.hpp"
#include "knapgap/experiments.hpp"
#include "knapgap/frobenius.hpp"
#include "knapgap/gaps.hpp"

namespace knapgap {

// Stable JSON rendering for the CLI: every number is a decimal string so
// arbitrary precision survives serialization; schema tag "knapgap/1".
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "knapgap/1";

Json json_vector(const IntVec& v);
Json json_vector(const RatVec& v);

Json json_instance(const KnapsackInstance& inst);
std::optional<KnapsackInstance> instance_from_json(const Json& j);

/// Row-major array of decimal strings.
Json json_hnf(const HnfBasis& basis);

Json json_distance(const KnapsackInstance& inst, const DistanceResult& result);
Json json_frobenius(const IntVec& a, const FrobeniusResult& result);
Json json_covering(const IntVec& a, const CoveringRadii& radii,
                   const std::optional<Int>& brute);
Json json_gap_report(const RatVec& costs, const KnapsackInstance& inst,
                     const GapReport& report);
Json json_group_table(const CongruenceLattice& lattice,
                      const LatticeGapResult& result);
Json json_group_entry(const GroupEntry& entry);
Json json_witness(const TightWitness& witness, const DistanceResult& check);
Json json_reference_bounds(const IntVec& a, const ReferenceBounds& bounds);
Json json_tail_report(const TailReport& report);
Json json_average_report(const AverageReport& report);

}  // namespace knapgap
