#include "leraytk/checks.hpp"

#include <numeric>

#include "leraytk/errors.hpp"

namespace leraytk {

ProjectionBoundReport check_projection_theorem(const PartitionedComplex& px,
                                               const LerayOptions& options) {
  ProjectionBoundReport report;
  report.leray_x = leray_number(px.complex(), options);
  const FiberBound fb = fiber_bound(px);
  report.fiber_bound = fb.r;
  report.fiber_witness = fb.witness;
  report.leray_image = leray_number(project(px), options);
  report.bound = fb.r * report.leray_x + fb.r - 1;
  report.holds = report.leray_image <= report.bound;
  report.tight = report.leray_image == report.bound;
  return report;
}

MultiPointVanishingReport check_mps_vanishing(std::span<const PartitionedComplex> factors,
                                              const MultiPointOptions& mpc_options,
                                              const LerayOptions& leray_options) {
  MultiPointVanishingReport report;
  for (const auto& f : factors) {
    report.leray_factors.push_back(leray_number(f.complex(), leray_options));
  }
  report.threshold =
      std::accumulate(report.leray_factors.begin(), report.leray_factors.end(), std::size_t{0});
  const MultiPointComplex m = generalized_mpc(factors, mpc_options);
  report.betti = reduced_betti(m.complex, mpc_options.simplex_guard);
  for (std::size_t j = report.threshold; j < report.betti.reduced.size(); ++j) {
    if (report.betti.reduced[j] != 0) {
      report.violation_degree = static_cast<int>(j);
      break;
    }
  }
  report.holds = report.violation_degree < 0;
  return report;
}

IntersectionBoundReport check_intersection_bound(std::span<const SimplicialComplex> complexes,
                                                 const LerayOptions& options) {
  if (complexes.empty()) throw InvalidArgument("intersection of no complexes");
  IntersectionBoundReport report;
  SimplicialComplex meet = complexes[0];
  for (const auto& x : complexes) {
    report.leray_factors.push_back(leray_number(x, options));
    meet = intersect(meet, x);
  }
  report.leray_intersection = leray_number(meet, options);
  report.bound =
      std::accumulate(report.leray_factors.begin(), report.leray_factors.end(), std::size_t{0});
  report.holds = report.leray_intersection <= report.bound;
  report.tight = report.leray_intersection == report.bound;
  return report;
}

}  // namespace leraytk
