#pragma once

/**
 * @file profile.hpp
 * @brief Global bookkeeping for a Z/p-cover X -> Y of curves.
 *
 * A cover is described by the genus of Y and the ramification jump at every
 * branch point.  For Z/p each ramified point is totally ramified, so sums over
 * branch points Q in Y and over ramified points P in X coincide.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace hodgesplit::profile {

struct RamificationProfile {
  std::uint32_t p = 0;
  long g_Y = 0;
  std::vector<long> jumps;

  /// Throws PreconditionError if p is not prime, g_Y < 0 or a jump is not positive and prime to p.
  void validate() const;
  bool free_action() const { return jumps.empty(); }
  bool operator==(const RamificationProfile&) const = default;
};

struct DefectReport {
  long defect = 0;
  long deg_R_prime = 0;
  long g_X = 0;
  long h0_omega_inv = 0;
  long h1_O_inv = 0;
  long h1_dR_inv = 0;
  bool weakly_ramified = false;
};

/// Sum over branch points of floor((n+1)(p-1)/p) - 1 - floor((n-1)/p).
long defect(const RamificationProfile& prof);

/// deg R' = sum of floor((n+1)(p-1)/p).
long r_prime_degree(const RamificationProfile& prof);

/// Riemann-Hurwitz with conductor exponent (n+1)(p-1) at every branch point.
long genus_upstairs(const RamificationProfile& prof);

/// The h^0 / h^1 values given by each of the three independent formulas.
struct DimensionRoutes {
  /// g_Y - 1 + deg R', or g_Y for an unramified cover.
  long h0_from_r_prime = 0;
  long h0_explicit = 0;
  long h1_explicit = 0;
  long h1_dR_explicit = 0;
  /// g_Y + sum of local H^1 - dim H^1(Z/p, k).  Only meaningful for ramified covers.
  bool invariants_route_applies = false;
  long h1_from_invariants = 0;
  /// dim H^1(Z/p, k) as computed from the trivial module.
  long h1_group_trivial = 0;
};

DimensionRoutes dimension_routes(const RamificationProfile& prof);

/// Full report.  Throws InconsistencyError if the routes disagree.
DefectReport dims(const RamificationProfile& prof);

/// Profile of the cover y^m = f(z^p - z) with deg f = d over the curve y^m = f(x).
RamificationProfile superelliptic(long m, long d, std::uint32_t p);

struct MainTheoremVerdict {
  long defect = 0;
  bool weakly_ramified = false;
  /// p > 2: defect = 0 iff weakly ramified.  Any p: weakly ramified implies defect = 0.
  bool consistent = false;
  /// p = 2, wildly ramified beyond the first jump and still defect 0.
  bool p2_exception = false;
  std::string note;
};

MainTheoremVerdict main_theorem_check(const RamificationProfile& prof);

nlohmann::json to_json(const RamificationProfile& prof);
nlohmann::json to_json(const DefectReport& rep);
/// Parses {p, gY, jumps}.  Throws PreconditionError on a malformed or invalid profile.
RamificationProfile profile_from_json(const nlohmann::json& j);

}  // namespace hodgesplit::profile
