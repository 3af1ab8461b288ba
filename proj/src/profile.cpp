#include "hodgesplit/profile.hpp"

#include <algorithm>
#include <numeric>

#include "hodgesplit/cohom.hpp"
#include "hodgesplit/errors.hpp"

namespace hodgesplit::profile {

using cohom::floor_div;

void RamificationProfile::validate() const {
  if (!gf::is_prime(p)) throw PreconditionError("p = " + std::to_string(p) + " is not prime");
  if (g_Y < 0) throw PreconditionError("genus of the quotient must be nonnegative");
  for (long n : jumps) {
    if (n < 1 || n % static_cast<long>(p) == 0) {
      throw PreconditionError("jump " + std::to_string(n) + " must be positive and prime to p");
    }
  }
}

long defect(const RamificationProfile& prof) {
  prof.validate();
  long sum = 0;
  for (long n : prof.jumps) sum += cohom::d_image_closed_form(prof.p, n);
  return sum;
}

long r_prime_degree(const RamificationProfile& prof) {
  prof.validate();
  const auto p = static_cast<long>(prof.p);
  long sum = 0;
  for (long n : prof.jumps) sum += floor_div((n + 1) * (p - 1), p);
  return sum;
}

long genus_upstairs(const RamificationProfile& prof) {
  prof.validate();
  const auto p = static_cast<long>(prof.p);
  long rhs = p * (2 * prof.g_Y - 2);
  for (long n : prof.jumps) rhs += (n + 1) * (p - 1);
  const long twice = rhs + 2;
  if (twice < 0 || twice % 2 != 0) {
    throw InconsistencyError("Riemann-Hurwitz gives 2g - 2 = " + std::to_string(rhs));
  }
  return twice / 2;
}

DimensionRoutes dimension_routes(const RamificationProfile& prof) {
  prof.validate();
  const auto p = static_cast<long>(prof.p);
  const long g = prof.g_Y;
  const long deg_r = r_prime_degree(prof);
  DimensionRoutes r;

  r.h0_from_r_prime = deg_r == 0 ? g : g - 1 + deg_r;

  if (prof.free_action()) {
    r.h0_explicit = g;
    r.h1_explicit = g;
    r.h1_dR_explicit = 2 * g;
  } else {
    long dr = 0;
    for (long n : prof.jumps) dr += floor_div((n + 1) * (p - 1), p) + 1 + floor_div(n - 1, p);
    r.h0_explicit = g - 1 + deg_r;
    r.h1_explicit = g - 1 + deg_r;
    r.h1_dR_explicit = 2 * (g - 1) + dr;
  }

  const auto& k = gf::FieldCtx::prime(prof.p);
  r.h1_group_trivial =
      static_cast<long>(cohom::periodic_cohomology(cohom::CyclicModule::trivial(k, 1, prof.p), 1));
  r.invariants_route_applies = !prof.free_action();
  if (r.invariants_route_applies) {
    long local = 0;
    for (long n : prof.jumps) local += cohom::h1_closed_form(prof.p, n, 0);
    r.h1_from_invariants = g + local - r.h1_group_trivial;
  }
  return r;
}

DefectReport dims(const RamificationProfile& prof) {
  const auto routes = dimension_routes(prof);
  if (routes.h0_from_r_prime != routes.h0_explicit) {
    throw InconsistencyError("h0 of invariant differentials: " + std::to_string(routes.h0_from_r_prime) +
                             " via deg R' but " + std::to_string(routes.h0_explicit) + " explicitly");
  }
  if (routes.invariants_route_applies && routes.h1_from_invariants != routes.h1_explicit) {
    throw InconsistencyError("h1 of invariant functions: " + std::to_string(routes.h1_from_invariants) +
                             " via local cohomology but " + std::to_string(routes.h1_explicit) + " explicitly");
  }

  DefectReport rep;
  rep.defect = defect(prof);
  rep.deg_R_prime = r_prime_degree(prof);
  rep.g_X = genus_upstairs(prof);
  rep.h0_omega_inv = routes.h0_explicit;
  rep.h1_O_inv = routes.h1_explicit;
  rep.h1_dR_inv = routes.h1_dR_explicit;
  rep.weakly_ramified = std::all_of(prof.jumps.begin(), prof.jumps.end(), [](long n) { return n <= 1; });
  if (rep.h1_dR_inv != rep.h0_omega_inv + rep.h1_O_inv - rep.defect) {
    throw InconsistencyError("de Rham dimension does not match h0 + h1 - defect");
  }
  return rep;
}

RamificationProfile superelliptic(long m, long d, std::uint32_t p) {
  if (!gf::is_prime(p)) throw PreconditionError("p = " + std::to_string(p) + " is not prime");
  if (m < 2) throw PreconditionError("superelliptic exponent m must be at least 2");
  if (d < 1) throw PreconditionError("deg f must be positive");
  if (m % static_cast<long>(p) == 0) throw PreconditionError("p must not divide m");
  const long delta = std::gcd(m, d);
  const long jump = m / delta;
  if (jump % static_cast<long>(p) == 0) throw PreconditionError("m / gcd(m, d) must be prime to p");
  const long twice = (m - 1) * (d - 1) + 1 - delta;
  if (twice < 0 || twice % 2 != 0) throw PreconditionError("curve y^m = f(x) has non-integral genus");

  RamificationProfile prof{p, twice / 2, std::vector<long>(static_cast<std::size_t>(delta), jump)};
  prof.validate();
  return prof;
}

MainTheoremVerdict main_theorem_check(const RamificationProfile& prof) {
  MainTheoremVerdict v;
  v.defect = defect(prof);
  v.weakly_ramified = std::all_of(prof.jumps.begin(), prof.jumps.end(), [](long n) { return n <= 1; });
  const bool weak_implies_zero = !v.weakly_ramified || v.defect == 0;
  const bool equivalence = (v.defect == 0) == v.weakly_ramified;
  v.consistent = weak_implies_zero && (prof.p == 2 || equivalence);
  v.p2_exception = prof.p == 2 && !v.weakly_ramified && v.defect == 0;
  if (v.p2_exception) {
    v.note = "p = 2: defect vanishes although the action is not weakly ramified";
  } else if (v.weakly_ramified) {
    v.note = "weakly ramified, defect 0";
  } else {
    v.note = "not weakly ramified, defect " + std::to_string(v.defect);
  }
  return v;
}

nlohmann::json to_json(const RamificationProfile& prof) {
  return {{"p", prof.p}, {"gY", prof.g_Y}, {"jumps", prof.jumps}};
}

nlohmann::json to_json(const DefectReport& rep) {
  return {{"defect", rep.defect},
          {"deg_R_prime", rep.deg_R_prime},
          {"g_X", rep.g_X},
          {"h0_omega_inv", rep.h0_omega_inv},
          {"h1_O_inv", rep.h1_O_inv},
          {"h1_dR_inv", rep.h1_dR_inv},
          {"weakly_ramified", rep.weakly_ramified}};
}

RamificationProfile profile_from_json(const nlohmann::json& j) {
  RamificationProfile prof;
  try {
    const auto p = j.at("p").get<long long>();
    if (p < 2 || p > 0xffffffffLL) throw PreconditionError("p out of range");
    prof.p = static_cast<std::uint32_t>(p);
    prof.g_Y = j.at("gY").get<long>();
    prof.jumps = j.at("jumps").get<std::vector<long>>();
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed profile: ") + e.what());
  }
  prof.validate();
  return prof;
}

}  // namespace hodgesplit::profile
