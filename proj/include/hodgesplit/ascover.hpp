#pragma once

/**
 * @file ascover.hpp
 * @brief Local normal form of a totally ramified Z/p-point with ramification jump n.
 *
 * Upstairs the completed local ring is k[[t]] and downstairs k[[x]].  The generator
 * of the group acts by
 *
 *     sigma(t) = t * (1 + t^n)^{-1/n} = t - (1/n) t^{n+1} + ...
 *
 * so that z = t^{-n} satisfies sigma(z) = z + 1, and the invariant parameter is
 *
 *     x = t^p * (1 - t^{n(p-1)})^{-1/n},   i.e.  x^{-n} = t^{-np} - t^{-n}.
 *
 * Both n-th roots use the branch whose constant term is 1, which makes sigma
 * canonical.  Everything is computed over F_p.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "hodgesplit/gf.hpp"
#include "hodgesplit/laurent.hpp"
#include "hodgesplit/linalg.hpp"

namespace hodgesplit::ascover {

using laurent::LaurentSeries;
using linalg::Matrix;
using linalg::Vector;

struct LocalCover {
  std::uint32_t p = 0;
  long n = 0;
  /// Relative precision of the units sigma(t)/t and x/t^p.
  long prec = 0;
  LaurentSeries sigma_t;
  LaurentSeries x_t;

  const gf::FieldCtx& field() const { return sigma_t.ctx(); }
};

/// Requires p prime, gcd(n, p) = 1 and prec > n*p + p.
LocalCover build(std::uint32_t p, long n, long prec);

/// Precision that supports windows of width `window` plus one stabilisation
/// step of width p and the shifted window used by the differential.
long default_precision(std::uint32_t p, long n, long window);

/// sigma(h) = h(sigma(t)).
LaurentSeries apply_sigma(const LocalCover& cov, const LaurentSeries& h);
/// x^j expressed in t, for any integer j.
LaurentSeries x_power(const LocalCover& cov, long j);

struct NormalFormReport {
  long sigma_order_checked_to = 0;      // sigma^p(t) = t
  long z_shift_checked_to = 0;          // sigma(t^{-n}) = t^{-n} + 1
  long x_invariance_checked_to = 0;     // sigma(x) = x
  long x_expansion_checked_to = 0;      // x = t^p + (1/n) t^{p+n(p-1)} + ...
  long normal_form_checked_to = 0;      // x^{-n} = t^{-np} - t^{-n}
};

/// Checks the defining identities of the normal form; throws InconsistencyError
/// naming the first identity that fails.
NormalFormReport verify_normal_form(const LocalCover& cov);

/// dt/t^{n+1} is sigma-invariant and equals -dx/x^{n+1}.
bool invariant_differential_check(const LocalCover& cov, std::string* diagnostic = nullptr);

/// Finite slice t^lo B / t^a B with the matrix of sigma on the monomials t^lo .. t^{a-1}.
struct LatticeWindow {
  std::uint32_t p = 0;
  long n = 0;
  long a = 0;
  long lo = 0;
  /// Column k holds sigma(t^{lo+k}) mod t^a; row r is the coefficient of t^{lo+r}.
  Matrix sigma;

  std::size_t size() const { return static_cast<std::size_t>(a - lo); }
  long exponent(std::size_t k) const { return lo + static_cast<long>(k); }
  std::size_t index(long exponent) const;
  const gf::FieldCtx& field() const { return sigma.ctx(); }

  /// Coordinates of h mod t^a.  h must vanish below t^lo and be known up to t^a.
  Vector coordinates(const LaurentSeries& h) const;
  /// The Laurent polynomial sum v_k t^{lo+k}, exact up to `prec` (>= a).
  LaurentSeries series(const Vector& v, long prec) const;
  Vector monomial(long exponent) const;
  bool is_fixed(const Vector& v) const;
};

/// Needs lo < a and cov.prec >= a - lo.
LatticeWindow window(const LocalCover& cov, long a, long lo);

}  // namespace hodgesplit::ascover
