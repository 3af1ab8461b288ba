#pragma once

/**
 * @file cohom.hpp
 * @brief Cohomology of cyclic groups acting on finite-dimensional modules.
 *
 * Two independent routes are provided:
 *  - periodic_cohomology: H^0, H^1, H^2 of Z/q from the kernel and image of
 *    sigma - 1 and of the norm N = 1 + sigma + ... + sigma^{q-1};
 *  - h1_lattice: H^1(G, t^a B) realised as the cokernel of L^G -> (L/t^a B)^G
 *    inside a finite window of monomials, with the invariant field K = k((x))
 *    contributing the truncations of the powers x^j.
 * The closed forms for the same dimensions live next to them so that tests and
 * the command line tool can compare both sides.
 */

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hodgesplit/ascover.hpp"
#include "hodgesplit/linalg.hpp"

namespace hodgesplit::cohom {

using ascover::LatticeWindow;
using ascover::LocalCover;
using linalg::Matrix;
using linalg::Vector;

/// floor(a / b) for b > 0, rounding toward minus infinity.
long floor_div(long a, long b);

/// A k[Z/q]-module: a square matrix sigma with sigma^order = 1.
struct CyclicModule {
  Matrix sigma;
  std::size_t order = 0;

  std::size_t dim() const { return sigma.rows(); }
  const gf::FieldCtx& field() const { return sigma.ctx(); }
  /// Throws PreconditionError unless sigma is square with sigma^order = 1.
  void validate() const;

  static CyclicModule trivial(const gf::FieldCtx& ctx, std::size_t dim, std::size_t order);
  /// k[Z/order]^copies with sigma permuting each copy cyclically.
  static CyclicModule free(const gf::FieldCtx& ctx, std::size_t order, std::size_t copies = 1);
  /// Single Jordan block of the given size with eigenvalue 1.
  static CyclicModule jordan_block(const gf::FieldCtx& ctx, std::size_t size, std::size_t order);
};

/// N = 1 + sigma + ... + sigma^{order-1}.
Matrix norm_map(const CyclicModule& mod);

/// dim H^degree(Z/order, mod) for degree in {0, 1, 2}.
std::size_t periodic_cohomology(const CyclicModule& mod, int degree);

/// A basis of the cokernel model M = (V)^G / U for one lattice window.
struct CohomologyClassSet {
  LatticeWindow window;
  /// Basis of V^G = ker(sigma - 1).
  std::vector<Vector> fixed_basis;
  /// Truncations of x^j with lo <= p*j <= a-1, spanning the image of L^G.
  std::vector<Vector> subgroup_image;
  /// Canonical coset representatives: reduced against subgroup_image and
  /// brought to reduced echelon form among themselves.
  std::vector<Vector> representatives;

  std::size_t dim() const { return representatives.size(); }
  /// Exponents of the monomial representatives; empty if some representative is not a monomial.
  std::vector<long> monomial_exponents() const;
};

/// Smallest window width that covers the generator range with guard.
long default_window(std::uint32_t p, long n);

/// Window computation without the stabilisation check.
CohomologyClassSet h1_window(const LocalCover& cov, long a, long width);

/// H^1(G, t^a B) from the window [a - width, a).  Recomputes with width + p and
/// throws StabilizationError if the dimension moves.  Needs width >= n + p + 1.
CohomologyClassSet h1_lattice(const LocalCover& cov, long a, long width);

/// n - floor((a-1)/p) + floor((a-1-n)/p).
long h1_closed_form(std::uint32_t p, long n, long a);

struct BasisCertificate {
  long a = 0;
  /// {a-n <= i <= a-1 : p does not divide i}
  std::vector<long> basis_exponents;
  /// {a-n <= i <= a-1 : p divides i}; each class [t^i] equals [x^{i/p}] = 0.
  std::vector<long> vanishing_exponents;
  bool fixed = false;
  bool independent = false;
  bool spanning = false;
  bool vanishing = false;
  std::size_t quotient_dim = 0;

  bool ok() const { return fixed && independent && spanning && vanishing; }
};

/// Certifies that the classes of t^i (i in J) form a basis of M and that t^i with p | i
/// in the generator range vanish.  Throws CertificateError on failure.
BasisCertificate h1_basis_certificate(const LocalCover& cov, long a, long width);

struct DImage {
  CohomologyClassSet source;  // M_1: a = 0
  CohomologyClassSet target;  // M_2: a = n + 1
  /// Image of each source representative under h -> t^{n+1} h', in target coordinates.
  std::vector<Vector> images;
  std::size_t rank = 0;
};

/// The map d : H^1(G, B) -> H^1(G, B dt) realised on the two window models.
DImage d_image(const LocalCover& cov, long width);
std::size_t d_image_rank(const LocalCover& cov, long width);

/// floor((n+1)(p-1)/p) - 1 - floor((n-1)/p).
long d_image_closed_form(std::uint32_t p, long n);

}  // namespace hodgesplit::cohom
