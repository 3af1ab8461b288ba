#include "hodgesplit/cohom.hpp"

#include "hodgesplit/errors.hpp"

namespace hodgesplit::cohom {

using gf::FieldCtx;
using linalg::EchelonBasis;

long floor_div(long a, long b) {
  if (b <= 0) throw PreconditionError("floor_div needs a positive divisor");
  long q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

void CyclicModule::validate() const {
  if (sigma.rows() != sigma.cols()) throw PreconditionError("module matrix is not square");
  if (order == 0) throw PreconditionError("group order must be positive");
  if (!sigma.pow(order).is_identity()) {
    throw PreconditionError("sigma^" + std::to_string(order) + " is not the identity");
  }
}

CyclicModule CyclicModule::trivial(const FieldCtx& ctx, std::size_t dim, std::size_t order) {
  return {Matrix::identity(ctx, dim), order};
}

CyclicModule CyclicModule::free(const FieldCtx& ctx, std::size_t order, std::size_t copies) {
  Matrix s(ctx, order * copies, order * copies);
  for (std::size_t c = 0; c < copies; ++c) {
    for (std::size_t i = 0; i < order; ++i) s(c * order + (i + 1) % order, c * order + i) = ctx.one();
  }
  return {s, order};
}

CyclicModule CyclicModule::jordan_block(const FieldCtx& ctx, std::size_t size, std::size_t order) {
  Matrix s = Matrix::identity(ctx, size);
  for (std::size_t i = 0; i + 1 < size; ++i) s(i + 1, i) = ctx.one();
  return {s, order};
}

Matrix norm_map(const CyclicModule& mod) {
  Matrix sum(mod.field(), mod.dim(), mod.dim());
  Matrix power = Matrix::identity(mod.field(), mod.dim());
  for (std::size_t i = 0; i < mod.order; ++i) {
    sum = sum + power;
    power = power * mod.sigma;
  }
  return sum;
}

std::size_t periodic_cohomology(const CyclicModule& mod, int degree) {
  mod.validate();
  const Matrix diff = mod.sigma - Matrix::identity(mod.field(), mod.dim());
  const std::size_t rank_diff = linalg::rank(diff);
  switch (degree) {
    case 0:
      return mod.dim() - rank_diff;
    case 1:
      return mod.dim() - linalg::rank(norm_map(mod)) - rank_diff;
    case 2:
      return mod.dim() - rank_diff - linalg::rank(norm_map(mod));
    default:
      throw PreconditionError("periodic_cohomology supports degrees 0, 1, 2");
  }
}

std::vector<long> CohomologyClassSet::monomial_exponents() const {
  std::vector<long> out;
  for (const auto& v : representatives) {
    long found = 0;
    int nonzero = 0;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k].is_zero()) continue;
      ++nonzero;
      found = window.exponent(k);
    }
    if (nonzero != 1) return {};
    out.push_back(found);
  }
  return out;
}

long default_window(std::uint32_t p, long n) { return n + static_cast<long>(p) + 1; }

CohomologyClassSet h1_window(const LocalCover& cov, long a, long width) {
  const FieldCtx& k = cov.field();
  const long p = cov.p;
  CohomologyClassSet set{ascover::window(cov, a, a - width), {}, {}, {}};
  const auto& win = set.window;
  const std::size_t d = win.size();

  set.fixed_basis = linalg::kernel(win.sigma - Matrix::identity(k, d));

  EchelonBasis image(k, d);
  for (long j = -floor_div(-win.lo, p); p * j <= a - 1; ++j) {
    Vector v = win.coordinates(ascover::x_power(cov, j));
    if (!win.is_fixed(v)) {
      throw InconsistencyError("truncation of x^" + std::to_string(j) + " is not sigma-fixed");
    }
    image.insert(v);
    set.subgroup_image.push_back(std::move(v));
  }

  EchelonBasis reps(k, d);
  for (const auto& v : set.fixed_basis) reps.insert(image.reduce(v));
  set.representatives = reps.vectors();
  return set;
}

CohomologyClassSet h1_lattice(const LocalCover& cov, long a, long width) {
  if (width < default_window(cov.p, cov.n)) {
    throw PreconditionError("window width must be at least n + p + 1");
  }
  auto set = h1_window(cov, a, width);
  const auto wider = h1_window(cov, a, width + static_cast<long>(cov.p));
  if (wider.dim() != set.dim()) {
    throw StabilizationError("H^1 window model did not stabilise: " + std::to_string(set.dim()) + " vs " +
                             std::to_string(wider.dim()));
  }
  return set;
}

long h1_closed_form(std::uint32_t p, long n, long a) {
  const auto pl = static_cast<long>(p);
  return n - floor_div(a - 1, pl) + floor_div(a - 1 - n, pl);
}

BasisCertificate h1_basis_certificate(const LocalCover& cov, long a, long width) {
  const FieldCtx& k = cov.field();
  const long p = cov.p;
  const long n = cov.n;
  const auto set = h1_lattice(cov, a, width);
  const auto& win = set.window;
  const std::size_t d = win.size();

  BasisCertificate cert;
  cert.a = a;
  cert.quotient_dim = set.dim();
  for (long i = a - n; i <= a - 1; ++i) {
    (i % p == 0 ? cert.vanishing_exponents : cert.basis_exponents).push_back(i);
  }

  EchelonBasis with_j(k, d);
  for (const auto& u : set.subgroup_image) with_j.insert(u);
  const std::size_t rank_u = with_j.size();
  cert.fixed = true;
  for (long i : cert.basis_exponents) {
    const Vector e = win.monomial(i);
    cert.fixed = cert.fixed && win.is_fixed(e);
    with_j.insert(e);
  }
  cert.independent = with_j.size() == rank_u + cert.basis_exponents.size();

  EchelonBasis with_fixed(k, d);
  for (const auto& u : set.subgroup_image) with_fixed.insert(u);
  for (const auto& v : set.fixed_basis) with_fixed.insert(v);
  cert.spanning = with_j.size() == with_fixed.size();

  cert.vanishing = true;
  for (long i : cert.vanishing_exponents) {
    cert.vanishing = cert.vanishing && win.coordinates(ascover::x_power(cov, i / p)) == win.monomial(i);
  }

  if (!cert.ok()) {
    throw CertificateError("basis certificate failed for p=" + std::to_string(p) + " n=" + std::to_string(n) +
                           " a=" + std::to_string(a));
  }
  return cert;
}

DImage d_image(const LocalCover& cov, long width) {
  const FieldCtx& k = cov.field();
  const long n = cov.n;
  DImage out{h1_lattice(cov, 0, width), h1_lattice(cov, n + 1, width + n + 2), {}, 0};
  const auto& src = out.source.window;
  const auto& dst = out.target.window;

  EchelonBasis span(k, dst.size());
  for (const auto& u : out.target.subgroup_image) span.insert(u);
  const std::size_t base = span.size();

  for (const auto& rep : out.source.representatives) {
    // h dt is carried to t^{n+1} h by the invariant form dt / t^{n+1}.
    const auto h = src.series(rep, n + 2);
    const auto image = derivative(h).shifted(n + 1);
    Vector v = dst.coordinates(image);
    if (!dst.is_fixed(v)) throw InconsistencyError("image of a fixed class under d is not sigma-fixed");
    span.insert(v);
    out.images.push_back(std::move(v));
  }
  out.rank = span.size() - base;
  return out;
}

std::size_t d_image_rank(const LocalCover& cov, long width) { return d_image(cov, width).rank; }

long d_image_closed_form(std::uint32_t p, long n) {
  const auto pl = static_cast<long>(p);
  return floor_div((n + 1) * (pl - 1), pl) - 1 - floor_div(n - 1, pl);
}

}  // namespace hodgesplit::cohom
