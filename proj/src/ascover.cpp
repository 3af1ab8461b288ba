#include "hodgesplit/ascover.hpp"

#include <numeric>
#include <sstream>

#include "hodgesplit/errors.hpp"

namespace hodgesplit::ascover {

using gf::FieldCtx;

namespace {

void require_jump(std::uint32_t p, long n) {
  if (!gf::is_prime(p)) throw PreconditionError("p = " + std::to_string(p) + " is not prime");
  if (n < 1 || n % static_cast<long>(p) == 0) {
    throw PreconditionError("jump n = " + std::to_string(n) + " must be positive and prime to p = " +
                            std::to_string(p));
  }
}

}  // namespace

LocalCover build(std::uint32_t p, long n, long prec) {
  require_jump(p, n);
  if (prec <= n * static_cast<long>(p) + static_cast<long>(p)) {
    throw PreconditionError("cover precision must exceed n*p + p");
  }
  const FieldCtx& k = FieldCtx::prime(p);
  const auto one_plus = LaurentSeries::monomial(k, 0, prec) + LaurentSeries::monomial(k, n, prec);
  const auto one_minus = LaurentSeries::monomial(k, 0, prec) -
                         LaurentSeries::monomial(k, n * (static_cast<long>(p) - 1), prec);
  return LocalCover{p, n, prec, invert(nth_root(one_plus, n)).shifted(1),
                    invert(nth_root(one_minus, n)).shifted(static_cast<long>(p))};
}

long default_precision(std::uint32_t p, long n, long window) {
  const auto pl = static_cast<long>(p);
  return window + n * pl + pl + n + 6;
}

LaurentSeries apply_sigma(const LocalCover& cov, const LaurentSeries& h) { return substitute(h, cov.sigma_t); }

LaurentSeries x_power(const LocalCover& cov, long j) { return pow(cov.x_t, j); }

NormalFormReport verify_normal_form(const LocalCover& cov) {
  const FieldCtx& k = cov.field();
  const long p = cov.p;
  const long n = cov.n;
  NormalFormReport report;

  LaurentSeries iter = cov.sigma_t;
  for (long i = 1; i < p; ++i) iter = apply_sigma(cov, iter);
  if (!iter.agrees_with(LaurentSeries::monomial(k, 1, iter.precision()))) {
    throw InconsistencyError("normal form: sigma^p(t) != t");
  }
  report.sigma_order_checked_to = iter.precision();

  const long zprec = -n + cov.prec;
  const auto z = LaurentSeries::monomial(k, -n, zprec);
  const auto sz = apply_sigma(cov, z);
  if (!sz.agrees_with(z + LaurentSeries::monomial(k, 0, zprec))) {
    throw InconsistencyError("normal form: sigma(t^-n) != t^-n + 1");
  }
  report.z_shift_checked_to = sz.precision();

  const auto sx = apply_sigma(cov, cov.x_t);
  if (!sx.agrees_with(cov.x_t)) throw InconsistencyError("normal form: sigma(x) != x");
  report.x_invariance_checked_to = sx.precision();

  const long second = p + n * (p - 1);
  const auto inv_n = k.from_int(n).inv();
  for (long i = p; i <= second; ++i) {
    const auto expected = i == p ? k.one() : (i == second ? inv_n : k.zero());
    if (cov.x_t.coeff(i) != expected) {
      throw InconsistencyError("normal form: x != t^p + (1/n) t^{p+n(p-1)} + ...");
    }
  }
  report.x_expansion_checked_to = second + 1;

  const auto lhs = pow(cov.x_t, -n);
  const auto rhs = LaurentSeries::monomial(k, -n * p, lhs.precision()) -
                   LaurentSeries::monomial(k, -n, lhs.precision());
  if (!lhs.agrees_with(rhs)) throw InconsistencyError("normal form: x^-n != t^-np - t^-n");
  report.normal_form_checked_to = lhs.precision();
  return report;
}

bool invariant_differential_check(const LocalCover& cov, std::string* diagnostic) {
  const FieldCtx& k = cov.field();
  const long n = cov.n;
  auto fail = [&](const std::string& what) {
    if (diagnostic) *diagnostic = what;
    return false;
  };

  const auto moved = derivative(cov.sigma_t) * pow(cov.sigma_t, -(n + 1));
  const auto form = LaurentSeries::monomial(k, -(n + 1), moved.precision());
  if (!moved.agrees_with(form)) {
    return fail("sigma(dt/t^{n+1}) = " + moved.to_string() + " differs from dt/t^{n+1}");
  }
  const auto dx_form = derivative(cov.x_t) * pow(cov.x_t, -(n + 1));
  const auto neg = -LaurentSeries::monomial(k, -(n + 1), dx_form.precision());
  if (!dx_form.agrees_with(neg)) {
    return fail("dx/x^{n+1} = " + dx_form.to_string() + " differs from -dt/t^{n+1}");
  }
  if (diagnostic) {
    std::ostringstream os;
    os << "verified to t^" << std::min(moved.precision(), dx_form.precision());
    *diagnostic = os.str();
  }
  return true;
}

std::size_t LatticeWindow::index(long e) const {
  if (e < lo || e >= a) throw PreconditionError("exponent outside the window");
  return static_cast<std::size_t>(e - lo);
}

Vector LatticeWindow::coordinates(const LaurentSeries& h) const {
  if (h.precision() < a) throw PrecisionError("series not known up to the window cutoff");
  if (h.valuation() < lo) throw PreconditionError("series has terms below the window");
  return h.window(lo, a);
}

LaurentSeries LatticeWindow::series(const Vector& v, long prec) const {
  if (v.size() != size()) throw PreconditionError("vector length does not match the window");
  if (prec < a) throw PrecisionError("series precision below the window cutoff");
  return LaurentSeries::from_coeffs(field(), lo, v, prec);
}

Vector LatticeWindow::monomial(long e) const { return linalg::unit_vector(field(), size(), index(e)); }

bool LatticeWindow::is_fixed(const Vector& v) const { return sigma * v == v; }

LatticeWindow window(const LocalCover& cov, long a, long lo) {
  if (lo >= a) throw PreconditionError("window needs lo < a");
  if (cov.prec < a - lo) {
    throw PrecisionError("cover precision " + std::to_string(cov.prec) + " too small for window width " +
                         std::to_string(a - lo));
  }
  const FieldCtx& k = cov.field();
  LatticeWindow w;
  w.p = cov.p;
  w.n = cov.n;
  w.a = a;
  w.lo = lo;
  const std::size_t d = w.size();
  w.sigma = Matrix(k, d, d);

  LaurentSeries power = pow(cov.sigma_t, lo);
  for (std::size_t col = 0; col < d; ++col) {
    if (col > 0) power = power * cov.sigma_t;
    const auto coords = power.window(lo, a);
    for (std::size_t row = 0; row < d; ++row) w.sigma(row, col) = coords[row];
  }
  for (std::size_t col = 0; col < d; ++col) {
    if (!w.sigma(col, col).is_one()) throw InconsistencyError("window matrix has a non-unit diagonal");
    for (std::size_t row = 0; row < col; ++row) {
      if (!w.sigma(row, col).is_zero()) throw InconsistencyError("window matrix is not lower triangular");
    }
  }
  return w;
}

}  // namespace hodgesplit::ascover
