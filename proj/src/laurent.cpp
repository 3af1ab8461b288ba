#include "hodgesplit/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "hodgesplit/errors.hpp"

namespace hodgesplit::laurent {

namespace {

using Coeffs = std::vector<FieldElement>;

// Truncated power-series helpers on coefficient vectors indexed from t^0.

Coeffs mul_trunc(const FieldCtx& ctx, const Coeffs& a, const Coeffs& b, std::size_t len) {
  Coeffs out(len, ctx.zero());
  const std::size_t na = std::min(a.size(), len);
  for (std::size_t i = 0; i < na; ++i) {
    if (a[i].is_zero()) continue;
    const std::size_t nb = std::min(b.size(), len - i);
    for (std::size_t j = 0; j < nb; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Coeffs inv_trunc(const FieldCtx& ctx, const Coeffs& a, std::size_t len) {
  Coeffs out(len, ctx.zero());
  if (len == 0) return out;
  const FieldElement inv0 = a.at(0).inv();
  out[0] = inv0;
  for (std::size_t k = 1; k < len; ++k) {
    FieldElement s = ctx.zero();
    const std::size_t top = std::min(k, a.size() - 1);
    for (std::size_t j = 1; j <= top; ++j) s += a[j] * out[k - j];
    out[k] = -(s * inv0);
  }
  return out;
}

Coeffs pow_trunc(const FieldCtx& ctx, Coeffs base, long e, std::size_t len) {
  if (e < 0) {
    base = inv_trunc(ctx, base, len);
    e = -e;
  }
  Coeffs result(len, ctx.zero());
  if (len > 0) result[0] = ctx.one();
  base.resize(std::min(base.size(), len), ctx.zero());
  while (e) {
    if (e & 1) result = mul_trunc(ctx, result, base, len);
    e >>= 1;
    if (e) base = mul_trunc(ctx, base, base, len);
  }
  return result;
}

}  // namespace

LaurentSeries::LaurentSeries(const FieldCtx& ctx, long val, std::vector<FieldElement> coeffs, long prec)
    : ctx_(&ctx), val_(val), coeffs_(std::move(coeffs)), prec_(prec) {
  if (val_ > prec_) val_ = prec_;
  coeffs_.resize(static_cast<std::size_t>(prec_ - val_), ctx.zero());
  normalize();
}

void LaurentSeries::normalize() {
  const auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                                  [](const FieldElement& c) { return !c.is_zero(); });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    val_ = prec_;
    return;
  }
  val_ += static_cast<long>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
}

void LaurentSeries::require_same(const LaurentSeries& other) const {
  if (ctx_ != other.ctx_) throw ContextMismatch("series over different fields");
}

LaurentSeries LaurentSeries::zero(const FieldCtx& ctx, long prec) { return {ctx, prec, {}, prec}; }

LaurentSeries LaurentSeries::monomial(const FieldElement& c, long exponent, long prec) {
  if (exponent > prec) throw PrecisionError("monomial exponent above precision");
  if (exponent == prec) return zero(c.ctx(), prec);
  return {c.ctx(), exponent, {c}, prec};
}

LaurentSeries LaurentSeries::monomial(const FieldCtx& ctx, long exponent, long prec) {
  return monomial(ctx.one(), exponent, prec);
}

LaurentSeries LaurentSeries::from_coeffs(const FieldCtx& ctx, long start, std::vector<FieldElement> coeffs,
                                         long prec) {
  if (start >= prec) return zero(ctx, prec);
  for (const auto& c : coeffs) {
    if (&c.ctx() != &ctx) throw ContextMismatch("coefficient from a different field");
  }
  return {ctx, start, std::move(coeffs), prec};
}

LaurentSeries LaurentSeries::from_ints(const FieldCtx& ctx, long start, const std::vector<long long>& coeffs,
                                       long prec) {
  std::vector<FieldElement> c;
  c.reserve(coeffs.size());
  for (auto v : coeffs) c.push_back(ctx.from_int(v));
  return from_coeffs(ctx, start, std::move(c), prec);
}

FieldElement LaurentSeries::coeff(long i) const {
  if (i >= prec_) {
    throw PrecisionError("coefficient of t^" + std::to_string(i) + " unknown at precision " +
                         std::to_string(prec_));
  }
  if (i < val_) return ctx_->zero();
  return coeffs_[static_cast<std::size_t>(i - val_)];
}

FieldElement LaurentSeries::leading_coeff() const {
  if (is_zero()) throw PrecisionError("series is zero to its precision");
  return coeffs_.front();
}

LaurentSeries LaurentSeries::truncated(long new_prec) const {
  if (new_prec > prec_) throw PrecisionError("cannot raise the precision of a series");
  return {*ctx_, val_, coeffs_, new_prec};
}

std::vector<FieldElement> LaurentSeries::window(long lo, long hi) const {
  if (hi > prec_) throw PrecisionError("window above series precision");
  std::vector<FieldElement> out;
  out.reserve(static_cast<std::size_t>(std::max(0L, hi - lo)));
  for (long i = lo; i < hi; ++i) out.push_back(coeff(i));
  return out;
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& rhs) const {
  require_same(rhs);
  const long prec = std::min(prec_, rhs.prec_);
  const long start = std::min(val_, rhs.val_);
  if (start >= prec) return zero(*ctx_, prec);
  std::vector<FieldElement> c(static_cast<std::size_t>(prec - start), ctx_->zero());
  for (long i = start; i < prec; ++i) c[static_cast<std::size_t>(i - start)] = coeff(i) + rhs.coeff(i);
  return {*ctx_, start, std::move(c), prec};
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& rhs) const { return *this + (-rhs); }

LaurentSeries LaurentSeries::operator*(const LaurentSeries& rhs) const {
  require_same(rhs);
  const long prec = std::min(val_ + rhs.prec_, rhs.val_ + prec_);
  if (is_zero() || rhs.is_zero()) return zero(*ctx_, prec);
  const long val = val_ + rhs.val_;
  if (val >= prec) return zero(*ctx_, prec);
  auto c = mul_trunc(*ctx_, coeffs_, rhs.coeffs_, static_cast<std::size_t>(prec - val));
  return {*ctx_, val, std::move(c), prec};
}

LaurentSeries LaurentSeries::scaled(const FieldElement& s) const {
  if (&s.ctx() != ctx_) throw ContextMismatch("scalar from a different field");
  LaurentSeries r = *this;
  for (auto& c : r.coeffs_) c *= s;
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::shifted(long k) const { return {*ctx_, val_ + k, coeffs_, prec_ + k}; }

bool LaurentSeries::agrees_with(const LaurentSeries& other) const {
  require_same(other);
  const long prec = std::min(prec_, other.prec_);
  for (long i = std::min(val_, other.val_); i < prec; ++i) {
    if (coeff(i) != other.coeff(i)) return false;
  }
  return true;
}

bool LaurentSeries::operator==(const LaurentSeries& other) const {
  return ctx_ == other.ctx_ && val_ == other.val_ && prec_ == other.prec_ && coeffs_ == other.coeffs_;
}

std::string LaurentSeries::to_string(long max_terms) const {
  std::ostringstream os;
  long shown = 0;
  for (std::size_t k = 0; k < coeffs_.size() && shown < max_terms; ++k) {
    if (coeffs_[k].is_zero()) continue;
    const long e = val_ + static_cast<long>(k);
    if (shown) os << " + ";
    const bool unit = coeffs_[k].is_one();
    if (!unit || e == 0) os << coeffs_[k].to_string();
    if (e != 0) {
      if (!unit) os << "*";
      os << "t";
      if (e != 1) os << "^" << e;
    }
    ++shown;
  }
  if (shown) os << " + ";
  os << "O(t^" << prec_ << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentSeries& f) { return os << f.to_string(); }

LaurentSeries invert(const LaurentSeries& f) {
  if (f.is_zero()) throw DivisionByZero("cannot invert a series that is zero to its precision");
  const auto r = static_cast<std::size_t>(f.relative_precision());
  auto c = inv_trunc(*f.ctx_, f.coeffs_, r);
  return {*f.ctx_, -f.val_, std::move(c), -f.val_ + static_cast<long>(r)};
}

LaurentSeries pow(const LaurentSeries& f, long e) {
  const FieldCtx& ctx = f.ctx();
  if (e == 0) return LaurentSeries::monomial(ctx, 0, std::max(0L, f.relative_precision()));
  if (e < 0) return pow(invert(f), -e);
  if (f.is_zero()) return LaurentSeries::zero(ctx, f.precision() * e);
  const long r = f.relative_precision();
  std::vector<FieldElement> unit = f.window(f.valuation(), f.precision());
  auto c = pow_trunc(ctx, std::move(unit), e, static_cast<std::size_t>(r));
  return LaurentSeries::from_coeffs(ctx, f.valuation() * e, std::move(c), f.valuation() * e + r);
}

LaurentSeries derivative(const LaurentSeries& f) {
  const FieldCtx& ctx = *f.ctx_;
  std::vector<FieldElement> c;
  c.reserve(f.coeffs_.size());
  for (std::size_t k = 0; k < f.coeffs_.size(); ++k) {
    const long e = f.val_ + static_cast<long>(k);
    c.push_back(f.coeffs_[k] * ctx.from_int(e));
  }
  return {ctx, f.val_ - 1, std::move(c), f.prec_ - 1};
}

LaurentSeries substitute(const LaurentSeries& f, const LaurentSeries& g) {
  f.require_same(g);
  const FieldCtx& ctx = *f.ctx_;
  if (g.is_zero() || g.valuation() != 1) {
    throw PreconditionError("substitute needs an inner series of valuation exactly 1");
  }
  if (f.is_zero()) return LaurentSeries::zero(ctx, f.prec_);
  const long rel_g = g.relative_precision();
  const long prec = std::min(f.prec_, f.val_ + rel_g);
  const long len_l = prec - f.val_;
  if (len_l <= 0) return LaurentSeries::zero(ctx, prec);
  const auto len = static_cast<std::size_t>(len_l);

  // g = t*u; evaluate sum c_k (t u)^k by Horner, then multiply by u^{val f}.
  const Coeffs& u = g.coeffs_;
  Coeffs tu(len, ctx.zero());
  for (std::size_t i = 1; i < len && i - 1 < u.size(); ++i) tu[i] = u[i - 1];

  Coeffs acc(len, ctx.zero());
  const std::size_t top = std::min(f.coeffs_.size(), len);
  for (std::size_t k = top; k-- > 0;) {
    acc = mul_trunc(ctx, acc, tu, len);
    acc[0] += f.coeffs_[k];
  }
  Coeffs u_unit(u.begin(), u.begin() + static_cast<long>(std::min(u.size(), len)));
  acc = mul_trunc(ctx, acc, pow_trunc(ctx, std::move(u_unit), f.val_, len), len);
  return {ctx, f.val_, std::move(acc), prec};
}

LaurentSeries nth_root(const LaurentSeries& f, long n) {
  const FieldCtx& ctx = *f.ctx_;
  if (n < 1 || n % static_cast<long>(ctx.characteristic()) == 0) {
    throw PreconditionError("nth_root needs n >= 1 coprime to the characteristic");
  }
  if (f.is_zero()) throw PreconditionError("nth_root of a series that is zero to its precision");
  if (f.val_ % n != 0) throw PreconditionError("nth_root needs n to divide the valuation");
  const auto r = static_cast<std::size_t>(f.relative_precision());
  const Coeffs& c = f.coeffs_;

  // Newton iteration w <- w - (w^n - c) / (n w^{n-1}), doubling the precision each step.
  Coeffs w{gf::nth_root(c.front(), static_cast<std::uint64_t>(n))};
  const FieldElement n_el = ctx.from_int(n);
  std::size_t cur = 1;
  while (cur < r) {
    cur = std::min(2 * cur, r);
    w.resize(cur, ctx.zero());
    const Coeffs w_pow = pow_trunc(ctx, w, n - 1, cur);
    Coeffs residual = mul_trunc(ctx, w_pow, w, cur);
    for (std::size_t i = 0; i < cur && i < c.size(); ++i) residual[i] -= c[i];
    Coeffs denom = w_pow;
    for (auto& d : denom) d *= n_el;
    const Coeffs step = mul_trunc(ctx, residual, inv_trunc(ctx, denom, cur), cur);
    for (std::size_t i = 0; i < cur; ++i) w[i] -= step[i];
  }
  const long val = f.val_ / n;
  return {ctx, val, std::move(w), val + static_cast<long>(r)};
}

}  // namespace hodgesplit::laurent
