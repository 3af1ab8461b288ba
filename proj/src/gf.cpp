#include "hodgesplit/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <utility>

#include "hodgesplit/errors.hpp"

namespace hodgesplit::gf {

namespace {

constexpr std::uint64_t kRootSearchLimit = std::uint64_t{1} << 26;
constexpr std::uint64_t kFactorSearchLimit = 1'000'000;

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

std::uint32_t powmod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

// Remainder of `num` modulo the monic polynomial `den` over F_p (coefficients low first).
std::vector<std::uint32_t> poly_rem(std::vector<std::uint32_t> num,
                                    const std::vector<std::uint32_t>& den,
                                    std::uint32_t p) {
  const std::size_t d = den.size() - 1;
  while (num.size() > d) {
    const std::uint32_t lead = num.back();
    const std::size_t shift = num.size() - 1 - d;
    if (lead != 0) {
      for (std::size_t i = 0; i <= d; ++i) {
        num[shift + i] = (num[shift + i] + p - mulmod(lead, den[i], p)) % p;
      }
    }
    num.pop_back();
  }
  return num;
}

bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const int m = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= m / 2; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    if (count > kFactorSearchLimit) {
      throw PreconditionError("irreducibility search too large for modulus of degree " +
                              std::to_string(m) + " over F_" + std::to_string(p));
    }
    for (std::uint64_t k = 0; k < count; ++k) {
      std::vector<std::uint32_t> g(d + 1, 0);
      std::uint64_t rest = k;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      g[d] = 1;
      const auto r = poly_rem(f, g, p);
      if (std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; })) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

struct CtxRegistry {
  std::mutex mutex;
  std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, std::unique_ptr<FieldCtx>> ctxs;

  static CtxRegistry& instance() {
    static CtxRegistry registry;
    return registry;
  }

  const FieldCtx& get(std::uint32_t p, std::vector<std::uint32_t> modulus) {
    std::lock_guard lock(mutex);
    auto key = std::make_pair(p, modulus);
    auto it = ctxs.find(key);
    if (it == ctxs.end()) {
      it = ctxs.emplace(std::move(key), std::unique_ptr<FieldCtx>(new FieldCtx(p, std::move(modulus))))
               .first;
    }
    return *it->second;
  }
};

FieldCtx::FieldCtx(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), m_(modulus.empty() ? 1 : static_cast<int>(modulus.size()) - 1), modulus_(std::move(modulus)) {
  order_ = 1;
  for (int i = 0; i < m_; ++i) order_ *= p_;
}

const FieldCtx& FieldCtx::prime(std::uint32_t p) {
  if (p >= (std::uint32_t{1} << 31) || !is_prime(p)) {
    throw PreconditionError("F_p requires a prime p < 2^31, got " + std::to_string(p));
  }
  return CtxRegistry::instance().get(p, {});
}

const FieldCtx& FieldCtx::extension(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  prime(p);
  const int m = static_cast<int>(modulus.size()) - 1;
  if (m < 2 || m > kMaxDegree) {
    throw PreconditionError("extension degree must lie in 2.." + std::to_string(kMaxDegree));
  }
  for (auto& c : modulus) c %= p;
  if (modulus.back() != 1) throw PreconditionError("modulus must be monic");
  long double size = 1;
  for (int i = 0; i < m; ++i) size *= p;
  if (size >= 9.2e18L) throw PreconditionError("extension field too large");
  if (!is_irreducible(modulus, p)) throw PreconditionError("modulus is reducible over F_p");
  return CtxRegistry::instance().get(p, std::move(modulus));
}

const FieldCtx& FieldCtx::f4() {
  static const FieldCtx& ctx = extension(2, {1, 1, 1});
  return ctx;
}

FieldElement FieldCtx::zero() const {
  FieldElement e;
  e.ctx_ = this;
  return e;
}

FieldElement FieldCtx::one() const { return from_int(1); }

FieldElement FieldCtx::from_int(std::int64_t value) const {
  FieldElement e = zero();
  const auto p = static_cast<std::int64_t>(p_);
  e.c_[0] = static_cast<std::uint32_t>(((value % p) + p) % p);
  return e;
}

FieldElement FieldCtx::generator() const {
  if (m_ < 2) throw PreconditionError("generator() needs a proper extension field");
  FieldElement e = zero();
  e.c_[1] = 1;
  return e;
}

FieldElement FieldCtx::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (static_cast<int>(coeffs.size()) > m_) {
    throw PreconditionError("too many coefficients for " + name());
  }
  FieldElement e = zero();
  for (std::size_t i = 0; i < coeffs.size(); ++i) e.c_[i] = coeffs[i] % p_;
  return e;
}

FieldElement FieldCtx::element(std::uint64_t index) const {
  if (index >= order_) throw PreconditionError("element index out of range");
  FieldElement e = zero();
  for (int i = 0; i < m_; ++i) {
    e.c_[i] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  return e;
}

std::string FieldCtx::name() const {
  if (m_ == 1) return "F_" + std::to_string(p_);
  std::ostringstream os;
  os << "F_" << p_ << "^" << m_;
  return os.str();
}

const FieldCtx& FieldElement::ctx() const {
  if (!ctx_) throw ContextMismatch("field element has no context");
  return *ctx_;
}

void FieldElement::require_same(const FieldElement& other) const {
  if (ctx_ == nullptr || ctx_ != other.ctx_) {
    throw ContextMismatch("field elements belong to different contexts");
  }
}

bool FieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::uint32_t c) { return c == 0; });
}

bool FieldElement::is_one() const {
  return c_[0] == 1 && std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t c) { return c == 0; });
}

std::span<const std::uint32_t> FieldElement::coeffs() const {
  return {c_.data(), static_cast<std::size_t>(ctx().m_)};
}

std::uint64_t FieldElement::index() const {
  const auto& k = ctx();
  std::uint64_t idx = 0;
  for (int i = k.m_ - 1; i >= 0; --i) idx = idx * k.p_ + c_[i];
  return idx;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  const auto p = ctx().p_;
  for (auto& c : r.c_) c = c == 0 ? 0 : p - c;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  require_same(rhs);
  const auto p = ctx_->p_;
  for (int i = 0; i < ctx_->m_; ++i) {
    const std::uint64_t s = static_cast<std::uint64_t>(c_[i]) + rhs.c_[i];
    c_[i] = static_cast<std::uint32_t>(s >= p ? s - p : s);
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  require_same(rhs);
  const auto p = ctx_->p_;
  for (int i = 0; i < ctx_->m_; ++i) {
    c_[i] = c_[i] >= rhs.c_[i] ? c_[i] - rhs.c_[i] : c_[i] + (p - rhs.c_[i]);
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  require_same(rhs);
  const auto p = ctx_->p_;
  const int m = ctx_->m_;
  if (m == 1) {
    c_[0] = mulmod(c_[0], rhs.c_[0], p);
    return *this;
  }
  std::array<std::uint64_t, 2 * kMaxDegree - 1> prod{};
  for (int i = 0; i < m; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < m; ++j) {
      prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(c_[i]) * rhs.c_[j]) % p;
    }
  }
  const auto& f = ctx_->modulus_;
  for (int k = 2 * m - 2; k >= m; --k) {
    const std::uint64_t lead = prod[k];
    if (lead == 0) continue;
    for (int i = 0; i <= m; ++i) {
      prod[k - m + i] = (prod[k - m + i] + (p - lead) * f[i]) % p;
    }
  }
  for (int i = 0; i < m; ++i) c_[i] = static_cast<std::uint32_t>(prod[i]);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  require_same(rhs);
  return *this *= rhs.inv();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.ctx_ == b.ctx_ && a.c_ == b.c_;
}

FieldElement FieldElement::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in " + ctx().name());
  const auto& k = ctx();
  if (k.m_ == 1) {
    FieldElement r = *this;
    r.c_[0] = powmod(c_[0], k.p_ - 2, k.p_);
    return r;
  }
  return pow(static_cast<std::int64_t>(k.order_ - 2));
}

FieldElement FieldElement::pow(std::int64_t e) const {
  if (e < 0) return inv().pow(-e);
  FieldElement base = *this;
  FieldElement r = ctx().one();
  auto ue = static_cast<std::uint64_t>(e);
  while (ue) {
    if (ue & 1) r *= base;
    base *= base;
    ue >>= 1;
  }
  return r;
}

std::string FieldElement::to_string() const {
  const auto& k = ctx();
  if (k.m_ == 1) return std::to_string(c_[0]);
  std::ostringstream os;
  bool first = true;
  for (int i = k.m_ - 1; i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << c_[i];
      continue;
    }
    if (c_[i] != 1) os << c_[i] << "*";
    os << "w";
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.to_string(); }

FieldElement nth_root(const FieldElement& a, std::uint64_t n) {
  const auto& k = a.ctx();
  if (n == 0 || n % k.characteristic() == 0) {
    throw PreconditionError("nth_root needs n >= 1 coprime to p = " + std::to_string(k.characteristic()));
  }
  if (a.is_one()) return a;
  if (k.order() > kRootSearchLimit) {
    throw PreconditionError("field " + k.name() + " too large for exhaustive root search");
  }
  for (std::uint64_t i = 0; i < k.order(); ++i) {
    FieldElement r = k.element(i);
    if (r.pow(static_cast<std::int64_t>(n)) == a) return r;
  }
  throw NoRootError("no " + std::to_string(n) + "-th root of " + a.to_string() + " in " + k.name());
}

}  // namespace hodgesplit::gf
