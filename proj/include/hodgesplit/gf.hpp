#pragma once

/**
 * @file gf.hpp
 * @brief Exact arithmetic in small finite fields F_p and F_{p^m}.
 *
 * A field is described by an interned FieldCtx.  Contexts are created once per
 * (p, modulus) pair and live for the whole process, so elements can refer to
 * their context by pointer and stay trivially copyable.  Two elements combine
 * only when they point to the same context.
 *
 * Elements of F_{p^m} are stored as coefficient vectors in the polynomial basis
 * 1, w, ..., w^{m-1}, where w is the class of X in F_p[X]/(modulus).
 */

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace hodgesplit::gf {

inline constexpr int kMaxDegree = 4;

class FieldElement;

class FieldCtx {
 public:
  /// The prime field F_p.  Throws PreconditionError unless p is a prime below 2^31.
  static const FieldCtx& prime(std::uint32_t p);

  /// F_p[X]/(modulus).  `modulus` lists coefficients from the constant term up and
  /// must be monic of degree 2..kMaxDegree and irreducible over F_p.
  static const FieldCtx& extension(std::uint32_t p, std::vector<std::uint32_t> modulus);

  /// F_4 = F_2[w]/(w^2 + w + 1).
  static const FieldCtx& f4();

  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

  std::uint32_t characteristic() const { return p_; }
  int degree() const { return m_; }
  /// Number of elements p^m.
  std::uint64_t order() const { return order_; }
  /// Monic modulus, constant term first; empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const;
  FieldElement one() const;
  /// Image of an integer under Z -> F_p -> this field.
  FieldElement from_int(std::int64_t value) const;
  /// The class of X.  Only defined for proper extensions.
  FieldElement generator() const;
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  /// k-th element of the fixed enumeration order: base-p digits of k, constant digit first.
  FieldElement element(std::uint64_t index) const;

  std::string name() const;

 private:
  FieldCtx(std::uint32_t p, std::vector<std::uint32_t> modulus);

  friend class FieldElement;
  friend struct CtxRegistry;

  std::uint32_t p_;
  int m_;
  std::uint64_t order_;
  std::vector<std::uint32_t> modulus_;
};

/// An element of a finite field.  A default-constructed element has no context and
/// may only be assigned to.
class FieldElement {
 public:
  FieldElement() = default;

  const FieldCtx& ctx() const;
  bool has_ctx() const { return ctx_ != nullptr; }

  bool is_zero() const;
  bool is_one() const;

  std::span<const std::uint32_t> coeffs() const;
  /// Position of this element in FieldCtx::element's enumeration.
  std::uint64_t index() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  /// Elements from different contexts compare unequal.
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  FieldElement inv() const;
  FieldElement pow(std::int64_t e) const;

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const FieldElement& a);

 private:
  friend class FieldCtx;

  const FieldCtx* ctx_ = nullptr;
  std::array<std::uint32_t, kMaxDegree> c_{};

  void require_same(const FieldElement& other) const;
};

/// A root r with r^n = a.  Returns 1 for a = 1, otherwise the first root in the
/// enumeration order of the field.  Throws NoRootError if none exists and
/// PreconditionError if p divides n.
FieldElement nth_root(const FieldElement& a, std::uint64_t n);

bool is_prime(std::uint64_t n);

}  // namespace hodgesplit::gf
