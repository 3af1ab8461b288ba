#pragma once

/**
 * @file laurent.hpp
 * @brief Truncated Laurent series k((t)) over a finite field.
 *
 * A series is stored densely from its valuation up to its absolute precision:
 * the value is  sum_{i=val}^{prec-1} c_i t^i + O(t^prec).  The first stored
 * coefficient is nonzero; a series with no known nonzero coefficient is
 * O(t^prec) and reports valuation == prec.
 *
 * Every operation returns exactly the digits its inputs determine and no more:
 * precisions only shrink, shifted by valuations where the algebra says so.
 */

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hodgesplit/gf.hpp"

namespace hodgesplit::laurent {

using gf::FieldCtx;
using gf::FieldElement;

class LaurentSeries {
 public:
  /// O(t^prec).
  static LaurentSeries zero(const FieldCtx& ctx, long prec);
  /// c * t^exponent + O(t^prec).  Requires exponent <= prec.
  static LaurentSeries monomial(const FieldElement& c, long exponent, long prec);
  /// t^exponent + O(t^prec).
  static LaurentSeries monomial(const FieldCtx& ctx, long exponent, long prec);
  /// sum coeffs[k] t^{start+k} + O(t^prec); coefficients at or above prec are dropped.
  static LaurentSeries from_coeffs(const FieldCtx& ctx, long start, std::vector<FieldElement> coeffs,
                                   long prec);
  /// Same with integer coefficients mapped into the field.
  static LaurentSeries from_ints(const FieldCtx& ctx, long start, const std::vector<long long>& coeffs,
                                 long prec);

  const FieldCtx& ctx() const { return *ctx_; }
  /// Index of the first nonzero coefficient, or precision() for O(t^prec).
  long valuation() const { return val_; }
  long precision() const { return prec_; }
  /// prec - val: number of known digits past the leading term.
  long relative_precision() const { return prec_ - val_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of t^i.  Throws PrecisionError for i >= precision().
  FieldElement coeff(long i) const;
  FieldElement leading_coeff() const;

  /// Same series known only modulo t^new_prec (new_prec <= precision()).
  LaurentSeries truncated(long new_prec) const;
  /// Coefficients t^lo .. t^{hi-1} as a dense vector.  Requires hi <= precision().
  std::vector<FieldElement> window(long lo, long hi) const;

  LaurentSeries operator-() const;
  LaurentSeries operator+(const LaurentSeries& rhs) const;
  LaurentSeries operator-(const LaurentSeries& rhs) const;
  LaurentSeries operator*(const LaurentSeries& rhs) const;
  LaurentSeries scaled(const FieldElement& s) const;
  /// Multiplication by t^k.
  LaurentSeries shifted(long k) const;

  /// True when both series agree on every coefficient below min(precisions).
  bool agrees_with(const LaurentSeries& other) const;
  /// Structural equality: same context, precision and coefficients.
  bool operator==(const LaurentSeries& other) const;

  std::string to_string(long max_terms = 12) const;
  friend std::ostream& operator<<(std::ostream& os, const LaurentSeries& f);

 private:
  LaurentSeries(const FieldCtx& ctx, long val, std::vector<FieldElement> coeffs, long prec);
  void normalize();
  void require_same(const LaurentSeries& other) const;

  friend LaurentSeries invert(const LaurentSeries&);
  friend LaurentSeries derivative(const LaurentSeries&);
  friend LaurentSeries substitute(const LaurentSeries&, const LaurentSeries&);
  friend LaurentSeries nth_root(const LaurentSeries&, long);

  const FieldCtx* ctx_;
  long val_;
  std::vector<FieldElement> coeffs_;  // coefficients of t^val .. t^{prec-1}
  long prec_;
};

/// 1/f.  Throws DivisionByZero if f is O(t^prec).
LaurentSeries invert(const LaurentSeries& f);
/// f^e for any integer e; negative exponents go through invert.
LaurentSeries pow(const LaurentSeries& f, long e);
/// Term-wise d/dt; the precision drops by one.
LaurentSeries derivative(const LaurentSeries& f);
/// f(g(t)) for g of valuation exactly 1.
LaurentSeries substitute(const LaurentSeries& f, const LaurentSeries& g);
/// u with u^n = f.  Needs p not dividing n, n | val(f), and an n-th root of the leading
/// coefficient in the field; the branch is fixed by gf::nth_root of that coefficient.
LaurentSeries nth_root(const LaurentSeries& f, long n);

}  // namespace hodgesplit::laurent
