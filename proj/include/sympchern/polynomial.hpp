#pragma once

#include <string>
#include <vector>

#include "sympchern/rational.hpp"

namespace sympchern {

/// Univariate polynomial in the family parameter t with exact rational
/// coefficients, stored by ascending degree with a nonzero leading
/// coefficient (the zero polynomial has an empty coefficient list).
class PolyQ {
 public:
  PolyQ() = default;
  PolyQ(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }
  PolyQ(Rational constant) {  // NOLINT: implicit by design
    coeffs_.push_back(std::move(constant));
    trim();
  }
  PolyQ(int constant) : PolyQ(Rational(constant)) {}  // NOLINT

  static PolyQ monomial(Rational coeff, int degree);
  static PolyQ variable() { return monomial(Rational(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of t^i (0 beyond the degree).
  Rational coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i]
                                                            : Rational(0);
  }
  const Rational& leading() const { return coeffs_.back(); }

  Rational eval(const Rational& t) const;

  PolyQ derivative() const;

  PolyQ operator-() const;
  friend PolyQ operator+(const PolyQ& p, const PolyQ& q);
  friend PolyQ operator-(const PolyQ& p, const PolyQ& q);
  friend PolyQ operator*(const PolyQ& p, const PolyQ& q);
  PolyQ operator*(const Rational& c) const;
  PolyQ& operator+=(const PolyQ& q) { return *this = *this + q; }
  PolyQ& operator-=(const PolyQ& q) { return *this = *this - q; }
  PolyQ& operator*=(const PolyQ& q) { return *this = *this * q; }

  friend bool operator==(const PolyQ& p, const PolyQ& q) = default;

  /// Euclidean division: returns (quotient, remainder) with
  /// deg(remainder) < deg(divisor). Throws ZeroPolynomial on zero divisor.
  std::pair<PolyQ, PolyQ> divmod(const PolyQ& divisor) const;

  /// Divides every coefficient by the leading one.
  PolyQ monic() const;

  /// Scales by the positive rational that makes all coefficients coprime
  /// integers (sign of the leading coefficient is preserved).
  PolyQ primitive() const;

  /// gcd(p, q), returned monic; gcd(0, 0) = 0.
  static PolyQ gcd(PolyQ p, PolyQ q);

  /// p / gcd(p, p'): same roots, all simple.
  PolyQ squarefree_part() const;

  /// Human-readable form in the variable `var`, e.g. "5/4 - t^2".
  std::string str(const std::string& var = "t") const;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

inline PolyQ operator*(const Rational& c, const PolyQ& p) { return p * c; }

}  // namespace sympchern
