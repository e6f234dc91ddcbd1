#include "sympchern/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace sympchern {

PolyQ PolyQ::monomial(Rational coeff, int degree) {
  if (coeff.is_zero() || degree < 0) return PolyQ();
  std::vector<Rational> c(degree + 1, Rational(0));
  c[degree] = std::move(coeff);
  return PolyQ(std::move(c));
}

Rational PolyQ::eval(const Rational& t) const {
  Rational r(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    r = r * t + *it;
  return r;
}

PolyQ PolyQ::derivative() const {
  if (coeffs_.size() <= 1) return PolyQ();
  std::vector<Rational> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    c[i - 1] = coeffs_[i] * Rational(static_cast<long long>(i));
  return PolyQ(std::move(c));
}

PolyQ PolyQ::operator-() const {
  std::vector<Rational> c(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
  return PolyQ(std::move(c));
}

PolyQ operator+(const PolyQ& p, const PolyQ& q) {
  std::vector<Rational> c(std::max(p.coeffs_.size(), q.coeffs_.size()),
                          Rational(0));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) c[i] += p.coeffs_[i];
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) c[i] += q.coeffs_[i];
  return PolyQ(std::move(c));
}

PolyQ operator-(const PolyQ& p, const PolyQ& q) { return p + (-q); }

PolyQ operator*(const PolyQ& p, const PolyQ& q) {
  if (p.is_zero() || q.is_zero()) return PolyQ();
  std::vector<Rational> c(p.coeffs_.size() + q.coeffs_.size() - 1,
                          Rational(0));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
      c[i + j] += p.coeffs_[i] * q.coeffs_[j];
  return PolyQ(std::move(c));
}

PolyQ PolyQ::operator*(const Rational& c) const {
  std::vector<Rational> r(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] = coeffs_[i] * c;
  return PolyQ(std::move(r));
}

std::pair<PolyQ, PolyQ> PolyQ::divmod(const PolyQ& divisor) const {
  if (divisor.is_zero()) throw ZeroPolynomial("division by zero polynomial");
  PolyQ rem = *this;
  std::vector<Rational> quot;
  int dd = divisor.degree();
  if (rem.degree() >= dd) quot.assign(rem.degree() - dd + 1, Rational(0));
  while (!rem.is_zero() && rem.degree() >= dd) {
    int k = rem.degree() - dd;
    Rational c = rem.leading() / divisor.leading();
    quot[k] = c;
    rem -= monomial(c, k) * divisor;
  }
  return {PolyQ(std::move(quot)), std::move(rem)};
}

PolyQ PolyQ::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / leading());
}

PolyQ PolyQ::primitive() const {
  if (is_zero()) return *this;
  Int num_gcd = 0;
  Int den_lcm = 1;
  for (const auto& c : coeffs_) {
    num_gcd = boost::multiprecision::gcd(num_gcd, c.num());
    den_lcm = den_lcm / boost::multiprecision::gcd(den_lcm, c.den()) * c.den();
  }
  return *this * Rational(den_lcm, num_gcd);
}

PolyQ PolyQ::gcd(PolyQ p, PolyQ q) {
  while (!q.is_zero()) {
    PolyQ r = p.divmod(q).second;
    p = std::move(q);
    // Primitive normalization keeps coefficient growth in check.
    q = r.primitive();
  }
  return p.monic();
}

PolyQ PolyQ::squarefree_part() const {
  if (is_zero()) return *this;
  if (degree() == 0) return PolyQ(1);
  PolyQ g = gcd(*this, derivative());
  return divmod(g).first.primitive();
}

std::string PolyQ::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool show_coeff = (i == 0) || !(mag == Rational(1));
    if (show_coeff) os << mag.str();
    if (i > 0) {
      if (show_coeff) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace sympchern
