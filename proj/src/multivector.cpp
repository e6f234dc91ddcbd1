#include "sympchern/multivector.hpp"

#include <bit>
#include <sstream>
#include <vector>

#include "sympchern/errors.hpp"

namespace sympchern {

Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

MultiVector MultiVector::basis(int half_dim, IndexMask mask,
                               GaussianRational coeff) {
  MultiVector v(half_dim);
  v.add_term(mask, coeff);
  return v;
}

bool MultiVector::is_real() const {
  for (const auto& [mask, c] : terms_)
    if (!c.is_real()) return false;
  return true;
}

bool MultiVector::is_homogeneous() const {
  int deg = -1;
  for (const auto& [mask, c] : terms_) {
    int d = std::popcount(mask);
    if (deg < 0) deg = d;
    if (d != deg) return false;
  }
  return true;
}

int MultiVector::degree() const {
  if (terms_.empty()) return 0;
  if (!is_homogeneous())
    throw WrongDegree("degree of a mixed-degree multivector");
  return std::popcount(terms_.begin()->first);
}

GaussianRational MultiVector::coeff(IndexMask mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? GaussianRational(0) : it->second;
}

void MultiVector::add_term(IndexMask mask, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiVector MultiVector::operator-() const {
  MultiVector r(n_);
  for (const auto& [mask, c] : terms_) r.terms_.emplace(mask, -c);
  return r;
}

namespace {

void check_same_space(const MultiVector& a, const MultiVector& b) {
  if (a.half_dim() != b.half_dim())
    throw MismatchedModelSpace("multivectors from different model spaces");
}

}  // namespace

MultiVector operator+(const MultiVector& a, const MultiVector& b) {
  check_same_space(a, b);
  MultiVector r = a;
  for (const auto& [mask, c] : b.terms()) r.add_term(mask, c);
  return r;
}

MultiVector operator-(const MultiVector& a, const MultiVector& b) {
  return a + (-b);
}

MultiVector MultiVector::operator*(const GaussianRational& c) const {
  MultiVector r(n_);
  if (c.is_zero()) return r;
  for (const auto& [mask, t] : terms_) r.terms_.emplace(mask, t * c);
  return r;
}

MultiVector MultiVector::conjugate() const {
  MultiVector r(n_);
  for (const auto& [mask, c] : terms_) r.terms_.emplace(mask, c.conj());
  return r;
}

MultiVector MultiVector::j_pullback() const {
  MultiVector r(n_);
  for (const auto& [mask, c] : terms_) {
    // Map every covector through J*, then sort back to increasing order.
    std::vector<int> image;
    int sign = 1;
    for (int i = 0; i < dim(); ++i) {
      if (!(mask & (IndexMask{1} << i))) continue;
      if (i % 2 == 0) {  // e^{2r-1} -> -e^{2r}
        image.push_back(i + 1);
        sign = -sign;
      } else {  // e^{2r} -> e^{2r-1}
        image.push_back(i - 1);
      }
    }
    for (std::size_t i = 0; i + 1 < image.size(); ++i)
      for (std::size_t j = 0; j + 1 < image.size() - i; ++j)
        if (image[j] > image[j + 1]) {
          std::swap(image[j], image[j + 1]);
          sign = -sign;
        }
    IndexMask out = 0;
    for (int i : image) out |= IndexMask{1} << i;
    r.add_term(out, c * GaussianRational(sign));
  }
  return r;
}

GaussianRational MultiVector::inner(const MultiVector& other) const {
  check_same_space(*this, other);
  GaussianRational sum(0);
  for (const auto& [mask, c] : terms_) {
    GaussianRational oc = other.coeff(mask);
    if (!oc.is_zero()) sum += c * oc.conj();
  }
  return sum;
}

Rational MultiVector::norm_sq() const {
  Rational sum(0);
  for (const auto& [mask, c] : terms_) sum += c.norm_sq();
  return sum;
}

std::string MultiVector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mask, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (int i = 0; i < dim(); ++i)
      if (mask & (IndexMask{1} << i)) os << "*e" << (i + 1);
    if (mask == 0) os << "*1";
  }
  return os.str();
}

MultiVector wedge(const MultiVector& a, const MultiVector& b) {
  check_same_space(a, b);
  MultiVector r(a.half_dim());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;  // repeated covector
      // Parity of moving each index of b past the larger indices of a.
      int inversions = 0;
      IndexMask rest = mb;
      while (rest) {
        int bit = std::countr_zero(rest);
        rest &= rest - 1;
        inversions += std::popcount(ma >> (bit + 1));
      }
      GaussianRational c = ca * cb;
      if (inversions % 2) c = -c;
      r.add_term(ma | mb, c);
    }
  }
  return r;
}

MultiVector wedge_pow(const MultiVector& a, int k) {
  MultiVector r = MultiVector::basis(a.half_dim(), 0);
  for (int i = 0; i < k; ++i) r = wedge(r, a);
  return r;
}

ModelSpace::ModelSpace(int half_dim) : n_(half_dim) {
  if (half_dim < 1)
    throw DimensionTooSmall("model space needs half-dimension >= 1");
  if (2 * half_dim > 24)
    throw DimensionTooLarge("model space half-dimension too large");
  omega_ = MultiVector(n_);
  for (int i = 0; i < n_; ++i)
    omega_.add_term((IndexMask{1} << (2 * i)) | (IndexMask{1} << (2 * i + 1)),
                    GaussianRational(1));
  sigma_ = MultiVector::basis(n_, (IndexMask{1} << (2 * n_)) - 1);
}

MultiVector ModelSpace::covector(int i) const {
  if (i < 1 || i > dim()) throw InvalidSpec("covector index out of range");
  return MultiVector::basis(n_, IndexMask{1} << (i - 1));
}

MultiVector ModelSpace::complex_covector(int j) const {
  if (j < 1 || j > n_)
    throw InvalidSpec("complex covector index out of range");
  MultiVector v = covector(2 * j - 1);
  return v + covector(2 * j) * GaussianRational::i();
}

GaussianRational ModelSpace::top_coefficient(const MultiVector& a) const {
  if (a.half_dim() != n_)
    throw MismatchedModelSpace("multivector from a different model space");
  IndexMask top = (IndexMask{1} << (2 * n_)) - 1;
  for (const auto& [mask, c] : a.terms())
    if (mask != top)
      throw WrongDegree("element is not a multiple of the volume form");
  return a.coeff(top);
}

}  // namespace sympchern
