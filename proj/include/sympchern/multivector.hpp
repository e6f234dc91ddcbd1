#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "sympchern/gaussian.hpp"

namespace sympchern {

/// Basis index set of a wedge monomial: bit i set means the covector e^{i+1}
/// participates (indices 1..2n, stored 0-based).
using IndexMask = std::uint32_t;

Int factorial(int n);

/// Exact element of the complexified exterior algebra over the standard
/// 2n-dimensional symplectic model space. Only strictly increasing index
/// tuples are stored, so antisymmetry is canonical.
class MultiVector {
 public:
  explicit MultiVector(int half_dim) : n_(half_dim) {}

  static MultiVector basis(int half_dim, IndexMask mask,
                           GaussianRational coeff = GaussianRational(1));

  int half_dim() const { return n_; }
  int dim() const { return 2 * n_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_real() const;
  bool is_homogeneous() const;
  /// Degree of a homogeneous element (0 for the zero element); throws
  /// WrongDegree on mixed-degree input.
  int degree() const;

  const std::map<IndexMask, GaussianRational>& terms() const {
    return terms_;
  }
  GaussianRational coeff(IndexMask mask) const;

  void add_term(IndexMask mask, const GaussianRational& c);

  MultiVector operator-() const;
  friend MultiVector operator+(const MultiVector& a, const MultiVector& b);
  friend MultiVector operator-(const MultiVector& a, const MultiVector& b);
  MultiVector operator*(const GaussianRational& c) const;
  friend bool operator==(const MultiVector& a, const MultiVector& b) = default;

  /// Complex conjugation of coefficients (the real basis is fixed).
  MultiVector conjugate() const;

  /// Pullback along J: e^{2r-1} -> -e^{2r}, e^{2r} -> e^{2r-1}.
  MultiVector j_pullback() const;

  /// Pointwise Hermitian inner product with the increasing-tuple basis
  /// orthonormal: (a, b) = sum_I a_I * conj(b_I).
  GaussianRational inner(const MultiVector& other) const;
  Rational norm_sq() const;

  std::string str() const;

 private:
  int n_;
  std::map<IndexMask, GaussianRational> terms_;
};

MultiVector wedge(const MultiVector& a, const MultiVector& b);
MultiVector wedge_pow(const MultiVector& a, int k);

/// The standard symplectic model space: real basis e_1..e_2n with
/// J e_{2i-1} = e_{2i}, omega = sum e^{2i-1} ^ e^{2i}, volume sigma =
/// omega^n / n!.
class ModelSpace {
 public:
  explicit ModelSpace(int half_dim);

  int n() const { return n_; }
  int dim() const { return 2 * n_; }

  /// e^i, 1-based.
  MultiVector covector(int i) const;
  /// Complex covector eps^j = e^{2j-1} + i e^{2j}, 1-based, expanded over
  /// the real basis.
  MultiVector complex_covector(int j) const;

  const MultiVector& omega() const { return omega_; }
  /// sigma = omega^n / n! = e^1 ^ ... ^ e^{2n}.
  const MultiVector& volume_form() const { return sigma_; }

  /// Coefficient of the volume form in a top-degree element; throws
  /// WrongDegree if other terms are present.
  GaussianRational top_coefficient(const MultiVector& a) const;

 private:
  int n_;
  MultiVector omega_{0};
  MultiVector sigma_{0};
};

}  // namespace sympchern
