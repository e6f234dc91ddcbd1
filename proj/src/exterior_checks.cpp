#include "sympchern/exterior_checks.hpp"

#include <bit>

#include "sympchern/errors.hpp"

namespace sympchern {

namespace {

void require_real_two_form(const ModelSpace& space, const MultiVector& xi) {
  if (xi.half_dim() != space.n())
    throw MismatchedModelSpace("form from a different model space");
  if (!xi.is_real()) throw NonRealForm("form has nonzero imaginary part");
  if (!xi.is_zero() && (!xi.is_homogeneous() || xi.degree() != 2))
    throw WrongDegree("expected a 2-form");
}

Rational real_inner(const MultiVector& a, const MultiVector& b) {
  GaussianRational v = a.inner(b);
  if (!v.is_real())
    throw InternalError("inner product of real forms is not real");
  return v.re;
}

}  // namespace

TypeDecomposition decompose(const ModelSpace& space, const MultiVector& xi) {
  require_real_two_form(space, xi);
  const Rational half(Int(1), Int(2));
  MultiVector pulled = xi.j_pullback();
  MultiVector invariant = (xi + pulled) * GaussianRational(half);
  MultiVector anti = (xi - pulled) * GaussianRational(half);
  Rational pairing = real_inner(xi, space.omega());
  MultiVector omega_part =
      space.omega() *
      GaussianRational(pairing / Rational(space.n()));
  return TypeDecomposition{omega_part, invariant - omega_part, anti};
}

IdentityCheck verify_wedge_identity_6(const ModelSpace& space,
                                      const MultiVector& xi) {
  require_real_two_form(space, xi);
  Rational pairing = real_inner(xi, space.omega());
  MultiVector lhs = wedge(xi, wedge_pow(space.omega(), space.n() - 1));
  MultiVector rhs =
      space.volume_form() *
      GaussianRational(pairing * Rational(factorial(space.n() - 1)));
  MultiVector residual = lhs - rhs;
  return IdentityCheck{residual.is_zero(), residual};
}

IdentityCheck verify_wedge_identity_7(const ModelSpace& space,
                                      const MultiVector& xi) {
  if (space.n() < 2)
    throw DimensionTooSmall("identity (xi^2 ^ omega^{n-2}) needs n >= 2");
  require_real_two_form(space, xi);
  TypeDecomposition parts = decompose(space, xi);
  Rational pairing = real_inner(xi, space.omega());
  MultiVector invariant = parts.omega_part + parts.primitive_11;

  MultiVector lhs = wedge(wedge(xi, xi), wedge_pow(space.omega(), space.n() - 2));
  Rational fact(factorial(space.n() - 2));

  Rational bracket =
      pairing * pairing - invariant.norm_sq() + parts.anti_invariant.norm_sq();
  MultiVector rhs = space.volume_form() * GaussianRational(bracket * fact);

  Rational n(space.n());
  Rational bracket0 = (n - Rational(1)) / n * pairing * pairing -
                      parts.primitive_11.norm_sq() +
                      parts.anti_invariant.norm_sq();
  MultiVector rhs0 = space.volume_form() * GaussianRational(bracket0 * fact);

  MultiVector residual = lhs - rhs;
  bool holds = residual.is_zero() && (lhs - rhs0).is_zero();
  return IdentityCheck{holds, residual};
}

namespace {

// Coefficients of a real-basis multivector in the eps/eps-bar basis.
// Slot bit 2j-2 stands for eps^j, slot bit 2j-1 for its conjugate.
std::map<IndexMask, GaussianRational> complex_basis_coefficients(
    const MultiVector& a) {
  const Rational half(Int(1), Int(2));
  const GaussianRational half_r(half);
  const GaussianRational minus_half_i(Rational(0), -half);
  const GaussianRational plus_half_i(Rational(0), half);

  std::map<IndexMask, GaussianRational> out;
  for (const auto& [mask, c] : a.terms()) {
    std::map<IndexMask, GaussianRational> acc;
    acc.emplace(0, c);
    for (int i = 0; i < a.dim(); ++i) {
      if (!(mask & (IndexMask{1} << i))) continue;
      int pair = i / 2;
      IndexMask holo = IndexMask{1} << (2 * pair);
      IndexMask anti = IndexMask{1} << (2 * pair + 1);
      // e^{2j-1} = (eps + eps-bar)/2; e^{2j} = (-i eps + i eps-bar)/2.
      std::pair<IndexMask, GaussianRational> options[2] = {
          {holo, i % 2 == 0 ? half_r : minus_half_i},
          {anti, i % 2 == 0 ? half_r : plus_half_i}};
      std::map<IndexMask, GaussianRational> next;
      for (const auto& [m, cm] : acc) {
        for (const auto& [slot, factor] : options) {
          if (m & slot) continue;
          int inversions = std::popcount(m >> (std::countr_zero(slot) + 1));
          GaussianRational v = cm * factor;
          if (inversions % 2) v = -v;
          auto [it, inserted] = next.emplace(m | slot, v);
          if (!inserted) it->second += v;
        }
      }
      acc = std::move(next);
    }
    for (const auto& [m, v] : acc) {
      if (v.is_zero()) continue;
      auto [it, inserted] = out.emplace(m, v);
      if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

constexpr IndexMask kAntiSlots = 0xAAAAAAAAu;

}  // namespace

HodgeRiemannCheck verify_hodge_riemann(const ModelSpace& space,
                                       const MultiVector& alpha, int l) {
  if (alpha.half_dim() != space.n())
    throw MismatchedModelSpace("form from a different model space");
  if (l < 0 || 2 * l > space.n())
    throw WrongDegree("need 0 <= 2l <= n for a (2l,0)-form");
  if (!alpha.is_zero() && (!alpha.is_homogeneous() || alpha.degree() != 2 * l))
    throw WrongDegree("form degree does not match 2l");

  auto complex_coeffs = complex_basis_coefficients(alpha);
  Rational sum_sq(0);
  for (const auto& [mask, c] : complex_coeffs) {
    if (mask & kAntiSlots)
      throw WrongType("form has an anti-holomorphic component");
    sum_sq += c.norm_sq();
  }
  // Hermitian norm convention: |eps^{j_1} ^ ... ^ eps^{j_2l}|^2 = 4^l.
  Rational norm_sq = Rational(Int(1) << (2 * l)) * sum_sq;

  MultiVector product = wedge(wedge_pow(space.omega(), space.n() - 2 * l),
                              wedge(alpha, alpha.conjugate()));
  GaussianRational top = space.top_coefficient(product);
  bool holds = top.is_real() &&
               top.re == Rational(factorial(space.n() - 2 * l)) * norm_sq;
  return HodgeRiemannCheck{holds, norm_sq};
}

Inertia matrix_inertia(std::vector<std::vector<Rational>> m) {
  const std::size_t dim = m.size();
  Inertia inertia;
  for (std::size_t i = 0; i < dim; ++i) {
    if (m[i][i].is_zero()) {
      // Bring a nonzero entry to the pivot by congruence moves.
      std::size_t with_diag = dim;
      for (std::size_t j = i + 1; j < dim; ++j)
        if (!m[j][j].is_zero()) {
          with_diag = j;
          break;
        }
      if (with_diag < dim) {
        std::swap(m[i], m[with_diag]);
        for (auto& row : m) std::swap(row[i], row[with_diag]);
      } else {
        std::size_t off = dim;
        for (std::size_t j = i + 1; j < dim; ++j)
          if (!m[i][j].is_zero()) {
            off = j;
            break;
          }
        if (off == dim) {
          ++inertia.zeros;
          continue;
        }
        // x_i += x_off makes the pivot 2*m[i][off] != 0.
        for (std::size_t k = 0; k < dim; ++k) m[i][k] += m[off][k];
        for (std::size_t k = 0; k < dim; ++k) m[k][i] += m[k][off];
      }
    }
    Rational pivot = m[i][i];
    if (pivot.sign() > 0)
      ++inertia.positives;
    else
      ++inertia.negatives;
    for (std::size_t j = i + 1; j < dim; ++j) {
      if (m[j][i].is_zero()) continue;
      Rational factor = m[j][i] / pivot;
      for (std::size_t k = 0; k < dim; ++k) m[j][k] -= factor * m[i][k];
      for (std::size_t k = 0; k < dim; ++k) m[k][j] -= factor * m[k][i];
    }
  }
  return inertia;
}

std::vector<MultiVector> invariant_two_form_basis(const ModelSpace& space) {
  const int n = space.n();
  std::vector<MultiVector> basis;
  auto e = [&](int i, int j) {
    return wedge(space.covector(i), space.covector(j));
  };
  for (int i = 1; i <= n; ++i) basis.push_back(e(2 * i - 1, 2 * i));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      basis.push_back(e(2 * i - 1, 2 * j - 1) + e(2 * i, 2 * j));
      basis.push_back(e(2 * i - 1, 2 * j) - e(2 * i, 2 * j - 1));
    }
  }
  return basis;
}

Inertia signature_of_pairing(const ModelSpace& space) {
  if (space.n() < 2)
    throw DimensionTooSmall("pairing with omega^{n-2} needs n >= 2");
  auto basis = invariant_two_form_basis(space);
  MultiVector omega_power = wedge_pow(space.omega(), space.n() - 2);
  Rational fact(factorial(space.n() - 2));

  const std::size_t dim = basis.size();
  std::vector<std::vector<Rational>> gram(dim,
                                          std::vector<Rational>(dim, 0));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      MultiVector top = wedge(wedge(basis[i], basis[j]), omega_power);
      GaussianRational c = space.top_coefficient(top);
      if (!c.is_real())
        throw InternalError("pairing of real forms is not real");
      gram[i][j] = gram[j][i] = c.re / fact;
    }
  }
  return matrix_inertia(std::move(gram));
}

}  // namespace sympchern
