#pragma once

#include <vector>

#include "sympchern/multivector.hpp"

namespace sympchern {

/// Splitting of a real 2-form into its omega multiple, primitive (1,1) part
/// and J-anti-invariant part. The three summands are pointwise orthogonal
/// and sum to the input.
struct TypeDecomposition {
  MultiVector omega_part;
  MultiVector primitive_11;
  MultiVector anti_invariant;
};

TypeDecomposition decompose(const ModelSpace& space, const MultiVector& xi);

/// Outcome of an exact identity check: holds iff the residual vanishes.
struct IdentityCheck {
  bool holds;
  MultiVector residual;
};

/// xi ^ omega^{n-1} == (n-1)! (xi, omega) sigma, checked exactly.
IdentityCheck verify_wedge_identity_6(const ModelSpace& space,
                                      const MultiVector& xi);

/// xi ^ xi ^ omega^{n-2} == (n-2)! [(xi,omega)^2 - |xi'|^2 + |xi''|^2] sigma,
/// and the primitive-part variant with (n-1)/n (xi,omega)^2 - |xi_0'|^2 +
/// |xi''|^2; both must agree and the residual of the first is returned.
IdentityCheck verify_wedge_identity_7(const ModelSpace& space,
                                      const MultiVector& xi);

struct HodgeRiemannCheck {
  bool holds;
  Rational norm_sq;
};

/// For a constant-coefficient (2l,0)-form alpha (built from the complex
/// covectors eps^j), checks omega^{n-2l} ^ alpha ^ conj(alpha) ==
/// (n-2l)! |alpha|^2 sigma and returns the exact |alpha|^2. Throws WrongType
/// if alpha has any conjugate (anti-holomorphic) component.
HodgeRiemannCheck verify_hodge_riemann(const ModelSpace& space,
                                       const MultiVector& alpha, int l);

struct Inertia {
  int positives = 0;
  int negatives = 0;
  int zeros = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Inertia of a symmetric rational matrix via exact congruence
/// diagonalization.
Inertia matrix_inertia(std::vector<std::vector<Rational>> m);

/// Basis of the J-invariant real 2-forms (dimension n^2).
std::vector<MultiVector> invariant_two_form_basis(const ModelSpace& space);

/// Signature of b(xi, eta) = (xi ^ eta ^ omega^{n-2}) / ((n-2)! sigma) on
/// the J-invariant 2-forms; (1, n^2 - 1, 0) is the expected Lorentz shape.
Inertia signature_of_pairing(const ModelSpace& space);

}  // namespace sympchern
