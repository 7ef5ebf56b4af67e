#pragma once

// Abstract finite-dimensional Lie algebras over Q given by structure constants,
// with Killing form, derived algebra and exact inertia of symmetric forms.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "lorhol/linalg.hpp"
#include "lorhol/matrix.hpp"

namespace lorhol {

class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// structure[i * dim + j] = [b_i, b_j]; must be antisymmetric.
  LieAlgebra(std::size_t dim, std::vector<Vector> structure);
  static LieAlgebra from_brackets(std::size_t dim, const std::function<Vector(std::size_t, std::size_t)>& br);
  static LieAlgebra abelian(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const Vector& bracket(std::size_t i, std::size_t j) const { return structure_[i * dim_ + j]; }
  Vector bracket(const Vector& x, const Vector& y) const;
  Matrix ad(const Vector& x) const;

  /// Jacobiator J(i,j,k) = [[i,j],k] + [[j,k],i] + [[k,i],j].
  Vector jacobiator(std::size_t i, std::size_t j, std::size_t k) const;
  bool satisfies_jacobi() const;

  /// Structure constants of the subalgebra spanned by `basis` (in that basis).
  /// Throws PreconditionError when the span is not closed.
  LieAlgebra restrict_to(const std::vector<Vector>& basis) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Vector> structure_;
};

/// Basis of [g, g] in the ambient coordinates.
std::vector<Vector> derived_algebra(const LieAlgebra& g);

/// B(x, y) = trace(ad_x ad_y) in the structure basis.
Matrix killing_form(const LieAlgebra& g);

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  bool nondegenerate() const { return zero == 0; }
  bool definite() const { return zero == 0 && (positive == 0 || negative == 0); }
  bool indefinite() const { return positive > 0 && negative > 0; }
};

/// Inertia of a symmetric rational matrix by congruence diagonalization.
Signature signature(const Matrix& symmetric);

}  // namespace lorhol
