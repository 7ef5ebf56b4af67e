#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lorhol/matrix.hpp"

namespace lorhol {

struct RowEchelon {
  Matrix reduced;                   // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Gauss-Jordan elimination over Q.
RowEchelon row_reduce(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}; the basis vector for free column f has x_f = 1 and
/// zeros in the other free columns. A 0 x c matrix yields the standard basis.
std::vector<Vector> nullspace(const Matrix& m);

/// Some x with a x = b, or nullopt if the system is inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Canonical (reduced echelon) basis of span(vectors). `dim` is the ambient
/// length, needed when `vectors` is empty.
std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t dim);

/// Basis of span(a) + span(b). Throws std::invalid_argument on length mismatch.
std::vector<Vector> span_union(const std::vector<Vector>& a, const std::vector<Vector>& b);

/// Basis of span(a) ∩ span(b).
std::vector<Vector> span_intersection(const std::vector<Vector>& a, const std::vector<Vector>& b,
                                      std::size_t dim);

bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t dim);

/// Coefficients c with sum c_i basis_i = v, if v lies in the span. The basis
/// must be linearly independent.
std::optional<Vector> coordinates_in(const std::vector<Vector>& basis, const Vector& v);

/// Incrementally maintained reduced echelon basis; cheap membership tests.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  std::size_t ambient_dim() const { return dim_; }
  std::size_t size() const { return rows_.size(); }

  /// Residual of v after elimination against the current rows.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const { return is_zero(reduce(v)); }
  /// Adds v; returns false if it was already in the span.
  bool insert(const Vector& v);
  /// Rows in reduced echelon form, sorted by pivot.
  std::vector<Vector> basis() const;

 private:
  std::size_t dim_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace lorhol
