#pragma once

// Tensors over R^{1,n+1} that the g-module solvers act on:
//   HomTensor     S in V* (x) g, stored as the images S(e_A) of the Witt basis
//   TorsionTensor T in Lambda^2 V* (x) V, stored as an antisymmetric table
//   CurvTensor    R in Lambda^2 V* (x) g, stored as an antisymmetric table
//
// Coordinates: HomTensor lists coords(S(e_A)) for A = 0..n+1; the two
// antisymmetric tables list the values at pairs (A,B), A < B, lexicographic.

#include <cstddef>
#include <utility>
#include <vector>

#include "lorhol/minkowski.hpp"

namespace lorhol {

/// Lexicographic list of pairs (A,B) with A < B < dim.
std::vector<std::pair<std::size_t, std::size_t>> index_pairs(std::size_t dim);

class HomTensor {
 public:
  HomTensor() = default;
  explicit HomTensor(std::vector<GradedElement> images);
  static HomTensor zero(int n);
  static HomTensor from_coords(int n, const Vector& c);
  static std::size_t coord_dim(int n);

  int n() const { return n_; }
  Vector coords() const;
  const std::vector<GradedElement>& images() const { return images_; }
  const GradedElement& operator[](std::size_t a) const { return images_[a]; }
  GradedElement& operator[](std::size_t a) { return images_[a]; }
  GradedElement operator()(const MinkVector& u) const;
  bool is_zero() const;

  HomTensor& operator+=(const HomTensor& o);
  HomTensor& operator-=(const HomTensor& o);
  friend HomTensor operator+(HomTensor x, const HomTensor& y) { return x += y; }
  friend HomTensor operator-(HomTensor x, const HomTensor& y) { return x -= y; }
  friend HomTensor operator*(const Rational& s, const HomTensor& x);
  friend bool operator==(const HomTensor&, const HomTensor&) = default;

 private:
  int n_ = 0;
  std::vector<GradedElement> images_;
};

/// Antisymmetric bilinear table with values of type Value (MinkVector or GradedElement).
template <class Value>
class AntisymmetricTable {
 public:
  AntisymmetricTable() = default;
  explicit AntisymmetricTable(int n);

  int n() const { return n_; }
  std::size_t dim() const { return static_cast<std::size_t>(n_) + 2; }

  const Value& operator()(std::size_t a, std::size_t b) const { return table_[a * dim() + b]; }
  /// Sets the (a,b) value and its antisymmetric partner. Throws on a == b with nonzero value.
  void set(std::size_t a, std::size_t b, const Value& v);
  /// Bilinear extension to arbitrary arguments.
  Value operator()(const MinkVector& u, const MinkVector& v) const;
  bool is_zero() const;

  static std::size_t coord_dim(int n);
  Vector coords() const;
  static AntisymmetricTable from_coords(int n, const Vector& c);

  AntisymmetricTable& operator+=(const AntisymmetricTable& o);
  AntisymmetricTable& operator-=(const AntisymmetricTable& o);
  AntisymmetricTable& operator*=(const Rational& s);
  friend AntisymmetricTable operator+(AntisymmetricTable x, const AntisymmetricTable& y) { return x += y; }
  friend AntisymmetricTable operator-(AntisymmetricTable x, const AntisymmetricTable& y) { return x -= y; }
  friend AntisymmetricTable operator*(const Rational& s, AntisymmetricTable x) { return x *= s; }
  friend bool operator==(const AntisymmetricTable&, const AntisymmetricTable&) = default;

 private:
  int n_ = 0;
  std::vector<Value> table_;
};

using TorsionTensor = AntisymmetricTable<MinkVector>;
using CurvTensor = AntisymmetricTable<GradedElement>;

extern template class AntisymmetricTable<MinkVector>;
extern template class AntisymmetricTable<GradedElement>;

/// (X.S)(v) = [X, S(v)] - S(Xv).
HomTensor act_on_hom(const GradedElement& x, const HomTensor& s);
/// (X.T)(u,v) = X T(u,v) - T(Xu,v) - T(u,Xv).
TorsionTensor act_on_torsion(const GradedElement& x, const TorsionTensor& t);
/// (X.R)(u,v) = [X, R(u,v)] - R(Xu,v) - R(u,Xv).
CurvTensor act_on_curvature(const GradedElement& x, const CurvTensor& r);
/// X v, the defining representation.
inline MinkVector act_on_vector(const GradedElement& x, const MinkVector& v) { return act(x, v); }

/// Cyclic sum f(u,v,w) + f(v,w,u) + f(w,u,v) over basis indices.
template <class F>
auto cyclic_sum(std::size_t a, std::size_t b, std::size_t c, F&& f) {
  auto s = f(a, b, c);
  s += f(b, c, a);
  s += f(c, a, b);
  return s;
}

}  // namespace lorhol
