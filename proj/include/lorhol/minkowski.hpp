#pragma once

// Minkowski space R^{1,n+1} in a Witt basis (e_-, e_1, ..., e_n, e_+) and the
// graded Lie algebra g = so(1,n+1) = g_- + g_0 + g_+ of matrices X with
// X^T I + I X = 0.
//
// Index order is fixed everywhere: 0 is e_-, 1..n the screen V_0, n+1 is e_+.
// With E = diag(-1, 0, 1) the grading element, g_- is the (-1)-eigenspace of
// ad_E and maps V_+ -> V_0 -> V_- (and V_- to zero).

#include <cstddef>
#include <iosfwd>

#include "lorhol/matrix.hpp"

namespace lorhol {

class WittFrame {
 public:
  /// Throws std::invalid_argument for n < 1.
  explicit WittFrame(int n);

  int n() const { return n_; }
  std::size_t dim() const { return static_cast<std::size_t>(n_) + 2; }
  std::size_t minus() const { return 0; }
  std::size_t plus() const { return dim() - 1; }
  std::size_t screen(std::size_t i) const { return 1 + i; }
  bool is_screen(std::size_t a) const { return a >= 1 && a <= static_cast<std::size_t>(n_); }

  /// dim so(1,n+1) = (n+2)(n+1)/2.
  std::size_t algebra_dim() const { return dim() * (dim() - 1) / 2; }
  std::size_t so_dim() const { return static_cast<std::size_t>(n_ * (n_ - 1) / 2); }

  const Matrix& metric() const { return metric_; }

  friend bool operator==(const WittFrame& a, const WittFrame& b) { return a.n_ == b.n_; }

 private:
  int n_;
  Matrix metric_;
};

void require_same_frame(int n1, int n2);

/// Coordinates of a vector in the Witt basis.
class MinkVector {
 public:
  MinkVector() = default;
  explicit MinkVector(Vector coords);
  static MinkVector zero(const WittFrame& f) { return MinkVector(Vector(f.dim())); }
  static MinkVector basis(const WittFrame& f, std::size_t a) { return MinkVector(unit(f.dim(), a)); }
  static MinkVector e_minus(const WittFrame& f) { return basis(f, f.minus()); }
  static MinkVector e_plus(const WittFrame& f) { return basis(f, f.plus()); }
  /// a e_- + x + b e_+ with x in V_0.
  static MinkVector from_parts(const Rational& a, const Vector& x, const Rational& b);

  int n() const { return static_cast<int>(coords_.size()) - 2; }
  const Vector& coords() const { return coords_; }
  const Rational& operator[](std::size_t a) const { return coords_[a]; }
  const Rational& minus_part() const { return coords_.front(); }
  const Rational& plus_part() const { return coords_.back(); }
  Vector screen_part() const;
  bool is_zero() const { return lorhol::is_zero(coords_); }

  MinkVector& operator+=(const MinkVector& o);
  MinkVector& operator-=(const MinkVector& o);
  friend MinkVector operator+(MinkVector a, const MinkVector& b) { return a += b; }
  friend MinkVector operator-(MinkVector a, const MinkVector& b) { return a -= b; }
  friend MinkVector operator*(const Rational& s, const MinkVector& v) { return MinkVector(s * v.coords_); }
  MinkVector operator-() const { return MinkVector(-coords_); }
  friend bool operator==(const MinkVector&, const MinkVector&) = default;

 private:
  Vector coords_;
};

/// <u, v> = u^T I v.
Rational inner(const MinkVector& u, const MinkVector& v);

/// Element of g with its grading components cached:
/// matrix = (a, A) + v-bar + (w-bar)^T where (a, A) = diag(a, A, -a) in g_0,
/// v-bar in g_- and (w-bar)^T in g_+.
class GradedElement {
 public:
  GradedElement() = default;

  /// Throws NotInAlgebra if m^T I + I m != 0, std::invalid_argument on bad shape.
  static GradedElement from_matrix(const Matrix& m);
  static GradedElement from_components(int n, const Rational& a, const Matrix& A, const Vector& v,
                                       const Vector& w);
  static GradedElement zero(int n);
  /// E = diag(-1, 0, 1), i.e. (a, A) = (-1, 0).
  static GradedElement grading(int n);
  static GradedElement embed_minus(const Vector& v);
  static GradedElement embed_plus(const Vector& w);
  static GradedElement embed_zero(const Rational& a, const Matrix& A);

  /// Linear coordinates [a, A_ij (i<j), v, w]; length WittFrame::algebra_dim().
  static GradedElement from_coords(int n, const Vector& c);
  Vector coords() const;

  int n() const { return n_; }
  const Matrix& matrix() const { return m_; }
  const Rational& a() const { return a_; }
  const Matrix& A() const { return A_; }
  const Vector& v() const { return v_; }
  const Vector& w() const { return w_; }

  bool is_zero() const { return m_.is_zero(); }
  /// In the stabiliser p of the line R e_- (no g_+ part).
  bool in_parabolic() const { return lorhol::is_zero(w_); }
  bool in_g_minus() const { return a_.is_zero() && A_.is_zero() && lorhol::is_zero(w_); }

  GradedElement operator-() const;
  GradedElement& operator+=(const GradedElement& o);
  GradedElement& operator-=(const GradedElement& o);
  friend GradedElement operator+(GradedElement x, const GradedElement& y) { return x += y; }
  friend GradedElement operator-(GradedElement x, const GradedElement& y) { return x -= y; }
  friend GradedElement operator*(const Rational& s, const GradedElement& x);
  friend bool operator==(const GradedElement& x, const GradedElement& y) { return x.m_ == y.m_; }

 private:
  void split();

  int n_ = 0;
  Matrix m_;
  Rational a_;
  Matrix A_;
  Vector v_;
  Vector w_;
};

std::ostream& operator<<(std::ostream& os, const GradedElement& x);

/// True iff m^T I + I m = 0 for the Witt metric of matching size.
bool in_algebra(const Matrix& m);

/// Matrix commutator xy - yx.
GradedElement bracket(const GradedElement& x, const GradedElement& y);

/// Matrix-vector product X u.
MinkVector act(const GradedElement& x, const MinkVector& u);

enum class Part { minus, zero, plus, R, son };

/// The named graded piece of x, embedded back into g. minus/zero/plus sum to x;
/// R and son split zero into (a, 0) + (0, A).
GradedElement part(const GradedElement& x, Part p);

inline const Vector& pi_minus(const GradedElement& x) { return x.v(); }
inline const Vector& pi_plus(const GradedElement& x) { return x.w(); }
inline const Rational& pi_r(const GradedElement& x) { return x.a(); }
inline const Matrix& pi_so(const GradedElement& x) { return x.A(); }

/// (a, A) . x = a x + A x, the co(n) action on V_0.
Vector co_action(const Rational& a, const Matrix& A, const Vector& x);

/// Standard basis element J_ij of so(n): e_i -> e_j, e_j -> -e_i.
Matrix so_generator(int n, std::size_t i, std::size_t j);

/// Canonical basis of g, ordered as GradedElement::coords.
std::vector<GradedElement> algebra_basis(int n);

}  // namespace lorhol
