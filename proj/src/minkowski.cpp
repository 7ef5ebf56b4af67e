#include "lorhol/minkowski.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

#include "lorhol/errors.hpp"

namespace lorhol {

namespace {

Matrix witt_metric(std::size_t dim) {
  Matrix m(dim, dim);
  m(0, dim - 1) = 1;
  m(dim - 1, 0) = 1;
  for (std::size_t i = 1; i + 1 < dim; ++i) m(i, i) = 1;
  return m;
}

int n_from_dim(std::size_t dim) {
  if (dim < 3) throw std::invalid_argument("matrix too small for a Witt frame (need n >= 1)");
  return static_cast<int>(dim) - 2;
}

}  // namespace

WittFrame::WittFrame(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("screen dimension n must be >= 1, got " + std::to_string(n));
  metric_ = witt_metric(dim());
}

void require_same_frame(int n1, int n2) {
  if (n1 != n2) {
    throw FrameMismatch("frame mismatch: n=" + std::to_string(n1) + " vs n=" + std::to_string(n2));
  }
}

// ---------------------------------------------------------------- MinkVector

MinkVector::MinkVector(Vector coords) : coords_(std::move(coords)) {
  if (coords_.size() < 3) throw std::invalid_argument("Minkowski vector needs length >= 3");
}

MinkVector MinkVector::from_parts(const Rational& a, const Vector& x, const Rational& b) {
  Vector c;
  c.reserve(x.size() + 2);
  c.push_back(a);
  c.insert(c.end(), x.begin(), x.end());
  c.push_back(b);
  return MinkVector(std::move(c));
}

Vector MinkVector::screen_part() const { return Vector(coords_.begin() + 1, coords_.end() - 1); }

MinkVector& MinkVector::operator+=(const MinkVector& o) {
  require_same_frame(n(), o.n());
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

MinkVector& MinkVector::operator-=(const MinkVector& o) {
  require_same_frame(n(), o.n());
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Rational inner(const MinkVector& u, const MinkVector& v) {
  require_same_frame(u.n(), v.n());
  Rational s = u.minus_part() * v.plus_part() + u.plus_part() * v.minus_part();
  for (std::size_t i = 1; i + 1 < u.coords().size(); ++i) s += u[i] * v[i];
  return s;
}

// ------------------------------------------------------------- GradedElement

bool in_algebra(const Matrix& m) {
  if (!m.is_square() || m.rows() < 3) return false;
  const std::size_t d = m.rows();
  // (I m)(r, c) = m(sigma(r), c) where sigma swaps 0 and d-1.
  auto sigma = [d](std::size_t r) { return r == 0 ? d - 1 : (r == d - 1 ? 0 : r); };
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      // (m^T I)(r,c) = m(sigma(c), r)
      if (!(m(sigma(c), r) + m(sigma(r), c)).is_zero()) return false;
    }
  }
  return true;
}

void GradedElement::split() {
  const std::size_t d = m_.rows();
  const std::size_t k = static_cast<std::size_t>(n_);
  a_ = m_(0, 0);
  A_ = m_.block(1, 1, k, k);
  v_ = Vector(k);
  w_ = Vector(k);
  for (std::size_t i = 0; i < k; ++i) {
    v_[i] = m_(1 + i, d - 1);
    w_[i] = m_(d - 1, 1 + i);
  }
}

GradedElement GradedElement::from_matrix(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("algebra element must be a square matrix");
  GradedElement x;
  x.n_ = n_from_dim(m.rows());
  if (!in_algebra(m)) throw NotInAlgebra("matrix does not satisfy X^T I + I X = 0");
  x.m_ = m;
  x.split();
  return x;
}

GradedElement GradedElement::from_components(int n, const Rational& a, const Matrix& A, const Vector& v,
                                              const Vector& w) {
  WittFrame f(n);
  const std::size_t k = static_cast<std::size_t>(n);
  if (A.rows() != k || A.cols() != k) throw std::invalid_argument("A must be n x n");
  if (!A.is_skew()) throw NotInAlgebra("A must be skew-symmetric");
  if (v.size() != k || w.size() != k) throw std::invalid_argument("v and w must have length n");
  const std::size_t d = f.dim();
  Matrix m(d, d);
  m(0, 0) = a;
  m(d - 1, d - 1) = -a;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) m(1 + i, 1 + j) = A(i, j);
    m(0, 1 + i) = -v[i];
    m(1 + i, d - 1) = v[i];
    m(1 + i, 0) = -w[i];
    m(d - 1, 1 + i) = w[i];
  }
  GradedElement x;
  x.n_ = n;
  x.m_ = std::move(m);
  x.a_ = a;
  x.A_ = A;
  x.v_ = v;
  x.w_ = w;
  return x;
}

GradedElement GradedElement::zero(int n) {
  const std::size_t k = static_cast<std::size_t>(WittFrame(n).n());
  return from_components(n, 0, Matrix(k, k), Vector(k), Vector(k));
}

GradedElement GradedElement::grading(int n) {
  const std::size_t k = static_cast<std::size_t>(WittFrame(n).n());
  return from_components(n, -1, Matrix(k, k), Vector(k), Vector(k));
}

GradedElement GradedElement::embed_minus(const Vector& v) {
  const std::size_t k = v.size();
  return from_components(static_cast<int>(k), 0, Matrix(k, k), v, Vector(k));
}

GradedElement GradedElement::embed_plus(const Vector& w) {
  const std::size_t k = w.size();
  return from_components(static_cast<int>(k), 0, Matrix(k, k), Vector(k), w);
}

GradedElement GradedElement::embed_zero(const Rational& a, const Matrix& A) {
  const std::size_t k = A.rows();
  return from_components(static_cast<int>(k), a, A, Vector(k), Vector(k));
}

GradedElement GradedElement::from_coords(int n, const Vector& c) {
  WittFrame f(n);
  if (c.size() != f.algebra_dim()) {
    throw std::invalid_argument("expected " + std::to_string(f.algebra_dim()) + " coordinates, got " +
                                std::to_string(c.size()));
  }
  const std::size_t k = static_cast<std::size_t>(n);
  std::size_t p = 0;
  const Rational a = c[p++];
  Matrix A(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      A(i, j) = c[p];
      A(j, i) = -c[p];
      ++p;
    }
  }
  Vector v(c.begin() + static_cast<std::ptrdiff_t>(p), c.begin() + static_cast<std::ptrdiff_t>(p + k));
  p += k;
  Vector w(c.begin() + static_cast<std::ptrdiff_t>(p), c.end());
  return from_components(n, a, A, v, w);
}

Vector GradedElement::coords() const {
  const std::size_t k = static_cast<std::size_t>(n_);
  Vector c;
  c.reserve(1 + k * (k - 1) / 2 + 2 * k);
  c.push_back(a_);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) c.push_back(A_(i, j));
  }
  c.insert(c.end(), v_.begin(), v_.end());
  c.insert(c.end(), w_.begin(), w_.end());
  return c;
}

GradedElement GradedElement::operator-() const {
  GradedElement x = *this;
  x.m_ = -m_;
  x.split();
  return x;
}

GradedElement& GradedElement::operator+=(const GradedElement& o) {
  require_same_frame(n_, o.n_);
  m_ += o.m_;
  split();
  return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& o) {
  require_same_frame(n_, o.n_);
  m_ -= o.m_;
  split();
  return *this;
}

GradedElement operator*(const Rational& s, const GradedElement& x) {
  GradedElement y = x;
  y.m_ *= s;
  y.split();
  return y;
}

std::ostream& operator<<(std::ostream& os, const GradedElement& x) {
  os << "{a=" << x.a() << ", A=" << x.A() << ", v=(";
  for (std::size_t i = 0; i < x.v().size(); ++i) os << (i ? "," : "") << x.v()[i];
  os << "), w=(";
  for (std::size_t i = 0; i < x.w().size(); ++i) os << (i ? "," : "") << x.w()[i];
  return os << ")}";
}

GradedElement bracket(const GradedElement& x, const GradedElement& y) {
  require_same_frame(x.n(), y.n());
  return GradedElement::from_matrix(x.matrix() * y.matrix() - y.matrix() * x.matrix());
}

MinkVector act(const GradedElement& x, const MinkVector& u) {
  require_same_frame(x.n(), u.n());
  return MinkVector(x.matrix() * u.coords());
}

GradedElement part(const GradedElement& x, Part p) {
  const std::size_t k = static_cast<std::size_t>(x.n());
  switch (p) {
    case Part::minus:
      return GradedElement::embed_minus(x.v());
    case Part::plus:
      return GradedElement::embed_plus(x.w());
    case Part::zero:
      return GradedElement::embed_zero(x.a(), x.A());
    case Part::R:
      return GradedElement::embed_zero(x.a(), Matrix(k, k));
    case Part::son:
      return GradedElement::embed_zero(0, x.A());
  }
  throw std::logic_error("unknown part");
}

Vector co_action(const Rational& a, const Matrix& A, const Vector& x) {
  Vector y = A * x;
  axpy(a, x, y);
  return y;
}

Matrix so_generator(int n, std::size_t i, std::size_t j) {
  const std::size_t k = static_cast<std::size_t>(n);
  if (i >= k || j >= k || i == j) throw std::invalid_argument("so_generator: need distinct indices < n");
  Matrix m(k, k);
  m(j, i) = 1;
  m(i, j) = -1;
  return m;
}

std::vector<GradedElement> algebra_basis(int n) {
  WittFrame f(n);
  std::vector<GradedElement> out;
  out.reserve(f.algebra_dim());
  for (std::size_t p = 0; p < f.algebra_dim(); ++p) {
    out.push_back(GradedElement::from_coords(n, unit(f.algebra_dim(), p)));
  }
  return out;
}

}  // namespace lorhol
