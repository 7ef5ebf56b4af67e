#include "lorhol/tensors.hpp"

#include <stdexcept>
#include <string>

#include "lorhol/errors.hpp"

namespace lorhol {

std::vector<std::pair<std::size_t, std::size_t>> index_pairs(std::size_t dim) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(dim * (dim - 1) / 2);
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = a + 1; b < dim; ++b) out.emplace_back(a, b);
  }
  return out;
}

// ----------------------------------------------------------------- HomTensor

HomTensor::HomTensor(std::vector<GradedElement> images) : images_(std::move(images)) {
  if (images_.size() < 3) throw std::invalid_argument("HomTensor needs n+2 >= 3 images");
  n_ = static_cast<int>(images_.size()) - 2;
  for (const auto& x : images_) require_same_frame(n_, x.n());
}

HomTensor HomTensor::zero(int n) {
  WittFrame f(n);
  return HomTensor(std::vector<GradedElement>(f.dim(), GradedElement::zero(n)));
}

std::size_t HomTensor::coord_dim(int n) {
  WittFrame f(n);
  return f.dim() * f.algebra_dim();
}

HomTensor HomTensor::from_coords(int n, const Vector& c) {
  WittFrame f(n);
  if (c.size() != coord_dim(n)) throw std::invalid_argument("HomTensor::from_coords: wrong length");
  const std::size_t g = f.algebra_dim();
  std::vector<GradedElement> images;
  images.reserve(f.dim());
  for (std::size_t a = 0; a < f.dim(); ++a) {
    images.push_back(GradedElement::from_coords(
        n, Vector(c.begin() + static_cast<std::ptrdiff_t>(a * g), c.begin() + static_cast<std::ptrdiff_t>((a + 1) * g))));
  }
  return HomTensor(std::move(images));
}

Vector HomTensor::coords() const {
  Vector out;
  for (const auto& x : images_) {
    Vector c = x.coords();
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

GradedElement HomTensor::operator()(const MinkVector& u) const {
  require_same_frame(n_, u.n());
  GradedElement out = GradedElement::zero(n_);
  for (std::size_t a = 0; a < images_.size(); ++a) {
    if (!u[a].is_zero()) out += u[a] * images_[a];
  }
  return out;
}

bool HomTensor::is_zero() const {
  for (const auto& x : images_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

HomTensor& HomTensor::operator+=(const HomTensor& o) {
  require_same_frame(n_, o.n_);
  for (std::size_t a = 0; a < images_.size(); ++a) images_[a] += o.images_[a];
  return *this;
}

HomTensor& HomTensor::operator-=(const HomTensor& o) {
  require_same_frame(n_, o.n_);
  for (std::size_t a = 0; a < images_.size(); ++a) images_[a] -= o.images_[a];
  return *this;
}

HomTensor operator*(const Rational& s, const HomTensor& x) {
  HomTensor y = x;
  for (auto& img : y.images_) img = s * img;
  return y;
}

// -------------------------------------------------------- AntisymmetricTable

namespace {

template <class Value>
Value zero_value(int n);

template <>
MinkVector zero_value<MinkVector>(int n) {
  return MinkVector::zero(WittFrame(n));
}

template <>
GradedElement zero_value<GradedElement>(int n) {
  return GradedElement::zero(n);
}

template <class Value>
std::size_t value_dim(int n);

template <>
std::size_t value_dim<MinkVector>(int n) {
  return WittFrame(n).dim();
}

template <>
std::size_t value_dim<GradedElement>(int n) {
  return WittFrame(n).algebra_dim();
}

Vector value_coords(const MinkVector& v) { return v.coords(); }
Vector value_coords(const GradedElement& x) { return x.coords(); }

template <class Value>
Value value_from(int n, Vector c);

template <>
MinkVector value_from<MinkVector>(int, Vector c) {
  return MinkVector(std::move(c));
}

template <>
GradedElement value_from<GradedElement>(int n, Vector c) {
  return GradedElement::from_coords(n, c);
}

}  // namespace

template <class Value>
AntisymmetricTable<Value>::AntisymmetricTable(int n) : n_(n) {
  WittFrame f(n);
  table_.assign(f.dim() * f.dim(), zero_value<Value>(n));
}

template <class Value>
void AntisymmetricTable<Value>::set(std::size_t a, std::size_t b, const Value& v) {
  if (a >= dim() || b >= dim()) throw std::out_of_range("tensor index out of range");
  require_same_frame(n_, v.n());
  if (a == b) {
    if (!v.is_zero()) throw std::invalid_argument("antisymmetric tensor: diagonal value must be 0");
    return;
  }
  table_[a * dim() + b] = v;
  table_[b * dim() + a] = -v;
}

template <class Value>
Value AntisymmetricTable<Value>::operator()(const MinkVector& u, const MinkVector& v) const {
  require_same_frame(n_, u.n());
  require_same_frame(n_, v.n());
  Value out = zero_value<Value>(n_);
  for (std::size_t a = 0; a < dim(); ++a) {
    if (u[a].is_zero()) continue;
    for (std::size_t b = 0; b < dim(); ++b) {
      if (a == b || v[b].is_zero()) continue;
      out += (u[a] * v[b]) * (*this)(a, b);
    }
  }
  return out;
}

template <class Value>
bool AntisymmetricTable<Value>::is_zero() const {
  for (const auto& v : table_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

template <class Value>
std::size_t AntisymmetricTable<Value>::coord_dim(int n) {
  const std::size_t d = WittFrame(n).dim();
  return d * (d - 1) / 2 * value_dim<Value>(n);
}

template <class Value>
Vector AntisymmetricTable<Value>::coords() const {
  Vector out;
  out.reserve(coord_dim(n_));
  for (auto [a, b] : index_pairs(dim())) {
    Vector c = value_coords((*this)(a, b));
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

template <class Value>
AntisymmetricTable<Value> AntisymmetricTable<Value>::from_coords(int n, const Vector& c) {
  if (c.size() != coord_dim(n)) throw std::invalid_argument("tensor from_coords: wrong length");
  AntisymmetricTable t(n);
  const std::size_t k = value_dim<Value>(n);
  std::size_t p = 0;
  for (auto [a, b] : index_pairs(t.dim())) {
    t.set(a, b,
          value_from<Value>(n, Vector(c.begin() + static_cast<std::ptrdiff_t>(p),
                                      c.begin() + static_cast<std::ptrdiff_t>(p + k))));
    p += k;
  }
  return t;
}

template <class Value>
AntisymmetricTable<Value>& AntisymmetricTable<Value>::operator+=(const AntisymmetricTable& o) {
  require_same_frame(n_, o.n_);
  for (std::size_t i = 0; i < table_.size(); ++i) table_[i] += o.table_[i];
  return *this;
}

template <class Value>
AntisymmetricTable<Value>& AntisymmetricTable<Value>::operator-=(const AntisymmetricTable& o) {
  require_same_frame(n_, o.n_);
  for (std::size_t i = 0; i < table_.size(); ++i) table_[i] -= o.table_[i];
  return *this;
}

template <class Value>
AntisymmetricTable<Value>& AntisymmetricTable<Value>::operator*=(const Rational& s) {
  for (auto& v : table_) v = s * v;
  return *this;
}

template class AntisymmetricTable<MinkVector>;
template class AntisymmetricTable<GradedElement>;

// ------------------------------------------------------------------- actions

HomTensor act_on_hom(const GradedElement& x, const HomTensor& s) {
  require_same_frame(x.n(), s.n());
  const WittFrame f(s.n());
  std::vector<GradedElement> out;
  out.reserve(f.dim());
  for (std::size_t a = 0; a < f.dim(); ++a) {
    const MinkVector xe = act(x, MinkVector::basis(f, a));
    out.push_back(bracket(x, s[a]) - s(xe));
  }
  return HomTensor(std::move(out));
}

TorsionTensor act_on_torsion(const GradedElement& x, const TorsionTensor& t) {
  require_same_frame(x.n(), t.n());
  const WittFrame f(t.n());
  std::vector<MinkVector> xe;
  for (std::size_t a = 0; a < f.dim(); ++a) xe.push_back(act(x, MinkVector::basis(f, a)));
  TorsionTensor out(t.n());
  for (auto [a, b] : index_pairs(f.dim())) {
    MinkVector v = act(x, t(a, b));
    v -= t(xe[a], MinkVector::basis(f, b));
    v -= t(MinkVector::basis(f, a), xe[b]);
    out.set(a, b, v);
  }
  return out;
}

CurvTensor act_on_curvature(const GradedElement& x, const CurvTensor& r) {
  require_same_frame(x.n(), r.n());
  const WittFrame f(r.n());
  std::vector<MinkVector> xe;
  for (std::size_t a = 0; a < f.dim(); ++a) xe.push_back(act(x, MinkVector::basis(f, a)));
  CurvTensor out(r.n());
  for (auto [a, b] : index_pairs(f.dim())) {
    GradedElement v = bracket(x, r(a, b));
    v -= r(xe[a], MinkVector::basis(f, b));
    v -= r(MinkVector::basis(f, a), xe[b]);
    out.set(a, b, v);
  }
  return out;
}

}  // namespace lorhol
