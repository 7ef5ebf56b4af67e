#include "lorhol/lie_algebra.hpp"

#include <stdexcept>

#include "lorhol/errors.hpp"

namespace lorhol {

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<Vector> structure) : dim_(dim), structure_(std::move(structure)) {
  if (structure_.size() != dim * dim) throw std::invalid_argument("structure table has the wrong size");
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      if (bracket(i, j).size() != dim) throw std::invalid_argument("structure vector has the wrong length");
      if (bracket(i, j) != -bracket(j, i)) throw std::invalid_argument("structure constants are not antisymmetric");
    }
  }
}

LieAlgebra LieAlgebra::from_brackets(std::size_t dim, const std::function<Vector(std::size_t, std::size_t)>& br) {
  std::vector<Vector> s(dim * dim, Vector(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) s[i * dim + j] = br(i, j);
  return LieAlgebra(dim, std::move(s));
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return LieAlgebra(dim, std::vector<Vector>(dim * dim, Vector(dim))); }

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      axpy(x[i] * y[j], bracket(i, j), out);
    }
  }
  return out;
}

Matrix LieAlgebra::ad(const Vector& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    const Vector c = bracket(x, unit(dim_, j));
    for (std::size_t i = 0; i < dim_; ++i) m(i, j) = c[i];
  }
  return m;
}

Vector LieAlgebra::jacobiator(std::size_t i, std::size_t j, std::size_t k) const {
  const Vector ei = unit(dim_, i), ej = unit(dim_, j), ek = unit(dim_, k);
  return bracket(bracket(i, j), ek) + bracket(bracket(j, k), ei) + bracket(bracket(k, i), ej);
}

bool LieAlgebra::satisfies_jacobi() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t k = j + 1; k < dim_; ++k)
        if (!is_zero(jacobiator(i, j, k))) return false;
  return true;
}

LieAlgebra LieAlgebra::restrict_to(const std::vector<Vector>& basis) const {
  const std::size_t m = basis.size();
  std::vector<Vector> s(m * m, Vector(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const auto c = coordinates_in(basis, bracket(basis[i], basis[j]));
      if (!c) throw PreconditionError("span is not closed under the bracket");
      s[i * m + j] = *c;
    }
  }
  return LieAlgebra(m, std::move(s));
}

std::vector<Vector> derived_algebra(const LieAlgebra& g) {
  std::vector<Vector> brackets;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) brackets.push_back(g.bracket(i, j));
  return span_basis(brackets, g.dim());
}

Matrix killing_form(const LieAlgebra& g) {
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < g.dim(); ++i) ads.push_back(g.ad(unit(g.dim(), i)));
  Matrix b(g.dim(), g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i; j < g.dim(); ++j) b(i, j) = b(j, i) = (ads[i] * ads[j]).trace();
  return b;
}

Signature signature(const Matrix& symmetric) {
  if (!symmetric.is_symmetric()) throw std::invalid_argument("signature needs a symmetric matrix");
  Matrix a = symmetric;
  const std::size_t n = a.rows();
  Signature s;
  // Simultaneous row/column operations keep the form congruent.
  auto add_to = [&](std::size_t dst, std::size_t src, const Rational& f) {
    for (std::size_t c = 0; c < n; ++c) a(dst, c) += f * a(src, c);
    for (std::size_t r = 0; r < n; ++r) a(r, dst) += f * a(r, src);
  };
  auto swap_index = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, piv).is_zero()) ++piv;
    if (piv == n) {
      // No diagonal pivot: mix in an off-diagonal partner to create one.
      std::optional<std::size_t> partner;
      for (std::size_t i = k; i < n && !partner; ++i)
        for (std::size_t j = i + 1; j < n && !partner; ++j)
          if (!a(i, j).is_zero()) {
            swap_index(k, i);
            partner = j;
          }
      if (!partner) {
        s.zero += n - k;
        break;
      }
      add_to(k, *partner, 1);
      piv = k;
    }
    swap_index(k, piv);
    const Rational p = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (!a(i, k).is_zero()) add_to(i, k, -a(i, k) / p);
    }
    (p.sign() > 0 ? s.positive : s.negative) += 1;
  }
  return s;
}

}  // namespace lorhol
