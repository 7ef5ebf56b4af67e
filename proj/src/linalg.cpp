#include "lorhol/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lorhol {

RowEchelon row_reduce(const Matrix& m) {
  std::vector<Vector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));

  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < rows.size(); ++col) {
    std::size_t p = lead;
    while (p < rows.size() && rows[p][col].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[lead], rows[p]);

    const Rational inv = rows[lead][col].inverse();
    for (std::size_t c = col; c < m.cols(); ++c)
      if (!rows[lead][c].is_zero()) rows[lead][c] *= inv;

    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r][col].is_zero()) continue;
      const Rational f = rows[r][col];
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!rows[lead][c].is_zero()) rows[r][c] -= f * rows[lead][c];
    }
    pivots.push_back(col);
    ++lead;
  }
  rows.resize(pivots.size());
  return {Matrix::from_rows(rows, m.cols()), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<Vector> nullspace(const Matrix& m) {
  const RowEchelon re = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : re.pivots) is_pivot[p] = true;

  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector x(m.cols());
    x[f] = 1;
    for (std::size_t r = 0; r < re.pivots.size(); ++r) x[re.pivots[r]] = -re.reduced(r, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const RowEchelon re = row_reduce(aug);
  Vector x(a.cols());
  for (std::size_t r = 0; r < re.pivots.size(); ++r) {
    if (re.pivots[r] == a.cols()) return std::nullopt;
    x[re.pivots[r]] = re.reduced(r, a.cols());
  }
  return x;
}

std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t dim) {
  EchelonBasis eb(dim);
  for (const auto& v : vectors) {
    if (v.size() != dim) throw std::invalid_argument("span: vector length mismatch");
    eb.insert(v);
  }
  return eb.basis();
}

namespace {

std::size_t common_dim(const std::vector<Vector>& a, const std::vector<Vector>& b) {
  std::optional<std::size_t> dim;
  for (const auto* vs : {&a, &b})
    for (const auto& v : *vs) {
      if (dim && *dim != v.size()) throw std::invalid_argument("span: dimension mismatch");
      dim = v.size();
    }
  return dim.value_or(0);
}

}  // namespace

std::vector<Vector> span_union(const std::vector<Vector>& a, const std::vector<Vector>& b) {
  const std::size_t dim = common_dim(a, b);
  std::vector<Vector> all(a);
  all.insert(all.end(), b.begin(), b.end());
  return span_basis(all, dim);
}

std::vector<Vector> span_intersection(const std::vector<Vector>& a, const std::vector<Vector>& b,
                                      std::size_t dim) {
  common_dim(a, b);
  const auto ba = span_basis(a, dim);
  const auto bb = span_basis(b, dim);
  if (ba.empty() || bb.empty()) return {};
  // Solve sum x_i a_i - sum y_j b_j = 0.
  std::vector<Vector> cols(ba);
  for (const auto& v : bb) cols.push_back(-v);
  const auto kernel = nullspace(Matrix::from_columns(cols, dim));
  std::vector<Vector> out;
  for (const auto& k : kernel) {
    Vector v(dim);
    for (std::size_t i = 0; i < ba.size(); ++i) axpy(k[i], ba[i], v);
    out.push_back(std::move(v));
  }
  return span_basis(out, dim);
}

bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t dim) {
  return span_basis(a, dim) == span_basis(b, dim);
}

std::optional<Vector> coordinates_in(const std::vector<Vector>& basis, const Vector& v) {
  if (basis.empty()) {
    if (is_zero(v)) return Vector{};
    return std::nullopt;
  }
  return solve(Matrix::from_columns(basis, v.size()), v);
}

Vector EchelonBasis::reduce(Vector v) const {
  if (v.size() != dim_) throw std::invalid_argument("echelon basis: vector length mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational f = v[pivots_[r]];
    if (!f.is_zero()) axpy(-f, rows_[r], v);
  }
  return v;
}

bool EchelonBasis::insert(const Vector& v) {
  Vector w = reduce(v);
  auto it = std::find_if(w.begin(), w.end(), [](const Rational& x) { return !x.is_zero(); });
  if (it == w.end()) return false;
  const auto p = static_cast<std::size_t>(it - w.begin());
  const Rational inv = w[p].inverse();
  for (auto& x : w)
    if (!x.is_zero()) x *= inv;
  // Keep existing rows reduced with respect to the new pivot.
  for (auto& row : rows_) {
    const Rational f = row[p];
    if (!f.is_zero()) axpy(-f, w, row);
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(p);
  return true;
}

std::vector<Vector> EchelonBasis::basis() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return pivots_[x] < pivots_[y]; });
  std::vector<Vector> out;
  out.reserve(rows_.size());
  for (auto i : order) out.push_back(rows_[i]);
  return out;
}

}  // namespace lorhol
