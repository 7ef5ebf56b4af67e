#include "lorhol/subalgebras.hpp"

#include <stdexcept>

#include "lorhol/errors.hpp"

namespace lorhol {

// ---------------------------------------------------------------- Subalgebra

// The basis comes out of EchelonBasis in reduced form, so the coefficient of
// basis element i in any member is its coordinate at pivot i.
Subalgebra::Subalgebra(int n, std::vector<GradedElement> basis) : n_(n), basis_(std::move(basis)) {
  for (const auto& x : basis_) {
    const Vector c = x.coords();
    std::size_t p = 0;
    while (c[p].is_zero()) ++p;
    pivots_.push_back(p);
  }
}

Subalgebra Subalgebra::closure(int n, const std::vector<GradedElement>& generators) {
  const WittFrame f(n);
  EchelonBasis eb(f.algebra_dim());
  std::vector<GradedElement> elems;
  for (const auto& g : generators) {
    require_same_frame(n, g.n());
    if (eb.insert(g.coords())) elems.push_back(g);
  }
  // Every pair (i, j) with j < i is bracketed once, including pairs formed
  // with elements appended along the way.
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      GradedElement b = bracket(elems[i], elems[j]);
      if (eb.insert(b.coords())) elems.push_back(std::move(b));
    }
  }
  std::vector<GradedElement> basis;
  for (const auto& row : eb.basis()) basis.push_back(GradedElement::from_coords(n, row));
  return Subalgebra(n, std::move(basis));
}

Subalgebra Subalgebra::full(int n) { return closure(n, algebra_basis(n)); }

bool Subalgebra::contains(const GradedElement& x) const { return coordinates(x).has_value(); }

std::optional<Vector> Subalgebra::coordinates(const GradedElement& x) const {
  require_same_frame(n_, x.n());
  const Vector c = x.coords();
  Vector coeffs(basis_.size());
  Vector rest = c;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    coeffs[i] = c[pivots_[i]];
    if (!coeffs[i].is_zero()) axpy(-coeffs[i], basis_[i].coords(), rest);
  }
  if (!is_zero(rest)) return std::nullopt;
  return coeffs;
}

// -------------------------------------------------------------------- so(n)

Vector skew_coords(const Matrix& A) {
  Vector c;
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = i + 1; j < A.cols(); ++j) c.push_back(A(i, j));
  }
  return c;
}

Matrix skew_from_coords(std::size_t n, const Vector& c) {
  if (c.size() != n * (n - 1) / 2) throw std::invalid_argument("skew_from_coords: wrong length");
  Matrix A(n, n);
  std::size_t p = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      A(i, j) = c[p];
      A(j, i) = -c[p];
      ++p;
    }
  }
  return A;
}

std::string to_string(Kind k) {
  switch (k) {
    case Kind::type1: return "type1";
    case Kind::type2: return "type2";
    case Kind::type3: return "type3";
    case Kind::type4: return "type4";
    case Kind::decomposable: return "decomposable";
    case Kind::not_in_p: return "not_in_p";
  }
  return "unknown";
}

CenterSemisimple center_semisimple_split(std::size_t n, const std::vector<Matrix>& h0) {
  const std::size_t sd = n * (n - 1) / 2;
  std::vector<Vector> raw;
  for (const auto& m : h0) {
    if (m.rows() != n || !m.is_skew()) throw PreconditionError("center_semisimple_split: element not in so(n)");
    raw.push_back(skew_coords(m));
  }
  const auto basis_c = span_basis(raw, sd);
  std::vector<Matrix> B;
  for (const auto& c : basis_c) B.push_back(skew_from_coords(n, c));
  const std::size_t m = B.size();

  EchelonBasis span(sd);
  for (const auto& c : basis_c) span.insert(c);
  std::vector<Vector> derived;
  // Column i of `ad` holds [B_i, B_j] for all j, stacked.
  Matrix ad(m * sd, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Vector c = skew_coords(commutator(B[i], B[j]));
      if (!span.contains(c)) throw PreconditionError("center_semisimple_split: h0 is not bracket-closed");
      if (j > i) derived.push_back(c);
      for (std::size_t r = 0; r < sd; ++r) ad(j * sd + r, i) = c[r];
    }
  }
  CenterSemisimple out;
  for (const auto& c : nullspace(ad)) {
    Matrix z(n, n);
    for (std::size_t i = 0; i < m; ++i) {
      if (!c[i].is_zero()) z += c[i] * B[i];
    }
    out.z.push_back(std::move(z));
  }
  for (const auto& c : span_basis(derived, sd)) out.s.push_back(skew_from_coords(n, c));

  std::vector<Vector> zc, sc;
  for (const auto& z : out.z) zc.push_back(skew_coords(z));
  for (const auto& s : out.s) sc.push_back(skew_coords(s));
  if (out.z.size() + out.s.size() != m || span_union(zc, sc).size() != m) {
    throw PreconditionError("center_semisimple_split: centre and derived algebra are not complementary");
  }
  return out;
}

std::vector<Vector> g_minus_part(const Subalgebra& h) {
  const int n = h.n();
  const std::size_t k = static_cast<std::size_t>(n);
  const std::size_t gd = WittFrame(n).algebra_dim();
  std::vector<Vector> hc, gm;
  for (const auto& x : h.basis()) hc.push_back(x.coords());
  for (std::size_t i = 0; i < k; ++i) gm.push_back(GradedElement::embed_minus(unit(k, i)).coords());
  std::vector<Vector> out;
  for (const auto& c : span_intersection(hc, gm, gd)) out.push_back(GradedElement::from_coords(n, c).v());
  return span_basis(out, k);
}

// ------------------------------------------------------------ classification

namespace {

Classification reject(Classification c, Kind k, std::string reason) {
  c.kind = k;
  c.reason = std::move(reason);
  return c;
}

// Coefficients c over h.basis() such that sum c_i pi_0(X_i) = target, if any.
std::optional<Vector> lift_zero_part(const Subalgebra& h, const GradedElement& target) {
  std::vector<Vector> cols;
  for (const auto& x : h.basis()) cols.push_back(part(x, Part::zero).coords());
  const Matrix a = Matrix::from_columns(cols, target.coords().size());
  return solve(a, target.coords());
}

Vector minus_part_of(const Subalgebra& h, const Vector& coeffs) {
  Vector v(static_cast<std::size_t>(h.n()));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_zero()) axpy(coeffs[i], h.basis()[i].v(), v);
  }
  return v;
}

}  // namespace

Classification classify(const Subalgebra& h) {
  Classification c;
  const int n = h.n();
  const std::size_t k = static_cast<std::size_t>(n);
  const std::size_t gd = WittFrame(n).algebra_dim();

  for (const auto& x : h.basis()) {
    if (!x.in_parabolic()) return reject(c, Kind::not_in_p, "an element has a nonzero g_+ component");
  }

  std::vector<Vector> h0c, soc, minus;
  bool has_r = false;
  for (const auto& x : h.basis()) {
    h0c.push_back(part(x, Part::zero).coords());
    soc.push_back(skew_coords(x.A()));
    minus.push_back(x.v());
    if (!x.a().is_zero()) has_r = true;
  }
  for (const auto& v : span_basis(h0c, gd)) c.h0.push_back(GradedElement::from_coords(n, v));
  std::vector<Matrix> so_part;
  for (const auto& v : span_basis(soc, k * (k - 1) / 2)) so_part.push_back(skew_from_coords(k, v));
  const auto split = center_semisimple_split(k, so_part);
  c.center_z = split.z;
  c.semisimple_s = split.s;

  if (span_basis(minus, k).size() != k) return reject(c, Kind::decomposable, "pi_minus(h) is a proper subspace of V_0");

  const auto gm = g_minus_part(h);
  if (gm.size() == k) {
    if (!has_r) {
      c.kind = Kind::type2;
      return c;
    }
    if (h.contains(GradedElement::embed_zero(1, Matrix(k, k)))) {
      c.kind = Kind::type1;
      return c;
    }
    // h_0 = graph(phi) + s: the lift of each Z in z is unique and its R-part is phi(Z).
    Vector phi;
    for (const auto& z : c.center_z) {
      std::vector<Vector> cols;
      for (const auto& x : c.h0) cols.push_back(skew_coords(x.A()));
      const auto coeffs = coordinates_in(cols, skew_coords(z));
      if (!coeffs) throw std::logic_error("classify: centre element has no lift into h_0");
      Rational a;
      for (std::size_t i = 0; i < coeffs->size(); ++i) a += (*coeffs)[i] * c.h0[i].a();
      phi.push_back(a);
    }
    c.phi = phi;
    c.kind = Kind::type3;
    return c;
  }

  if (has_r) return reject(c, Kind::decomposable, "g_- is not contained in h but pi_R(h) != 0");
  c.V2 = gm;
  c.V1 = nullspace(Matrix::from_rows(gm, k));
  if (c.V2.size() < 2) return reject(c, Kind::decomposable, "dim V_2 < 2");
  for (const auto& A : so_part) {
    for (const auto& v : c.V1) {
      if (!is_zero(A * v)) return reject(c, Kind::decomposable, "h_0 does not annihilate V_1");
    }
  }
  std::vector<Vector> split_basis = c.V1;
  split_basis.insert(split_basis.end(), c.V2.begin(), c.V2.end());
  auto v1_projection = [&](const Vector& v) {
    const auto coeffs = coordinates_in(split_basis, v);
    Vector out(k);
    for (std::size_t i = 0; i < c.V1.size(); ++i) axpy((*coeffs)[i], c.V1[i], out);
    return out;
  };
  for (const auto& z : c.center_z) {
    const auto coeffs = lift_zero_part(h, GradedElement::embed_zero(0, z));
    if (!coeffs) throw std::logic_error("classify: centre element has no lift into h");
    c.psi.push_back(v1_projection(minus_part_of(h, *coeffs)));
  }
  for (const auto& s : c.semisimple_s) {
    const auto coeffs = lift_zero_part(h, GradedElement::embed_zero(0, s));
    if (!coeffs) throw std::logic_error("classify: semisimple element has no lift into h");
    if (!is_zero(v1_projection(minus_part_of(h, *coeffs)))) {
      return reject(c, Kind::decomposable, "the semisimple part has a V_1 component");
    }
  }
  if (span_basis(c.psi, k).size() != c.V1.size()) return reject(c, Kind::decomposable, "psi is not onto V_1");
  c.kind = Kind::type4;
  return c;
}

// ---------------------------------------------------------------- centralizer

std::vector<GradedElement> centralizer(const Subalgebra& h) {
  const int n = h.n();
  const auto gb = algebra_basis(n);
  const std::size_t gd = gb.size();
  Matrix m(h.dim() * gd, gd);
  for (std::size_t j = 0; j < gd; ++j) {
    for (std::size_t i = 0; i < h.dim(); ++i) {
      const Vector c = bracket(gb[j], h.basis()[i]).coords();
      for (std::size_t r = 0; r < gd; ++r) m(i * gd + r, j) = c[r];
    }
  }
  std::vector<GradedElement> out;
  for (const auto& v : span_basis(nullspace(m), gd)) out.push_back(GradedElement::from_coords(n, v));
  return out;
}

std::vector<GradedElement> centralizer_formula(const Subalgebra& h) {
  const auto cls = classify(h);
  if (!cls.indecomposable()) throw PreconditionError("centralizer formula needs an indecomposable h, got " + to_string(cls.kind));
  const std::size_t k = static_cast<std::size_t>(h.n());
  for (const auto& x : h.basis()) {
    if (!x.a().is_zero()) return {};
  }
  Matrix stacked(h.dim() * k, k);
  for (std::size_t i = 0; i < h.dim(); ++i) {
    const Matrix& A = h.basis()[i].A();
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t col = 0; col < k; ++col) stacked(i * k + r, col) = A(r, col);
  }
  std::vector<GradedElement> out;
  for (const auto& z : span_basis(nullspace(stacked), k)) out.push_back(GradedElement::embed_minus(z));
  return out;
}

GradedElement conjugate_screen(const GradedElement& x, const Matrix& P) {
  const std::size_t k = static_cast<std::size_t>(x.n());
  if (P.rows() != k || P.cols() != k) throw std::invalid_argument("conjugate_screen: P must be n x n");
  if (!(P * P.transpose() == Matrix::identity(k))) throw std::invalid_argument("conjugate_screen: P not orthogonal");
  Matrix B = Matrix::identity(k + 2);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) B(1 + i, 1 + j) = P(i, j);
  return GradedElement::from_matrix(B * x.matrix() * B.transpose());
}

}  // namespace lorhol
