#include "lorhol/curvature.hpp"

#include <stdexcept>

#include "lorhol/errors.hpp"

namespace lorhol {

std::string to_string(BianchiConvention c) {
  return c == BianchiConvention::definition ? "definition" : "connection";
}

BianchiConvention parse_bianchi_convention(const std::string& s) {
  if (s == "definition") return BianchiConvention::definition;
  if (s == "connection") return BianchiConvention::connection;
  throw std::invalid_argument("unknown Bianchi convention '" + s + "' (expected definition or connection)");
}

namespace {

// Coefficient of the T.T term when the identity is written as cyc R + s cyc TT = 0.
Rational torsion_sign(BianchiConvention c) { return c == BianchiConvention::definition ? 1 : -1; }

std::size_t sigma(std::size_t c, std::size_t d) { return c == 0 ? d - 1 : (c == d - 1 ? 0 : c); }

std::vector<MinkVector> witt_basis(const WittFrame& f) {
  std::vector<MinkVector> out;
  for (std::size_t a = 0; a < f.dim(); ++a) out.push_back(MinkVector::basis(f, a));
  return out;
}

std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> index_triples(std::size_t d) {
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b)
      for (std::size_t c = b + 1; c < d; ++c) out.emplace_back(a, b, c);
  return out;
}

// <X e_w, e_z> for an algebra element X.
Rational lowered(const GradedElement& x, std::size_t w, std::size_t z) {
  return x.matrix()(sigma(z, x.matrix().rows()), w);
}

}  // namespace

MinkVector cyclic_curvature(const CurvTensor& r, std::size_t a, std::size_t b, std::size_t c) {
  const WittFrame f(r.n());
  MinkVector s = act(r(a, b), MinkVector::basis(f, c));
  s += act(r(b, c), MinkVector::basis(f, a));
  s += act(r(c, a), MinkVector::basis(f, b));
  return s;
}

MinkVector cyclic_torsion_square(const TorsionTensor& t, const MinkVector& u, const MinkVector& v,
                                 const MinkVector& w) {
  MinkVector s = t(t(u, v), w);
  s += t(t(v, w), u);
  s += t(t(w, u), v);
  return s;
}

MinkVector cyclic_torsion_square(const TorsionTensor& t, std::size_t a, std::size_t b, std::size_t c) {
  const WittFrame f(t.n());
  return cyclic_torsion_square(t, MinkVector::basis(f, a), MinkVector::basis(f, b), MinkVector::basis(f, c));
}

BianchiResidual bianchi_residual(const CurvTensor& r, const TorsionTensor& t, BianchiConvention conv) {
  require_same_frame(r.n(), t.n());
  const Rational s = torsion_sign(conv);
  BianchiResidual out;
  out.residual = MinkVector::zero(WittFrame(r.n()));
  for (auto [a, b, c] : index_triples(r.dim())) {
    MinkVector res = cyclic_curvature(r, a, b, c) + s * cyclic_torsion_square(t, a, b, c);
    if (!res.is_zero()) {
      out.holds = false;
      out.a = a;
      out.b = b;
      out.c = c;
      out.residual = res;
      return out;
    }
  }
  return out;
}

// ---------------------------------------------------------- curvature space

CurvatureSpace curvature_space(const Subalgebra& h, const TorsionTensor& t, const CurvatureSpaceOptions& opts) {
  require_same_frame(h.n(), t.n());
  const int n = h.n();
  const WittFrame f(n);
  const std::size_t d = f.dim();
  const auto pairs = index_pairs(d);
  const auto triples = index_triples(d);
  const std::size_t hd = h.dim();
  const std::size_t unknowns = pairs.size() * hd;
  const Rational s = torsion_sign(opts.convention);

  CurvatureSpace out;
  out.particular = CurvTensor(n);

  const std::size_t bianchi_rows = triples.size() * d;
  const std::size_t pin_rows = opts.pins.size() * hd;
  Matrix a(bianchi_rows + pin_rows, unknowns);
  Vector rhs(bianchi_rows + pin_rows);

  for (std::size_t p = 0; p < pairs.size(); ++p) {
    for (std::size_t i = 0; i < hd; ++i) {
      const std::size_t col = p * hd + i;
      CurvTensor r(n);
      r.set(pairs[p].first, pairs[p].second, h.basis()[i]);
      for (std::size_t k = 0; k < triples.size(); ++k) {
        auto [ta, tb, tc] = triples[k];
        // Only triples containing both indices of the pair see this unknown.
        const auto [pa, pb] = pairs[p];
        const bool has_a = pa == ta || pa == tb || pa == tc;
        const bool has_b = pb == ta || pb == tb || pb == tc;
        if (!has_a || !has_b) continue;
        const MinkVector v = cyclic_curvature(r, ta, tb, tc);
        for (std::size_t q = 0; q < d; ++q) a(k * d + q, col) = v[q];
      }
    }
  }
  bool homogeneous_rhs = true;
  for (std::size_t k = 0; k < triples.size(); ++k) {
    auto [ta, tb, tc] = triples[k];
    const MinkVector tt = cyclic_torsion_square(t, ta, tb, tc);
    for (std::size_t q = 0; q < d; ++q) {
      rhs[k * d + q] = -s * tt[q];
      if (!tt[q].is_zero()) homogeneous_rhs = false;
    }
  }
  for (std::size_t m = 0; m < opts.pins.size(); ++m) {
    auto [pa, pb, value] = opts.pins[m];
    if (pa == pb || pa >= d || pb >= d) throw std::invalid_argument("curvature pin needs two distinct basis indices");
    if (pa > pb) {
      std::swap(pa, pb);
      value = -value;
    }
    const auto coeffs = h.coordinates(value);
    if (!coeffs) {
      out.reason = "pinned value is not in h";
      return out;
    }
    std::size_t p = 0;
    while (pairs[p] != std::make_pair(pa, pb)) ++p;
    for (std::size_t i = 0; i < hd; ++i) {
      a(bianchi_rows + m * hd + i, p * hd + i) = 1;
      rhs[bianchi_rows + m * hd + i] = (*coeffs)[i];
      if (!(*coeffs)[i].is_zero()) homogeneous_rhs = false;
    }
  }
  out.linear = homogeneous_rhs;

  // Optionally restrict the unknowns to the h-trivial subspace W: R = W y.
  std::vector<Vector> w;
  Matrix system = a;
  if (opts.require_trivial) {
    w = common_kernel(h.basis(), curvature_module(h));
    system = a * Matrix::from_columns(w, unknowns);
  }
  auto lift = [&](const Vector& y) {
    if (!opts.require_trivial) return y;
    Vector x(unknowns);
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (!y[i].is_zero()) axpy(y[i], w[i], x);
    }
    return x;
  };

  const auto sol = solve(system, rhs);
  if (!sol) {
    out.reason = opts.require_trivial ? "no h-trivial tensor satisfies the cyclic identity with this torsion"
                                      : "no tensor with values in h satisfies the cyclic identity with this torsion";
    return out;
  }
  out.feasible = true;
  out.particular = curvature_from_coords(h, lift(*sol));
  for (const auto& k : nullspace(system)) out.homogeneous.push_back(curvature_from_coords(h, lift(k)));
  return out;
}

PairSymmetryResult check_pair_symmetry(const CurvTensor& r, const TorsionTensor& t, BianchiConvention conv) {
  require_same_frame(r.n(), t.n());
  const std::size_t d = r.dim();
  // Written for cyc R = cyc TT; the definition convention flips the torsion side.
  const Rational sgn = -torsion_sign(conv);
  std::vector<Rational> rl(d * d * d * d);
  for (std::size_t u = 0; u < d; ++u)
    for (std::size_t v = 0; v < d; ++v)
      for (std::size_t w = 0; w < d; ++w)
        for (std::size_t z = 0; z < d; ++z) rl[((u * d + v) * d + w) * d + z] = lowered(r(u, v), w, z);
  std::vector<MinkVector> tt;
  tt.reserve(d * d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c) tt.push_back(cyclic_torsion_square(t, a, b, c));
  auto R = [&](std::size_t u, std::size_t v, std::size_t w, std::size_t z) -> const Rational& {
    return rl[((u * d + v) * d + w) * d + z];
  };
  auto C = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t z) -> const Rational& {
    return tt[(a * d + b) * d + c][sigma(z, d)];
  };
  PairSymmetryResult out;
  for (std::size_t u = 0; u < d; ++u)
    for (std::size_t v = 0; v < d; ++v)
      for (std::size_t w = 0; w < d; ++w)
        for (std::size_t z = 0; z < d; ++z) {
          const Rational lhs = Rational(2) * (R(u, v, w, z) - R(w, z, u, v));
          const Rational rhs = sgn * (C(u, v, w, z) + C(w, z, v, u) + C(z, w, u, v) + C(v, u, z, w));
          const Rational diff = (lhs - rhs).abs();
          if (diff > out.worst) {
            out.worst = diff;
            out.holds = false;
            out.u = u;
            out.v = v;
            out.w = w;
            out.z = z;
          }
        }
  return out;
}

bool satisfies_tcond(const TorsionTensor& t) { return extract_torsion_invariants(t).containment; }

Matrix omega_t(const TorsionTensor& t) {
  const WittFrame f(t.n());
  const std::size_t k = static_cast<std::size_t>(t.n());
  const auto e = witt_basis(f);
  const MinkVector& ep = e[f.plus()];
  Matrix om(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const MinkVector& x = e[f.screen(i)];
      const MinkVector& y = e[f.screen(j)];
      const MinkVector s = t(t(x, y), ep) + t(t(ep, x), y) - t(t(ep, y), x);
      om(i, j) = inner(ep, s);
    }
  }
  return om;
}

// --------------------------------------------------------------- components

std::string CurvComponents::failed_clause() const {
  if (!minus_contraction_zero) return "minus_contraction_zero";
  if (!first_bianchi_v0) return "first_bianchi_v0";
  if (!pair_symmetry_three) return "pair_symmetry_three";
  if (!q_cyclic) return "q_cyclic";
  if (!p_in_script_p) return "p_in_script_p";
  if (!r0_bianchi) return "r0_bianchi";
  if (!omega_relation) return "omega_relation";
  return "";
}

CurvComponents extract_components(const CurvTensor& r, const TorsionTensor& t, BianchiConvention conv) {
  require_same_frame(r.n(), t.n());
  const WittFrame f(r.n());
  const std::size_t k = static_cast<std::size_t>(r.n());
  const std::size_t d = f.dim();
  const auto e = witt_basis(f);
  CurvComponents c;
  c.n = r.n();
  c.L = Matrix(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    c.Q.push_back(r(f.plus(), f.screen(i)));
    c.P.push_back(c.Q.back().A());
    const MinkVector qe = act(c.Q.back(), e[f.plus()]);
    for (std::size_t j = 0; j < k; ++j) c.L(i, j) = qe[f.screen(j)];
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) c.R0.push_back(r(f.screen(i), f.screen(j)).A());
  c.omega_T = omega_t(t);

  c.minus_contraction_zero = true;
  for (std::size_t b = 0; b < d; ++b) c.minus_contraction_zero = c.minus_contraction_zero && r(f.minus(), b).is_zero();

  c.first_bianchi_v0 = true;
  c.r0_bianchi = true;
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = x + 1; y < k; ++y)
      for (std::size_t z = y + 1; z < k; ++z) {
        c.first_bianchi_v0 = c.first_bianchi_v0 && cyclic_curvature(r, f.screen(x), f.screen(y), f.screen(z)).is_zero();
        const Vector s = c.R0[x * k + y] * unit(k, z) + c.R0[y * k + z] * unit(k, x) + c.R0[z * k + x] * unit(k, y);
        c.r0_bianchi = c.r0_bianchi && is_zero(s);
      }

  c.pair_symmetry_three = true;
  for (std::size_t u = 0; u < d; ++u)
    for (std::size_t v = 0; v < d; ++v)
      for (std::size_t w = 0; w < d; ++w)
        for (std::size_t z = 0; z < d; ++z) {
          const int plus_count = (u == f.plus()) + (v == f.plus()) + (w == f.plus()) + (z == f.plus());
          if (plus_count > 1) continue;
          if (lowered(r(u, v), w, z) != lowered(r(w, z), u, v)) c.pair_symmetry_three = false;
        }

  // <Q(x) y, z> and <P(x) y, z> on screen indices.
  auto q3 = [&](std::size_t x, std::size_t y, std::size_t z) { return lowered(c.Q[x], f.screen(y), f.screen(z)); };
  auto p3 = [&](std::size_t x, std::size_t y, std::size_t z) { return c.P[x](z, y); };
  c.q_cyclic = true;
  c.p_in_script_p = true;
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y)
      for (std::size_t z = 0; z < k; ++z) {
        c.q_cyclic = c.q_cyclic && (q3(x, y, z) + q3(y, z, x) + q3(z, x, y)).is_zero();
        c.p_in_script_p = c.p_in_script_p && (p3(x, y, z) + p3(y, z, x) + p3(z, x, y)).is_zero();
      }

  // Under the definition convention the identity forces <e_+, Q(x)y - Q(y)x> = -omega_T(x,y).
  const Rational sign = -torsion_sign(conv);
  c.omega_relation = true;
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) {
      const MinkVector wedge = act(c.Q[x], e[f.screen(y)]) - act(c.Q[y], e[f.screen(x)]);
      c.omega_relation = c.omega_relation && inner(e[f.plus()], wedge) == sign * c.omega_T(x, y);
    }
  return c;
}

CurvTensor reconstruct_curvature(const CurvComponents& c) {
  const int n = c.n;
  const WittFrame f(n);
  const std::size_t k = static_cast<std::size_t>(n);
  CurvTensor r(n);
  for (std::size_t i = 0; i < k; ++i) r.set(f.plus(), f.screen(i), c.Q[i]);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      Vector v(k);
      for (std::size_t z = 0; z < k; ++z) v[z] = lowered(c.Q[z], f.screen(i), f.screen(j));
      r.set(f.screen(i), f.screen(j), GradedElement::embed_zero(0, c.R0[i * k + j]) + GradedElement::embed_minus(v));
    }
  }
  return r;
}

std::size_t algebraic_curvature_v0_dim(std::size_t n, const std::vector<Matrix>& h0) {
  const std::size_t sd = n * (n - 1) / 2;
  std::vector<Vector> raw;
  for (const auto& m : h0) raw.push_back(skew_coords(m));
  std::vector<Matrix> basis;
  for (const auto& c : span_basis(raw, sd)) basis.push_back(skew_from_coords(n, c));
  const std::size_t m = basis.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs = index_pairs(n);
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> triples = index_triples(n);
  if (m == 0 || pairs.empty()) return 0;
  Matrix a(std::max<std::size_t>(triples.size(), 1) * n, pairs.size() * m);
  auto pair_index = [&](std::size_t x, std::size_t y) {
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if (pairs[p] == std::make_pair(x, y)) return p;
    throw std::logic_error("pair index");
  };
  for (std::size_t t = 0; t < triples.size(); ++t) {
    auto [x, y, z] = triples[t];
    // R(x,y)z + R(y,z)x + R(z,x)y, with R(z,x) = -R(x,z).
    const std::tuple<std::size_t, std::size_t, std::size_t, int> terms[] = {
        {x, y, z, 1}, {y, z, x, 1}, {x, z, y, -1}};
    for (auto [p1, p2, arg, sg] : terms) {
      const std::size_t p = pair_index(p1, p2);
      for (std::size_t b = 0; b < m; ++b) {
        const Vector img = basis[b] * unit(n, arg);
        for (std::size_t q = 0; q < n; ++q) a(t * n + q, p * m + b) += Rational(sg) * img[q];
      }
    }
  }
  return nullspace(a).size();
}

QSpace q_space(const Subalgebra& h, const TorsionTensor& t, BianchiConvention conv) {
  const WittFrame f(h.n());
  const std::size_t k = static_cast<std::size_t>(h.n());
  const std::size_t hd = h.dim();
  const Matrix om = omega_t(t);
  const Rational sign = -torsion_sign(conv);
  const std::size_t cyc_rows = k * k * k;
  const auto pairs = index_pairs(k);
  Matrix a(cyc_rows + pairs.size(), k * hd);
  Vector rhs(cyc_rows + pairs.size());
  // <Q(e_x) e_y, e_z> is linear in the unknown coefficients of Q(e_x).
  auto coeff = [&](std::size_t b, std::size_t y, std::size_t z) {
    return lowered(h.basis()[b], f.screen(y), f.screen(z));
  };
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y)
      for (std::size_t z = 0; z < k; ++z) {
        const std::size_t row = (x * k + y) * k + z;
        for (std::size_t b = 0; b < hd; ++b) {
          a(row, x * hd + b) += coeff(b, y, z);
          a(row, y * hd + b) += coeff(b, z, x);
          a(row, z * hd + b) += coeff(b, x, y);
        }
      }
  const MinkVector ep = MinkVector::e_plus(f);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    auto [x, y] = pairs[p];
    for (std::size_t b = 0; b < hd; ++b) {
      a(cyc_rows + p, x * hd + b) += inner(ep, act(h.basis()[b], MinkVector::basis(f, f.screen(y))));
      a(cyc_rows + p, y * hd + b) -= inner(ep, act(h.basis()[b], MinkVector::basis(f, f.screen(x))));
    }
    rhs[cyc_rows + p] = sign * om(x, y);
  }
  QSpace out;
  out.feasible = solve(a, rhs).has_value();
  if (out.feasible) out.dim = nullspace(a).size();
  return out;
}

bool check_type4_range(const Classification& cls, const CurvComponents& c) {
  if (cls.kind != Kind::type4) throw PreconditionError("type-4 range check needs a type-4 classification");
  const std::size_t k = static_cast<std::size_t>(c.n);
  const std::size_t sd = k * (k - 1) / 2;
  std::vector<Vector> h0;
  for (const auto& z : cls.center_z) h0.push_back(skew_coords(z));
  for (const auto& s : cls.semisimple_s) h0.push_back(skew_coords(s));
  std::vector<Vector> split = cls.V1;
  split.insert(split.end(), cls.V2.begin(), cls.V2.end());
  (void)sd;
  for (std::size_t i = 0; i < k; ++i) {
    const auto pc = coordinates_in(h0, skew_coords(c.P[i]));
    if (!pc) return false;
    Vector psi_p(k);
    for (std::size_t j = 0; j < cls.center_z.size(); ++j) axpy((*pc)[j], cls.psi[j], psi_p);
    const auto lc = coordinates_in(split, c.L.row(i));
    if (!lc) return false;
    Vector l1(k);
    for (std::size_t j = 0; j < cls.V1.size(); ++j) axpy((*lc)[j], cls.V1[j], l1);
    if (l1 != psi_p) return false;
  }
  return true;
}

TrivialCurvatureReport trivial_curvature_check(const Subalgebra& h, const TorsionTensor& t, BianchiConvention conv) {
  const auto cls = classify(h);
  if (cls.kind != Kind::type2 && cls.kind != Kind::type4) {
    throw PreconditionError("trivial curvature check needs h of type 2 or 4, got " + to_string(cls.kind));
  }
  if (!satisfies_tcond(t)) throw PreconditionError("torsion does not satisfy the containment condition");
  TrivialCurvatureReport rep;
  CurvatureSpaceOptions opts;
  opts.convention = conv;
  opts.require_trivial = true;
  rep.space = curvature_space(h, t, opts);
  const WittFrame f(h.n());
  std::vector<const CurvTensor*> members;
  if (rep.space.feasible) members.push_back(&rep.space.particular);
  for (const auto& r : rep.space.homogeneous) members.push_back(&r);
  rep.g_minus_valued = true;
  rep.minus_contraction_zero = true;
  for (const CurvTensor* r : members) {
    for (std::size_t a = 0; a < f.dim(); ++a) {
      for (std::size_t b = 0; b < f.dim(); ++b) rep.g_minus_valued = rep.g_minus_valued && (*r)(a, b).in_g_minus();
      rep.minus_contraction_zero = rep.minus_contraction_zero && (*r)(f.minus(), a).is_zero();
    }
  }
  return rep;
}

CurvTensor cahen_wallach_tensor(const Matrix& Q) {
  if (!Q.is_square() || !Q.is_symmetric()) throw std::invalid_argument("Cahen-Wallach profile must be symmetric");
  const int n = static_cast<int>(Q.rows());
  const WittFrame f(n);
  CurvTensor r(n);
  for (std::size_t i = 0; i < Q.rows(); ++i) {
    r.set(f.plus(), f.screen(i), GradedElement::embed_minus(Q.col(i)));
  }
  return r;
}

}  // namespace lorhol
