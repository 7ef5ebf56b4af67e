#include "lorhol/invariant_modules.hpp"

#include <stdexcept>

#include "lorhol/errors.hpp"

namespace lorhol {

std::string to_string(ModuleKind k) {
  switch (k) {
    case ModuleKind::hom: return "hom";
    case ModuleKind::torsion: return "torsion";
    case ModuleKind::curvature: return "curvature";
    case ModuleKind::vector: return "vector";
  }
  return "unknown";
}

ModuleKind parse_module_kind(const std::string& s) {
  if (s == "hom") return ModuleKind::hom;
  if (s == "torsion") return ModuleKind::torsion;
  if (s == "curvature") return ModuleKind::curvature;
  if (s == "vector") return ModuleKind::vector;
  throw std::invalid_argument("unsupported module kind '" + s + "' (expected hom, torsion, curvature or vector)");
}

// ------------------------------------------------------------------- engine

std::vector<Vector> common_kernel(const std::vector<GradedElement>& generators, const LinearModule& module,
                                  const std::vector<Vector>& start) {
  std::vector<Vector> current = start;
  if (current.empty()) {
    for (std::size_t j = 0; j < module.dim; ++j) current.push_back(unit(module.dim, j));
  }
  // Intersect one generator at a time: the kernel shrinks quickly, so later
  // generators only act on a small subspace.
  for (const auto& x : generators) {
    if (current.empty()) break;
    std::vector<Vector> images;
    images.reserve(current.size());
    for (const auto& w : current) images.push_back(module.act(x, w));
    const auto ker = nullspace(Matrix::from_columns(images, module.dim));
    std::vector<Vector> next;
    next.reserve(ker.size());
    for (const auto& k : ker) {
      Vector v(module.dim);
      for (std::size_t i = 0; i < k.size(); ++i) {
        if (!k[i].is_zero()) axpy(k[i], current[i], v);
      }
      next.push_back(std::move(v));
    }
    current = std::move(next);
  }
  return span_basis(current, module.dim);
}

LinearModule hom_module(int n) {
  return {HomTensor::coord_dim(n),
          [n](const GradedElement& x, const Vector& c) { return act_on_hom(x, HomTensor::from_coords(n, c)).coords(); }};
}

LinearModule torsion_module(int n) {
  return {TorsionTensor::coord_dim(n), [n](const GradedElement& x, const Vector& c) {
            return act_on_torsion(x, TorsionTensor::from_coords(n, c)).coords();
          }};
}

LinearModule vector_module(int n) {
  return {WittFrame(n).dim(), [](const GradedElement& x, const Vector& c) { return x.matrix() * c; }};
}

std::optional<Vector> curvature_coords(const Subalgebra& h, const CurvTensor& r) {
  require_same_frame(h.n(), r.n());
  Vector out;
  out.reserve(index_pairs(r.dim()).size() * h.dim());
  for (auto [a, b] : index_pairs(r.dim())) {
    const auto c = h.coordinates(r(a, b));
    if (!c) return std::nullopt;
    out.insert(out.end(), c->begin(), c->end());
  }
  return out;
}

CurvTensor curvature_from_coords(const Subalgebra& h, const Vector& c) {
  CurvTensor r(h.n());
  const auto pairs = index_pairs(r.dim());
  if (c.size() != pairs.size() * h.dim()) throw std::invalid_argument("curvature_from_coords: wrong length");
  std::size_t p = 0;
  for (auto [a, b] : pairs) {
    GradedElement v = GradedElement::zero(h.n());
    for (std::size_t i = 0; i < h.dim(); ++i, ++p) {
      if (!c[p].is_zero()) v += c[p] * h.basis()[i];
    }
    r.set(a, b, v);
  }
  return r;
}

LinearModule curvature_module(const Subalgebra& h) {
  const std::size_t d = WittFrame(h.n()).dim();
  return {d * (d - 1) / 2 * h.dim(), [h](const GradedElement& x, const Vector& c) {
            const auto out = curvature_coords(h, act_on_curvature(x, curvature_from_coords(h, c)));
            if (!out) throw PreconditionError("curvature module: acting element does not normalise h");
            return *out;
          }};
}

TrivialSubmoduleReport max_trivial_submodule(const Subalgebra& h, ModuleKind kind) {
  const int n = h.n();
  TrivialSubmoduleReport rep;
  rep.kind = kind;
  rep.n = n;
  LinearModule module;
  switch (kind) {
    case ModuleKind::hom: module = hom_module(n); break;
    case ModuleKind::torsion: module = torsion_module(n); break;
    case ModuleKind::curvature: module = curvature_module(h); break;
    case ModuleKind::vector: module = vector_module(n); break;
  }
  rep.coords = common_kernel(h.basis(), module);
  rep.dim = rep.coords.size();

  bool annihilated = true;
  for (const auto& c : rep.coords) {
    switch (kind) {
      case ModuleKind::hom: {
        rep.hom.push_back(HomTensor::from_coords(n, c));
        for (const auto& x : h.basis()) annihilated = annihilated && act_on_hom(x, rep.hom.back()).is_zero();
        break;
      }
      case ModuleKind::torsion: {
        rep.torsion.push_back(TorsionTensor::from_coords(n, c));
        for (const auto& x : h.basis()) annihilated = annihilated && act_on_torsion(x, rep.torsion.back()).is_zero();
        break;
      }
      case ModuleKind::curvature: {
        rep.curvature.push_back(curvature_from_coords(h, c));
        for (const auto& x : h.basis())
          annihilated = annihilated && act_on_curvature(x, rep.curvature.back()).is_zero();
        break;
      }
      case ModuleKind::vector: {
        rep.vectors.emplace_back(c);
        for (const auto& x : h.basis()) annihilated = annihilated && act(x, rep.vectors.back()).is_zero();
        break;
      }
    }
  }
  rep.flags["annihilated"] = annihilated;
  return rep;
}

// ---------------------------------------------------------- hom structure

HomTensor trivial_hom_normal_form(int n, const Rational& a, const Matrix& A, const Vector& v) {
  const WittFrame f(n);
  const std::size_t k = static_cast<std::size_t>(n);
  HomTensor s = HomTensor::zero(n);
  s[f.plus()] = GradedElement::embed_zero(a, A) + GradedElement::embed_minus(v);
  for (std::size_t i = 0; i < k; ++i) s[f.screen(i)] = GradedElement::embed_minus(-co_action(a, A, unit(k, i)));
  return s;
}

std::map<std::string, bool> StructureFlags::named() const {
  return {{"minus_vanishes", minus_vanishes},
          {"screen_in_g_minus", screen_in_g_minus},
          {"plus_in_parabolic", plus_in_parabolic},
          {"screen_relation", screen_relation},
          {"commutes_with_h0", commutes_with_h0},
          {"minus_part_invariant", minus_part_invariant}};
}

namespace {

void require_structure_preconditions(const Subalgebra& h, const Classification& cls) {
  if (h.n() < 2) throw PreconditionError("the trivial-submodule structure check needs n >= 2");
  if (cls.kind != Kind::type2 && cls.kind != Kind::type4) {
    throw PreconditionError("structure check needs h of type 2 or 4, got " + to_string(cls.kind));
  }
}

// Elements of so(n) required to kill pi_-(S(e_+)).
std::vector<Matrix> kill_set(const Classification& cls) {
  std::vector<Matrix> out;
  if (cls.kind == Kind::type2) {
    for (const auto& y : cls.h0) out.push_back(y.A());
    return out;
  }
  // type 4: psi^-1(V_1) + s; psi maps z into V_1, so the preimage is all of z.
  out = cls.center_z;
  out.insert(out.end(), cls.semisimple_s.begin(), cls.semisimple_s.end());
  return out;
}

}  // namespace

StructureFlags check_structure_element(const Subalgebra& h, const Classification& cls, const HomTensor& s) {
  require_structure_preconditions(h, cls);
  require_same_frame(h.n(), s.n());
  const WittFrame f(h.n());
  const std::size_t k = static_cast<std::size_t>(h.n());
  StructureFlags fl;
  fl.minus_vanishes = s[f.minus()].is_zero();
  const GradedElement& sp = s[f.plus()];
  fl.plus_in_parabolic = sp.in_parabolic();
  for (std::size_t i = 0; i < k; ++i) {
    const GradedElement& sx = s[f.screen(i)];
    fl.screen_in_g_minus = fl.screen_in_g_minus && sx.in_g_minus();
    const MinkVector lhs = act(sx, MinkVector::e_plus(f));
    const MinkVector rhs = MinkVector::from_parts(0, -co_action(sp.a(), sp.A(), unit(k, i)), 0);
    fl.screen_relation = fl.screen_relation && lhs == rhs;
  }
  const GradedElement s0 = part(sp, Part::zero);
  for (const auto& y : cls.h0) fl.commutes_with_h0 = fl.commutes_with_h0 && bracket(y, s0).is_zero();
  for (const auto& m : kill_set(cls)) fl.minus_part_invariant = fl.minus_part_invariant && is_zero(m * sp.v());
  return fl;
}

StructureFlags check_algtheo_structure(const Subalgebra& h, const TrivialSubmoduleReport& report) {
  if (report.kind != ModuleKind::hom) throw PreconditionError("structure check needs a hom-module report");
  const auto cls = classify(h);
  require_structure_preconditions(h, cls);
  StructureFlags total;
  for (const auto& s : report.hom) {
    const auto fl = check_structure_element(h, cls, s);
    total.minus_vanishes &= fl.minus_vanishes;
    total.screen_in_g_minus &= fl.screen_in_g_minus;
    total.plus_in_parabolic &= fl.plus_in_parabolic;
    total.screen_relation &= fl.screen_relation;
    total.commutes_with_h0 &= fl.commutes_with_h0;
    total.minus_part_invariant &= fl.minus_part_invariant;
  }
  return total;
}

std::size_t predicted_trivial_hom_dim(const Subalgebra& h, const Classification& cls) {
  if (h.n() < 2) throw PreconditionError("the trivial-submodule count needs n >= 2");
  if (cls.kind == Kind::type1 || cls.kind == Kind::type3) return 0;
  require_structure_preconditions(h, cls);
  const std::size_t k = static_cast<std::size_t>(h.n());
  const std::size_t sd = k * (k - 1) / 2;
  // A in so(n) commuting with h_0.
  Matrix comm(cls.h0.size() * sd, sd);
  for (std::size_t j = 0; j < sd; ++j) {
    const Matrix A = skew_from_coords(k, unit(sd, j));
    for (std::size_t i = 0; i < cls.h0.size(); ++i) {
      const Vector c = skew_coords(commutator(cls.h0[i].A(), A));
      for (std::size_t r = 0; r < sd; ++r) comm(i * sd + r, j) = c[r];
    }
  }
  const auto kills = kill_set(cls);
  Matrix ker(kills.size() * k, k);
  for (std::size_t i = 0; i < kills.size(); ++i)
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) ker(i * k + r, c) = kills[i](r, c);
  return 1 + nullspace(comm).size() + nullspace(ker).size();
}

// ------------------------------------------------------------------ torsion

namespace {

// The Witt metric permutes indices: <u, e_c> = u^{sigma(c)}.
std::size_t sigma(std::size_t c, std::size_t d) { return c == 0 ? d - 1 : (c == d - 1 ? 0 : c); }

}  // namespace

TorsionTensor skew_symmetrize(const HomTensor& s) {
  const WittFrame f(s.n());
  TorsionTensor t(s.n());
  const Rational half(1, 2);
  for (auto [a, b] : index_pairs(f.dim())) {
    const MinkVector v = act(s[a], MinkVector::basis(f, b)) - act(s[b], MinkVector::basis(f, a));
    t.set(a, b, half * v);
  }
  return t;
}

HomTensor contorsion(const TorsionTensor& t) {
  const std::size_t d = t.dim();
  const auto low = lower_torsion(t);
  auto T = [&](std::size_t a, std::size_t b, std::size_t c) -> const Rational& { return low[(a * d + b) * d + c]; };
  std::vector<GradedElement> images;
  images.reserve(d);
  const Rational mhalf(-1, 2);
  for (std::size_t x = 0; x < d; ++x) {
    // L(y, z) = <S(e_x) e_y, e_z>; the matrix of S(e_x) is M(r, y) = L(y, sigma(r)).
    Matrix m(d, d);
    for (std::size_t y = 0; y < d; ++y) {
      for (std::size_t z = 0; z < d; ++z) {
        m(sigma(z, d), y) = mhalf * (T(x, y, z) + T(z, y, x) + T(z, x, y));
      }
    }
    images.push_back(GradedElement::from_matrix(m));
  }
  return HomTensor(std::move(images));
}

TorsionTensor torsion_of_contorsion(const HomTensor& s) { return Rational(-2) * skew_symmetrize(s); }

HomTensor unskew(const TorsionTensor& t) { return contorsion(Rational(-2) * t); }

std::vector<Rational> lower_torsion(const TorsionTensor& t) {
  const std::size_t d = t.dim();
  std::vector<Rational> out(d * d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c) out[(a * d + b) * d + c] = t(a, b)[sigma(c, d)];
  return out;
}

Vector torsion_trace(const TorsionTensor& t) {
  const std::size_t d = t.dim();
  Vector tau(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) tau[a] += t(a, b)[b];
  return tau;
}

TorsionInvariants extract_torsion_invariants(const TorsionTensor& t) {
  const WittFrame f(t.n());
  const std::size_t k = static_cast<std::size_t>(t.n());
  const std::size_t mi = f.minus(), pl = f.plus();
  TorsionInvariants inv;
  inv.b = t(pl, mi)[mi];
  inv.omega = Matrix(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) inv.omega(i, j) = inner(t(f.screen(i), f.screen(j)), MinkVector::e_plus(f));

  auto only_minus = [](const MinkVector& v) { return is_zero(v.screen_part()) && v.plus_part().is_zero(); };
  bool ok = only_minus(t(mi, pl));
  for (std::size_t i = 0; i < k && ok; ++i) {
    ok = t(mi, f.screen(i)).is_zero() && t(f.screen(i), pl).plus_part().is_zero();
    for (std::size_t j = 0; j < k && ok; ++j) ok = only_minus(t(f.screen(i), f.screen(j)));
  }
  inv.containment = ok;

  bool rel = true;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Rational lhs = inner(t(pl, f.screen(i)), MinkVector::basis(f, f.screen(j)));
      const Rational rhs = (i == j ? inv.b : Rational(0)) + inv.omega(i, j);
      rel = rel && lhs == rhs;
    }
  }
  inv.relation = rel;
  return inv;
}

TorsionTypeSplit torsion_type_split(const TorsionTensor& t) {
  const int n = t.n();
  const std::size_t d = t.dim();
  const auto low = lower_torsion(t);
  auto T = [&](std::size_t a, std::size_t b, std::size_t c) -> const Rational& { return low[(a * d + b) * d + c]; };
  const Vector tau = torsion_trace(t);
  const Rational third(1, 3);
  const Rational inv_m1 = Rational(1) / Rational(static_cast<long>(d) - 1);

  TorsionTypeSplit out{TorsionTensor(n), TorsionTensor(n), TorsionTensor(n)};
  const WittFrame f(n);
  for (auto [a, b] : index_pairs(d)) {
    Vector sk(d);
    for (std::size_t c = 0; c < d; ++c) sk[sigma(c, d)] = third * (T(a, b, c) + T(b, c, a) + T(c, a, b));
    const MinkVector skew(sk);
    // T_vec(u, v) = (tau(u) v - tau(v) u) / (m - 1)
    const MinkVector vec = inv_m1 * (tau[a] * MinkVector::basis(f, b) - tau[b] * MinkVector::basis(f, a));
    out.skew.set(a, b, skew);
    out.vectorial.set(a, b, vec);
    out.twistorial.set(a, b, t(a, b) - skew - vec);
  }
  return out;
}

}  // namespace lorhol
