#include "lorhol/models.hpp"

#include <algorithm>
#include <sstream>

#include "lorhol/errors.hpp"
#include "lorhol/fixtures.hpp"

namespace lorhol {

namespace {

std::size_t sigma(std::size_t c, std::size_t d) { return c == 0 ? d - 1 : (c == d - 1 ? 0 : c); }

std::string str(const Vector& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].str();
  os << "]";
  return os.str();
}

std::string str(const GradedElement& x) { return str(x.coords()); }

GradedElement X() { return GradedElement::embed_minus(Vector{Rational(1)}); }
GradedElement Xt() { return GradedElement::embed_plus(Vector{Rational(1)}); }
GradedElement I3() { return -GradedElement::grading(1); }

}  // namespace

LieAlgebra MetricLieAlgebra::lie() const {
  const std::size_t d = WittFrame(n).dim();
  return LieAlgebra::from_brackets(d, [&](std::size_t i, std::size_t j) { return brackets(i, j).coords(); });
}

// ----------------------------------------------------------------- calculus

ConnectionMap koszul_levi_civita(const MetricLieAlgebra& m) {
  if (!m.satisfies_jacobi()) throw PreconditionError("brackets do not satisfy the Jacobi identity");
  const WittFrame f(m.n);
  const std::size_t d = f.dim();
  auto br = [&](std::size_t a, std::size_t b, std::size_t c) { return inner(m.brackets(a, b), MinkVector::basis(f, c)); };
  std::vector<GradedElement> images;
  for (std::size_t a = 0; a < d; ++a) {
    Matrix lam(d, d);
    for (std::size_t b = 0; b < d; ++b) {
      for (std::size_t c = 0; c < d; ++c) {
        // 2<nabla_a e_b, e_c> = <[a,b],c> - <[b,c],a> + <[c,a],b>
        const Rational v = (br(a, b, c) - br(b, c, a) + br(c, a, b)) / Rational(2);
        lam(sigma(c, d), b) = v;
      }
    }
    images.push_back(GradedElement::from_matrix(lam));
  }
  return ConnectionMap{m, HomTensor(std::move(images))};
}

TorsionTensor torsion_of(const ConnectionMap& c) {
  const WittFrame f(c.base.n);
  TorsionTensor t(c.base.n);
  for (auto [a, b] : index_pairs(f.dim())) {
    const MinkVector ea = MinkVector::basis(f, a), eb = MinkVector::basis(f, b);
    t.set(a, b, act(c.lambda[a], eb) - act(c.lambda[b], ea) - c.base.brackets(a, b));
  }
  return t;
}

CurvTensor curvature_of(const ConnectionMap& c) {
  const WittFrame f(c.base.n);
  CurvTensor r(c.base.n);
  for (auto [a, b] : index_pairs(f.dim())) {
    r.set(a, b, bracket(c.lambda[a], c.lambda[b]) - c.lambda(c.base.brackets(a, b)));
  }
  return r;
}

HomTensor covariant_derivative(const ConnectionMap& c, std::size_t a, const HomTensor& s) {
  return act_on_hom(c.lambda[a], s);
}
TorsionTensor covariant_derivative(const ConnectionMap& c, std::size_t a, const TorsionTensor& t) {
  return act_on_torsion(c.lambda[a], t);
}
CurvTensor covariant_derivative(const ConnectionMap& c, std::size_t a, const CurvTensor& r) {
  return act_on_curvature(c.lambda[a], r);
}
MinkVector covariant_derivative(const ConnectionMap& c, std::size_t a, const MinkVector& v) {
  return act(c.lambda[a], v);
}

CurvTensor curvature_difference_identity(const ConnectionMap& c_lc, const ConnectionMap& c_as) {
  require_same_frame(c_lc.base.n, c_as.base.n);
  const HomTensor s = c_lc.lambda - c_as.lambda;
  const TorsionTensor t = torsion_of(c_as);
  const CurvTensor r = curvature_of(c_lc);
  const CurvTensor rt = curvature_of(c_as);
  CurvTensor res(c_lc.base.n);
  for (auto [a, b] : index_pairs(WittFrame(c_lc.base.n).dim())) {
    res.set(a, b, r(a, b) - rt(a, b) - s(t(a, b)) - bracket(s[a], s[b]));
  }
  return res;
}

// ------------------------------------------------------------------- models

std::string to_string(ModelInvariant k) {
  switch (k) {
    case ModelInvariant::h_closure: return "h_closure";
    case ModelInvariant::curvature_invariance: return "curvature_invariance";
    case ModelInvariant::torsion_invariance: return "torsion_invariance";
    case ModelInvariant::bianchi: return "bianchi";
    case ModelInvariant::cyclic_curvature_torsion: return "cyclic_curvature_torsion";
  }
  return "unknown";
}

std::vector<ModelInvariant> ModelChecks::violated() const {
  std::vector<ModelInvariant> out;
  if (!values_in_h) out.push_back(ModelInvariant::h_closure);
  if (!curvature_invariance) out.push_back(ModelInvariant::curvature_invariance);
  if (!torsion_invariance) out.push_back(ModelInvariant::torsion_invariance);
  if (!bianchi) out.push_back(ModelInvariant::bianchi);
  if (!cyclic_curvature_torsion) out.push_back(ModelInvariant::cyclic_curvature_torsion);
  return out;
}

ModelChecks check_model(const InfinitesimalModel& model) {
  require_same_frame(model.h.n(), model.rtilde.n());
  require_same_frame(model.h.n(), model.t.n());
  const WittFrame f(model.h.n());
  const std::size_t d = f.dim();
  ModelChecks c;
  c.values_in_h = true;
  for (auto [a, b] : index_pairs(d)) c.values_in_h = c.values_in_h && model.h.contains(model.rtilde(a, b));
  c.curvature_invariance = true;
  c.torsion_invariance = true;
  for (const auto& x : model.h.basis()) {
    c.curvature_invariance = c.curvature_invariance && act_on_curvature(x, model.rtilde).is_zero();
    c.torsion_invariance = c.torsion_invariance && act_on_torsion(x, model.t).is_zero();
  }
  c.bianchi = bianchi_residual(model.rtilde, model.t, BianchiConvention::connection).holds;
  c.cyclic_curvature_torsion = true;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b)
      for (std::size_t e = b + 1; e < d; ++e) {
        const auto ea = MinkVector::basis(f, a), eb = MinkVector::basis(f, b), ee = MinkVector::basis(f, e);
        const GradedElement s = model.rtilde(model.t(a, b), ee) + model.rtilde(model.t(b, e), ea) +
                                model.rtilde(model.t(e, a), eb);
        c.cyclic_curvature_torsion = c.cyclic_curvature_torsion && s.is_zero();
      }
  return c;
}

TransvectionAlgebra build_transvection(const InfinitesimalModel& model) {
  require_same_frame(model.h.n(), model.rtilde.n());
  require_same_frame(model.h.n(), model.t.n());
  const WittFrame f(model.h.n());
  const std::size_t hd = model.h.dim();
  const std::size_t d = f.dim();
  const std::size_t dim = hd + d;
  TransvectionAlgebra out;
  out.h_dim = hd;
  out.n = model.h.n();

  std::vector<Vector> rt_coords(d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const auto c = model.h.coordinates(model.rtilde(a, b));
      if (!c) throw PreconditionError("curvature value outside h");
      rt_coords[a * d + b] = *c;
    }
  bool closed = true;
  auto embed = [&](const Vector& hpart, const MinkVector& vpart) {
    Vector v(dim);
    for (std::size_t i = 0; i < hd; ++i) v[i] = hpart.empty() ? Rational(0) : hpart[i];
    for (std::size_t a = 0; a < d; ++a) v[hd + a] = vpart[a];
    return v;
  };
  const MinkVector zero_v = MinkVector::zero(f);
  out.algebra = LieAlgebra::from_brackets(dim, [&](std::size_t i, std::size_t j) {
    if (i < hd && j < hd) {
      const auto c = model.h.coordinates(bracket(model.h.basis()[i], model.h.basis()[j]));
      if (!c) {
        closed = false;
        return Vector(dim);
      }
      return embed(*c, zero_v);
    }
    if (i < hd) return embed({}, act(model.h.basis()[i], MinkVector::basis(f, j - hd)));
    if (j < hd) return embed({}, -act(model.h.basis()[j], MinkVector::basis(f, i - hd)));
    const std::size_t a = i - hd, b = j - hd;
    return embed(-rt_coords[a * d + b], -model.t(a, b));
  });

  std::vector<ModelInvariant> diag;
  if (!closed) diag.push_back(ModelInvariant::h_closure);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      for (std::size_t k = j + 1; k < dim; ++k) {
        const Vector jac = out.algebra.jacobiator(i, j, k);
        if (is_zero(jac)) continue;
        bool h_part = false, m_part = false;
        for (std::size_t q = 0; q < dim; ++q)
          if (!jac[q].is_zero()) (q < hd ? h_part : m_part) = true;
        const int m_count = (i >= hd) + (j >= hd) + (k >= hd);
        if (m_count <= 1) diag.push_back(ModelInvariant::h_closure);
        if (m_count == 2) {
          if (h_part) diag.push_back(ModelInvariant::curvature_invariance);
          if (m_part) diag.push_back(ModelInvariant::torsion_invariance);
        }
        if (m_count == 3) {
          if (m_part) diag.push_back(ModelInvariant::bianchi);
          if (h_part) diag.push_back(ModelInvariant::cyclic_curvature_torsion);
        }
      }
  std::sort(diag.begin(), diag.end());
  diag.erase(std::unique(diag.begin(), diag.end()), diag.end());
  out.diagnosis = diag;
  out.jacobi = diag.empty();

  std::vector<GradedElement> values;
  for (auto [a, b] : index_pairs(d)) values.push_back(model.rtilde(a, b));
  out.holonomy = Subalgebra::closure(model.h.n(), values).basis();
  return out;
}

LeviCivitaData model_levi_civita(const InfinitesimalModel& model) {
  LeviCivitaData out{contorsion(model.t), CurvTensor(model.h.n())};
  for (auto [a, b] : index_pairs(WittFrame(model.h.n()).dim())) {
    out.r.set(a, b, model.rtilde(a, b) + out.s(model.t(a, b)) + bracket(out.s[a], out.s[b]));
  }
  return out;
}

// ------------------------------------------------------------ geometry data

namespace {

std::vector<GradedElement> values_of(const CurvTensor& r) {
  std::vector<GradedElement> out;
  for (auto [a, b] : index_pairs(r.dim()))
    if (!r(a, b).is_zero()) out.push_back(r(a, b));
  return out;
}

}  // namespace

Subalgebra holonomy_span(const ConnectionMap& c) {
  const int n = c.base.n;
  const WittFrame f(n);
  std::vector<GradedElement> values = values_of(curvature_of(c));
  Subalgebra hol = Subalgebra::closure(n, values);
  std::vector<Vector> frontier = {curvature_of(c).coords()};
  for (std::size_t level = 0; level < f.algebra_dim() && !frontier.empty(); ++level) {
    std::vector<Vector> next;
    for (const auto& fc : frontier) {
      const CurvTensor r = CurvTensor::from_coords(n, fc);
      for (std::size_t a = 0; a < f.dim(); ++a) {
        const CurvTensor dr = covariant_derivative(c, a, r);
        if (dr.is_zero()) continue;
        next.push_back(dr.coords());
        for (const auto& v : values_of(dr)) values.push_back(v);
      }
    }
    frontier = span_basis(next, CurvTensor::coord_dim(n));
    Subalgebra grown = Subalgebra::closure(n, values);
    if (grown.dim() == hol.dim()) break;
    hol = grown;
  }
  return hol;
}

RicciData ricci_and_scalar(const CurvTensor& r) {
  const WittFrame f(r.n());
  const std::size_t d = f.dim();
  RicciData out;
  out.ricci = Matrix(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      Rational s;
      for (std::size_t w = 0; w < d; ++w) s += act(r(w, a), MinkVector::basis(f, b))[w];
      out.ricci(a, b) = s;
    }
  const Matrix& g = f.metric();  // the Witt metric is its own inverse
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) out.scalar += g(a, b) * out.ricci(a, b);
  out.einstein = out.ricci == (out.scalar / Rational(static_cast<long>(d))) * g;
  return out;
}

WaveFlags wave_predicates(const CurvTensor& r, const HomTensor& lambda) {
  const WittFrame f(r.n());
  WaveFlags w;
  w.pp = true;
  for (auto [a, b] : index_pairs(f.dim()))
    if (a != f.plus() && b != f.plus()) w.pp = w.pp && r(a, b).is_zero();
  bool screen_parallel = true;
  for (std::size_t a = 0; a < f.dim(); ++a)
    if (a != f.plus()) screen_parallel = screen_parallel && act_on_curvature(lambda[a], r).is_zero();
  w.plane = w.pp && screen_parallel;
  w.symmetric = w.plane && act_on_curvature(lambda[f.plus()], r).is_zero();
  return w;
}

// ------------------------------------------------------------------ reports

bool Report::all_ok() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.ok; });
}

const Claim* Report::find(const std::string& name) const {
  for (const auto& c : claims)
    if (c.name == name) return &c;
  return nullptr;
}

void Report::add(std::string name, bool ok, std::string detail) {
  claims.push_back(Claim{std::move(name), ok, ok ? std::string() : std::move(detail)});
}

MetricLieAlgebra sl2_metric_algebra(const Rational& a, const Rational& c) {
  if (a.is_zero()) throw PreconditionError("the metric Lie algebra needs a != 0");
  const WittFrame f(1);
  MetricLieAlgebra m(1);
  const auto em = MinkVector::e_minus(f), e1 = MinkVector::basis(f, 1), ep = MinkVector::e_plus(f);
  m.brackets.set(0, 1, Rational(-2) * a * em);
  m.brackets.set(0, 2, Rational(2) * a * e1);
  m.brackets.set(1, 2, Rational(-2) * a * ep + ((Rational(2) * a * c + Rational(1)) / (Rational(2) * a)) * em);
  return m;
}

HomTensor sl2_contorsion(const Rational& a, const Rational& b, const Rational& c) {
  HomTensor s = HomTensor::zero(1);
  s[0] = a * X();
  s[1] = a * I3() + b * X();
  s[2] = -b * I3() + c * X() + a * Xt();
  return s;
}

InfinitesimalModel sl2_model(const Rational& a, const Rational& b, const Rational& c) {
  CurvTensor rt(1);
  rt.set(1, 2, X());
  return InfinitesimalModel{Subalgebra::closure(1, {X()}), rt, torsion_of_contorsion(sl2_contorsion(a, b, c))};
}

Sl2Report sl2_example(const Rational& a, const Rational& c) {
  const WittFrame f(1);
  const auto em = MinkVector::e_minus(f), e1 = MinkVector::basis(f, 1), ep = MinkVector::e_plus(f);
  const Rational two(2);
  const Rational k = Rational(1) + two * a * c;  // 1 + 2ac
  Sl2Report rep;
  rep.a = a;
  rep.c = c;

  // Homogeneous-structure side: valid for every a.
  const HomTensor s = sl2_contorsion(a, 0, c);
  const TorsionTensor t = torsion_of_contorsion(s);
  rep.add("torsion.values",
          t(0, 1) == two * a * em && t(0, 2) == -two * a * e1 && t(1, 2) == two * a * ep - c * em,
          "T = " + str(t.coords()));
  rep.add("contorsion.round_trip", contorsion(t) == s);
  rep.add("contorsion.null_vector",
          act(s[0], em).is_zero() && act(s[1], em) == a * em && act(s[2], em) == -a * e1);
  rep.add("algebra.relations", bracket(I3(), X()) == X() && bracket(I3(), Xt()) == -Xt() && bracket(X(), Xt()) == I3());
  {
    const auto t1 = torsion_of_contorsion(sl2_contorsion(a, 1, c));
    const auto cyc = cyclic_torsion_square(t1, 0, 1, 2);
    rep.add("bianchi_obstruction.4ab", cyc == Rational(4) * a * em, "residual " + str(cyc.coords()));
    rep.add("bianchi_obstruction.b0", cyclic_torsion_square(t, 0, 1, 2).is_zero());
  }
  const InfinitesimalModel model = sl2_model(a, 0, c);
  const ModelChecks checks = check_model(model);
  rep.add("model.invariants", checks.all());
  const TransvectionAlgebra tv = build_transvection(model);
  rep.add("transvection.jacobi", tv.jacobi);
  rep.as_holonomy_dim = tv.holonomy.size();
  rep.add("as.holonomy", tv.holonomy.size() == 1 && Subalgebra::closure(1, tv.holonomy).contains(X()),
          "dim " + std::to_string(tv.holonomy.size()));
  {
    const auto derived = derived_algebra(tv.algebra);
    rep.derived_dim = derived.size();
    if (a.is_zero()) {
      rep.add("transvection.derived", true);
    } else {
      const auto sub = tv.algebra.restrict_to(derived);
      rep.derived_killing = signature(killing_form(sub));
      rep.add("transvection.derived",
              derived.size() == 3 && derived_algebra(sub).size() == 3 && rep.derived_killing.nondegenerate() &&
                  rep.derived_killing.indefinite(),
              "dim " + std::to_string(derived.size()));
    }
  }
  if (a.is_zero()) {
    rep.add("torsion.containment", satisfies_tcond(t));
    return rep;
  }

  // Metric Lie algebra side.
  rep.metric_side = true;
  const MetricLieAlgebra m = sl2_metric_algebra(a, c);
  rep.add("metric_algebra.jacobi", m.satisfies_jacobi());
  rep.add("metric_algebra.perfect", derived_algebra(m.lie()).size() == 3);
  const Signature ks = signature(killing_form(m.lie()));
  rep.add("metric_algebra.killing_indefinite", ks.nondegenerate() && ks.indefinite());

  const ConnectionMap lc = koszul_levi_civita(m);
  rep.add("levi_civita.values",
          lc.nabla(em, em).is_zero() && lc.nabla(e1, em) == a * em && lc.nabla(ep, em) == -a * e1);
  rep.add("levi_civita.torsion_free", torsion_of(lc).is_zero());
  const CurvTensor r = curvature_of(lc);
  rep.add("levi_civita.curvature",
          r(0, 1) == a * a * X() && r(0, 2) == -a * a * I3() && r(1, 2) == k * X() + a * a * Xt(),
          "R = " + str(r.coords()));
  rep.add("levi_civita.curvature_from_model", model_levi_civita(model).r == r);

  const ConnectionMap as{m, lc.lambda - s};
  rep.add("as.torsion", torsion_of(as) == t);
  rep.add("as.curvature", curvature_of(as) == model.rtilde, "Rtilde = " + str(curvature_of(as).coords()));
  rep.add("as.parallel_curvature", is_parallel(as, curvature_of(as)));
  rep.add("as.parallel_contorsion", is_parallel(as, s));
  rep.add("as.parallel_torsion", is_parallel(as, t));
  rep.add("as.parallel_null_vector", is_parallel(as, em));
  rep.add("curvature_difference", curvature_difference_identity(lc, as).is_zero());
  const Subalgebra hol_as = holonomy_span(as);
  rep.add("as.holonomy_connection", hol_as.dim() == 1 && hol_as.contains(X()));

  const RicciData ric = ricci_and_scalar(r);
  rep.ricci = ric.ricci;
  rep.scalar = ric.scalar;
  rep.einstein = ric.einstein;
  const Rational m2 = Rational(-2) * a * a;
  rep.add("ricci.values", ric.ricci == Matrix{{0, 0, m2}, {0, m2, 0}, {m2, 0, k}}, "Ric diagonal " + ric.scalar.str());
  rep.add("scalar.negative", ric.scalar == Rational(-6) * a * a && ric.scalar.sign() < 0, ric.scalar.str());
  rep.add("einstein.criterion", ric.einstein == k.is_zero());

  bool two_ways = true;
  for (std::size_t u = 0; u < 3; ++u)
    two_ways = two_ways && covariant_derivative(lc, u, r) == act_on_curvature(s[u], r);
  rep.add("nabla_R.two_ways", two_ways);
  {
    // Only nonzero components: nabla_1 R(1,+) = 2 a k X, nabla_+ R(-,+) = a k X, nabla_+ R(1,+) = -a k I.
    CurvTensor d1(1), dp(1);
    d1.set(1, 2, two * a * k * X());
    dp.set(0, 2, a * k * X());
    dp.set(1, 2, -a * k * I3());
    const bool ok = covariant_derivative(lc, 0, r).is_zero() && covariant_derivative(lc, 1, r) == d1 &&
                    covariant_derivative(lc, 2, r) == dp;
    rep.add("nabla_R.values", ok);
  }
  rep.add("anti_de_sitter.criterion", is_parallel(lc, r) == k.is_zero());

  const Subalgebra hol_lc = holonomy_span(lc);
  rep.lc_holonomy_dim = hol_lc.dim();
  rep.add("levi_civita.holonomy", hol_lc.dim() == 3, "dim " + std::to_string(hol_lc.dim()));
  rep.add("levi_civita.not_pp_wave", !wave_predicates(lc).pp);
  return rep;
}

InfinitesimalModel cahen_wallach_model(const Matrix& Q) {
  const int n = static_cast<int>(Q.rows());
  return InfinitesimalModel{fixtures::g_minus(n), cahen_wallach_tensor(Q), TorsionTensor(n)};
}

CwReport cahen_wallach_report(const Matrix& Q) {
  const InfinitesimalModel model = cahen_wallach_model(Q);
  const int n = model.h.n();
  CwReport rep;
  rep.checks = check_model(model);
  rep.add("model.invariants", rep.checks.all());
  const TransvectionAlgebra tv = build_transvection(model);
  std::string diag;
  for (auto d : tv.diagnosis) diag += to_string(d) + " ";
  rep.add("transvection.jacobi", tv.jacobi, diag);
  const LeviCivitaData lc = model_levi_civita(model);
  rep.flags = wave_predicates(lc.r, lc.s);
  rep.add("wave.pp", rep.flags.pp);
  rep.add("wave.plane", rep.flags.plane);
  rep.add("wave.symmetric", rep.flags.symmetric);
  rep.holonomy_dim = tv.holonomy.size();
  const Subalgebra gm = fixtures::g_minus(n);
  const Subalgebra hol = Subalgebra::closure(n, tv.holonomy);
  bool equal = hol.dim() == gm.dim();
  for (const auto& x : gm.basis()) equal = equal && hol.contains(x);
  rep.add("holonomy.g_minus", equal, "dim " + std::to_string(hol.dim()));
  return rep;
}

}  // namespace lorhol
