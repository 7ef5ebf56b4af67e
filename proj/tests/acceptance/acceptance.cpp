// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>

#include "lorhol/curvature.hpp"
#include "lorhol/fixtures.hpp"
#include "lorhol/invariant_modules.hpp"
#include "lorhol/lie_algebra.hpp"
#include "lorhol/models.hpp"
#include "lorhol/subalgebras.hpp"
#include "support/gen.hpp"
#include "support/mutations.hpp"

using namespace lorhol;
namespace fx = lorhol::fixtures;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

struct Criterion {
  int id;
  const char* name;
  double budget_ms;  // 0: no timing bound
  std::function<Outcome()> run;
};

std::vector<Vector> coords_of(const std::vector<HomTensor>& v) {
  std::vector<Vector> out;
  for (const auto& s : v) out.push_back(s.coords());
  return out;
}

std::vector<Vector> coords_of(const std::vector<GradedElement>& v) {
  std::vector<Vector> out;
  for (const auto& x : v) out.push_back(x.coords());
  return out;
}

GradedElement X() { return GradedElement::embed_minus(Vector{1}); }
GradedElement Xt() { return GradedElement::embed_plus(Vector{1}); }
GradedElement I() { return -GradedElement::grading(1); }

Outcome g_minus_hom_family() {
  Outcome o;
  const auto rep = max_trivial_submodule(fx::g_minus(1), ModuleKind::hom);
  o.require(rep.dim == 3, "dimension " + std::to_string(rep.dim));
  const WittFrame f(1);
  auto family = [&](const Rational& a, const Rational& b, const Rational& c) {
    HomTensor s = HomTensor::zero(1);
    s[f.minus()] = a * GradedElement::from_matrix(Matrix{{0, -1, 0}, {0, 0, 1}, {0, 0, 0}});
    s[f.screen(0)] = GradedElement::from_matrix(Matrix{{a, -b, 0}, {0, 0, b}, {0, 0, -a}});
    s[f.plus()] = GradedElement::from_matrix(Matrix{{-b, -c, 0}, {-a, 0, c}, {0, a, b}});
    return s;
  };
  const std::vector<HomTensor> fam = {family(1, 0, 0), family(0, 1, 0), family(0, 0, 1)};
  o.require(same_span(coords_of(rep.hom), coords_of(fam), HomTensor::coord_dim(1)), "span differs from the family");
  return o;
}

Outcome vanishing_branch() {
  Outcome o;
  for (int n : {2, 3, 4}) {
    for (const auto& [h, kind] : {std::pair{fx::grading_g_minus(n), Kind::type1}, std::pair{fx::co2_g_minus(n), Kind::type1},
                                  std::pair{fx::graph_g_minus(n), Kind::type3}}) {
      const std::string tag = "n=" + std::to_string(n) + " " + to_string(kind);
      o.require(classify(h).kind == kind, tag + ": wrong type");
      const auto dim = max_trivial_submodule(h, ModuleKind::hom).dim;
      o.require(dim == 0, tag + ": trivial submodule has dimension " + std::to_string(dim));
    }
  }
  return o;
}

std::vector<Subalgebra> type2_and_4(int n) {
  std::vector<Subalgebra> hs = {fx::g_minus(n), fx::so_g_minus(n), fx::so2_g_minus(n)};
  if (n >= 3) hs.push_back(fx::type4(n));
  return hs;
}

Outcome structure_branch() {
  Outcome o;
  for (int n : {2, 3, 4}) {
    for (const auto& h : type2_and_4(n)) {
      const auto cls = classify(h);
      const std::string tag = "n=" + std::to_string(n) + " " + to_string(cls.kind);
      const auto rep = max_trivial_submodule(h, ModuleKind::hom);
      o.require(check_algtheo_structure(h, rep).all(), tag + ": structure clause fails");
      o.require(rep.dim == predicted_trivial_hom_dim(h, cls), tag + ": dimension differs from the normal form count");
    }
  }
  return o;
}

Outcome centralizers() {
  Outcome o;
  for (int n : {2, 3, 4}) {
    std::vector<Subalgebra> hs = {fx::grading_g_minus(n), fx::so_g_minus(n), fx::graph_g_minus(n), fx::g_minus(n)};
    if (n >= 3) hs.push_back(fx::type4(n));
    for (const auto& h : hs) {
      const auto solved = centralizer(h);
      const auto formula = centralizer_formula(h);
      o.require(same_span(coords_of(solved), coords_of(formula), WittFrame(n).algebra_dim()) &&
                    solved.size() == formula.size(),
                "n=" + std::to_string(n) + " " + to_string(classify(h).kind) + ": centralizers differ");
    }
  }
  return o;
}

Outcome torsion_containment_and_split() {
  Outcome o;
  std::mt19937 rng(2024);
  for (int n : {2, 3, 4}) {
    for (const auto& h : type2_and_4(n)) {
      const auto rep = max_trivial_submodule(h, ModuleKind::hom);
      std::vector<HomTensor> samples = rep.hom;
      HomTensor mix = HomTensor::zero(n);
      for (const auto& s : rep.hom) mix = mix + gen::rational(rng) * s;
      samples.push_back(mix);
      for (const auto& s : samples) {
        const auto inv = extract_torsion_invariants(skew_symmetrize(s));
        o.require(inv.containment, "containment fails at n=" + std::to_string(n));
        o.require(inv.relation, "torsion relation fails at n=" + std::to_string(n));
      }
    }
  }
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 4;
    const auto T = gen::torsion(rng, n);
    const auto sp = torsion_type_split(T);
    o.require(sp.vectorial + sp.twistorial + sp.skew == T, "projections do not sum to the identity");
    const auto v = torsion_type_split(sp.vectorial);
    const auto w = torsion_type_split(sp.twistorial);
    const auto k = torsion_type_split(sp.skew);
    o.require(v.vectorial == sp.vectorial && v.twistorial.is_zero() && v.skew.is_zero(), "vectorial not idempotent");
    o.require(w.twistorial == sp.twistorial && w.vectorial.is_zero() && w.skew.is_zero(), "twistorial not idempotent");
    o.require(k.skew == sp.skew && k.vectorial.is_zero() && k.twistorial.is_zero(), "skew not idempotent");
    const auto x = gen::element(rng, n);
    const auto xs = torsion_type_split(act_on_torsion(x, T));
    o.require(xs.vectorial == act_on_torsion(x, sp.vectorial) && xs.twistorial == act_on_torsion(x, sp.twistorial) &&
                  xs.skew == act_on_torsion(x, sp.skew),
              "split is not equivariant");
  }
  return o;
}

Outcome trivial_curvature() {
  Outcome o;
  std::mt19937 rng(7);
  const std::vector<std::pair<Subalgebra, bool>> cases = {
      {fx::g_minus(2), true},     {fx::so_g_minus(2), false},  {fx::g_minus(3), true},
      {fx::so_g_minus(3), false}, {fx::so2_g_minus(3), false}, {fx::type4(3), false}};
  for (const auto& [h, is_g_minus] : cases) {
    const auto trivial = max_trivial_submodule(h, ModuleKind::hom);
    for (int trial = 0; trial < 3; ++trial) {
      HomTensor s = HomTensor::zero(h.n());
      if (trial > 0)
        for (const auto& b : trivial.hom) s = s + gen::rational(rng) * b;
      const auto rep = trivial_curvature_check(h, skew_symmetrize(s));
      const std::string tag = "n=" + std::to_string(h.n()) + " " + to_string(classify(h).kind);
      o.require(rep.g_minus_valued, tag + ": member not g_- valued");
      if (is_g_minus) o.require(rep.minus_contraction_zero, tag + ": e_- contraction nonzero");
    }
  }
  return o;
}

Outcome sl2_at_1_0() {
  Outcome o;
  const Rational a(1), c(0);
  const ConnectionMap lc = koszul_levi_civita(sl2_metric_algebra(a, c));
  const WittFrame f(1);
  const auto em = MinkVector::basis(f, 0), e1 = MinkVector::basis(f, 1);
  const auto ep = MinkVector::basis(f, 2);
  o.require(lc.nabla(e1, em) == em && lc.nabla(ep, em) == -e1, "Levi-Civita table");
  const CurvTensor r = curvature_of(lc);
  o.require(r(0, 1) == X() && r(0, 2) == -I() && r(1, 2) == X() + Xt(), "Levi-Civita curvature");
  const RicciData ric = ricci_and_scalar(r);
  o.require(ric.ricci == Matrix{{0, 0, -2}, {0, -2, 0}, {-2, 0, 1}}, "Ricci");
  o.require(ric.scalar.sign() < 0, "scalar curvature not negative");
  o.require(!ric.einstein, "Einstein flag set");

  const Sl2Report rep = sl2_example(a, c);
  for (const auto& cl : rep.claims) o.require(cl.ok, "claim " + cl.name);
  o.require(rep.as_holonomy_dim == 1, "AS holonomy dimension");
  o.require(rep.lc_holonomy_dim == 3, "Levi-Civita holonomy dimension");
  const ConnectionMap as{lc.base, lc.lambda - sl2_contorsion(a, 0, c)};
  const Subalgebra hol = holonomy_span(as);
  o.require(hol.dim() == 1 && hol.contains(X()), "AS holonomy is not R X");
  const CurvTensor rt = curvature_of(as);
  const TorsionTensor t = torsion_of(as);
  bool parallel = is_parallel(as, rt) && is_parallel(as, t) && is_parallel(as, em);
  for (std::size_t u = 0; u < 3; ++u)
    parallel = parallel && covariant_derivative(as, u, sl2_contorsion(a, 0, c)).is_zero();
  o.require(parallel, "AS parallelism");
  const LieAlgebra g = sl2_metric_algebra(a, c).lie();
  const auto d = derived_algebra(g);
  o.require(d.size() == 3, "derived algebra dimension");
  const Signature sig = signature(killing_form(g));
  o.require(sig.nondegenerate() && sig.indefinite(), "Killing form signature");
  return o;
}

Outcome bianchi_obstruction() {
  Outcome o;
  const std::vector<Rational> grid = {Rational(-2), Rational(-1, 2), Rational(0), Rational(1), Rational(3)};
  const WittFrame f(1);
  for (const auto& a : grid) {
    for (const auto& b : grid) {
      const std::string tag = "a=" + a.str() + " b=" + b.str();
      for (const auto& c : {Rational(0), Rational(2, 3)}) {
        const InfinitesimalModel m = sl2_model(a, b, c);
        const MinkVector res = cyclic_curvature(m.rtilde, 0, 1, 2) + cyclic_torsion_square(m.t, 0, 1, 2);
        o.require(res == Rational(4) * a * b * MinkVector::basis(f, 0), tag + ": residual");
      }
      CurvatureSpaceOptions opts;
      opts.require_trivial = true;
      opts.pins.emplace_back(1, 2, X());
      const auto space = curvature_space(fx::g_minus(1), torsion_of_contorsion(sl2_contorsion(a, b, 0)), opts);
      o.require(space.feasible == (a * b).is_zero(), tag + ": feasibility");
    }
  }
  return o;
}

Outcome einstein_branch() {
  Outcome o;
  const Rational a(1), c(-1, 2);
  const ConnectionMap lc = koszul_levi_civita(sl2_metric_algebra(a, c));
  const CurvTensor r = curvature_of(lc);
  o.require(ricci_and_scalar(r).einstein, "Einstein flag not set");
  for (std::size_t u = 0; u < 3; ++u) o.require(covariant_derivative(lc, u, r).is_zero(), "nabla R nonzero");
  const Sl2Report rep = sl2_example(a, c);
  o.require(rep.einstein && rep.all_ok(), "report");
  return o;
}

Outcome cahen_wallach() {
  Outcome o;
  const Matrix Q{{1, 0}, {0, -1}};
  const InfinitesimalModel m = cahen_wallach_model(Q);
  o.require(check_model(m).all(), "model invariants");
  const TransvectionAlgebra tv = build_transvection(m);
  o.require(tv.jacobi, "transvection Jacobi");
  const CwReport rep = cahen_wallach_report(Q);
  o.require(rep.flags.pp && rep.flags.plane && rep.flags.symmetric, "wave predicates");
  o.require(rep.all_ok(), "report");
  std::vector<Vector> hol = coords_of(tv.holonomy);
  o.require(same_span(hol, coords_of(fx::g_minus_basis(2)), WittFrame(2).algebra_dim()), "holonomy is not g_-");
  return o;
}

Outcome mutation_diagnosis() {
  Outcome o;
  o.require(build_transvection(mutations::base()).jacobi, "unmutated model fails Jacobi");
  for (const auto& mu : mutations::all()) {
    o.require(check_model(mu.model).violated() == std::vector<ModelInvariant>{mu.expected},
              std::string(mu.name) + ": more than one invariant perturbed");
    const TransvectionAlgebra tv = build_transvection(mu.model);
    o.require(!tv.jacobi, std::string(mu.name) + ": Jacobi holds");
    o.require(tv.diagnosis == std::vector<ModelInvariant>{mu.expected}, std::string(mu.name) + ": diagnosis");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "trivial hom submodule of g_- in so(1,2)", 1000, g_minus_hom_family},
      {2, "vanishing branch for types 1 and 3", 5000, vanishing_branch},
      {3, "structure branch for types 2 and 4", 0, structure_branch},
      {4, "centralizer solver vs closed form", 0, centralizers},
      {5, "torsion containment and type split", 0, torsion_containment_and_split},
      {6, "h-trivial curvature is g_- valued", 0, trivial_curvature},
      {7, "sl(2,R) example at (a, c) = (1, 0)", 0, sl2_at_1_0},
      {8, "Bianchi obstruction 4ab e_-", 0, bianchi_obstruction},
      {9, "Einstein branch at (a, c) = (1, -1/2)", 0, einstein_branch},
      {10, "Cahen-Wallach Q = diag(1, -1)", 0, cahen_wallach},
      {11, "mutation diagnosis of the transvection algebra", 0, mutation_diagnosis},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && c.budget_ms > 0 && ms > c.budget_ms) {
      out.ok = false;
      out.detail = "over time budget";
    }
    std::printf("%s %2d %s (%.0f ms)%s%s\n", out.ok ? "PASS" : "FAIL", c.id, c.name, ms, out.ok ? "" : ": ",
                out.ok ? "" : out.detail.c_str());
    failed += out.ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
