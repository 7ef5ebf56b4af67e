#include <random>

#include "doctest.h"
#include "lorhol/errors.hpp"
#include "lorhol/fixtures.hpp"
#include "lorhol/invariant_modules.hpp"
#include "support/gen.hpp"

using namespace lorhol;
namespace fx = lorhol::fixtures;

namespace {

std::vector<Vector> coords_of(const std::vector<HomTensor>& v) {
  std::vector<Vector> out;
  for (const auto& s : v) out.push_back(s.coords());
  return out;
}

// Brute-force oracle: stack all action matrices at once and take one nullspace.
std::size_t stacked_oracle_dim(const Subalgebra& h, const LinearModule& m) {
  Matrix big(h.dim() * m.dim, m.dim);
  for (std::size_t j = 0; j < m.dim; ++j) {
    for (std::size_t i = 0; i < h.dim(); ++i) {
      const Vector img = m.act(h.basis()[i], unit(m.dim, j));
      for (std::size_t r = 0; r < m.dim; ++r) big(i * m.dim + r, j) = img[r];
    }
  }
  return nullspace(big).size();
}

}  // namespace

TEST_CASE("trivial hom submodule: frozen dimensions from the sympy oracle") {
  // Values produced by tests/oracles/trivial_dims.py.
  CHECK(max_trivial_submodule(fx::g_minus(1), ModuleKind::hom).dim == 3);
  CHECK(max_trivial_submodule(fx::g_minus(2), ModuleKind::hom).dim == 4);
  CHECK(max_trivial_submodule(fx::g_minus(3), ModuleKind::hom).dim == 7);
  CHECK(max_trivial_submodule(fx::so_g_minus(2), ModuleKind::hom).dim == 2);
  CHECK(max_trivial_submodule(fx::so_g_minus(3), ModuleKind::hom).dim == 1);
  CHECK(max_trivial_submodule(fx::grading_g_minus(2), ModuleKind::hom).dim == 0);
  CHECK(max_trivial_submodule(fx::grading_g_minus(3), ModuleKind::hom).dim == 0);
  CHECK(max_trivial_submodule(fx::type4(3), ModuleKind::hom).dim == 3);
  CHECK(max_trivial_submodule(fx::type4(4), ModuleKind::hom).dim == 5);
  CHECK(max_trivial_submodule(fx::graph_g_minus(3), ModuleKind::hom).dim == 0);
}

TEST_CASE("incremental kernel agrees with a single stacked nullspace") {
  for (const auto& h : {fx::g_minus(2), fx::so_g_minus(2), fx::type4(3), fx::graph_g_minus(2)}) {
    CHECK(max_trivial_submodule(h, ModuleKind::hom).dim == stacked_oracle_dim(h, hom_module(h.n())));
    CHECK(max_trivial_submodule(h, ModuleKind::torsion).dim == stacked_oracle_dim(h, torsion_module(h.n())));
    CHECK(max_trivial_submodule(h, ModuleKind::vector).dim == stacked_oracle_dim(h, vector_module(h.n())));
  }
  const auto h = fx::so2_g_minus(2);
  CHECK(max_trivial_submodule(h, ModuleKind::curvature).dim == stacked_oracle_dim(h, curvature_module(h)));
}

TEST_CASE("every reported element is annihilated") {
  for (const auto& h : {fx::g_minus(2), fx::so_g_minus(3), fx::type4(3)}) {
    for (auto kind : {ModuleKind::hom, ModuleKind::torsion, ModuleKind::vector, ModuleKind::curvature}) {
      const auto rep = max_trivial_submodule(h, kind);
      CHECK(rep.flags.at("annihilated"));
    }
  }
}

TEST_CASE("parallel null vector: only e_- for indecomposable types 2 and 4") {
  const auto rep = max_trivial_submodule(fx::so_g_minus(3), ModuleKind::vector);
  REQUIRE(rep.dim == 1);
  CHECK(rep.vectors[0] == MinkVector::e_minus(WittFrame(3)));
  CHECK(max_trivial_submodule(fx::grading_g_minus(3), ModuleKind::vector).dim == 0);
}

TEST_CASE("trivial hom elements for n = 1 span the three-parameter family") {
  const auto rep = max_trivial_submodule(fx::g_minus(1), ModuleKind::hom);
  const WittFrame f(1);
  const auto X = GradedElement::from_matrix(Matrix{{0, -1, 0}, {0, 0, 1}, {0, 0, 0}});
  CHECK(X == GradedElement::embed_minus(Vector{1}));
  // The three-parameter family, entry by entry.
  auto family = [&](const Rational& a, const Rational& b, const Rational& c) {
    HomTensor s = HomTensor::zero(1);
    s[f.minus()] = a * X;
    s[f.screen(0)] = GradedElement::from_matrix(Matrix{{a, -b, 0}, {0, 0, b}, {0, 0, -a}});
    s[f.plus()] = GradedElement::from_matrix(Matrix{{-b, -c, 0}, {-a, 0, c}, {0, a, b}});
    return s;
  };
  const std::vector<HomTensor> fam = {family(1, 0, 0), family(0, 1, 0), family(0, 0, 1)};
  CHECK(same_span(coords_of(rep.hom), coords_of(fam), HomTensor::coord_dim(1)));
}

TEST_CASE("structure clauses: normal form and solver output") {
  std::mt19937 rng(53);
  const auto h = fx::g_minus(2);
  const auto cls = classify(h);
  for (int t = 0; t < 10; ++t) {
    const Matrix A = skew_from_coords(2, gen::vector(rng, 1));
    const auto s = trivial_hom_normal_form(2, gen::rational(rng), A, gen::vector(rng, 2));
    for (const auto& x : h.basis()) CHECK(act_on_hom(x, s).is_zero());
    CHECK(check_structure_element(h, cls, s).all());
  }
  CHECK(check_structure_element(h, cls, HomTensor::zero(2)).all());
  for (const auto& hh : {fx::g_minus(2), fx::so_g_minus(3), fx::so2_g_minus(3), fx::type4(3), fx::type4(4)}) {
    const auto rep = max_trivial_submodule(hh, ModuleKind::hom);
    CHECK(check_algtheo_structure(hh, rep).all());
    CHECK(rep.dim == predicted_trivial_hom_dim(hh, classify(hh)));
  }
  // so(n), n >= 3: only the R-direction of S(e_+) survives.
  const auto rep = max_trivial_submodule(fx::so_g_minus(3), ModuleKind::hom);
  REQUIRE(rep.dim == 1);
  const auto& sp = rep.hom[0][WittFrame(3).plus()];
  CHECK(sp.A().is_zero());
  CHECK(is_zero(sp.v()));
}

TEST_CASE("structure clauses detect violations") {
  const auto h = fx::g_minus(2);
  const auto cls = classify(h);
  HomTensor s = trivial_hom_normal_form(2, 1, Matrix(2, 2), Vector{0, 0});
  s[0] = GradedElement::embed_minus(Vector{1, 0});
  const auto fl = check_structure_element(h, cls, s);
  CHECK_FALSE(fl.minus_vanishes);
  CHECK(fl.screen_relation);
}

TEST_CASE("structure check preconditions") {
  CHECK_THROWS_AS(check_algtheo_structure(fx::g_minus(1), max_trivial_submodule(fx::g_minus(1), ModuleKind::hom)),
                  PreconditionError);
  CHECK_THROWS_AS(
      check_algtheo_structure(fx::grading_g_minus(2), max_trivial_submodule(fx::grading_g_minus(2), ModuleKind::hom)),
      PreconditionError);
  CHECK_THROWS_AS(parse_module_kind("spinor"), std::invalid_argument);
}

TEST_CASE("skew-symmetrisation of the normal form") {
  std::mt19937 rng(59);
  const WittFrame f(3);
  for (int t = 0; t < 10; ++t) {
    const Rational a = gen::rational(rng);
    const Matrix A = skew_from_coords(3, gen::vector(rng, 3));
    const Vector v = gen::vector(rng, 3);
    const auto T = skew_symmetrize(trivial_hom_normal_form(3, a, A, v));
    CHECK(T(f.plus(), f.minus()) == (a / Rational(2)) * MinkVector::e_minus(f));
    const auto inv = extract_torsion_invariants(T);
    CHECK(inv.containment);
    CHECK(inv.relation);
    CHECK(inv.b == a / Rational(2));
    CHECK(inv.omega == -A);
  }
  CHECK(skew_symmetrize(HomTensor::zero(2)).is_zero());
}

TEST_CASE("torsion invariants: trivial cases") {
  const WittFrame f(2);
  const auto inv = extract_torsion_invariants(TorsionTensor(2));
  CHECK(inv.b == Rational(0));
  CHECK(inv.omega.is_zero());
  CHECK(inv.containment);
  TorsionTensor t(2);
  t.set(f.minus(), f.plus(), MinkVector::e_plus(f));
  CHECK_FALSE(extract_torsion_invariants(t).containment);
}

TEST_CASE("skew-symmetrisation is equivariant and inverted by unskew") {
  std::mt19937 rng(61);
  for (int n = 1; n <= 3; ++n) {
    for (int t = 0; t < 5; ++t) {
      const auto s = gen::hom(rng, n);
      const auto x = gen::element(rng, n);
      CHECK(skew_symmetrize(act_on_hom(x, s)) == act_on_torsion(x, skew_symmetrize(s)));
      CHECK(unskew(skew_symmetrize(s)) == s);
      const auto tt = gen::torsion(rng, n);
      CHECK(skew_symmetrize(unskew(tt)) == tt);
      CHECK(torsion_of_contorsion(contorsion(tt)) == tt);
    }
  }
}

TEST_CASE("torsion type split: projections") {
  std::mt19937 rng(67);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 3;
    const auto T = gen::torsion(rng, n);
    const auto sp = torsion_type_split(T);
    CHECK(sp.vectorial + sp.twistorial + sp.skew == T);
    // Idempotent: each piece splits as itself.
    const auto v = torsion_type_split(sp.vectorial);
    CHECK(v.vectorial == sp.vectorial);
    CHECK(v.twistorial.is_zero());
    CHECK(v.skew.is_zero());
    const auto w = torsion_type_split(sp.twistorial);
    CHECK(w.twistorial == sp.twistorial);
    CHECK(w.vectorial.is_zero());
    CHECK(w.skew.is_zero());
    const auto k = torsion_type_split(sp.skew);
    CHECK(k.skew == sp.skew);
    CHECK(k.vectorial.is_zero());
    CHECK(k.twistorial.is_zero());
    // Equivariance.
    const auto x = gen::element(rng, n);
    const auto xs = torsion_type_split(act_on_torsion(x, T));
    CHECK(xs.vectorial == act_on_torsion(x, sp.vectorial));
    CHECK(xs.twistorial == act_on_torsion(x, sp.twistorial));
    CHECK(xs.skew == act_on_torsion(x, sp.skew));
  }
}

TEST_CASE("torsion type split: characterisation through S(e_+)") {
  const int n = 3;
  const WittFrame f(n);
  // S(e_+) a multiple of the identity: vectorial, with null trace form along e^-.
  const auto tv = skew_symmetrize(trivial_hom_normal_form(n, 2, Matrix(3, 3), Vector(3)));
  const auto sv = torsion_type_split(tv);
  CHECK(sv.twistorial.is_zero());
  CHECK(sv.skew.is_zero());
  // tau = 4 <e_-, .>: supported on the e_+ slot, metric dual along e_-, null.
  const Vector tau = torsion_trace(tv);
  CHECK(tau[f.plus()] == Rational(4));
  for (std::size_t a = 0; a + 1 < f.dim(); ++a) CHECK(tau[a].is_zero());
  CHECK(inner(MinkVector(f.metric() * tau), MinkVector(f.metric() * tau)) == Rational(0));
  // S(e_+) in g_-: twistorial.
  const auto st = torsion_type_split(skew_symmetrize(trivial_hom_normal_form(n, 0, Matrix(3, 3), Vector{1, 2, 0})));
  CHECK(st.vectorial.is_zero());
  CHECK(st.skew.is_zero());
  // S(e_+) in so(n): totally skew.
  const auto ss = torsion_type_split(skew_symmetrize(trivial_hom_normal_form(n, 0, so_generator(3, 0, 1), Vector(3))));
  CHECK(ss.vectorial.is_zero());
  CHECK(ss.twistorial.is_zero());
  // A totally antisymmetric input has no other parts.
  CHECK(torsion_type_split(ss.skew).skew == ss.skew);
}
