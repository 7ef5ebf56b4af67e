#include <random>

#include "doctest.h"
#include "lorhol/errors.hpp"
#include "lorhol/fixtures.hpp"
#include "lorhol/models.hpp"
#include "support/gen.hpp"
#include "support/mutations.hpp"

using namespace lorhol;
namespace fx = lorhol::fixtures;

namespace {

GradedElement X() { return GradedElement::embed_minus(Vector{Rational(1)}); }
GradedElement I3() { return -GradedElement::grading(1); }

Matrix random_invertible(std::mt19937& rng, std::size_t n) {
  for (;;) {
    Matrix p = gen::matrix(rng, n, n);
    if (rank(p) == n) return p;
  }
}

Matrix inverse(const Matrix& p) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < p.rows(); ++j) cols.push_back(*solve(p, unit(p.rows(), j)));
  return Matrix::from_columns(cols, p.rows());
}

// Known three-dimensional Lie algebras in a random basis: [u, v]' = P^-1 [Pu, Pv].
MetricLieAlgebra random_metric_lie_algebra(std::mt19937& rng) {
  const auto kind = rng() % 4;
  auto base = [&](std::size_t i, std::size_t j) -> Vector {
    // Structure constants for (sl2: h,e,f), (so3), (heisenberg), (r2 + r).
    auto sgn = [&](Vector v) { return i < j ? v : -v; };
    const std::size_t a = std::min(i, j), b = std::max(i, j);
    if (a == b) return Vector(3);
    switch (kind) {
      case 0:
        if (a == 0 && b == 1) return sgn({0, 2, 0});
        if (a == 0 && b == 2) return sgn({0, 0, -2});
        return sgn({1, 0, 0});
      case 1:
        if (a == 0 && b == 1) return sgn({0, 0, 1});
        if (a == 0 && b == 2) return sgn({0, -1, 0});
        return sgn({1, 0, 0});
      case 2:
        if (a == 0 && b == 1) return sgn({0, 0, 1});
        return Vector(3);
      default:
        if (a == 0 && b == 1) return sgn({0, 1, 0});
        return Vector(3);
    }
  };
  const Matrix p = random_invertible(rng, 3);
  const Matrix pinv = inverse(p);
  MetricLieAlgebra m(1);
  for (std::size_t u = 0; u < 3; ++u)
    for (std::size_t v = u + 1; v < 3; ++v) {
      Vector out(3);
      const Vector pu = p.col(u), pv = p.col(v);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          if (!(pu[i] * pv[j]).is_zero()) axpy(pu[i] * pv[j], base(i, j), out);
      m.brackets.set(u, v, MinkVector(pinv * out));
    }
  return m;
}

HomTensor random_connection(std::mt19937& rng, int n) { return gen::hom(rng, n); }

}  // namespace

TEST_CASE("Killing form and signature of classical algebras") {
  // so(3): [e_i, e_j] = e_k cyclically.
  const auto so3 = LieAlgebra::from_brackets(3, [](std::size_t i, std::size_t j) {
    Vector v(3);
    if (i == j) return v;
    const std::size_t k = 3 - i - j;
    v[k] = ((j + 3 - i) % 3 == 1) ? 1 : -1;
    return v;
  });
  CHECK(so3.satisfies_jacobi());
  const auto s = signature(killing_form(so3));
  CHECK(s.negative == 3);
  CHECK(s.definite());
  CHECK(killing_form(so3) == Rational(-2) * Matrix::identity(3));

  const auto ab = LieAlgebra::abelian(4);
  CHECK(killing_form(ab) == Matrix(4, 4));
  CHECK(derived_algebra(ab).empty());
  CHECK(signature(killing_form(ab)).zero == 4);

  std::mt19937 rng(1);
  const auto sl2 = random_metric_lie_algebra(rng).lie();
  CHECK(sl2.satisfies_jacobi());
}

TEST_CASE("signature agrees with a congruence-built oracle") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    Matrix d(n, n);
    std::size_t pos = 0, neg = 0, zero = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const int pick = static_cast<int>(rng() % 3);
      d(i, i) = pick == 0 ? Rational(0) : (pick == 1 ? Rational(1 + rng() % 3) : Rational(-1 - long(rng() % 3)));
      (pick == 0 ? zero : (pick == 1 ? pos : neg)) += 1;
    }
    const Matrix p = random_invertible(rng, n);
    const auto s = signature(p.transpose() * d * p);
    CHECK(s.positive == pos);
    CHECK(s.negative == neg);
    CHECK(s.zero == zero);
  }
  // Hyperbolic plane has no diagonal pivot.
  const auto h = signature(Matrix{{0, 1}, {1, 0}});
  CHECK(h.positive == 1);
  CHECK(h.negative == 1);
  CHECK_THROWS_AS(signature(Matrix{{0, 1}, {0, 0}}), std::invalid_argument);
}

TEST_CASE("Lie algebra construction rejects bad tables") {
  CHECK_THROWS_AS(LieAlgebra(2, std::vector<Vector>(3, Vector(2))), std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebra::from_brackets(2, [](std::size_t i, std::size_t j) { return i == j ? Vector(2) : Vector{1, 0}; }),
                  std::invalid_argument);
  // Heisenberg: the span of the first generator and the center is closed, the two generators alone are not.
  const auto heis = LieAlgebra::from_brackets(3, [](std::size_t i, std::size_t j) {
    Vector v(3);
    if (i == 0 && j == 1) v[2] = 1;
    if (i == 1 && j == 0) v[2] = -1;
    return v;
  });
  CHECK(heis.restrict_to({unit(3, 0), unit(3, 2)}).dim() == 2);
  CHECK_THROWS_AS(heis.restrict_to({unit(3, 0), unit(3, 1)}), PreconditionError);
  CHECK(derived_algebra(heis).size() == 1);
}

TEST_CASE("Levi-Civita of an abelian algebra is zero") {
  for (int n : {1, 2, 3}) {
    const auto lc = koszul_levi_civita(MetricLieAlgebra::abelian(n));
    CHECK(lc.lambda.is_zero());
    CHECK(curvature_of(lc).is_zero());
    CHECK(holonomy_span(lc).dim() == 0);
    const auto ric = ricci_and_scalar(lc);
    CHECK(ric.ricci.is_zero());
    CHECK(ric.scalar.is_zero());
    const auto w = wave_predicates(lc);
    CHECK((w.pp && w.plane && w.symmetric));
  }
}

TEST_CASE("Koszul connection is torsion-free and metric on random algebras") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    const auto m = random_metric_lie_algebra(rng);
    REQUIRE(m.satisfies_jacobi());
    const auto lc = koszul_levi_civita(m);
    CHECK(torsion_of(lc).is_zero());
    for (int k = 0; k < 5; ++k) {
      const auto u = gen::mink(rng, 1), v = gen::mink(rng, 1), w = gen::mink(rng, 1);
      CHECK((inner(lc.nabla(u, v), w) + inner(v, lc.nabla(u, w))).is_zero());
    }
  }
  MetricLieAlgebra bad(1);
  bad.brackets.set(0, 1, MinkVector::basis(WittFrame(1), 0));
  bad.brackets.set(1, 2, MinkVector::basis(WittFrame(1), 2));
  bad.brackets.set(0, 2, MinkVector::basis(WittFrame(1), 0));
  REQUIRE_FALSE(bad.satisfies_jacobi());
  CHECK_THROWS_AS(koszul_levi_civita(bad), PreconditionError);
}

TEST_CASE("torsion of the zero connection is minus the bracket") {
  std::mt19937 rng(2);
  const auto m = random_metric_lie_algebra(rng);
  const ConnectionMap c{m, HomTensor::zero(1)};
  const auto t = torsion_of(c);
  for (auto [a, b] : index_pairs(3)) CHECK(t(a, b) == -m.brackets(a, b));
  for (std::size_t a = 0; a < 3; ++a) CHECK(is_parallel(c, gen::curvature(rng, 1)));
}

TEST_CASE("contorsion recovers the difference of two metric connections") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = random_metric_lie_algebra(rng);
    const ConnectionMap c1{m, random_connection(rng, 1)};
    const ConnectionMap c2{m, random_connection(rng, 1)};
    CHECK(contorsion(torsion_of(c2) - torsion_of(c1)) == c1.lambda - c2.lambda);
  }
}

TEST_CASE("curvature difference equals the alternation of the derivative of S") {
  // R - Rt - S(Tt) - [S, S] = (nt_u S)(v) - (nt_v S)(u) for arbitrary connections.
  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = random_metric_lie_algebra(rng);
    const auto lc = koszul_levi_civita(m);
    const ConnectionMap as{m, random_connection(rng, 1)};
    const HomTensor s = lc.lambda - as.lambda;
    const auto res = curvature_difference_identity(lc, as);
    for (auto [a, b] : index_pairs(3)) {
      const auto ds_a = covariant_derivative(as, a, s);
      const auto ds_b = covariant_derivative(as, b, s);
      CHECK(res(a, b) == ds_a[b] - ds_b[a]);
    }
    CHECK(curvature_difference_identity(lc, lc).is_zero());
  }
}

TEST_CASE("three-dimensional example at a = 1, c = 0") {
  const auto rep = sl2_example(1, 0);
  for (const auto& c : rep.claims) CHECK_MESSAGE(c.ok, (c.name + " " + c.detail));
  CHECK(rep.metric_side);
  CHECK(rep.ricci == Matrix{{0, 0, -2}, {0, -2, 0}, {-2, 0, 1}});
  CHECK(rep.scalar == Rational(-6));
  CHECK_FALSE(rep.einstein);
  CHECK(rep.as_holonomy_dim == 1);
  CHECK(rep.lc_holonomy_dim == 3);
  CHECK(rep.derived_dim == 3);
  CHECK(rep.derived_killing.indefinite());
  CHECK(rep.find("levi_civita.values") != nullptr);
  CHECK(rep.find("no such claim") == nullptr);
}

TEST_CASE("three-dimensional example: Einstein branch") {
  const auto rep = sl2_example(1, Rational(-1, 2));
  for (const auto& c : rep.claims) CHECK_MESSAGE(c.ok, (c.name + " " + c.detail));
  CHECK(rep.einstein);
  const auto lc = koszul_levi_civita(sl2_metric_algebra(1, Rational(-1, 2)));
  CHECK(is_parallel(lc, curvature_of(lc)));
}

TEST_CASE("three-dimensional example over a parameter grid") {
  const Rational as[] = {Rational(-2), Rational(-1, 3), Rational(1, 2), Rational(3)};
  const Rational cs[] = {Rational(-1), Rational(0), Rational(2, 5)};
  for (const auto& a : as)
    for (const auto& c : cs) {
      const auto rep = sl2_example(a, c);
      for (const auto& cl : rep.claims) CHECK_MESSAGE(cl.ok, (cl.name + " " + cl.detail));
      CHECK(rep.einstein == (Rational(1) + Rational(2) * a * c).is_zero());
    }
}

TEST_CASE("three-dimensional example at a = 0 covers only the model side") {
  const auto rep = sl2_example(0, 1);
  CHECK_FALSE(rep.metric_side);
  CHECK(rep.all_ok());
  CHECK(rep.find("torsion.containment") != nullptr);
  CHECK_THROWS_AS(sl2_metric_algebra(0, 1), PreconditionError);
}

TEST_CASE("transvection brackets of the three-dimensional model") {
  const Rational a(3, 2), c(-1, 4);
  const auto tv = build_transvection(sl2_model(a, 0, c));
  REQUIRE(tv.jacobi);
  REQUIRE(tv.h_dim == 1);
  // Basis order (X, e_-, e_1, e_+).
  CHECK(tv.algebra.bracket(0, 1) == Vector{0, 0, 0, 0});
  CHECK(tv.algebra.bracket(0, 2) == Vector{0, -1, 0, 0});
  CHECK(tv.algebra.bracket(0, 3) == Vector{0, 0, 1, 0});
  CHECK(tv.algebra.bracket(1, 2) == Vector{0, -2 * a, 0, 0});
  CHECK(tv.algebra.bracket(1, 3) == Vector{0, 0, 2 * a, 0});
  CHECK(tv.algebra.bracket(2, 3) == Vector{-1, c, 0, -2 * a});
}

TEST_CASE("Bianchi obstruction over the contorsion family") {
  const Rational grid[] = {Rational(-1), Rational(-1, 2), Rational(0), Rational(2, 3), Rational(2)};
  for (const auto& a : grid)
    for (const auto& b : grid) {
      const auto t = torsion_of_contorsion(sl2_contorsion(a, b, Rational(1, 3)));
      const WittFrame f(1);
      CHECK(cyclic_torsion_square(t, 0, 1, 2) == Rational(4) * a * b * MinkVector::e_minus(f));
      CHECK(check_model(sl2_model(a, b, Rational(1, 3))).bianchi == (a * b).is_zero());
    }
}

TEST_CASE("zero model gives an abelian semidirect product") {
  const InfinitesimalModel m{fx::g_minus(2), CurvTensor(2), TorsionTensor(2)};
  const auto tv = build_transvection(m);
  CHECK(tv.jacobi);
  CHECK(tv.holonomy.empty());
  for (std::size_t i = tv.h_dim; i < tv.algebra.dim(); ++i)
    for (std::size_t j = tv.h_dim; j < tv.algebra.dim(); ++j) CHECK(is_zero(tv.algebra.bracket(i, j)));
}

TEST_CASE("Cahen-Wallach models") {
  const auto rep = cahen_wallach_report(mutations::diag({1, -1}));
  for (const auto& c : rep.claims) CHECK_MESSAGE(c.ok, (c.name + " " + c.detail));
  CHECK(rep.holonomy_dim == 2);
  std::mt19937 rng(41);
  for (int n : {1, 2, 3}) {
    Matrix q = gen::matrix(rng, n, n);
    q = q + q.transpose();
    if (rank(q) < static_cast<std::size_t>(n)) continue;
    CHECK(cahen_wallach_report(q).all_ok());
    const auto lc = model_levi_civita(cahen_wallach_model(q));
    CHECK(lc.s.is_zero());
    CHECK(lc.r == cahen_wallach_tensor(q));
  }
  // A degenerate profile does not generate all of g_-.
  const auto deg = cahen_wallach_report(mutations::diag({1, 0}));
  CHECK_FALSE(deg.find("holonomy.g_minus")->ok);
  CHECK(deg.find("transvection.jacobi")->ok);
}

TEST_CASE("mutations are diagnosed by exactly the broken invariant") {
  const auto base = mutations::base();
  CHECK(check_model(base).all());
  CHECK(build_transvection(base).jacobi);
  for (const auto& mu : mutations::all()) {
    CAPTURE(mu.name);
    const auto checks = check_model(mu.model);
    REQUIRE(checks.violated() == std::vector<ModelInvariant>{mu.expected});
    const auto tv = build_transvection(mu.model);
    CHECK_FALSE(tv.jacobi);
    CHECK(tv.diagnosis == std::vector<ModelInvariant>{mu.expected});
  }
}

TEST_CASE("Jacobi diagnosis matches the direct invariant checks on random models") {
  std::mt19937 rng(43);
  const std::vector<Subalgebra> hs = {fx::g_minus(2), fx::so2_g_minus(2), fx::g_minus(1)};
  for (int trial = 0; trial < 60; ++trial) {
    const auto& h = hs[trial % hs.size()];
    const int n = h.n();
    CurvTensor r(n);
    for (auto [a, b] : index_pairs(WittFrame(n).dim())) {
      if (rng() % 3) continue;
      GradedElement v = GradedElement::zero(n);
      for (const auto& x : h.basis()) v = v + gen::rational(rng) * x;
      r.set(a, b, v);
    }
    TorsionTensor t(n);
    if (rng() % 2) t = gen::torsion(rng, n);
    const InfinitesimalModel m{h, r, t};
    const auto checks = check_model(m);
    const auto tv = build_transvection(m);
    CHECK(tv.jacobi == checks.all());
    CHECK(tv.diagnosis == checks.violated());
  }
}

TEST_CASE("transvection needs curvature values in h") {
  const WittFrame f(2);
  InfinitesimalModel m{fx::g_minus(2), CurvTensor(2), TorsionTensor(2)};
  m.rtilde.set(f.screen(0), f.screen(1), GradedElement::grading(2));
  CHECK_FALSE(check_model(m).values_in_h);
  CHECK_THROWS_AS(build_transvection(m), PreconditionError);
}

TEST_CASE("wave predicates distinguish the flags") {
  const WittFrame f(2);
  // Screen curvature breaks pp.
  CurvTensor r(2);
  r.set(f.screen(0), f.screen(1), GradedElement::embed_minus(Vector{1, 0}));
  CHECK_FALSE(wave_predicates(r, HomTensor::zero(2)).pp);
  // A CW tensor with a connection that moves it along e_+ only.
  const auto cw = cahen_wallach_tensor(mutations::diag({1, 2}));
  HomTensor lam = HomTensor::zero(2);
  lam[f.plus()] = GradedElement::embed_zero(0, so_generator(2, 0, 1));
  auto w = wave_predicates(cw, lam);
  CHECK(w.pp);
  CHECK(w.plane);
  CHECK_FALSE(w.symmetric);
  lam[f.screen(0)] = GradedElement::embed_zero(0, so_generator(2, 0, 1));
  w = wave_predicates(cw, lam);
  CHECK(w.pp);
  CHECK_FALSE(w.plane);
}

TEST_CASE("holonomy span includes curvature derivatives") {
  const auto lc = koszul_levi_civita(sl2_metric_algebra(1, 0));
  const auto hol = holonomy_span(lc);
  CHECK(hol.dim() == 3);
  CHECK(hol.contains(X()));
  CHECK(hol.contains(I3()));
}

TEST_CASE("model invariant names") {
  CHECK(to_string(ModelInvariant::bianchi) == "bianchi");
  CHECK(to_string(ModelInvariant::cyclic_curvature_torsion) == "cyclic_curvature_torsion");
}
