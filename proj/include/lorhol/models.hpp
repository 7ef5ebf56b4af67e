#pragma once

// Metric Lie algebras on R^{1,n+1}, left-invariant connection calculus,
// infinitesimal models with their transvection algebras, and the worked
// three-dimensional and Cahen-Wallach examples.

#include <string>
#include <vector>

#include "lorhol/curvature.hpp"
#include "lorhol/invariant_modules.hpp"
#include "lorhol/lie_algebra.hpp"
#include "lorhol/subalgebras.hpp"
#include "lorhol/tensors.hpp"

namespace lorhol {

/// Lie bracket on the Witt basis of R^{1,n+1}; the metric is the Witt metric.
struct MetricLieAlgebra {
  int n = 1;
  AntisymmetricTable<MinkVector> brackets;

  explicit MetricLieAlgebra(int n_) : n(n_), brackets(n_) {}
  static MetricLieAlgebra abelian(int n) { return MetricLieAlgebra(n); }

  MinkVector bracket(const MinkVector& u, const MinkVector& v) const { return brackets(u, v); }
  LieAlgebra lie() const;
  bool satisfies_jacobi() const { return lie().satisfies_jacobi(); }
};

/// Left-invariant connection: Lambda(e_a) = nabla_{e_a} as an element of g.
struct ConnectionMap {
  MetricLieAlgebra base;
  HomTensor lambda;

  MinkVector nabla(const MinkVector& u, const MinkVector& v) const { return act(lambda(u), v); }
};

/// Torsion-free metric connection via the Koszul formula. Throws
/// PreconditionError if the brackets fail Jacobi.
ConnectionMap koszul_levi_civita(const MetricLieAlgebra& m);

/// T(u, v) = Lambda(u)v - Lambda(v)u - [u, v].
TorsionTensor torsion_of(const ConnectionMap& c);

/// R(u, v) = [Lambda(u), Lambda(v)] - Lambda([u, v]).
CurvTensor curvature_of(const ConnectionMap& c);

/// nabla_{e_a} applied to a left-invariant tensor: the module action of Lambda(e_a).
HomTensor covariant_derivative(const ConnectionMap& c, std::size_t a, const HomTensor& s);
TorsionTensor covariant_derivative(const ConnectionMap& c, std::size_t a, const TorsionTensor& t);
CurvTensor covariant_derivative(const ConnectionMap& c, std::size_t a, const CurvTensor& r);
MinkVector covariant_derivative(const ConnectionMap& c, std::size_t a, const MinkVector& v);

template <typename Tensor>
bool is_parallel(const ConnectionMap& c, const Tensor& x) {
  for (std::size_t a = 0; a < WittFrame(c.base.n).dim(); ++a)
    if (!covariant_derivative(c, a, x).is_zero()) return false;
  return true;
}

/// R - Rtilde - S(T~(.,.)) - [S(.), S(.)] with S = Lambda_lc - Lambda_as and
/// T~ the torsion of c_as. Zero whenever S is parallel for c_as.
CurvTensor curvature_difference_identity(const ConnectionMap& c_lc, const ConnectionMap& c_as);

// ------------------------------------------------------------------- models

enum class ModelInvariant { h_closure, curvature_invariance, torsion_invariance, bianchi, cyclic_curvature_torsion };
std::string to_string(ModelInvariant k);

/// (V, Rtilde, T) with Rtilde valued in h. The first Bianchi identity is
/// cyc Rtilde = cyc T(T(.,.),.) (connection convention).
struct InfinitesimalModel {
  Subalgebra h;
  CurvTensor rtilde;
  TorsionTensor t;
};

struct ModelChecks {
  bool values_in_h = false;
  bool curvature_invariance = false;      // h . Rtilde = 0
  bool torsion_invariance = false;        // h . T = 0
  bool bianchi = false;                   // cyc Rtilde = cyc TT
  bool cyclic_curvature_torsion = false;  // cyc Rtilde(T(u,v), w) = 0
  bool all() const {
    return values_in_h && curvature_invariance && torsion_invariance && bianchi && cyclic_curvature_torsion;
  }
  std::vector<ModelInvariant> violated() const;
};

ModelChecks check_model(const InfinitesimalModel& model);

/// Transvection algebra h + V on the basis (h basis, Witt basis):
/// [H, H'] from g, [H, X] = HX, [X, Y] = -Rtilde(X, Y) - T(X, Y).
struct TransvectionAlgebra {
  std::size_t h_dim = 0;
  int n = 1;
  LieAlgebra algebra;
  bool jacobi = false;
  std::vector<ModelInvariant> diagnosis;  // invariants whose Jacobi components fail, sorted
  std::vector<GradedElement> holonomy;    // basis of the closure of span{Rtilde(u, v)}
};

/// Throws PreconditionError if Rtilde takes a value outside h.
TransvectionAlgebra build_transvection(const InfinitesimalModel& model);

/// Levi-Civita data of a model: S = contorsion(T) and R = Rtilde + S(T) + [S, S].
struct LeviCivitaData {
  HomTensor s;
  CurvTensor r;
};
LeviCivitaData model_levi_civita(const InfinitesimalModel& model);

// ------------------------------------------------------------ geometry data

/// Lower bound for the holonomy algebra: bracket closure of all values of R
/// and of its iterated covariant derivatives.
Subalgebra holonomy_span(const ConnectionMap& c);

struct RicciData {
  Matrix ricci;  // Ric(e_a, e_b) = trace(w -> R(w, e_a) e_b)
  Rational scalar;
  bool einstein = false;
};
RicciData ricci_and_scalar(const CurvTensor& r);
inline RicciData ricci_and_scalar(const ConnectionMap& c) { return ricci_and_scalar(curvature_of(c)); }

struct WaveFlags {
  bool pp = false;         // R(x, y) = 0 for x, y in e_-^perp
  bool plane = false;      // pp and nabla_x R = 0 for x in e_-^perp
  bool symmetric = false;  // plane and nabla R = 0
};
/// `lambda` is the connection acting on R (nabla_u R = lambda(u) . R).
WaveFlags wave_predicates(const CurvTensor& r, const HomTensor& lambda);
inline WaveFlags wave_predicates(const ConnectionMap& c) { return wave_predicates(curvature_of(c), c.lambda); }

// ------------------------------------------------------------------ reports

struct Claim {
  std::string name;
  bool ok = false;
  std::string detail;  // exact residual or observed value when ok is false
};

struct Report {
  std::vector<Claim> claims;
  bool all_ok() const;
  const Claim* find(const std::string& name) const;
  void add(std::string name, bool ok, std::string detail = {});
};

/// The left-invariant metric on the three-dimensional unimodular algebra with
/// [e_-,e_1] = -2a e_-, [e_-,e_+] = 2a e_1, [e_1,e_+] = -2a e_+ + (2ac+1)/(2a) e_-,
/// together with the contorsion S(e_-) = aX, S(e_1) = aI, S(e_+) = cX + aX^T.
MetricLieAlgebra sl2_metric_algebra(const Rational& a, const Rational& c);
HomTensor sl2_contorsion(const Rational& a, const Rational& b, const Rational& c);
InfinitesimalModel sl2_model(const Rational& a, const Rational& b, const Rational& c);

struct Sl2Report : Report {
  Rational a, c;
  bool metric_side = false;  // false when a = 0
  Matrix ricci;
  Rational scalar;
  bool einstein = false;
  std::size_t as_holonomy_dim = 0;
  std::size_t lc_holonomy_dim = 0;
  std::size_t derived_dim = 0;
  Signature derived_killing;
};
Sl2Report sl2_example(const Rational& a, const Rational& c);

InfinitesimalModel cahen_wallach_model(const Matrix& Q);

struct CwReport : Report {
  ModelChecks checks;
  WaveFlags flags;
  std::size_t holonomy_dim = 0;
};
CwReport cahen_wallach_report(const Matrix& Q);

}  // namespace lorhol
