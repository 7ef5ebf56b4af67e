#pragma once

// Algebraic curvature tensors with torsion:
//   R(V, h, T) = {R in Lambda^2 V* (x) h : cyclic Bianchi identity with torsion}
// and the component data (Q, R_0, P, L, omega_T) that R(V, h, T) injects into
// for h inside so(n) + g_-.

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "lorhol/invariant_modules.hpp"
#include "lorhol/subalgebras.hpp"
#include "lorhol/tensors.hpp"

namespace lorhol {

/// Sign of the torsion term in the cyclic identity.
///   definition: cyc (R(u,v)w + T(T(u,v),w)) = 0
///   connection: cyc R(u,v)w = cyc T(T(u,v),w), which is what the curvature
///               and torsion of a metric connection with parallel torsion satisfy.
enum class BianchiConvention { definition, connection };
std::string to_string(BianchiConvention c);
BianchiConvention parse_bianchi_convention(const std::string& s);

/// cyc R(e_a, e_b) e_c.
MinkVector cyclic_curvature(const CurvTensor& r, std::size_t a, std::size_t b, std::size_t c);
/// cyc T(T(e_a, e_b), e_c).
MinkVector cyclic_torsion_square(const TorsionTensor& t, std::size_t a, std::size_t b, std::size_t c);
/// Same, for arbitrary arguments.
MinkVector cyclic_torsion_square(const TorsionTensor& t, const MinkVector& u, const MinkVector& v,
                                 const MinkVector& w);

struct BianchiResidual {
  bool holds = true;
  std::size_t a = 0, b = 0, c = 0;  // first failing triple
  MinkVector residual;              // its residual
};

BianchiResidual bianchi_residual(const CurvTensor& r, const TorsionTensor& t,
                                 BianchiConvention conv = BianchiConvention::definition);

struct CurvatureSpaceOptions {
  BianchiConvention convention = BianchiConvention::definition;
  /// Intersect with the h-trivial tensors.
  bool require_trivial = false;
  /// Prescribed values R(e_a, e_b) = value.
  std::vector<std::tuple<std::size_t, std::size_t, GradedElement>> pins;
};

/// Affine solution set: particular + span(homogeneous), or infeasible.
struct CurvatureSpace {
  bool feasible = false;
  CurvTensor particular;
  std::vector<CurvTensor> homogeneous;
  std::string reason;  // set when infeasible

  std::size_t dim() const { return homogeneous.size(); }
  /// True iff the T.T term vanishes and nothing is pinned, i.e. the set is a linear space.
  bool linear = true;
};

CurvatureSpace curvature_space(const Subalgebra& h, const TorsionTensor& t, const CurvatureSpaceOptions& opts = {});

struct PairSymmetryResult {
  bool holds = true;
  Rational worst;                          // largest |lhs - rhs| over all basis 4-tuples
  std::size_t u = 0, v = 0, w = 0, z = 0;  // where it occurs
};

/// 2(<R(u,v)w,z> - <R(w,z)u,v>) against the four cyclic torsion terms, on all
/// basis 4-tuples. Under BianchiConvention::definition the torsion terms enter
/// with the opposite sign, so members of R(V, h, T) give zero in both conventions.
PairSymmetryResult check_pair_symmetry(const CurvTensor& r, const TorsionTensor& t,
                                       BianchiConvention conv = BianchiConvention::definition);

/// T in ((V ^ V^+) + Lambda^2 V^0) (x) V_- + (V^0 ^ V^+) (x) V_0.
bool satisfies_tcond(const TorsionTensor& t);

/// omega_T(x, y) = <e_+, T(T(x,y),e_+) + T(T(e_+,x),y) - T(T(e_+,y),x)>.
Matrix omega_t(const TorsionTensor& t);

struct CurvComponents {
  int n = 0;
  std::vector<GradedElement> Q;  // Q(e_i) = R(e_+, e_i)
  std::vector<Matrix> R0;        // R0[i*n+j] = pi_so(R(e_i, e_j))
  std::vector<Matrix> P;         // P(e_i) = pi_so(Q(e_i))
  Matrix L;                      // L(i, j) = <Q(e_i) e_+, e_j>
  Matrix omega_T;

  bool minus_contraction_zero = false;  // R(e_-, .) = 0
  bool first_bianchi_v0 = false;        // cyc R(x,y)z = 0 on V_0
  bool pair_symmetry_three = false;     // pair symmetry with three arguments in V_- + V_0
  bool q_cyclic = false;                // cyc <Q(x)y, z> = 0
  bool p_in_script_p = false;           // cyc <P(x)y, z> = 0
  bool r0_bianchi = false;              // R_0 satisfies the first Bianchi identity
  bool omega_relation = false;          // <e_+, Q(x)y - Q(y)x> = +-omega_T(x,y)

  bool all() const {
    return minus_contraction_zero && first_bianchi_v0 && pair_symmetry_three && q_cyclic && p_in_script_p &&
           r0_bianchi && omega_relation;
  }
  /// Name of the first failing clause, empty if none.
  std::string failed_clause() const;
};

CurvComponents extract_components(const CurvTensor& r, const TorsionTensor& t,
                                  BianchiConvention conv = BianchiConvention::definition);

/// Inverse of the injection R -> (Q, R_0): R(e_-, .) = 0, R(e_+, x) = Q(x),
/// pi_0(R(x,y)) = R_0(x,y) and <R(x,y)e_+, z> = <Q(z)x, y>.
CurvTensor reconstruct_curvature(const CurvComponents& c);

/// dim R(V_0, h_0) for h_0 in so(n) (first Bianchi, values in h_0).
std::size_t algebraic_curvature_v0_dim(std::size_t n, const std::vector<Matrix>& h0);

/// Q(V_0, h, omega_T): Q in V^0 (x) h with cyc <Q(x)y,z> = 0 and <e_+, Q(x)y - Q(y)x> = sign * omega_T.
struct QSpace {
  bool feasible = false;
  std::size_t dim = 0;  // of the homogeneous part
};
QSpace q_space(const Subalgebra& h, const TorsionTensor& t, BianchiConvention conv = BianchiConvention::definition);

/// pr_{V_1}(Q(x) e_+) = psi(P(x)) for type 4 (psi extended by zero on s).
bool check_type4_range(const Classification& cls, const CurvComponents& c);

struct TrivialCurvatureReport {
  CurvatureSpace space;           // {R in R(V,h,T) : h.R = 0}
  bool g_minus_valued = false;    // every member takes values in g_-
  bool minus_contraction_zero = false;
};

/// Requires h of type 2 or 4 and T satisfying Tcond (PreconditionError otherwise).
TrivialCurvatureReport trivial_curvature_check(const Subalgebra& h, const TorsionTensor& t,
                                               BianchiConvention conv = BianchiConvention::definition);

/// R(e_+, x) = (Qx)-bar, R(x, e_+) = -(Qx)-bar, zero otherwise; Q symmetric n x n.
CurvTensor cahen_wallach_tensor(const Matrix& Q);

}  // namespace lorhol
