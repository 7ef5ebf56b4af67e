#pragma once

// Trivial submodules of a subalgebra h in the g-modules V* (x) g,
// Lambda^2 V* (x) V, Lambda^2 V* (x) h and V, the skew-symmetrisation
// isomorphism V* (x) g = Lambda^2 V* (x) V, and the structure of trivial
// elements for indecomposable h.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lorhol/subalgebras.hpp"
#include "lorhol/tensors.hpp"

namespace lorhol {

enum class ModuleKind { hom, torsion, curvature, vector };
std::string to_string(ModuleKind k);
/// Parses "hom", "torsion", "curvature", "vector"; throws std::invalid_argument otherwise.
ModuleKind parse_module_kind(const std::string& s);

/// A g- (or h-) module given in coordinates.
struct LinearModule {
  std::size_t dim = 0;
  std::function<Vector(const GradedElement&, const Vector&)> act;
};

/// Common kernel of v -> x.v over the generators, intersected with span(start)
/// (the whole module when start is empty). Returns a reduced echelon basis.
std::vector<Vector> common_kernel(const std::vector<GradedElement>& generators, const LinearModule& module,
                                  const std::vector<Vector>& start = {});

LinearModule hom_module(int n);
LinearModule torsion_module(int n);
LinearModule vector_module(int n);
/// Lambda^2 V* (x) h with values in the coordinates of h.basis().
LinearModule curvature_module(const Subalgebra& h);

/// Coordinates of R in Lambda^2 V* (x) h; nullopt if some value leaves h.
std::optional<Vector> curvature_coords(const Subalgebra& h, const CurvTensor& r);
CurvTensor curvature_from_coords(const Subalgebra& h, const Vector& c);

struct TrivialSubmoduleReport {
  ModuleKind kind = ModuleKind::hom;
  int n = 0;
  std::size_t dim = 0;
  std::vector<Vector> coords;  // module coordinates of the basis
  std::vector<HomTensor> hom;
  std::vector<TorsionTensor> torsion;
  std::vector<CurvTensor> curvature;
  std::vector<MinkVector> vectors;
  std::map<std::string, bool> flags;
};

/// The maximal subspace of the module annihilated by h. The flag
/// "annihilated" re-checks every basis element through the typed action.
TrivialSubmoduleReport max_trivial_submodule(const Subalgebra& h, ModuleKind kind);

// --------------------------------------------------------- hom module structure

/// S(e_-) = 0, S(e_+) = (a, A) + v-bar, S(x) = -((A + a) x)-bar for x in V_0.
HomTensor trivial_hom_normal_form(int n, const Rational& a, const Matrix& A, const Vector& v);

struct StructureFlags {
  bool minus_vanishes = true;        // S(e_-) = 0
  bool screen_in_g_minus = true;     // S(x) in g_- for x in V_0
  bool plus_in_parabolic = true;     // S(e_+) in p
  bool screen_relation = true;       // S(x) e_+ = -pi_0(S(e_+)) x
  bool commutes_with_h0 = true;      // [h_0, pi_0(S(e_+))] = 0
  bool minus_part_invariant = true;  // type 2: h_0, type 4: psi^-1(V_1) + s kill pi_-(S(e_+))

  bool all() const {
    return minus_vanishes && screen_in_g_minus && plus_in_parabolic && screen_relation && commutes_with_h0 &&
           minus_part_invariant;
  }
  std::map<std::string, bool> named() const;
};

/// Clause-by-clause check of one element against the structure of trivial
/// hom elements. Throws PreconditionError unless h is of type 2 or 4 and n >= 2.
StructureFlags check_structure_element(const Subalgebra& h, const Classification& cls, const HomTensor& s);
/// Conjunction over the report basis; report must be of kind hom.
StructureFlags check_algtheo_structure(const Subalgebra& h, const TrivialSubmoduleReport& report);

/// Dimension of the trivial hom submodule read off the normal form: 0 for
/// types 1 and 3, otherwise 1 + dim z_so(n)(h_0) + dim ker(h_0) for types 2, 4.
std::size_t predicted_trivial_hom_dim(const Subalgebra& h, const Classification& cls);

// ----------------------------------------------------------------- torsion

/// T(v, w) = 1/2 (S(v) w - S(w) v).
TorsionTensor skew_symmetrize(const HomTensor& s);
/// The g-valued S with skew_symmetrize(S) = T.
HomTensor unskew(const TorsionTensor& t);
/// <S(X)Y, Z> = -1/2 (<T(X,Y),Z> + <T(Z,Y),X> + <T(Z,X),Y>), so that
/// T(X,Y) = -S(X)Y + S(Y)X.
HomTensor contorsion(const TorsionTensor& t);
/// T(X,Y) = -S(X)Y + S(Y)X, the torsion of the connection Lambda - S.
TorsionTensor torsion_of_contorsion(const HomTensor& s);

struct TorsionInvariants {
  Rational b;           // T(e_+, e_-) = b e_-
  Matrix omega;         // omega(x, y) = <T(x, y), e_+>
  bool containment = false;
  bool relation = false;  // <T(e_+, x), y> = b x.y + omega(x, y)
};

TorsionInvariants extract_torsion_invariants(const TorsionTensor& t);

/// T_abc = <T(e_a, e_b), e_c>.
std::vector<Rational> lower_torsion(const TorsionTensor& t);
/// tau(e_a) = sum_b T(e_a, e_b)^b.
Vector torsion_trace(const TorsionTensor& t);

struct TorsionTypeSplit {
  TorsionTensor vectorial;
  TorsionTensor twistorial;
  TorsionTensor skew;
};

TorsionTypeSplit torsion_type_split(const TorsionTensor& t);

}  // namespace lorhol
