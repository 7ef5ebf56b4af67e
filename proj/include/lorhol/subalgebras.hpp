#pragma once

// Subalgebras of g = so(1,n+1), the type 1-4 normal forms of indecomposable
// subalgebras of the parabolic p = (R + so(n)) + g_-, and centralizers.
//
// "Indecomposable" here means: passes the structural checks of one of the four
// normal forms. The converse direction (every normal form is indecomposable)
// is taken as given.

#include <optional>
#include <string>
#include <vector>

#include "lorhol/linalg.hpp"
#include "lorhol/minkowski.hpp"

namespace lorhol {

/// Bracket-closed subspace of g with a canonical (reduced echelon) basis.
class Subalgebra {
 public:
  /// Smallest subalgebra containing the generators. Generators must share the frame.
  static Subalgebra closure(int n, const std::vector<GradedElement>& generators);
  static Subalgebra full(int n);

  int n() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<GradedElement>& basis() const { return basis_; }
  bool contains(const GradedElement& x) const;
  /// Coefficients of x in basis(), if x lies in the subalgebra.
  std::optional<Vector> coordinates(const GradedElement& x) const;

 private:
  Subalgebra(int n, std::vector<GradedElement> basis);
  int n_ = 0;
  std::vector<GradedElement> basis_;
  std::vector<std::size_t> pivots_;  // leading coordinate of each basis element
};

// so(n) coordinates: the upper triangle A_ij, i < j.
Vector skew_coords(const Matrix& A);
Matrix skew_from_coords(std::size_t n, const Vector& c);
inline Matrix commutator(const Matrix& x, const Matrix& y) { return x * y - y * x; }

enum class Kind { type1, type2, type3, type4, decomposable, not_in_p };
std::string to_string(Kind k);

struct Classification {
  Kind kind = Kind::decomposable;
  std::string reason;                       // why decomposable / not_in_p, empty otherwise
  std::vector<GradedElement> h0;            // basis of pi_0(h), embedded in g_0
  std::vector<Matrix> center_z;             // basis of the centre of pi_so(h_0)
  std::vector<Matrix> semisimple_s;         // basis of [pi_so(h_0), pi_so(h_0)]
  std::optional<Vector> phi;                // type 3: phi(center_z[i])
  std::vector<Vector> V1, V2;               // type 4: orthogonal splitting of V_0
  std::vector<Vector> psi;                  // type 4: psi(center_z[i]) in V_1

  bool indecomposable() const {
    return kind == Kind::type1 || kind == Kind::type2 || kind == Kind::type3 || kind == Kind::type4;
  }
};

Classification classify(const Subalgebra& h);

struct CenterSemisimple {
  std::vector<Matrix> z;
  std::vector<Matrix> s;
};

/// Splits a reductive subalgebra h0 of so(n) as centre + derived algebra.
/// Throws PreconditionError if the two pieces do not form a direct sum.
CenterSemisimple center_semisimple_split(std::size_t n, const std::vector<Matrix>& h0);

/// z_g(h) by a nullspace solve over g.
std::vector<GradedElement> centralizer(const Subalgebra& h);
/// The closed form: {0} if pi_R(h) != 0, else {z-bar in g_- : pi_0(h) z = 0}.
std::vector<GradedElement> centralizer_formula(const Subalgebra& h);

/// Conjugate by diag(1, P, 1) with P orthogonal on V_0.
GradedElement conjugate_screen(const GradedElement& x, const Matrix& P);

/// The subalgebra h ∩ g_-, as V_0 vectors.
std::vector<Vector> g_minus_part(const Subalgebra& h);

}  // namespace lorhol
