#pragma once

// JSON encoding of the workbench types. Rationals are strings "p" or "p/q";
// integers are accepted on input. Algebra elements use component form
// {"a", "A", "v", "w"}; antisymmetric tables are lists of {"pair", "value"}
// entries over a < b.

#include <string>
#include <vector>

#include "json.hpp"
#include "lorhol/curvature.hpp"
#include "lorhol/models.hpp"
#include "lorhol/subalgebras.hpp"
#include "lorhol/tensors.hpp"

namespace lorhol::json_io {

using nlohmann::json;

/// Input that does not match the expected shape.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

constexpr int kMaxN = 8;

json to_json(const Rational& r);
json to_json(const Vector& v);
json to_json(const Matrix& m);
json to_json(const MinkVector& v);
json to_json(const GradedElement& x);
json to_json(const HomTensor& s);
json to_json(const TorsionTensor& t);
json to_json(const CurvTensor& r);
json to_json(const MetricLieAlgebra& m);

Rational rational_from(const json& j, const std::string& where);
Vector vector_from(const json& j, std::size_t len, const std::string& where);
Matrix matrix_from(const json& j, std::size_t rows, std::size_t cols, const std::string& where);
GradedElement element_from(const json& j, int n, const std::string& where);
MinkVector mink_from(const json& j, int n, const std::string& where);
TorsionTensor torsion_from(const json& j, int n, const std::string& where);
CurvTensor curvature_from(const json& j, int n, const std::string& where);
MetricLieAlgebra metric_algebra_from(const json& j, const std::string& where);

/// Reads "n" (1 <= n <= kMaxN) from an object.
int n_from(const json& j, const std::string& where);

/// {"n", "generators": [...]} or {"n", "fixture": name}.
Subalgebra subalgebra_from(const json& j, const std::string& where);

/// {"h": subalgebra, "rtilde": table, "torsion": table}.
InfinitesimalModel model_from(const json& j, const std::string& where);

}  // namespace lorhol::json_io
