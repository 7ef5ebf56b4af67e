#include "json_io.hpp"

#include "lorhol/fixtures.hpp"

namespace lorhol::json_io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw InputError(where + ": " + what); }

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

template <typename Table, typename Fn>
json table_to_json(const Table& t, Fn&& value) {
  json out = json::array();
  for (auto [a, b] : index_pairs(t.dim())) out.push_back({{"pair", {a, b}}, {"value", value(t(a, b))}});
  return out;
}

template <typename Table, typename Fn>
Table table_from(const json& j, int n, const std::string& where, Fn&& value) {
  if (!j.is_array()) fail(where, "expected an array of {pair, value} entries");
  Table t(n);
  const std::size_t d = static_cast<std::size_t>(n) + 2;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = where + "[" + std::to_string(i) + "]";
    const json& p = member(j[i], "pair", w);
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() || !p[1].is_number_unsigned())
      fail(w, "pair must be two basis indices");
    const auto a = p[0].get<std::size_t>(), b = p[1].get<std::size_t>();
    if (a >= d || b >= d || a == b) fail(w, "pair indices must be distinct and below n + 2");
    t.set(a, b, value(member(j[i], "value", w), w + ".value"));
  }
  return t;
}

}  // namespace

json to_json(const Rational& r) { return r.str(); }

json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

json to_json(const MinkVector& v) { return to_json(v.coords()); }

json to_json(const GradedElement& x) {
  return {{"a", to_json(x.a())}, {"A", to_json(x.A())}, {"v", to_json(x.v())}, {"w", to_json(x.w())}};
}

json to_json(const HomTensor& s) {
  json out = json::array();
  for (const auto& x : s.images()) out.push_back(to_json(x));
  return out;
}

json to_json(const TorsionTensor& t) {
  return table_to_json(t, [](const MinkVector& v) { return to_json(v); });
}

json to_json(const CurvTensor& r) {
  return table_to_json(r, [](const GradedElement& x) { return to_json(x); });
}

json to_json(const MetricLieAlgebra& m) {
  return {{"n", m.n}, {"metric", "witt"}, {"brackets", to_json(m.brackets)}};
}

Rational rational_from(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(where, "expected a rational as a string or integer");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::logic_error& e) {
    fail(where, e.what());
  }
}

Vector vector_from(const json& j, std::size_t len, const std::string& where) {
  if (!j.is_array() || j.size() != len) fail(where, "expected an array of " + std::to_string(len) + " rationals");
  Vector v(len);
  for (std::size_t i = 0; i < len; ++i) v[i] = rational_from(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

Matrix matrix_from(const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array() || j.size() != rows) fail(where, "expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Vector row = vector_from(j[r], cols, where + "[" + std::to_string(r) + "]");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

GradedElement element_from(const json& j, int n, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object with fields a, A, v, w");
  const std::size_t k = static_cast<std::size_t>(n);
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "a" && it.key() != "A" && it.key() != "v" && it.key() != "w") fail(where, "unknown field '" + it.key() + "'");
  const Rational a = j.contains("a") ? rational_from(j["a"], where + ".a") : Rational(0);
  const Matrix A = j.contains("A") ? matrix_from(j["A"], k, k, where + ".A") : Matrix(k, k);
  const Vector v = j.contains("v") ? vector_from(j["v"], k, where + ".v") : Vector(k);
  const Vector w = j.contains("w") ? vector_from(j["w"], k, where + ".w") : Vector(k);
  if (!A.is_skew()) fail(where + ".A", "must be skew-symmetric");
  return GradedElement::from_components(n, a, A, v, w);
}

MinkVector mink_from(const json& j, int n, const std::string& where) {
  return MinkVector(vector_from(j, static_cast<std::size_t>(n) + 2, where));
}

TorsionTensor torsion_from(const json& j, int n, const std::string& where) {
  return table_from<TorsionTensor>(j, n, where, [n](const json& v, const std::string& w) { return mink_from(v, n, w); });
}

CurvTensor curvature_from(const json& j, int n, const std::string& where) {
  return table_from<CurvTensor>(j, n, where, [n](const json& v, const std::string& w) { return element_from(v, n, w); });
}

int n_from(const json& j, const std::string& where) {
  const json& v = member(j, "n", where);
  if (!v.is_number_integer()) fail(where + ".n", "expected an integer");
  const int n = v.get<int>();
  if (n < 1 || n > kMaxN) fail(where + ".n", "unsupported n " + std::to_string(n) + " (need 1 <= n <= " + std::to_string(kMaxN) + ")");
  return n;
}

MetricLieAlgebra metric_algebra_from(const json& j, const std::string& where) {
  const int n = n_from(j, where);
  if (j.contains("metric") && j["metric"] != "witt") fail(where + ".metric", "only the Witt metric is supported");
  MetricLieAlgebra m(n);
  m.brackets = torsion_from(member(j, "brackets", where), n, where + ".brackets");
  return m;
}

Subalgebra subalgebra_from(const json& j, const std::string& where) {
  const int n = n_from(j, where);
  if (j.contains("fixture")) {
    if (!j["fixture"].is_string()) fail(where + ".fixture", "expected a fixture name");
    const std::string name = j["fixture"].get<std::string>();
    try {
      if (name == "g_minus") return fixtures::g_minus(n);
      if (name == "grading_g_minus") return fixtures::grading_g_minus(n);
      if (name == "so_g_minus") return fixtures::so_g_minus(n);
      if (name == "so2_g_minus") return fixtures::so2_g_minus(n);
      if (name == "co2_g_minus") return fixtures::co2_g_minus(n);
      if (name == "graph_g_minus") return fixtures::graph_g_minus(n);
      if (name == "type4") return fixtures::type4(n);
      if (name == "full") return Subalgebra::full(n);
    } catch (const std::invalid_argument& e) {
      fail(where + ".fixture", e.what());
    }
    fail(where + ".fixture", "unknown fixture '" + name + "'");
  }
  const json& gens = member(j, "generators", where);
  if (!gens.is_array()) fail(where + ".generators", "expected an array");
  std::vector<GradedElement> g;
  for (std::size_t i = 0; i < gens.size(); ++i)
    g.push_back(element_from(gens[i], n, where + ".generators[" + std::to_string(i) + "]"));
  return Subalgebra::closure(n, g);
}

InfinitesimalModel model_from(const json& j, const std::string& where) {
  const Subalgebra h = subalgebra_from(member(j, "h", where), where + ".h");
  const int n = h.n();
  CurvTensor r = j.contains("rtilde") ? curvature_from(j["rtilde"], n, where + ".rtilde") : CurvTensor(n);
  TorsionTensor t = j.contains("torsion") ? torsion_from(j["torsion"], n, where + ".torsion") : TorsionTensor(n);
  return InfinitesimalModel{h, r, t};
}

}  // namespace lorhol::json_io
