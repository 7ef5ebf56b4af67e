#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "json_io.hpp"
#include "lorhol/curvature.hpp"
#include "lorhol/invariant_modules.hpp"
#include "lorhol/models.hpp"
#include "lorhol/subalgebras.hpp"

namespace lorhol::cli {

using namespace lorhol::json_io;

namespace {

class Checks {
 public:
  void add(const std::string& name, bool ok, const std::string& detail = {}, json residual = nullptr) {
    json c = {{"name", name}, {"ok", ok}};
    if (!ok && !detail.empty()) c["detail"] = detail;
    if (!ok && !residual.is_null()) c["residual"] = std::move(residual);
    list_.push_back(c);
    ok_ = ok_ && ok;
  }
  void add(const Report& r) {
    for (const auto& c : r.claims) add(c.name, c.ok, c.detail);
  }
  bool ok() const { return ok_; }
  const json& list() const { return list_; }

 private:
  json list_ = json::array();
  bool ok_ = true;
};

CommandResult finish(const std::string& name, Checks& checks, json result) {
  json report = {{"schema", "lorhol." + name + ".v1"},
                 {"command", name},
                 {"ok", checks.ok()},
                 {"checks", checks.list()},
                 {"result", std::move(result)}};
  return {checks.ok() ? 0 : 1, std::move(report)};
}

const json& require_input(const CommandOptions& o) {
  if (o.input.is_null()) throw InputError(o.name + " needs --input");
  return o.input;
}

// --n fills in "n" for fixture-style inputs that omit it.
json with_n(const CommandOptions& o, json j) {
  if (o.n && j.is_object() && !j.contains("n")) j["n"] = *o.n;
  return j;
}

json basis_json(const std::vector<GradedElement>& b) {
  json out = json::array();
  for (const auto& x : b) out.push_back(to_json(x));
  return out;
}

void expect_dim(const CommandOptions& o, Checks& checks, std::size_t dim) {
  if (o.expect_dim) {
    checks.add("expected_dim", dim == *o.expect_dim,
               "expected " + std::to_string(*o.expect_dim) + ", got " + std::to_string(dim));
  }
}

// ------------------------------------------------------------------ commands

CommandResult cmd_classify(const CommandOptions& o) {
  const Subalgebra h = subalgebra_from(with_n(o, require_input(o)), "input");
  const Classification cls = classify(h);
  Checks checks;
  if (o.expect_kind) {
    checks.add("classification.kind", to_string(cls.kind) == *o.expect_kind,
               "expected " + *o.expect_kind + ", got " + to_string(cls.kind));
  }
  json result = {{"n", h.n()},
                 {"dim", h.dim()},
                 {"kind", to_string(cls.kind)},
                 {"indecomposable", cls.indecomposable()},
                 {"basis", basis_json(h.basis())},
                 {"h0_dim", cls.h0.size()},
                 {"center_dim", cls.center_z.size()},
                 {"semisimple_dim", cls.semisimple_s.size()}};
  if (!cls.reason.empty()) result["reason"] = cls.reason;
  if (cls.phi) result["phi"] = to_json(*cls.phi);
  if (cls.kind == Kind::type4) {
    json v1 = json::array(), v2 = json::array(), psi = json::array();
    for (const auto& v : cls.V1) v1.push_back(to_json(v));
    for (const auto& v : cls.V2) v2.push_back(to_json(v));
    for (const auto& v : cls.psi) psi.push_back(to_json(v));
    result["V1"] = v1;
    result["V2"] = v2;
    result["psi"] = psi;
  }
  return finish("classify", checks, result);
}

CommandResult cmd_centralizer(const CommandOptions& o) {
  const Subalgebra h = subalgebra_from(with_n(o, require_input(o)), "input");
  const auto solver = centralizer(h);
  Checks checks;
  json result = {{"n", h.n()}, {"dim", solver.size()}, {"basis", basis_json(solver)}};
  if (classify(h).indecomposable()) {
    const auto formula = centralizer_formula(h);
    std::vector<Vector> a, b;
    for (const auto& x : solver) a.push_back(x.coords());
    for (const auto& x : formula) b.push_back(x.coords());
    checks.add("centralizer.formula_agrees", same_span(a, b, WittFrame(h.n()).algebra_dim()),
               "formula dim " + std::to_string(formula.size()));
    result["formula_basis"] = basis_json(formula);
  }
  expect_dim(o, checks, solver.size());
  return finish("centralizer", checks, result);
}

CommandResult cmd_trivial_submodule(const CommandOptions& o) {
  const Subalgebra h = subalgebra_from(with_n(o, require_input(o)), "input");
  const ModuleKind kind = parse_module_kind(o.module.value_or("hom"));
  const auto rep = max_trivial_submodule(h, kind);
  Checks checks;
  for (const auto& [name, ok] : rep.flags) checks.add("submodule." + name, ok);
  json basis = json::array();
  switch (kind) {
    case ModuleKind::hom:
      for (const auto& s : rep.hom) basis.push_back(to_json(s));
      break;
    case ModuleKind::torsion:
      for (const auto& t : rep.torsion) basis.push_back(to_json(t));
      break;
    case ModuleKind::curvature:
      for (const auto& r : rep.curvature) basis.push_back(to_json(r));
      break;
    case ModuleKind::vector:
      for (const auto& v : rep.vectors) basis.push_back(to_json(v));
      break;
  }
  json result = {{"n", h.n()}, {"module", to_string(kind)}, {"dim", rep.dim}, {"basis", basis}};
  const Classification cls = classify(h);
  result["kind"] = to_string(cls.kind);
  if (kind == ModuleKind::hom && h.n() >= 2 && cls.indecomposable()) {
    const std::size_t predicted = predicted_trivial_hom_dim(h, cls);
    result["predicted_dim"] = predicted;
    checks.add("structure.predicted_dim", predicted == rep.dim,
               "predicted " + std::to_string(predicted) + ", solver " + std::to_string(rep.dim));
    if (cls.kind == Kind::type2 || cls.kind == Kind::type4) {
      const StructureFlags flags = check_algtheo_structure(h, rep);
      for (const auto& [name, ok] : flags.named()) checks.add("structure." + name, ok);
    }
  }
  expect_dim(o, checks, rep.dim);
  return finish("trivial-submodule", checks, result);
}

CommandResult cmd_torsion_split(const CommandOptions& o) {
  const json& in = with_n(o, require_input(o));
  const int n = n_from(in, "input");
  if (!in.contains("torsion")) throw InputError("input: missing field 'torsion'");
  const TorsionTensor t = torsion_from(in["torsion"], n, "input.torsion");
  const auto split = torsion_type_split(t);
  Checks checks;
  checks.add("split.sum", split.vectorial + split.twistorial + split.skew == t);
  const auto v2 = torsion_type_split(split.vectorial);
  const auto w2 = torsion_type_split(split.twistorial);
  const auto s2 = torsion_type_split(split.skew);
  checks.add("split.idempotent", v2.vectorial == split.vectorial && w2.twistorial == split.twistorial &&
                                     s2.skew == split.skew && v2.twistorial.is_zero() && v2.skew.is_zero() &&
                                     w2.vectorial.is_zero() && w2.skew.is_zero() && s2.vectorial.is_zero() &&
                                     s2.twistorial.is_zero());
  const auto inv = extract_torsion_invariants(t);
  json result = {{"n", n},
                 {"vectorial", to_json(split.vectorial)},
                 {"twistorial", to_json(split.twistorial)},
                 {"skew", to_json(split.skew)},
                 {"trace", to_json(torsion_trace(t))},
                 {"containment", inv.containment},
                 {"totally_skew", split.skew == t}};
  return finish("torsion-split", checks, result);
}

CommandResult cmd_curvature_space(const CommandOptions& o) {
  const json& in = require_input(o);
  if (!in.is_object() || !in.contains("h")) throw InputError("input: missing field 'h'");
  const Subalgebra h = subalgebra_from(with_n(o, in["h"]), "input.h");
  const int n = h.n();
  const TorsionTensor t = in.contains("torsion") ? torsion_from(in["torsion"], n, "input.torsion") : TorsionTensor(n);
  CurvatureSpaceOptions opts;
  if (in.contains("convention")) {
    if (!in["convention"].is_string()) throw InputError("input.convention: expected a string");
    try {
      opts.convention = parse_bianchi_convention(in["convention"].get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("input.convention: ") + e.what());
    }
  }
  if (in.contains("require_trivial")) {
    if (!in["require_trivial"].is_boolean()) throw InputError("input.require_trivial: expected a boolean");
    opts.require_trivial = in["require_trivial"].get<bool>();
  }
  if (in.contains("pins")) {
    const CurvTensor pinned = curvature_from(in["pins"], n, "input.pins");
    for (const auto& entry : in["pins"]) {
      const auto a = entry["pair"][0].get<std::size_t>(), b = entry["pair"][1].get<std::size_t>();
      opts.pins.emplace_back(a, b, pinned(a, b));
    }
  }
  const auto sp = curvature_space(h, t, opts);
  Checks checks;
  json result = {{"n", n},
                 {"convention", to_string(opts.convention)},
                 {"require_trivial", opts.require_trivial},
                 {"feasible", sp.feasible},
                 {"linear", sp.linear},
                 {"dim", sp.dim()}};
  if (!sp.feasible) result["reason"] = sp.reason;
  json basis = json::array();
  for (const auto& r : sp.homogeneous) basis.push_back(to_json(r));
  result["basis"] = basis;
  if (sp.feasible) {
    result["particular"] = to_json(sp.particular);
    bool bianchi = bianchi_residual(sp.particular, t, opts.convention).holds;
    bool pair = check_pair_symmetry(sp.particular, t, opts.convention).holds;
    for (const auto& r : sp.homogeneous) {
      bianchi = bianchi && bianchi_residual(r, TorsionTensor(n), opts.convention).holds;
      pair = pair && check_pair_symmetry(r, TorsionTensor(n), opts.convention).holds;
    }
    checks.add("curvature_space.bianchi", bianchi);
    checks.add("curvature_space.pair_symmetry", pair);
  }
  if (o.expect_feasible) {
    checks.add("curvature_space.feasible", sp.feasible == *o.expect_feasible, sp.reason);
  }
  expect_dim(o, checks, sp.dim());
  return finish("curvature-space", checks, result);
}

json values_witness(const InfinitesimalModel& m) {
  for (auto [a, b] : index_pairs(m.rtilde.dim()))
    if (!m.h.contains(m.rtilde(a, b))) return {{"pair", {a, b}}, {"value", to_json(m.rtilde(a, b))}};
  return nullptr;
}

json curvature_invariance_witness(const InfinitesimalModel& m) {
  for (std::size_t k = 0; k < m.h.dim(); ++k) {
    const CurvTensor r = act_on_curvature(m.h.basis()[k], m.rtilde);
    if (!r.is_zero()) return {{"generator", k}, {"value", to_json(r)}};
  }
  return nullptr;
}

json torsion_invariance_witness(const InfinitesimalModel& m) {
  for (std::size_t k = 0; k < m.h.dim(); ++k) {
    const TorsionTensor t = act_on_torsion(m.h.basis()[k], m.t);
    if (!t.is_zero()) return {{"generator", k}, {"value", to_json(t)}};
  }
  return nullptr;
}

json bianchi_witness(const InfinitesimalModel& m) {
  const BianchiResidual r = bianchi_residual(m.rtilde, m.t, BianchiConvention::connection);
  if (r.holds) return nullptr;
  return {{"triple", {r.a, r.b, r.c}}, {"value", to_json(r.residual)}};
}

json cyclic_witness(const InfinitesimalModel& m) {
  const WittFrame f(m.h.n());
  const std::size_t d = f.dim();
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b)
      for (std::size_t c = b + 1; c < d; ++c) {
        const auto ea = MinkVector::basis(f, a), eb = MinkVector::basis(f, b), ec = MinkVector::basis(f, c);
        const GradedElement s = m.rtilde(m.t(a, b), ec) + m.rtilde(m.t(b, c), ea) + m.rtilde(m.t(c, a), eb);
        if (!s.is_zero()) return {{"triple", {a, b, c}}, {"value", to_json(s)}};
      }
  return nullptr;
}

CommandResult cmd_model_check(const CommandOptions& o) {
  const InfinitesimalModel model = model_from(require_input(o), "input");
  const ModelChecks mc = check_model(model);
  Checks checks;
  checks.add("model.values_in_h", mc.values_in_h, "curvature value outside h", values_witness(model));
  checks.add("model.curvature_invariance", mc.curvature_invariance, "h does not annihilate Rtilde",
             curvature_invariance_witness(model));
  checks.add("model.torsion_invariance", mc.torsion_invariance, "h does not annihilate T",
             torsion_invariance_witness(model));
  checks.add("model.bianchi", mc.bianchi, "cyclic identity fails", bianchi_witness(model));
  checks.add("model.cyclic_curvature_torsion", mc.cyclic_curvature_torsion, "cyc Rtilde(T(u, v), w) is nonzero",
             cyclic_witness(model));
  json result = {{"n", model.h.n()}, {"h_dim", model.h.dim()}};
  if (mc.values_in_h) {
    const TransvectionAlgebra tv = build_transvection(model);
    json diag = json::array();
    for (auto d : tv.diagnosis) diag.push_back(to_string(d));
    std::string detail;
    for (auto d : tv.diagnosis) detail += (detail.empty() ? "" : ", ") + to_string(d);
    checks.add("transvection.jacobi", tv.jacobi, detail);
    result["transvection"] = {{"dim", tv.algebra.dim()},
                              {"jacobi", tv.jacobi},
                              {"diagnosis", diag},
                              {"holonomy_dim", tv.holonomy.size()},
                              {"holonomy", basis_json(tv.holonomy)}};
  }
  return finish("model-check", checks, result);
}

CommandResult cmd_sl2_verify(const CommandOptions& o) {
  const Rational a = o.a.value_or(Rational(1));
  const Rational c = o.c.value_or(Rational(0));
  const Sl2Report rep = sl2_example(a, c);
  Checks checks;
  checks.add(rep);
  json result = {{"a", to_json(a)}, {"c", to_json(c)}, {"metric_side", rep.metric_side},
                 {"as_holonomy_dim", rep.as_holonomy_dim}, {"derived_dim", rep.derived_dim}};
  if (rep.metric_side) {
    result["ricci"] = to_json(rep.ricci);
    result["scalar"] = to_json(rep.scalar);
    result["einstein"] = rep.einstein;
    result["levi_civita_holonomy_dim"] = rep.lc_holonomy_dim;
    result["derived_killing"] = {{"positive", rep.derived_killing.positive},
                                 {"negative", rep.derived_killing.negative},
                                 {"zero", rep.derived_killing.zero}};
  }
  return finish("sl2-verify", checks, result);
}

CommandResult cmd_cw_verify(const CommandOptions& o) {
  Matrix q;
  if (!o.input.is_null()) {
    const json& in = o.input;
    if (!in.is_object() || !in.contains("Q") || !in["Q"].is_array() || in["Q"].empty())
      throw InputError("input: expected {\"Q\": square matrix}");
    const std::size_t k = in["Q"].size();
    if (k > static_cast<std::size_t>(kMaxN)) throw InputError("input.Q: unsupported n " + std::to_string(k));
    q = matrix_from(in["Q"], k, k, "input.Q");
    if (!q.is_symmetric()) throw InputError("input.Q: must be symmetric");
  } else {
    const int n = o.n.value_or(2);
    if (n < 1 || n > kMaxN) throw InputError("--n: unsupported n " + std::to_string(n));
    q = Matrix(n, n);
    for (int i = 0; i < n; ++i) q(i, i) = i % 2 == 0 ? 1 : -1;
  }
  const CwReport rep = cahen_wallach_report(q);
  Checks checks;
  checks.add(rep);
  json result = {{"n", q.rows()},
                 {"Q", to_json(q)},
                 {"pp", rep.flags.pp},
                 {"plane", rep.flags.plane},
                 {"symmetric", rep.flags.symmetric},
                 {"holonomy_dim", rep.holonomy_dim}};
  return finish("cw-verify", checks, result);
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"classify",        "centralizer", "trivial-submodule",
                                                 "torsion-split",   "curvature-space", "model-check",
                                                 "sl2-verify",      "cw-verify"};
  return names;
}

CommandResult run_command(const CommandOptions& o) {
  try {
    if (o.name == "classify") return cmd_classify(o);
    if (o.name == "centralizer") return cmd_centralizer(o);
    if (o.name == "trivial-submodule") return cmd_trivial_submodule(o);
    if (o.name == "torsion-split") return cmd_torsion_split(o);
    if (o.name == "curvature-space") return cmd_curvature_space(o);
    if (o.name == "model-check") return cmd_model_check(o);
    if (o.name == "sl2-verify") return cmd_sl2_verify(o);
    if (o.name == "cw-verify") return cmd_cw_verify(o);
    throw InputError("unknown command '" + o.name + "'");
  } catch (const std::logic_error& e) {
    return {2, {{"schema", "lorhol.error.v1"}, {"command", o.name}, {"ok", false}, {"error", e.what()}}};
  } catch (const json::exception& e) {
    return {2, {{"schema", "lorhol.error.v1"}, {"command", o.name}, {"ok", false}, {"error", e.what()}}};
  }
}

json read_input(const std::string& spec) {
  std::string text;
  if (!spec.empty() && spec.front() == '{') {
    text = spec;
  } else if (spec == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(spec);
    if (!in) throw InputError("cannot open input file '" + spec + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace lorhol::cli
