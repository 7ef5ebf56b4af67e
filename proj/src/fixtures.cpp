#include "lorhol/fixtures.hpp"

#include "lorhol/errors.hpp"

namespace lorhol::fixtures {

namespace {

void need(int n, int min) {
  if (n < min) throw PreconditionError("fixture needs n >= " + std::to_string(min));
}

Matrix J(int n, std::size_t i, std::size_t j) { return so_generator(n, i, j); }

}  // namespace

std::vector<GradedElement> g_minus_basis(int n) {
  std::vector<GradedElement> out;
  const std::size_t k = static_cast<std::size_t>(WittFrame(n).n());
  for (std::size_t i = 0; i < k; ++i) out.push_back(GradedElement::embed_minus(unit(k, i)));
  return out;
}

Subalgebra g_minus(int n) { return Subalgebra::closure(n, g_minus_basis(n)); }

Subalgebra grading_g_minus(int n) {
  auto gens = g_minus_basis(n);
  gens.push_back(GradedElement::grading(n));
  return Subalgebra::closure(n, gens);
}

Subalgebra so_g_minus(int n) {
  auto gens = g_minus_basis(n);
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
    for (std::size_t j = i + 1; j < static_cast<std::size_t>(n); ++j) gens.push_back(GradedElement::embed_zero(0, J(n, i, j)));
  return Subalgebra::closure(n, gens);
}

Subalgebra so2_g_minus(int n) {
  need(n, 2);
  auto gens = g_minus_basis(n);
  gens.push_back(GradedElement::embed_zero(0, J(n, 0, 1)));
  return Subalgebra::closure(n, gens);
}

Subalgebra co2_g_minus(int n) {
  need(n, 2);
  auto gens = g_minus_basis(n);
  gens.push_back(GradedElement::embed_zero(0, J(n, 0, 1)));
  gens.push_back(GradedElement::grading(n));
  return Subalgebra::closure(n, gens);
}

Subalgebra graph_g_minus(int n) {
  need(n, 2);
  auto gens = g_minus_basis(n);
  gens.push_back(GradedElement::embed_zero(1, J(n, 0, 1)));
  return Subalgebra::closure(n, gens);
}

Subalgebra type4(int n) {
  need(n, 3);
  const std::size_t k = static_cast<std::size_t>(n);
  std::vector<GradedElement> gens;
  gens.push_back(GradedElement::embed_zero(0, J(n, 1, 2)) + GradedElement::embed_minus(unit(k, 0)));
  for (std::size_t i = 1; i < k; ++i) gens.push_back(GradedElement::embed_minus(unit(k, i)));
  return Subalgebra::closure(n, gens);
}

}  // namespace lorhol::fixtures
