#pragma once

// Named subalgebras used by the tests, the acceptance suite and the CLI.

#include <vector>

#include "lorhol/subalgebras.hpp"

namespace lorhol::fixtures {

std::vector<GradedElement> g_minus_basis(int n);

/// g_-, type 2 with h_0 = 0.
Subalgebra g_minus(int n);
/// R E + g_-, type 1.
Subalgebra grading_g_minus(int n);
/// so(n) + g_-, type 2.
Subalgebra so_g_minus(int n);
/// so(2) acting on (e_1, e_2) + g_-, type 2 (n >= 2).
Subalgebra so2_g_minus(int n);
/// (R + so(2) on (e_1, e_2)) + g_-, type 1 (n >= 2).
Subalgebra co2_g_minus(int n);
/// graph(phi) + g_- with z = so(2) on (e_1, e_2), phi(J_12) = 1, type 3 (n >= 2).
Subalgebra graph_g_minus(int n);
/// graph(psi) + V_2 with V_1 = R e_1, V_2 = span(e_2..e_n), z = R J_23 and
/// psi(J_23) = e_1, type 4 (n >= 3).
Subalgebra type4(int n);

}  // namespace lorhol::fixtures
