#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "cylgabor/common.hpp"

namespace cylgabor {

// Composite Gauss-Legendre over [a, b] with panels no wider than panel_width.
cplx integrate_panels(const std::function<cplx(double)>& f, double a, double b, double panel_width = 1.0);

// The (node, weight) pairs used by integrate_panels.
std::vector<std::pair<double, double>> panel_rule(double a, double b, double panel_width = 1.0);

double integrate_panels_real(const std::function<double(double)>& f, double a, double b,
                             double panel_width = 1.0);

}  // namespace cylgabor
