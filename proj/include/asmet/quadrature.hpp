#ifndef ASMET_QUADRATURE_HPP
#define ASMET_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace asmet::quad {

struct Result {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
};

using Fn = std::function<double(double)>;

// Adaptive Gauss-Kronrod on [a, b]. Infinite endpoints are allowed.
Result integrate(const Fn& f, double a, double b, double tol = 1e-10);

// Same, subdividing first at the given interior breakpoints (where the
// integrand is known or suspected to be non-smooth).
Result integrate_split(const Fn& f, double a, double b,
                       std::vector<double> splits, double tol = 1e-10);

// Locates sign changes of g on [a, b] by a coarse scan followed by bisection.
// Used to find acceptance-ratio kinks along an integration line.
std::vector<double> sign_changes(const Fn& g, double a, double b,
                                 int scan_points = 96);

}  // namespace asmet::quad

#endif
