#include "asmet/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "asmet/common.hpp"

namespace asmet::quad {

using GK = boost::math::quadrature::gauss_kronrod<double, 15>;

Result integrate(const Fn& f, double a, double b, double tol) {
  Result r;
  r.value = GK::integrate(f, a, b, 15, tol, &r.error);
  if (!std::isfinite(r.value))
    throw NumericalError("quadrature produced a non-finite value");
  return r;
}

Result integrate_split(const Fn& f, double a, double b,
                       std::vector<double> splits, double tol) {
  std::erase_if(splits, [&](double t) { return !(t > a && t < b); });
  std::sort(splits.begin(), splits.end());
  splits.erase(std::unique(splits.begin(), splits.end()), splits.end());

  Result total;
  double lo = a;
  for (std::size_t i = 0; i <= splits.size(); ++i) {
    const double hi = (i < splits.size()) ? splits[i] : b;
    if (hi > lo) {
      const Result piece = integrate(f, lo, hi, tol);
      total.value += piece.value;
      total.error += piece.error;
    }
    lo = hi;
  }
  return total;
}

std::vector<double> sign_changes(const Fn& g, double a, double b,
                                 int scan_points) {
  std::vector<double> out;
  if (!(b > a) || scan_points < 2) return out;
  const double h = (b - a) / scan_points;
  double t0 = a;
  double g0 = g(t0);
  for (int i = 1; i <= scan_points; ++i) {
    const double t1 = (i == scan_points) ? b : a + i * h;
    const double g1 = g(t1);
    if ((g0 < 0.0 && g1 > 0.0) || (g0 > 0.0 && g1 < 0.0)) {
      double lo = t0, hi = t1, glo = g0;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double gm = g(mid);
        if (gm == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((glo < 0.0) == (gm < 0.0)) {
          lo = mid;
          glo = gm;
        } else {
          hi = mid;
        }
      }
      out.push_back(0.5 * (lo + hi));
    } else if (g0 != 0.0 && g1 == 0.0) {
      out.push_back(t1);
    }
    t0 = t1;
    g0 = g1;
  }
  return out;
}

}  // namespace asmet::quad
