#ifndef ASMET_TARGET_HPP
#define ASMET_TARGET_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "asmet/common.hpp"
#include "asmet/rng.hpp"

namespace asmet {

enum class SupportKind { CompactRegular, SuperExponential, Irregular };

// An unnormalized-or-normalized target density seen only through its log.
// log_density returns -inf exactly outside the support. Instances are
// immutable after construction and safe to share across chains.
class TargetDensity {
 public:
  virtual ~TargetDensity() = default;

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  SupportKind support_kind() const { return kind_; }

  double log_density(const Vec& x) const {
    if (x.size() != dim_)
      throw ArgumentError(name_ + ": point has dimension " +
                          std::to_string(x.size()) + ", expected " +
                          std::to_string(dim_));
    return log_density_impl(x);
  }

  virtual bool has_gradient() const { return false; }
  virtual Vec grad_log_density(const Vec&) const {
    throw UnsupportedTargetError(name_ + ": gradient not available");
  }

  virtual bool has_sampler() const { return false; }
  virtual Vec sample(RandomStream&) const {
    throw UnsupportedTargetError(name_ + ": no direct sampler");
  }

  // sup_x log pi, attained at the mode; exact per builtin.
  double mode_log_density() const { return mode_log_density_; }

  // Exact values of named functionals under pi, where known.
  // Names used: "x1", "x1_sq", "norm_sq", "pos" (P(x1 > 0)).
  virtual std::optional<double> analytic_moment(const std::string&) const {
    return std::nullopt;
  }

  // Tail exponent rho > 1 for the radial decay condition of the
  // super-exponential class.
  virtual double declared_rho() const {
    throw UnsupportedTargetError(name_ + ": not a tail-regime target");
  }

  // Box [lo, hi] containing the support, or all but negligible mass for
  // unbounded targets. Used to truncate quadrature domains.
  virtual std::pair<Vec, Vec> bounding_box() const = 0;

  // Parameters t in (t0, t1) at which the density may be non-smooth along
  // the line origin + t * dir (support boundaries). Default: none.
  virtual std::vector<double> ray_breakpoints(const Vec& origin, const Vec& dir,
                                              double t0, double t1) const {
    (void)origin;
    (void)dir;
    (void)t0;
    (void)t1;
    return {};
  }

  // True when log_density is radially symmetric about `center()`.
  virtual bool radially_symmetric() const { return false; }
  virtual Vec center() const { return Vec::Zero(dim_); }

 protected:
  TargetDensity(std::string name, int dim, SupportKind kind,
                double mode_log_density)
      : name_(std::move(name)),
        dim_(dim),
        kind_(kind),
        mode_log_density_(mode_log_density) {
    require(dim >= 1, "target dimension must be positive");
  }
  virtual double log_density_impl(const Vec& x) const = 0;

  std::string name_;
  int dim_;
  SupportKind kind_;
  double mode_log_density_;
};

using TargetPtr = std::shared_ptr<const TargetDensity>;

TargetPtr make_gaussian(Vec mean, Mat covariance);
TargetPtr make_gaussian_iso(int dim, double sd = 1.0);
TargetPtr make_uniform_ball(Vec center, double radius);
TargetPtr make_uniform_box(Vec lo, Vec hi);
// Radial bump on a ball: density proportional to
//   floor + (1 - floor) * cos^2(pi r / (2 radius)),  r = ||x - center||.
// Positive up to the boundary, so the support is the closed ball.
TargetPtr make_smooth_bump(Vec center, double radius, double floor = 0.05);
// pi(x) proportional to exp(-(||x||/scale)^p), p > 1.
TargetPtr make_exponential_power(int dim, double p, double scale = 1.0);

// Radial tail check for tail-regime targets: per radius r, the report holds
//   sup over sampled directions u of  (r u / r^rho) . grad log pi(r u)
//   sup over sampled directions u of  (u . grad pi) / ||grad pi||
// The first sequence must decrease below `threshold`; the second must stay
// negative beyond some fitted radius r0 within the grid.
struct Assumption1Report {
  double rho = 0.0;
  std::vector<double> radii;
  std::vector<double> sup_radial;   // sup of (x/||x||^rho) . grad log pi
  std::vector<double> sup_contour;  // sup of (x/||x||) . grad pi / ||grad pi||
  double fitted_r0 = 0.0;           // first grid radius with all-negative contour sups beyond
  bool radial_ok = false;
  bool contour_ok = false;
  bool pass = false;
};

Assumption1Report check_assumption1(const TargetDensity& target,
                                    const std::vector<double>& radii,
                                    int n_directions, std::uint64_t seed,
                                    double threshold = -1.0,
                                    std::optional<double> rho = std::nullopt);

}  // namespace asmet

#endif
