#include "asmet/target.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <boost/math/distributions/gamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <limits>

#include "asmet/quadrature.hpp"

namespace asmet {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double unit_sphere_area(int d) {
  return 2.0 * std::pow(M_PI, 0.5 * d) / std::tgamma(0.5 * d);
}

double ball_volume(int d, double radius) {
  return std::pow(M_PI, 0.5 * d) * std::pow(radius, d) /
         std::tgamma(0.5 * d + 1.0);
}

Vec random_direction(RandomStream& rng, int d) {
  if (d == 1) {
    Vec u(1);
    u[0] = rng.uniform() < 0.5 ? -1.0 : 1.0;
    return u;
  }
  Vec g(d);
  do {
    for (int i = 0; i < d; ++i) g[i] = rng.normal();
  } while (g.norm() == 0.0);
  return g / g.norm();
}

// Intersections of the line o + t*dir with the sphere ||x - c|| = R.
std::vector<double> sphere_crossings(const Vec& o, const Vec& dir, const Vec& c,
                                     double radius) {
  const Vec w = o - c;
  const double a = dir.squaredNorm();
  const double b = 2.0 * w.dot(dir);
  const double cc = w.squaredNorm() - radius * radius;
  const double disc = b * b - 4.0 * a * cc;
  if (disc <= 0.0 || a == 0.0) return {};
  const double sq = std::sqrt(disc);
  return {(-b - sq) / (2.0 * a), (-b + sq) / (2.0 * a)};
}

class GaussianTarget final : public TargetDensity {
 public:
  GaussianTarget(Vec mean, Mat cov)
      : TargetDensity("gaussian", static_cast<int>(mean.size()),
                      SupportKind::SuperExponential, 0.0),
        mean_(std::move(mean)),
        cov_(std::move(cov)) {
    require(cov_.rows() == dim_ && cov_.cols() == dim_,
            "gaussian: covariance shape mismatch");
    require(cov_.isApprox(cov_.transpose()), "gaussian: covariance not symmetric");
    llt_.compute(cov_);
    require(llt_.info() == Eigen::Success,
            "gaussian: covariance not positive definite");
    double log_det = 0.0;
    for (int i = 0; i < dim_; ++i) log_det += 2.0 * std::log(llt_.matrixL()(i, i));
    log_norm_ = -0.5 * (dim_ * std::log(2.0 * M_PI) + log_det);
    mode_log_density_ = log_norm_;
    iso_ = cov_.isApprox(cov_(0, 0) * Mat::Identity(dim_, dim_));
  }

  bool has_gradient() const override { return true; }
  Vec grad_log_density(const Vec& x) const override {
    return -llt_.solve(x - mean_);
  }

  bool has_sampler() const override { return true; }
  Vec sample(RandomStream& rng) const override {
    Vec g(dim_);
    for (int i = 0; i < dim_; ++i) g[i] = rng.normal();
    return mean_ + llt_.matrixL() * g;
  }

  std::optional<double> analytic_moment(const std::string& name) const override {
    if (name == "x1") return mean_[0];
    if (name == "x1_sq") return cov_(0, 0) + mean_[0] * mean_[0];
    if (name == "norm_sq") return cov_.trace() + mean_.squaredNorm();
    if (name == "pos")
      return 0.5 * std::erfc(-mean_[0] / std::sqrt(2.0 * cov_(0, 0)));
    return std::nullopt;
  }

  double declared_rho() const override { return 1.5; }

  std::pair<Vec, Vec> bounding_box() const override {
    Vec half(dim_);
    for (int i = 0; i < dim_; ++i) half[i] = 14.0 * std::sqrt(cov_(i, i));
    return {mean_ - half, mean_ + half};
  }

  bool radially_symmetric() const override { return iso_; }
  Vec center() const override { return mean_; }

 private:
  double log_density_impl(const Vec& x) const override {
    const Vec d = x - mean_;
    return log_norm_ - 0.5 * d.dot(llt_.solve(d));
  }

  Vec mean_;
  Mat cov_;
  Eigen::LLT<Mat> llt_;
  double log_norm_;
  bool iso_;
};

class UniformBallTarget final : public TargetDensity {
 public:
  UniformBallTarget(Vec center, double radius)
      : TargetDensity("uniform_ball", static_cast<int>(center.size()),
                      SupportKind::CompactRegular,
                      -std::log(ball_volume(static_cast<int>(center.size()),
                                            radius))),
        center_(std::move(center)),
        radius_(radius) {
    require(radius > 0.0, "uniform_ball: radius must be positive");
  }

  bool has_sampler() const override { return true; }
  Vec sample(RandomStream& rng) const override {
    const Vec u = random_direction(rng, dim_);
    const double r = radius_ * std::pow(rng.uniform(), 1.0 / dim_);
    return center_ + r * u;
  }

  std::optional<double> analytic_moment(const std::string& name) const override {
    const double m2 = radius_ * radius_ / (dim_ + 2.0);
    if (name == "x1") return center_[0];
    if (name == "x1_sq") return center_[0] * center_[0] + m2;
    if (name == "norm_sq") return center_.squaredNorm() + dim_ * m2;
    if (name == "pos" && center_[0] == 0.0) return 0.5;
    return std::nullopt;
  }

  std::pair<Vec, Vec> bounding_box() const override {
    return {center_.array() - radius_, center_.array() + radius_};
  }

  std::vector<double> ray_breakpoints(const Vec& o, const Vec& dir, double t0,
                                      double t1) const override {
    std::vector<double> out;
    for (double t : sphere_crossings(o, dir, center_, radius_))
      if (t > t0 && t < t1) out.push_back(t);
    return out;
  }

  bool radially_symmetric() const override { return true; }
  Vec center() const override { return center_; }
  double radius() const { return radius_; }

 private:
  double log_density_impl(const Vec& x) const override {
    return (x - center_).norm() <= radius_ ? mode_log_density_ : kNegInf;
  }

  Vec center_;
  double radius_;
};

class UniformBoxTarget final : public TargetDensity {
 public:
  UniformBoxTarget(Vec lo, Vec hi)
      : TargetDensity("uniform_box", static_cast<int>(lo.size()),
                      SupportKind::Irregular, 0.0),
        lo_(std::move(lo)),
        hi_(std::move(hi)) {
    require(lo_.size() == hi_.size(), "uniform_box: bound size mismatch");
    double log_vol = 0.0;
    for (int i = 0; i < dim_; ++i) {
      require(hi_[i] > lo_[i], "uniform_box: empty side");
      log_vol += std::log(hi_[i] - lo_[i]);
    }
    mode_log_density_ = -log_vol;
  }

  bool has_sampler() const override { return true; }
  Vec sample(RandomStream& rng) const override {
    Vec x(dim_);
    for (int i = 0; i < dim_; ++i)
      x[i] = lo_[i] + (hi_[i] - lo_[i]) * rng.uniform();
    return x;
  }

  std::optional<double> analytic_moment(const std::string& name) const override {
    const double mid = 0.5 * (lo_[0] + hi_[0]);
    const double w = hi_[0] - lo_[0];
    if (name == "x1") return mid;
    if (name == "x1_sq") return mid * mid + w * w / 12.0;
    if (name == "norm_sq") {
      double s = 0.0;
      for (int i = 0; i < dim_; ++i) {
        const double m = 0.5 * (lo_[i] + hi_[i]);
        const double wi = hi_[i] - lo_[i];
        s += m * m + wi * wi / 12.0;
      }
      return s;
    }
    if (name == "pos") {
      const double p = (hi_[0] - std::max(0.0, lo_[0])) / w;
      return std::clamp(p, 0.0, 1.0);
    }
    return std::nullopt;
  }

  std::pair<Vec, Vec> bounding_box() const override { return {lo_, hi_}; }

  std::vector<double> ray_breakpoints(const Vec& o, const Vec& dir, double t0,
                                      double t1) const override {
    std::vector<double> out;
    for (int i = 0; i < dim_; ++i) {
      if (dir[i] == 0.0) continue;
      for (double bound : {lo_[i], hi_[i]}) {
        const double t = (bound - o[i]) / dir[i];
        if (t > t0 && t < t1) out.push_back(t);
      }
    }
    return out;
  }

 private:
  double log_density_impl(const Vec& x) const override {
    for (int i = 0; i < dim_; ++i)
      if (x[i] < lo_[i] || x[i] > hi_[i]) return kNegInf;
    return mode_log_density_;
  }

  Vec lo_, hi_;
};

class SmoothBumpTarget final : public TargetDensity {
 public:
  SmoothBumpTarget(Vec center, double radius, double floor)
      : TargetDensity("smooth_bump", static_cast<int>(center.size()),
                      SupportKind::CompactRegular, 0.0),
        center_(std::move(center)),
        radius_(radius),
        floor_(floor) {
    require(radius > 0.0, "smooth_bump: radius must be positive");
    require(floor >= 1e-8 && floor < 1.0, "smooth_bump: floor outside [1e-8, 1)");
    const int d = dim_;
    auto radial = [&](double r) { return std::pow(r, d - 1) * bump(r); };
    norm_ = unit_sphere_area(d) * quad::integrate(radial, 0.0, radius_).value;
    auto radial_r2 = [&](double r) { return std::pow(r, d + 1) * bump(r); };
    mean_r2_ = unit_sphere_area(d) *
               quad::integrate(radial_r2, 0.0, radius_).value / norm_;
    mode_log_density_ = -std::log(norm_);
  }

  bool has_sampler() const override { return true; }
  Vec sample(RandomStream& rng) const override {
    // Rejection from the uniform ball; bump(r) <= bump(0) = 1.
    for (;;) {
      const Vec u = random_direction(rng, dim_);
      const double r = radius_ * std::pow(rng.uniform(), 1.0 / dim_);
      if (rng.uniform() <= bump(r)) return center_ + r * u;
    }
  }

  std::optional<double> analytic_moment(const std::string& name) const override {
    if (name == "x1") return center_[0];
    if (name == "x1_sq") return center_[0] * center_[0] + mean_r2_ / dim_;
    if (name == "norm_sq") return center_.squaredNorm() + mean_r2_;
    if (name == "pos" && center_[0] == 0.0) return 0.5;
    return std::nullopt;
  }

  std::pair<Vec, Vec> bounding_box() const override {
    return {center_.array() - radius_, center_.array() + radius_};
  }

  std::vector<double> ray_breakpoints(const Vec& o, const Vec& dir, double t0,
                                      double t1) const override {
    std::vector<double> out;
    for (double t : sphere_crossings(o, dir, center_, radius_))
      if (t > t0 && t < t1) out.push_back(t);
    return out;
  }

  bool radially_symmetric() const override { return true; }
  Vec center() const override { return center_; }

 private:
  double bump(double r) const {
    const double c = std::cos(M_PI * r / (2.0 * radius_));
    return floor_ + (1.0 - floor_) * c * c;
  }

  double log_density_impl(const Vec& x) const override {
    const double r = (x - center_).norm();
    if (r > radius_) return kNegInf;
    return std::log(bump(r)) - std::log(norm_);
  }

  Vec center_;
  double radius_;
  double floor_;
  double norm_;
  double mean_r2_;
};

class ExponentialPowerTarget final : public TargetDensity {
 public:
  ExponentialPowerTarget(int dim, double p, double scale)
      : TargetDensity("exponential_power", dim, SupportKind::SuperExponential,
                      0.0),
        p_(p),
        scale_(scale) {
    require(p > 1.0, "exponential_power: p must exceed 1");
    require(scale > 0.0, "exponential_power: scale must be positive");
    // Z = area(S^{d-1}) * scale^d * Gamma(d/p) / p
    log_norm_ = -(std::log(unit_sphere_area(dim)) + dim * std::log(scale) +
                  std::lgamma(dim / p) - std::log(p));
    mode_log_density_ = log_norm_;
  }

  bool has_gradient() const override { return true; }
  Vec grad_log_density(const Vec& x) const override {
    const double r = x.norm();
    if (r == 0.0) return Vec::Zero(dim_);
    return -(p_ / std::pow(scale_, p_)) * std::pow(r, p_ - 2.0) * x;
  }

  bool has_sampler() const override { return true; }
  Vec sample(RandomStream& rng) const override {
    // (r/scale)^p is Gamma(d/p, 1) distributed.
    const boost::math::gamma_distribution<double> gd(dim_ / p_, 1.0);
    const Vec u = random_direction(rng, dim_);
    const double g = boost::math::quantile(gd, open_uniform(rng));
    return scale_ * std::pow(g, 1.0 / p_) * u;
  }

  std::optional<double> analytic_moment(const std::string& name) const override {
    const double r2 = scale_ * scale_ *
                      std::exp(std::lgamma((dim_ + 2.0) / p_) -
                               std::lgamma(dim_ / p_));
    if (name == "x1") return 0.0;
    if (name == "x1_sq") return r2 / dim_;
    if (name == "norm_sq") return r2;
    if (name == "pos") return 0.5;
    return std::nullopt;
  }

  double declared_rho() const override { return 0.5 * (1.0 + p_); }

  std::pair<Vec, Vec> bounding_box() const override {
    const double r = scale_ * std::pow(45.0, 1.0 / p_);
    Vec half = Vec::Constant(dim_, r);
    return {-half, half};
  }

  bool radially_symmetric() const override { return true; }

 private:
  static double open_uniform(RandomStream& rng) {
    double u;
    do {
      u = rng.uniform();
    } while (u == 0.0);
    return u;
  }

  double log_density_impl(const Vec& x) const override {
    return log_norm_ - std::pow(x.norm() / scale_, p_);
  }

  double p_, scale_, log_norm_;
};

}  // namespace

TargetPtr make_gaussian(Vec mean, Mat covariance) {
  return std::make_shared<GaussianTarget>(std::move(mean), std::move(covariance));
}

TargetPtr make_gaussian_iso(int dim, double sd) {
  return make_gaussian(Vec::Zero(dim), sd * sd * Mat::Identity(dim, dim));
}

TargetPtr make_uniform_ball(Vec center, double radius) {
  return std::make_shared<UniformBallTarget>(std::move(center), radius);
}

TargetPtr make_uniform_box(Vec lo, Vec hi) {
  return std::make_shared<UniformBoxTarget>(std::move(lo), std::move(hi));
}

TargetPtr make_smooth_bump(Vec center, double radius, double floor) {
  return std::make_shared<SmoothBumpTarget>(std::move(center), radius, floor);
}

TargetPtr make_exponential_power(int dim, double p, double scale) {
  return std::make_shared<ExponentialPowerTarget>(dim, p, scale);
}

Assumption1Report check_assumption1(const TargetDensity& target,
                                    const std::vector<double>& radii,
                                    int n_directions, std::uint64_t seed,
                                    double threshold,
                                    std::optional<double> rho) {
  if (target.support_kind() != SupportKind::SuperExponential ||
      !target.has_gradient())
    throw UnsupportedTargetError(
        target.name() + ": tail condition check needs a tail-regime target "
                        "with a gradient");
  Assumption1Report rep;
  rep.rho = rho.value_or(target.declared_rho());
  rep.radii = radii;

  RandomStream rng(seed);
  std::vector<Vec> dirs;
  dirs.reserve(n_directions);
  for (int i = 0; i < n_directions; ++i)
    dirs.push_back(random_direction(rng, target.dim()));

  for (double r : radii) {
    double sup_rad = -std::numeric_limits<double>::infinity();
    double sup_con = -std::numeric_limits<double>::infinity();
    for (const Vec& u : dirs) {
      const Vec g = target.grad_log_density(r * u);
      const double gu = u.dot(g);
      sup_rad = std::max(sup_rad, std::pow(r, 1.0 - rep.rho) * gu);
      // grad pi and grad log pi are parallel (pi > 0), so the contour dot
      // product can be formed from the log-gradient without underflow.
      if (g.norm() > 0.0) sup_con = std::max(sup_con, gu / g.norm());
    }
    rep.sup_radial.push_back(sup_rad);
    rep.sup_contour.push_back(sup_con);
  }

  rep.radial_ok = !radii.empty() && rep.sup_radial.back() < threshold;
  for (std::size_t i = 1; i < rep.sup_radial.size() && rep.radial_ok; ++i)
    if (rep.sup_radial[i] >= rep.sup_radial[i - 1]) rep.radial_ok = false;

  std::size_t first_neg = rep.sup_contour.size();
  for (std::size_t i = rep.sup_contour.size(); i-- > 0;) {
    if (rep.sup_contour[i] < 0.0) first_neg = i;
    else break;
  }
  rep.contour_ok = first_neg < rep.sup_contour.size();
  if (rep.contour_ok) rep.fitted_r0 = radii[first_neg];
  rep.pass = rep.radial_ok && rep.contour_ok;
  return rep;
}

}  // namespace asmet
