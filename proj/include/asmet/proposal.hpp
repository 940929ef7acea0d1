#ifndef ASMET_PROPOSAL_HPP
#define ASMET_PROPOSAL_HPP

#include <string>
#include <vector>

#include "asmet/common.hpp"
#include "asmet/rng.hpp"

namespace asmet {

enum class ProfileKind { Gaussian, Student };

// Radial template profile qhat. The proposal template density on R^d is
// proportional to qhat(||Sigma^{-1} z||) with
//   Gaussian: qhat(r) = exp(-r^2/2)
//   Student:  qhat(r) = (1 + r^2)^(-d/2 - gamma), gamma > 0
class RadialProfile {
 public:
  static RadialProfile gaussian(int dim);
  static RadialProfile student(int dim, double gamma);

  ProfileKind kind() const { return kind_; }
  int dim() const { return dim_; }
  double student_gamma() const { return gamma_; }

  double value(double r) const;
  double log_value(double r) const;
  double derivative(double r) const;

  // integral of r^{d-1} qhat(r) over (0, inf), cached at construction
  double radial_normalizer() const { return radial_normalizer_; }
  // CDF of the radius ||Sigma^{-1} z|| under the normalized template
  double radial_cdf(double r) const;
  // Smallest R with radial tail mass below `tail_mass`.
  double truncation_radius(double tail_mass) const;

  // Draw u with isotropic density proportional to qhat(||u||): d normals,
  // plus one chi-square draw for the Student kind.
  void sample_isotropic(RandomStream& rng, Vec& out) const;
  // Engine outputs consumed by one sample_isotropic call.
  int draws_per_sample() const {
    return dim_ + (kind_ == ProfileKind::Student ? 1 : 0);
  }

 private:
  RadialProfile(ProfileKind kind, int dim, double gamma);
  ProfileKind kind_;
  int dim_;
  double gamma_;
  double radial_normalizer_;
};

// Symmetric positive definite shape matrix with its factorization and
// spectral bounds recorded.
class ShapeMatrix {
 public:
  static ShapeMatrix identity(int dim);
  static ShapeMatrix diagonal(const Vec& diag);
  static ShapeMatrix dense(const Mat& sigma);

  int dim() const { return static_cast<int>(sigma_.rows()); }
  const Mat& matrix() const { return sigma_; }
  double log_det() const { return log_det_; }
  double min_eigenvalue() const { return min_eig_; }
  double max_eigenvalue() const { return max_eig_; }
  bool is_identity() const { return identity_; }

  Vec apply(const Vec& u) const;        // Sigma * u
  Vec solve(const Vec& z) const;        // Sigma^{-1} * z
  double radial_coord(const Vec& z) const;  // ||Sigma^{-1} z||

 private:
  explicit ShapeMatrix(Mat sigma);
  Mat sigma_;
  Mat chol_l_;  // lower Cholesky factor of Sigma
  double log_det_;
  double min_eig_, max_eig_;
  bool identity_;
};

enum class ScalingKind { Exponential, Softplus };

// Increasing surjection from the adaptation parameter s onto the proposal
// scale theta in (0, inf).
class ScalingFunction {
 public:
  static ScalingFunction exponential();
  static ScalingFunction softplus();

  ScalingKind kind() const { return kind_; }
  double value(double s) const;
  double inverse(double theta) const;
  double derivative(double s) const;

  // Growth constants (h, c, kappa): phi'(x + xi) <= c * max(1, phi(x)^kappa)
  // for all xi in [0, h].
  double growth_h() const { return h_; }
  double growth_c() const { return c_; }
  double growth_kappa() const { return kappa_; }
  // Grid check of the growth inequality and of monotonicity/surjectivity.
  bool check_growth_bound(double s_lo = -20.0, double s_hi = 20.0,
                          int n = 400) const;

  std::string name() const;

 private:
  ScalingFunction(ScalingKind kind, double h, double c, double kappa)
      : kind_(kind), h_(h), c_(c), kappa_(kappa) {}
  ScalingKind kind_;
  double h_, c_, kappa_;
};

// Scaled proposal family q_s(z) = phi(s)^{-d} q(phi(s)^{-1} z) around an
// elliptically symmetric template q(z) proportional to qhat(||Sigma^{-1}z||).
class ProposalModel {
 public:
  ProposalModel(RadialProfile profile, ShapeMatrix shape,
                ScalingFunction scaling);

  int dim() const { return shape_.dim(); }
  const RadialProfile& profile() const { return profile_; }
  const ShapeMatrix& shape() const { return shape_; }
  const ScalingFunction& scaling() const { return scaling_; }

  double theta(double s) const { return scaling_.value(s); }

  // Template draw v = Sigma * u; the scaled increment is phi(s) * v.
  // Consumes profile().draws_per_sample() engine outputs.
  Vec sample_template(RandomStream& rng) const;
  Vec sample_increment(double s, RandomStream& rng) const;

  // log q_s(z), normalized.
  double log_density(double s, const Vec& z) const;

  // Half-width of a box outside which q_s carries less than `tail_mass`.
  double truncation_halfwidth(double s, double tail_mass = 1e-9) const;

  // Replace the shape matrix (used by the covariance-adapting extension).
  ProposalModel with_shape(ShapeMatrix shape) const;

 private:
  RadialProfile profile_;
  ShapeMatrix shape_;
  ScalingFunction scaling_;
  double log_template_norm_;  // log of the template normalizing constant
};

// Numeric check of the template derivative conditions: for each epsilon,
//   (i)  qhat'(x) - 2 qhat'(x + eps) >= c1 > 0 on a detected interval [a, b]
//   (ii) the mass of the negative part of the same expression shrinks at
//        least exponentially in 1/eps across the grid.
struct ProfileDerivativeReport {
  struct Row {
    double eps;
    double interval_lo, interval_hi;
    double c1;        // min over [a, b]
    double neg_mass;  // integral of min(0, qhat'(x) - 2 qhat'(x+eps))
  };
  std::vector<Row> rows;
  double fitted_c2 = 0.0, fitted_c3 = 0.0;  // neg_mass ~ -c2 * exp(-c3/eps)
  bool pointwise_ok = false;
  bool mass_decay_ok = false;
  bool pass = false;
};

ProfileDerivativeReport check_profile_derivative_conditions(
    const RadialProfile& profile, const std::vector<double>& eps_grid);

}  // namespace asmet

#endif
