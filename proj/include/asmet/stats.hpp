#ifndef ASMET_STATS_HPP
#define ASMET_STATS_HPP

#include <cstdint>
#include <functional>
#include <vector>

namespace asmet::stats {

double norm_pdf(double x);
double norm_cdf(double x);
double norm_quantile(double p);

// Streaming mean/variance (Welford).
class MeanVar {
 public:
  void add(double x);
  long count() const { return n_; }
  double mean() const { return mean_; }
  double variance() const;  // sample variance
  double std_error() const;

 private:
  long n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

// Batch-means standard error for a correlated scalar stream of known length.
// The stream is cut into `n_batches` equal batches (a trailing remainder is
// folded into the last batch) and the error of the overall mean is estimated
// from the spread of the batch means.
class BatchMeans {
 public:
  BatchMeans(long n_total, int n_batches = 32);
  void add(double x);
  long count() const { return n_; }
  double mean() const;
  double std_error() const;
  int batches() const { return n_batches_; }

 private:
  long n_total_;
  int n_batches_;
  long batch_size_;
  long n_ = 0;
  double total_ = 0.0;
  double batch_sum_ = 0.0;
  long in_batch_ = 0;
  std::vector<double> batch_means_;
};

// Two-sided Kolmogorov-Smirnov test of `samples` against a CDF.
struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
};
KsResult ks_test(std::vector<double> samples,
                 const std::function<double(double)>& cdf);

// Mann-Kendall trend test with tie correction.
struct MannKendallResult {
  long long s = 0;
  double z = 0.0;
  double p_value = 1.0;
  bool significant(double level) const { return p_value < level; }
};
MannKendallResult mann_kendall(const std::vector<double>& x);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
};
LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace asmet::stats

#endif
