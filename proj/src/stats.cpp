#include "asmet/stats.hpp"

#include <algorithm>
#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <map>

#include "asmet/common.hpp"

namespace asmet::stats {

double norm_pdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
}

double norm_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double norm_quantile(double p) {
  static const boost::math::normal_distribution<double> unit{};
  return boost::math::quantile(unit, p);
}

void MeanVar::add(double x) {
  ++n_;
  const double d = x - mean_;
  mean_ += d / n_;
  m2_ += d * (x - mean_);
}

double MeanVar::variance() const { return n_ > 1 ? m2_ / (n_ - 1) : 0.0; }

double MeanVar::std_error() const {
  return n_ > 0 ? std::sqrt(variance() / n_) : 0.0;
}

BatchMeans::BatchMeans(long n_total, int n_batches)
    : n_total_(n_total), n_batches_(n_batches) {
  require(n_total > 0 && n_batches > 1, "batch means: bad sizes");
  batch_size_ = std::max<long>(1, n_total / n_batches);
}

void BatchMeans::add(double x) {
  ++n_;
  total_ += x;
  batch_sum_ += x;
  ++in_batch_;
  const bool last_batch = static_cast<long>(batch_means_.size()) == n_batches_ - 1;
  if (in_batch_ == batch_size_ && !last_batch) {
    batch_means_.push_back(batch_sum_ / in_batch_);
    batch_sum_ = 0.0;
    in_batch_ = 0;
  }
}

double BatchMeans::mean() const { return n_ > 0 ? total_ / n_ : 0.0; }

double BatchMeans::std_error() const {
  std::vector<double> means = batch_means_;
  if (in_batch_ > 0) means.push_back(batch_sum_ / in_batch_);
  if (means.size() < 2) return 0.0;
  MeanVar mv;
  for (double m : means) mv.add(m);
  return std::sqrt(mv.variance() / means.size());
}

namespace {
// Kolmogorov distribution tail: P(D > lambda) = 2 sum (-1)^{k-1} e^{-2k^2 l^2}.
double kolmogorov_tail(double lambda) {
  if (lambda <= 0.0) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 == 1) ? term : -term;
    if (term < 1e-16) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}
}  // namespace

KsResult ks_test(std::vector<double> samples,
                 const std::function<double(double)>& cdf) {
  require(!samples.empty(), "ks_test: empty sample");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max(d, std::abs(f - static_cast<double>(i) / n));
    d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
  }
  KsResult r;
  r.statistic = d;
  const double sn = std::sqrt(n);
  r.p_value = kolmogorov_tail((sn + 0.12 + 0.11 / sn) * d);
  return r;
}

MannKendallResult mann_kendall(const std::vector<double>& x) {
  MannKendallResult r;
  const long n = static_cast<long>(x.size());
  if (n < 3) return r;
  long long s = 0;
  for (long i = 0; i < n - 1; ++i)
    for (long j = i + 1; j < n; ++j) {
      if (x[j] > x[i]) ++s;
      else if (x[j] < x[i]) --s;
    }
  std::map<double, long> ties;
  for (double v : x) ++ties[v];
  double var = static_cast<double>(n) * (n - 1) * (2.0 * n + 5);
  for (const auto& [v, t] : ties)
    if (t > 1) var -= static_cast<double>(t) * (t - 1) * (2.0 * t + 5);
  var /= 18.0;
  r.s = s;
  if (var > 0.0) {
    if (s > 0) r.z = (s - 1.0) / std::sqrt(var);
    else if (s < 0) r.z = (s + 1.0) / std::sqrt(var);
    r.p_value = 2.0 * (1.0 - norm_cdf(std::abs(r.z)));
  }
  return r;
}

LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
  require(x.size() == y.size() && x.size() >= 2, "linear_fit: bad input");
  MeanVar mx, my;
  for (double v : x) mx.add(v);
  for (double v : y) my.add(v);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx.mean()) * (y[i] - my.mean());
    sxx += (x[i] - mx.mean()) * (x[i] - mx.mean());
  }
  LinearFit f;
  f.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  f.intercept = my.mean() - f.slope * mx.mean();
  return f;
}

}  // namespace asmet::stats
