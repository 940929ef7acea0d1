#ifndef ASMET_RNG_HPP
#define ASMET_RNG_HPP

#include <cstdint>
#include <random>

namespace asmet {

std::uint64_t splitmix64(std::uint64_t x);

// Seed of derived stream k under master seed `master`. Pure in (master, k),
// so adding streams never perturbs existing ones.
std::uint64_t stream_seed(std::uint64_t master, std::uint64_t k);

// Deterministic random stream with a draw counter.
//
// Every variate consumes a fixed number of engine outputs: uniform, normal
// and chi_square all consume exactly one. This fixed-consumption property is
// what makes stream positions comparable across runs and lets two processes
// share one stream in lockstep.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0,1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Standard normal via the inverse CDF (one engine output).
  double normal();

  // Chi-square with `dof` degrees of freedom via the inverse CDF.
  double chi_square(double dof);

  // Number of engine outputs consumed so far.
  std::uint64_t position() const { return count_; }

 private:
  std::uint64_t next() {
    ++count_;
    return engine_();
  }
  // Uniform on the open interval (0,1); safe to feed into quantiles.
  double next_open() {
    return (static_cast<double>(next() >> 12) + 0.5) * 0x1.0p-52;
  }

  std::mt19937_64 engine_;
  std::uint64_t count_ = 0;
};

}  // namespace asmet

#endif
