#include "asmet/rng.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/normal.hpp>

namespace asmet {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t master, std::uint64_t k) {
  return splitmix64(master + (k + 1) * 0x9e3779b97f4a7c15ULL);
}

double RandomStream::normal() {
  static const boost::math::normal_distribution<double> unit{};
  return boost::math::quantile(unit, next_open());
}

double RandomStream::chi_square(double dof) {
  const boost::math::chi_squared_distribution<double> dist(dof);
  return boost::math::quantile(dist, next_open());
}

}  // namespace asmet
