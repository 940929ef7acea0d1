#ifndef ASMET_COMMON_HPP
#define ASMET_COMMON_HPP

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace asmet {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Everything thrown by the library derives from Error so callers can map
// failures onto exit codes in one place.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ArgumentError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct UnsupportedTargetError : Error { using Error::Error; };
struct UnsupportedDimensionError : Error { using Error::Error; };
struct InvalidStateError : Error { using Error::Error; };
struct BracketError : Error { using Error::Error; };
struct NumericalError : Error { using Error::Error; };
struct CouplingContractError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw ArgumentError(msg);
}

}  // namespace asmet

#endif
