#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace crystalrep {

using Vec  = Eigen::VectorXd;
using Mat  = Eigen::MatrixXd;
using IVec = Eigen::VectorXi;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using Complex = std::complex<double>;

inline constexpr double two_pi = 6.28318530717958647692528676656;

// Tolerance ladder used across the library. Exact group identities involve a
// handful of O(1) floating point products and sit at the tight end. Lattice
// membership goes through a matrix inverse plus rounding and is looser.
// Numerical rank decisions get the widest margin.
namespace tol {
inline constexpr double group_law    = 1e-12;  // affine and cocycle identities
inline constexpr double lattice      = 1e-9;   // integer coordinate rounding
inline constexpr double matrix_match = 1e-10;  // point group element lookup
inline constexpr double unitarity    = 1e-10;  // representation matrices
inline constexpr double boundary     = 1e-9;   // half-space membership band
inline constexpr double rank_svd     = 1e-8;   // commutant null space cut
inline constexpr double invariance   = 1e-8;   // subspace verdict threshold
}  // namespace tol

// Single exception type. `code` is a stable machine-readable tag that tests
// and the CLI match on; what() carries the readable details.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace crystalrep
