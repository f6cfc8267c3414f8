#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace bsdw {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

// invalid argument values (dimension, parity, index ranges)
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// requested operator exceeds the configured dimension cap
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// operation not defined for the given representation or family
struct UnsupportedError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline constexpr cplx I_UNIT{0.0, 1.0};

// i^q for integer q (any sign)
inline cplx ipow(int q) {
  switch (((q % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

inline double sgn_bit(int bit) { return (bit & 1) ? -1.0 : 1.0; }

}  // namespace bsdw
