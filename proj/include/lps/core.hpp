#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace lps {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;
using RealVec = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;
inline const double kSqrtPi = std::sqrt(kPi);
inline constexpr Complex kI{0.0, 1.0};

// Default accuracy envelope: truncation 512, grid factor 4, poles at
// distance >= 0.25 from the axis, |t| <= 8.
inline constexpr int kDefaultTruncation = 512;
inline constexpr int kDefaultGridFactor = 4;
inline constexpr double kMinPoleDistance = 0.25;
inline constexpr double kTimeEnvelope = 8.0;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class GridError : public Error {
 public:
  using Error::Error;
};

class AliasingError : public Error {
 public:
  AliasingError(const std::string& what, double leaked_mass)
      : Error(what), leaked_mass(leaked_mass) {}
  double leaked_mass;
};

class PoleError : public Error {
 public:
  PoleError(const std::string& what, Complex pole) : Error(what), pole(pole) {}
  Complex pole;
};

// Cayley map between the closed upper half-plane and the unit disk:
// w = (z - i)/(z + i), z = i(1 + w)/(1 - w).
inline Complex cayley(Complex z) { return (z - kI) / (z + kI); }
inline Complex inverse_cayley(Complex w) { return kI * (1.0 + w) / (1.0 - w); }

}  // namespace lps
