#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace sphervol {

// Arguments to acos/sqrt that exceed their domain by at most this much are
// treated as float noise and clamped; larger violations are real geometry
// errors and raise.
inline constexpr double kClampTol = 1e-12;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline double clamped_unit(double x, const char* ctx) {
  if (x > 1.0) {
    if (x > 1.0 + kClampTol)
      throw DomainError(std::string(ctx) + ": cosine argument " +
                        std::to_string(x) + " exceeds 1");
    return 1.0;
  }
  if (x < -1.0) {
    if (x < -1.0 - kClampTol)
      throw DomainError(std::string(ctx) + ": cosine argument " +
                        std::to_string(x) + " below -1");
    return -1.0;
  }
  return x;
}

inline double checked_acos(double x, const char* ctx) {
  return std::acos(clamped_unit(x, ctx));
}

inline double checked_sqrt(double x, const char* ctx) {
  if (x < 0.0) {
    if (x < -kClampTol)
      throw DomainError(std::string(ctx) + ": negative radicand " +
                        std::to_string(x));
    return 0.0;
  }
  return std::sqrt(x);
}

}  // namespace sphervol
