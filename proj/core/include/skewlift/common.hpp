#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace skewlift {

using cplx = std::complex<double>;

inline constexpr double PI = 3.14159265358979323846264338327950288;

// e(a) := exp(2 pi i a)
inline cplx e_of(cplx a) { return std::exp(cplx(0.0, 2.0 * PI) * a); }
inline cplx e_of(double a) {
  return {std::cos(2.0 * PI * a), std::sin(2.0 * PI * a)};
}

struct EvalConfig {
  double rel_tol = 1e-12;   // target relative accuracy, must lie in (0, 1e-6]
  int max_terms = 20000;    // series / quadrature cap, >= 64
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error { public: using Error::Error; };
class PoleError : public Error { public: using Error::Error; };
class NumericalError : public Error { public: using Error::Error; };
class UnsupportedProfile : public Error { public: using Error::Error; };
class UnsupportedIndex : public Error { public: using Error::Error; };
class FDConvergenceError : public Error { public: using Error::Error; };
class LimitDivergence : public Error { public: using Error::Error; };
class MissingCoefficient : public Error { public: using Error::Error; };
class AliasError : public Error { public: using Error::Error; };
class NoiseFloor : public Error { public: using Error::Error; };
class IOError : public Error { public: using Error::Error; };

// i^j for integer j (used for the paper-style signs (-1)^{j/2} at odd j)
inline cplx ipow(long j) {
  switch (((j % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// (-1)^j for integer j
inline double msign(long j) { return (j % 2 == 0) ? 1.0 : -1.0; }

}  // namespace skewlift
