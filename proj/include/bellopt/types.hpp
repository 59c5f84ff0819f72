#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace bellopt {

/// One local-oscillator setting: the complex displacement amplitude a party
/// applies before its on-off detector. Dimensionless.
struct LoSetting {
  double re = 0.0;
  double im = 0.0;

  constexpr LoSetting() = default;
  constexpr LoSetting(double re_, double im_) : re(re_), im(im_) {}

  double modulus_squared() const { return re * re + im * im; }
  double modulus() const { return std::hypot(re, im); }
  std::complex<double> value() const { return {re, im}; }
  bool finite() const { return std::isfinite(re) && std::isfinite(im); }
};

using SettingsVector = std::vector<LoSetting>;

/// Componentwise comparison with absolute tolerance. Test helper only;
/// nothing in the model compares settings.
inline bool approx_equal(const LoSetting& a, const LoSetting& b,
                         double tol = 1e-12) {
  return std::abs(a.re - b.re) <= tol && std::abs(a.im - b.im) <= tol;
}

/// Mixing weight p of the entangled component. The state is separable
/// iff p <= separability_boundary.
struct WernerParameter {
  double p = 0.0;

  constexpr WernerParameter() = default;
  constexpr WernerParameter(double p_) : p(p_) {}

  static constexpr double separability_boundary = 1.0 / 3.0;

  bool valid() const { return std::isfinite(p) && p >= 0.0 && p <= 1.0; }
};

inline void require_valid(const WernerParameter& w) {
  if (!w.valid())
    throw std::domain_error("mixing parameter p must lie in [0,1]");
}

inline void require_finite(const LoSetting& s, const char* what) {
  if (!s.finite())
    throw std::domain_error(std::string(what) +
                            " amplitude must have finite components");
}

}  // namespace bellopt
