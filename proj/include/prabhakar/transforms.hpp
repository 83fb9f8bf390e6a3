#ifndef PRABHAKAR_TRANSFORMS_HPP
#define PRABHAKAR_TRANSFORMS_HPP

#include <complex>
#include <functional>
#include <limits>
#include <string>

#include "prabhakar/special.hpp"

namespace prabhakar::transforms {

using special::PrabhakarParams;

// A Laplace-domain function. The evaluator is complex-valued so the Talbot
// contour can walk into the left half-plane; restricted to positive real s it
// must return real values. Callers are responsible for F being analytic to
// the right of (and on) the inversion contour.
struct LaplaceSpec {
    std::function<std::complex<double>(std::complex<double>)> evaluator;
    std::string label;
    double s_min = 0.0;
    double s_max = std::numeric_limits<double>::infinity();

    double operator()(double s) const { return evaluator(std::complex<double>(s, 0.0)).real(); }
};

struct InversionConfig {
    int node_count = 32;          // Talbot nodes M
    double contour_scale = 0.4;   // contour radius r = contour_scale * M / t (fixed-Talbot rule 2M/(5t))
};

// Laplace transform of the integral-side kernel: s^{-beta} (1 - lambda s^{-alpha})^{-gamma}.
// Throws std::domain_error when 1 - lambda s^{-alpha} <= 0 (branch violation, lambda > 0 only).
double kernel_hat_integral(const PrabhakarParams& p, double s);

// Laplace transform of the derivative-side kernel: s^{beta-1} (1 - lambda s^{-alpha})^{gamma}.
// Satisfies kernel_hat_derivative * kernel_hat_integral = 1/s identically.
double kernel_hat_derivative(const PrabhakarParams& p, double s);

LaplaceSpec kernel_hat_integral_spec(const PrabhakarParams& p);
LaplaceSpec kernel_hat_derivative_spec(const PrabhakarParams& p);

// Numerical inverse Laplace transform at t > 0 on the fixed Talbot contour
// (Abate & Valko). Target relative accuracy ~1e-8 for smooth transforms at
// node_count = 32. Throws std::overflow_error if the contour evaluation
// leaves the floating range.
double invert_laplace(const LaplaceSpec& F, double t, const InversionConfig& cfg = {});

// The four admissibility limits of the derivative-side transform k^(s):
//   (i) k^ -> inf as s -> 0, (ii) s k^ -> 0 as s -> 0,
//   (iii) k^ -> 0 as s -> inf, (iv) s k^ -> inf as s -> inf.
// Decided by exact exponent arithmetic on the asymptotics, not by sampling:
// as s -> 0 (lambda < 0) k^ ~ (-lambda)^gamma s^{beta-1-alpha gamma}; as
// s -> inf k^ ~ s^{beta-1}. For lambda = 0 the pure power-law exponents
// apply. Boundary cases (exponent exactly 0) do NOT satisfy the conditions.
struct LimitFlags {
    bool khat_to_inf_at_0 = false;
    bool s_khat_to_0_at_0 = false;
    bool khat_to_0_at_inf = false;
    bool s_khat_to_inf_at_inf = false;

    bool all() const {
        return khat_to_inf_at_0 && s_khat_to_0_at_0 && khat_to_0_at_inf && s_khat_to_inf_at_inf;
    }
};

// Throws std::domain_error for lambda > 0 (branch structure unsupported;
// reported, not guessed).
LimitFlags stieltjes_limit_flags(const PrabhakarParams& p);

} // namespace prabhakar::transforms

#endif
