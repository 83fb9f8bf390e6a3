#ifndef PRABHAKAR_ANALYSIS_HPP
#define PRABHAKAR_ANALYSIS_HPP

#include <utility>
#include <vector>

#include "prabhakar/grid.hpp"
#include "prabhakar/operators.hpp"
#include "prabhakar/transforms.hpp"

namespace prabhakar::analysis {

using special::PrabhakarParams;

// Membership verdicts for the admissibility regions of the kernel pair,
// with the evaluated exponents recorded so boundary cases can be audited.
// The strict-inequality region (ineq1_strict) and the Stieltjes limit flags
// are computed by independent code paths and must agree for lambda < 0.
struct ClassificationReport {
    bool sonine_window = false;        // 0 < beta < 1
    transforms::LimitFlags limit_flags;
    bool limit_flags_supported = false;  // false for lambda > 0 (branch unsupported)
    bool ineq1_strict = false;         // 0<beta<1 and -alpha gamma < 1-beta < 1-alpha gamma
    bool ineq2_cm_sufficient = false;  // lambda<0, 0<alpha<=1, 0 < -alpha gamma <= 1-beta <= 1
    bool gfc_compatible = false;       // lambda<0, 0<alpha<=1, gamma<0, 0<beta<1, -alpha gamma <= 1-beta <= 1

    struct Witnesses {
        double beta_m1_minus_alpha_gamma = 0.0;  // beta - 1 - alpha gamma
        double beta_minus_alpha_gamma = 0.0;     // beta - alpha gamma
        double minus_alpha_gamma = 0.0;          // -alpha gamma
        double one_minus_beta = 0.0;             // 1 - beta
    } witnesses;
};

struct CMViolation {
    int order = 0;
    int node = 0;
    double magnitude = 0.0;   // signed value of (-1)^j Delta^j y at the node
};

// Finite-difference witness of complete monotonicity: checks
// (-1)^j Delta_h^j y(t_i) >= -tol for j = 0..max_order at all admissible
// nodes. A necessary condition only; full CM is not testable from samples.
struct CMReport {
    int max_order_checked = 0;
    std::vector<CMViolation> violations;
    bool passed = false;
};

// Max over grid nodes t_i (i >= 1) of |(k * kappa)(t_i) - 1| for the kernel
// pair k = derivative-side, kappa = integral-side, computed in the time
// domain by the singularity-aware convolution; evaluated in both operand
// orders and the larger residual is returned. Requires 0 < beta < 1.
double sonine_check_time(const PrabhakarParams& p, double t_max, int n);

ClassificationReport classify(const PrabhakarParams& p);

CMReport cm_check(const GridFunction& y, int max_order, double tol);

// Truncated series part of the integer-index limit of the derivative kernel:
//   sum_{k=1}^{K} (-gamma)_k lambda^k / k! * Phi_{alpha k}(t),
// (the delta contribution is excluded). Returns {value, tail estimate}.
std::pair<double, double> series_kernel_limit(const PrabhakarParams& p, int K, double t);

// Integer-order limit of the regularized derivative as an explicit operator:
//   D^n f + sum_{k=1}^{K} (-gamma)_k lambda^k / k! (J^{alpha k} D^n f).
// For gamma = 0 or lambda = 0 this is exactly D^n f.
GridFunction series_derivative_limit(const PrabhakarParams& p, int n_int,
                                     const GridFunction& f, int K);

} // namespace prabhakar::analysis

#endif
