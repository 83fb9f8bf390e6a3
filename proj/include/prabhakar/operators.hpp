#ifndef PRABHAKAR_OPERATORS_HPP
#define PRABHAKAR_OPERATORS_HPP

#include <functional>
#include <optional>
#include <string>

#include "prabhakar/grid.hpp"
#include "prabhakar/special.hpp"

namespace prabhakar::operators {

using special::PrabhakarParams;

// Closed-form antiderivatives of the kernel t^{beta_eff-1} E^gamma_{alpha,beta_eff}(lambda t^alpha):
//   order 1: x^{beta_eff}   E^gamma_{alpha,beta_eff+1}(lambda x^alpha)
//   order 2: x^{beta_eff+1} E^gamma_{alpha,beta_eff+2}(lambda x^alpha)
// (the index-raising integration identity, applied once or twice).
double kernel_antiderivative(const PrabhakarParams& p, double beta_eff, double x, int order);

// A function on (0, t_max] with exact running antiderivatives and a known
// power-law exponent at the origin (value ~ t^{origin_exponent - 1}).
// This is the currency of the singularity-aware convolution below.
struct SingularCurve {
    std::function<double(double)> value;
    std::function<double(double)> anti1;   // int_0^x value
    std::function<double(double)> anti2;   // int_0^x anti1
    double origin_exponent = 1.0;
    std::string label;
};

// Convolution kernel description. Analytic kinds carry the effective
// parameter quadruple of t^{index-1} E^weight_{alpha,index}(lambda t^alpha)
// and expose exact moments; Tabulated kernels are defined on their grid only.
struct KernelSpec {
    enum class Kind { GelfandShilov, PrabhakarIntegral, PrabhakarDerivative, Tabulated };

    Kind kind = Kind::GelfandShilov;
    double alpha = 1.0;
    double index = 1.0;    // the local exponent: kernel ~ t^{index-1} at 0+
    double weight = 0.0;   // upper Mittag-Leffler parameter
    double lambda = 0.0;
    GridFunction table;

    static KernelSpec gelfand_shilov(double mu);
    static KernelSpec prabhakar_integral(const PrabhakarParams& p);
    // Kernel of the derivative-side operator, index m - beta with weight
    // -gamma. Throws std::domain_error for integer beta (the limit kernel is
    // distributional; use the explicit series-limit operator instead).
    static KernelSpec prabhakar_derivative(const PrabhakarParams& p);
    static KernelSpec tabulated(GridFunction g);

    bool analytic() const { return kind != Kind::Tabulated; }
    double operator()(double t) const;
    double antiderivative(double x, int order) const;
    SingularCurve curve() const;
};

// (k * f)(t_i) by product integration: f is modeled piecewise-linear and the
// kernel is integrated exactly on each subinterval through its moments.
// Node 0 of the result is 0. Tabulated kernels fall back to trapezoid with
// the singular endpoint sample excluded (lower accuracy, documented).
// Parallelized over output nodes.
GridFunction convolve_product_integration(const KernelSpec& k, const GridFunction& f);

namespace reference {
// Serial implementation kept as the comparison baseline for tests and the
// benchmark; identical arithmetic per output node.
GridFunction convolve_product_integration_serial(const KernelSpec& k, const GridFunction& f);
}

struct SingularConvolveOptions {
    double quad_node_fraction = 0.25;  // nodes below this fraction of n use direct quadrature
    double quad_eps = 1e-10;
    int quad_max_level = 8;
};

// (k * g)(t_i) where BOTH factors may be weakly singular at the origin.
// Near-origin nodes are integrated by tanh-sinh quadrature on the scaled
// interval; remaining nodes use product integration split at the midpoint,
// taking exact moments of whichever factor is closer to its singularity.
GridFunction convolve_singular(const SingularCurve& k, const SingularCurve& g,
                               double t_max, int n,
                               const SingularConvolveOptions& opts = {});

// Riemann-Liouville fractional integral J^alpha: convolution with the
// power-law kernel of index alpha.
GridFunction rl_integral(double alpha, const GridFunction& f);

// m-fold numerical derivative: 4th-order centered stencils inside, one-sided
// 4th-order stencils at the boundary nodes. Requires n >= 4*order.
GridFunction numerical_derivative(const GridFunction& f, int order);

GridFunction prabhakar_integral(const PrabhakarParams& p, const GridFunction& f);

// Riemann-Liouville-type derivative D^m applied after the index-(m-beta)
// integral with weight -gamma. Nodes 0 and n are marked invalid (stencil
// quality). Integer beta is rejected.
GridFunction prabhakar_derivative_rl(const PrabhakarParams& p, const GridFunction& f);

// Regularized derivative: the index-(m-beta), weight -gamma integral applied
// to D^m f. D^m f comes from the analytic callback when supplied, otherwise
// from numerical_derivative.
GridFunction prabhakar_derivative_caputo(const PrabhakarParams& p, const GridFunction& f,
                                         const std::function<double(double)>* analytic_dmf = nullptr);

// Same operator with D^m f given as a singular curve (exact antiderivatives),
// evaluated through the singularity-aware convolution. Used when D^m f blows
// up at the origin, e.g. for relaxation solutions.
GridFunction prabhakar_derivative_caputo(const PrabhakarParams& p, const SingularCurve& dmf,
                                         double t_max, int n,
                                         const SingularConvolveOptions& opts = {});

// Classical Caputo and Riemann-Liouville derivatives of order alpha,
// realized on the same machinery (power-law kernels, same stencils).
GridFunction caputo_classical(double alpha, const GridFunction& f);
GridFunction rl_derivative_classical(double alpha, const GridFunction& f);

// Regularized generalized derivative D_(k) u = d/dt (k*u) - k(t) u(0+).
// Node 0 and node n are marked invalid.
GridFunction kochubei_D(const KernelSpec& k, const GridFunction& u);

// Generalized integral J_(k) u = (kappa * u); alias of the product-integration
// convolution.
GridFunction kochubei_J(const KernelSpec& kappa, const GridFunction& u);

} // namespace prabhakar::operators

#endif
