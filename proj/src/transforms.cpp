#include "prabhakar/transforms.hpp"

#include <cmath>
#include <sstream>

namespace prabhakar::transforms {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double branch_factor(const PrabhakarParams& p, double s) {
    double w = 1.0 - p.lambda * std::pow(s, -p.alpha);
    if (!(w > 0.0)) {
        std::ostringstream os;
        os << "kernel transform: 1 - lambda s^{-alpha} = " << w << " at s = " << s
           << " is not positive; for lambda > 0 the transform needs s > lambda^{1/alpha}";
        throw std::domain_error(os.str());
    }
    return w;
}

} // namespace

double kernel_hat_integral(const PrabhakarParams& p, double s) {
    if (!(s > 0.0))
        throw std::domain_error("kernel_hat_integral: s must be positive");
    double w = branch_factor(p, s);
    return std::pow(s, -p.beta) * std::pow(w, -p.gamma);
}

double kernel_hat_derivative(const PrabhakarParams& p, double s) {
    if (!(s > 0.0))
        throw std::domain_error("kernel_hat_derivative: s must be positive");
    double w = branch_factor(p, s);
    return std::pow(s, p.beta - 1.0) * std::pow(w, p.gamma);
}

LaplaceSpec kernel_hat_integral_spec(const PrabhakarParams& p) {
    LaplaceSpec spec;
    spec.label = "kernel_hat_integral";
    spec.evaluator = [p](std::complex<double> s) {
        std::complex<double> w = 1.0 - p.lambda * std::pow(s, -p.alpha);
        return std::pow(s, -p.beta) * std::pow(w, -p.gamma);
    };
    if (p.lambda > 0.0)
        spec.s_min = std::pow(p.lambda, 1.0 / p.alpha);
    return spec;
}

LaplaceSpec kernel_hat_derivative_spec(const PrabhakarParams& p) {
    LaplaceSpec spec;
    spec.label = "kernel_hat_derivative";
    spec.evaluator = [p](std::complex<double> s) {
        std::complex<double> w = 1.0 - p.lambda * std::pow(s, -p.alpha);
        return std::pow(s, p.beta - 1.0) * std::pow(w, p.gamma);
    };
    if (p.lambda > 0.0)
        spec.s_min = std::pow(p.lambda, 1.0 / p.alpha);
    return spec;
}

// Fixed-Talbot inversion (Abate & Valko 2004): contour s(theta) =
// r theta (cot theta + i), theta in (-pi, pi), r = contour_scale * M / t.
double invert_laplace(const LaplaceSpec& F, double t, const InversionConfig& cfg) {
    if (!(t > 0.0))
        throw std::domain_error("invert_laplace: t must be positive");
    if (cfg.node_count < 8)
        throw std::invalid_argument("invert_laplace: node_count must be >= 8");
    const int M = cfg.node_count;
    const double r = cfg.contour_scale * M / t;

    double acc = 0.5 * F.evaluator(std::complex<double>(r, 0.0)).real() * std::exp(r * t);
    for (int k = 1; k < M; ++k) {
        double theta = k * kPi / M;
        double cot = std::cos(theta) / std::sin(theta);
        std::complex<double> s(r * theta * cot, r * theta);
        double sigma = theta + (theta * cot - 1.0) * cot;
        std::complex<double> val = std::exp(s * t) * F.evaluator(s) *
                                   std::complex<double>(1.0, sigma);
        acc += val.real();
    }
    double result = acc * r / M;
    if (!std::isfinite(result))
        throw std::overflow_error("invert_laplace: contour evaluation left the floating range");
    return result;
}

LimitFlags stieltjes_limit_flags(const PrabhakarParams& p) {
    if (p.lambda > 0.0)
        throw std::domain_error(
            "stieltjes_limit_flags: lambda > 0 is unsupported (transform branch structure); "
            "the limits are reported only for lambda <= 0");

    // Exponent of k^ as s -> 0 and s -> infinity. For lambda < 0 the factor
    // (1 - lambda s^{-alpha})^gamma contributes s^{-alpha gamma} at the
    // origin and tends to 1 at infinity; for lambda = 0 it is absent.
    double exp_zero = (p.lambda < 0.0) ? p.beta - 1.0 - p.alpha * p.gamma : p.beta - 1.0;
    double exp_inf = p.beta - 1.0;

    LimitFlags f;
    f.khat_to_inf_at_0 = exp_zero < 0.0;
    f.s_khat_to_0_at_0 = exp_zero + 1.0 > 0.0;
    f.khat_to_0_at_inf = exp_inf < 0.0;
    f.s_khat_to_inf_at_inf = exp_inf + 1.0 > 0.0;
    return f;
}

} // namespace prabhakar::transforms
