#ifndef PRABHAKAR_SPECIAL_HPP
#define PRABHAKAR_SPECIAL_HPP

#include <stdexcept>
#include <string>

namespace prabhakar {

// Thrown when a series evaluation fails to converge (term cap reached,
// argument outside the trusted radius, or cancellation beyond what the
// accumulator can absorb).
struct series_error : std::runtime_error {
    explicit series_error(const std::string& what) : std::runtime_error(what) {}
};

namespace special {

// Parameter quadruple of the three-parameter Mittag-Leffler kernel family,
// restricted to real values with alpha > 0 and beta > 0. m = ceil(beta) is
// the order of the plain derivative used by the regularized operators.
struct PrabhakarParams {
    double alpha;
    double beta;
    double gamma;
    double lambda;
    int m;

    static PrabhakarParams make(double alpha, double beta, double gamma, double lambda);
};

struct SeriesDiagnostics {
    int terms_used = 0;
    double last_term_magnitude = 0.0;
    bool converged = false;
    // largest |term| met while summing; peak/|sum| measures cancellation severity
    double peak_term_magnitude = 0.0;
};

struct SeriesOptions {
    double tol = 1e-15;     // stop once 3 consecutive terms fall below tol*|sum|
    int max_terms = 400;
    double z_max = 50.0;    // trusted series radius
};

// Euler gamma function; relative error <= 1e-12 on [-170,170] away from the
// poles. Throws std::domain_error at non-positive integers.
double gamma_fn(double x);

// 1/Gamma(x) for any real x; exactly 0 at the (removable) poles x = 0,-1,-2,...
double reciprocal_gamma(double x);

// Rising factorial g*(g+1)*...*(g+k-1) as a running product, so zero
// crossings for negative g are exact.
double pochhammer(double g, int k);

// Three-parameter Mittag-Leffler (Prabhakar) function
//   E^gamma_{alpha,beta}(z) = sum_k (gamma)_k z^k / (k! Gamma(alpha k + beta)),
// summed in double-double with a 3-consecutive-small-terms stopping rule.
// beta may be any real; alpha must be positive. Throws series_error if the
// term cap is reached or |z| exceeds opts.z_max.
double prabhakar_E(double alpha, double beta, double gamma, double z,
                   SeriesDiagnostics* diag = nullptr,
                   const SeriesOptions& opts = {});

// Power-law kernel t^{mu-1}/Gamma(mu) for t > 0, mu > 0.
double gelfand_shilov(double mu, double t);

// Kernel t^{beta_eff-1} E^gamma_{alpha,beta_eff}(lambda t^alpha) for t > 0.
// beta_eff is passed separately because the derivative-side kernels use
// m-beta, beta+1, beta+2 with the same (alpha,gamma,lambda).
double prabhakar_kernel(const PrabhakarParams& p, double beta_eff, double t,
                        const SeriesOptions& opts = {});

} // namespace special
} // namespace prabhakar

#endif
