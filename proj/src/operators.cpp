#include "prabhakar/operators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace prabhakar::operators {

namespace {

using special::prabhakar_E;
using special::reciprocal_gamma;

bool is_integer(double x) { return x == std::floor(x); }

// ---- tanh-sinh (double-exponential) quadrature on (0,1) -------------------
//
// The integrand receives (sigma, 1-sigma) with both endpoint distances
// computed directly, so algebraic endpoint singularities sigma^{q-1} and
// (1-sigma)^{q-1} (q > 0) are evaluated without cancellation. Abscissa
// distances delta = 1/(1 + exp(pi sinh u)) decay double-exponentially; the
// level loop refines the trapezoid step until the estimate settles.

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kUMax = 6.56;          // exp(pi sinh 6.56) is still inside double range^-1
constexpr double kDeltaMin = 1e-290;

double ts_delta(double u) {
    // 1/(1+exp(pi sinh u)) evaluated stably for u >= 0
    double y = kPi * std::sinh(u);
    if (y > 700.0) return 0.0;
    return 1.0 / (1.0 + std::exp(y));
}

template <class F>
double quad_ts01(const F& f, double eps, int max_level) {
    // level 0: unit step in u over [-kUMax, kUMax]
    double step = 1.0;
    double acc = 0.0;
    {
        double d0 = 0.5;
        acc += kPi * d0 * (1.0 - d0) * f(0.5, 0.5);
        for (double u = step; u <= kUMax; u += step) {
            double d = ts_delta(u);
            if (d < kDeltaMin) break;
            double w = kPi * std::cosh(u) * d * (1.0 - d);
            acc += w * (f(d, 1.0 - d) + f(1.0 - d, d));
        }
    }
    double integral = acc * step;

    for (int level = 1; level <= max_level; ++level) {
        step *= 0.5;
        double add = 0.0;
        for (double u = step; u <= kUMax; u += 2.0 * step) {
            double d = ts_delta(u);
            if (d < kDeltaMin) break;
            double w = kPi * std::cosh(u) * d * (1.0 - d);
            add += w * (f(d, 1.0 - d) + f(1.0 - d, d));
        }
        double refined = 0.5 * integral + step * add;
        bool settled = std::fabs(refined - integral) <= eps * std::max(1.0, std::fabs(refined));
        integral = refined;
        if (settled && level >= 3)
            break;
    }
    return integral;
}

struct MomentTable {
    std::vector<double> k1;   // anti1 at d*h, d = 0..n
    std::vector<double> k2;   // anti2 at d*h
};

MomentTable tabulate_moments(const SingularCurve& c, double h, int n) {
    MomentTable m;
    m.k1.assign(static_cast<size_t>(n) + 1, 0.0);
    m.k2.assign(static_cast<size_t>(n) + 1, 0.0);
    for (int d = 1; d <= n; ++d) {
        double x = d * h;
        m.k1[static_cast<size_t>(d)] = c.anti1(x);
        m.k2[static_cast<size_t>(d)] = c.anti2(x);
    }
    return m;
}

std::vector<double> tabulate_values(const SingularCurve& c, double h, int n) {
    std::vector<double> v(static_cast<size_t>(n) + 1, 0.0);
    for (int d = 1; d <= n; ++d)
        v[static_cast<size_t>(d)] = c.value(d * h);
    return v;
}

// Product-integration weights from kernel moments:
//   (k*f) over cell [t_j, t_{j+1}] with f linear =
//     f_j (dK1(d) - A(d)) + f_{j+1} A(d),  d = i - j,
//   A(d) = dK2(d)/h - K1(d-1).
struct PiWeights {
    std::vector<double> u;   // coefficient of f_{i-d}, index d = 1..n
    std::vector<double> v;   // coefficient of f_{i-d+1}
};

PiWeights pi_weights(const MomentTable& m, double h, int n) {
    PiWeights w;
    w.u.assign(static_cast<size_t>(n) + 1, 0.0);
    w.v.assign(static_cast<size_t>(n) + 1, 0.0);
    for (int d = 1; d <= n; ++d) {
        double dk1 = m.k1[static_cast<size_t>(d)] - m.k1[static_cast<size_t>(d - 1)];
        double a = (m.k2[static_cast<size_t>(d)] - m.k2[static_cast<size_t>(d - 1)]) / h -
                   m.k1[static_cast<size_t>(d - 1)];
        w.u[static_cast<size_t>(d)] = dk1 - a;
        w.v[static_cast<size_t>(d)] = a;
    }
    return w;
}

double pi_node(const PiWeights& w, const std::vector<double>& f, int i) {
    double acc = 0.0;
    for (int d = 1; d <= i; ++d) {
        acc += w.u[static_cast<size_t>(d)] * f[static_cast<size_t>(i - d)] +
               w.v[static_cast<size_t>(d)] * f[static_cast<size_t>(i - d + 1)];
    }
    return acc;
}

GridFunction convolve_analytic(const KernelSpec& k, const GridFunction& f, bool parallel) {
    GridFunction out(f.t_max, f.n);
    const double h = f.h();
    MomentTable m = tabulate_moments(k.curve(), h, f.n);
    PiWeights w = pi_weights(m, h, f.n);
    const std::vector<double>& fv = f.values;
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (int i = 1; i <= f.n; ++i)
            out.values[static_cast<size_t>(i)] = pi_node(w, fv, i);
    } else {
        for (int i = 1; i <= f.n; ++i)
            out.values[static_cast<size_t>(i)] = pi_node(w, fv, i);
    }
    return out;
}

GridFunction convolve_tabulated(const KernelSpec& k, const GridFunction& f) {
    if (!k.table.same_grid(f))
        throw std::invalid_argument("convolve_product_integration: tabulated kernel grid mismatch");
    GridFunction out(f.t_max, f.n);
    const double h = f.h();
    const std::vector<double>& kv = k.table.values;
    const std::vector<double>& fv = f.values;
    // Trapezoid; the cell adjacent to the kernel origin uses the kernel value
    // one node in (endpoint singularity excluded).
#pragma omp parallel for schedule(static)
    for (int i = 1; i <= f.n; ++i) {
        double acc = 0.0;
        for (int j = 0; j < i - 1; ++j) {
            acc += 0.5 * h * (kv[static_cast<size_t>(i - j)] * fv[static_cast<size_t>(j)] +
                              kv[static_cast<size_t>(i - j - 1)] * fv[static_cast<size_t>(j + 1)]);
        }
        acc += 0.5 * h * kv[1] * (fv[static_cast<size_t>(i - 1)] + fv[static_cast<size_t>(i)]);
        out.values[static_cast<size_t>(i)] = acc;
    }
    return out;
}

} // namespace

double kernel_antiderivative(const PrabhakarParams& p, double beta_eff, double x, int order) {
    if (order != 1 && order != 2)
        throw std::invalid_argument("kernel_antiderivative: order must be 1 or 2");
    if (!(x > 0.0))
        throw std::domain_error("kernel_antiderivative: x must be positive");
    if (!(beta_eff > 0.0))
        throw std::domain_error("kernel_antiderivative: kernel index must be positive");
    double z = p.lambda * std::pow(x, p.alpha);
    double idx = beta_eff + order;
    return std::pow(x, idx - 1.0) * prabhakar_E(p.alpha, idx, p.gamma, z);
}

KernelSpec KernelSpec::gelfand_shilov(double mu) {
    if (!(mu > 0.0))
        throw std::domain_error("KernelSpec: power-law index mu must be positive");
    KernelSpec k;
    k.kind = Kind::GelfandShilov;
    k.alpha = 1.0;
    k.index = mu;
    k.weight = 0.0;
    k.lambda = 0.0;
    return k;
}

KernelSpec KernelSpec::prabhakar_integral(const PrabhakarParams& p) {
    KernelSpec k;
    k.kind = Kind::PrabhakarIntegral;
    k.alpha = p.alpha;
    k.index = p.beta;
    k.weight = p.gamma;
    k.lambda = p.lambda;
    return k;
}

KernelSpec KernelSpec::prabhakar_derivative(const PrabhakarParams& p) {
    if (is_integer(p.beta)) {
        std::ostringstream os;
        os << "KernelSpec: beta = " << p.beta
           << " is an integer, so the derivative kernel index m - beta vanishes and the "
              "kernel leaves the locally integrable class; use the series-limit operator";
        throw std::domain_error(os.str());
    }
    KernelSpec k;
    k.kind = Kind::PrabhakarDerivative;
    k.alpha = p.alpha;
    k.index = p.m - p.beta;
    k.weight = -p.gamma;
    k.lambda = p.lambda;
    return k;
}

KernelSpec KernelSpec::tabulated(GridFunction g) {
    KernelSpec k;
    k.kind = Kind::Tabulated;
    k.table = std::move(g);
    return k;
}

double KernelSpec::operator()(double t) const {
    if (kind == Kind::Tabulated) {
        double h = table.h();
        double jr = t / h;
        int j = static_cast<int>(std::lround(jr));
        if (j < 0 || j > table.n || std::fabs(jr - j) > 1e-9 * std::max(1.0, jr))
            throw std::domain_error("KernelSpec: tabulated kernel defined on its grid only");
        return table.values[static_cast<size_t>(j)];
    }
    if (!(t > 0.0))
        throw std::domain_error("KernelSpec: kernel evaluated at t <= 0");
    double z = lambda * std::pow(t, alpha);
    return std::pow(t, index - 1.0) * prabhakar_E(alpha, index, weight, z);
}

double KernelSpec::antiderivative(double x, int order) const {
    if (kind == Kind::Tabulated)
        throw std::domain_error("KernelSpec: tabulated kernels have no closed-form moments");
    if (order != 1 && order != 2)
        throw std::invalid_argument("KernelSpec: antiderivative order must be 1 or 2");
    if (!(x > 0.0))
        throw std::domain_error("KernelSpec: antiderivative at x <= 0");
    double z = lambda * std::pow(x, alpha);
    double idx = index + order;
    return std::pow(x, idx - 1.0) * prabhakar_E(alpha, idx, weight, z);
}

SingularCurve KernelSpec::curve() const {
    if (kind == Kind::Tabulated)
        throw std::domain_error("KernelSpec: tabulated kernels do not form a singular curve");
    SingularCurve c;
    KernelSpec self = *this;
    c.value = [self](double t) { return self(t); };
    c.anti1 = [self](double x) { return x > 0.0 ? self.antiderivative(x, 1) : 0.0; };
    c.anti2 = [self](double x) { return x > 0.0 ? self.antiderivative(x, 2) : 0.0; };
    c.origin_exponent = index;
    c.label = "kernel";
    return c;
}

GridFunction convolve_product_integration(const KernelSpec& k, const GridFunction& f) {
    if (k.kind == KernelSpec::Kind::Tabulated)
        return convolve_tabulated(k, f);
    return convolve_analytic(k, f, true);
}

namespace reference {
GridFunction convolve_product_integration_serial(const KernelSpec& k, const GridFunction& f) {
    if (k.kind == KernelSpec::Kind::Tabulated)
        return convolve_tabulated(k, f);
    return convolve_analytic(k, f, false);
}
} // namespace reference

GridFunction convolve_singular(const SingularCurve& k, const SingularCurve& g,
                               double t_max, int n, const SingularConvolveOptions& opts) {
    GridFunction out(t_max, n);
    const double h = out.h();
    const int imin = std::max(2, static_cast<int>(n * opts.quad_node_fraction));

    MomentTable mk = tabulate_moments(k, h, n);
    MomentTable mg = tabulate_moments(g, h, n);
    std::vector<double> ks = tabulate_values(k, h, n);
    std::vector<double> gs = tabulate_values(g, h, n);
    PiWeights wk = pi_weights(mk, h, n);

    const int qhi = std::min(imin, n + 1);
#pragma omp parallel for schedule(dynamic)
    for (int i = 1; i < qhi; ++i) {
        double t = i * h;
        auto integrand = [&](double sigma, double one_m_sigma) {
            return k.value(t * one_m_sigma) * g.value(t * sigma);
        };
        out.values[static_cast<size_t>(i)] =
            t * quad_ts01(integrand, opts.quad_eps, opts.quad_max_level);
    }

#pragma omp parallel for schedule(static)
    for (int i = imin; i <= n; ++i) {
        // cells nearest each factor's singularity take that factor's exact
        // moments with the other factor linearized between samples
        int split = (i - 1) / 2 + 1;
        double acc = 0.0;
        for (int j = 0; j < split; ++j) {
            double m0 = mg.k1[static_cast<size_t>(j + 1)] - mg.k1[static_cast<size_t>(j)];
            double m1 = h * mg.k1[static_cast<size_t>(j + 1)] -
                        (mg.k2[static_cast<size_t>(j + 1)] - mg.k2[static_cast<size_t>(j)]);
            acc += ks[static_cast<size_t>(i - j)] * m0 +
                   (ks[static_cast<size_t>(i - j - 1)] - ks[static_cast<size_t>(i - j)]) * m1 / h;
        }
        for (int j = split; j < i; ++j) {
            int d = i - j;
            acc += gs[static_cast<size_t>(j)] * wk.u[static_cast<size_t>(d)] +
                   gs[static_cast<size_t>(j + 1)] * wk.v[static_cast<size_t>(d)];
        }
        out.values[static_cast<size_t>(i)] = acc;
    }
    return out;
}

GridFunction rl_integral(double alpha, const GridFunction& f) {
    if (!(alpha > 0.0))
        throw std::domain_error("rl_integral: order alpha must be positive");
    return convolve_product_integration(KernelSpec::gelfand_shilov(alpha), f);
}

GridFunction numerical_derivative(const GridFunction& f, int order) {
    if (order < 1)
        throw std::invalid_argument("numerical_derivative: order must be >= 1");
    if (f.n < 4 * order)
        throw std::invalid_argument("numerical_derivative: grid too coarse (need n >= 4*order)");
    GridFunction cur = f;
    const double h = f.h();
    const int n = f.n;
    for (int pass = 0; pass < order; ++pass) {
        GridFunction next(f.t_max, n);
        const std::vector<double>& v = cur.values;
        auto at = [&](int j) { return v[static_cast<size_t>(j)]; };
        next.values[0] = (-25.0 * at(0) + 48.0 * at(1) - 36.0 * at(2) + 16.0 * at(3) - 3.0 * at(4)) / (12.0 * h);
        next.values[1] = (-3.0 * at(0) - 10.0 * at(1) + 18.0 * at(2) - 6.0 * at(3) + at(4)) / (12.0 * h);
        for (int i = 2; i <= n - 2; ++i)
            next.values[static_cast<size_t>(i)] =
                (at(i - 2) - 8.0 * at(i - 1) + 8.0 * at(i + 1) - at(i + 2)) / (12.0 * h);
        next.values[static_cast<size_t>(n - 1)] =
            -(-3.0 * at(n) - 10.0 * at(n - 1) + 18.0 * at(n - 2) - 6.0 * at(n - 3) + at(n - 4)) / (12.0 * h);
        next.values[static_cast<size_t>(n)] =
            -(-25.0 * at(n) + 48.0 * at(n - 1) - 36.0 * at(n - 2) + 16.0 * at(n - 3) - 3.0 * at(n - 4)) / (12.0 * h);
        cur = std::move(next);
    }
    return cur;
}

GridFunction prabhakar_integral(const PrabhakarParams& p, const GridFunction& f) {
    return convolve_product_integration(KernelSpec::prabhakar_integral(p), f);
}

GridFunction prabhakar_derivative_rl(const PrabhakarParams& p, const GridFunction& f) {
    GridFunction inner = convolve_product_integration(KernelSpec::prabhakar_derivative(p), f);
    GridFunction out = numerical_derivative(inner, p.m);
    out.valid[0] = 0;
    out.valid[static_cast<size_t>(out.n)] = 0;
    return out;
}

GridFunction prabhakar_derivative_caputo(const PrabhakarParams& p, const GridFunction& f,
                                         const std::function<double(double)>* analytic_dmf) {
    KernelSpec k = KernelSpec::prabhakar_derivative(p);
    GridFunction dm = analytic_dmf ? GridFunction::sample(f.t_max, f.n, *analytic_dmf)
                                   : numerical_derivative(f, p.m);
    return convolve_product_integration(k, dm);
}

GridFunction prabhakar_derivative_caputo(const PrabhakarParams& p, const SingularCurve& dmf,
                                         double t_max, int n,
                                         const SingularConvolveOptions& opts) {
    KernelSpec k = KernelSpec::prabhakar_derivative(p);
    return convolve_singular(k.curve(), dmf, t_max, n, opts);
}

GridFunction caputo_classical(double alpha, const GridFunction& f) {
    if (!(alpha > 0.0))
        throw std::domain_error("caputo_classical: order must be positive");
    int m = static_cast<int>(std::ceil(alpha));
    GridFunction dm = numerical_derivative(f, m);
    if (is_integer(alpha))
        return dm;
    return convolve_product_integration(KernelSpec::gelfand_shilov(m - alpha), dm);
}

GridFunction rl_derivative_classical(double alpha, const GridFunction& f) {
    if (!(alpha > 0.0))
        throw std::domain_error("rl_derivative_classical: order must be positive");
    int m = static_cast<int>(std::ceil(alpha));
    if (is_integer(alpha)) {
        GridFunction out = numerical_derivative(f, m);
        out.valid[0] = 0;
        out.valid[static_cast<size_t>(out.n)] = 0;
        return out;
    }
    GridFunction inner = convolve_product_integration(KernelSpec::gelfand_shilov(m - alpha), f);
    GridFunction out = numerical_derivative(inner, m);
    out.valid[0] = 0;
    out.valid[static_cast<size_t>(out.n)] = 0;
    return out;
}

GridFunction kochubei_D(const KernelSpec& k, const GridFunction& u) {
    GridFunction conv = convolve_product_integration(k, u);
    GridFunction out = numerical_derivative(conv, 1);
    const double u0 = u.values[0];
    for (int i = 1; i <= u.n; ++i)
        out.values[static_cast<size_t>(i)] -= k(out.t(i)) * u0;
    out.values[0] = 0.0;   // k(0+) is typically singular; node excluded from validity
    out.valid[0] = 0;
    out.valid[static_cast<size_t>(out.n)] = 0;
    return out;
}

GridFunction kochubei_J(const KernelSpec& kappa, const GridFunction& u) {
    return convolve_product_integration(kappa, u);
}

} // namespace prabhakar::operators
