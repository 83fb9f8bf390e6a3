#ifndef PRABHAKAR_GRID_HPP
#define PRABHAKAR_GRID_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace prabhakar {

// Uniform time grid on [0, t_max] with n intervals and n+1 node values.
// `valid` marks nodes whose values are trustworthy; derivative-type operators
// clear it at stencil-limited nodes instead of fabricating values.
struct GridFunction {
    double t_max = 1.0;
    int n = 2;
    std::vector<double> values;        // size n+1
    std::vector<std::uint8_t> valid;   // size n+1, 1 = trustworthy

    GridFunction() = default;

    GridFunction(double t_max_, int n_)
        : t_max(t_max_), n(n_), values(static_cast<size_t>(n_) + 1, 0.0),
          valid(static_cast<size_t>(n_) + 1, 1) {
        if (!(t_max > 0.0) || n < 2)
            throw std::invalid_argument("GridFunction: need t_max > 0 and n >= 2");
    }

    double h() const { return t_max / n; }
    double t(int j) const { return j * h(); }
    int size() const { return n + 1; }

    static GridFunction sample(double t_max, int n, const std::function<double(double)>& f) {
        GridFunction g(t_max, n);
        for (int j = 0; j <= n; ++j)
            g.values[static_cast<size_t>(j)] = f(g.t(j));
        return g;
    }

    bool same_grid(const GridFunction& other) const {
        return n == other.n && t_max == other.t_max;
    }
};

} // namespace prabhakar

#endif
