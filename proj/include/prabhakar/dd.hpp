#ifndef PRABHAKAR_DD_HPP
#define PRABHAKAR_DD_HPP

#include <cmath>

namespace prabhakar::detail {

// Double-double arithmetic built on error-free transformations
// (Knuth two-sum, FMA-based two-product; see Dekker 1971).
// Used for series summation where alternating terms cancel far below
// the magnitude of the largest term.
struct dd {
    double hi = 0.0;
    double lo = 0.0;

    dd() = default;
    constexpr dd(double x) : hi(x), lo(0.0) {}
    constexpr dd(double h, double l) : hi(h), lo(l) {}

    double value() const { return hi + lo; }
};

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    double err = std::fma(a, b, -p);
    return {p, err};
}

inline dd add(const dd& a, const dd& b) {
    dd s = two_sum(a.hi, b.hi);
    double lo = s.lo + a.lo + b.lo;
    dd r = two_sum(s.hi, lo);
    return r;
}

inline dd add(const dd& a, double b) {
    dd s = two_sum(a.hi, b);
    double lo = s.lo + a.lo;
    return two_sum(s.hi, lo);
}

inline dd mul(const dd& a, double b) {
    dd p = two_prod(a.hi, b);
    double lo = p.lo + a.lo * b;
    return two_sum(p.hi, lo);
}

inline dd mul(const dd& a, const dd& b) {
    dd p = two_prod(a.hi, b.hi);
    double lo = p.lo + a.hi * b.lo + a.lo * b.hi;
    return two_sum(p.hi, lo);
}

inline dd div(const dd& a, double b) {
    double q1 = a.hi / b;
    dd p = two_prod(q1, b);
    double r = ((a.hi - p.hi) - p.lo) + a.lo;
    double q2 = r / b;
    return two_sum(q1, q2);
}

} // namespace prabhakar::detail

#endif
