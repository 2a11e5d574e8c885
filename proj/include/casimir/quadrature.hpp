#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "casimir/errors.hpp"

// Adaptive Gauss-Kronrod (G7/K15) quadrature on finite intervals.
namespace casimir::quad {

struct Options {
    double rel_tol = 1e-9;
    double abs_tol = 0.0;       // absolute floor; 0 disables
    int max_intervals = 4000;
};

namespace detail {

// abscissa, Gauss weight, Kronrod weight
inline constexpr double g7k15[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0,               0.204432940075298},
    {0.586087235467691, 0.0,               0.169004726639267},
    {0.864864423359769, 0.0,               0.104790010322250},
    {0.991455371120813, 0.0,               0.022935322010529},
};

template <class F>
double kernel(F&& f, double a, double b, double& err) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double y0 = f(mid);
    double g = g7k15[0][1] * y0;
    double k = g7k15[0][2] * y0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * g7k15[i][0];
        const double yi = f(mid + dx) + f(mid - dx);
        g += g7k15[i][1] * yi;
        k += g7k15[i][2] * yi;
    }
    g *= half;
    k *= half;
    err = std::pow(200.0 * std::fabs(g - k), 1.5);
    return k;
}

} // namespace detail

/// Integrate f over [a, b] to the requested tolerance.
/// Throws ConvergenceError if the interval budget is exhausted first.
template <class F>
double integrate(F&& f, double a, double b, const Options& opt = {}) {
    if (a == b) return 0.0;
    struct Interval { double a, b, val, err; };
    std::vector<Interval> stack;
    double err0;
    double v0 = detail::kernel(f, a, b, err0);
    stack.push_back({a, b, v0, err0});
    double total = v0;
    double total_err = err0;

    auto converged = [&] {
        return total_err <= std::max(opt.rel_tol * std::fabs(total), opt.abs_tol);
    };

    int used = 1;
    while (!converged()) {
        if (used >= opt.max_intervals)
            throw ConvergenceError("adaptive quadrature interval budget exhausted",
                                   total_err, opt.rel_tol * std::fabs(total));
        // split the interval with the largest error estimate
        auto worst = std::max_element(stack.begin(), stack.end(),
                                      [](const Interval& x, const Interval& y) {
                                          return x.err < y.err;
                                      });
        Interval iv = *worst;
        stack.erase(worst);
        const double m = 0.5 * (iv.a + iv.b);
        double e1, e2;
        const double v1 = detail::kernel(f, iv.a, m, e1);
        const double v2 = detail::kernel(f, m, iv.b, e2);
        total += v1 + v2 - iv.val;
        total_err += e1 + e2 - iv.err;
        stack.push_back({iv.a, m, v1, e1});
        stack.push_back({m, iv.b, v2, e2});
        ++used;
        if ((used & 63) == 0) {
            // recompute the error sum to shed accumulated roundoff
            total_err = 0.0;
            for (const auto& s : stack) total_err += s.err;
        }
    }
    return total;
}

/// Integrate over consecutive segments [pts[0], pts[1]], [pts[1], pts[2]], ...
template <class F>
double integrate_segments(F&& f, const std::vector<double>& pts, const Options& opt = {}) {
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        sum += integrate(f, pts[i], pts[i + 1], opt);
    return sum;
}

/// Log-spaced segment boundaries from lo to hi (inclusive), optionally
/// merged with extra breakpoints that fall inside (lo, hi).
std::vector<double> log_segments(double lo, double hi, int per_decade,
                                 const std::vector<double>& extra = {});

} // namespace casimir::quad
