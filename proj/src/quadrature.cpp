#include "casimir/quadrature.hpp"

#include <cmath>

namespace casimir::quad {

std::vector<double> log_segments(double lo, double hi, int per_decade,
                                 const std::vector<double>& extra) {
    if (!(lo > 0.0) || !(hi > lo))
        throw DomainError("log_segments requires 0 < lo < hi");
    if (per_decade < 1) throw DomainError("log_segments requires per_decade >= 1");

    const double llo = std::log10(lo);
    const double lhi = std::log10(hi);
    const int n = std::max(1, static_cast<int>(std::ceil((lhi - llo) * per_decade)));
    std::vector<double> pts;
    pts.reserve(static_cast<std::size_t>(n) + extra.size() + 1);
    for (int i = 0; i <= n; ++i)
        pts.push_back(std::pow(10.0, llo + (lhi - llo) * i / n));
    for (double x : extra)
        if (x > lo && x < hi) pts.push_back(x);
    std::sort(pts.begin(), pts.end());
    // collapse near-duplicate breakpoints
    std::vector<double> out;
    out.push_back(lo);
    for (double x : pts)
        if (x > out.back() * (1.0 + 1e-12)) out.push_back(x);
    out.back() = hi;
    return out;
}

} // namespace casimir::quad
