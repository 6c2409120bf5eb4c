#ifndef RISCADE_TESTS_QUADRATURE_HPP
#define RISCADE_TESTS_QUADRATURE_HPP

#include <cmath>
#include <functional>

// Test-side quadrature oracles, independent of the library implementations
// they validate.

namespace testsupport {

/// Composite Simpson on [a, b] with n intervals (n rounded up to even).
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      int n) {
    if (n % 2) ++n;
    const double h = (b - a) / n;
    double acc = f(a) + f(b);
    for (int i = 1; i < n; ++i) acc += f(a + h * i) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

/// Simpson on an exponential grid: integral of f over [a, b], 0 < a < b,
/// for integrands spanning many decades.
inline double simpson_log(const std::function<double(double)>& f, double a, double b,
                          int n) {
    return simpson([&](double u) { const double x = std::exp(u); return f(x) * x; },
                   std::log(a), std::log(b), n);
}

} // namespace testsupport

#endif
