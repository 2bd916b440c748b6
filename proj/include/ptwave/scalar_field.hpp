#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace ptwave {

// A scalar function of one variable with its first two derivatives, valid on
// the open interval (lo, hi).
struct ScalarField1D {
    std::function<double(double)> value;
    std::function<double(double)> derivative;
    std::function<double(double)> second_derivative;
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();

    double operator()(double x) const { return value(x); }
};

inline ScalarField1D constant_field(double c) {
    ScalarField1D f;
    f.value = [c](double) { return c; };
    f.derivative = [](double) { return 0.0; };
    f.second_derivative = [](double) { return 0.0; };
    return f;
}

// coeffs[i] multiplies x^i.
inline ScalarField1D polynomial_field(std::vector<double> coeffs) {
    auto horner = [](const std::vector<double>& c, double x) {
        double acc = 0.0;
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    };
    std::vector<double> d1, d2;
    for (std::size_t i = 1; i < coeffs.size(); ++i)
        d1.push_back(coeffs[i] * static_cast<double>(i));
    for (std::size_t i = 1; i < d1.size(); ++i)
        d2.push_back(d1[i] * static_cast<double>(i));
    ScalarField1D f;
    f.value = [coeffs, horner](double x) { return horner(coeffs, x); };
    f.derivative = [d1, horner](double x) { return horner(d1, x); };
    f.second_derivative = [d2, horner](double x) { return horner(d2, x); };
    return f;
}

inline ScalarField1D make_field(std::function<double(double)> v,
                                std::function<double(double)> d,
                                std::function<double(double)> d2) {
    ScalarField1D f;
    f.value = std::move(v);
    f.derivative = std::move(d);
    f.second_derivative = std::move(d2);
    return f;
}

// Largest mixed-relative mismatch between `derivative` and a central
// difference of `value` over a uniform probe grid on [lo, hi].
inline double fd_consistency_error(const ScalarField1D& f, double lo,
                                   double hi, int n = 100) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double x = lo + (hi - lo) * (i + 0.5) / n;
        double h = 1e-6 * (1.0 + std::abs(x));
        double fd = (f.value(x + h) - f.value(x - h)) / (2.0 * h);
        double d = f.derivative(x);
        double err = std::abs(fd - d) / (1.0 + std::abs(d));
        if (err > worst) worst = err;
    }
    return worst;
}

} // namespace ptwave
