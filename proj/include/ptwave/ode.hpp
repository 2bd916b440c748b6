#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "errors.hpp"

namespace ptwave::ode {

// Dense interpolant of one accepted step on [t0, t0+h]; quartic in theta.
template <std::size_t N>
struct DenseStep {
    double t0 = 0.0, h = 0.0;
    std::array<double, N> r1{}, r2{}, r3{}, r4{}, r5{};

    double t1() const { return t0 + h; }

    double eval(int i, double t) const {
        double th = (t - t0) / h, th1 = 1.0 - th;
        return r1[i] +
               th * (r2[i] + th1 * (r3[i] + th * (r4[i] + th1 * r5[i])));
    }

    std::array<double, N> eval(double t) const {
        std::array<double, N> out;
        for (std::size_t i = 0; i < N; ++i)
            out[i] = eval(static_cast<int>(i), t);
        return out;
    }
};

// Dormand-Prince 5(4) with FSAL and free quartic dense output. Tolerances
// default tight enough to hold energy drift below 1e-10 per revolution on
// the unperturbed systems this toolkit integrates.
template <std::size_t N>
class Dopri5 {
public:
    using State = std::array<double, N>;
    using Rhs = std::function<void(double, const State&, State&)>;

    explicit Dopri5(Rhs f, double rtol = 1e-11, double atol = 1e-13)
        : f_(std::move(f)), rtol_(rtol), atol_(atol) {}

    void init(double t0, const State& y0) {
        t_ = t0;
        y_ = y0;
        f_(t_, y_, k1_);
        h_ = initial_step();
        steps_ = rejected_ = 0;
    }

    double t() const { return t_; }
    const State& y() const { return y_; }
    long steps() const { return steps_; }

    // Advances by one accepted step and fills `dense` for the interval just
    // covered. Throws ToleranceNotMet if the step size underflows.
    void step(DenseStep<N>& dense) {
        for (int attempt = 0; attempt < 400; ++attempt) {
            if (!(h_ > 1e-14 * std::max(1.0, std::abs(t_))))
                throw ToleranceNotMet("ode step size underflow at t = " +
                                      std::to_string(t_));
            State k2, k3, k4, k5, k6, k7, yt, y1;
            auto stage = [&](double c, const double* a, int n, State& k) {
                for (std::size_t i = 0; i < N; ++i) {
                    double acc = 0.0;
                    const State* ks[6] = {&k1_, &k2, &k3, &k4, &k5, &k6};
                    for (int j = 0; j < n; ++j) acc += a[j] * (*ks[j])[i];
                    yt[i] = y_[i] + h_ * acc;
                }
                f_(t_ + c * h_, yt, k);
            };
            static constexpr double a2[] = {0.2};
            static constexpr double a3[] = {3.0 / 40, 9.0 / 40};
            static constexpr double a4[] = {44.0 / 45, -56.0 / 15, 32.0 / 9};
            static constexpr double a5[] = {19372.0 / 6561, -25360.0 / 2187,
                                            64448.0 / 6561, -212.0 / 729};
            static constexpr double a6[] = {9017.0 / 3168, -355.0 / 33,
                                            46732.0 / 5247, 49.0 / 176,
                                            -5103.0 / 18656};
            static constexpr double a7[] = {35.0 / 384,     0.0,
                                            500.0 / 1113,   125.0 / 192,
                                            -2187.0 / 6784, 11.0 / 84};
            stage(0.2, a2, 1, k2);
            stage(0.3, a3, 2, k3);
            stage(0.8, a4, 3, k4);
            stage(8.0 / 9.0, a5, 4, k5);
            stage(1.0, a6, 5, k6);
            // 5th-order solution (b row equals a7)
            for (std::size_t i = 0; i < N; ++i)
                y1[i] = y_[i] + h_ * (a7[0] * k1_[i] + a7[2] * k3[i] +
                                      a7[3] * k4[i] + a7[4] * k5[i] +
                                      a7[5] * k6[i]);
            f_(t_ + h_, y1, k7);
            // embedded error: b - bhat
            static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695,
                                    e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                                    e6 = 22.0 / 525, e7 = -1.0 / 40;
            double err = 0.0;
            bool bad = false;
            for (std::size_t i = 0; i < N; ++i) {
                double ei = h_ * (e1 * k1_[i] + e3 * k3[i] + e4 * k4[i] +
                                  e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
                double sc = atol_ + rtol_ * std::max(std::abs(y_[i]),
                                                     std::abs(y1[i]));
                err += (ei / sc) * (ei / sc);
                if (!std::isfinite(y1[i])) bad = true;
            }
            err = std::sqrt(err / N);
            if (bad) {
                h_ *= 0.25;
                ++rejected_;
                continue;
            }
            double fac = 0.9 * std::pow(std::max(err, 1e-30), -0.2);
            fac = std::min(5.0, std::max(0.2, fac));
            if (err <= 1.0) {
                // dense output coefficients (Hairer & Wanner)
                static constexpr double d1 = -12715105075.0 / 11282082432.0,
                                        d3 = 87487479700.0 / 32700410799.0,
                                        d4 = -10690763975.0 / 1880347072.0,
                                        d5 = 701980252875.0 / 199316789632.0,
                                        d6 = -1453857185.0 / 822651844.0,
                                        d7 = 69997945.0 / 29380423.0;
                dense.t0 = t_;
                dense.h = h_;
                for (std::size_t i = 0; i < N; ++i) {
                    double dy = y1[i] - y_[i];
                    dense.r1[i] = y_[i];
                    dense.r2[i] = dy;
                    dense.r3[i] = h_ * k1_[i] - dy;
                    dense.r4[i] = dy - h_ * k7[i] - dense.r3[i];
                    dense.r5[i] = h_ * (d1 * k1_[i] + d3 * k3[i] + d4 * k4[i] +
                                        d5 * k5[i] + d6 * k6[i] + d7 * k7[i]);
                }
                t_ += h_;
                y_ = y1;
                k1_ = k7;   // FSAL
                h_ *= fac;
                ++steps_;
                return;
            }
            h_ *= fac;
            ++rejected_;
        }
        throw ToleranceNotMet("ode step rejected repeatedly at t = " +
                              std::to_string(t_));
    }

private:
    double initial_step() const {
        auto wnorm = [&](const State& v) {
            double acc = 0.0;
            for (std::size_t i = 0; i < N; ++i) {
                double sc = atol_ + rtol_ * std::abs(y_[i]);
                acc += (v[i] / sc) * (v[i] / sc);
            }
            return std::sqrt(acc / N);
        };
        double d0 = wnorm(y_), d1 = wnorm(k1_);
        double h0 = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
        State y1, f1;
        for (std::size_t i = 0; i < N; ++i) y1[i] = y_[i] + h0 * k1_[i];
        f_(t_ + h0, y1, f1);
        for (std::size_t i = 0; i < N; ++i) f1[i] -= k1_[i];
        double d2 = wnorm(f1) / h0;
        double m = std::max(d1, d2);
        double h1 = (m <= 1e-15) ? std::max(1e-6, h0 * 1e-3)
                                 : std::pow(0.01 / m, 0.2);
        return std::min(100.0 * h0, h1);
    }

    Rhs f_;
    double rtol_, atol_;
    double t_ = 0.0, h_ = 0.0;
    State y_{};
    State k1_{};
    long steps_ = 0, rejected_ = 0;
};

} // namespace ptwave::ode
