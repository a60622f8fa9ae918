#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace oracle {

// r-th derivative of f at x: symmetric central differences on a shrinking
// step ladder, Richardson-extrapolated; the tableau entry with the best
// internal agreement wins.  Offsets are symmetric about x, so the error
// expansion runs in even powers of h.
inline double fd_derivative(const std::function<double(double)>& f, double x, int order,
                            double h0, int levels, double shrink) {
    auto central = [&](double h) {
        double acc = 0.0;
        double c = 1.0;  // binomial C(order, i)
        for (int i = 0; i <= order; ++i) {
            const double xi = x + (0.5 * order - i) * h;
            acc += ((i % 2) ? -c : c) * f(xi);
            c = c * (order - i) / (i + 1);
        }
        return acc / std::pow(h, order);
    };

    std::vector<std::vector<double>> t(static_cast<size_t>(levels));
    double h = h0;
    for (int j = 0; j < levels; ++j) {
        t[j].assign(static_cast<size_t>(j) + 1, 0.0);
        t[j][0] = central(h);
        double pw = 1.0;
        for (int k = 1; k <= j; ++k) {
            pw = (k == 1) ? shrink * shrink : pw * shrink * shrink;
            t[j][k] = (pw * t[j][k - 1] - t[j - 1][k - 1]) / (pw - 1.0);
        }
        h /= shrink;
    }

    double best = t[0][0];
    double best_err = std::numeric_limits<double>::infinity();
    for (int j = 1; j < levels; ++j) {
        for (int k = 1; k <= j; ++k) {
            const double err =
                std::abs(t[j][k] - t[j][k - 1]) + std::abs(t[j][k] - t[j - 1][k - 1]);
            if (err < best_err) {
                best_err = err;
                best = t[j][k];
            }
        }
    }
    return best;
}

// Defaults used when checking differentiation-matrix entries (orders 1-2).
// The step base must stay incommensurate with the collocation spacings in
// play: probe offsets that land exactly on grid nodes sample the cardinal
// function where it vanishes identically, and those aliased levels agree
// with each other perfectly, hijacking the best-pick.
inline double fd_matrix(const std::function<double(double)>& f, double x, int order) {
    return fd_derivative(f, x, order, 0.37, 9, 2.0);
}

// Defaults used when checking high-order cardinal-sinc derivative
// coefficients (orders up to 7); the gentler shrink keeps roundoff at bay.
inline double fd_high_order(const std::function<double(double)>& f, double x, int order) {
    return fd_derivative(f, x, order, 1.2, 14, 1.5);
}

}  // namespace oracle
