#include "littlesinc/quadrature.hpp"

#include "littlesinc/errors.hpp"
#include "littlesinc/kernels.hpp"

#include <cmath>
#include <numbers>

namespace lsf {

QuadRule gauss_legendre(int n) {
    if (n < 1) throw domain_error("gauss_legendre: need at least one node");
    QuadRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // root of P_n near cos(pi (i + 3/4) / (n + 1/2)), refined by Newton
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    return rule;
}

double integrate(const std::function<double(double)>& f, double a, double b, int n) {
    if (!(a < b)) throw domain_error("integrate: need a < b");
    const QuadRule rule = gauss_legendre(n);
    const double mid = 0.5 * (a + b);
    const double rad = 0.5 * (b - a);
    std::vector<double> vals(rule.nodes.size());
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) vals[i] = f(mid + rad * rule.nodes[i]);
    return rad * kernels::dot(vals.data(), rule.weights.data(), vals.size());
}

} // namespace lsf
