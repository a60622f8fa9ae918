#include "littlesinc/basis.hpp"

#include "littlesinc/errors.hpp"

#include <cmath>
#include <numbers>

namespace lsf {

namespace {

constexpr double kPi = std::numbers::pi;

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

double minus_one_pow(long long p) { return (p % 2 == 0) ? 1.0 : -1.0; }

// sin(M t) / sin(t) for odd M, with t already reduced to [-pi/2, pi/2].
// Near t = 0 the ratio has a removable singularity; a short series keeps
// full accuracy there (error O(M^4 t^4) < 1e-16 for |t| < 1e-8, M ~ 1e3).
double dirichlet_ratio(double t, int M) {
    if (std::abs(t) < 1e-8) return M * (1.0 - (static_cast<double>(M) * M - 1.0) * t * t / 6.0);
    return std::sin(M * t) / std::sin(t);
}

} // namespace

double sinc_eval(int k, double h, double x) {
    if (!(h > 0.0) || !std::isfinite(h) || !std::isfinite(x))
        throw domain_error("sinc_eval: need finite x and h > 0");
    const double u = x - k * h;
    if (u == 0.0) return 1.0;
    const double m = u / h;
    if (m == std::nearbyint(m)) return 0.0; // exact node hit away from the peak
    const double t = kPi * m;
    return std::sin(t) / t;
}

double sinc_diff_coeff(int r, int l, int k, double h) {
    if (r < 1) throw domain_error("sinc_diff_coeff: derivative order must be >= 1");
    if (!(h > 0.0)) throw domain_error("sinc_diff_coeff: need h > 0");
    const long long d = static_cast<long long>(l) - k;

    if (r % 2 == 0) {
        const int rho = r / 2;
        if (d == 0) return std::pow(kPi / h, r) * minus_one_pow(rho) / (r + 1);
        double sum = 0.0;
        for (int i = 0; i < rho; ++i)
            sum += minus_one_pow(i + 1) * (factorial(r) / factorial(2 * i + 1)) *
                   std::pow(kPi * d, 2 * i);
        return minus_one_pow(d) / std::pow(h * d, r) * sum;
    }

    const int rho = (r - 1) / 2;
    if (d == 0) return 0.0; // odd derivatives of an even bump vanish at its peak
    double sum = 0.0;
    for (int i = 0; i <= rho; ++i)
        sum += minus_one_pow(i) * (factorial(r) / factorial(2 * i + 1)) *
               std::pow(kPi * d, 2 * i);
    return minus_one_pow(d) / std::pow(h * d, r) * sum;
}

double lsf_eval_canonical(int k, double h, int N, double x) {
    if (!(h > 0.0) || !std::isfinite(x))
        throw domain_error("lsf_eval_canonical: need finite x and h > 0");
    const int M = 2 * N + 1;
    // u and v grow like x/(Nh); reduce mod pi before forming the ratios so
    // both numerator and denominator are evaluated at well-conditioned args.
    const double u = kPi * (x - k * h) / (2.0 * N * h);
    const double v = kPi * (x + k * h) / (2.0 * N * h);
    const double du = std::remainder(u, kPi);
    const double dv = std::remainder(v - kPi / 2.0, kPi);
    const double sine_term = dirichlet_ratio(du, M);
    // cos(M v)/cos(v) = (-1)^N sin(M e)/sin(e) with e = v - pi/2 mod pi
    const double cosine_term = minus_one_pow(N) * dirichlet_ratio(dv, M);
    return (sine_term - cosine_term) / (2.0 * N);
}

double lsf_eval(int k, const Grid& grid, double x) {
    if (k < grid.k_min() || k > grid.k_max())
        throw domain_error("lsf_eval: basis index out of range");
    const double t = (x - grid.center) * grid.scale;
    return lsf_eval_canonical(k, grid.h * grid.scale, grid.N, t);
}

} // namespace lsf
