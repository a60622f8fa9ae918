#include "littlesinc/schrodinger.hpp"

#include "littlesinc/basis.hpp"
#include "littlesinc/diff_matrix.hpp"
#include "littlesinc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace lsf {

namespace {

constexpr double kPi = std::numbers::pi;

void check_params(const PhysicalParams& p) {
    if (!(p.hbar > 0.0) || !(p.mass > 0.0))
        throw domain_error("physical params: hbar and mass must be positive");
}

// potential + centrifugal diagonal term at physical node x (shift applied)
double effective_potential(const Potential& V, const PhysicalParams& p, double x) {
    const double r = x + V.shift;
    double v = V.eval(r);
    if (!std::isfinite(v))
        throw domain_error("potential non-finite at node x = " + std::to_string(x) +
                           " (shifted r = " + std::to_string(r) + ")");
    if (V.angular_momentum > 0) {
        if (!(r > 0.0))
            throw domain_error("centrifugal term needs shifted coordinate > 0 at node x = " +
                               std::to_string(x));
        const double l = V.angular_momentum;
        v += p.hbar * p.hbar * l * (l + 1.0) / (2.0 * p.mass * r * r);
    }
    return v;
}

double factorial(double n) {
    double f = 1.0;
    for (int i = 2; i <= static_cast<int>(n); ++i) f *= i;
    return f;
}

} // namespace

SymMatrix hamiltonian_matrix(const Potential& V, const Grid& grid, const PhysicalParams& params) {
    check_params(params);
    if (V.angular_momentum < 0)
        throw domain_error("hamiltonian_matrix: angular momentum must be >= 0");
    const DiffMatrix d2 = lsf_d2_matrix(grid);
    const int dim = grid.size();
    const double kin = -params.hbar * params.hbar / (2.0 * params.mass);
    std::vector<double> entries(static_cast<std::size_t>(dim) * dim, 0.0);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j)
            entries[static_cast<std::size_t>(i) * dim + j] = kin * d2.at(i, j);
        entries[static_cast<std::size_t>(i) * dim + i] +=
            effective_potential(V, params, grid.nodes[static_cast<std::size_t>(i)]);
    }
    return SymMatrix(dim, std::move(entries));
}

double trace_of_H(const Potential& V, int N, double L, const PhysicalParams& params) {
    check_params(params);
    if (N < 4 || N % 2 != 0) throw domain_error("trace_of_H: N must be even and at least 4");
    if (!(L > 0.0)) throw domain_error("trace_of_H: need L > 0");
    const double h = 2.0 * L / N;
    const double kin = -params.hbar * params.hbar / (2.0 * params.mass);
    double t = 0.0;
    for (int k = -N / 2 + 1; k <= N / 2 - 1; ++k) {
        const double c = std::cos(k * kPi / N);
        const double d2kk = -kPi * kPi / (24.0 * L * L) * (1.0 + 2.0 * N * N - 3.0 / (c * c));
        t += kin * d2kk + effective_potential(V, params, k * h);
    }
    return t;
}

PMSResult pms_optimize(const Potential& V, int N, const PhysicalParams& params,
                       std::pair<double, double> L_bounds, std::optional<double> cap,
                       bool use_modified) {
    check_params(params);
    const double lo = L_bounds.first;
    double hi = L_bounds.second;
    if (cap) hi = std::min(hi, *cap);
    if (!(lo > 0.0) || !(lo < hi)) throw domain_error("pms_optimize: invalid L window");

    const double weight = (N - 2.0) / (2.0 * N);
    auto objective = [&](double L) {
        double t = trace_of_H(V, N, L, params);
        if (use_modified) {
            const double h = 2.0 * L / N;
            double pot = 0.0;
            for (int k = -N / 2 + 1; k <= N / 2 - 1; ++k)
                pot += effective_potential(V, params, k * h);
            t -= weight * pot;
        }
        if (!std::isfinite(t))
            throw domain_error("pms_optimize: trace non-finite at L = " + std::to_string(L));
        return t;
    };

    PMSResult out;
    constexpr int kScan = 64;
    out.scan.reserve(kScan);
    int best = 0;
    for (int i = 0; i < kScan; ++i) {
        const double L = lo + (hi - lo) * i / (kScan - 1);
        const double t = objective(L);
        out.scan.emplace_back(L, t);
        if (t < out.scan[static_cast<std::size_t>(best)].second) best = i;
    }

    constexpr double kTol = 1e-8;
    if (best == kScan - 1) {
        if (cap && *cap <= L_bounds.second) {
            // trace still decreasing at the bound: the cap is the optimum
            out.L_opt = hi;
            out.trace_at_opt = out.scan.back().second;
            out.constraint_active = true;
        } else {
            throw convergence_error(
                "pms_optimize: trace has no interior minimum in the window; supply a substitute "
                "(confining) potential or widen the window",
                out.scan.back().second);
        }
    } else {
        const double a = out.scan[static_cast<std::size_t>(std::max(0, best - 1))].first;
        const double b = out.scan[static_cast<std::size_t>(std::min(kScan - 1, best + 1))].first;
        auto [L_opt, t_opt] = golden_section(objective, a, b, kTol);
        out.L_opt = L_opt;
        out.trace_at_opt = t_opt;
        out.constraint_active = cap && out.L_opt >= *cap - 1e-6 * std::max(1.0, *cap);
    }
    out.h_opt = 2.0 * out.L_opt / N;
    const double step = 1e-5 * out.L_opt;
    out.stationarity =
        std::abs((objective(out.L_opt + step) - objective(out.L_opt - step)) / (2.0 * step));
    return out;
}

EigenResult spectrum(const Potential& V, int N, const PhysicalParams& params, double L) {
    if (!(L > 0.0)) throw domain_error("spectrum: need L > 0");
    EigenResult res;
    res.grid = make_grid(N, -L, L);
    res.params = params;
    const SymMatrix H = hamiltonian_matrix(V, res.grid, params);
    const EigenDecomposition eig = sym_eigen(H);
    const int dim = res.grid.size();
    res.energies = eig.values;
    res.states.assign(static_cast<std::size_t>(dim), std::vector<double>(static_cast<std::size_t>(dim), 0.0));
    for (int n = 0; n < dim; ++n) {
        auto& u = res.states[static_cast<std::size_t>(n)];
        int imax = 0;
        for (int i = 0; i < dim; ++i) {
            u[static_cast<std::size_t>(i)] = eig.vec(i, n);
            if (std::abs(u[static_cast<std::size_t>(i)]) > std::abs(u[static_cast<std::size_t>(imax)]))
                imax = i;
        }
        if (u[static_cast<std::size_t>(imax)] < 0.0)
            for (auto& v : u) v = -v;
    }
    return res;
}

double wavefunction(const EigenResult& result, int n, double x) {
    const int dim = result.grid.size();
    if (n < 0 || n >= dim) throw domain_error("wavefunction: state index out of range");
    if (!(x > result.grid.a() && x < result.grid.b())) return 0.0;
    const auto& u = result.states[static_cast<std::size_t>(n)];
    double acc = 0.0;
    for (int k = result.grid.k_min(); k <= result.grid.k_max(); ++k)
        acc += u[static_cast<std::size_t>(k - result.grid.k_min())] * lsf_eval(k, result.grid, x);
    return acc / std::sqrt(result.grid.h);
}

std::vector<double> eta_error(const EigenResult& result_small, const EigenResult& result_big,
                              int n, const std::vector<double>& xs) {
    std::vector<double> small(xs.size()), big(xs.size());
    double align = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        small[i] = wavefunction(result_small, n, xs[i]);
        big[i] = wavefunction(result_big, n, xs[i]);
        align += small[i] * big[i];
    }
    const double flip = align < 0.0 ? -1.0 : 1.0;
    std::vector<double> eta(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) eta[i] = std::abs(flip * small[i] - big[i]);
    return eta;
}

Potential taylor_substitute(const Potential& V, double center, int order) {
    if (!V.derivative_series)
        throw capability_error("taylor_substitute: potential has no derivative oracle");
    if (order < 0) throw domain_error("taylor_substitute: order must be >= 0");
    std::vector<double> coeffs(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n)
        coeffs[static_cast<std::size_t>(n)] = V.derivative_series(center, n) / factorial(n);

    Potential sub;
    sub.shift = V.shift;
    sub.angular_momentum = V.angular_momentum;
    sub.label = V.label + "-taylor";
    sub.eval = [coeffs, center](double r) {
        double acc = 0.0;
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * (r - center) + coeffs[i];
        return acc;
    };
    sub.derivative_series = [coeffs, center](double r, int m) {
        if (m < 0 || static_cast<std::size_t>(m) >= coeffs.size()) return 0.0;
        // d^m of sum c_n (r-center)^n  =  sum_{n>=m} c_n n!/(n-m)! (r-center)^{n-m}
        double acc = 0.0;
        for (std::size_t n = coeffs.size(); n-- > static_cast<std::size_t>(m);) {
            double fall = 1.0;
            for (std::size_t j = n; j > n - static_cast<std::size_t>(m); --j) fall *= static_cast<double>(j);
            acc = acc * (r - center) + coeffs[n] * fall;
        }
        return acc;
    };
    return sub;
}

Potential make_poly_exp_potential(std::vector<double> coeffs,
                                  std::vector<std::array<double, 3>> exp_terms,
                                  std::string label) {
    Potential p;
    p.label = std::move(label);
    p.eval = [coeffs, exp_terms](double x) {
        double acc = 0.0;
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
        for (const auto& t : exp_terms) acc += t[0] * std::exp(-t[1] * (x - t[2]));
        return acc;
    };
    p.derivative_series = [coeffs, exp_terms](double x, int m) {
        double acc = 0.0;
        if (static_cast<std::size_t>(m) < coeffs.size()) {
            for (std::size_t n = coeffs.size(); n-- > static_cast<std::size_t>(m);) {
                double fall = 1.0;
                for (std::size_t j = n; j > n - static_cast<std::size_t>(m); --j)
                    fall *= static_cast<double>(j);
                acc = acc * x + coeffs[n] * fall;
            }
        }
        for (const auto& t : exp_terms)
            acc += t[0] * std::pow(-t[1], m) * std::exp(-t[1] * (x - t[2]));
        return acc;
    };
    return p;
}

Potential morse_radial(double D, double r_e, double a) {
    if (!(D > 0.0) || !(a > 0.0)) throw domain_error("morse_radial: need D > 0 and a > 0");
    Potential p;
    p.label = "morse-radial";
    p.eval = [D, r_e, a](double r) {
        return D * (std::exp(-2.0 * a * (r - r_e)) - 2.0 * std::exp(-a * (r - r_e)));
    };
    p.derivative_series = [D, r_e, a](double r, int n) {
        return D * (std::pow(-2.0 * a, n) * std::exp(-2.0 * a * (r - r_e)) -
                    2.0 * std::pow(-a, n) * std::exp(-a * (r - r_e)));
    };
    return p;
}

Potential morse_1d(double D, double alpha) {
    if (!(D > 0.0) || !(alpha > 0.0)) throw domain_error("morse_1d: need D > 0 and alpha > 0");
    Potential p;
    p.label = "morse-1d";
    p.eval = [D, alpha](double x) {
        return D * (std::exp(-2.0 * alpha * x) - 2.0 * std::exp(-alpha * x) + 1.0);
    };
    p.derivative_series = [D, alpha](double x, int n) {
        double v = D * (std::pow(-2.0 * alpha, n) * std::exp(-2.0 * alpha * x) -
                        2.0 * std::pow(-alpha, n) * std::exp(-alpha * x));
        if (n == 0) v += D;
        return v;
    };
    return p;
}

std::vector<double> morse_1d_exact_energies(double D, double alpha, double m, double hbar,
                                            int n_max) {
    if (!(D > 0.0) || !(alpha > 0.0) || !(m > 0.0) || !(hbar > 0.0))
        throw domain_error("morse_1d_exact_energies: parameters must be positive");
    const double w = alpha * std::sqrt(2.0 * D / m);
    std::vector<double> out;
    for (int n = 0; n <= n_max; ++n) {
        // bound states exist while E_n is still increasing in n
        if (n + 0.5 >= 2.0 * D / (hbar * w)) break;
        const double q = n + 0.5;
        out.push_back(hbar * w * (q - hbar * w / (4.0 * D) * q * q));
    }
    return out;
}

} // namespace lsf
