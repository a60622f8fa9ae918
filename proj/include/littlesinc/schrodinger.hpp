#pragma once

#include "littlesinc/grid.hpp"
#include "littlesinc/linalg.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lsf {

// Scalar potential with the plumbing the solver needs: an optional
// coordinate shift (the matrix samples V at node + shift, which lets a
// radial problem on (rbar - L, rbar + L) use the symmetric canonical grid),
// an optional centrifugal term hbar^2 l(l+1) / (2 m r^2) on the shifted
// coordinate, and an optional closed-form n-th derivative oracle used to
// build Taylor substitutes.
struct Potential {
    std::function<double(double)> eval;
    double shift = 0.0;
    int angular_momentum = 0;
    // (r, n) -> d^n V / dr^n at r; null when no closed form is available
    std::function<double(double, int)> derivative_series;
    std::string label;
};

struct PhysicalParams {
    double hbar = 1.0;
    double mass = 1.0;
};

// Result of the trace-minimization scale selection.
struct PMSResult {
    double L_opt = 0.0;
    double h_opt = 0.0; // 2 L_opt / N
    double trace_at_opt = 0.0;
    bool constraint_active = false; // optimum pinned at the cap bound
    std::vector<std::pair<double, double>> scan; // the 64 coarse (L, trace) probes
    double stationarity = 0.0; // |dT/dL| at L_opt, central difference, step 1e-5 L
};

// Spectrum of the discretized Hamiltonian on a symmetric canonical grid.
// states[n] holds the unit-norm node-coefficient vector of level n; the
// continuum wavefunction psi_n = h^{-1/2} sum_k u_k s_k then has unit L2
// norm by basis orthogonality.
struct EigenResult {
    Grid grid;
    std::vector<double> energies; // ascending, N-1 of them
    std::vector<std::vector<double>> states;
    PhysicalParams params;
};

// H_kl = -(hbar^2 / 2m) c2_kl + delta_kl [ V(x_k + shift) + centrifugal_k ].
SymMatrix hamiltonian_matrix(const Potential& V, const Grid& grid, const PhysicalParams& params);

// Trace of the same matrix computed from the diagonal closed forms alone
// (no matrix assembly): kinetic part plus the shifted potential samples.
double trace_of_H(const Potential& V, int N, double L, const PhysicalParams& params);

// Pick the half-length L minimizing the trace (or the modified trace
// T - (N-2)/(2N) * sum_k V_eff(x_k) when use_modified) over
// [lo, min(hi, cap)] with a 64-point scan plus golden section, tol 1e-8.
// The cap encodes constraints like L <= rbar for radial problems. If the
// scan finds no interior minimum and no cap binds, throws a convergence
// error instructing the caller to supply a substitute (confining) potential.
PMSResult pms_optimize(const Potential& V, int N, const PhysicalParams& params,
                       std::pair<double, double> L_bounds = {0.1, 50.0},
                       std::optional<double> cap = std::nullopt, bool use_modified = false);

// Assemble on the symmetric grid (-L, L), diagonalize, fix each
// eigenvector's sign so its largest-magnitude coefficient is positive.
// When a substitute potential selected L, pass the ORIGINAL potential here:
// the substitute is only for the scale search.
EigenResult spectrum(const Potential& V, int N, const PhysicalParams& params, double L);

// psi_n(x) = h^{-1/2} sum_k u_k^{(n)} s_k(x); identically zero outside the
// grid's physical interval.
double wavefunction(const EigenResult& result, int n, double x);

// Pointwise |psi_n^{small} - psi_n^{big}| on the sample points, after
// aligning signs by the inner product of the two reconstructions.
std::vector<double> eta_error(const EigenResult& result_small, const EigenResult& result_big,
                              int n, const std::vector<double>& xs);

// Truncated Taylor expansion of V around `center` up to `order`, packaged
// as a Potential (shift/centrifugal copied, polynomial derivative oracle
// provided). Requires V.derivative_series.
Potential taylor_substitute(const Potential& V, double center, int order);

// Polynomial potential sum_i coeffs[i] x^i plus optional exponential terms
// A * exp(-b (x - c)), each with an analytic derivative oracle.
Potential make_poly_exp_potential(std::vector<double> coeffs,
                                  std::vector<std::array<double, 3>> exp_terms,
                                  std::string label);

// V(r) = D [ e^{-2a(r - r_e)} - 2 e^{-a(r - r_e)} ]; minimum -D at r = r_e.
Potential morse_radial(double D, double r_e, double a);

// V(x) = D [ e^{-2 alpha x} - 2 e^{-alpha x} + 1 ]; 0 at the minimum x = 0,
// approaching D as x -> infinity.
Potential morse_1d(double D, double alpha);

// Exact bound-state energies of the 1D Morse well (measured from the well
// bottom): E_n = hbar w [ n + 1/2 - (hbar w / 4D)(n + 1/2)^2 ],
// w = alpha sqrt(2D/m), truncated at the last n with E_n still increasing.
std::vector<double> morse_1d_exact_energies(double D, double alpha, double m, double hbar,
                                            int n_max);

} // namespace lsf
