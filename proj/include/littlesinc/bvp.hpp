#pragma once

#include "littlesinc/grid.hpp"
#include "littlesinc/interpolant.hpp"

#include <functional>
#include <vector>

namespace lsf {

// Linear second-order two-point boundary-value problem
//   p2(x) u'' + p1(x) u' + p0(x) u = g(x)  on (a, b),  u(a) = u(b) = 0.
// Only homogeneous Dirichlet data is supported in this release: the basis
// functions themselves vanish at the endpoints, which enforces the
// boundary conditions implicitly.
struct BVPProblem {
    std::function<double(double)> p2, p1, p0, g;
    double a = 0.0, b = 0.0;
    double ua = 0.0, ub = 0.0; // must both be 0 (validated)
};

struct BVPSolution {
    Grid grid;
    std::vector<double> u; // node values = expansion coefficients
    Interpolant as_interpolant;
};

// Collocation solve: row j of the dense system is
//   sum_k u_k [ p2(x_j) c2(k,j) + p1(x_j) c1(k,j) + p0(x_j) delta_kj ] = g(x_j).
BVPSolution solve_linear_bvp(const BVPProblem& prob, int N);

// Global error diagnostic: log10 | int u_exact^2 dx  -  h * sum_k u_k^2 |.
// The integral uses 200-point Gauss-Legendre; the discrete sum uses the
// basis orthogonality identity. Returns -infinity when the argument is 0.
double global_error(const BVPSolution& sol, const std::function<double(double)>& u_exact);

// Local error diagnostic: log10 | u_exact(x0) - u_ls(x0) |, -infinity on an
// exact match. x0 must lie inside (a, b).
double local_error(const BVPSolution& sol, const std::function<double(double)>& u_exact,
                   double x0);

} // namespace lsf
