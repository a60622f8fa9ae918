#pragma once

#include "littlesinc/grid.hpp"

namespace lsf {

// Whittaker cardinal function S_k(h, x) = sin(pi(x-kh)/h) / (pi(x-kh)/h).
// Exactly 1 at x = kh and exactly 0 at the other grid multiples of h.
double sinc_eval(int k, double h, double x);

// r-th derivative of S_k evaluated at node x_l, in closed form:
//   order 1:  0 on the diagonal, (-1)^(l-k) / (h (l-k)) off it
//   order 2:  -pi^2/(3h^2) on the diagonal, -2 (-1)^(l-k) / (h (l-k))^2 off it
//   higher orders via the finite polynomial-in-pi sums (see basis.cpp).
double sinc_diff_coeff(int r, int l, int k, double h);

// Little-sinc basis function s_k for mesh parameter N and spacing h in the
// canonical frame centered at 0:
//   s_k(h,N,x) = (1/2N)[ sin((2N+1) u) / sin(u) - cos((2N+1) v) / cos(v) ],
//   u = pi (x - kh) / (2Nh),  v = pi (x + kh) / (2Nh).
// Cardinal on the nodes kh and orthogonal on (-L, L), L = Nh/2; vanishes at
// x = -L and x = +L. Both ratios are evaluated through argument reduction so
// the value stays accurate for |x| far from the origin, with a series guard
// at the removable singularities.
double lsf_eval_canonical(int k, double h, int N, double x);

// Same basis function attached to a physical grid: evaluates at the mapped
// canonical coordinate (x - center) * scale. k must lie in the grid's index
// range {-N/2+1, ..., N/2-1}.
double lsf_eval(int k, const Grid& grid, double x);

} // namespace lsf
