#pragma once

#include <functional>
#include <vector>

namespace lsf {

// Gauss-Legendre rule on [-1, 1]: nodes ascending, weights positive.
struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// n-point rule via Newton refinement of Chebyshev initial guesses on the
// Legendre recurrence; accurate to machine precision for n up to thousands.
QuadRule gauss_legendre(int n);

// Integrate f over [a, b] with the n-point rule (affinely mapped).
double integrate(const std::function<double(double)>& f, double a, double b, int n);

} // namespace lsf
