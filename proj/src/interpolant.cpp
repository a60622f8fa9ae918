#include "littlesinc/interpolant.hpp"

#include "littlesinc/basis.hpp"
#include "littlesinc/errors.hpp"

#include <cmath>

namespace lsf {

Interpolant interpolate(const Grid& grid, const std::vector<double>& samples) {
    if (static_cast<int>(samples.size()) != grid.size())
        throw domain_error("interpolate: sample count must equal N-1");
    Interpolant itp;
    itp.kind = Interpolant::Kind::LSF;
    itp.grid = grid;
    itp.samples = samples;
    return itp;
}

double eval_interpolant(const Interpolant& itp, double x) {
    if (itp.kind == Interpolant::Kind::LSF) {
        const Grid& g = itp.grid;
        double acc = 0.0;
        for (int k = g.k_min(); k <= g.k_max(); ++k)
            acc += itp.samples[static_cast<std::size_t>(k - g.k_min())] * lsf_eval(k, g, x);
        return acc;
    }
    // mapped sinc: phi carries (a, b) to the whole real line
    if (!(x > itp.a && x < itp.b))
        throw domain_error("eval_interpolant: mapped-sinc evaluation requires a < x < b");
    const double phi = std::log((x - itp.a) / (itp.b - x));
    const int count = static_cast<int>(itp.mapped_samples.size());
    const int N = (count - 1) / 2;
    double acc = 0.0;
    for (int k = -N; k <= N; ++k)
        acc += itp.mapped_samples[static_cast<std::size_t>(k + N)] * sinc_eval(k, itp.h, phi);
    return acc;
}

Interpolant conformal_sinc_interpolate(const std::function<double(double)>& f, double a,
                                       double b, double h, int N) {
    if (!(a < b)) throw domain_error("conformal_sinc_interpolate: need a < b");
    if (!(h > 0.0)) throw domain_error("conformal_sinc_interpolate: need h > 0");
    if (N < 1) throw domain_error("conformal_sinc_interpolate: need N >= 1");
    Interpolant itp;
    itp.kind = Interpolant::Kind::MappedSinc;
    itp.a = a;
    itp.b = b;
    itp.h = h;
    itp.mapped_nodes.resize(static_cast<std::size_t>(2 * N + 1));
    itp.mapped_samples.resize(static_cast<std::size_t>(2 * N + 1));
    for (int k = -N; k <= N; ++k) {
        // phi^{-1}(kh); written to stay finite for large |k|h
        const double e = std::exp(k * h);
        const double x = (a + b * e) / (1.0 + e);
        itp.mapped_nodes[static_cast<std::size_t>(k + N)] = x;
        itp.mapped_samples[static_cast<std::size_t>(k + N)] = f(x);
    }
    return itp;
}

} // namespace lsf
