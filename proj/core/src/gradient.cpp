#include "yb/num/gradient.hpp"

#include <cmath>
#include <sstream>

#include "yb/errors.hpp"

namespace yb::num {

namespace {

void check_cfg(const GradientConfig& cfg) {
    if (!(cfg.step > 0.0)) throw DomainError("gradient step must be positive");
}

template <class F, class P>
auto probe(const F& f, const P& p, size_t i, double offset) {
    try {
        return f(p);
    } catch (const std::exception& e) {
        std::ostringstream os;
        os << "gradient probe failed at coordinate " << i << " offset " << offset << ": " << e.what();
        throw DomainError(os.str());
    }
}

}  // namespace

std::vector<cplx> fd_gradient(const RealFunction& f, const std::vector<double>& point, const GradientConfig& cfg) {
    check_cfg(cfg);
    if (cfg.scheme == GradScheme::complex_step)
        throw DomainError("complex-step needs a holomorphic extension of f");
    std::vector<cplx> g(point.size());
    std::vector<double> p = point;
    for (size_t i = 0; i < point.size(); ++i) {
        const double h = cfg.step;
        p[i] = point[i] + h;
        const cplx fp = probe(f, p, i, h);
        p[i] = point[i] - h;
        const cplx fm = probe(f, p, i, -h);
        p[i] = point[i];
        g[i] = (fp - fm) / (2.0 * h);
    }
    return g;
}

std::vector<cplx> fd_gradient(const HoloFunction& f, const std::vector<double>& point, const GradientConfig& cfg) {
    check_cfg(cfg);
    std::vector<cplx> p(point.begin(), point.end());
    std::vector<cplx> g(point.size());
    const double h = cfg.step;
    if (cfg.scheme == GradScheme::central_difference) {
        for (size_t i = 0; i < point.size(); ++i) {
            p[i] = point[i] + h;
            const cplx fp = probe(f, p, i, h);
            p[i] = point[i] - h;
            const cplx fm = probe(f, p, i, -h);
            p[i] = point[i];
            g[i] = (fp - fm) / (2.0 * h);
        }
        return g;
    }
    const cplx f0 = probe(f, p, 0, 0.0);
    const bool real_valued = std::abs(f0.imag()) <= 1e-15 * std::max(1.0, std::abs(f0));
    for (size_t i = 0; i < point.size(); ++i) {
        p[i] = cplx(point[i], h);
        const cplx fp = probe(f, p, i, h);
        if (real_valued) {
            g[i] = fp.imag() / h;
        } else {
            p[i] = cplx(point[i], -h);
            const cplx fm = probe(f, p, i, -h);
            g[i] = (fp - fm) / cplx(0.0, 2.0 * h);
        }
        p[i] = point[i];
    }
    return g;
}

std::vector<cplx> holo_gradient(const HoloFunction& f, const std::vector<cplx>& point, double step) {
    if (!(step > 0.0)) throw DomainError("gradient step must be positive");
    std::vector<cplx> p = point;
    std::vector<cplx> g(point.size());
    for (size_t i = 0; i < point.size(); ++i) {
        p[i] = point[i] + step;
        const cplx fp = probe(f, p, i, step);
        p[i] = point[i] - step;
        const cplx fm = probe(f, p, i, -step);
        p[i] = point[i];
        g[i] = (fp - fm) / (2.0 * step);
    }
    return g;
}

ComplexMatrix fd_jacobian(const std::function<std::vector<cplx>(const std::vector<double>&)>& f,
                          const std::vector<double>& point, double step) {
    std::vector<double> p = point;
    const auto f0 = f(p);
    ComplexMatrix j(static_cast<Eigen::Index>(f0.size()), static_cast<Eigen::Index>(point.size()));
    for (size_t i = 0; i < point.size(); ++i) {
        p[i] = point[i] + step;
        const auto fp = probe(f, p, i, step);
        p[i] = point[i] - step;
        const auto fm = probe(f, p, i, -step);
        p[i] = point[i];
        for (size_t r = 0; r < f0.size(); ++r)
            j(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(i)) = (fp[r] - fm[r]) / (2.0 * step);
    }
    return j;
}

}  // namespace yb::num
