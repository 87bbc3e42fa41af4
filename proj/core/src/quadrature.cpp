#include "yb/num/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>

namespace yb::num {

const std::vector<std::pair<double, double>>& gauss_legendre_64() {
    static const std::vector<std::pair<double, double>> nodes = [] {
        using rule = boost::math::quadrature::gauss<double, 64>;
        std::vector<std::pair<double, double>> out;
        const auto& x = rule::abscissa();
        const auto& w = rule::weights();
        for (size_t i = 0; i < x.size(); ++i) {
            out.emplace_back(x[i], w[i]);
            if (x[i] != 0.0) out.emplace_back(-x[i], w[i]);
        }
        return out;
    }();
    return nodes;
}

}  // namespace yb::num
