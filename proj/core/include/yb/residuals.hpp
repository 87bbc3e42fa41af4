#pragma once

#include <algorithm>
#include <map>
#include <string>

namespace yb {

// Named max-norm residuals, ordered by name for stable reports.
using Residuals = std::map<std::string, double>;

inline double max_residual(const Residuals& r) {
    double m = 0.0;
    for (const auto& [k, v] : r) m = std::max(m, v);
    return m;
}

inline void merge_into(Residuals& dst, const Residuals& src, const std::string& prefix = {}) {
    for (const auto& [k, v] : src) dst[prefix + k] = v;
}

}  // namespace yb
