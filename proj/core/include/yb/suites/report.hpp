#pragma once

#include <map>
#include <string>
#include <vector>

#include "yb/residuals.hpp"

namespace yb::suites {

// Residuals whose last dotted segment starts with info_ are reported but
// never gate the verdict.
inline bool is_info(const std::string& name) {
    const auto dot = name.rfind('.');
    return name.compare(dot == std::string::npos ? 0 : dot + 1, 5, "info_") == 0;
}

struct Report {
    std::string suite;
    Residuals residuals;
    std::map<std::string, double> tolerances;
    std::map<std::string, std::string> skipped;  // name -> reason
    std::map<std::string, std::string> notes;

    // Residual names that exceed their tolerance or have none.
    std::vector<std::string> failures() const {
        std::vector<std::string> out;
        for (const auto& [name, value] : residuals) {
            if (is_info(name)) continue;
            const auto it = tolerances.find(name);
            if (it == tolerances.end() || !(value <= it->second)) out.push_back(name);
        }
        return out;
    }
    bool pass() const { return failures().empty(); }

    void add(const std::string& name, double value, double tol) {
        residuals[name] = value;
        if (!is_info(name)) tolerances[name] = tol;
    }
    void add_all(const Residuals& r, double tol, const std::string& prefix = {}) {
        for (const auto& [k, v] : r) add(prefix + k, v, tol);
    }
    void merge(const Report& other, const std::string& prefix) {
        for (const auto& [k, v] : other.residuals) residuals[prefix + k] = v;
        for (const auto& [k, v] : other.tolerances) tolerances[prefix + k] = v;
        for (const auto& [k, v] : other.skipped) skipped[prefix + k] = v;
        for (const auto& [k, v] : other.notes) notes[prefix + k] = v;
    }
    // Tolerance overrides apply to existing names only; returns unknown names.
    std::vector<std::string> override_tolerances(const std::map<std::string, double>& tol) {
        std::vector<std::string> unknown;
        for (const auto& [k, v] : tol) {
            if (tolerances.count(k)) tolerances[k] = v;
            else unknown.push_back(k);
        }
        return unknown;
    }
};

}  // namespace yb::suites
