#include "io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "yb/errors.hpp"

namespace yb::cli {

cplx parse_complex(const std::string& text) {
    const auto comma = text.find(',');
    try {
        size_t used = 0;
        if (comma == std::string::npos) {
            const double re = std::stod(text, &used);
            if (used != text.size()) throw UsageError("bad number");
            return {re, 0.0};
        }
        const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
        const double re = std::stod(a, &used);
        if (used != a.size()) throw UsageError("bad number");
        const double im = std::stod(b, &used);
        if (used != b.size()) throw UsageError("bad number");
        return {re, im};
    } catch (const std::logic_error&) {
        throw UsageError("expected a complex number RE,IM, got '" + text + "'");
    }
}

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2) throw UsageError("complex values are [re, im] arrays");
    return {j[0].get<double>(), j[1].get<double>()};
}

json to_json(const std::vector<cplx>& zs) {
    json a = json::array();
    for (const auto& z : zs) a.push_back(to_json(z));
    return a;
}

std::vector<cplx> complex_vector(const json& j) {
    if (!j.is_array()) throw UsageError("expected an array of complex values");
    std::vector<cplx> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(complex_from_json(e));
    return out;
}

json state_to_json(const lattice::ChainState& s) {
    return {{"N", s.n_pairs}, {"z1", to_json(s.z1)}, {"z2", to_json(s.z2)}, {"u", to_json(s.u)}, {"v", to_json(s.v)}};
}

lattice::ChainState state_from_json(const json& j) {
    try {
        lattice::ChainState s;
        s.n_pairs = j.at("N").get<int>();
        s.z1 = complex_from_json(j.at("z1"));
        s.z2 = complex_from_json(j.at("z2"));
        s.u = complex_vector(j.at("u"));
        s.v = complex_vector(j.at("v"));
        s.validate();
        return s;
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed state: ") + e.what());
    } catch (const InvalidPoint& e) {
        throw UsageError(std::string("invalid state: ") + e.what());
    }
}

json tau_to_json(const TauFile& t) {
    const auto& f = t.field;
    return {{"n1", f.n1},
            {"n2", f.n2},
            {"alpha", to_json(f.alpha)},
            {"beta", to_json(f.beta)},
            {"phi", to_json(f.phi)},
            {"gamma", to_json(f.gamma)},
            {"f0", to_json(t.f0)},
            {"g0", to_json(t.g0)},
            {"z1", to_json(t.z1)},
            {"z2", to_json(t.z2)},
            {"tau", to_json(f.tau)}};
}

TauFile tau_from_json(const json& j) {
    try {
        TauFile t;
        auto& f = t.field;
        f.n1 = j.at("n1").get<int>();
        f.n2 = j.at("n2").get<int>();
        f.alpha = complex_vector(j.at("alpha"));
        f.beta = complex_vector(j.at("beta"));
        f.phi = complex_vector(j.at("phi"));
        f.gamma = complex_vector(j.at("gamma"));
        f.tau = complex_vector(j.at("tau"));
        if (j.contains("f0")) t.f0 = complex_from_json(j["f0"]);
        if (j.contains("g0")) t.g0 = complex_from_json(j["g0"]);
        if (j.contains("z1")) t.z1 = complex_from_json(j["z1"]);
        if (j.contains("z2")) t.z2 = complex_from_json(j["z2"]);
        const auto n1 = static_cast<size_t>(f.n1), n2 = static_cast<size_t>(f.n2);
        if (f.n1 < 1 || f.n2 < 1 || f.alpha.size() != n1 || f.beta.size() != n2 || f.phi.size() != n1 + 1 ||
            f.gamma.size() != n2 + 1 || f.tau.size() != (n1 + 1) * (n2 + 1))
            throw UsageError("tau field sequences do not match n1, n2");
        return t;
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed tau field: ") + e.what());
    }
}

void write_tau_csv(std::ostream& os, const liouville::TauField& f) {
    os << std::setprecision(17) << "x1,x2,re_tau,im_tau\n";
    for (int a = 0; a <= f.n1; ++a)
        for (int b = 0; b <= f.n2; ++b) os << a << ',' << b << ',' << f.at(a, b).real() << ',' << f.at(a, b).imag() << '\n';
}

json sigma_to_json(const SigmaFile& s) {
    const auto& f = s.field;
    return {{"n_sites", f.n_sites},
            {"T", f.T},
            {"periodic", f.periodic},
            {"a1", to_json(s.params.a1)},
            {"a2", to_json(s.params.a2)},
            {"b1", to_json(s.params.b1)},
            {"b2", to_json(s.params.b2)},
            {"sigma", to_json(f.sigma)}};
}

SigmaFile sigma_from_json(const json& j) {
    try {
        SigmaFile s;
        s.field.n_sites = j.at("n_sites").get<int>();
        s.field.T = j.at("T").get<int>();
        s.field.periodic = j.value("periodic", true);
        s.field.sigma = complex_vector(j.at("sigma"));
        s.params.a1 = complex_from_json(j.at("a1"));
        s.params.a2 = complex_from_json(j.at("a2"));
        s.params.b1 = complex_from_json(j.at("b1"));
        s.params.b2 = complex_from_json(j.at("b2"));
        s.field.validate();
        return s;
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed sigma field: ") + e.what());
    } catch (const InvalidPoint& e) {
        throw UsageError(std::string("invalid sigma field: ") + e.what());
    }
}

json report_to_json(const suites::Report& r, std::uint64_t seed) {
    json res = json::object(), tol = json::object();
    for (const auto& [k, v] : r.residuals) res[k] = std::isfinite(v) ? json(v) : json(nullptr);
    for (const auto& [k, v] : r.tolerances) tol[k] = v;
    json out = {{"suite", r.suite}, {"residuals", res}, {"tolerances", tol}, {"pass", r.pass()},
                {"failures", r.failures()}, {"skipped", r.skipped}, {"notes", r.notes}, {"seed", seed}};
    return out;
}

void write_report_csv(std::ostream& os, const suites::Report& r) {
    os << std::setprecision(17) << "name,residual,tolerance,status\n";
    for (const auto& [k, v] : r.residuals) {
        const auto it = r.tolerances.find(k);
        os << k << ',' << v << ',';
        if (it == r.tolerances.end()) {
            os << ",info\n";
        } else {
            os << it->second << ',' << (v <= it->second ? "pass" : "fail") << '\n';
        }
    }
    for (const auto& [k, why] : r.skipped) os << k << ",,,skipped\n";
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
    if (!out) throw UsageError("write failed for " + path);
}

}  // namespace yb::cli
