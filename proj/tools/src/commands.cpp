#include "commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "io.hpp"
#include "yb/classical/map.hpp"
#include "yb/errors.hpp"
#include "yb/suites/suites.hpp"

namespace yb::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitTolerance = 2;

struct Common {
    std::uint64_t seed = 1;
    std::optional<std::uint64_t> seed_flag;
    int trials = 0;
    std::string out;
    std::string format = "json";
    std::vector<std::string> tol;
};

std::uint64_t resolve_seed(const Common& c) {
    if (c.seed_flag) return *c.seed_flag;
    if (const char* env = std::getenv("YB_SEED"); env && *env) {
        try {
            size_t used = 0;
            const auto v = std::stoull(env, &used);
            if (env[used] != '\0') throw std::invalid_argument("trailing");
            return v;
        } catch (const std::logic_error&) {
            throw UsageError(std::string("YB_SEED is not an unsigned integer: ") + env);
        }
    }
    return 1;
}

std::map<std::string, double> parse_tolerances(const std::vector<std::string>& items) {
    std::map<std::string, double> out;
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("--tol expects name=value, got '" + item + "'");
        try {
            size_t used = 0;
            const std::string rhs = item.substr(eq + 1);
            const double v = std::stod(rhs, &used);
            if (used != rhs.size() || !(v >= 0.0)) throw std::invalid_argument("bad");
            out[item.substr(0, eq)] = v;
        } catch (const std::logic_error&) {
            throw UsageError("bad tolerance value in '" + item + "'");
        }
    }
    return out;
}

int finish(suites::Report& rep, const Common& c) {
    const auto unknown = rep.override_tolerances(parse_tolerances(c.tol));
    if (!unknown.empty()) {
        std::string names;
        for (const auto& n : unknown) names += " " + n;
        throw UsageError("--tol names not in the " + rep.suite + " report:" + names);
    }
    std::ostringstream os;
    if (c.format == "csv") {
        write_report_csv(os, rep);
    } else {
        os << report_to_json(rep, c.seed).dump(2) << '\n';
    }
    if (c.out.empty()) std::cout << os.str();
    else write_text_file(c.out, os.str());

    const auto failed = rep.failures();
    for (const auto& name : failed) {
        const auto it = rep.residuals.find(name);
        const auto tol = rep.tolerances.find(name);
        std::cerr << "FAIL " << rep.suite << '.' << name << " residual " << it->second;
        if (tol != rep.tolerances.end()) std::cerr << " > " << tol->second;
        std::cerr << '\n';
    }
    return failed.empty() ? kExitOk : kExitTolerance;
}

int parse_two_j(const std::string& spin) {
    double j = 0.0;
    const auto slash = spin.find('/');
    try {
        if (slash != std::string::npos) {
            const double num = std::stod(spin.substr(0, slash)), den = std::stod(spin.substr(slash + 1));
            j = num / den;
        } else {
            j = std::stod(spin);
        }
    } catch (const std::logic_error&) {
        throw UsageError("--spin expects 1/2, 1, 3/2, ...");
    }
    const double two_j = 2.0 * j;
    if (!(two_j > 0.5) || std::abs(two_j - std::round(two_j)) > 1e-12)
        throw UsageError("--spin must be a positive half-integer");
    return static_cast<int>(std::lround(two_j));
}

int pairs_from_sites(int sites) {
    if (sites < 2 || sites % 2 != 0) throw UsageError("--sites must be an even number >= 2");
    return sites / 2;
}

std::vector<cplx> trace_lambdas(int count) {
    // Geometric in (1, 2], rotated off the real axis.
    std::vector<cplx> out;
    const cplx phase = std::polar(1.0, 0.3);
    for (int k = 1; k <= count; ++k) out.push_back(std::pow(2.0, static_cast<double>(k) / count) * phase);
    return out;
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

struct EvolveArgs {
    int sites = 4;
    int steps = 10;
    int lambdas = 8;
    std::string z1 = "1.3,0.2", z2 = "0.8,-0.3";
    std::string state, states_csv = "evolve_states.csv", traces_csv = "evolve_traces.csv", final_state;
    bool z1_set = false, z2_set = false, sites_set = false;
};

int run_evolve(const EvolveArgs& a, Common& c) {
    if (a.steps < 0) throw UsageError("--steps must be >= 0");
    lattice::ChainState s;
    if (!a.state.empty()) {
        s = state_from_json(read_json_file(a.state));
        if (a.sites_set && s.sites() != a.sites) throw UsageError("--sites disagrees with the state file");
        if (a.z1_set && parse_complex(a.z1) != s.z1) throw UsageError("--z1 disagrees with the state file");
        if (a.z2_set && parse_complex(a.z2) != s.z2) throw UsageError("--z2 disagrees with the state file");
    } else {
        num::Sampler rng(c.seed);
        s = suites::random_chain(rng, pairs_from_sites(a.sites), parse_complex(a.z1), parse_complex(a.z2));
    }

    const auto lambdas = trace_lambdas(a.lambdas);
    std::vector<cplx> t0, tb0;
    for (const cplx l : lambdas) {
        t0.push_back(lattice::monodromy_trace(s, l, lattice::TraceKind::t));
        tb0.push_back(lattice::monodromy_trace(s, l, lattice::TraceKind::tbar));
    }
    std::vector<cplx> cas0;
    for (int i = 0; i < s.sites(); ++i) cas0.push_back(classical::casimir(classical::weyl_embed(s.site(i))));

    std::ostringstream states, traces;
    states << std::setprecision(17) << "t,site,re_u,im_u,re_v,im_v\n";
    traces << std::setprecision(17) << "t,lambda_index,re_lambda,im_lambda,re_t,im_t,re_tbar,im_tbar\n";
    double drift = 0.0, drift_bar = 0.0, cas = 0.0;
    const cplx z1 = s.z1, z2 = s.z2;
    for (int t = 0;; ++t) {
        for (int i = 0; i < s.sites(); ++i)
            states << t << ',' << i + 1 << ',' << s.u[i].real() << ',' << s.u[i].imag() << ',' << s.v[i].real() << ','
                   << s.v[i].imag() << '\n';
        for (size_t k = 0; k < lambdas.size(); ++k) {
            const cplx tv = lattice::monodromy_trace(s, lambdas[k], lattice::TraceKind::t);
            const cplx tb = lattice::monodromy_trace(s, lambdas[k], lattice::TraceKind::tbar);
            traces << t << ',' << k << ',' << lambdas[k].real() << ',' << lambdas[k].imag() << ',' << tv.real() << ','
                   << tv.imag() << ',' << tb.real() << ',' << tb.imag() << '\n';
            drift = std::max(drift, rel(tv, t0[k]));
            drift_bar = std::max(drift_bar, rel(tb, tb0[k]));
        }
        for (int i = 0; i < s.sites(); ++i)
            cas = std::max(cas, rel(classical::casimir(classical::weyl_embed(s.site(i))), cas0[i]));
        if (t == a.steps) break;
        try {
            s = lattice::evolve_step(s);
        } catch (const EvolutionSingularity& e) {
            throw std::runtime_error("evolution hit a singular cell at step " + std::to_string(t + 1) + ": " + e.what());
        }
    }

    if (!a.states_csv.empty()) write_text_file(a.states_csv, states.str());
    if (!a.traces_csv.empty()) write_text_file(a.traces_csv, traces.str());
    if (!a.final_state.empty()) write_text_file(a.final_state, state_to_json(s).dump(2) + "\n");

    suites::Report rep;
    rep.suite = "evolve";
    rep.add("trace_drift", drift, 1e-8);
    rep.add("tbar_drift", drift_bar, 1e-8);
    rep.add("site_casimir", cas, 1e-12);
    rep.add("z_conservation", std::max(std::abs(s.z1 - z1), std::abs(s.z2 - z2)), 0.0);
    rep.residuals["info_steps"] = a.steps;
    rep.residuals["info_sites"] = s.sites();
    return finish(rep, c);
}

struct LiouvilleArgs {
    int n1 = 16, n2 = 16;
    bool n1_set = false, n2_set = false;
    std::string params, field = "tau_field.json", sigma, csv;
};

TauFile build_from_args(const LiouvilleArgs& a, std::uint64_t seed) {
    if (a.n1 < 1 || a.n2 < 1) throw UsageError("--n1 and --n2 must be positive");
    num::Sampler rng(seed);
    auto in = suites::random_liouville_inputs(rng, a.n1, a.n2);
    if (!a.params.empty()) {
        const auto j = read_json_file(a.params);
        try {
            if (j.contains("alpha")) in.alpha = complex_vector(j["alpha"]);
            if (j.contains("beta")) in.beta = complex_vector(j["beta"]);
            if (j.contains("phi")) in.phi = complex_vector(j["phi"]);
            if (j.contains("gamma")) in.gamma = complex_vector(j["gamma"]);
            if (j.contains("f0")) in.f0 = complex_from_json(j["f0"]);
            if (j.contains("g0")) in.g0 = complex_from_json(j["g0"]);
            if (j.contains("z1")) in.z1 = complex_from_json(j["z1"]);
            if (j.contains("z2")) in.z2 = complex_from_json(j["z2"]);
        } catch (const json::exception& e) {
            throw UsageError(std::string("malformed params: ") + e.what());
        }
    }
    const auto n1 = static_cast<size_t>(a.n1), n2 = static_cast<size_t>(a.n2);
    if (in.alpha.size() != n1 || in.beta.size() != n2 || in.phi.size() != n1 + 1 || in.gamma.size() != n2 + 1)
        throw UsageError("params need n1 alpha, n2 beta, n1+1 phi and n2+1 gamma entries");
    TauFile t;
    t.field = liouville::build_tau(in.alpha, in.beta, in.phi, in.gamma, a.n1, a.n2, in.f0, in.g0);
    t.z1 = in.z1;
    t.z2 = in.z2;
    t.f0 = in.f0;
    t.g0 = in.g0;
    return t;
}

void write_sigma(const TauFile& t, const std::string& path) {
    const auto lat = liouville::uv_from_tau(t.field, t.z1, t.z2);
    const int n_pairs = std::min(3, lat.n1 - 1), offset = n_pairs + 1, T = lat.n2 - offset;
    if (n_pairs < 1 || T < 1) throw UsageError("field too small for a sigma export (need n1 >= 2, n2 >= 3)");
    const auto grid = liouville::v_grid_from_tau(lat, n_pairs, T, offset);
    SigmaFile s;
    s.params = action::LagrangianParams::from_z(t.z1, t.z2, {0.2, 0.1}, {-0.1, 0.05});
    s.field = action::sigma_from_v(grid, s.params);
    write_text_file(path, sigma_to_json(s).dump(2) + "\n");
}

int run_liouville(const std::string& mode, const LiouvilleArgs& a, Common& c) {
    TauFile t;
    if (mode == "build") {
        t = build_from_args(a, c.seed);
        write_text_file(a.field, tau_to_json(t).dump(2) + "\n");
    } else {
        t = tau_from_json(read_json_file(a.field));
        if ((a.n1_set && a.n1 != t.field.n1) || (a.n2_set && a.n2 != t.field.n2))
            throw UsageError("--n1/--n2 disagree with " + a.field);
    }
    if (!a.csv.empty()) {
        std::ostringstream os;
        write_tau_csv(os, t.field);
        write_text_file(a.csv, os.str());
    }
    if (!a.sigma.empty()) write_sigma(t, a.sigma);
    auto rep = suites::liouville_suite(t.field, t.z1, t.z2);
    rep.suite = "liouville." + mode;
    return finish(rep, c);
}

int run_action(const std::string& path, Common& c) {
    const auto s = sigma_from_json(read_json_file(path));
    const auto res = action::action_and_gradient(s.field, s.params);
    liouville::VGrid g;
    g.n_sites = s.field.n_sites;
    g.T = s.field.T;
    g.periodic = s.field.periodic;
    g.v.resize(s.field.sigma.size());
    for (int k = 1; k <= g.n_sites; ++k)
        for (int t = 0; t <= g.T; ++t) g.at(k, t) = std::exp(s.field.at(k, t) - (k % 2 == 1 ? s.params.b1 : s.params.b2));

    suites::Report rep;
    rep.suite = "action";
    rep.add("grad_norm", res.grad_norm, 1e-8);
    rep.add("eom_residual", action::eom_residual(g, s.params.z1(), s.params.z2()), 1e-10);
    rep.residuals["info_grad_norm_raw"] = res.grad_norm_raw;
    rep.residuals["info_re_action"] = res.action.real();
    rep.residuals["info_im_action"] = res.action.imag();
    return finish(rep, c);
}

void add_common(CLI::App* app, Common& c, bool trials) {
    app->add_option("--seed", c.seed_flag, "RNG seed (falls back to YB_SEED, then 1)");
    app->add_option("--out", c.out, "report path (stdout if absent)");
    app->add_option("--format", c.format, "report format")->check(CLI::IsMember({"json", "csv"}));
    app->add_option("--tol", c.tol, "tolerance override name=value (repeatable)")->take_all();
    if (trials) app->add_option("--trials", c.trials, "random trials per family")->check(CLI::PositiveNumber);
}

}  // namespace

int run_command(int argc, char** argv) {
    CLI::App app{"Yang-Baxter maps, lattice evolution and quantum dilogarithm checks"};
    app.require_subcommand(1);
    Common c;

    auto* check = app.add_subcommand("check", "run a verification suite");
    check->require_subcommand(1);
    auto* classical_cmd = check->add_subcommand("classical", "classical maps and lattice");
    add_common(classical_cmd, c, true);
    std::string spin = "1/2";
    int q_sites = 4;
    auto* quantum_cmd = check->add_subcommand("quantum", "U_q(sl2) reps, R-matrices and chain");
    add_common(quantum_cmd, c, true);
    quantum_cmd->add_option("--spin", spin, "spin j (1/2, 1, 3/2, ...)");
    quantum_cmd->add_option("--sites", q_sites, "chain sites 2N");
    auto* qdilog_cmd = check->add_subcommand("qdilog", "quantum dilogarithm and kernel identities");
    add_common(qdilog_cmd, c, true);

    EvolveArgs ev;
    auto* evolve = app.add_subcommand("evolve", "simulate the chain and track conserved traces");
    add_common(evolve, c, false);
    auto* o_sites = evolve->add_option("--sites", ev.sites, "sites 2N");
    evolve->add_option("--steps", ev.steps, "time steps");
    auto* o_z1 = evolve->add_option("--z1", ev.z1, "odd-site parameter RE,IM");
    auto* o_z2 = evolve->add_option("--z2", ev.z2, "even-site parameter RE,IM");
    evolve->add_option("--state", ev.state, "initial state JSON (random if absent)");
    evolve->add_option("--states", ev.states_csv, "per-step state CSV");
    evolve->add_option("--traces", ev.traces_csv, "conserved-trace CSV");
    evolve->add_option("--final", ev.final_state, "final state JSON");
    evolve->add_option("--lambdas", ev.lambdas, "spectral samples")->check(CLI::PositiveNumber);

    LiouvilleArgs la;
    std::string lmode;
    auto* liou = app.add_subcommand("liouville", "tau-function solutions of the discrete Liouville equation");
    add_common(liou, c, false);
    liou->add_option("mode", lmode, "build or verify")->required()->check(CLI::IsMember({"build", "verify"}));
    auto* o_n1 = liou->add_option("--n1", la.n1, "extent in x1");
    auto* o_n2 = liou->add_option("--n2", la.n2, "extent in x2");
    liou->add_option("--params", la.params, "JSON with alpha, beta, phi, gamma, f0, g0, z1, z2");
    liou->add_option("--field", la.field, "tau field JSON (written by build, read by verify)");
    liou->add_option("--sigma", la.sigma, "also write the induced sigma field JSON");
    liou->add_option("--csv", la.csv, "also write x1,x2,Re tau,Im tau");

    std::string amode, afield;
    auto* act = app.add_subcommand("action", "stationarity of the discrete action");
    add_common(act, c, false);
    act->add_option("mode", amode, "verify")->required()->check(CLI::IsMember({"verify"}));
    act->add_option("--field", afield, "sigma field JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        c.seed = resolve_seed(c);
        if (*classical_cmd) {
            suites::ClassicalConfig cfg;
            cfg.seed = c.seed;
            if (c.trials > 0) cfg.trials = c.trials;
            auto rep = suites::classical_suite(cfg);
            return finish(rep, c);
        }
        if (*quantum_cmd) {
            suites::QuantumConfig cfg;
            cfg.seed = c.seed;
            cfg.two_j = parse_two_j(spin);
            cfg.n_pairs = pairs_from_sites(q_sites);
            if (c.trials > 0) cfg.rll_samples = c.trials;
            auto rep = suites::quantum_suite(cfg);
            return finish(rep, c);
        }
        if (*qdilog_cmd) {
            suites::QdilogConfig cfg;
            cfg.seed = c.seed;
            if (c.trials > 0) cfg.three_leg_samples = c.trials;
            auto rep = suites::qdilog_suite(cfg);
            return finish(rep, c);
        }
        if (*evolve) {
            ev.sites_set = o_sites->count() > 0;
            ev.z1_set = o_z1->count() > 0;
            ev.z2_set = o_z2->count() > 0;
            return run_evolve(ev, c);
        }
        if (*liou) {
            la.n1_set = o_n1->count() > 0;
            la.n2_set = o_n2->count() > 0;
            return run_liouville(lmode, la, c);
        }
        if (*act) return run_action(afield, c);
    } catch (const UsageError& e) {
        std::cerr << "yb: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "yb: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace yb::cli
