#include <doctest.h>

#include <sstream>

#include "io.hpp"
#include "yb/suites/suites.hpp"

using namespace yb;
using namespace yb::cli;

TEST_CASE("complex flags") {
    CHECK(parse_complex("1.5,-2") == cplx(1.5, -2.0));
    CHECK(parse_complex("3") == cplx(3.0, 0.0));
    CHECK_THROWS_AS(parse_complex("1,x"), UsageError);
    CHECK_THROWS_AS(parse_complex("abc"), UsageError);
}

TEST_CASE("state JSON round trip is exact") {
    num::Sampler rng(1);
    const auto s = suites::random_chain(rng, 2, cplx(1.3, 0.2), cplx(0.8, -0.3));
    const auto text = state_to_json(s).dump();
    const auto back = state_from_json(json::parse(text));
    CHECK(back.n_pairs == 2);
    CHECK(back.u == s.u);
    CHECK(back.v == s.v);
    CHECK(back.z1 == s.z1);
    CHECK_THROWS_AS(state_from_json(json::parse(R"({"N":1,"z1":[1,0],"z2":[1,0],"u":[[1,0]],"v":[[1,0]]})")),
                    UsageError);
}

TEST_CASE("tau field JSON round trip") {
    num::Sampler rng(2);
    const auto in = suites::random_liouville_inputs(rng, 3, 4);
    TauFile t;
    t.field = liouville::build_tau(in.alpha, in.beta, in.phi, in.gamma, 3, 4, in.f0, in.g0);
    t.z1 = in.z1;
    const auto back = tau_from_json(json::parse(tau_to_json(t).dump()));
    CHECK(back.field.tau == t.field.tau);
    CHECK(back.z1 == t.z1);
    std::ostringstream os;
    write_tau_csv(os, back.field);
    const auto csv = os.str();
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 4 * 5);
}

TEST_CASE("report JSON carries tolerances and verdict") {
    suites::Report r;
    r.suite = "x";
    r.add("a", 1e-3, 1e-2);
    r.add("b", 0.5, 1e-2);
    r.residuals["info_c"] = 7.0;
    const auto j = report_to_json(r, 9);
    CHECK(j["pass"] == false);
    CHECK(j["failures"].size() == 1);
    CHECK(j["seed"] == 9);
    CHECK(j["tolerances"].size() == 2);
    CHECK(r.override_tolerances({{"b", 1.0}, {"zz", 1.0}}) == std::vector<std::string>{"zz"});
    CHECK(r.pass());
}
