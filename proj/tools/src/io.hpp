#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "yb/action/lagrangian.hpp"
#include "yb/classical/lattice.hpp"
#include "yb/liouville/tau.hpp"
#include "yb/suites/report.hpp"

namespace yb::cli {

using json = nlohmann::json;
using num::cplx;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// "RE,IM" or a bare real.
cplx parse_complex(const std::string& text);

json to_json(cplx z);
cplx complex_from_json(const json& j);
json to_json(const std::vector<cplx>& zs);
std::vector<cplx> complex_vector(const json& j);

json state_to_json(const lattice::ChainState& s);
lattice::ChainState state_from_json(const json& j);

struct TauFile {
    liouville::TauField field;
    cplx z1{1.0}, z2{1.0}, f0{0.0}, g0{0.0};
};

json tau_to_json(const TauFile& t);
TauFile tau_from_json(const json& j);
void write_tau_csv(std::ostream& os, const liouville::TauField& f);

struct SigmaFile {
    action::SigmaField field;
    action::LagrangianParams params;
};

json sigma_to_json(const SigmaFile& s);
SigmaFile sigma_from_json(const json& j);

json report_to_json(const suites::Report& r, std::uint64_t seed);
void write_report_csv(std::ostream& os, const suites::Report& r);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace yb::cli
