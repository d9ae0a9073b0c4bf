#pragma once

// Command implementations behind the gcm3 CLI. Exit codes are disjoint and
// stable:
//   0 success
//   2 bad flags or unparseable input
//   3 fixture diff found discrepancies
//   4 unbounded twist search without a cap
//   5 singular linear system
//   6 search bound exhausted
//   7 no admissible root / no solution
//   8 degenerate render input
// stdout carries data, stderr diagnostics.

#include <optional>
#include <string>

namespace gcm3::cli {

struct Config {
    long cross_bound = 14;
    long lambda_cap = 12;
    long coeff_bound = 40;
    long max_sides = 20;
    std::string format = "text";  // text | csv | json
    std::string out;              // file (or directory for `pipeline`)
};

int cmd_enumerate(const Config& cfg, const std::string& delta2, const std::string& diff_path);
int cmd_twists(const Config& cfg, const std::string& gram, std::optional<long> cap);
int cmd_weyl(const Config& cfg, const std::string& triple, const std::string& lambda);
int cmd_extend(const Config& cfg, const std::string& triple, const std::string& lambda,
               const std::string& in_path);
int cmd_pipeline(const Config& cfg);
int cmd_render(const Config& cfg, const std::string& in_path);

// "rho = 2*a + 9/2*b + 5*c; (rho,rho) = -23/2"
std::string weyl_line(const std::string& coords_abc, const std::string& norm);

}  // namespace gcm3::cli
