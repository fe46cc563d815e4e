#ifndef DDO_CLI_HPP
#define DDO_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ddo::cli {

/// Fully-resolved run configuration; echoed verbatim (defaults included) in
/// every output header. Floats are serialized as %.12e, so identical configs
/// produce byte-identical output.
struct RunConfig {
    std::string command;          // spectrum | classify | wavefunction | verify | oracle
    double omega = 1.0;
    double beta = 0.01;           // reference deformation; beta0 = 0 is rejected
    double beta_prime = 0.01;
    double gamma = 0.0;

    int two_j = 0;                // 0 = not set
    char s = 0;                   // '+', '-', 0 = not set
    int n = 0;
    int sigma = 1;
    int two_j_max = 7;
    int n_max = 5;

    std::string format = "json";  // json | csv
    std::string output;           // empty = stdout

    std::string scope = "all";    // verify: radial | angular | susy | all
    double tol = 1e-4;
    int grid_size = 2000;
    int fd_order = 2;

    double p_min = 0.0;           // 0 = auto (0.01/sqrt(beta0))
    double p_max = 0.0;           // 0 = auto (100/sqrt(beta0))
    int samples = 200;

    int quad_order = 256;         // resolved from DDO_QUAD_ORDER if set
};

// Exit codes: 0 success / all checks pass, 1 invalid flags or validation
// failure, 2 bound-state request in the intermediate-j range, 3 failed
// verification checks.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv-style arguments (without argv[0]) and dispatches to run().
int main_with_args(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err);

} // namespace ddo::cli

#endif
