#ifndef DDO_SUITE_HPP
#define DDO_SUITE_HPP

#include "ddo/model.hpp"
#include "ddo/oracle.hpp"
#include "ddo/report.hpp"

#include <vector>

namespace ddo {

/// Assembled verification sweeps behind `ddo verify`. Each returns a report
/// with one entry per checked invariant; tolerances are the documented ones
/// (1e-8 normalization/orthogonality, 1e-9 coupled-equation residuals,
/// 1e-12 SI partial sums, `tol` for oracle-vs-formula comparisons).
struct SweepChannel {
    Spin s;
    int two_j;
    DeformationParams params;
};

// Default sweep: (s = +-1/2, two_j = 1, 3) at the given params, plus a fixed
// very-large-j reference channel (omega=1, beta=0.01, beta_prime=0,
// two_j=201) so all three regimes are always exercised.
std::vector<SweepChannel> default_sweep(const DeformationParams& params);

// Normalization, distinct-n orthogonality, coupled radial equations,
// finite <p^2>, and the never-normalizable partner candidate.
VerificationReport verify_radial(const std::vector<SweepChannel>& sweep,
                                 int n_max, int quad_order);

// SI partial sums vs the closed form, re-factorization ground energies,
// ladder adjointness, the SI operator identity, and the grid oracle
// (spectrum match, zero-mode/broken-SUSY split, partner degeneracy).
VerificationReport verify_susy(const std::vector<SweepChannel>& sweep, int n_max,
                               double tol, const GridSpec& grid);

// Appendix-1 identities for every (s, j <= two_j_max/2, m).
VerificationReport verify_angular_all(int two_j_max, int sample_count);

} // namespace ddo

#endif
