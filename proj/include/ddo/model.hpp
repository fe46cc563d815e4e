#ifndef DDO_MODEL_HPP
#define DDO_MODEL_HPP

#include <vector>

namespace ddo {

// Spin-orbit label s = +-1/2, encoded as +-1 so arithmetic stays exact.
enum class Spin : int { minus = -1, plus = +1 };

inline double spin_value(Spin s) { return static_cast<int>(s) * 0.5; }

// The deformation splits s = +1/2 channels into three ranges of j; s = -1/2
// is a single regime. IntermediateJ channels carry no bound states.
enum class Regime { SmallJ, IntermediateJ, VeryLargeJ, SMinus };

const char* regime_name(Regime r);

/// Global model knobs: oscillator frequency and the two deformation
/// parameters (units hbar = c = m = 1, beta and beta_prime are lengths^2).
/// gamma only enters the weight-function bookkeeping and is kept for
/// documentation parity; the radial scalar product is gamma-independent.
struct DeformationParams {
    double omega;
    double beta;
    double beta_prime;
    double gamma = 0.0;

    double beta0() const { return beta + beta_prime; }
    double alpha() const { return (gamma - beta_prime) / beta0(); }

    // omega > 0, beta >= 0, beta_prime >= 0, beta0 > 0 strictly: with both
    // deformations zero the z change of variables degenerates. The
    // nondeformed limit is taken at small but nonzero beta0.
    static DeformationParams make(double omega, double beta, double beta_prime,
                                  double gamma = 0.0);
};

/// One radial problem: quantum numbers (s, j) with the derived operator
/// parameters g = 1/omega - beta s(2j+1) and k = s(2j+1), the regime tag,
/// and the sign epsilon entering the compact spectrum/wavefunction forms
/// (+1 for SmallJ and SMinus, -1 for VeryLargeJ, 0 for IntermediateJ).
struct Channel {
    Spin s;
    int two_j;
    DeformationParams params;

    double j;  // two_j / 2
    int l;     // j - s
    double g;
    double k;
    Regime regime;
    int epsilon;
};

// Regime classification for (s, two_j). The three s = +1/2 predicates are
// strict inequalities; exact equality with a boundary throws
// BoundaryUnphysical.
Regime classify(Spin s, int two_j, const DeformationParams& params);

Channel derive_channel(Spin s, int two_j, const DeformationParams& params);

struct EnergySquared {
    double e;           // (E^2 - 1) / omega^2
    double E2_minus_1;  // omega^2 * e
};

// Closed-form eigenvalue of h0 for radial quantum number n >= 0. Throws
// NoBoundState for IntermediateJ channels.
EnergySquared energy_squared(int n, const Channel& channel);

// The three closed forms as pure functions of the operator parameters.
// Exposed so formula-level identities (omega -> -omega, SI partial sums)
// can be tested at arbitrary (g, k).
double energy_small_form(int n, double g, double k, double beta0);
double energy_vlarge_form(int n, double g, double k, double beta0);
double energy_sminus_form(int n, double g, double k, double beta0);

// Conventional Dirac oscillator reference: E^2 - 1 = 2 omega [N+1-s(2j+1)].
double nondeformed_reference(int N, Spin s, int two_j, double omega);

/// One bound state in the enumerated spectrum. N = 2n + l is the principal
/// quantum number; sigma = E/|E| is carried explicitly.
struct SpectrumEntry {
    Spin s;
    int two_j;
    double j;
    Regime regime;
    int n;
    int N;
    int sigma;
    double e;
    double E2_minus_1;
    double E;
};

struct SpectrumTable {
    std::vector<SpectrumEntry> entries;           // sorted by (|E|, j, s, n, sigma)
    std::vector<Channel> no_bound_state;          // IntermediateJ channels seen
};

// Enumerates both s values, both energy signs and all n <= n_max for every
// odd two_j <= two_j_max. (SmallJ, sigma=-1, n=0) is excluded: that solution
// of the SUSY pair is not a solution of the coupled radial equations.
SpectrumTable spectrum_table(const DeformationParams& params, int two_j_max,
                             int n_max);

} // namespace ddo

#endif
