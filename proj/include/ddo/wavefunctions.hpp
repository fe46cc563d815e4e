#ifndef DDO_WAVEFUNCTIONS_HPP
#define DDO_WAVEFUNCTIONS_HPP

#include "ddo/model.hpp"
#include "ddo/operators.hpp"

#include <vector>

namespace ddo {

/// Algebraic map between radial momentum p in (0, inf) and the compact
/// variable z in (-1, 1):
///   z = (beta0 p^2 - 1) / (1 + beta0 p^2),  p = sqrt((1+z)/(beta0(1-z))),
/// under which f(p) = 1 + beta0 p^2 = 2/(1-z).
struct GridMap {
    double beta0;

    double p_to_z(double p) const;
    double z_to_p(double z) const;
    double f_of_p(double p) const { return 1.0 + beta0 * p * p; }
    double f_of_z(double z) const { return 2.0 / (1.0 - z); }
};

double p_to_z(double p, double beta0);
double z_to_p(double z, double beta0);

// Orthonormalization constant A^{(n)}(a,b) of the weighted Jacobi basis:
// A = sqrt(2 beta0^{b+1} (a+b+2n+1) n! G(a+b+n+1) / (G(a+n+1) G(b+n+1))).
// Throws std::domain_error when a Gamma argument is nonpositive.
double normalization_coeff(int n, double a, double b, double beta0);
double log_normalization_coeff(int n, double a, double b, double beta0);

// Unnormalized radial profile p^{b+1/2} f^{-(a+b+1)/2} P_n^{(a,b)}(z(p)) and
// its p-derivative. Power factors are assembled in log space, so large
// Jacobi parameters (b = j of order 100) stay representable.
double radial_profile(int n, double a, double b, double beta0, double p);
double radial_profile_deriv(int n, double a, double b, double beta0, double p);

/// One bound state of a channel: Jacobi data for the large component R1 and
/// the small component R2tilde, orthonormalization constants, and the
/// physical coefficients fixed by the combined normalization.
/// Conventions: N1 > 0; the small-component sign is the explicit
/// -epsilon*sigma prefactor of R2 (and R2 = -R2tilde).
struct RadialState {
    Channel channel;
    int n;
    int sigma;

    double a, b;                 // R1 Jacobi parameters
    double a_tilde, b_tilde;     // R2tilde Jacobi parameters
    int n_tilde;                 // R2tilde degree; -1 means R2tilde == 0

    double e;                    // dimensionless eigenvalue (E^2-1)/omega^2
    double E;                    // sigma * sqrt(1 + omega^2 e)

    double A_n;                  // A^{(n)}(a,b); may underflow for huge j
    double A_tilde;              // A^{(n_tilde)}(a_tilde,b_tilde), 0 if n_tilde<0
    double log_A;                // logs actually used in evaluation
    double log_A_tilde;
    double N1;                   // sqrt((E+1)/(2E)) * A_n
    double N2_coeff;             // -eps*sigma*sqrt((E-1)/(2E)) * A_tilde

    double energy_factor1;       // sqrt((E+1)/(2E))
    double energy_factor2;       // eps*sigma*sqrt((E-1)/(2E)), sign of R2tilde

    // R1 ~ p^{-(a+1/2)} and R2tilde ~ p^{-(a_tilde+1/2)} as p -> inf.
    double r1_decay_exponent() const { return a + 0.5; }
    double r2_decay_exponent() const { return a_tilde + 0.5; }
};

// Throws NoBoundState for IntermediateJ channels and std::domain_error for
// the excluded (SmallJ, sigma=-1, n=0) state.
RadialState make_radial_state(const Channel& channel, int n, int sigma);

double eval_R1(const RadialState& state, double p);
double eval_R1_deriv(const RadialState& state, double p);
double eval_R2tilde(const RadialState& state, double p);
double eval_R2tilde_deriv(const RadialState& state, double p);
inline double eval_R2(const RadialState& state, double p)
{
    return -eval_R2tilde(state, p);
}

// Function-with-derivative views for operator application.
RadialFn r1_fn(const RadialState& state);
RadialFn r2tilde_fn(const RadialState& state);

// The e = 0 candidate for the partner Hamiltonian, p^{-k} f^{(g+beta0 k)/(2 beta0)}.
// Never normalizable: either the origin exponent -k or the tail slope g/beta0
// violates the respective condition for every physical channel.
struct PartnerGroundCandidate {
    RadialFn fn;
    double origin_exponent;  // -k
    double tail_slope;       // g/beta0 (d ln fn / d ln p as p -> inf)
    bool normalizable_at_origin() const { return origin_exponent > -0.5; }
    bool normalizable_at_infinity() const { return tail_slope < 0.5; }
};

PartnerGroundCandidate partner_ground_candidate(const Channel& channel);

struct WavefunctionSample {
    double p, z, r1, r2tilde, r2, weight;  // weight = 1/f(p)
};

std::vector<WavefunctionSample> sample_wavefunction(const RadialState& state,
                                                    double p_min, double p_max,
                                                    int count);

} // namespace ddo

#endif
