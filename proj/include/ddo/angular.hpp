#ifndef DDO_ANGULAR_HPP
#define DDO_ANGULAR_HPP

#include "ddo/model.hpp"
#include "ddo/report.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace ddo {

using complexd = std::complex<double>;
using Spinor2 = std::array<complexd, 2>;  // components along chi_{+1/2}, chi_{-1/2}
using Matrix2 = std::array<std::array<complexd, 2>, 2>;

// Condon-Shortley Clebsch-Gordan coefficient <l mu, 1/2 sigma/2 | j m> for
// l (x) 1/2 coupling, in closed form. two_sigma is +-1; two_m = 2 mu +
// two_sigma and two_j = 2l +- 1 are required, otherwise returns 0.
double cg_coefficient(int l, int mu, int two_sigma, int two_j, int two_m);

// Y_{l,m}(theta, phi) with the Condon-Shortley phase.
complexd spherical_harmonic(int l, int m, double theta, double phi);

// sigma . p_hat for the unit direction (theta, phi); Hermitian, traceless,
// squares to the identity.
Matrix2 sigma_p_matrix(double theta, double phi);

/// Spinor function as a finite sum of Y_{l,mu} chi_{sigma} terms; the form
/// every object in this module reduces to, and the representation on which
/// sigma.L acts in closed form through the L+- ladder.
struct SpinorExpansion {
    struct Term {
        complexd coeff;
        int l;
        int mu;
        int two_sigma;  // +-1
    };
    std::vector<Term> terms;

    Spinor2 eval(double theta, double phi) const;
};

// (sigma.L + 1) applied termwise via the exact ladder action.
SpinorExpansion apply_sigma_dot_l_plus_one(const SpinorExpansion& fn);

/// Spin spherical harmonic: the CG-coupled combination of Y_{l,mu} and a
/// spinor with l = j - s, an eigenfunction of sigma.L + 1 with eigenvalue
/// s(2j+1).
struct SpinSphericalHarmonic {
    Spin s;
    int two_j;
    int two_m;  // |two_m| <= two_j, odd
    int l;

    SpinSphericalHarmonic(Spin s, int two_j, int two_m);

    SpinorExpansion expansion() const;
    Spinor2 eval(double theta, double phi) const;
};

// <F|G> over the sphere by Gauss-Legendre x uniform-phi product quadrature,
// exact for the band-limited functions used here.
complexd sphere_inner_product(const SpinorExpansion& f, const SpinorExpansion& g,
                              int l_max);

// Pointwise verification at sample_count random directions (deterministic
// seed) of: the sigma.L+1 eigenvalue s(2j+1); sigma_p Y_{s,j,m} = -Y_{-s,j,m};
// the anticommutator {sigma_p, sigma.L+1} Y = 0; sigma_p^2 = I; and the unit
// norm of the harmonic.
VerificationReport verify_angular_identities(Spin s, int two_j, int two_m,
                                             int sample_count,
                                             std::uint64_t seed = 0x5eed);

} // namespace ddo

#endif
