#ifndef DDO_OPERATORS_HPP
#define DDO_OPERATORS_HPP

#include "ddo/model.hpp"

#include <functional>
#include <utility>

namespace ddo {

enum class LadderDir { plus, minus };

/// First-order radial ladder operator b_p^{+-} = -+ f d/dp + g p - k/p,
/// with f = 1 + beta0 p^2. b_p^+ and b_p^- are formal adjoints under the
/// weight 1/f(p).
struct LadderCoeffs {
    double g;
    double k;
    double beta0;

    static LadderCoeffs from_channel(const Channel& c)
    {
        return LadderCoeffs{c.g, c.k, c.params.beta0()};
    }
};

// A radial function with an analytic first derivative.
struct RadialFn {
    std::function<double(double)> value;
    std::function<double(double)> deriv;
};

// Same with a second derivative, for operator composition and h0.
struct RadialFn2 {
    std::function<double(double)> value;
    std::function<double(double)> deriv;
    std::function<double(double)> deriv2;
};

// (b_p^{+-} fn)(p) = (-+ f fn' + (g p - k/p) fn)(p), p > 0.
double apply_ladder(LadderDir dir, const LadderCoeffs& coeffs, const RadialFn& fn,
                    double p);

// Value and derivative of b_p^{+-} fn at p; needs fn''.
std::pair<double, double> apply_ladder_with_deriv(LadderDir dir,
                                                  const LadderCoeffs& coeffs,
                                                  const RadialFn2& fn, double p);

// 4th-order central differences with step h = 1e-4 * p, for cross-validating
// the analytic-derivative path.
RadialFn make_fd_derivative(std::function<double(double)> value);

/// Second-order partner Hamiltonian h0 = b_p^+ b_p^- written out:
/// -(f d/dp)^2 + p2_coeff p^2 + inv_p2_coeff / p^2 + constant.
struct H0Coeffs {
    double p2_coeff;      // g(g - beta0)
    double inv_p2_coeff;  // k(k - 1)
    double constant;      // -2gk - g - beta0 k
    double beta0;

    static H0Coeffs from_ladder(double g, double k, double beta0);
    // b_p^- b_p^+: the SUSY partner of h0.
    static H0Coeffs partner(double g, double k, double beta0);

    double potential(double p) const
    {
        return p2_coeff * p * p + inv_p2_coeff / (p * p) + constant;
    }
};

// Applies -f (f fn')' + potential(p) fn at p.
double h0_matrix_free(const H0Coeffs& coeffs, const RadialFn2& fn, double p);

/// One shape-invariance step: parameters of the next hierarchy member and
/// the energy increment eps_{i+1}.
struct SiStep {
    double g_next;   // g + beta0
    double k_next;   // k + 1
    double eps_next; // g_{i+1}(2k_{i+1}+1) - g_i(2k_i-1) + beta0(k_{i+1}+k_i)
};

// Requires k > 0 and g/beta0 > 1/2 (the conditions under which the
// hierarchy members have normalizable ground states).
SiStep si_step(double g, double k, double beta0);

/// Re-factorized form h0 = b_p^+(g_eff,k_eff) b_p^-(g_eff,k_eff) + e0 for
/// the broken-SUSY regimes, where e0 > 0 is the ground-state eigenvalue.
struct Refactorization {
    double g_eff;
    double k_eff;
    double e0;
};

// VeryLargeJ: g' = -g + beta0, e0 = (2k+1)(-2g+beta0).
// SMinus:     k' = 1 - k,      e0 = 2(2g+beta0)(j+1) = (2g+beta0)(1-2k).
// SmallJ input is a contract error (no re-factorization needed there).
Refactorization refactorize(Regime regime, double g, double k, double beta0);

} // namespace ddo

#endif
