#ifndef DDO_QUADRATURE_HPP
#define DDO_QUADRATURE_HPP

#include "ddo/wavefunctions.hpp"

#include <functional>
#include <string>
#include <vector>

namespace ddo {

enum class QuadScheme { gauss_legendre_z, gauss_chebyshev_z };

/// Quadrature for the radial scalar product int_0^inf dp/f u v, integrated in
/// z through dp/f = dz / (2 sqrt(beta0) sqrt(1-z^2)). Convergence is
/// certified by order doubling, not claimed exactness: the induced weights
/// carry half-integer and irrational exponents.
struct QuadratureSpec {
    double beta0;
    int order = 256;
    QuadScheme scheme = QuadScheme::gauss_legendre_z;
};

struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Nodes/weights on (-1,1); tables are cached per order and immutable.
const GaussRule& gauss_legendre_rule(int order);
GaussRule gauss_chebyshev_rule(int order);

struct IntegralResult {
    double value;
    double error_estimate;  // order-doubling difference
};

// <u|v> = int_0^inf dp/f(p) u(p) v(p). Throws DivergenceSuspected when the
// order-doubled result disagrees by more than 1e-4 relative.
IntegralResult inner_product(const std::function<double(double)>& u,
                             const std::function<double(double)>& v,
                             const QuadratureSpec& spec);

// General weighted integral int_0^inf dp/f w(p); same doubling contract.
IntegralResult integrate_dp_over_f(const std::function<double(double)>& w,
                                   const QuadratureSpec& spec);

/// <p^2> of a bound state, or a divergence tag naming the offending
/// component. The decision is structural: the analytic tail slope of each
/// component is checked against the -1/2 threshold before any integration.
struct P2Result {
    bool finite;
    double value;            // valid iff finite
    double error_estimate;   // valid iff finite
    std::string offending_component;  // "R1" or "R2tilde" when divergent
};

P2Result p2_expectation(const RadialState& state, const QuadratureSpec& spec);

// d<p^2> integrand converges at infinity iff the component's log-log slope
// is below -1/2.
inline bool p2_tail_convergent(double slope) { return slope < -0.5; }

// Least-squares slope of log|fn| vs log p over p in [10, 1e4]/sqrt(beta0).
// Throws std::domain_error if the samples are not all strictly positive.
double tail_exponent(const std::function<double(double)>& fn, double beta0);

} // namespace ddo

#endif
