#ifndef DDO_SPECFUN_HPP
#define DDO_SPECFUN_HPP

namespace ddo {

// Jacobi polynomial P_n^{(a,b)}(z) by forward three-term recurrence in the
// degree. Valid for real a, b as long as a+b avoids the negative integers
// -2, -3, ... (never the case for the parameter ranges used here).
double jacobi_eval(int n, double a, double b, double z);

// dP_n^{(a,b)}/dz = ((n+a+b+1)/2) P_{n-1}^{(a+1,b+1)}(z).
double jacobi_derivative(int n, double a, double b, double z);

// ln Gamma(x) for x > 0. Throws std::domain_error otherwise.
double log_gamma(double x);

} // namespace ddo

#endif
