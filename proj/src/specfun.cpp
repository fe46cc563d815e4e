#include "ddo/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ddo {

double jacobi_eval(int n, double a, double b, double z)
{
    if (n < 0)
        throw std::invalid_argument("jacobi_eval: degree must be nonnegative");
    if (z < -1.0 || z > 1.0)
        throw std::invalid_argument("jacobi_eval: z outside [-1,1]");

    if (n == 0)
        return 1.0;

    double ym1 = 1.0;
    double y = 0.5 * ((a + b + 2.0) * z + a - b);

    for (int k = 2; k <= n; ++k) {
        double apb = a + b;
        double denom = 2.0 * k * (k + apb) * (2.0 * k + apb - 2.0);
        double c1 = (2.0 * k + apb - 1.0) *
                    ((2.0 * k + apb) * (2.0 * k + apb - 2.0) * z + a * a - b * b);
        double c0 = -2.0 * (k + a - 1.0) * (k + b - 1.0) * (2.0 * k + apb);
        double yp1 = (c1 * y + c0 * ym1) / denom;
        ym1 = y;
        y = yp1;
    }
    return y;
}

double jacobi_derivative(int n, double a, double b, double z)
{
    if (n < 0)
        throw std::invalid_argument("jacobi_derivative: degree must be nonnegative");
    if (n == 0)
        return 0.0;
    return 0.5 * (n + a + b + 1.0) * jacobi_eval(n - 1, a + 1.0, b + 1.0, z);
}

double log_gamma(double x)
{
    if (!(x > 0.0))
        throw std::domain_error("log_gamma: argument must be positive, got " +
                                std::to_string(x));
    return std::lgamma(x);
}

} // namespace ddo
