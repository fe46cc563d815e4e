#include "ddo/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ddo {

namespace {

double require_positive_p(double p)
{
    if (!(p > 0.0))
        throw std::invalid_argument("ladder operators act on p > 0");
    return p;
}

} // namespace

double apply_ladder(LadderDir dir, const LadderCoeffs& coeffs, const RadialFn& fn,
                    double p)
{
    require_positive_p(p);
    const double f = 1.0 + coeffs.beta0 * p * p;
    const double w = coeffs.g * p - coeffs.k / p;
    const double sign = (dir == LadderDir::plus) ? -1.0 : +1.0;
    return sign * f * fn.deriv(p) + w * fn.value(p);
}

std::pair<double, double> apply_ladder_with_deriv(LadderDir dir,
                                                  const LadderCoeffs& coeffs,
                                                  const RadialFn2& fn, double p)
{
    require_positive_p(p);
    const double f = 1.0 + coeffs.beta0 * p * p;
    const double fp = 2.0 * coeffs.beta0 * p;
    const double w = coeffs.g * p - coeffs.k / p;
    const double wp = coeffs.g + coeffs.k / (p * p);
    const double sign = (dir == LadderDir::plus) ? -1.0 : +1.0;
    const double v = fn.value(p);
    const double d = fn.deriv(p);
    const double d2 = fn.deriv2(p);
    return {sign * f * d + w * v, sign * (fp * d + f * d2) + wp * v + w * d};
}

RadialFn make_fd_derivative(std::function<double(double)> value)
{
    auto deriv = [value](double p) {
        const double h = 1e-4 * p;
        return (-value(p + 2 * h) + 8 * value(p + h) - 8 * value(p - h) +
                value(p - 2 * h)) /
               (12.0 * h);
    };
    return RadialFn{value, deriv};
}

H0Coeffs H0Coeffs::from_ladder(double g, double k, double beta0)
{
    return H0Coeffs{g * (g - beta0), k * (k - 1.0), -2.0 * g * k - g - beta0 * k,
                    beta0};
}

H0Coeffs H0Coeffs::partner(double g, double k, double beta0)
{
    return H0Coeffs{g * (g + beta0), k * (k + 1.0), -2.0 * g * k + g + beta0 * k,
                    beta0};
}

double h0_matrix_free(const H0Coeffs& coeffs, const RadialFn2& fn, double p)
{
    require_positive_p(p);
    const double f = 1.0 + coeffs.beta0 * p * p;
    const double fp = 2.0 * coeffs.beta0 * p;
    // -f (f u')' = -f^2 u'' - f f' u'
    return -f * f * fn.deriv2(p) - f * fp * fn.deriv(p) +
           coeffs.potential(p) * fn.value(p);
}

SiStep si_step(double g, double k, double beta0)
{
    if (!(k > 0.0))
        throw std::domain_error("si_step: requires k > 0, got k=" + std::to_string(k));
    if (!(g / beta0 > 0.5))
        throw std::domain_error("si_step: requires g/beta0 > 1/2, got " +
                                std::to_string(g / beta0));
    const double g1 = g + beta0;
    const double k1 = k + 1.0;
    const double eps = g1 * (2.0 * k1 + 1.0) - g * (2.0 * k - 1.0) + beta0 * (k1 + k);
    return SiStep{g1, k1, eps};
}

Refactorization refactorize(Regime regime, double g, double k, double beta0)
{
    switch (regime) {
        case Regime::VeryLargeJ:
            return Refactorization{-g + beta0, k, (2.0 * k + 1.0) * (-2.0 * g + beta0)};
        case Regime::SMinus:
            return Refactorization{g, 1.0 - k, (2.0 * g + beta0) * (1.0 - 2.0 * k)};
        case Regime::SmallJ:
            throw std::invalid_argument(
                "refactorize: SmallJ needs no re-factorization (e0 = 0)");
        default:
            throw std::invalid_argument("refactorize: no factorization for this regime");
    }
}

} // namespace ddo
