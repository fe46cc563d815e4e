#include "ddo/quadrature.hpp"
#include "ddo/errors.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace ddo {

namespace {

GaussRule compute_gauss_legendre(int order)
{
    GaussRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    // Newton on P_n(x); symmetric, so only the lower half is solved.
    for (int i = 0; i < (order + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = order * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15)
                break;
        }
        rule.nodes[i] = -x;
        rule.nodes[order - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }
    if (order % 2 == 1)
        rule.nodes[order / 2] = 0.0;
    return rule;
}

} // namespace

const GaussRule& gauss_legendre_rule(int order)
{
    if (order < 1)
        throw std::invalid_argument("gauss_legendre_rule: order must be >= 1");
    static std::map<int, GaussRule> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end())
        it = cache.emplace(order, compute_gauss_legendre(order)).first;
    return it->second;
}

GaussRule gauss_chebyshev_rule(int order)
{
    if (order < 1)
        throw std::invalid_argument("gauss_chebyshev_rule: order must be >= 1");
    GaussRule rule;
    rule.nodes.resize(order);
    rule.weights.assign(order, std::numbers::pi / order);
    for (int i = 0; i < order; ++i)
        rule.nodes[i] = std::cos((2.0 * i + 1.0) * std::numbers::pi / (2.0 * order));
    return rule;
}

namespace {

// Single-order pass of int_0^inf dp/f w(p) in z. For Gauss-Legendre the
// 1/sqrt(1-z^2) factor is part of the integrand; Gauss-Chebyshev absorbs it
// into the weights.
double pass_dp_over_f(const std::function<double(double)>& w,
                      const QuadratureSpec& spec, int order)
{
    GridMap map{spec.beta0};
    const double scale = 0.5 / std::sqrt(spec.beta0);
    double sum = 0.0;
    if (spec.scheme == QuadScheme::gauss_legendre_z) {
        const GaussRule& rule = gauss_legendre_rule(order);
        for (int i = 0; i < order; ++i) {
            const double z = rule.nodes[i];
            sum += rule.weights[i] * w(map.z_to_p(z)) / std::sqrt(1.0 - z * z);
        }
    } else {
        GaussRule rule = gauss_chebyshev_rule(order);
        for (int i = 0; i < order; ++i)
            sum += rule.weights[i] * w(map.z_to_p(rule.nodes[i]));
    }
    return scale * sum;
}

} // namespace

IntegralResult integrate_dp_over_f(const std::function<double(double)>& w,
                                   const QuadratureSpec& spec)
{
    if (spec.order < 2)
        throw std::invalid_argument("quadrature order must be >= 2");
    const double coarse = pass_dp_over_f(w, spec, spec.order);
    const double fine = pass_dp_over_f(w, spec, 2 * spec.order);
    const double diff = std::abs(fine - coarse);
    if (diff > 1e-4 * std::max(std::abs(fine), 1.0)) {
        std::ostringstream msg;
        msg << "order doubling moved the integral from " << coarse << " to " << fine
            << " (order " << spec.order << " -> " << 2 * spec.order << ")";
        throw DivergenceSuspected(msg.str());
    }
    return IntegralResult{fine, diff};
}

IntegralResult inner_product(const std::function<double(double)>& u,
                             const std::function<double(double)>& v,
                             const QuadratureSpec& spec)
{
    return integrate_dp_over_f([&](double p) { return u(p) * v(p); }, spec);
}

P2Result p2_expectation(const RadialState& state, const QuadratureSpec& spec)
{
    // p^2 |R|^2 / f ~ p^{2 slope} at infinity; slope = -(decay exponent).
    if (!p2_tail_convergent(-state.r1_decay_exponent()))
        return P2Result{false, 0.0, 0.0, "R1"};
    if (state.n_tilde >= 0 && state.energy_factor2 != 0.0 &&
        !p2_tail_convergent(-state.r2_decay_exponent()))
        return P2Result{false, 0.0, 0.0, "R2tilde"};

    auto integrand = [&](double p) {
        const double r1 = eval_R1(state, p);
        const double r2 = eval_R2tilde(state, p);
        return p * p * (r1 * r1 + r2 * r2);
    };
    IntegralResult integral = integrate_dp_over_f(integrand, spec);
    return P2Result{true, integral.value, integral.error_estimate, ""};
}

double tail_exponent(const std::function<double(double)>& fn, double beta0)
{
    const int samples = 64;
    const double scale = 1.0 / std::sqrt(beta0);
    const double log_lo = std::log(10.0 * scale);
    const double log_hi = std::log(1e4 * scale);

    // Least squares of log|fn| against log p with an extra 1/(beta0 p^2)
    // regressor: any power of f differs from its power-law asymptote by
    // exactly that shape to leading order, so the fitted slope is the true
    // asymptotic exponent instead of being biased by the lower decade.
    double a[3][3] = {};
    double rhs[3] = {};
    double first_sign = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double x = log_lo + (log_hi - log_lo) * i / (samples - 1);
        const double p = std::exp(x);
        const double value = fn(p);
        if (value == 0.0 || !std::isfinite(value))
            throw std::domain_error("tail_exponent: zero or non-finite sample at p=" +
                                    std::to_string(p));
        const double sign = value > 0.0 ? 1.0 : -1.0;
        if (i == 0)
            first_sign = sign;
        else if (sign != first_sign)
            throw std::domain_error(
                "tail_exponent: sign change in the sampled range (oscillatory tail)");
        const double y = std::log(std::abs(value));
        const double row[3] = {x, 1.0, 1.0 / (beta0 * p * p)};
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c)
                a[r][c] += row[r] * row[c];
            rhs[r] += row[r] * y;
        }
    }
    // Cramer's rule on the 3x3 normal equations.
    auto det3 = [](const double m[3][3]) {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    const double det = det3(a);
    double a_slope[3][3];
    for (int r = 0; r < 3; ++r) {
        a_slope[r][0] = rhs[r];
        a_slope[r][1] = a[r][1];
        a_slope[r][2] = a[r][2];
    }
    return det3(a_slope) / det;
}

} // namespace ddo
