#include "ddo/wavefunctions.hpp"
#include "ddo/errors.hpp"
#include "ddo/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ddo {

double GridMap::p_to_z(double p) const
{
    if (!(p > 0.0))
        throw std::invalid_argument("p_to_z: p must be positive");
    const double bp2 = beta0 * p * p;
    return (bp2 - 1.0) / (bp2 + 1.0);
}

double GridMap::z_to_p(double z) const
{
    if (!(z > -1.0 && z < 1.0))
        throw std::invalid_argument("z_to_p: z must lie in (-1,1)");
    return std::sqrt((1.0 + z) / (beta0 * (1.0 - z)));
}

double p_to_z(double p, double beta0) { return GridMap{beta0}.p_to_z(p); }
double z_to_p(double z, double beta0) { return GridMap{beta0}.z_to_p(z); }

double log_normalization_coeff(int n, double a, double b, double beta0)
{
    if (n < 0)
        throw std::domain_error("normalization_coeff: n must be nonnegative");
    if (!(beta0 > 0.0))
        throw std::domain_error("normalization_coeff: beta0 must be positive");
    const double sum = a + b + n + 1.0;
    if (!(a + n + 1.0 > 0.0) || !(b + n + 1.0 > 0.0) || !(sum > 0.0))
        throw std::domain_error(
            "normalization_coeff: nonpositive Gamma argument (a=" +
            std::to_string(a) + ", b=" + std::to_string(b) + ", n=" +
            std::to_string(n) + ")");
    if (!(a + b + 2.0 * n + 1.0 > 0.0))
        throw std::domain_error("normalization_coeff: a+b+2n+1 must be positive");

    const double log_sq = std::log(2.0) + (b + 1.0) * std::log(beta0) +
                          std::log(a + b + 2.0 * n + 1.0) + log_gamma(n + 1.0) +
                          log_gamma(sum) - log_gamma(a + n + 1.0) -
                          log_gamma(b + n + 1.0);
    return 0.5 * log_sq;
}

double normalization_coeff(int n, double a, double b, double beta0)
{
    return std::exp(log_normalization_coeff(n, a, b, beta0));
}

namespace {

// log of p^{b+1/2} f^{-(a+b+1)/2} at p; the only piece that can leave the
// representable range, so it is exponentiated exactly once per evaluation.
double log_power_factor(double a, double b, double beta0, double p)
{
    const double f = 1.0 + beta0 * p * p;
    return (b + 0.5) * std::log(p) - 0.5 * (a + b + 1.0) * std::log(f);
}

struct ProfileParts {
    double w;       // exp(log prefactor), possibly 0 after underflow
    double pn;      // P_n^{(a,b)}(z)
    double dpn_dz;  // derivative in z
    double dlogw;   // d log(prefactor)/dp
    double dz_dp;
};

ProfileParts profile_parts(int n, double a, double b, double beta0, double p,
                           double extra_log = 0.0)
{
    if (!(p > 0.0))
        throw std::invalid_argument("radial profile: p must be positive");
    const double f = 1.0 + beta0 * p * p;
    const double z = (beta0 * p * p - 1.0) / f;
    ProfileParts parts;
    parts.w = std::exp(extra_log + log_power_factor(a, b, beta0, p));
    parts.pn = jacobi_eval(n, a, b, z);
    parts.dpn_dz = jacobi_derivative(n, a, b, z);
    parts.dlogw = (b + 0.5) / p - (a + b + 1.0) * beta0 * p / f;
    parts.dz_dp = 4.0 * beta0 * p / (f * f);
    return parts;
}

} // namespace

double radial_profile(int n, double a, double b, double beta0, double p)
{
    ProfileParts parts = profile_parts(n, a, b, beta0, p);
    return parts.w * parts.pn;
}

double radial_profile_deriv(int n, double a, double b, double beta0, double p)
{
    ProfileParts parts = profile_parts(n, a, b, beta0, p);
    return parts.w * (parts.dlogw * parts.pn + parts.dpn_dz * parts.dz_dp);
}

RadialState make_radial_state(const Channel& channel, int n, int sigma)
{
    if (n < 0)
        throw std::domain_error("make_radial_state: n must be nonnegative");
    if (sigma != 1 && sigma != -1)
        throw std::domain_error("make_radial_state: sigma must be +1 or -1");
    if (channel.regime == Regime::IntermediateJ)
        energy_squared(n, channel);  // throws NoBoundState with the inequality values
    if (channel.regime == Regime::SmallJ && sigma == -1 && n == 0)
        throw std::domain_error(
            "make_radial_state: (SmallJ, sigma=-1, n=0) is excluded; the E=-1 "
            "solution does not solve the coupled radial equations");

    const double beta0 = channel.params.beta0();
    RadialState st;
    st.channel = channel;
    st.n = n;
    st.sigma = sigma;

    switch (channel.regime) {
        case Regime::SmallJ:
            st.a = (channel.g - 0.5 * beta0) / beta0;
            st.b = channel.j;
            st.a_tilde = st.a + 1.0;
            st.b_tilde = st.b + 1.0;
            st.n_tilde = n - 1;
            break;
        case Regime::VeryLargeJ:
            st.a = -(channel.g - 0.5 * beta0) / beta0;
            st.b = channel.j;
            st.a_tilde = st.a - 1.0;
            st.b_tilde = st.b + 1.0;
            st.n_tilde = n;
            break;
        case Regime::SMinus:
            st.a = (channel.g - 0.5 * beta0) / beta0;
            st.b = channel.j + 1.0;
            st.a_tilde = st.a + 1.0;
            st.b_tilde = st.b - 1.0;
            st.n_tilde = n;
            break;
        default:
            throw NoBoundState("make_radial_state: intermediate-j channel");
    }

    EnergySquared es = energy_squared(n, channel);
    st.e = es.e;
    st.E = sigma * std::sqrt(1.0 + es.E2_minus_1);

    st.log_A = log_normalization_coeff(n, st.a, st.b, beta0);
    st.A_n = std::exp(st.log_A);
    if (st.n_tilde >= 0) {
        st.log_A_tilde =
            log_normalization_coeff(st.n_tilde, st.a_tilde, st.b_tilde, beta0);
        st.A_tilde = std::exp(st.log_A_tilde);
    } else {
        st.log_A_tilde = 0.0;
        st.A_tilde = 0.0;
    }

    st.energy_factor1 = std::sqrt((st.E + 1.0) / (2.0 * st.E));
    st.energy_factor2 =
        channel.epsilon * sigma * std::sqrt((st.E - 1.0) / (2.0 * st.E));
    st.N1 = st.energy_factor1 * st.A_n;
    st.N2_coeff = -st.energy_factor2 * st.A_tilde;
    return st;
}

double eval_R1(const RadialState& st, double p)
{
    ProfileParts parts = profile_parts(st.n, st.a, st.b, st.channel.params.beta0(),
                                       p, st.log_A);
    return st.energy_factor1 * parts.w * parts.pn;
}

double eval_R1_deriv(const RadialState& st, double p)
{
    ProfileParts parts = profile_parts(st.n, st.a, st.b, st.channel.params.beta0(),
                                       p, st.log_A);
    return st.energy_factor1 * parts.w *
           (parts.dlogw * parts.pn + parts.dpn_dz * parts.dz_dp);
}

double eval_R2tilde(const RadialState& st, double p)
{
    if (st.n_tilde < 0 || st.energy_factor2 == 0.0)
        return 0.0;
    ProfileParts parts = profile_parts(st.n_tilde, st.a_tilde, st.b_tilde,
                                       st.channel.params.beta0(), p, st.log_A_tilde);
    return st.energy_factor2 * parts.w * parts.pn;
}

double eval_R2tilde_deriv(const RadialState& st, double p)
{
    if (st.n_tilde < 0 || st.energy_factor2 == 0.0)
        return 0.0;
    ProfileParts parts = profile_parts(st.n_tilde, st.a_tilde, st.b_tilde,
                                       st.channel.params.beta0(), p, st.log_A_tilde);
    return st.energy_factor2 * parts.w *
           (parts.dlogw * parts.pn + parts.dpn_dz * parts.dz_dp);
}

RadialFn r1_fn(const RadialState& st)
{
    return RadialFn{[st](double p) { return eval_R1(st, p); },
                    [st](double p) { return eval_R1_deriv(st, p); }};
}

RadialFn r2tilde_fn(const RadialState& st)
{
    return RadialFn{[st](double p) { return eval_R2tilde(st, p); },
                    [st](double p) { return eval_R2tilde_deriv(st, p); }};
}

PartnerGroundCandidate partner_ground_candidate(const Channel& channel)
{
    const double beta0 = channel.params.beta0();
    const double g = channel.g;
    const double k = channel.k;
    const double expo = (g + beta0 * k) / (2.0 * beta0);
    auto value = [=](double p) {
        const double f = 1.0 + beta0 * p * p;
        return std::exp(-k * std::log(p) + expo * std::log(f));
    };
    auto deriv = [=](double p) {
        const double f = 1.0 + beta0 * p * p;
        return value(p) * (-k / p + expo * 2.0 * beta0 * p / f);
    };
    return PartnerGroundCandidate{RadialFn{value, deriv}, -k, g / beta0};
}

std::vector<WavefunctionSample> sample_wavefunction(const RadialState& state,
                                                    double p_min, double p_max,
                                                    int count)
{
    if (!(p_min > 0.0) || !(p_max > p_min))
        throw std::domain_error("sample_wavefunction: need 0 < p_min < p_max");
    if (count < 2)
        throw std::domain_error("sample_wavefunction: need at least 2 samples");

    GridMap map{state.channel.params.beta0()};
    std::vector<WavefunctionSample> rows;
    rows.reserve(count);
    const double log_min = std::log(p_min);
    const double step = (std::log(p_max) - log_min) / (count - 1);
    for (int i = 0; i < count; ++i) {
        const double p = std::exp(log_min + i * step);
        WavefunctionSample row;
        row.p = p;
        row.z = map.p_to_z(p);
        row.r1 = eval_R1(state, p);
        row.r2tilde = eval_R2tilde(state, p);
        row.r2 = -row.r2tilde;
        row.weight = 1.0 / map.f_of_p(p);
        rows.push_back(row);
    }
    return rows;
}

} // namespace ddo
