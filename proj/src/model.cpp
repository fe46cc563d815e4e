#include "ddo/model.hpp"
#include "ddo/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace ddo {

const char* regime_name(Regime r)
{
    switch (r) {
        case Regime::SmallJ: return "small_j";
        case Regime::IntermediateJ: return "intermediate_j";
        case Regime::VeryLargeJ: return "very_large_j";
        case Regime::SMinus: return "s_minus";
    }
    return "?";
}

DeformationParams DeformationParams::make(double omega, double beta,
                                          double beta_prime, double gamma)
{
    if (!(omega > 0.0))
        throw std::domain_error("DeformationParams: omega must be positive");
    if (beta < 0.0 || beta_prime < 0.0)
        throw std::domain_error("DeformationParams: deformation parameters must be nonnegative");
    if (!(beta + beta_prime > 0.0))
        throw std::domain_error(
            "DeformationParams: beta0 = beta + beta_prime must be strictly positive "
            "(use a small nonzero value for the nondeformed limit)");
    return DeformationParams{omega, beta, beta_prime, gamma};
}

namespace {

void check_two_j(int two_j)
{
    if (two_j < 1 || two_j % 2 == 0)
        throw std::domain_error("two_j must be a positive odd integer, got " +
                                std::to_string(two_j));
}

} // namespace

Regime classify(Spin s, int two_j, const DeformationParams& params)
{
    check_two_j(two_j);
    if (s == Spin::minus)
        return Regime::SMinus;

    // s = +1/2: small iff 2 b w (j+1) + b'w < 2, very large iff 2 b w j - b'w > 2,
    // intermediate in between. Evaluated with j = two_j/2 kept integer-scaled.
    const double bw = params.beta * params.omega;
    const double bpw = params.beta_prime * params.omega;
    const double small_lhs = bw * (two_j + 2) + bpw;   // = 2 b w (j+1) + b'w
    const double large_lhs = bw * two_j - bpw;         // = 2 b w j - b'w

    if (small_lhs == 2.0 || large_lhs == 2.0) {
        std::ostringstream msg;
        msg << "channel (s=" << static_cast<int>(s) << "/2, two_j=" << two_j
            << ") lies exactly on a regime boundary: 2bw(j+1)+b'w=" << small_lhs
            << ", 2bwj-b'w=" << large_lhs;
        throw BoundaryUnphysical(msg.str());
    }
    if (small_lhs < 2.0)
        return Regime::SmallJ;
    if (large_lhs > 2.0)
        return Regime::VeryLargeJ;
    return Regime::IntermediateJ;
}

Channel derive_channel(Spin s, int two_j, const DeformationParams& params)
{
    check_two_j(two_j);
    Channel c;
    c.s = s;
    c.two_j = two_j;
    c.params = params;
    c.j = two_j * 0.5;
    c.l = (s == Spin::plus) ? (two_j - 1) / 2 : (two_j + 1) / 2;
    c.k = static_cast<int>(s) * 0.5 * (two_j + 1);   // s(2j+1), exact
    c.g = 1.0 / params.omega - params.beta * c.k;
    c.regime = classify(s, two_j, params);
    switch (c.regime) {
        case Regime::SmallJ:
        case Regime::SMinus: c.epsilon = +1; break;
        case Regime::VeryLargeJ: c.epsilon = -1; break;
        case Regime::IntermediateJ: c.epsilon = 0; break;
    }
    return c;
}

double energy_small_form(int n, double g, double k, double beta0)
{
    return 4.0 * n * (g + beta0 * (k + n));
}

double energy_vlarge_form(int n, double g, double k, double beta0)
{
    return 4.0 * n * (-g + beta0 * (k + 1 + n)) + (2.0 * k + 1.0) * (-2.0 * g + beta0);
}

double energy_sminus_form(int n, double g, double k, double beta0)
{
    // 2(2g+beta0)(j+1) with j+1 = 1/2 - k for s = -1/2.
    return 4.0 * n * (g + beta0 * (1 - k + n)) + (2.0 * g + beta0) * (1.0 - 2.0 * k);
}

EnergySquared energy_squared(int n, const Channel& channel)
{
    if (n < 0)
        throw std::domain_error("energy_squared: n must be nonnegative");
    const double beta0 = channel.params.beta0();
    double e = 0.0;
    switch (channel.regime) {
        case Regime::SmallJ:
            e = energy_small_form(n, channel.g, channel.k, beta0);
            break;
        case Regime::VeryLargeJ:
            e = energy_vlarge_form(n, channel.g, channel.k, beta0);
            break;
        case Regime::SMinus:
            e = energy_sminus_form(n, channel.g, channel.k, beta0);
            break;
        case Regime::IntermediateJ: {
            const double bw = channel.params.beta * channel.params.omega;
            const double bpw = channel.params.beta_prime * channel.params.omega;
            std::ostringstream msg;
            msg << "no bound states for intermediate j: 2bw(j+1)+b'w="
                << bw * (channel.two_j + 2) + bpw << " >= 2 and 2bwj-b'w="
                << bw * channel.two_j - bpw << " <= 2 (two_j=" << channel.two_j << ")";
            throw NoBoundState(msg.str());
        }
    }
    if (e < 0.0)
        throw std::logic_error("energy_squared: negative eigenvalue in a valid regime");
    const double w = channel.params.omega;
    return EnergySquared{e, w * w * e};
}

double nondeformed_reference(int N, Spin s, int two_j, double omega)
{
    check_two_j(two_j);
    const double k = static_cast<int>(s) * 0.5 * (two_j + 1);
    return 2.0 * omega * (N + 1 - k);
}

SpectrumTable spectrum_table(const DeformationParams& params, int two_j_max,
                             int n_max)
{
    if (two_j_max < 1)
        throw std::domain_error("spectrum_table: two_j_max must be >= 1");
    if (n_max < 0)
        throw std::domain_error("spectrum_table: n_max must be >= 0");

    SpectrumTable table;
    for (int two_j = 1; two_j <= two_j_max; two_j += 2) {
        for (Spin s : {Spin::plus, Spin::minus}) {
            Channel c = derive_channel(s, two_j, params);
            if (c.regime == Regime::IntermediateJ) {
                table.no_bound_state.push_back(c);
                continue;
            }
            for (int sigma : {+1, -1}) {
                const int n_start =
                    (c.regime == Regime::SmallJ && sigma == -1) ? 1 : 0;
                for (int n = n_start; n <= n_max; ++n) {
                    EnergySquared es = energy_squared(n, c);
                    SpectrumEntry entry;
                    entry.s = s;
                    entry.two_j = two_j;
                    entry.j = c.j;
                    entry.regime = c.regime;
                    entry.n = n;
                    entry.N = 2 * n + c.l;
                    entry.sigma = sigma;
                    entry.e = es.e;
                    entry.E2_minus_1 = es.E2_minus_1;
                    entry.E = sigma * std::sqrt(1.0 + es.E2_minus_1);
                    table.entries.push_back(entry);
                }
            }
        }
    }
    std::sort(table.entries.begin(), table.entries.end(),
              [](const SpectrumEntry& x, const SpectrumEntry& y) {
                  return std::make_tuple(std::abs(x.E), x.two_j, static_cast<int>(x.s),
                                         x.n, x.sigma) <
                         std::make_tuple(std::abs(y.E), y.two_j, static_cast<int>(y.s),
                                         y.n, y.sigma);
              });
    return table;
}

} // namespace ddo
