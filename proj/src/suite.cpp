#include "ddo/suite.hpp"
#include "ddo/angular.hpp"
#include "ddo/errors.hpp"
#include "ddo/quadrature.hpp"
#include "ddo/wavefunctions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace ddo {

namespace {

std::string channel_tag(const SweepChannel& sc)
{
    std::ostringstream tag;
    tag << "s=" << static_cast<int>(sc.s) << "/2 two_j=" << sc.two_j;
    return tag.str();
}

std::vector<RadialState> channel_states(const Channel& channel, int n_max)
{
    std::vector<RadialState> states;
    for (int sigma : {+1, -1})
        for (int n = 0; n <= n_max; ++n) {
            if (channel.regime == Regime::SmallJ && sigma == -1 && n == 0)
                continue;
            states.push_back(make_radial_state(channel, n, sigma));
        }
    return states;
}

// Max relative residual of the coupled radial equations
//   omega b+ R2t = (E-1) R1,  omega b- R1 = (E+1) R2t
// over `samples` points spread across z.
double coupled_residual(const RadialState& state, int samples)
{
    const Channel& c = state.channel;
    const double omega = c.params.omega;
    GridMap map{c.params.beta0()};
    LadderCoeffs coeffs = LadderCoeffs::from_channel(c);
    RadialFn r1 = r1_fn(state);
    RadialFn r2 = r2tilde_fn(state);

    double max_lhs1 = 0.0, max_lhs2 = 0.0, scale1 = 0.0, scale2 = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double z = -0.999 + 1.998 * i / (samples - 1);
        const double p = map.z_to_p(z);
        const double rhs1 = (state.E - 1.0) * r1.value(p);
        const double rhs2 = (state.E + 1.0) * r2.value(p);
        const double lhs1 = omega * apply_ladder(LadderDir::plus, coeffs, r2, p);
        const double lhs2 = omega * apply_ladder(LadderDir::minus, coeffs, r1, p);
        max_lhs1 = std::max(max_lhs1, std::abs(lhs1 - rhs1));
        max_lhs2 = std::max(max_lhs2, std::abs(lhs2 - rhs2));
        scale1 = std::max(scale1, std::abs(rhs1));
        scale2 = std::max(scale2, std::abs(rhs2));
    }
    // (SmallJ, n=0): both sides of the first equation vanish identically.
    if (scale1 == 0.0)
        scale1 = std::max(scale2, 1.0);
    if (scale2 == 0.0)
        scale2 = std::max(scale1, 1.0);
    return std::max(max_lhs1 / scale1, max_lhs2 / scale2);
}

} // namespace

std::vector<SweepChannel> default_sweep(const DeformationParams& params)
{
    std::vector<SweepChannel> sweep;
    for (int two_j : {1, 3})
        for (Spin s : {Spin::plus, Spin::minus})
            sweep.push_back(SweepChannel{s, two_j, params});
    sweep.push_back(SweepChannel{Spin::plus, 201,
                                 DeformationParams::make(1.0, 0.01, 0.0)});
    return sweep;
}

VerificationReport verify_radial(const std::vector<SweepChannel>& sweep,
                                 int n_max, int quad_order)
{
    VerificationReport report;
    report.title = "radial wavefunctions";
    for (const SweepChannel& sc : sweep) {
        Channel channel = derive_channel(sc.s, sc.two_j, sc.params);
        if (channel.regime == Regime::IntermediateJ) {
            report.add_flag(channel_tag(sc) + ": intermediate j skipped", true);
            continue;
        }
        // Chebyshev in z: the map's 1/sqrt(1-z^2) factor is the Chebyshev
        // weight, and near-threshold states (<p^2> integrands ~ (1-z)^{-1/2})
        // defeat plain Gauss-Legendre.
        QuadratureSpec quad{channel.params.beta0(), std::max(quad_order, 512),
                            QuadScheme::gauss_chebyshev_z};
        std::vector<RadialState> states = channel_states(channel, n_max);

        for (const RadialState& state : states) {
            std::ostringstream tag;
            tag << channel_tag(sc) << " n=" << state.n << " sigma=" << state.sigma;
            auto combined = [&](double p) {
                const double r1 = eval_R1(state, p);
                const double r2 = eval_R2tilde(state, p);
                return r1 * r1 + r2 * r2;
            };
            IntegralResult norm = integrate_dp_over_f(combined, quad);
            report.add(tag.str() + ": normalization", std::abs(norm.value - 1.0),
                       1e-8);
            report.add(tag.str() + ": coupled equations",
                       coupled_residual(state, 200), 1e-9);
            P2Result p2 = p2_expectation(state, quad);
            report.add_flag(tag.str() + ": <p^2> finite", p2.finite,
                            p2.finite ? "" : p2.offending_component);
        }

        // Distinct-n overlaps within each branch.
        for (std::size_t i = 0; i < states.size(); ++i)
            for (std::size_t j = i + 1; j < states.size(); ++j) {
                if (states[i].sigma != states[j].sigma ||
                    states[i].n == states[j].n)
                    continue;
                auto overlap = [&](double p) {
                    return eval_R1(states[i], p) * eval_R1(states[j], p) +
                           eval_R2tilde(states[i], p) * eval_R2tilde(states[j], p);
                };
                IntegralResult integral = integrate_dp_over_f(overlap, quad);
                std::ostringstream tag;
                tag << channel_tag(sc) << " <n=" << states[i].n
                    << "|n=" << states[j].n << "> sigma=" << states[i].sigma;
                report.add(tag.str(), std::abs(integral.value), 1e-8);
            }

        PartnerGroundCandidate candidate = partner_ground_candidate(channel);
        report.add_flag(channel_tag(sc) + ": partner ground candidate rejected",
                        !candidate.normalizable_at_origin() ||
                            !candidate.normalizable_at_infinity());
    }
    return report;
}

VerificationReport verify_susy(const std::vector<SweepChannel>& sweep, int n_max,
                               double tol, const GridSpec& grid)
{
    VerificationReport report;
    report.title = "SUSY / shape invariance";
    for (const SweepChannel& sc : sweep) {
        Channel channel = derive_channel(sc.s, sc.two_j, sc.params);
        if (channel.regime == Regime::IntermediateJ) {
            report.add_flag(channel_tag(sc) + ": intermediate j skipped", true);
            continue;
        }
        const double beta0 = channel.params.beta0();

        // SI partial sums reproduce e_n - e_0 at the effective parameters.
        double g_eff = channel.g, k_eff = channel.k, e0 = 0.0;
        if (channel.regime != Regime::SmallJ) {
            Refactorization refac = refactorize(channel.regime, channel.g,
                                                channel.k, beta0);
            g_eff = refac.g_eff;
            k_eff = refac.k_eff;
            e0 = refac.e0;
        }
        double max_rel = 0.0;
        double g_i = g_eff, k_i = k_eff, sum = 0.0;
        for (int n = 1; n <= 20; ++n) {
            SiStep step = si_step(g_i, k_i, beta0);
            sum += step.eps_next;
            g_i = step.g_next;
            k_i = step.k_next;
            const double formula = energy_squared(n, channel).e - e0;
            max_rel = std::max(max_rel,
                               std::abs(sum - formula) / std::max(formula, 1.0));
        }
        report.add(channel_tag(sc) + ": SI partial sums vs closed form", max_rel,
                   1e-12);
        if (channel.regime != Regime::SmallJ) {
            const double rel = std::abs(e0 - energy_squared(0, channel).e) /
                               std::max(e0, 1.0);
            report.add(channel_tag(sc) + ": refactorized e0", rel, 1e-12);
            report.add_flag(channel_tag(sc) + ": broken SUSY (e0 > 0)", e0 > 0.0);
        }

        // Grid oracle.
        VerificationReport oracle_report = verify_spectrum(channel, n_max, tol, grid);
        for (CheckResult& check : oracle_report.checks)
            check.name = channel_tag(sc) + ": " + check.name;
        report.merge(oracle_report);
        std::vector<double> eigs = extrapolated_eigenvalues(channel, grid, 1);
        if (channel.regime == Regime::SmallJ)
            report.add(channel_tag(sc) + ": unbroken SUSY zero mode",
                       std::abs(eigs[0]), 1e-6);
        else
            report.add_flag(channel_tag(sc) + ": lowest grid eigenvalue > 0",
                            eigs[0] > 10.0 * 1e-6);
    }
    return report;
}

VerificationReport verify_angular_all(int two_j_max, int sample_count)
{
    VerificationReport report;
    report.title = "angular identities";
    for (int two_j = 1; two_j <= two_j_max; two_j += 2)
        for (Spin s : {Spin::plus, Spin::minus})
            for (int two_m = -two_j; two_m <= two_j; two_m += 2) {
                VerificationReport single =
                    verify_angular_identities(s, two_j, two_m, sample_count);
                for (CheckResult& check : single.checks)
                    check.name = single.title + ": " + check.name;
                report.merge(single);
            }
    return report;
}

} // namespace ddo
