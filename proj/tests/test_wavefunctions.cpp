#include <doctest.h>

#include "ddo/errors.hpp"
#include "ddo/quadrature.hpp"
#include "ddo/specfun.hpp"
#include "ddo/wavefunctions.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

using namespace ddo;

namespace {

DeformationParams reference_params()
{
    return DeformationParams::make(1.0, 0.01, 0.01);
}

std::vector<Channel> regime_channels()
{
    return {derive_channel(Spin::plus, 1, reference_params()),
            derive_channel(Spin::minus, 1, reference_params()),
            derive_channel(Spin::plus, 201, DeformationParams::make(1.0, 0.01, 0.0))};
}

QuadratureSpec state_quad(const Channel& c)
{
    return QuadratureSpec{c.params.beta0(), 1024, QuadScheme::gauss_chebyshev_z};
}

} // namespace

TEST_SUITE("wavefunctions")
{
    TEST_CASE("p-z map basics")
    {
        GridMap map{0.02};
        // midpoint p = 1/sqrt(beta0) -> z = 0
        CHECK(map.p_to_z(1.0 / std::sqrt(0.02)) ==
              doctest::Approx(0.0).epsilon(1e-14));
        // z -> -1 corresponds to p -> 0
        CHECK(map.z_to_p(-1.0 + 1e-9) < 1e-3);
        CHECK_THROWS_AS(map.z_to_p(-1.0), std::invalid_argument);
        CHECK_THROWS_AS(map.z_to_p(1.0), std::invalid_argument);
        CHECK_THROWS_AS(map.p_to_z(0.0), std::invalid_argument);
        // f(p) = 2/(1-z) under the map
        for (double p : {0.01, 0.5, 3.0, 40.0}) {
            const double z = map.p_to_z(p);
            CHECK(map.f_of_p(p) ==
                  doctest::Approx(map.f_of_z(z)).epsilon(1e-13));
        }
    }

    TEST_CASE("p-z round trips at double precision")
    {
        // z carries ulp-level rounding, so the p -> z -> p error grows like
        // ulp(z)/(1 -+ z): 1e-12 holds over the central decades and the
        // conditioning-limited bound holds over the full stated range.
        GridMap map{0.02};
        const double scale = 1.0 / std::sqrt(0.02);
        for (int i = 0; i <= 200; ++i) {
            const double p = scale * std::pow(10.0, -2.0 + 4.0 * i / 200.0);
            const double back = map.z_to_p(map.p_to_z(p));
            CHECK(std::abs(back - p) <= 1e-12 * p);
        }
        for (int i = 0; i <= 200; ++i) {
            const double p = scale * std::pow(10.0, -6.0 + 12.0 * i / 200.0);
            const double z = map.p_to_z(p);
            const double conditioning =
                2.22e-16 / std::min(1.0 - z, 1.0 + z) + 1e-13;
            CHECK(std::abs(map.z_to_p(z) - p) <= conditioning * p);
        }
        // z -> p -> z is well conditioned everywhere
        for (int i = 0; i <= 200; ++i) {
            const double z = -1.0 + 2e-12 + (2.0 - 4e-12) * i / 200.0;
            CHECK(std::abs(map.p_to_z(map.z_to_p(z)) - z) <= 5e-15);
        }
    }

    TEST_CASE("normalization coefficient")
    {
        // A(n=0, a=1, b=1, beta0=1) = sqrt(2*1*3*G(3)/(G(2)G(2))) = sqrt(12)
        CHECK(normalization_coeff(0, 1.0, 1.0, 1.0) ==
              doctest::Approx(std::sqrt(12.0)).epsilon(1e-13));
        // n = 0 closed form vs the general expression
        std::mt19937_64 rng(59);
        std::uniform_real_distribution<double> par(0.1, 30.0), bs(1e-3, 0.5);
        for (int i = 0; i < 100; ++i) {
            const double a = par(rng), b = par(rng), beta0 = bs(rng);
            const double general = normalization_coeff(0, a, b, beta0);
            const double direct = std::sqrt(
                2.0 * std::pow(beta0, b + 1) * (a + b + 1) *
                std::exp(log_gamma(a + b + 1) - log_gamma(a + 1) - log_gamma(b + 1)));
            CHECK(general == doctest::Approx(direct).epsilon(1e-12));
        }
        CHECK_THROWS_AS(normalization_coeff(0, -1.5, 1.0, 0.02), std::domain_error);
        CHECK_THROWS_AS(normalization_coeff(0, 1.0, -2.0, 0.02), std::domain_error);
    }

    TEST_CASE("normalized profile integrates to one")
    {
        std::mt19937_64 rng(61);
        std::uniform_real_distribution<double> par(0.5, 20.0), bs(5e-3, 0.1);
        for (int i = 0; i < 40; ++i) {
            const int n = static_cast<int>(rng() % 4);
            const double a = par(rng), b = par(rng), beta0 = bs(rng);
            const double A = normalization_coeff(n, a, b, beta0);
            QuadratureSpec quad{beta0, 512, QuadScheme::gauss_chebyshev_z};
            auto fn = [&](double p) {
                const double v = A * radial_profile(n, a, b, beta0, p);
                return v * v;
            };
            IntegralResult norm = integrate_dp_over_f(fn, quad);
            CHECK(norm.value == doctest::Approx(1.0).epsilon(1e-8));
        }
    }

    TEST_CASE("SmallJ ground state matches the first-order closed form")
    {
        Channel c = derive_channel(Spin::plus, 1, reference_params());
        RadialState ground = make_radial_state(c, 0, +1);
        const double beta0 = c.params.beta0();
        const double expo = (c.g + beta0 * c.k) / (2.0 * beta0);
        for (double p : {0.01, 0.1, 1.0, 5.0, 30.0}) {
            const double f = 1.0 + beta0 * p * p;
            const double reference =
                ground.N1 * std::pow(p, c.k) * std::pow(f, -expo);
            CHECK(eval_R1(ground, p) ==
                  doctest::Approx(reference).epsilon(1e-12));
        }
        // boundary condition R1(0) = 0
        CHECK(std::abs(eval_R1(ground, 1e-12)) < 1e-11);
        // the spectator component vanishes identically
        CHECK(ground.n_tilde == -1);
        for (double p : {0.05, 0.8, 12.0})
            CHECK(eval_R2tilde(ground, p) == 0.0);
    }

    TEST_CASE("Jacobi data per regime and the compact epsilon form")
    {
        for (const Channel& c : regime_channels()) {
            RadialState st = make_radial_state(c, 2, +1);
            const double s = spin_value(c.s);
            CHECK(st.a_tilde == doctest::Approx(st.a + c.epsilon).epsilon(1e-13));
            CHECK(st.b_tilde == doctest::Approx(st.b + 2 * s).epsilon(1e-13));
            CHECK(st.n_tilde ==
                  doctest::Approx(st.n - s - c.epsilon / 2.0).epsilon(1e-13));
            CHECK(st.b == doctest::Approx(c.j + 0.5 - s).epsilon(1e-13));
            // convergence bounds on a
            if (c.regime == Regime::SMinus)
                CHECK(st.a > -0.5);
            else
                CHECK(st.a > 0.5);
        }
    }

    TEST_CASE("R1 decays at both ends")
    {
        for (const Channel& c : regime_channels()) {
            RadialState st = make_radial_state(c, 1, +1);
            const double scale = 1.0 / std::sqrt(c.params.beta0());
            double peak = 0.0;
            for (int i = 0; i <= 100; ++i)
                peak = std::max(peak, std::abs(eval_R1(
                                          st, scale * std::pow(10.0,
                                                               -2.0 + 4.0 * i / 100))));
            // slowest cases: p^{b+1/2} = p at the origin, p^{-(a+1/2)} = p^{-2}
            // in the tail (SmallJ j=1/2 and VeryLargeJ respectively)
            CHECK(std::abs(eval_R1(st, 1e-8 * scale)) < 1e-4 * peak);
            CHECK(std::abs(eval_R1(st, 1e7 * scale)) < 1e-6 * peak);
        }
    }

    TEST_CASE("SmallJ n=1 small component is proportional to the shifted profile")
    {
        Channel c = derive_channel(Spin::plus, 1, reference_params());
        RadialState st = make_radial_state(c, 1, +1);
        REQUIRE(st.n_tilde == 0);
        const double beta0 = c.params.beta0();
        const double p0 = 1.0 / std::sqrt(beta0);
        const double ratio0 =
            eval_R2tilde(st, p0) / radial_profile(0, st.a_tilde, st.b_tilde, beta0, p0);
        for (double p : {0.1 * p0, 0.5 * p0, 2.0 * p0, 8.0 * p0}) {
            const double ratio = eval_R2tilde(st, p) /
                                 radial_profile(0, st.a_tilde, st.b_tilde, beta0, p);
            CHECK(ratio == doctest::Approx(ratio0).epsilon(1e-10));
        }
    }

    TEST_CASE("combined normalization and component split")
    {
        // integral of (R1^2 + R2t^2)/f is 1, with the pieces splitting as
        // (E+1)/2E and (E-1)/2E.
        for (const Channel& c : regime_channels()) {
            QuadratureSpec quad = state_quad(c);
            for (int sigma : {+1, -1})
                for (int n = 0; n <= 3; ++n) {
                    if (c.regime == Regime::SmallJ && sigma == -1 && n == 0)
                        continue;
                    RadialState st = make_radial_state(c, n, sigma);
                    auto r1sq = [&](double p) {
                        const double v = eval_R1(st, p);
                        return v * v;
                    };
                    auto r2sq = [&](double p) {
                        const double v = eval_R2tilde(st, p);
                        return v * v;
                    };
                    const double big = integrate_dp_over_f(r1sq, quad).value;
                    const double small = integrate_dp_over_f(r2sq, quad).value;
                    CHECK(big + small == doctest::Approx(1.0).epsilon(1e-8));
                    CHECK(big == doctest::Approx((st.E + 1) / (2 * st.E)).epsilon(1e-8));
                    CHECK(small ==
                          doctest::Approx((st.E - 1) / (2 * st.E)).epsilon(1e-8));
                }
        }
    }

    TEST_CASE("distinct-n orthogonality under the radial scalar product")
    {
        for (const Channel& c : regime_channels()) {
            QuadratureSpec quad = state_quad(c);
            for (int m = 0; m <= 2; ++m)
                for (int n = m + 1; n <= 3; ++n) {
                    RadialState sm = make_radial_state(c, m, +1);
                    RadialState sn = make_radial_state(c, n, +1);
                    auto overlap = [&](double p) {
                        return eval_R1(sm, p) * eval_R1(sn, p) +
                               eval_R2tilde(sm, p) * eval_R2tilde(sn, p);
                    };
                    CHECK(std::abs(integrate_dp_over_f(overlap, quad).value) < 1e-8);
                }
        }
    }

    TEST_CASE("ladder application reproduces the small component")
    {
        // omega b^- R1 = (E+1) R2tilde, pointwise to 1e-9 relative.
        Channel c = derive_channel(Spin::plus, 1, reference_params());
        RadialState st = make_radial_state(c, 1, +1);
        LadderCoeffs coeffs = LadderCoeffs::from_channel(c);
        RadialFn r1 = r1_fn(st);
        GridMap map{c.params.beta0()};
        double worst = 0.0, scale = 0.0;
        for (int i = 1; i < 200; ++i) {
            const double p = map.z_to_p(-0.999 + 1.998 * i / 200.0);
            const double lhs =
                c.params.omega * apply_ladder(LadderDir::minus, coeffs, r1, p);
            const double rhs = (st.E + 1.0) * eval_R2tilde(st, p);
            worst = std::max(worst, std::abs(lhs - rhs));
            scale = std::max(scale, std::abs(rhs));
        }
        CHECK(worst <= 1e-9 * scale);
    }

    TEST_CASE("recursion consistency across the hierarchy")
    {
        // A^{(n)} profile(n; a, b) = (e_n - e_0)^{-1/2} b^+(g_eff, k_eff)
        //                            [A^{(n-1)} profile(n-1; a+1, b+1)]
        for (const Channel& c : regime_channels()) {
            const double beta0 = c.params.beta0();
            double g_eff = c.g, k_eff = c.k, e0 = 0.0;
            if (c.regime != Regime::SmallJ) {
                Refactorization refac = refactorize(c.regime, c.g, c.k, beta0);
                g_eff = refac.g_eff;
                k_eff = refac.k_eff;
                e0 = refac.e0;
            }
            LadderCoeffs coeffs{g_eff, k_eff, beta0};
            GridMap map{beta0};
            for (int n = 1; n <= 3; ++n) {
                RadialState upper = make_radial_state(c, n, +1);
                const double gap = upper.e - e0;
                const double A_lower =
                    normalization_coeff(n - 1, upper.a + 1, upper.b + 1, beta0);
                RadialFn lower{
                    [&](double p) {
                        return A_lower *
                               radial_profile(n - 1, upper.a + 1, upper.b + 1,
                                              beta0, p);
                    },
                    [&](double p) {
                        return A_lower *
                               radial_profile_deriv(n - 1, upper.a + 1, upper.b + 1,
                                                    beta0, p);
                    }};
                double worst = 0.0, scale = 0.0;
                for (int i = 1; i < 100; ++i) {
                    const double p = map.z_to_p(-0.995 + 1.99 * i / 100.0);
                    const double lhs =
                        upper.A_n *
                        radial_profile(n, upper.a, upper.b, beta0, p);
                    const double rhs =
                        apply_ladder(LadderDir::plus, coeffs, lower, p) /
                        std::sqrt(gap);
                    worst = std::max(worst, std::abs(lhs - rhs));
                    scale = std::max(scale, std::abs(lhs));
                }
                CHECK(worst <= 1e-9 * scale);
            }
        }
    }

    TEST_CASE("uniform ladder spacing e_n - e_0 = 4 n beta0 (a+b+n+1)")
    {
        for (const Channel& c : regime_channels())
            for (int n = 0; n <= 6; ++n) {
                RadialState st = make_radial_state(c, n, +1);
                const double e0 = energy_squared(0, c).e;
                const double gap = 4.0 * n * c.params.beta0() *
                                   (st.a + st.b + n + 1.0);
                CHECK(st.e - e0 == doctest::Approx(gap).epsilon(1e-11));
            }
    }

    TEST_CASE("excluded and invalid states")
    {
        Channel small = derive_channel(Spin::plus, 1, reference_params());
        CHECK_THROWS_AS(make_radial_state(small, 0, -1), std::domain_error);
        CHECK_NOTHROW(make_radial_state(small, 1, -1));
        CHECK_THROWS_AS(make_radial_state(small, -1, +1), std::domain_error);
        CHECK_THROWS_AS(make_radial_state(small, 0, 2), std::domain_error);

        Channel mid = derive_channel(Spin::plus, 199,
                                     DeformationParams::make(1.0, 0.01, 0.0));
        CHECK_THROWS_AS(make_radial_state(mid, 0, +1), NoBoundState);
    }

    TEST_CASE("negative branch reuses the spatial profile with flipped signs")
    {
        Channel c = derive_channel(Spin::minus, 1, reference_params());
        RadialState plus = make_radial_state(c, 1, +1);
        RadialState minus = make_radial_state(c, 1, -1);
        CHECK(minus.E == doctest::Approx(-plus.E).epsilon(1e-14));
        const double p = 2.0 / std::sqrt(c.params.beta0());
        // R1 profiles are proportional; the sigma flip changes the mix of
        // energy factors and the sign of the small component prefactor.
        const double ratio = eval_R1(minus, p) / eval_R1(plus, p);
        CHECK(ratio ==
              doctest::Approx(minus.energy_factor1 / plus.energy_factor1)
                  .epsilon(1e-12));
        CHECK(minus.energy_factor2 * plus.energy_factor2 < 0.0);
    }

    TEST_CASE("never-normalizable partner candidate")
    {
        for (const Channel& c : regime_channels()) {
            PartnerGroundCandidate candidate = partner_ground_candidate(c);
            CHECK((!candidate.normalizable_at_origin() ||
                   !candidate.normalizable_at_infinity()));
        }
        // s = +1/2 fails at the origin (p^{-k}, k >= 1); s = -1/2 fails at
        // infinity (p^{g/beta0}, g/beta0 > 1/2).
        Channel plus = derive_channel(Spin::plus, 1, reference_params());
        CHECK(!partner_ground_candidate(plus).normalizable_at_origin());
        Channel minus = derive_channel(Spin::minus, 1, reference_params());
        CHECK(!partner_ground_candidate(minus).normalizable_at_infinity());
    }

    TEST_CASE("wavefunction sampling rows")
    {
        Channel c = derive_channel(Spin::plus, 1, reference_params());
        RadialState st = make_radial_state(c, 1, +1);
        std::vector<WavefunctionSample> rows = sample_wavefunction(st, 0.1, 10.0, 50);
        REQUIRE(rows.size() == 50);
        CHECK(rows.front().p == doctest::Approx(0.1));
        CHECK(rows.back().p == doctest::Approx(10.0));
        for (const WavefunctionSample& row : rows) {
            CHECK(row.r2 == -row.r2tilde);
            CHECK(row.weight ==
                  doctest::Approx(1.0 / (1.0 + c.params.beta0() * row.p * row.p)));
            CHECK(row.z == doctest::Approx(p_to_z(row.p, c.params.beta0())));
        }
        CHECK_THROWS_AS(sample_wavefunction(st, -1.0, 10.0, 50), std::domain_error);
        CHECK_THROWS_AS(sample_wavefunction(st, 1.0, 10.0, 1), std::domain_error);
    }
}
