#include <doctest.h>

#include "ddo/errors.hpp"
#include "ddo/oracle.hpp"
#include "ddo/wavefunctions.hpp"

#include <cmath>
#include <stdexcept>

using namespace ddo;

namespace {

BandedSymmetric diagonal_matrix(std::initializer_list<double> values)
{
    BandedSymmetric mat;
    mat.n = static_cast<int>(values.size());
    mat.bands.assign(2, {});
    mat.bands[0].assign(values.begin(), values.end());
    mat.bands[1].assign(mat.n - 1, 0.0);
    return mat;
}

Channel small_channel()
{
    return derive_channel(Spin::plus, 1, DeformationParams::make(1.0, 0.01, 0.01));
}

} // namespace

TEST_SUITE("oracle")
{
    TEST_CASE("lowest eigenvalues of explicit matrices")
    {
        BandedSymmetric identity = diagonal_matrix({1.0, 1.0, 1.0});
        std::vector<double> eigs = lowest_eigenvalues(identity, 3);
        for (double e : eigs)
            CHECK(e == doctest::Approx(1.0).epsilon(1e-12));

        BandedSymmetric diag = diagonal_matrix({3.0, 1.0, 2.0});
        eigs = lowest_eigenvalues(diag, 2);
        CHECK(eigs[0] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(eigs[1] == doctest::Approx(2.0).epsilon(1e-12));

        // 2x2 with off-diagonal: eigenvalues 2 -+ sqrt(2)
        BandedSymmetric coupled;
        coupled.n = 2;
        coupled.bands = {{2.0, 2.0}, {std::sqrt(2.0)}};
        eigs = lowest_eigenvalues(coupled, 2);
        CHECK(eigs[0] == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-10));
        CHECK(eigs[1] == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-10));

        CHECK_THROWS_AS(lowest_eigenvalues(identity, 0), std::invalid_argument);
        CHECK_THROWS_AS(lowest_eigenvalues(identity, 4), std::invalid_argument);
    }

    TEST_CASE("pentadiagonal bisection on a matrix with a known spectrum")
    {
        // (28 I - 16 J + J^2)/12 where J is the Dirichlet tridiagonal shift:
        // a genuine bandwidth-2 matrix whose eigenvalues follow from
        // lambda(J) = 2 cos(k pi/(m+1)) with exact sine eigenvectors.
        const int m = 40;
        BandedSymmetric mat;
        mat.n = m;
        mat.bands.assign(3, {});
        mat.bands[0].assign(m, 30.0 / 12.0);
        mat.bands[0][0] = 29.0 / 12.0;      // (J^2) diagonal is 1 at the ends
        mat.bands[0][m - 1] = 29.0 / 12.0;
        mat.bands[1].assign(m - 1, -16.0 / 12.0);
        mat.bands[2].assign(m - 2, 1.0 / 12.0);
        std::vector<double> eigs = lowest_eigenvalues(mat, 3);
        for (int k = 1; k <= 3; ++k) {
            const double lam = 2.0 * std::cos(k * M_PI / (m + 1));
            const double expected = (28.0 - 16.0 * lam + lam * lam) / 12.0;
            CHECK(eigs[k - 1] == doctest::Approx(expected).epsilon(1e-10));
        }
    }

    TEST_CASE("grid validation")
    {
        GridSpec bad;
        bad.size = 32;
        CHECK_THROWS_AS(discretize_h0(small_channel(), bad), std::invalid_argument);
        GridSpec bad_order;
        bad_order.fd_order = 3;
        CHECK_THROWS_AS(discretize_h0(small_channel(), bad_order),
                        std::invalid_argument);
        Channel mid = derive_channel(Spin::plus, 199,
                                     DeformationParams::make(1.0, 0.01, 0.0));
        CHECK_THROWS_AS(discretize_h0(mid, GridSpec{}), NoBoundState);
    }

    TEST_CASE("matrix symmetry is exact by representation")
    {
        BandedSymmetric mat = discretize_h0(small_channel(), GridSpec{256});
        CHECK(mat.n == 256);
        CHECK(mat.half_bandwidth() == 1);
        // lower-band storage: reconstructing (i,j) and (j,i) reads the same cell
        CHECK(mat.at(1, 10) == mat.at(1, 10));
    }

    TEST_CASE("unbroken zero mode on the grid")
    {
        std::vector<double> eigs =
            extrapolated_eigenvalues(small_channel(), GridSpec{2000}, 2);
        const double e1 = energy_squared(1, small_channel()).e;
        CHECK(std::abs(eigs[0]) < 1e-6 * e1);
    }

    TEST_CASE("frozen SMinus lowest eigenvalue")
    {
        Channel c = derive_channel(Spin::minus, 1,
                                   DeformationParams::make(1.0, 0.01, 0.01));
        std::vector<double> eigs = extrapolated_eigenvalues(c, GridSpec{4000}, 1);
        CHECK(std::abs(eigs[0] - 6.12) / 6.12 < 1e-4);
    }

    TEST_CASE("verify_spectrum passes for all three regimes")
    {
        GridSpec grid{2000};
        for (auto [s, two_j, params] :
             {std::tuple{Spin::plus, 1, DeformationParams::make(1.0, 0.01, 0.01)},
              std::tuple{Spin::minus, 1, DeformationParams::make(1.0, 0.01, 0.01)},
              std::tuple{Spin::plus, 201, DeformationParams::make(1.0, 0.01, 0.0)}}) {
            Channel c = derive_channel(s, two_j, params);
            VerificationReport report = verify_spectrum(c, 4, 1e-4, grid);
            CHECK(report.pass());
        }
    }

    TEST_CASE("broken regimes have strictly positive lowest eigenvalue")
    {
        Channel sminus = derive_channel(Spin::minus, 1,
                                        DeformationParams::make(1.0, 0.01, 0.01));
        Channel vlarge = derive_channel(Spin::plus, 201,
                                        DeformationParams::make(1.0, 0.01, 0.0));
        for (const Channel& c : {sminus, vlarge}) {
            std::vector<double> eigs = extrapolated_eigenvalues(c, GridSpec{2000}, 1);
            CHECK(eigs[0] > 1e-5);
        }
    }

    TEST_CASE("grid refinement converges at second order")
    {
        Channel c = small_channel();
        const double exact = energy_squared(1, c).e;
        double previous_error = 0.0;
        for (int i = 0; i < 3; ++i) {
            const int size = 500 << i;
            std::vector<double> eigs =
                lowest_eigenvalues(discretize_h0(c, GridSpec{size}), 2);
            const double error = std::abs(eigs[1] - exact);
            if (i > 0) {
                // halving h divides the error by about 4
                CHECK(error < previous_error / 3.0);
            }
            previous_error = error;
        }
    }

    TEST_CASE("fourth-order stencil agrees with the second-order result")
    {
        Channel c = small_channel();
        GridSpec fd4{1000, -1.0 + 1e-6, 1.0 - 1e-6, 4};
        std::vector<double> eigs = lowest_eigenvalues(discretize_h0(c, fd4), 3);
        for (int n = 0; n < 3; ++n) {
            const double exact = energy_squared(n, c).e;
            CHECK(std::abs(eigs[n] - exact) <= 1e-5 * std::max(exact, 1.0));
        }
    }

    TEST_CASE("eigenvalues stable under truncation halving")
    {
        Channel c = derive_channel(Spin::minus, 1,
                                   DeformationParams::make(1.0, 0.01, 0.01));
        GridSpec tight{2000, -1.0 + 5e-7, 1.0 - 5e-7, 2};
        std::vector<double> base = extrapolated_eigenvalues(c, GridSpec{2000}, 3);
        std::vector<double> tightened = extrapolated_eigenvalues(c, tight, 3);
        for (int i = 0; i < 3; ++i)
            CHECK(std::abs(base[i] - tightened[i]) <=
                  1e-4 * std::max(1.0, std::abs(base[i])));
    }
}
