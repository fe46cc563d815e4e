#include "ddo/oracle.hpp"
#include "ddo/errors.hpp"
#include "ddo/wavefunctions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace ddo {

namespace {

void check_grid(const GridSpec& grid)
{
    if (grid.size < 64)
        throw std::invalid_argument("GridSpec: size must be at least 64");
    if (!(grid.z_min > -1.0 && grid.z_max < 1.0 && grid.z_min < grid.z_max))
        throw std::invalid_argument("GridSpec: need -1 < z_min < z_max < 1");
    if (grid.fd_order != 2 && grid.fd_order != 4)
        throw std::invalid_argument("GridSpec: fd_order must be 2 or 4");
}

} // namespace

BandedSymmetric discretize_operator(const H0Coeffs& coeffs, const GridSpec& grid)
{
    check_grid(grid);
    const int m = grid.size;
    const double beta0 = coeffs.beta0;
    GridMap map{beta0};

    // Uniform grid in theta = arcsin z; x = theta / (2 sqrt(beta0)). In x the
    // endpoints carry inverse-square walls of strength k(k-1) at p -> 0 and
    // p2_coeff/beta0^2 at p -> inf. When a strength is ~0 (the strengths are
    // integer-spaced: ~0 or >= 2) that endpoint is regular, the eigenfunction
    // vanishes only linearly, and the grid must extend to the exact endpoint:
    // truncating misplaces the Dirichlet wall by an amount Richardson
    // extrapolation cannot remove. Singular endpoints keep the z truncation,
    // where the eigenfunctions vanish to high order.
    const double theta_min = std::abs(coeffs.inv_p2_coeff) < 0.5
                                 ? -0.5 * std::numbers::pi
                                 : std::asin(grid.z_min);
    const double theta_max = std::abs(coeffs.p2_coeff) / (beta0 * beta0) < 0.5
                                 ? 0.5 * std::numbers::pi
                                 : std::asin(grid.z_max);
    const double h = (theta_max - theta_min) / (m + 1) / (2.0 * std::sqrt(beta0));

    std::vector<double> potential(m);
    for (int i = 0; i < m; ++i) {
        const double theta =
            theta_min + (theta_max - theta_min) * (i + 1) / (m + 1);
        const double p = map.z_to_p(std::sin(theta));
        potential[i] = coeffs.potential(p);
    }

    BandedSymmetric mat;
    mat.n = m;
    const double inv_h2 = 1.0 / (h * h);
    if (grid.fd_order == 2) {
        mat.bands.assign(2, {});
        mat.bands[0].resize(m);
        mat.bands[1].assign(m - 1, -inv_h2);
        for (int i = 0; i < m; ++i)
            mat.bands[0][i] = 2.0 * inv_h2 + potential[i];
    } else {
        // 5-point stencil for -u''. Beyond a truncated singular wall the
        // eigenfunction vanishes to high order and zero extension is exact
        // enough; at a regular endpoint it continues antisymmetrically, so
        // the ghost point u(x0 - h) = -u(x0 + h) folds into the diagonal.
        mat.bands.assign(3, {});
        mat.bands[0].resize(m);
        mat.bands[1].assign(m - 1, -16.0 / 12.0 * inv_h2);
        mat.bands[2].assign(m - 2, 1.0 / 12.0 * inv_h2);
        for (int i = 0; i < m; ++i)
            mat.bands[0][i] = 30.0 / 12.0 * inv_h2 + potential[i];
        if (std::abs(coeffs.inv_p2_coeff) < 0.5)
            mat.bands[0][0] -= inv_h2 / 12.0;
        if (std::abs(coeffs.p2_coeff) / (beta0 * beta0) < 0.5)
            mat.bands[0][m - 1] -= inv_h2 / 12.0;
    }
    return mat;
}

BandedSymmetric discretize_h0(const Channel& channel, const GridSpec& grid)
{
    if (channel.regime == Regime::IntermediateJ)
        throw NoBoundState("discretize_h0: intermediate-j channel has no bound states");
    return discretize_operator(
        H0Coeffs::from_ladder(channel.g, channel.k, channel.params.beta0()), grid);
}

namespace {

// Eigenvalue count below t: negative pivots of the LDL^T factorization of
// A - t I, with the usual tiny-pivot safeguard so counts stay monotone.
int count_below(const BandedSymmetric& mat, double t)
{
    const int n = mat.n;
    const int w = mat.half_bandwidth();
    // factor[j][i]: L(i, i-j) for j = 1..w; d[i] pivots.
    std::vector<std::vector<double>> factor(w + 1, std::vector<double>(n, 0.0));
    std::vector<double>& d = factor[0];
    double scale = 0.0;
    for (int i = 0; i < n; ++i)
        scale = std::max(scale, std::abs(mat.at(0, i)) + std::abs(t));
    const double tiny = 1e-300 + 1e-30 * scale;

    int negatives = 0;
    for (int i = 0; i < n; ++i) {
        double dii = mat.at(0, i) - t;
        for (int j = 1; j <= std::min(w, i); ++j)
            dii -= factor[j][i - j] * factor[j][i - j] * d[i - j];
        if (std::abs(dii) < tiny)
            dii = -tiny;
        d[i] = dii;
        if (dii < 0.0)
            ++negatives;
        // Column i of L below the diagonal.
        for (int r = 1; r <= w && i + r < n; ++r) {
            double lri = mat.at(r, i);
            for (int j = 1; j <= w - r; ++j) {
                if (i - j < 0)
                    break;
                lri -= factor[j][i - j] * factor[j + r][i - j] * d[i - j];
            }
            factor[r][i] = lri / dii;
        }
    }
    return negatives;
}

} // namespace

std::vector<double> lowest_eigenvalues(const BandedSymmetric& mat, int count)
{
    if (count < 1 || count > mat.n)
        throw std::invalid_argument("lowest_eigenvalues: bad count");

    // Gershgorin bounds.
    double lo = mat.at(0, 0), hi = mat.at(0, 0);
    for (int i = 0; i < mat.n; ++i) {
        double radius = 0.0;
        for (int b = 1; b <= mat.half_bandwidth(); ++b) {
            if (i - b >= 0)
                radius += std::abs(mat.at(b, i - b));
            if (i + b < mat.n)
                radius += std::abs(mat.at(b, i));
        }
        lo = std::min(lo, mat.at(0, i) - radius);
        hi = std::max(hi, mat.at(0, i) + radius);
    }

    const double span = hi - lo;
    // Counts computed in floating point resolve eigenvalues to about
    // eps * ||A||; below that the bisection would chase noise.
    const double floor = 8.0 * 2.22e-16 * span + 1e-300;
    std::vector<double> eigenvalues(count);
    for (int k = 0; k < count; ++k) {
        double a = lo, b = hi;
        // Invariant: count_below(a) <= k < count_below(b).
        int iterations = 0;
        while (b - a > 1e-13 * std::max(std::abs(a), std::abs(b)) + floor) {
            if (++iterations > 200) {
                std::ostringstream msg;
                msg << "lowest_eigenvalues: bisection failed to converge for "
                    << "eigenvalue " << k << " (interval [" << a << ", " << b << "])";
                throw std::runtime_error(msg.str());
            }
            const double mid = 0.5 * (a + b);
            if (count_below(mat, mid) > k)
                b = mid;
            else
                a = mid;
        }
        eigenvalues[k] = 0.5 * (a + b);
    }
    return eigenvalues;
}

std::vector<double> extrapolated_eigenvalues(const Channel& channel,
                                             const GridSpec& grid, int count)
{
    GridSpec fine = grid;
    fine.size = 2 * grid.size + 1;  // exactly halves the spacing
    std::vector<double> coarse_eigs =
        lowest_eigenvalues(discretize_h0(channel, grid), count);
    std::vector<double> fine_eigs =
        lowest_eigenvalues(discretize_h0(channel, fine), count);
    std::vector<double> out(count);
    const double order = grid.fd_order == 2 ? 4.0 : 16.0;  // 2^p
    for (int k = 0; k < count; ++k)
        out[k] = (order * fine_eigs[k] - coarse_eigs[k]) / (order - 1.0);
    return out;
}

VerificationReport verify_spectrum(const Channel& channel, int n_max, double tol,
                                   const GridSpec& grid)
{
    if (channel.regime == Regime::IntermediateJ)
        throw NoBoundState("verify_spectrum: intermediate-j channel");

    VerificationReport report;
    {
        std::ostringstream title;
        title << "grid oracle vs closed form, s=" << static_cast<int>(channel.s)
              << "/2 two_j=" << channel.two_j << " (" << regime_name(channel.regime)
              << ")";
        report.title = title.str();
    }

    std::vector<double> grid_eigs =
        extrapolated_eigenvalues(channel, grid, n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        const double formula = energy_squared(n, channel).e;
        const double rel =
            std::abs(grid_eigs[n] - formula) / std::max(formula, 1.0);
        std::ostringstream name;
        name << "e_" << n << " grid=" << grid_eigs[n] << " formula=" << formula;
        report.add(name.str(), rel, tol);
    }

    // Partner degeneracy: spec(b- b+) equals spec(b+ b-) minus the zero mode
    // in the unbroken (SmallJ) regime, and equals it outright otherwise.
    const double beta0 = channel.params.beta0();
    BandedSymmetric partner = discretize_operator(
        H0Coeffs::partner(channel.g, channel.k, beta0), grid);
    BandedSymmetric partner_fine = discretize_operator(
        H0Coeffs::partner(channel.g, channel.k, beta0),
        GridSpec{2 * grid.size + 1, grid.z_min, grid.z_max, grid.fd_order});
    const int count = n_max + 1;
    std::vector<double> partner_coarse = lowest_eigenvalues(partner, count);
    std::vector<double> partner_fine_eigs = lowest_eigenvalues(partner_fine, count);
    const double order = grid.fd_order == 2 ? 4.0 : 16.0;
    const int offset = channel.regime == Regime::SmallJ ? 1 : 0;
    for (int i = 0; i + offset <= n_max; ++i) {
        const double partner_eig =
            (order * partner_fine_eigs[i] - partner_coarse[i]) / (order - 1.0);
        const double h0_eig = energy_squared(i + offset, channel).e;
        const double rel = std::abs(partner_eig - h0_eig) / std::max(h0_eig, 1.0);
        std::ostringstream name;
        name << "partner e_" << i << " vs h0 e_" << (i + offset);
        report.add(name.str(), rel, tol);
    }
    return report;
}

} // namespace ddo
