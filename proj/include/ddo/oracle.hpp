#ifndef DDO_ORACLE_HPP
#define DDO_ORACLE_HPP

#include "ddo/model.hpp"
#include "ddo/operators.hpp"
#include "ddo/report.hpp"

#include <vector>

namespace ddo {

/// Finite-difference grid for the brute-force eigensolver. The operator is
/// discretized on the compact z domain truncated to [z_min, z_max], with
/// Dirichlet conditions at the truncated endpoints.
struct GridSpec {
    int size = 2000;            // interior nodes
    double z_min = -1.0 + 1e-6;
    double z_max = 1.0 - 1e-6;
    int fd_order = 2;           // 2 or 4
};

/// Symmetric banded matrix, lower storage: bands[0] is the diagonal (n
/// entries), bands[d] the d-th subdiagonal (n-d entries). Symmetry is exact
/// by representation.
struct BandedSymmetric {
    int n = 0;
    std::vector<std::vector<double>> bands;

    int half_bandwidth() const { return static_cast<int>(bands.size()) - 1; }
    double& at(int band, int i) { return bands[band][i]; }
    double at(int band, int i) const { return bands[band][i]; }
};

// Discretizes h0 = b_p^+ b_p^- of the channel. Internally the z interval is
// reparametrized by theta = arcsin z, uniform in theta: in the Liouville
// variable x = theta/(2 sqrt(beta0)) the operator is exactly
// -d^2/dx^2 + V(z(x)) with a plain L^2(dx) scalar product, so the
// finite-difference matrix is symmetric with no further weight handling.
// This path uses only the H0Coeffs and the z map: no Jacobi polynomials and
// no closed-form energies, so agreement with them is evidence.
BandedSymmetric discretize_h0(const Channel& channel, const GridSpec& grid);

// Same discretization for an arbitrary operator of the h0 shape (used for
// the SUSY partner b_p^- b_p^+).
BandedSymmetric discretize_operator(const H0Coeffs& coeffs, const GridSpec& grid);

// The `count` smallest eigenvalues, ascending, by inertia-count bisection
// (Sylvester LDL^T pivot signs on A - t I). Exact multiplicity handling.
std::vector<double> lowest_eigenvalues(const BandedSymmetric& matrix, int count);

// Richardson-extrapolated lowest eigenvalues from grids of size and 2*size.
std::vector<double> extrapolated_eigenvalues(const Channel& channel,
                                             const GridSpec& grid, int count);

// Compares grid eigenvalues of h0 with the closed-form e_n for n = 0..n_max
// at relative tolerance tol (denominator max(e_n, 1)), and checks the
// partner-spectrum degeneracy of b_p^- b_p^+ against b_p^+ b_p^-.
VerificationReport verify_spectrum(const Channel& channel, int n_max, double tol,
                                   const GridSpec& grid = GridSpec{});

} // namespace ddo

#endif
