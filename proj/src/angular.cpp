#include "ddo/angular.hpp"
#include "ddo/quadrature.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ddo {

double cg_coefficient(int l, int mu, int two_sigma, int two_j, int two_m)
{
    if (l < 0 || (two_sigma != 1 && two_sigma != -1))
        return 0.0;
    if (two_m != 2 * mu + two_sigma)   // projection selection rule
        return 0.0;
    if (std::abs(mu) > l || std::abs(two_m) > two_j)
        return 0.0;
    if (two_j != 2 * l + 1 && two_j != 2 * l - 1)  // triangle rule for l x 1/2
        return 0.0;

    // Closed l x 1/2 table (Condon-Shortley):
    //   <l mu, 1/2 +1/2 | l+1/2 m> =  sqrt((l+m+1/2)/(2l+1))
    //   <l mu, 1/2 -1/2 | l+1/2 m> =  sqrt((l-m+1/2)/(2l+1))
    //   <l mu, 1/2 +1/2 | l-1/2 m> = -sqrt((l-m+1/2)/(2l+1))
    //   <l mu, 1/2 -1/2 | l-1/2 m> =  sqrt((l+m+1/2)/(2l+1))
    const double plus_num = (2 * l + two_m + 1) * 0.5;   // l + m + 1/2
    const double minus_num = (2 * l - two_m + 1) * 0.5;  // l - m + 1/2
    const double denom = 2 * l + 1;
    if (two_j == 2 * l + 1)
        return std::sqrt((two_sigma == 1 ? plus_num : minus_num) / denom);
    if (two_sigma == 1)
        return -std::sqrt(minus_num / denom);
    return std::sqrt(plus_num / denom);
}

complexd spherical_harmonic(int l, int m, double theta, double phi)
{
    if (l < 0 || std::abs(m) > l)
        throw std::invalid_argument("spherical_harmonic: need |m| <= l");
    const int am = std::abs(m);
    // std::assoc_legendre omits the Condon-Shortley phase; restore it here.
    const double norm =
        std::exp(0.5 * (std::log(2.0 * l + 1.0) - std::log(4.0 * std::numbers::pi) +
                        std::lgamma(l - am + 1.0) - std::lgamma(l + am + 1.0)));
    const double plm = std::assoc_legendre(l, am, std::cos(theta));
    const double phase = (am % 2 == 0) ? 1.0 : -1.0;
    complexd value = phase * norm * plm *
                     std::exp(complexd(0.0, am * phi));
    if (m < 0)
        value = phase * std::conj(value);
    return value;
}

Matrix2 sigma_p_matrix(double theta, double phi)
{
    const double st = std::sin(theta), ct = std::cos(theta);
    Matrix2 m;
    m[0][0] = ct;
    m[0][1] = st * std::exp(complexd(0.0, -phi));
    m[1][0] = st * std::exp(complexd(0.0, phi));
    m[1][1] = -ct;
    return m;
}

Spinor2 SpinorExpansion::eval(double theta, double phi) const
{
    Spinor2 out{complexd(0.0), complexd(0.0)};
    for (const Term& t : terms) {
        const complexd y = t.coeff * spherical_harmonic(t.l, t.mu, theta, phi);
        out[t.two_sigma == 1 ? 0 : 1] += y;
    }
    return out;
}

SpinorExpansion apply_sigma_dot_l_plus_one(const SpinorExpansion& fn)
{
    SpinorExpansion out;
    for (const auto& t : fn.terms) {
        const double l = t.l, mu = t.mu;
        if (t.two_sigma == 1) {
            out.terms.push_back({t.coeff * (mu + 1.0), t.l, t.mu, +1});
            const double up = std::sqrt((l - mu) * (l + mu + 1.0));  // L+ amplitude
            if (up != 0.0)
                out.terms.push_back({t.coeff * up, t.l, t.mu + 1, -1});
        } else {
            out.terms.push_back({t.coeff * (1.0 - mu), t.l, t.mu, -1});
            const double down = std::sqrt((l + mu) * (l - mu + 1.0));  // L- amplitude
            if (down != 0.0)
                out.terms.push_back({t.coeff * down, t.l, t.mu - 1, +1});
        }
    }
    return out;
}

SpinSphericalHarmonic::SpinSphericalHarmonic(Spin s_, int two_j_, int two_m_)
    : s(s_), two_j(two_j_), two_m(two_m_)
{
    if (two_j < 1 || two_j % 2 == 0)
        throw std::invalid_argument("SpinSphericalHarmonic: two_j must be odd positive");
    if (std::abs(two_m) > two_j || std::abs(two_m) % 2 == 0)
        throw std::invalid_argument("SpinSphericalHarmonic: bad two_m");
    l = (two_j - static_cast<int>(s)) / 2;
}

SpinorExpansion SpinSphericalHarmonic::expansion() const
{
    SpinorExpansion out;
    for (int two_sigma : {+1, -1}) {
        const int mu = (two_m - two_sigma) / 2;
        const double c = cg_coefficient(l, mu, two_sigma, two_j, two_m);
        if (c != 0.0)
            out.terms.push_back({complexd(c), l, mu, two_sigma});
    }
    return out;
}

Spinor2 SpinSphericalHarmonic::eval(double theta, double phi) const
{
    return expansion().eval(theta, phi);
}

namespace {

complexd sphere_inner_product_fn(
    const std::function<Spinor2(double, double)>& f,
    const std::function<Spinor2(double, double)>& g, int l_max)
{
    const int n_theta = l_max + 2;
    const int n_phi = 2 * l_max + 3;
    const GaussRule& rule = gauss_legendre_rule(n_theta);
    complexd sum(0.0);
    for (int i = 0; i < n_theta; ++i) {
        const double theta = std::acos(rule.nodes[i]);
        for (int k = 0; k < n_phi; ++k) {
            const double phi = 2.0 * std::numbers::pi * k / n_phi;
            const Spinor2 fv = f(theta, phi);
            const Spinor2 gv = g(theta, phi);
            sum += rule.weights[i] *
                   (std::conj(fv[0]) * gv[0] + std::conj(fv[1]) * gv[1]);
        }
    }
    return sum * (2.0 * std::numbers::pi / n_phi);
}

double spinor_norm(const Spinor2& v)
{
    return std::sqrt(std::norm(v[0]) + std::norm(v[1]));
}

} // namespace

complexd sphere_inner_product(const SpinorExpansion& f, const SpinorExpansion& g,
                              int l_max)
{
    return sphere_inner_product_fn(
        [&](double t, double p) { return f.eval(t, p); },
        [&](double t, double p) { return g.eval(t, p); }, l_max);
}

VerificationReport verify_angular_identities(Spin s, int two_j, int two_m,
                                             int sample_count, std::uint64_t seed)
{
    SpinSphericalHarmonic harmonic(s, two_j, two_m);
    const Spin s_flip = (s == Spin::plus) ? Spin::minus : Spin::plus;
    SpinSphericalHarmonic flipped(s_flip, two_j, two_m);
    const SpinorExpansion expansion = harmonic.expansion();
    const SpinorExpansion flipped_expansion = flipped.expansion();
    const SpinorExpansion applied = apply_sigma_dot_l_plus_one(expansion);
    const double eigenvalue = static_cast<int>(s) * 0.5 * (two_j + 1);
    const int l_max = (two_j + 1) / 2;

    VerificationReport report;
    {
        std::ostringstream title;
        title << "angular identities, s=" << static_cast<int>(s) << "/2 two_j="
              << two_j << " two_m=" << two_m;
        report.title = title.str();
    }

    // Unit norm.
    const complexd norm2 = sphere_inner_product(expansion, expansion, l_max);
    report.add("unit norm", std::abs(norm2 - 1.0), 1e-8);

    // Expansion of sigma_p Y in the (j, m) pair {Y_s, Y_-s}, by quadrature.
    auto sigma_p_y = [&](double theta, double phi) {
        const Matrix2 m = sigma_p_matrix(theta, phi);
        const Spinor2 y = expansion.eval(theta, phi);
        return Spinor2{m[0][0] * y[0] + m[0][1] * y[1],
                       m[1][0] * y[0] + m[1][1] * y[1]};
    };
    auto eval_of = [](const SpinorExpansion& e) {
        return [&e](double t, double p) { return e.eval(t, p); };
    };
    const complexd c_same =
        sphere_inner_product_fn(eval_of(expansion), sigma_p_y, l_max);
    const complexd c_flip =
        sphere_inner_product_fn(eval_of(flipped_expansion), sigma_p_y, l_max);
    const complexd sigma_p_norm2 =
        sphere_inner_product_fn(sigma_p_y, sigma_p_y, l_max);
    const double completeness = std::abs(sigma_p_norm2 - std::norm(c_same) -
                                         std::norm(c_flip));
    report.add("sigma_p Y lies in the (j,m) doublet", completeness, 1e-8);

    SpinorExpansion sigma_p_y_expansion;
    for (const auto& t : expansion.terms)
        sigma_p_y_expansion.terms.push_back({c_same * t.coeff, t.l, t.mu, t.two_sigma});
    for (const auto& t : flipped_expansion.terms)
        sigma_p_y_expansion.terms.push_back({c_flip * t.coeff, t.l, t.mu, t.two_sigma});
    const SpinorExpansion applied_sigma_p_y =
        apply_sigma_dot_l_plus_one(sigma_p_y_expansion);

    std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(two_j) << 20) ^
                        (static_cast<std::uint64_t>(two_m + 512) << 8) ^
                        static_cast<std::uint64_t>(s == Spin::plus ? 1 : 2));
    std::uniform_real_distribution<double> uniform(0.0, 1.0);

    double max_eig = 0.0, max_flip = 0.0, max_anticom = 0.0, max_sigma_p2 = 0.0;
    double scale = 0.0;
    for (int i = 0; i < sample_count; ++i) {
        const double theta = std::acos(2.0 * uniform(rng) - 1.0);
        const double phi = 2.0 * std::numbers::pi * uniform(rng);
        const Spinor2 y = expansion.eval(theta, phi);
        const Spinor2 y_flip = flipped_expansion.eval(theta, phi);
        const Spinor2 applied_y = applied.eval(theta, phi);
        const Matrix2 m = sigma_p_matrix(theta, phi);
        scale = std::max(scale, spinor_norm(y));

        // (i) eigenvalue of sigma.L + 1
        max_eig = std::max(max_eig,
                           spinor_norm({applied_y[0] - eigenvalue * y[0],
                                        applied_y[1] - eigenvalue * y[1]}));

        // (ii) sigma_p Y_s = -Y_{-s}
        const Spinor2 my{m[0][0] * y[0] + m[0][1] * y[1],
                         m[1][0] * y[0] + m[1][1] * y[1]};
        max_flip = std::max(
            max_flip, spinor_norm({my[0] + y_flip[0], my[1] + y_flip[1]}));

        // (iii) {sigma_p, sigma.L + 1} Y = 0
        const Spinor2 term1{m[0][0] * applied_y[0] + m[0][1] * applied_y[1],
                            m[1][0] * applied_y[0] + m[1][1] * applied_y[1]};
        const Spinor2 term2 = applied_sigma_p_y.eval(theta, phi);
        max_anticom = std::max(
            max_anticom, spinor_norm({term1[0] + term2[0], term1[1] + term2[1]}));

        // sigma_p^2 = I
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                const complexd entry =
                    m[r][0] * m[0][c] + m[r][1] * m[1][c] - (r == c ? 1.0 : 0.0);
                max_sigma_p2 = std::max(max_sigma_p2, std::abs(entry));
            }
    }
    if (scale == 0.0)
        scale = 1.0;
    report.add("(sigma.L+1) Y = s(2j+1) Y", max_eig / scale, 1e-8);
    report.add("sigma_p Y_s = -Y_{-s}", max_flip / scale, 1e-8);
    report.add("{sigma_p, sigma.L+1} Y = 0", max_anticom / scale, 1e-8);
    report.add("sigma_p^2 = I", max_sigma_p2, 1e-14);
    return report;
}

} // namespace ddo
