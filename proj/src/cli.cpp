#include "ddo/cli.hpp"

#include "ddo/angular.hpp"
#include "ddo/errors.hpp"
#include "ddo/model.hpp"
#include "ddo/oracle.hpp"
#include "ddo/quadrature.hpp"
#include "ddo/suite.hpp"
#include "ddo/wavefunctions.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <tuple>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace ddo::cli {

namespace {

// ---- deterministic JSON/CSV emission: every float is %.12e --------------

std::string jnum(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12e", v);
    return buf;
}

std::string jstr(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    out += '"';
    return out;
}

class JsonObj {
public:
    JsonObj& raw(const std::string& key, const std::string& value)
    {
        body_ += (first_ ? "" : ", ");
        body_ += jstr(key) + ": " + value;
        first_ = false;
        return *this;
    }
    JsonObj& num(const std::string& key, double v) { return raw(key, jnum(v)); }
    JsonObj& integer(const std::string& key, long v)
    {
        return raw(key, std::to_string(v));
    }
    JsonObj& str(const std::string& key, const std::string& v)
    {
        return raw(key, jstr(v));
    }
    JsonObj& boolean(const std::string& key, bool v)
    {
        return raw(key, v ? "true" : "false");
    }
    std::string str() const { return "{" + body_ + "}"; }

private:
    std::string body_;
    bool first_ = true;
};

std::string jarr(const std::vector<std::string>& items)
{
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i)
            out += ", ";
        out += items[i];
    }
    return out + "]";
}

std::string config_json(const RunConfig& c)
{
    JsonObj obj;
    obj.str("command", c.command)
        .num("omega", c.omega)
        .num("beta", c.beta)
        .num("beta_prime", c.beta_prime)
        .num("gamma", c.gamma)
        .integer("two_j", c.two_j)
        .str("s", c.s ? std::string(1, c.s) : "")
        .integer("n", c.n)
        .integer("sigma", c.sigma)
        .integer("two_j_max", c.two_j_max)
        .integer("n_max", c.n_max)
        .str("format", c.format)
        .str("output", c.output)
        .str("scope", c.scope)
        .num("tol", c.tol)
        .integer("grid_size", c.grid_size)
        .integer("fd_order", c.fd_order)
        .num("p_min", c.p_min)
        .num("p_max", c.p_max)
        .integer("samples", c.samples)
        .integer("quad_order", c.quad_order);
    return obj.str();
}

void config_csv_header(const RunConfig& c, std::ostream& os)
{
    os << "# command=" << c.command << " omega=" << jnum(c.omega)
       << " beta=" << jnum(c.beta) << " beta_prime=" << jnum(c.beta_prime)
       << " gamma=" << jnum(c.gamma) << "\n";
    os << "# two_j=" << c.two_j << " s=" << (c.s ? std::string(1, c.s) : "")
       << " n=" << c.n << " sigma=" << c.sigma << " two_j_max=" << c.two_j_max
       << " n_max=" << c.n_max << " scope=" << c.scope << " tol=" << jnum(c.tol)
       << " grid_size=" << c.grid_size << " fd_order=" << c.fd_order
       << " samples=" << c.samples << " quad_order=" << c.quad_order << "\n";
}

Spin spin_of(char s)
{
    if (s == '+')
        return Spin::plus;
    if (s == '-')
        return Spin::minus;
    throw std::domain_error("s must be '+' or '-'");
}

std::string report_json(const VerificationReport& report)
{
    std::vector<std::string> checks;
    checks.reserve(report.checks.size());
    for (const CheckResult& c : report.checks) {
        JsonObj obj;
        obj.str("name", c.name)
            .num("residual", c.residual)
            .num("tolerance", c.tolerance)
            .boolean("pass", c.pass);
        if (!c.detail.empty())
            obj.str("detail", c.detail);
        checks.push_back(obj.str());
    }
    JsonObj obj;
    obj.str("title", report.title)
        .boolean("pass", report.pass())
        .raw("checks", jarr(checks));
    return obj.str();
}

DeformationParams params_of(const RunConfig& c)
{
    return DeformationParams::make(c.omega, c.beta, c.beta_prime, c.gamma);
}

// ---- commands ------------------------------------------------------------

int cmd_spectrum(const RunConfig& config, std::ostream& os)
{
    DeformationParams params = params_of(config);
    if ((config.two_j != 0) != (config.s != 0))
        throw std::domain_error(
            "spectrum: --two-j and --s must be given together (single-channel "
            "mode) or both omitted (full table)");
    SpectrumTable table;
    if (config.two_j != 0 && config.s != 0) {
        // Single-channel request: surface NoBoundState (exit 2) to the caller.
        Channel channel = derive_channel(spin_of(config.s), config.two_j, params);
        energy_squared(0, channel);
        for (int sigma : {+1, -1}) {
            const int n_start =
                (channel.regime == Regime::SmallJ && sigma == -1) ? 1 : 0;
            for (int n = n_start; n <= config.n_max; ++n) {
                EnergySquared es = energy_squared(n, channel);
                SpectrumEntry entry{channel.s, channel.two_j, channel.j,
                                    channel.regime, n, 2 * n + channel.l, sigma,
                                    es.e, es.E2_minus_1,
                                    sigma * std::sqrt(1.0 + es.E2_minus_1)};
                table.entries.push_back(entry);
            }
        }
        std::sort(table.entries.begin(), table.entries.end(),
                  [](const SpectrumEntry& x, const SpectrumEntry& y) {
                      return std::make_tuple(std::abs(x.E), x.n, x.sigma) <
                             std::make_tuple(std::abs(y.E), y.n, y.sigma);
                  });
    } else {
        table = spectrum_table(params, config.two_j_max, config.n_max);
    }

    if (config.format == "csv") {
        config_csv_header(config, os);
        os << "s,two_j,j,regime,n,N,sigma,e,E2_minus_1,E\n";
        for (const SpectrumEntry& e : table.entries)
            os << (e.s == Spin::plus ? "+" : "-") << "," << e.two_j << ","
               << jnum(e.j) << "," << regime_name(e.regime) << "," << e.n << ","
               << e.N << "," << e.sigma << "," << jnum(e.e) << ","
               << jnum(e.E2_minus_1) << "," << jnum(e.E) << "\n";
        return 0;
    }

    std::vector<std::string> entries;
    for (const SpectrumEntry& e : table.entries) {
        JsonObj obj;
        obj.str("s", e.s == Spin::plus ? "+" : "-")
            .integer("two_j", e.two_j)
            .num("j", e.j)
            .str("regime", regime_name(e.regime))
            .integer("n", e.n)
            .integer("N", e.N)
            .integer("sigma", e.sigma)
            .num("e", e.e)
            .num("E2_minus_1", e.E2_minus_1)
            .num("E", e.E);
        entries.push_back(obj.str());
    }
    std::vector<std::string> skipped;
    for (const Channel& c : table.no_bound_state) {
        JsonObj obj;
        obj.str("s", c.s == Spin::plus ? "+" : "-").integer("two_j", c.two_j);
        skipped.push_back(obj.str());
    }
    JsonObj root;
    root.integer("schema", 1)
        .raw("config", config_json(config))
        .raw("entries", jarr(entries))
        .raw("no_bound_state", jarr(skipped));
    os << root.str() << "\n";
    return 0;
}

int cmd_classify(const RunConfig& config, std::ostream& os)
{
    DeformationParams params = params_of(config);
    Channel channel = derive_channel(spin_of(config.s), config.two_j, params);
    const double bw = params.beta * params.omega;
    const double bpw = params.beta_prime * params.omega;

    JsonObj ineq;
    if (channel.s == Spin::plus) {
        ineq.num("small_j_lhs", bw * (channel.two_j + 2) + bpw)
            .num("very_large_j_lhs", bw * channel.two_j - bpw)
            .num("bound", 2.0);
    } else {
        // <p^2> convergence for s = -1/2: 2 + 2 b w j > b' w, true for any j
        // in the small-deformation regime.
        ineq.num("s_minus_lhs", 2.0 + bw * channel.two_j).num("bound", bpw);
    }
    JsonObj ch;
    ch.str("s", channel.s == Spin::plus ? "+" : "-")
        .integer("two_j", channel.two_j)
        .num("j", channel.j)
        .integer("l", channel.l)
        .num("g", channel.g)
        .num("k", channel.k)
        .integer("epsilon", channel.epsilon)
        .str("regime", regime_name(channel.regime))
        .raw("inequalities", ineq.str());
    JsonObj root;
    root.integer("schema", 1)
        .raw("config", config_json(config))
        .raw("channel", ch.str());
    os << root.str() << "\n";
    return 0;
}

int cmd_wavefunction(const RunConfig& config, std::ostream& os)
{
    DeformationParams params = params_of(config);
    Channel channel = derive_channel(spin_of(config.s), config.two_j, params);
    RadialState state = make_radial_state(channel, config.n, config.sigma);
    const double scale = 1.0 / std::sqrt(params.beta0());
    const double p_min = config.p_min > 0.0 ? config.p_min : 0.01 * scale;
    const double p_max = config.p_max > 0.0 ? config.p_max : 100.0 * scale;
    std::vector<WavefunctionSample> rows =
        sample_wavefunction(state, p_min, p_max, config.samples);

    if (config.format == "csv") {
        config_csv_header(config, os);
        os << "p,z,R1,R2tilde,R2,weight\n";
        for (const WavefunctionSample& r : rows)
            os << jnum(r.p) << "," << jnum(r.z) << "," << jnum(r.r1) << ","
               << jnum(r.r2tilde) << "," << jnum(r.r2) << "," << jnum(r.weight)
               << "\n";
        return 0;
    }

    JsonObj st;
    st.str("regime", regime_name(channel.regime))
        .integer("n", state.n)
        .integer("sigma", state.sigma)
        .num("a", state.a)
        .num("b", state.b)
        .num("a_tilde", state.a_tilde)
        .num("b_tilde", state.b_tilde)
        .integer("n_tilde", state.n_tilde)
        .num("e", state.e)
        .num("E", state.E);
    std::vector<std::string> row_objs;
    row_objs.reserve(rows.size());
    for (const WavefunctionSample& r : rows) {
        JsonObj obj;
        obj.num("p", r.p)
            .num("z", r.z)
            .num("R1", r.r1)
            .num("R2tilde", r.r2tilde)
            .num("R2", r.r2)
            .num("weight", r.weight);
        row_objs.push_back(obj.str());
    }
    JsonObj root;
    root.integer("schema", 1)
        .raw("config", config_json(config))
        .raw("state", st.str())
        .raw("rows", jarr(row_objs));
    os << root.str() << "\n";
    return 0;
}

int cmd_verify(const RunConfig& config, std::ostream& os)
{
    DeformationParams params = params_of(config);
    std::vector<SweepChannel> sweep = default_sweep(params);
    GridSpec grid{config.grid_size, -1.0 + 1e-6, 1.0 - 1e-6, config.fd_order};

    std::vector<VerificationReport> reports;
    if (config.scope == "radial" || config.scope == "all")
        reports.push_back(verify_radial(sweep, std::min(config.n_max, 3),
                                        config.quad_order));
    if (config.scope == "susy" || config.scope == "all")
        reports.push_back(verify_susy(sweep, config.n_max, config.tol, grid));
    if (config.scope == "angular" || config.scope == "all")
        reports.push_back(verify_angular_all(7, config.samples));
    if (reports.empty())
        throw std::domain_error("verify: unknown scope '" + config.scope + "'");

    bool all_pass = true;
    std::vector<std::string> report_objs;
    for (const VerificationReport& r : reports) {
        all_pass = all_pass && r.pass();
        report_objs.push_back(report_json(r));
    }
    JsonObj root;
    root.integer("schema", 1)
        .raw("config", config_json(config))
        .boolean("pass", all_pass)
        .raw("reports", jarr(report_objs));
    os << root.str() << "\n";
    return all_pass ? 0 : 3;
}

int cmd_oracle(const RunConfig& config, std::ostream& os)
{
    DeformationParams params = params_of(config);
    Channel channel = derive_channel(spin_of(config.s), config.two_j, params);
    GridSpec grid{config.grid_size, -1.0 + 1e-6, 1.0 - 1e-6, config.fd_order};
    VerificationReport report =
        verify_spectrum(channel, config.n_max, config.tol, grid);
    JsonObj root;
    root.integer("schema", 1)
        .raw("config", config_json(config))
        .boolean("pass", report.pass())
        .raw("report", report_json(report));
    os << root.str() << "\n";
    return report.pass() ? 0 : 3;
}

int dispatch(const RunConfig& config, std::ostream& os)
{
    if (config.command == "spectrum")
        return cmd_spectrum(config, os);
    if (config.command == "classify")
        return cmd_classify(config, os);
    if (config.command == "wavefunction")
        return cmd_wavefunction(config, os);
    if (config.command == "verify")
        return cmd_verify(config, os);
    if (config.command == "oracle")
        return cmd_oracle(config, os);
    throw std::domain_error("unknown command '" + config.command + "'");
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        if (!config.output.empty()) {
            std::ofstream file(config.output);
            if (!file)
                throw std::domain_error("cannot open output file '" + config.output +
                                        "'");
            return dispatch(config, file);
        }
        return dispatch(config, out);
    } catch (const NoBoundState& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int main_with_args(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err)
{
    RunConfig config;
    if (const char* env = std::getenv("DDO_QUAD_ORDER")) {
        const int order = std::atoi(env);
        if (order >= 2)
            config.quad_order = order;
    }

    CLI::App app{"deformed Dirac oscillator: spectra, wavefunctions, verification"};
    app.require_subcommand(1);

    auto add_params = [&](CLI::App* cmd) {
        cmd->add_option("--omega", config.omega, "oscillator frequency");
        cmd->add_option("--beta", config.beta, "deformation parameter beta");
        cmd->add_option("--beta-prime", config.beta_prime,
                        "deformation parameter beta'");
        cmd->add_option("--gamma", config.gamma, "weight-function constant");
    };
    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--format", config.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--output", config.output, "output path (default stdout)");
    };

    CLI::App* spectrum = app.add_subcommand("spectrum", "closed-form energy table");
    add_params(spectrum);
    add_output(spectrum);
    spectrum->add_option("--two-j-max", config.two_j_max, "largest two_j");
    spectrum->add_option("--n-max", config.n_max, "largest radial n");
    spectrum->add_option("--two-j", config.two_j, "restrict to one two_j");
    spectrum->add_option("--s", config.s, "restrict to one s (+ or -)");

    CLI::App* classify = app.add_subcommand("classify", "regime of one channel");
    add_params(classify);
    add_output(classify);
    classify->add_option("--two-j", config.two_j, "two_j")->required();
    classify->add_option("--s", config.s, "+ or -")->required();

    CLI::App* wavefunction =
        app.add_subcommand("wavefunction", "sampled radial wavefunctions");
    add_params(wavefunction);
    add_output(wavefunction);
    wavefunction->add_option("--two-j", config.two_j, "two_j")->required();
    wavefunction->add_option("--s", config.s, "+ or -")->required();
    wavefunction->add_option("--n", config.n, "radial quantum number");
    wavefunction->add_option("--sigma", config.sigma, "energy sign +1 or -1");
    wavefunction->add_option("--p-min", config.p_min, "smallest p (default auto)");
    wavefunction->add_option("--p-max", config.p_max, "largest p (default auto)");
    wavefunction->add_option("--samples", config.samples, "sample count");

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    add_params(verify);
    add_output(verify);
    verify->add_option("--scope", config.scope, "radial | angular | susy | all")
        ->check(CLI::IsMember({"radial", "angular", "susy", "all"}));
    bool verify_all = false;
    verify->add_flag("--all", verify_all, "same as --scope all");
    verify->add_option("--tol", config.tol, "oracle comparison tolerance");
    verify->add_option("--n-max", config.n_max, "largest radial n");
    verify->add_option("--grid-size", config.grid_size, "oracle grid size");
    verify->add_option("--fd-order", config.fd_order, "2 or 4");
    verify->add_option("--samples", config.samples, "angular sample count");

    CLI::App* oracle =
        app.add_subcommand("oracle", "grid diagonalization vs closed form");
    add_params(oracle);
    add_output(oracle);
    oracle->add_option("--two-j", config.two_j, "two_j")->required();
    oracle->add_option("--s", config.s, "+ or -")->required();
    oracle->add_option("--n-max", config.n_max, "largest radial n");
    oracle->add_option("--grid-size", config.grid_size, "interior grid nodes");
    oracle->add_option("--fd-order", config.fd_order, "2 or 4");
    oracle->add_option("--tol", config.tol, "relative tolerance");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    for (CLI::App* cmd : {spectrum, classify, wavefunction, verify, oracle})
        if (cmd->parsed())
            config.command = cmd->get_name();
    if (verify_all)
        config.scope = "all";

    return run(config, out, err);
}

} // namespace ddo::cli
