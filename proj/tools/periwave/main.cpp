// periwave CLI: construct | spectrum | theta | verify | evolve | reproduce.
//
// Exit codes: 0 success, 2 admissibility/parameter rejection,
// 3 numerical-tolerance failure, 4 integrator abort.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "periwave/evolution.hpp"
#include "periwave/families.hpp"
#include "periwave/functionals.hpp"
#include "periwave/io.hpp"
#include "periwave/spectral.hpp"
#include "periwave/threads.hpp"
#include "periwave/verifier.hpp"

namespace {

using nlohmann::json;
using namespace periwave;

constexpr int exit_ok = 0;
constexpr int exit_reject = 2;
constexpr int exit_tolerance = 3;
constexpr int exit_abort = 4;

struct config_rejection : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One settable key of a run configuration: the CLI option that shadows it and
// a typed setter used when the value comes from the JSON document instead.
struct ConfigKey {
    CLI::Option* opt = nullptr;
    std::function<void(const json&)> set;
    bool filled = false; // provided by the JSON document
};

using ConfigKeys = std::map<std::string, ConfigKey>;

ConfigKey key_double(CLI::Option* opt, double& ref) {
    return {opt, [&ref, opt](const json& v) {
                if (!v.is_number())
                    throw config_rejection("config key '" + opt->get_name() +
                                           "' must be a number");
                ref = v.get<double>();
            }};
}

ConfigKey key_int(CLI::Option* opt, int& ref) {
    return {opt, [&ref, opt](const json& v) {
                if (!v.is_number_integer())
                    throw config_rejection("config key '" + opt->get_name() +
                                           "' must be an integer");
                ref = v.get<int>();
            }};
}

ConfigKey key_string(CLI::Option* opt, std::string& ref) {
    return {opt, [&ref, opt](const json& v) {
                if (!v.is_string())
                    throw config_rejection("config key '" + opt->get_name() +
                                           "' must be a string");
                ref = v.get<std::string>();
            }};
}

ConfigKey key_bool(CLI::Option* opt, bool& ref) {
    return {opt, [&ref, opt](const json& v) {
                if (!v.is_boolean())
                    throw config_rejection("config key '" + opt->get_name() +
                                           "' must be a boolean");
                ref = v.get<bool>();
            }};
}

ConfigKey key_u64(CLI::Option* opt, unsigned long& ref) {
    return {opt, [&ref, opt](const json& v) {
                if (!v.is_number_integer())
                    throw config_rejection("config key '" + opt->get_name() +
                                           "' must be an integer");
                ref = v.get<unsigned long>();
            }};
}

// JSON document values fill in whatever was not given on the command line;
// unknown keys are rejected up front.
void apply_config(const std::string& path, ConfigKeys& keys) {
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) throw config_rejection("cannot open config file: " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw config_rejection(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw config_rejection("config must be a JSON object");
    for (const auto& [name, value] : doc.items()) {
        auto it = keys.find(name);
        if (it == keys.end())
            throw config_rejection("unknown config key '" + name + "'");
        if (it->second.opt->count() == 0) {
            it->second.set(value);
            it->second.filled = true;
        }
    }
}

// Options that must come from either the command line or the document.
// (CLI11's own required() fires before the config file is read.)
void need(const ConfigKeys& keys, std::initializer_list<const char*> names) {
    for (const char* n : names) {
        const ConfigKey& k = keys.at(n);
        if (k.opt->count() == 0 && !k.filled)
            throw config_rejection(std::string("missing required option ") +
                                   k.opt->get_name());
    }
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-")
        std::cout << text;
    else
        io::write_text(path, text);
}

struct FamilyOpts {
    std::string family;
    double a = 1.0, b = 6.0, delta = 1.0;

    void add(CLI::App* cmd, ConfigKeys& keys) {
        auto* of = cmd->add_option("--family", family,
                                   "kdv_cnoidal | mkdv_dnoidal | mkdv_dnsn | "
                                   "gardner_dn | gardner_dnsn | ilw | schamel | "
                                   "mbbm_dnsn | reg_schamel");
        auto* oa = cmd->add_option("--a", a, "Gardner quadratic coefficient");
        auto* ob = cmd->add_option("--b", b, "Gardner cubic coefficient (> 0)");
        auto* od = cmd->add_option("--delta", delta, "ILW depth parameter (> 0)");
        keys["family"] = key_string(of, family);
        keys["a"] = key_double(oa, a);
        keys["b"] = key_double(ob, b);
        keys["delta"] = key_double(od, delta);
    }
    FamilyId id() const { return FamilyId::parse(family, a, b, delta); }
};

std::vector<double> parse_grid(const std::string& list, double lo, double hi,
                               int count) {
    std::vector<double> grid;
    if (!list.empty()) {
        std::stringstream ss(list);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            grid.push_back(std::stod(tok));
        }
        return grid;
    }
    for (int i = 0; i < count; ++i)
        grid.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));
    return grid;
}

// ---------------------------------------------------------------- construct

int cmd_construct(const FamilyOpts& fam, double k, double L, int N,
                  const std::string& out) {
    WaveProfile p = construct(fam.id(), k, L, N);
    std::string prefix = out.empty() ? fam.id().name() : out;
    io::write_text(prefix + ".json", io::profile_to_json(p));
    io::write_text(prefix + ".csv", io::profile_to_csv(p));
    std::printf("c = %s\nA = %s\nresidual = %s\n", io::fmt17(p.c).c_str(),
                io::fmt17(p.A).c_str(), io::fmt17(residual(p)).c_str());
    return exit_ok;
}

// ----------------------------------------------------------------- spectrum

int cmd_spectrum(const FamilyOpts& fam, double k, double L, int N, int N_t,
                 int n_eigs, const std::string& out) {
    FamilyId f = fam.id();
    WaveProfile p = construct(f, k, L, N);
    SpectrumReport r = eigs(assemble(p, f.symbol(), N_t), n_eigs);
    std::ostringstream os;
    os << "i,lambda\n";
    for (size_t i = 0; i < r.eigenvalues.size(); ++i)
        os << i << ',' << io::fmt17(r.eigenvalues[i]) << '\n';
    emit(out, os.str());
    std::fprintf(stderr,
                 "n_negative = %d\nzero_candidates = %zu\nkernel_alignment = %s\n"
                 "h1 = %d\nh2 = %d\n",
                 r.n_negative, r.zero_candidates.size(),
                 io::fmt17(r.kernel_alignment).c_str(), (int)r.h1_holds,
                 (int)r.h2_holds);
    return exit_ok;
}

// -------------------------------------------------------------------- theta

int cmd_theta(const FamilyOpts& fam, double k, double L, int N, double rtol) {
    FamilyId f = fam.id();
    if (f.tag == FamilyId::Tag::ilw)
        throw config_rejection(
            "theta is defined for second-order dispersion only; "
            "ilw uses the PF(2) route (see verify)");
    WaveProfile p = construct(f, k, L, N);
    std::printf("theta = %s\n", io::fmt17(floquet_theta(p, rtol)).c_str());
    return exit_ok;
}

// ------------------------------------------------------------------- verify

int cmd_verify(const FamilyOpts& fam, const std::vector<double>& k_grid,
               const std::vector<double>& L_grid, const VerifyConfig& vcfg,
               const std::string& out) {
    FamilyId f = fam.id();
    struct Point {
        double k, L;
    };
    std::vector<Point> points;
    for (double L : L_grid)
        for (double k : k_grid) points.push_back({k, L});
    std::vector<HypothesisReport> rows(points.size());
    parallel_for(static_cast<int>(points.size()), [&](int i) {
        try {
            rows[i] = verify(f, points[i].k, points[i].L, vcfg);
        } catch (const std::exception& e) {
            rows[i].family = f.name();
            rows[i].k = points[i].k;
            rows[i].L = points[i].L;
            rows[i].error = e.what();
        }
    });
    std::ostringstream os;
    os << io::report_csv_header();
    bool all = true;
    for (const auto& r : rows) {
        os << io::report_to_csv_row(r);
        all = all && r.all_true();
    }
    emit(out, os.str());
    return all ? exit_ok : exit_tolerance;
}

// ------------------------------------------------------------------- evolve

int cmd_evolve(const FamilyOpts& fam, double k, double L, int N, double dt,
               double periods, double amplitude, int mode, bool random,
               unsigned long seed, const std::string& integrator, bool dealias,
               const std::string& out) {
    FamilyId f = fam.id();
    WaveProfile p = construct(f, k, L, N);

    Perturbation pert;
    pert.kind = random ? Perturbation::Kind::random : Perturbation::Kind::mode_bump;
    pert.amplitude = amplitude;
    pert.mode = mode;
    pert.seed = seed;

    EvolutionConfig cfg;
    cfg.N = N;
    cfg.dt = dt;
    cfg.T = periods * p.L / std::fabs(p.c);
    cfg.dealias = dealias;
    if (integrator == "midpoint")
        cfg.integrator = EvolutionConfig::Integrator::implicit_midpoint;
    else if (integrator != "etdrk4")
        throw config_rejection("integrator must be etdrk4 or midpoint");

    EvolutionTrace tr;
    try {
        tr = orbital_experiment(p, pert, cfg);
    } catch (const std::invalid_argument& e) {
        throw config_rejection(e.what());
    }
    emit(out, io::trace_to_csv(tr));
    double rho0 = tr.rho_series.empty() ? 0.0 : tr.rho_series.front();
    std::fprintf(stderr, "sup_rho = %s\ninitial_rho = %s\ndrift_E = %s\n",
                 io::fmt17(tr.sup_rho).c_str(), io::fmt17(rho0).c_str(),
                 io::fmt17(tr.drift_E).c_str());
    if (tr.aborted) {
        std::fprintf(stderr, "aborted: %s\n", tr.abort_reason.c_str());
        return exit_abort;
    }
    // Stability policy: an unperturbed wave must track itself to 1e-6; a
    // perturbed one must stay within 10x the initial distance from the orbit.
    bool ok = amplitude == 0.0 ? tr.sup_rho < 1e-6 : tr.sup_rho <= 10.0 * rho0;
    return ok ? exit_ok : exit_tolerance;
}

// ---------------------------------------------------------------- reproduce

struct ThetaRow {
    double k, L, reference;
    bool slow = false; // only computed with --full
};

const std::vector<ThetaRow>& mkdv_theta_rows() {
    static const std::vector<ThetaRow> rows = {
        {0.5, 30.0, -1.382078401e5},
        {0.5, 20.0, -1.82e4},
        {0.5, 50.0, -1.77e6},
        {0.5, 200.0, -1.82e9},
        {0.5, 1000.0, -5.68e12},
        {0.5, 1e6, -5.68e27, true},
    };
    return rows;
}

const std::vector<ThetaRow>& mbbm_theta_rows() {
    static const std::vector<ThetaRow> rows = {
        {0.5, 50.0, -8.516957300e5},
        {0.4, 10.0, -166.08},
        {0.4, 20.0, -7976.14},
        {0.4, 200.0, -8.85e8},
        {0.4, 1000.0, -2.76e12, true},
        {0.4, 100000.0, -2.73e22, true},
    };
    return rows;
}

struct Table2Row {
    double k, phi_ref, psi_ref; // reference values list |Phi|
};

const std::vector<Table2Row>& table2_rows() {
    static const std::vector<Table2Row> rows = {
        {0.1, 3.675157856e-8, 9.093638233e-5},
        {0.2, 2.575957430e-6, 7.877593065e-4},
        {0.3, 3.422439640e-5, 3.061968119e-3},
        {0.4, 2.398363306e-4, 9.008424446e-3},
        {0.5, 1.228499118e-3, 2.397754841e-2},
        {0.6, 5.375083538e-3, 6.355524106e-2},
        {0.7, 2.241081146e-2, 1.814545325e-1},
        {0.8, 1.029912842e-1, 6.356553017e-1},
        {0.9, 7.898496312e-1, 4.353282492},
    };
    return rows;
}

std::string diff_row(const std::string& table, double k, double L,
                     const std::string& quantity, double computed,
                     double reference, double tol, bool& all_pass) {
    double rel = std::fabs(computed - reference) / std::fabs(reference);
    bool pass = rel <= tol;
    all_pass = all_pass && pass;
    std::ostringstream os;
    os << table << ',' << io::fmt17(k) << ',' << io::fmt17(L) << ',' << quantity
       << ',' << io::fmt17(computed) << ',' << io::fmt17(reference) << ','
       << io::fmt17(rel) << ',' << (pass ? "pass" : "fail") << '\n';
    return os.str();
}

int cmd_reproduce(const std::string& table, bool full, int N,
                  const std::string& out) {
    const double tol = 1e-2;
    std::ostringstream os;
    os << "table,k,L,quantity,computed,reference,rel_err,status\n";
    bool all = true;

    if (table == "mkdv_theta" || table == "mbbm_theta_table1") {
        FamilyId f = FamilyId::parse(table == "mkdv_theta" ? "mkdv_dnsn"
                                                           : "mbbm_dnsn");
        const auto& spec_rows =
            table == "mkdv_theta" ? mkdv_theta_rows() : mbbm_theta_rows();
        std::vector<ThetaRow> rows;
        for (const auto& r : spec_rows)
            if (full || !r.slow) rows.push_back(r);
        std::vector<double> theta(rows.size());
        std::vector<std::string> err(rows.size());
        parallel_for(static_cast<int>(rows.size()), [&](int i) {
            try {
                theta[i] = floquet_theta(construct(f, rows[i].k, rows[i].L, N));
            } catch (const std::exception& e) {
                err[i] = e.what();
            }
        });
        for (size_t i = 0; i < rows.size(); ++i) {
            if (!err[i].empty()) {
                os << table << ',' << io::fmt17(rows[i].k) << ','
                   << io::fmt17(rows[i].L) << ",theta,,"
                   << io::fmt17(rows[i].reference) << ",,error: " << err[i] << '\n';
                all = false;
                continue;
            }
            os << diff_row(table, rows[i].k, rows[i].L, "theta", theta[i],
                           rows[i].reference, tol, all);
        }
    } else if (table == "mbbm_phi_psi_table2") {
        FamilyId f = FamilyId::parse("mbbm_dnsn");
        const double L = 30.0;
        const auto& rows = table2_rows();
        std::vector<HypothesisReport> rep(rows.size());
        parallel_for(static_cast<int>(rows.size()), [&](int i) {
            VerifyConfig vc;
            vc.N = N;
            vc.use_theta = false;
            rep[i] = verify(f, rows[i].k, L, vc);
        });
        for (size_t i = 0; i < rows.size(); ++i) {
            os << diff_row(table, rows[i].k, L, "abs_Phi", std::fabs(rep[i].Phi),
                           rows[i].phi_ref, tol, all);
            os << diff_row(table, rows[i].k, L, "Psi", rep[i].Psi,
                           rows[i].psi_ref, tol, all);
        }
    } else {
        throw config_rejection(
            "table must be one of mkdv_theta, mbbm_theta_table1, "
            "mbbm_phi_psi_table2");
    }
    emit(out, os.str());
    return all ? exit_ok : exit_tolerance;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Periodic traveling-wave construction, hypothesis "
                 "verification, and orbital-stability experiments"};
    app.require_subcommand(1);

    // ---- construct
    auto* c_cmd = app.add_subcommand("construct", "Build a profile; write JSON + CSV");
    ConfigKeys c_keys;
    FamilyOpts c_fam;
    double c_k = 0, c_L = 0;
    int c_N = 256;
    std::string c_out, c_cfg;
    c_fam.add(c_cmd, c_keys);
    c_keys["k"] = key_double(c_cmd->add_option("--k", c_k, "elliptic modulus"), c_k);
    c_keys["L"] = key_double(c_cmd->add_option("--L", c_L, "period"), c_L);
    c_keys["N"] = key_int(c_cmd->add_option("--N", c_N, "grid size"), c_N);
    c_keys["out"] = key_string(
        c_cmd->add_option("--out", c_out, "output prefix (default: family name)"),
        c_out);
    c_cmd->add_option("--config", c_cfg, "JSON run configuration");

    // ---- spectrum
    auto* s_cmd = app.add_subcommand("spectrum", "Lowest Galerkin eigenvalues");
    ConfigKeys s_keys;
    FamilyOpts s_fam;
    double s_k = 0, s_L = 0;
    int s_N = 256, s_Nt = 128, s_neigs = 8;
    std::string s_out, s_cfg;
    s_fam.add(s_cmd, s_keys);
    s_keys["k"] = key_double(s_cmd->add_option("--k", s_k), s_k);
    s_keys["L"] = key_double(s_cmd->add_option("--L", s_L), s_L);
    s_keys["N"] = key_int(s_cmd->add_option("--N", s_N, "grid size"), s_N);
    s_keys["N_t"] = key_int(
        s_cmd->add_option("--N_t", s_Nt, "Galerkin truncation"), s_Nt);
    s_keys["n_eigs"] = key_int(
        s_cmd->add_option("--n-eigs", s_neigs, "eigenvalues to report"), s_neigs);
    s_keys["out"] = key_string(s_cmd->add_option("--out", s_out, "CSV path"), s_out);
    s_cmd->add_option("--config", s_cfg, "JSON run configuration");

    // ---- theta
    auto* t_cmd = app.add_subcommand("theta", "Second Floquet solution slope");
    ConfigKeys t_keys;
    FamilyOpts t_fam;
    double t_k = 0, t_L = 0, t_rtol = 1e-10;
    int t_N = 256;
    std::string t_cfg;
    t_fam.add(t_cmd, t_keys);
    t_keys["k"] = key_double(t_cmd->add_option("--k", t_k), t_k);
    t_keys["L"] = key_double(t_cmd->add_option("--L", t_L), t_L);
    t_keys["N"] = key_int(t_cmd->add_option("--N", t_N, "grid size"), t_N);
    t_keys["rtol"] = key_double(
        t_cmd->add_option("--rtol", t_rtol, "IVP relative tolerance"), t_rtol);
    t_cmd->add_option("--config", t_cfg, "JSON run configuration");

    // ---- verify
    auto* v_cmd = app.add_subcommand("verify", "Hypothesis sweep over a (k, L) grid");
    ConfigKeys v_keys;
    FamilyOpts v_fam;
    std::string v_kgrid, v_Lgrid, v_out, v_cfg;
    double v_kmin = 0.1, v_kmax = 0.9, v_L = 0;
    int v_kcount = 0, v_N = 256, v_Nt = 128;
    v_fam.add(v_cmd, v_keys);
    v_keys["k_grid"] = key_string(
        v_cmd->add_option("--k-grid", v_kgrid, "comma-separated k values"), v_kgrid);
    v_keys["k_min"] = key_double(v_cmd->add_option("--k-min", v_kmin), v_kmin);
    v_keys["k_max"] = key_double(v_cmd->add_option("--k-max", v_kmax), v_kmax);
    v_keys["k_count"] = key_int(
        v_cmd->add_option("--k-count", v_kcount, "uniform grid size"), v_kcount);
    v_keys["L"] = key_double(v_cmd->add_option("--L", v_L, "period"), v_L);
    v_keys["L_grid"] = key_string(
        v_cmd->add_option("--L-grid", v_Lgrid, "comma-separated L values"), v_Lgrid);
    v_keys["N"] = key_int(v_cmd->add_option("--N", v_N, "grid size"), v_N);
    v_keys["N_t"] = key_int(
        v_cmd->add_option("--N_t", v_Nt, "Galerkin truncation"), v_Nt);
    v_keys["out"] = key_string(v_cmd->add_option("--out", v_out, "CSV path"), v_out);
    v_cmd->add_option("--config", v_cfg, "JSON run configuration");

    // ---- evolve
    auto* e_cmd = app.add_subcommand("evolve", "Orbital-stability experiment");
    ConfigKeys e_keys;
    FamilyOpts e_fam;
    double e_k = 0, e_L = 0, e_dt = 1e-3, e_periods = 10.0, e_amp = 1e-3;
    int e_N = 256, e_mode = 1;
    bool e_random = false, e_dealias = false;
    unsigned long e_seed = 0;
    std::string e_integrator = "etdrk4", e_out, e_cfg;
    e_fam.add(e_cmd, e_keys);
    e_keys["k"] = key_double(e_cmd->add_option("--k", e_k), e_k);
    e_keys["L"] = key_double(e_cmd->add_option("--L", e_L), e_L);
    e_keys["N"] = key_int(e_cmd->add_option("--N", e_N, "grid size"), e_N);
    e_keys["dt"] = key_double(e_cmd->add_option("--dt", e_dt, "time step"), e_dt);
    e_keys["periods"] = key_double(
        e_cmd->add_option("--periods", e_periods, "temporal periods L/c"),
        e_periods);
    e_keys["amplitude"] = key_double(
        e_cmd->add_option("--amplitude", e_amp, "perturbation amplitude"), e_amp);
    e_keys["mode"] = key_int(
        e_cmd->add_option("--mode", e_mode, "perturbed Fourier mode"), e_mode);
    e_keys["random"] = key_bool(
        e_cmd->add_flag("--random", e_random, "random low-mode perturbation"),
        e_random);
    e_keys["seed"] = key_u64(e_cmd->add_option("--seed", e_seed), e_seed);
    e_keys["integrator"] = key_string(
        e_cmd->add_option("--integrator", e_integrator, "etdrk4 | midpoint"),
        e_integrator);
    e_keys["dealias"] = key_bool(
        e_cmd->add_flag("--dealias", e_dealias, "2/3-rule dealiasing"), e_dealias);
    e_keys["out"] = key_string(e_cmd->add_option("--out", e_out, "trace CSV path"),
                               e_out);
    e_cmd->add_option("--config", e_cfg, "JSON run configuration");

    // ---- reproduce
    auto* r_cmd = app.add_subcommand("reproduce",
                                 "Recompute a published table and diff it");
    ConfigKeys r_keys;
    std::string r_table, r_out, r_cfg;
    bool r_full = false;
    int r_N = 256;
    r_keys["table"] = key_string(
        r_cmd->add_option("--table", r_table,
                          "mkdv_theta | mbbm_theta_table1 | mbbm_phi_psi_table2"),
        r_table);
    r_keys["full"] = key_bool(
        r_cmd->add_flag("--full", r_full, "include the slow large-L rows"), r_full);
    r_keys["N"] = key_int(r_cmd->add_option("--N", r_N, "grid size"), r_N);
    r_keys["out"] = key_string(r_cmd->add_option("--out", r_out, "CSV path"), r_out);
    r_cmd->add_option("--config", r_cfg, "JSON run configuration");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_cmd->parsed()) {
            apply_config(c_cfg, c_keys);
            need(c_keys, {"family", "k", "L"});
            return cmd_construct(c_fam, c_k, c_L, c_N, c_out);
        }
        if (s_cmd->parsed()) {
            apply_config(s_cfg, s_keys);
            need(s_keys, {"family", "k", "L"});
            return cmd_spectrum(s_fam, s_k, s_L, s_N, s_Nt, s_neigs, s_out);
        }
        if (t_cmd->parsed()) {
            apply_config(t_cfg, t_keys);
            need(t_keys, {"family", "k", "L"});
            return cmd_theta(t_fam, t_k, t_L, t_N, t_rtol);
        }
        if (v_cmd->parsed()) {
            apply_config(v_cfg, v_keys);
            need(v_keys, {"family"});
            if (v_L <= 0.0 && v_Lgrid.empty())
                throw config_rejection("verify requires --L or --L-grid");
            VerifyConfig vc;
            vc.N = v_N;
            vc.N_t = v_Nt;
            auto ks = parse_grid(v_kgrid, v_kmin, v_kmax, v_kcount);
            auto Ls = parse_grid(v_Lgrid, v_L, v_L, v_Lgrid.empty() ? 1 : 0);
            return cmd_verify(v_fam, ks, Ls, vc, v_out);
        }
        if (e_cmd->parsed()) {
            apply_config(e_cfg, e_keys);
            need(e_keys, {"family", "k", "L"});
            return cmd_evolve(e_fam, e_k, e_L, e_N, e_dt, e_periods, e_amp,
                              e_mode, e_random, e_seed, e_integrator, e_dealias,
                              e_out);
        }
        if (r_cmd->parsed()) {
            apply_config(r_cfg, r_keys);
            need(r_keys, {"table"});
            return cmd_reproduce(r_table, r_full, r_N, r_out);
        }
    } catch (const admissibility_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_reject;
    } catch (const config_rejection& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_reject;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return exit_ok;
}
