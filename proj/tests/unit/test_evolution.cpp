#include <doctest.h>

#include <cmath>
#include <vector>

#include "periwave/evolution.hpp"
#include "periwave/families.hpp"
#include "periwave/functionals.hpp"

using namespace periwave;

TEST_CASE("translate is an exact grid shift") {
    const int N = 64;
    const double L = 4.0;
    std::vector<double> u(N);
    for (int i = 0; i < N; ++i)
        u[i] = std::sin(2 * 3.14159265358979323846 * i / N) + 0.3;
    auto v = translate(u, 5.0 * L / N, L); // v(x) = u(x + 5 dx)
    for (int i = 0; i < N; ++i)
        CHECK(std::fabs(v[i] - u[(i + 5) % N]) < 1e-12);
    auto w = translate(translate(u, 0.713, L), -0.713, L);
    for (int i = 0; i < N; ++i) CHECK(std::fabs(w[i] - u[i]) < 1e-12);
}

TEST_CASE("unperturbed waves ride the orbit") {
    struct Case {
        const char* name;
        double k, L;
        EvolutionConfig::Integrator integ;
    };
    const Case cases[] = {
        {"mkdv_dnoidal", 0.5, 6.2832, EvolutionConfig::Integrator::exponential_rk4},
        {"mbbm_dnsn", 0.5, 30.0, EvolutionConfig::Integrator::implicit_midpoint},
    };
    for (const auto& c : cases) {
        CAPTURE(c.name);
        WaveProfile p = construct(FamilyId::parse(c.name), c.k, c.L, 256);
        Perturbation none;
        none.amplitude = 0.0;
        EvolutionConfig cfg;
        cfg.dt = 1e-3;
        cfg.T = 2.0 * p.L / p.c;
        cfg.integrator = c.integ;
        EvolutionTrace tr = orbital_experiment(p, none, cfg);
        CHECK_FALSE(tr.aborted);
        CHECK(tr.sup_rho < 1e-6);
        CHECK(tr.drift_E < 1e-9);
        CHECK(tr.drift_Q < 1e-9);
        CHECK(tr.drift_V < 1e-9);
    }
}

TEST_CASE("perturbed wave stays near the orbit") {
    WaveProfile p = construct(FamilyId::parse("mkdv_dnoidal"), 0.5, 6.2832, 256);
    Perturbation pert;
    pert.amplitude = 1e-3;
    EvolutionConfig cfg;
    cfg.dt = 1e-3;
    cfg.T = 5.0 * p.L / p.c;
    EvolutionTrace tr = orbital_experiment(p, pert, cfg);
    CHECK_FALSE(tr.aborted);
    REQUIRE_FALSE(tr.rho_series.empty());
    CHECK(tr.rho_series.front() > 0.0);
    CHECK(tr.sup_rho <= 10.0 * tr.rho_series.front());
}

TEST_CASE("random perturbations are reproducible") {
    WaveProfile p = construct(FamilyId::parse("mkdv_dnoidal"), 0.5, 6.2832, 128);
    Perturbation pert;
    pert.kind = Perturbation::Kind::random;
    pert.amplitude = 1e-3;
    pert.seed = 7;
    EvolutionConfig cfg;
    cfg.dt = 1e-3;
    cfg.T = 1.0;
    EvolutionTrace a = orbital_experiment(p, pert, cfg);
    EvolutionTrace b = orbital_experiment(p, pert, cfg);
    REQUIRE(a.rho_series.size() == b.rho_series.size());
    for (size_t i = 0; i < a.rho_series.size(); ++i)
        CHECK(a.rho_series[i] == b.rho_series[i]);
    pert.seed = 8;
    EvolutionTrace c = orbital_experiment(p, pert, cfg);
    CHECK(a.rho_series.back() != c.rho_series.back());
}

TEST_CASE("oversized perturbations are rejected") {
    WaveProfile p = construct(FamilyId::parse("mkdv_dnoidal"), 0.5, 6.2832, 128);
    Perturbation pert;
    pert.amplitude = 1.0; // far above the 0.1 ||profile|| policy cap
    EvolutionConfig cfg;
    CHECK_THROWS_AS(orbital_experiment(p, pert, cfg), std::invalid_argument);
}

TEST_CASE("gardner evolution is conjugate to mkdv evolution") {
    // psi = sqrt(6/b) u - a/(2b) maps mkdv solutions to gardner solutions up
    // to a Galilean drift a^2/(4b) t handled by an exact translation.
    const double a = 1.0, b = 6.0;
    const double gamma = std::sqrt(6.0 / b), d = a / (2.0 * b);
    FamilyId mk = FamilyId::parse("mkdv_dnoidal");
    FamilyId gd = FamilyId::parse("gardner_dn", a, b);
    WaveProfile p = construct(mk, 0.5, 6.2832, 256);
    std::vector<double> u0 = p.samples;
    for (int i = 0; i < p.N; ++i)
        u0[i] += 1e-3 * std::cos(2 * 3.14159265358979323846 * i / p.N);
    EvolutionConfig cfg;
    cfg.dt = 5e-4;
    cfg.T = 1.0;
    auto ru = integrate(u0, mk, p.L, cfg);
    std::vector<double> v0(p.N);
    for (int i = 0; i < p.N; ++i) v0[i] = gamma * u0[i] - d;
    auto rv = integrate(v0, gd, p.L, cfg);
    std::vector<double> mapped(p.N);
    for (int i = 0; i < p.N; ++i) mapped[i] = gamma * ru.final_state[i] - d;
    auto shifted = translate(mapped, a * a / (4.0 * b) * cfg.T, p.L);
    for (int i = 0; i < p.N; ++i)
        CHECK(std::fabs(shifted[i] - rv.final_state[i]) < 1e-6);
}

TEST_CASE("rho scales with the conjugacy amplitude factor") {
    const double b = 2.0, gamma = std::sqrt(6.0 / b);
    WaveProfile p = construct(FamilyId::parse("mkdv_dnoidal"), 0.5, 6.2832, 256);
    std::vector<double> u1 = p.samples, u2 = translate(u1, 0.3, p.L);
    for (double& v : u2) v *= 1.01;
    std::vector<double> v1(p.N), v2(p.N);
    for (int i = 0; i < p.N; ++i) {
        v1[i] = gamma * u1[i] - 0.1;
        v2[i] = gamma * u2[i] - 0.1;
    }
    double ru = rho(u1, u2, 1.0, p.L);
    double rv = rho(v1, v2, 1.0, p.L);
    CHECK(std::fabs(ru - std::sqrt(b / 6.0) * rv) / ru < 1e-9);
}
