#include <doctest.h>

#include <cmath>
#include <vector>

#include "periwave/elliptic.hpp"
#include "periwave/evolution.hpp"
#include "periwave/families.hpp"
#include "periwave/functionals.hpp"
#include "periwave/verifier.hpp"

using namespace periwave;

namespace {
constexpr double pi = 3.14159265358979323846;

double rel(double got, double want) {
    return std::fabs(got - want) / std::fabs(want);
}
} // namespace

TEST_CASE("sobolev norm of a pure mode") {
    const int N = 128;
    const double L = 2.0 * pi;
    std::vector<double> u(N);
    for (int i = 0; i < N; ++i) u[i] = std::sin(2.0 * pi * i / N);
    // ||sin||_{L2}^2 = L/2; mode m = 1 carries weight (1 + 1)^s
    CHECK(rel(sobolev_norm(u, 0.0, L), std::sqrt(L / 2.0)) < 1e-12);
    CHECK(rel(sobolev_norm(u, 1.0, L), std::sqrt(2.0 * L / 2.0)) < 1e-12);
}

TEST_CASE("rho vanishes on the translation orbit") {
    WaveProfile p = construct(FamilyId::parse("mkdv_dnoidal"), 0.5, 6.2832, 256);
    CHECK(rho(p.samples, p.samples, 1.0, p.L) < 1e-12);
    for (double r : {0.37, 1.91, -2.6}) {
        auto shifted = translate(p.samples, r, p.L);
        CHECK(rho(p.samples, shifted, 1.0, p.L) < 1e-6);
    }
}

TEST_CASE("rho detects genuine shape differences") {
    WaveProfile p = construct(FamilyId::parse("mkdv_dnoidal"), 0.5, 6.2832, 256);
    std::vector<double> scaled = p.samples;
    for (double& v : scaled) v *= 1.01;
    double d = rho(p.samples, scaled, 1.0, p.L);
    CHECK(d > 1e-3);
    // symmetric in its arguments
    CHECK(std::fabs(d - rho(scaled, p.samples, 1.0, p.L)) < 1e-9);
}

TEST_CASE("closed-form integrals match trapezoid quadrature") {
    struct Case {
        const char* name;
        double k, L;
    };
    const Case cases[] = {
        {"kdv_cnoidal", 0.9, 6.2832},
        {"mkdv_dnoidal", 0.5, 6.2832},
        {"mkdv_dnsn", 0.5, 30.0},
    };
    for (const auto& c : cases) {
        CAPTURE(c.name);
        FamilyId f = FamilyId::parse(c.name);
        WaveProfile p = construct(f, c.k, c.L, 512);
        auto [Q, V] = closed_form_integrals(f, c.k, c.L);
        CHECK(rel(V, mean_functional(p.samples, p.L)) < 1e-7);
        CHECK(rel(Q, charge_plain(p.samples, p.L)) < 1e-7);
    }
}

TEST_CASE("kdv mean-square bracket uses the quartic coefficient") {
    // int phi^2 = (768 K^3 / L^3) [ (3k^4 - 5k^2 + 2) K + (4k^2 - 2) E ];
    // the 3k^4 term is the arbitration target of the oracle-equivalence check.
    FamilyId f = FamilyId::parse("kdv_cnoidal");
    for (double k : {0.75, 0.85, 0.95}) {
        CAPTURE(k);
        WaveProfile p = construct(f, k, 6.2832, 512);
        auto [Q, V] = closed_form_integrals(f, k, 6.2832);
        CHECK(rel(2.0 * Q, 2.0 * charge_plain(p.samples, p.L)) < 1e-10);
    }
}

TEST_CASE("mkdv mean-square value") {
    // int phi^2 over one period equals 4 K E / L
    FamilyId f = FamilyId::parse("mkdv_dnoidal");
    double k = 0.5, L = 6.2832;
    WaveProfile p = construct(f, k, L, 512);
    double K = ell::complete_K(k), E = ell::complete_E(k);
    CHECK(rel(2.0 * charge_plain(p.samples, L), 4.0 * K * E / L) < 1e-10);
}

TEST_CASE("profile is a critical point of E + cQ + AV") {
    for (const char* name : {"kdv_cnoidal", "ilw", "mbbm_dnsn"}) {
        CAPTURE(name);
        FamilyId f = FamilyId::parse(name);
        f.delta = 2.0;
        double k = f.tag == FamilyId::Tag::kdv_cnoidal ? 0.9
                   : f.tag == FamilyId::Tag::ilw       ? 0.85
                                                       : 0.5;
        double L = f.tag == FamilyId::Tag::mbbm_dnsn ? 30.0 : 6.283185307179586;
        WaveProfile p = construct(f, k, L, 256);
        CHECK(fk_gradient_residual(p, f.symbol()) < 1e-8);
    }
}
