#include <doctest.h>

#include <cmath>
#include <vector>

#include "periwave/families.hpp"
#include "periwave/spectral.hpp"

using namespace periwave;

namespace {
double rel(double got, double want) {
    return std::fabs(got - want) / std::fabs(want);
}
} // namespace

TEST_CASE("galerkin spectrum matches closed-form eigenvalues") {
    struct Case {
        const char* name;
        double k, L, scale; // normalization for the absolute comparison
    };
    const Case cases[] = {
        {"kdv_cnoidal", 0.9, 6.2832, 1.0},
        {"mkdv_dnoidal", 0.5, 6.2832, 1.0},
        {"reg_schamel", 0.5, 50.0, 1.0},
    };
    for (const auto& c : cases) {
        CAPTURE(c.name);
        FamilyId f = FamilyId::parse(c.name);
        WaveProfile p = construct(f, c.k, c.L, 256);
        LameEigenvalues cf = lame_closed_form(f, c.k, c.L);
        SpectrumReport r = eigs(assemble(p, f.symbol(), 96), 8);
        for (int i = 0; i < 3; ++i) {
            CAPTURE(i);
            CHECK(std::fabs(r.eigenvalues[i] - cf.lambda[i]) < 1e-8);
        }
        CHECK(std::fabs(cf.lambda[1]) < 1e-10);
        CHECK(r.n_negative == 1);
        CHECK(r.h1_holds);
        CHECK(r.h2_holds);
        CHECK(r.kernel_alignment > 0.999);
    }
}

TEST_CASE("spectrum flags fail when the wave is not a critical point") {
    // wrong speed: the kernel no longer contains the profile derivative
    FamilyId f = FamilyId::parse("mkdv_dnoidal");
    WaveProfile p = construct(f, 0.5, 6.2832, 256);
    p.c *= 1.5;
    SpectrumReport r = eigs(assemble(p, f.symbol(), 96), 8);
    CHECK_FALSE(r.h2_holds);
}

TEST_CASE("floquet slope matches reference values") {
    // independent oracle: adaptive RK on the profile ODE at tight tolerance
    struct Row {
        const char* name;
        double k, L, oracle, published, pub_tol;
    };
    const Row rows[] = {
        {"mkdv_dnsn", 0.5, 30.0, -1.382088052715e5, -1.382078401e5, 1e-3},
        {"mbbm_dnsn", 0.4, 20.0, -7.976102737610e3, -7976.14, 1e-2},
        {"mbbm_dnsn", 0.4, 10.0, -1.660834023043e2, -166.08, 1e-2},
    };
    for (const auto& r : rows) {
        CAPTURE(r.name);
        CAPTURE(r.L);
        WaveProfile p = construct(FamilyId::parse(r.name), r.k, r.L, 512);
        double theta = floquet_theta(p);
        CHECK(theta < 0.0);
        CHECK(rel(theta, r.oracle) < 1e-4);
        CHECK(rel(theta, r.published) < r.pub_tol);
    }
}

TEST_CASE("floquet slope is grid-converged") {
    FamilyId f = FamilyId::parse("mkdv_dnsn");
    double t256 = floquet_theta(construct(f, 0.5, 30.0, 256));
    double t1024 = floquet_theta(construct(f, 0.5, 30.0, 1024));
    CHECK(rel(t256, t1024) < 1e-10);
}

TEST_CASE("pf2 accepts a gaussian sequence") {
    const int M = 8;
    std::vector<double> alpha(2 * M + 1);
    for (int i = 0; i <= 2 * M; ++i) {
        double n = i - M;
        alpha[i] = std::exp(-0.1 * n * n);
    }
    Pf2Result r = pf2_check(alpha, M);
    CHECK(r.holds);
}

TEST_CASE("pf2 rejects log-convex and non-positive sequences") {
    const int M = 4;
    std::vector<double> alpha(2 * M + 1, 1.0);
    alpha[M] = 0.5; // dip at the center: a 2x2 minor goes negative
    CHECK_FALSE(pf2_check(alpha, M).holds);

    std::vector<double> beta(2 * M + 1, 1.0);
    beta[0] = -1.0;
    CHECK_FALSE(pf2_check(beta, M).holds);
}
