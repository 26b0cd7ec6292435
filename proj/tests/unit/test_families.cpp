#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "periwave/elliptic.hpp"
#include "periwave/families.hpp"

using namespace periwave;

namespace {

double rel(double got, double want) {
    return std::fabs(got - want) / std::fabs(want);
}

double sup_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i)
        s = std::max(s, std::fabs(a[i] - b[i]));
    return s;
}

} // namespace

TEST_CASE("all families satisfy their traveling-wave equation") {
    struct Case {
        const char* name;
        double k, L;
    };
    const Case cases[] = {
        {"kdv_cnoidal", 0.9, 6.2832}, {"mkdv_dnoidal", 0.5, 6.2832},
        {"mkdv_dnsn", 0.5, 30.0},     {"gardner_dn", 0.5, 6.2832},
        {"gardner_dnsn", 0.5, 30.0},  {"ilw", 0.85, 6.283185307179586},
        {"schamel", 0.6, 10.0},       {"mbbm_dnsn", 0.5, 30.0},
        {"reg_schamel", 0.5, 50.0},
    };
    for (const auto& c : cases) {
        CAPTURE(c.name);
        FamilyId f = FamilyId::parse(c.name);
        f.delta = 2.0;
        WaveProfile p = construct(f, c.k, c.L, 256);
        CHECK(residual(p) < 1e-8);
    }
}

TEST_CASE("ilw speed and mean-square constants match reference values") {
    // reference values from an independent Fourier-coefficient Newton solve
    struct Row {
        double k, c, A;
    };
    const Row rows[] = {
        {0.82, 1.758832983834757e-1, 6.966091779664070e-1},
        {0.85, 5.185349159161061e-1, 1.035001689990996},
        {0.88, 1.189649388814186, 1.700848110455579},
        {0.91, 3.046097620923321, 3.551175790947044},
    };
    FamilyId f = FamilyId::parse("ilw", 1.0, 6.0, 2.0);
    for (const auto& r : rows) {
        CAPTURE(r.k);
        WaveProfile p = construct(f, r.k, 2.0 * 3.14159265358979323846, 256);
        CHECK(rel(p.c, r.c) < 1e-10);
        CHECK(rel(p.A, r.A) < 1e-10);
    }
}

TEST_CASE("admissibility bounds are enforced") {
    CHECK_THROWS_AS(construct(FamilyId::parse("kdv_cnoidal"), 0.5, 10.0, 128),
                    admissibility_error); // k below sqrt(2)/2
    CHECK_THROWS_AS(construct(FamilyId::parse("mbbm_dnsn"), 0.5, 5.0, 128),
                    admissibility_error); // L <= 2 pi
    CHECK_THROWS_AS(construct(FamilyId::parse("reg_schamel"), 0.5, 10.0, 128),
                    admissibility_error); // L <= 4 pi
    CHECK_THROWS_AS(construct(FamilyId::parse("mbbm_dnsn"), 0.99, 6.5, 128),
                    admissibility_error); // k >= k_L
    CHECK_THROWS_AS(construct(FamilyId::parse("ilw", 1.0, 6.0, 20.0), 0.5, 6.28, 128),
                    admissibility_error); // 2 delta K / L >= K'
}

TEST_CASE("regularized period constraint root") {
    for (const char* name : {"mbbm_dnsn", "reg_schamel"}) {
        CAPTURE(name);
        FamilyId f = FamilyId::parse(name);
        // moderate L keeps the root well-conditioned (dK/dk blows up as k -> 1)
        double L = 14.0;
        double kL = find_kL(f, L);
        CHECK(kL > 0.0);
        CHECK(kL < 1.0);
        double K = ell::complete_K(kL);
        double s = std::sqrt(kL * kL * kL * kL - kL * kL + 1.0);
        double factor = f.tag == FamilyId::Tag::mbbm_dnsn ? 16.0 : 64.0;
        CHECK(std::fabs(L * L - factor * K * K * s) < 1e-6);
        // construction succeeds just below the bound, fails at it
        CHECK_NOTHROW(construct(f, 0.999 * kL, L, 128));
        CHECK_THROWS_AS(construct(f, kL, L, 128), admissibility_error);
    }
}

TEST_CASE("quadrature oracle reproduces period and profile") {
    struct Case {
        const char* name;
        double k, L;
    };
    const Case cases[] = {
        {"kdv_cnoidal", 0.9, 6.2832},
        {"mkdv_dnoidal", 0.5, 6.2832},
        {"mkdv_dnsn", 0.5, 30.0},
        {"schamel", 0.6, 10.0},
    };
    for (const auto& c : cases) {
        CAPTURE(c.name);
        FamilyId f = FamilyId::parse(c.name);
        WaveProfile p = construct(f, c.k, c.L, 256);
        FirstIntegralSpec spec = first_integral(p);
        double lo = *std::min_element(p.samples.begin(), p.samples.end());
        double hi = *std::max_element(p.samples.begin(), p.samples.end());
        CHECK(rel(quadrature_period(spec, lo, hi), c.L) < 1e-6);
        auto prof = quadrature_profile(spec, lo, hi, 256);
        CHECK(sup_diff(prof, p.samples) / (hi - lo) < 1e-6);
    }
}

TEST_CASE("gardner profiles are conjugate images of mkdv profiles") {
    const double a = 0.2, b = 2.0, L = 6.2832, k = 0.5;
    const double gamma = std::sqrt(6.0 / b), d = a / (2.0 * b);
    for (const char* pair : {"dn", "dnsn"}) {
        CAPTURE(pair);
        bool dn = std::string(pair) == "dn";
        double LL = dn ? L : 30.0;
        WaveProfile pm =
            construct(FamilyId::parse(dn ? "mkdv_dnoidal" : "mkdv_dnsn"), k, LL, 256);
        WaveProfile pg = construct(
            FamilyId::parse(dn ? "gardner_dn" : "gardner_dnsn", a, b), k, LL, 256);
        std::vector<double> mapped(pm.N);
        for (int i = 0; i < pm.N; ++i) mapped[i] = gamma * pm.samples[i] - d;
        CHECK(sup_diff(mapped, pg.samples) < 1e-10);
        // speed relation c_tilde = c - a^2 / (4 b)
        CHECK(std::fabs(pg.c - (pm.c - a * a / (4.0 * b))) < 1e-12);
    }
}

TEST_CASE("gardner speed positivity is enforced") {
    // large a pushes c - a^2/(4b) negative
    CHECK_THROWS_AS(construct(FamilyId::parse("gardner_dn", 10.0, 2.0), 0.5,
                              6.2832, 128),
                    admissibility_error);
}

TEST_CASE("fourier interpolation evaluates the profile") {
    WaveProfile p = construct(FamilyId::parse("mkdv_dnoidal"), 0.6, 6.2832, 128);
    for (int i = 0; i < p.N; ++i)
        CHECK(std::fabs(p.fourier_eval(i * p.L / p.N) - p.samples[i]) < 1e-10);
    // derivative vanishes at the crest
    CHECK(std::fabs(p.fourier_deriv(0.0)) < 1e-9);
}

TEST_CASE("family parser round-trips and rejects junk") {
    for (const char* name :
         {"kdv_cnoidal", "mkdv_dnoidal", "mkdv_dnsn", "gardner_dn", "gardner_dnsn",
          "ilw", "schamel", "mbbm_dnsn", "reg_schamel"})
        CHECK(FamilyId::parse(name).name() == name);
    CHECK_THROWS(FamilyId::parse("no_such_family"));
}
