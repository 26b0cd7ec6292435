#include <doctest.h>

#include <cmath>
#include <vector>

#include "periwave/families.hpp"
#include "periwave/functionals.hpp"
#include "periwave/verifier.hpp"

using namespace periwave;

namespace {
double rel(double got, double want) {
    return std::fabs(got - want) / std::fabs(want);
}
} // namespace

TEST_CASE("d_dk differentiates smooth maps") {
    auto cube = [](double k) { return k * k * k; };
    CHECK(std::fabs(d_dk(cube, 0.4, 1e-3) - 3 * 0.4 * 0.4) < 1e-10);
    // shrinks the stencil when one side is inadmissible
    auto guarded = [](double k) {
        if (k >= 0.5) throw admissibility_error("out of range");
        return k * k;
    };
    CHECK(std::fabs(d_dk(guarded, 0.4999, 1e-3) - 2 * 0.4999) < 1e-6);
}

TEST_CASE("verify returns all flags for representative points") {
    struct Case {
        const char* name;
        double k, L;
    };
    const Case cases[] = {
        {"mkdv_dnoidal", 0.5, 6.2832},
        {"mkdv_dnsn", 0.5, 30.0},
        {"kdv_cnoidal", 0.9, 6.2832},
        {"mbbm_dnsn", 0.4, 20.0},
        {"reg_schamel", 0.5, 50.0},
        {"gardner_dn", 0.5, 6.2832},
    };
    for (const auto& c : cases) {
        CAPTURE(c.name);
        HypothesisReport r = verify(FamilyId::parse(c.name), c.k, c.L);
        CHECK(r.all_true());
        CHECK(r.Phi < 0.0);
        CHECK(r.n_negative == 1);
    }
}

TEST_CASE("verify uses pf2 evidence for nonlocal dispersion") {
    FamilyId f = FamilyId::parse("ilw", 1.0, 6.0, 2.0);
    HypothesisReport r = verify(f, 0.85, 6.283185307179586);
    CHECK(r.all_true());
    CHECK(r.pf2_evidence);
    CHECK_FALSE(r.theta.has_value());
}

TEST_CASE("hypothesis quantities match reference values") {
    // reference values from an independent high-resolution implementation
    HypothesisReport r = verify(FamilyId::parse("mbbm_dnsn"), 0.5, 30.0);
    CHECK(rel(r.Phi, -1.228499124e-3) < 1e-6);
    CHECK(rel(r.Mk, 8.962678422e-3) < 1e-6);
    CHECK(rel(r.Psi, 1.678395025e-2) < 1e-6);
}

TEST_CASE("published table regression: the alternate quadratic form") {
    // The published table of Psi values for the regularized cubic family is
    // reproduced, digit for digit, by replacing the x-derivative with the
    // k-derivative inside the quadratic form:
    //   Q_alt = 1/2 int ((d phi/dk)^2 + phi^2),  Psi_alt = 2 c_k Q_alt + A_k V.
    // The definition-correct Psi (tested above) disagrees with that table.
    // This regression documents the provenance of the published column.
    const double printed[] = {9.093638233e-5,  7.877593065e-4, 3.061968119e-3,
                              9.008424446e-3,  2.397754841e-2, 6.355524106e-2,
                              1.814545325e-1,  6.356553017e-1, 4.353282492};
    FamilyId f = FamilyId::parse("mbbm_dnsn");
    const double L = 30.0;
    const int N = 512;
    for (int j = 0; j < 9; ++j) {
        double k = 0.1 * (j + 1);
        CAPTURE(k);
        VerifyConfig vc;
        vc.N = N;
        vc.use_theta = false;
        HypothesisReport rep = verify(f, k, L, vc);
        double h = 1e-4;
        auto prof = [&](double kk) { return construct(f, kk, L, N).samples; };
        auto pp = prof(k + h), pm = prof(k - h);
        auto pp2 = prof(k + h / 2), pm2 = prof(k - h / 2);
        auto p0 = prof(k);
        double Q_alt = 0.0, V = 0.0;
        for (int i = 0; i < N; ++i) {
            double Dh = (pp[i] - pm[i]) / (2 * h);
            double Dh2 = (pp2[i] - pm2[i]) / h;
            double dk = (4 * Dh2 - Dh) / 3;
            Q_alt += 0.5 * (dk * dk + p0[i] * p0[i]);
            V += p0[i];
        }
        Q_alt *= L / N;
        V *= L / N;
        double psi_alt = 2.0 * rep.dc_dk * Q_alt + rep.dA_dk * V;
        CHECK(rel(psi_alt, printed[j]) < (j == 0 ? 1e-5 : 1e-6));
        // while the definition-correct value does not match for k >= 0.2
        if (j >= 1) CHECK(rel(rep.Psi, printed[j]) > 1e-2);
    }
}
