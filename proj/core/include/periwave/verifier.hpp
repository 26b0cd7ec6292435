#ifndef PERIWAVE_VERIFIER_HPP
#define PERIWAVE_VERIFIER_HPP

#include <functional>
#include <optional>
#include <string>

#include "periwave/families.hpp"
#include "periwave/spectral.hpp"

namespace periwave {

struct HypothesisReport {
    std::string family;
    double k = 0, L = 0, c = 0, A = 0;
    double dc_dk = 0, dA_dk = 0;
    double Q = 0, V = 0, dQ_dk = 0, dV_dk = 0; // Q regularized when applicable
    double Phi = 0, Mk = 0, Psi = 0;
    std::optional<double> theta;
    int n_negative = 0;
    bool zero_simple = false;
    bool pf2_evidence = false; // ILW route to (H1)-(H2)
    bool h0 = false, h1 = false, h2 = false, h3 = false, h4 = false;
    std::string error; // nonempty if a stage failed

    bool all_true() const { return h0 && h1 && h2 && h3 && h4 && error.empty(); }
};

struct VerifyConfig {
    int N = 256;          // profile grid
    int N_t = 128;        // Galerkin truncation
    double fd_step = 1e-4;
    bool use_theta = true; // attach theta for second-order dispersion
    int pf2_window = 16;   // ILW evidence window
    double residual_tol = 1e-8;
};

// Central difference with Richardson extrapolation; the step shrinks
// geometrically if the stencil leaves the admissible set.
double d_dk(const std::function<double(double)>& map, double k, double h,
            double* err_estimate = nullptr);

// Phi = -dc_dk * dQ_dk - dA_dk * dV_dk (plain Q for (H3), regularized for (P3)).
double phi_value(const FamilyId& family, double k, double L, int N = 256);

// Published closed-form (Q, V) for kdv_cnoidal, mkdv_dnoidal, mkdv_dnsn.
std::pair<double, double> closed_form_integrals(const FamilyId& family, double k,
                                                double L);

HypothesisReport verify(const FamilyId& family, double k, double L,
                        const VerifyConfig& config = {});

} // namespace periwave

#endif
