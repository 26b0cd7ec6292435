#ifndef PERIWAVE_SPECTRAL_HPP
#define PERIWAVE_SPECTRAL_HPP

#include <Eigen/Dense>
#include <array>
#include <string>
#include <vector>

#include "periwave/families.hpp"
#include "periwave/symbol.hpp"

namespace periwave {

// Fourier-Galerkin truncation of the linearized (Hill) operator
//   L u = (M + c) u - f'(phi) u          (plain)
//   L u = c M u + (c - 1) u - f'(phi) u  (regularized)
// in the basis e^{2pi i m x / L}, m = -N_t .. N_t.
struct HillOperator {
    int N_t = 0;
    bool regularized = false;
    Eigen::MatrixXcd matrix;
    Eigen::VectorXcd dphi_hat; // Fourier coefficients of phi' on the same modes
};

struct SpectrumReport {
    std::vector<double> eigenvalues; // ascending, lowest n_eigs
    int n_negative = 0;
    std::vector<double> zero_candidates;
    double kernel_alignment = 0.0;
    double tol_zero = 0.0;
    bool h1_holds = false;
    bool h2_holds = false;
};

HillOperator assemble(const WaveProfile& profile, const SymbolSpec& symbol, int N_t);

// tol_zero < 0 selects the default 1e-6 * |lambda_0|.
SpectrumReport eigs(const HillOperator& op, int n_eigs, double tol_zero = -1.0);

struct LameEigenvalues {
    std::array<double, 3> h;      // Lame eigenvalues of the normalized problem
    std::array<double, 3> lambda; // mapped back to the Hill operator
};

// Closed-form lowest three periodic eigenvalues for the families whose Hill
// operator reduces to a Lame equation (kdv_cnoidal, mkdv_dnoidal, reg_schamel).
LameEigenvalues lame_closed_form(const FamilyId& family, double k, double L);

// theta = y'(L) / phi''(0) for the second Floquet solution of L y = 0, with
// y(0) = -1/phi''(0), y'(0) = 0 (second-order dispersion only).
double floquet_theta(const WaveProfile& profile, double rtol = 1e-10);

struct Pf2Result {
    bool holds = false;
    int window = 0;
    std::string reason;          // empty when holds
    std::array<int, 4> violation{}; // n1, n2, m1, m2 of the first failed minor
};

// Discrete PF(2) test on an even positive sequence alpha_n, |n| <= M:
// (i) alpha_n > 0, (ii) every 2x2 translate minor
// alpha_{n1-m1} alpha_{n2-m2} - alpha_{n1-m2} alpha_{n2-m1} > 0,
// restricted to quadruples whose differences stay inside the window.
// alpha[i] holds the coefficient of mode i - M.
Pf2Result pf2_check(const std::vector<double>& alpha, int M);

} // namespace periwave

#endif
