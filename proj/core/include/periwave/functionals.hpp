#ifndef PERIWAVE_FUNCTIONALS_HPP
#define PERIWAVE_FUNCTIONALS_HPP

#include <vector>

#include "periwave/families.hpp"
#include "periwave/symbol.hpp"

namespace periwave {

// Conserved functionals. All integrals use the uniform-grid trapezoid rule,
// which is spectrally accurate for smooth periodic integrands.

// E(u) = 1/2 int (u M u - 2 F(u)) dx, F the antiderivative of f with F(0)=0.
double energy(const std::vector<double>& u, double L, const SymbolSpec& symbol,
              const FamilyId& family);

// Q(u) = 1/2 int u^2 dx
double charge_plain(const std::vector<double>& u, double L);
// Q(u) = 1/2 int (u^2 + u M u) dx  (regularized equations)
double charge_reg(const std::vector<double>& u, double L, const SymbolSpec& symbol);
// V(u) = int u dx
double mean_functional(const std::vector<double>& u, double L);

// Sup-norm of E'(phi) + c Q'(phi) + A V'(phi) (variational route to the
// profile-equation residual; regularized variant when family.regularized()).
double fk_gradient_residual(const WaveProfile& profile, const SymbolSpec& symbol);

// M_k(u) = dc_dk Q(u) + dA_dk V(u), Q regularized when requested.
double mk_value(const std::vector<double>& u, double L, double dc_dk, double dA_dk,
                bool regularized, const SymbolSpec& symbol);

// Translation-quotient pseudo-metric:
//   rho(u, v) = inf_r || u - v(. + r) ||_{H^s},
// with ||f||^2 = L sum_m (1 + |m|^2)^s |f_hat(m)|^2. Coarse scan over grid
// shifts, then golden-section refinement of the continuous shift.
double rho(const std::vector<double>& u, const std::vector<double>& v, double s,
           double L);
// Same, also reporting the minimizing shift.
double rho_with_shift(const std::vector<double>& u, const std::vector<double>& v,
                      double s, double L, double* shift_out);

// Plain H^s norm (r = 0 candidate), same weight convention.
double sobolev_norm(const std::vector<double>& u, double s, double L);

} // namespace periwave

#endif
