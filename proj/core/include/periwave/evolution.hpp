#ifndef PERIWAVE_EVOLUTION_HPP
#define PERIWAVE_EVOLUTION_HPP

#include <vector>

#include "periwave/families.hpp"
#include "periwave/symbol.hpp"

namespace periwave {

struct EvolutionConfig {
    enum class Integrator { exponential_rk4, implicit_midpoint };

    int N = 256;
    double dt = 1e-3;
    double T = 1.0;
    Integrator integrator = Integrator::exponential_rk4;
    bool dealias = false;
    int record_every = 0; // 0: choose automatically (~256 records)
};

struct EvolutionTrace {
    std::vector<double> times;
    std::vector<double> rho_series; // rho(u(t), reference) in H^{s2/2}
    double drift_E = 0.0, drift_Q = 0.0, drift_V = 0.0; // max relative drifts
    double sup_rho = 0.0;
    bool aborted = false;
    std::string abort_reason;
};

struct EvolutionResult {
    EvolutionTrace trace;
    std::vector<double> final_state;
};

// Pseudospectral integration of
//   u_t - M u_x + d/dx f(u) = 0                    (plain form), or
//   u_t + M u_t + d/dx (u + f(u)) = 0              (regularized form),
// selected by family.regularized(). The reference profile, when given, is
// the target of the rho series (otherwise rho is not recorded).
EvolutionResult integrate(const std::vector<double>& u0, const FamilyId& family,
                          double L, const EvolutionConfig& config,
                          const std::vector<double>* reference = nullptr);

struct Perturbation {
    enum class Kind { mode_bump, random };
    Kind kind = Kind::mode_bump;
    double amplitude = 1e-3;
    int mode = 1;          // mode_bump
    unsigned long seed = 0; // random
};

EvolutionTrace orbital_experiment(const WaveProfile& profile,
                                  const Perturbation& perturbation,
                                  EvolutionConfig config);

// u(. + r) evaluated by Fourier phase shift (exact for band-limited data).
std::vector<double> translate(const std::vector<double>& u, double r, double L);

} // namespace periwave

#endif
