#include "periwave/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <random>

#include "fft_util.hpp"
#include "periwave/functionals.hpp"

namespace periwave {

namespace {

constexpr double pi = 3.14159265358979323846;
using cplx = std::complex<double>;

struct Stepper {
    int N;
    double L, dt;
    FamilyId family;
    SymbolSpec sym;
    bool reg, dealias;
    detail::Fft fft;

    std::vector<cplx> lin;      // linear symbol per mode
    std::vector<double> nlfac;  // nonlinear prefactor: 1 (plain), 1/(1+alpha) (reg)
    std::vector<double> mask;   // dealiasing mask
    // ETDRK4 coefficients
    std::vector<cplx> E, E2, Qc, f1, f2, f3;

    Stepper(const FamilyId& fam, double L_, const EvolutionConfig& cfg)
        : N(cfg.N), L(L_), dt(cfg.dt), family(fam), sym(fam.symbol()),
          reg(fam.regularized()), dealias(cfg.dealias), fft(cfg.N),
          lin(N), nlfac(N), mask(N, 1.0) {
        for (int i = 0; i < N; ++i) {
            long m = detail::mode_of(i, N);
            double xi = 2.0 * pi * m / L;
            double al = sym.multiplier(m, L);
            if (reg) {
                lin[i] = cplx(0.0, -xi / (1.0 + al));
                nlfac[i] = 1.0 / (1.0 + al);
            } else {
                lin[i] = cplx(0.0, xi * al);
                nlfac[i] = 1.0;
            }
            if (dealias && std::labs(m) > N / 3) mask[i] = 0.0;
        }
        if (cfg.integrator == EvolutionConfig::Integrator::exponential_rk4)
            etdrk4_coefficients();
    }

    void etdrk4_coefficients() {
        E.resize(N);
        E2.resize(N);
        Qc.assign(N, 0.0);
        f1.assign(N, 0.0);
        f2.assign(N, 0.0);
        f3.assign(N, 0.0);
        const int Mpts = 32;
        for (int i = 0; i < N; ++i) {
            cplx z0 = lin[i] * dt;
            E[i] = std::exp(z0);
            E2[i] = std::exp(0.5 * z0);
            cplx q = 0.0, a = 0.0, b = 0.0, c = 0.0;
            for (int j = 0; j < Mpts; ++j) {
                // contour of radius 1 around z0 (Kassam-Trefethen)
                cplx z = z0 + std::exp(cplx(0.0, pi * (j + 0.5) / (Mpts / 2)));
                cplx ez = std::exp(z);
                q += (std::exp(0.5 * z) - 1.0) / z;
                cplx z3 = z * z * z;
                a += (-4.0 - z + ez * (4.0 - 3.0 * z + z * z)) / z3;
                b += (2.0 + z + ez * (-2.0 + z)) / z3;
                c += (-4.0 - 3.0 * z - z * z + ez * (4.0 - z)) / z3;
            }
            double inv = 1.0 / Mpts;
            Qc[i] = dt * q * inv;
            f1[i] = dt * a * inv;
            f2[i] = dt * b * inv;
            f3[i] = dt * c * inv;
        }
    }

    // N(u_hat) = -i xi nlfac * fft(f(u)); u obtained from u_hat.
    std::vector<cplx> nonlinear(const std::vector<cplx>& uh) {
        std::vector<cplx> work = uh;
        fft.backward(work.data());
        for (int i = 0; i < N; ++i) {
            double u = work[i].real() / N;
            work[i] = family.f(u);
        }
        fft.forward(work.data());
        for (int i = 0; i < N; ++i) {
            long m = detail::mode_of(i, N);
            double xi = 2.0 * pi * m / L;
            work[i] *= cplx(0.0, -xi) * nlfac[i] * mask[i];
        }
        return work;
    }

    void step_etdrk4(std::vector<cplx>& uh) {
        auto Nu = nonlinear(uh);
        std::vector<cplx> a(N), b(N), c(N);
        for (int i = 0; i < N; ++i) a[i] = E2[i] * uh[i] + Qc[i] * Nu[i];
        auto Na = nonlinear(a);
        for (int i = 0; i < N; ++i) b[i] = E2[i] * uh[i] + Qc[i] * Na[i];
        auto Nb = nonlinear(b);
        for (int i = 0; i < N; ++i) c[i] = E2[i] * a[i] + Qc[i] * (2.0 * Nb[i] - Nu[i]);
        auto Nc = nonlinear(c);
        for (int i = 0; i < N; ++i)
            uh[i] = E[i] * uh[i] + f1[i] * Nu[i] + 2.0 * f2[i] * (Na[i] + Nb[i]) +
                    f3[i] * Nc[i];
    }

    void step_midpoint(std::vector<cplx>& uh) {
        // (1 - dt/2 lin) u1 = (1 + dt/2 lin) u0 + dt N(mid), fixed point on mid.
        std::vector<cplx> u1 = uh, mid(N);
        for (int it = 0; it < 50; ++it) {
            for (int i = 0; i < N; ++i) mid[i] = 0.5 * (uh[i] + u1[i]);
            auto Nm = nonlinear(mid);
            double delta = 0.0, scale = 0.0;
            for (int i = 0; i < N; ++i) {
                cplx next = ((1.0 + 0.5 * dt * lin[i]) * uh[i] + dt * Nm[i]) /
                            (1.0 - 0.5 * dt * lin[i]);
                delta += std::norm(next - u1[i]);
                scale += std::norm(next);
                u1[i] = next;
            }
            if (delta <= 1e-28 * std::max(scale, 1e-300)) break;
        }
        uh = u1;
    }
};

} // namespace

std::vector<double> translate(const std::vector<double>& u, double r, double L) {
    const int N = static_cast<int>(u.size());
    auto uh = detail::fft_coeffs(u);
    for (int i = 0; i < N; ++i) {
        double xi = 2.0 * pi * detail::mode_of(i, N) / L;
        uh[i] *= std::exp(cplx(0.0, xi * r));
    }
    return detail::ifft_real(uh);
}

EvolutionResult integrate(const std::vector<double>& u0, const FamilyId& family,
                          double L, const EvolutionConfig& config,
                          const std::vector<double>* reference) {
    Stepper st(family, L, config);
    const int N = config.N;
    const SymbolSpec sym = family.symbol();
    const bool reg = family.regularized();
    const double s_rho = sym.s2 / 2.0;

    long n_steps = static_cast<long>(std::ceil(config.T / config.dt - 1e-12));
    int rec = config.record_every > 0
                  ? config.record_every
                  : static_cast<int>(std::max<long>(1, n_steps / 256));

    std::vector<cplx> uh(u0.begin(), u0.end());
    st.fft.forward(uh.data());

    double sup0 = 0.0;
    for (double v : u0) sup0 = std::max(sup0, std::fabs(v));
    const double blowup = 1e6 * std::max(sup0, 1e-12);
    const bool schamel_type = family.tag == FamilyId::Tag::schamel ||
                              family.tag == FamilyId::Tag::reg_schamel;

    double E0 = energy(u0, L, sym, family);
    double Q0 = reg ? charge_reg(u0, L, sym) : charge_plain(u0, L);
    double V0 = mean_functional(u0, L);

    EvolutionResult out;
    auto record = [&](double t, const std::vector<double>& u) {
        out.trace.times.push_back(t);
        if (reference) {
            double r = rho(u, *reference, s_rho, L);
            out.trace.rho_series.push_back(r);
            out.trace.sup_rho = std::max(out.trace.sup_rho, r);
        }
        double Ed = std::fabs(energy(u, L, sym, family) - E0) /
                    std::max(std::fabs(E0), 1e-12);
        double Qd = std::fabs((reg ? charge_reg(u, L, sym) : charge_plain(u, L)) - Q0) /
                    std::max(std::fabs(Q0), 1e-12);
        double Vd = std::fabs(mean_functional(u, L) - V0) /
                    std::max(std::fabs(V0), 1e-12);
        out.trace.drift_E = std::max(out.trace.drift_E, Ed);
        out.trace.drift_Q = std::max(out.trace.drift_Q, Qd);
        out.trace.drift_V = std::max(out.trace.drift_V, Vd);
    };

    auto to_samples = [&](const std::vector<cplx>& coeffs) {
        std::vector<cplx> work = coeffs;
        st.fft.backward(work.data());
        std::vector<double> u(N);
        for (int i = 0; i < N; ++i) u[i] = work[i].real() / N;
        return u;
    };

    record(0.0, u0);
    for (long n = 0; n < n_steps; ++n) {
        if (config.integrator == EvolutionConfig::Integrator::exponential_rk4)
            st.step_etdrk4(uh);
        else
            st.step_midpoint(uh);
        if ((n + 1) % rec == 0 || n + 1 == n_steps) {
            auto u = to_samples(uh);
            double sup = 0.0, lo = 0.0;
            for (double v : u) {
                sup = std::max(sup, std::fabs(v));
                lo = std::min(lo, v);
            }
            if (sup > blowup) {
                out.trace.aborted = true;
                out.trace.abort_reason = "sup-norm blow-up guard";
                out.final_state = u;
                return out;
            }
            if (schamel_type && lo < -1e-6 * std::max(sup, 1.0)) {
                out.trace.aborted = true;
                out.trace.abort_reason = "positivity monitor (|u|^{3/2} regime left)";
                out.final_state = u;
                return out;
            }
            record((n + 1) * config.dt, u);
        }
    }
    out.final_state = to_samples(uh);
    return out;
}

EvolutionTrace orbital_experiment(const WaveProfile& profile,
                                  const Perturbation& pert, EvolutionConfig config) {
    double norm0 = 0.0;
    for (double v : profile.samples) norm0 = std::max(norm0, std::fabs(v));
    if (pert.amplitude > 0.1 * norm0)
        throw std::invalid_argument(
            "orbital_experiment: perturbation amplitude exceeds 0.1 * ||profile||");
    config.N = profile.N;

    std::vector<double> u0 = profile.samples;
    const int N = profile.N;
    if (pert.kind == Perturbation::Kind::mode_bump) {
        for (int i = 0; i < N; ++i)
            u0[i] += pert.amplitude *
                     std::cos(2.0 * pi * pert.mode * i / static_cast<double>(N));
    } else {
        std::mt19937_64 rng(pert.seed);
        std::uniform_real_distribution<double> ph(0.0, 2.0 * pi);
        for (int m = 1; m <= 4; ++m) {
            double phase = ph(rng);
            for (int i = 0; i < N; ++i)
                u0[i] += (pert.amplitude / 4.0) *
                         std::cos(2.0 * pi * m * i / static_cast<double>(N) + phase);
        }
    }
    auto res = integrate(u0, profile.family, profile.L, config, &profile.samples);
    return res.trace;
}

} // namespace periwave
