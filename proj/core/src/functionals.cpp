#include "periwave/functionals.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "fft_util.hpp"

namespace periwave {

namespace {

constexpr double pi = 3.14159265358979323846;

std::vector<double> apply_M(const std::vector<double>& u, double L,
                            const SymbolSpec& symbol) {
    const int N = static_cast<int>(u.size());
    auto uh = detail::fft_coeffs(u);
    for (int i = 0; i < N; ++i)
        uh[i] *= symbol.multiplier(detail::mode_of(i, N), L);
    return detail::ifft_real(uh);
}

double trapz(const std::vector<double>& u, double L) {
    double s = 0.0;
    for (double v : u) s += v;
    return s * L / static_cast<double>(u.size());
}

} // namespace

double energy(const std::vector<double>& u, double L, const SymbolSpec& symbol,
              const FamilyId& family) {
    auto Mu = apply_M(u, L, symbol);
    const int N = static_cast<int>(u.size());
    double s = 0.0;
    for (int i = 0; i < N; ++i) s += u[i] * Mu[i] - 2.0 * family.F(u[i]);
    return 0.5 * s * L / N;
}

double charge_plain(const std::vector<double>& u, double L) {
    double s = 0.0;
    for (double v : u) s += v * v;
    return 0.5 * s * L / static_cast<double>(u.size());
}

double charge_reg(const std::vector<double>& u, double L, const SymbolSpec& symbol) {
    auto Mu = apply_M(u, L, symbol);
    const int N = static_cast<int>(u.size());
    double s = 0.0;
    for (int i = 0; i < N; ++i) s += u[i] * (u[i] + Mu[i]);
    return 0.5 * s * L / N;
}

double mean_functional(const std::vector<double>& u, double L) { return trapz(u, L); }

double fk_gradient_residual(const WaveProfile& p, const SymbolSpec& symbol) {
    auto Mu = apply_M(p.samples, p.L, symbol);
    double worst = 0.0, scale = 0.0;
    const bool reg = p.family.regularized();
    for (int i = 0; i < p.N; ++i) {
        double u = p.samples[i];
        // E'(u) = Mu - f(u); Q' = u (plain) or u + Mu (regularized); V' = 1.
        double g = reg ? (Mu[i] - p.family.f(u)) + (p.c - 1.0) * (u + Mu[i]) + p.A
                       : (Mu[i] - p.family.f(u)) + p.c * u + p.A;
        worst = std::max(worst, std::fabs(g));
        scale = std::max(scale, std::fabs(u));
    }
    return worst / std::max(1.0, scale);
}

double mk_value(const std::vector<double>& u, double L, double dc_dk, double dA_dk,
                bool regularized, const SymbolSpec& symbol) {
    double Q = regularized ? charge_reg(u, L, symbol) : charge_plain(u, L);
    return dc_dk * Q + dA_dk * mean_functional(u, L);
}

double sobolev_norm(const std::vector<double>& u, double s, double L) {
    const int N = static_cast<int>(u.size());
    auto uh = detail::fft_coeffs(u);
    double acc = 0.0;
    for (int i = 0; i < N; ++i) {
        double m = static_cast<double>(detail::mode_of(i, N));
        acc += std::pow(1.0 + m * m, s) * std::norm(uh[i]);
    }
    return std::sqrt(L * acc);
}

double rho_with_shift(const std::vector<double>& u, const std::vector<double>& v,
                      double s, double L, double* shift_out) {
    const int N = static_cast<int>(u.size());
    if (v.size() != u.size())
        throw std::invalid_argument("rho: sample grids must match");
    auto uh = detail::fft_coeffs(u);
    auto vh = detail::fft_coeffs(v);

    // ||u - v(.+r)||^2 = L [ C - 2 Re g(r) ],
    // C = sum w (|uh|^2 + |vh|^2), g(r) = sum w uh conj(vh) e^{-i xi r}.
    std::vector<double> w(N);
    std::vector<std::complex<double>> h(N);
    double C = 0.0;
    for (int i = 0; i < N; ++i) {
        double m = static_cast<double>(detail::mode_of(i, N));
        w[i] = std::pow(1.0 + m * m, s);
        C += w[i] * (std::norm(uh[i]) + std::norm(vh[i]));
        h[i] = w[i] * uh[i] * std::conj(vh[i]);
    }

    // Coarse scan: Re g(jL/N) is the forward DFT of h at index j.
    auto hj = h;
    detail::Fft fft(N);
    fft.forward(hj.data());
    int best = 0;
    for (int j = 1; j < N; ++j)
        if (hj[j].real() > hj[best].real()) best = j;

    auto re_g = [&](double r) {
        double acc = 0.0;
        for (int i = 0; i < N; ++i) {
            double xi = 2.0 * pi * detail::mode_of(i, N) / L;
            acc += h[i].real() * std::cos(xi * r) + h[i].imag() * std::sin(xi * r);
        }
        return acc;
    };

    // Golden-section refinement around the best grid shift.
    double dr = L / N;
    double a = best * dr - dr, b = best * dr + dr;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = re_g(x1), f2 = re_g(x2);
    while (b - a > 1e-10) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = re_g(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = re_g(x1);
        }
    }
    double r = 0.5 * (a + b);
    if (shift_out) *shift_out = r;
    double d2 = L * (C - 2.0 * re_g(r));
    return std::sqrt(std::max(0.0, d2));
}

double rho(const std::vector<double>& u, const std::vector<double>& v, double s,
           double L) {
    return rho_with_shift(u, v, s, L, nullptr);
}

} // namespace periwave
