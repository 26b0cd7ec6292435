#include "periwave/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "fft_util.hpp"
#include "periwave/elliptic.hpp"

namespace periwave {

namespace {
constexpr double pi = 3.14159265358979323846;
using std::complex;
} // namespace

HillOperator assemble(const WaveProfile& p, const SymbolSpec& symbol, int N_t) {
    if (2 * N_t > p.N)
        throw std::invalid_argument(
            "assemble: N_t must not exceed N/2 (aliased potential coefficients)");
    const int n = 2 * N_t + 1;

    std::vector<double> g(p.N);
    for (int i = 0; i < p.N; ++i) g[i] = p.family.fprime(p.samples[i]);
    auto gh = detail::fft_coeffs(g);
    auto coeff = [&](long d) {
        long idx = ((d % p.N) + p.N) % p.N;
        return gh[idx];
    };

    HillOperator op;
    op.N_t = N_t;
    op.regularized = p.family.regularized();
    op.matrix.resize(n, n);
    for (int i = 0; i < n; ++i) {
        long mi = i - N_t;
        for (int j = 0; j < n; ++j) {
            long mj = j - N_t;
            complex<double> v = -coeff(mi - mj);
            if (i == j) {
                double al = symbol.multiplier(mi, p.L);
                v += op.regularized ? p.c * al + (p.c - 1.0) : al + p.c;
            }
            op.matrix(i, j) = v;
        }
    }

    op.dphi_hat.resize(n);
    for (int i = 0; i < n; ++i) {
        long m = i - N_t;
        long idx = ((m % p.N) + p.N) % p.N;
        double xi = 2.0 * pi * m / p.L;
        op.dphi_hat(i) = complex<double>(0.0, xi) * p.fourier[idx];
    }
    return op;
}

SpectrumReport eigs(const HillOperator& op, int n_eigs, double tol_zero) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(op.matrix);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigs: eigensolver failed");
    const auto& ev = solver.eigenvalues();
    const int n = static_cast<int>(ev.size());
    n_eigs = std::min(n_eigs, n);

    SpectrumReport rep;
    rep.eigenvalues.assign(ev.data(), ev.data() + n_eigs);
    if (tol_zero < 0.0) tol_zero = 1e-6 * std::fabs(ev(0));
    rep.tol_zero = tol_zero;

    int zero_index = -1;
    for (int i = 0; i < n; ++i) {
        if (ev(i) < -tol_zero) ++rep.n_negative;
        else if (ev(i) <= tol_zero) {
            rep.zero_candidates.push_back(ev(i));
            if (zero_index < 0) zero_index = i;
        }
    }
    if (zero_index >= 0) {
        Eigen::VectorXcd psi = solver.eigenvectors().col(zero_index);
        double num = std::abs(psi.dot(op.dphi_hat));
        double den = psi.norm() * op.dphi_hat.norm();
        rep.kernel_alignment = den > 0.0 ? num / den : 0.0;
    }
    rep.h1_holds = (rep.n_negative == 1);
    rep.h2_holds = (rep.zero_candidates.size() == 1 && rep.kernel_alignment > 0.999);
    return rep;
}

namespace {

// Roots of h^3 + p2 h^2 + p1 h + p0 with three real roots (trigonometric form).
std::array<double, 3> cubic_roots(double p2, double p1, double p0) {
    double a = p2, b = p1, c = p0;
    double q = (3.0 * b - a * a) / 9.0;
    double r = (9.0 * a * b - 27.0 * c - 2.0 * a * a * a) / 54.0;
    double disc = q * q * q + r * r;
    if (disc > 1e-12 * std::max(1.0, r * r))
        throw std::runtime_error("cubic_roots: expected three real roots");
    double mag = std::sqrt(std::max(0.0, -q * q * q));
    double th = mag > 0.0 ? std::acos(std::clamp(r / mag, -1.0, 1.0)) : 0.0;
    double sq = 2.0 * std::sqrt(std::max(0.0, -q));
    std::array<double, 3> out{};
    for (int i = 0; i < 3; ++i)
        out[i] = sq * std::cos((th + 2.0 * pi * i) / 3.0) - a / 3.0;
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

LameEigenvalues lame_closed_form(const FamilyId& family, double k, double L) {
    const double K = ell::complete_K(k);
    auto [c, A] = wave_constants(family, k, L);
    (void)A;
    LameEigenvalues out{};
    switch (family.tag) {
        case FamilyId::Tag::kdv_cnoidal: {
            // n = 3 Lame problem, potential 12 k^2 sn^2; h = (12 k^2 b^2 + lambda - c)/b^2.
            double b = 2.0 * K / L;
            double rad = std::sqrt(1.0 - k * k + 4.0 * std::pow(k, 4));
            out.h = {2.0 + 5.0 * k * k - 2.0 * rad, 4.0 + 4.0 * k * k,
                     2.0 + 5.0 * k * k + 2.0 * rad};
            for (int i = 0; i < 3; ++i)
                out.lambda[i] = b * b * out.h[i] + c - 12.0 * k * k * b * b;
            return out;
        }
        case FamilyId::Tag::mkdv_dnoidal: {
            // n = 2 Lame problem, potential 6 k^2 sn^2; h = (6 a^2 + lambda - c)/a^2.
            double a = 2.0 * K / L;
            double rad = std::sqrt(1.0 - k * k + std::pow(k, 4));
            out.h = {2.0 * (1.0 + k * k - rad), 4.0 + k * k, 2.0 * (1.0 + k * k + rad)};
            for (int i = 0; i < 3; ++i)
                out.lambda[i] = a * a * out.h[i] + c - 6.0 * a * a;
            return out;
        }
        case FamilyId::Tag::reg_schamel: {
            // n = 5 Lame problem, potential 30 k^2 sn^2. The 2K-periodic
            // eigenfunctions are dn*(span{1, sn^2, sn^4}) and sn*cn*dn*(span{1, sn^2}).
            double k2 = k * k;
            auto hc = cubic_roots(-(35.0 * k2 + 20.0),
                                  259.0 * k2 * k2 + 536.0 * k2 + 64.0,
                                  -(225.0 * k2 * k2 * k2 + 1860.0 * k2 * k2 +
                                    960.0 * k2));
            double S = std::sqrt(k2 * k2 - k2 + 1.0);
            std::array<double, 5> h5 = {hc[0], hc[1], hc[2],
                                        10.0 * (1.0 + k2) - 6.0 * S,
                                        10.0 * (1.0 + k2) + 6.0 * S};
            std::sort(h5.begin(), h5.end());
            double s = std::sqrt(k2 * k2 - k2 + 1.0);
            double mt = L * L - 64.0 * K * K * s;
            double w0 = (5.0 / 12.0) *
                        ((L * L - 64.0 * (2.0 * k2 - 1.0) * K * K) / mt - 1.0);
            double w2 = 80.0 * k2 * K * K / mt;
            double sc = c * std::pow(2.0 * K / L, 2);
            double shift = (c - 1.0) - 1.5 * (w0 + w2);
            for (int i = 0; i < 3; ++i) {
                out.h[i] = h5[i];
                out.lambda[i] = sc * h5[i] + shift;
            }
            return out;
        }
        default:
            throw std::invalid_argument(
                "lame_closed_form: supported for kdv_cnoidal, mkdv_dnoidal, reg_schamel");
    }
}

double floquet_theta(const WaveProfile& p, double rtol) {
    if (p.family.symbol().kind != SymbolSpec::Kind::neg_second_derivative)
        throw std::invalid_argument("floquet_theta: second-order dispersion only");
    const bool reg = p.family.regularized();
    const double c = p.c, A = p.A;
    double phi0 = p.samples[0];
    // Exact phi''(0) from the profile equation (phi'(0) = 0 at the crest).
    double ddphi0 = reg ? ((c - 1.0) * phi0 - p.family.f(phi0) + A) / c
                        : c * phi0 - p.family.f(phi0) + A;
    if (std::fabs(ddphi0) < 1e-14)
        throw std::runtime_error("floquet_theta: degenerate phase, phi''(0) ~ 0");

    auto V = [&](double x) {
        double fp = p.family.fprime(p.fourier_eval(x));
        return reg ? ((c - 1.0) - fp) / c : c - fp;
    };
    // y'' = V(x) y, integrated by adaptive Dormand-Prince 5(4).
    auto rhs = [&](double x, const std::array<double, 2>& y) {
        return std::array<double, 2>{y[1], V(x) * y[0]};
    };
    static const double a2[] = {0.2};
    static const double a3[] = {3.0 / 40, 9.0 / 40};
    static const double a4[] = {44.0 / 45, -56.0 / 15, 32.0 / 9};
    static const double a5[] = {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561,
                                -212.0 / 729};
    static const double a6[] = {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247,
                                49.0 / 176, -5103.0 / 18656};
    static const double b5[] = {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192,
                                -2187.0 / 6784, 11.0 / 84, 0.0};
    static const double b4[] = {5179.0 / 57600, 0.0, 7571.0 / 16695, 393.0 / 640,
                                -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};
    static const double cs[] = {0.0, 0.2, 0.3, 0.8, 8.0 / 9.0, 1.0, 1.0};

    std::array<double, 2> y = {-1.0 / ddphi0, 0.0};
    double x = 0.0;
    double h = p.L / 1024.0;
    const double atol = 1e-30;
    while (x < p.L) {
        if (x + h > p.L) h = p.L - x;
        std::array<std::array<double, 2>, 7> kk;
        kk[0] = rhs(x, y);
        auto stage = [&](int s, const double* a) {
            std::array<double, 2> ys = y;
            for (int j = 0; j < s - 1; ++j)
                for (int d = 0; d < 2; ++d) ys[d] += h * a[j] * kk[j][d];
            kk[s - 1] = rhs(x + cs[s - 1] * h, ys);
        };
        stage(2, a2);
        stage(3, a3);
        stage(4, a4);
        stage(5, a5);
        stage(6, a6);
        stage(7, b5); // FSAL stage at x + h
        std::array<double, 2> y5 = y, y4 = y;
        for (int j = 0; j < 7; ++j)
            for (int d = 0; d < 2; ++d) {
                y5[d] += h * b5[j] * kk[j][d];
                y4[d] += h * b4[j] * kk[j][d];
            }
        double err = 0.0;
        for (int d = 0; d < 2; ++d) {
            double sc = atol + rtol * std::max(std::fabs(y[d]), std::fabs(y5[d]));
            double e = (y5[d] - y4[d]) / sc;
            err += e * e;
        }
        err = std::sqrt(0.5 * err);
        if (err <= 1.0) {
            x += h;
            y = y5;
        }
        double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
        h *= std::clamp(fac, 0.2, 5.0);
        if (h < 1e-14 * p.L)
            throw std::runtime_error("floquet_theta: step size underflow");
    }
    return y[1] / ddphi0;
}

Pf2Result pf2_check(const std::vector<double>& alpha, int M) {
    if (static_cast<int>(alpha.size()) != 2 * M + 1)
        throw std::invalid_argument("pf2_check: sequence must cover modes -M..M");
    Pf2Result res;
    res.window = M;
    auto at = [&](int n) { return alpha[n + M]; };
    for (int n = -M; n <= M; ++n) {
        if (!(at(n) > 0.0)) {
            res.reason = "condition (i): alpha_" + std::to_string(n) + " <= 0";
            return res;
        }
    }
    for (int n1 = -M; n1 <= M; ++n1)
        for (int n2 = n1 + 1; n2 <= M; ++n2)
            for (int m1 = -M; m1 <= M; ++m1) {
                if (n1 - m1 < -M || n1 - m1 > M || n2 - m1 < -M || n2 - m1 > M)
                    continue;
                for (int m2 = m1 + 1; m2 <= M; ++m2) {
                    if (n1 - m2 < -M || n1 - m2 > M || n2 - m2 < -M || n2 - m2 > M)
                        continue;
                    double minor =
                        at(n1 - m1) * at(n2 - m2) - at(n1 - m2) * at(n2 - m1);
                    if (!(minor > 0.0)) {
                        res.reason = "condition (ii): nonpositive minor";
                        res.violation = {n1, n2, m1, m2};
                        return res;
                    }
                }
            }
    res.holds = true;
    return res;
}

} // namespace periwave
