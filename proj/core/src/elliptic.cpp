#include "periwave/elliptic.hpp"

#include <cmath>
#include <stdexcept>

namespace periwave::ell {

namespace {

void check_modulus(double k) {
    if (!(k >= 0.0) || k >= 1.0)
        throw std::domain_error("elliptic: modulus k must lie in [0,1)");
}

constexpr double pi = 3.14159265358979323846;

// 1 - k^2 with a single rounding; the naive expression cancels badly near k=1.
double kprime2(double k) { return std::fma(-k, k, 1.0); }

} // namespace

double complete_K(double k) {
    check_modulus(k);
    double a = 1.0, b = std::sqrt(kprime2(k));
    // AGM converges quadratically; the gap can stall a few ulps above zero,
    // so cap the iteration count rather than demanding exact agreement.
    for (int i = 0; i < 40 && std::fabs(a - b) > 1e-17 * a; ++i) {
        double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return pi / (2.0 * a);
}

double complete_E(double k) {
    check_modulus(k);
    double a = 1.0, b = std::sqrt(kprime2(k)), c = k;
    double sum = 0.5 * c * c;
    double pow2 = 1.0;
    for (int i = 0; i < 40 && std::fabs(c) > 1e-17 * a; ++i) {
        c = 0.5 * (a - b);
        double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
        pow2 *= 2.0;
        sum += 0.5 * pow2 * c * c;
    }
    return pi / (2.0 * a) * (1.0 - sum);
}

double carlson_rf(double x, double y, double z) {
    const double errtol = 1e-10;
    double xt = x, yt = y, zt = z;
    double mu, dx, dy, dz;
    do {
        double sx = std::sqrt(xt), sy = std::sqrt(yt), sz = std::sqrt(zt);
        double lam = sx * (sy + sz) + sy * sz;
        xt = 0.25 * (xt + lam);
        yt = 0.25 * (yt + lam);
        zt = 0.25 * (zt + lam);
        mu = (xt + yt + zt) / 3.0;
        dx = (mu - xt) / mu;
        dy = (mu - yt) / mu;
        dz = (mu - zt) / mu;
    } while (std::max({std::fabs(dx), std::fabs(dy), std::fabs(dz)}) > errtol);
    double e2 = dx * dy - dz * dz;
    double e3 = dx * dy * dz;
    return (1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0) / std::sqrt(mu);
}

double carlson_rd(double x, double y, double z) {
    const double errtol = 1e-10;
    double xt = x, yt = y, zt = z;
    double sum = 0.0, fac = 1.0;
    double mu, dx, dy, dz;
    do {
        double sx = std::sqrt(xt), sy = std::sqrt(yt), sz = std::sqrt(zt);
        double lam = sx * (sy + sz) + sy * sz;
        sum += fac / (sz * (zt + lam));
        fac *= 0.25;
        xt = 0.25 * (xt + lam);
        yt = 0.25 * (yt + lam);
        zt = 0.25 * (zt + lam);
        mu = 0.2 * (xt + yt + 3.0 * zt);
        dx = (mu - xt) / mu;
        dy = (mu - yt) / mu;
        dz = (mu - zt) / mu;
    } while (std::max({std::fabs(dx), std::fabs(dy), std::fabs(dz)}) > errtol);
    double ea = dx * dy;
    double eb = dz * dz;
    double ec = ea - eb;
    double ed = ea - 6.0 * eb;
    double ee = ed + ec + ec;
    return 3.0 * sum +
           fac * (1.0 + ed * (-3.0 / 14.0 + 9.0 / 88.0 * ed - 4.5 / 26.0 * dz * ee) +
                  dz * (ee / 6.0 + dz * (-9.0 / 22.0 * ec + 3.0 / 26.0 * dz * ea))) /
               (mu * std::sqrt(mu));
}

double carlson_rc(double x, double y) {
    const double errtol = 1e-10;
    double xt = x, yt = y;
    double mu, s;
    do {
        double lam = 2.0 * std::sqrt(xt) * std::sqrt(yt) + yt;
        xt = 0.25 * (xt + lam);
        yt = 0.25 * (yt + lam);
        mu = (xt + 2.0 * yt) / 3.0;
        s = (yt - mu) / mu;
    } while (std::fabs(s) > errtol);
    return (1.0 + s * s * (0.3 + s * (1.0 / 7.0 + s * (0.375 + s * 9.0 / 22.0)))) /
           std::sqrt(mu);
}

double carlson_rj(double x, double y, double z, double p) {
    const double errtol = 1e-10;
    double xt = x, yt = y, zt = z, pt = p;
    double sum = 0.0, fac = 1.0;
    double mu, dx, dy, dz, dp;
    do {
        double sx = std::sqrt(xt), sy = std::sqrt(yt), sz = std::sqrt(zt);
        double lam = sx * (sy + sz) + sy * sz;
        double alpha = pt * (sx + sy + sz) + sx * sy * sz;
        alpha *= alpha;
        double beta = pt * (pt + lam) * (pt + lam);
        sum += fac * carlson_rc(alpha, beta);
        fac *= 0.25;
        xt = 0.25 * (xt + lam);
        yt = 0.25 * (yt + lam);
        zt = 0.25 * (zt + lam);
        pt = 0.25 * (pt + lam);
        mu = 0.2 * (xt + yt + zt + 2.0 * pt);
        dx = (mu - xt) / mu;
        dy = (mu - yt) / mu;
        dz = (mu - zt) / mu;
        dp = (mu - pt) / mu;
    } while (std::max({std::fabs(dx), std::fabs(dy), std::fabs(dz), std::fabs(dp)}) >
             errtol);
    double ea = dx * (dy + dz) + dy * dz;
    double eb = dx * dy * dz;
    double ec = dp * dp;
    double ed = ea - 3.0 * ec;
    double ee = eb + 2.0 * dp * (ea - ec);
    return 3.0 * sum +
           fac * (1.0 + ed * (-3.0 / 14.0 + 9.0 / 88.0 * ed - 4.5 / 26.0 * ee) +
                  eb * (1.0 / 6.0 + dp * (-3.0 / 11.0 + dp * 3.0 / 26.0)) +
                  dp * ea * (1.0 / 3.0 - dp * 3.0 / 22.0) - dp * ec / 3.0) /
               (mu * std::sqrt(mu));
}

namespace {

// F and E on the principal range |w| <= pi/2, via Carlson forms.
double F_principal(double w, double k) {
    double s = std::sin(w), c = std::cos(w);
    if (s == 0.0) return 0.0;
    double q = 1.0 - k * k * s * s;
    return s * carlson_rf(c * c, q, 1.0);
}

double E_principal(double w, double k) {
    double s = std::sin(w), c = std::cos(w);
    if (s == 0.0) return 0.0;
    double q = 1.0 - k * k * s * s;
    return s * carlson_rf(c * c, q, 1.0) -
           (k * k / 3.0) * s * s * s * carlson_rd(c * c, q, 1.0);
}

} // namespace

double incomplete_F(double w, double k) {
    check_modulus(k);
    double n = std::round(w / pi);
    double wr = w - n * pi;
    double base = (n == 0.0) ? 0.0 : 2.0 * n * complete_K(k);
    return base + F_principal(wr, k);
}

double incomplete_E_inc(double w, double k) {
    check_modulus(k);
    double n = std::round(w / pi);
    double wr = w - n * pi;
    double base = (n == 0.0) ? 0.0 : 2.0 * n * complete_E(k);
    return base + E_principal(wr, k);
}

SnCnDn jacobi(double x, double k) {
    check_modulus(k);
    if (k == 0.0) return {std::sin(x), std::cos(x), 1.0};
    if (k < 1e-10) {
        // A&S 16.13 small-modulus asymptotics; AGM step count degenerates here.
        double s = std::sin(x), c = std::cos(x), m = k * k;
        return {s - 0.25 * m * (x - s * c) * c, c + 0.25 * m * (x - s * c) * s,
                1.0 - 0.5 * m * s * s};
    }
    // Descending AGM ladder (A&S 16.4).
    constexpr int max_iter = 32;
    double a[max_iter], c[max_iter];
    a[0] = 1.0;
    c[0] = k;
    double b = std::sqrt(kprime2(k));
    int n = 0;
    while (n + 1 < max_iter) {
        ++n;
        a[n] = 0.5 * (a[n - 1] + b);
        c[n] = 0.5 * (a[n - 1] - b);
        b = std::sqrt(a[n - 1] * b);
        if (std::fabs(c[n]) <= 1e-16 * a[n]) break;
    }
    double phi = std::ldexp(a[n] * x, n);
    for (int i = n; i >= 1; --i)
        phi = 0.5 * (phi + std::asin(std::clamp(c[i] / a[i] * std::sin(phi),
                                                -1.0, 1.0)));
    double sn = std::sin(phi), cn = std::cos(phi);
    // dn via the defining identity; the cos-ratio recovery of A&S 16.4 is
    // ill-conditioned at the quarter periods where cn vanishes.
    double dn = std::sqrt(1.0 - k * k * sn * sn);
    return {sn, cn, dn};
}

double jacobi_am(double x, double k) {
    check_modulus(k);
    double twoK = 2.0 * complete_K(k);
    double n = std::floor(x / twoK);
    double xr = x - n * twoK;
    SnCnDn j = jacobi(xr, k);
    double phi = std::atan2(j.sn, j.cn); // in [0, pi] for xr in [0, 2K]
    return phi + n * pi;
}

double jacobi_zeta(double x, double k) {
    check_modulus(k);
    double K = complete_K(k), E = complete_E(k);
    return incomplete_E_inc(jacobi_am(x, k), k) - x * E / K;
}

double heuman_lambda(double w, double k) {
    check_modulus(k);
    if (w < 0.0 || w > pi / 2.0 + 1e-12)
        throw std::domain_error("heuman_lambda: amplitude w must lie in [0, pi/2]");
    double kp = std::sqrt(kprime2(k));
    double K = complete_K(k), E = complete_E(k);
    double Fw = incomplete_F(w, kp), Ew = incomplete_E_inc(w, kp);
    return (2.0 / pi) * (K * Ew - K * Fw + E * Fw);
}

double complete_Pi(double alpha2, double k) {
    check_modulus(k);
    if (alpha2 >= k * k || alpha2 == 1.0)
        throw std::domain_error(
            "complete_Pi: characteristic must satisfy alpha2 < k^2 (circular case)");
    double kp2 = kprime2(k);
    double rf = carlson_rf(0.0, kp2, 1.0);
    if (alpha2 == 0.0) return rf;
    return rf + (alpha2 / 3.0) * carlson_rj(0.0, kp2, 1.0, 1.0 - alpha2);
}

} // namespace periwave::ell
