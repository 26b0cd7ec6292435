#include "periwave/families.hpp"

#include <algorithm>
#include <cmath>

#include "fft_util.hpp"
#include "periwave/elliptic.hpp"

namespace periwave {

namespace {
constexpr double pi = 3.14159265358979323846;

using ell::complete_K;
using ell::jacobi;
using ell::jacobi_zeta;

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

std::vector<double> grid(double L, int N) {
    std::vector<double> x(N);
    for (int i = 0; i < N; ++i) x[i] = i * L / N;
    return x;
}

void check_k_open(double k) {
    if (!(k > 0.0) || !(k < 1.0))
        throw admissibility_error("modulus k must lie in (0,1)");
}

double sqrt_s(double k) { return std::sqrt(k * k * k * k - k * k + 1.0); }

} // namespace

double FamilyId::f(double u) const {
    switch (tag) {
        case Tag::kdv_cnoidal: return 0.5 * u * u;
        case Tag::mkdv_dnoidal:
        case Tag::mkdv_dnsn: return 2.0 * u * u * u;
        case Tag::gardner_dn:
        case Tag::gardner_dnsn: return 0.5 * a * u * u + (b / 3.0) * u * u * u;
        case Tag::ilw: return u * u;
        case Tag::schamel:
        case Tag::reg_schamel: return std::pow(std::fabs(u), 1.5);
        case Tag::mbbm_dnsn: return u * u * u;
    }
    return 0.0;
}

double FamilyId::fprime(double u) const {
    switch (tag) {
        case Tag::kdv_cnoidal: return u;
        case Tag::mkdv_dnoidal:
        case Tag::mkdv_dnsn: return 6.0 * u * u;
        case Tag::gardner_dn:
        case Tag::gardner_dnsn: return a * u + b * u * u;
        case Tag::ilw: return 2.0 * u;
        case Tag::schamel:
        case Tag::reg_schamel:
            return 1.5 * (u < 0 ? -1.0 : 1.0) * std::sqrt(std::fabs(u));
        case Tag::mbbm_dnsn: return 3.0 * u * u;
    }
    return 0.0;
}

double FamilyId::F(double u) const {
    switch (tag) {
        case Tag::kdv_cnoidal: return u * u * u / 6.0;
        case Tag::mkdv_dnoidal:
        case Tag::mkdv_dnsn: return 0.5 * u * u * u * u;
        case Tag::gardner_dn:
        case Tag::gardner_dnsn:
            return a * u * u * u / 6.0 + b * u * u * u * u / 12.0;
        case Tag::ilw: return u * u * u / 3.0;
        case Tag::schamel:
        case Tag::reg_schamel:
            return 0.4 * (u < 0 ? -1.0 : 1.0) * std::pow(std::fabs(u), 2.5);
        case Tag::mbbm_dnsn: return 0.25 * u * u * u * u;
    }
    return 0.0;
}

std::string FamilyId::name() const {
    switch (tag) {
        case Tag::kdv_cnoidal: return "kdv_cnoidal";
        case Tag::mkdv_dnoidal: return "mkdv_dnoidal";
        case Tag::mkdv_dnsn: return "mkdv_dnsn";
        case Tag::gardner_dn: return "gardner_dn";
        case Tag::gardner_dnsn: return "gardner_dnsn";
        case Tag::ilw: return "ilw";
        case Tag::schamel: return "schamel";
        case Tag::mbbm_dnsn: return "mbbm_dnsn";
        case Tag::reg_schamel: return "reg_schamel";
    }
    return "?";
}

FamilyId FamilyId::parse(const std::string& name, double a, double b, double delta) {
    FamilyId id;
    id.a = a;
    id.b = b;
    id.delta = delta;
    if (name == "kdv_cnoidal") id.tag = Tag::kdv_cnoidal;
    else if (name == "mkdv_dnoidal") id.tag = Tag::mkdv_dnoidal;
    else if (name == "mkdv_dnsn") id.tag = Tag::mkdv_dnsn;
    else if (name == "gardner_dn") id.tag = Tag::gardner_dn;
    else if (name == "gardner_dnsn") id.tag = Tag::gardner_dnsn;
    else if (name == "ilw") id.tag = Tag::ilw;
    else if (name == "schamel") id.tag = Tag::schamel;
    else if (name == "mbbm_dnsn") id.tag = Tag::mbbm_dnsn;
    else if (name == "reg_schamel") id.tag = Tag::reg_schamel;
    else throw std::invalid_argument("unknown family: " + name);
    return id;
}

double WaveProfile::fourier_eval(double x) const {
    double acc = 0.0;
    for (int i = 0; i < N; ++i) {
        long m = detail::mode_of(i, N);
        double ph = 2.0 * pi * m * x / L;
        acc += fourier[i].real() * std::cos(ph) - fourier[i].imag() * std::sin(ph);
    }
    return acc;
}

double WaveProfile::fourier_deriv(double x) const {
    double acc = 0.0;
    for (int i = 0; i < N; ++i) {
        long m = detail::mode_of(i, N);
        double xi = 2.0 * pi * m / L;
        double ph = xi * x;
        // Re(i xi (re + i im) e^{i ph}) = -xi (im cos + re sin)
        acc -= xi * (fourier[i].imag() * std::cos(ph) + fourier[i].real() * std::sin(ph));
    }
    return acc;
}

std::pair<double, double> wave_constants(const FamilyId& family, double k, double L) {
    check_k_open(k);
    if (!(L > 0.0)) throw admissibility_error("period L must be positive");
    const double K = complete_K(k);
    const double s = sqrt_s(k);
    switch (family.tag) {
        case FamilyId::Tag::kdv_cnoidal: {
            if (k * k <= 0.5)
                throw admissibility_error(
                    "kdv_cnoidal requires k > k* = sqrt(2)/2 = 0.70710678 (else c <= 0)");
            double b = 2.0 * K / L;
            return {4.0 * b * b * (2.0 * k * k - 1.0),
                    24.0 * std::pow(b, 4) * k * k * (1.0 - k * k)};
        }
        case FamilyId::Tag::mkdv_dnoidal: {
            double a = 2.0 * K / L;
            return {a * a * (2.0 - k * k), 0.0};
        }
        case FamilyId::Tag::mkdv_dnsn: {
            double c = 16.0 * K * K * s / (L * L);
            double A = -32.0 * std::pow(K, 3) / (3.0 * std::sqrt(3.0) * std::pow(L, 3)) *
                       (s - 2.0 * k * k + 1.0) * std::sqrt(2.0 * s + 2.0 * k * k - 1.0);
            return {c, A};
        }
        case FamilyId::Tag::gardner_dn:
        case FamilyId::Tag::gardner_dnsn: {
            if (!(family.b > 0.0))
                throw admissibility_error("gardner requires b > 0");
            FamilyId base;
            base.tag = family.tag == FamilyId::Tag::gardner_dn
                           ? FamilyId::Tag::mkdv_dnoidal
                           : FamilyId::Tag::mkdv_dnsn;
            auto [cm, Am] = wave_constants(base, k, L);
            double ct = cm - family.a * family.a / (4.0 * family.b);
            if (!(ct > 0.0))
                throw admissibility_error(
                    "gardner speed c = c_mkdv - a^2/4b must be positive");
            double At = std::sqrt(6.0 / family.b) * Am +
                        cm * family.a / (2.0 * family.b) -
                        std::pow(family.a, 3) / (24.0 * family.b * family.b);
            return {ct, At};
        }
        case FamilyId::Tag::ilw: {
            // A = (1/L) int phi^2 has no elementary closed form; construct()
            // fills it from the sampled profile. Here only the speed.
            double kp = std::sqrt(1.0 - k * k);
            double Kp = complete_K(kp);
            double v = 2.0 * family.delta * K / L;
            if (!(v < Kp))
                throw admissibility_error(
                    "ilw requires 2*delta*K(k)/L < K'(k) (profile pole otherwise)");
            auto j2 = jacobi(2.0 * v, kp);
            double c = 1.0 / family.delta -
                       8.0 * pi * family.delta * K / (L * L * Kp) -
                       (4.0 * K / L) * (jacobi_zeta(2.0 * v, kp) + j2.cn * j2.dn / j2.sn);
            if (!(c > 0.0))
                throw admissibility_error("ilw speed c(k) <= 0: k outside admissible range");
            return {c, 0.0};
        }
        case FamilyId::Tag::schamel: {
            double c = 64.0 * K * K * s / (L * L);
            double A = 204800.0 * std::pow(K, 6) / (27.0 * std::pow(L, 6)) *
                       (-2.0 * std::pow(k, 6) + 3.0 * std::pow(k, 4) + 3.0 * k * k -
                        2.0 - 2.0 * s * s * s);
            return {c, A};
        }
        case FamilyId::Tag::mbbm_dnsn: {
            if (!(L > 2.0 * pi))
                throw admissibility_error("mbbm_dnsn requires L > 2*pi");
            double kL = find_kL(family, L);
            if (!(k < kL))
                throw admissibility_error("mbbm_dnsn requires k < k_L(L) (else c <= 1)");
            double c = L * L / (L * L - 16.0 * K * K * s);
            double r = std::sqrt(2.0 * s + 2.0 * k * k - 1.0);
            double A = 16.0 * c * std::sqrt(c) * std::pow(K, 3) *
                       (std::pow(r, 4) - 9.0) /
                       (3.0 * std::sqrt(6.0) * std::pow(L, 3) * r);
            return {c, A};
        }
        case FamilyId::Tag::reg_schamel: {
            if (!(L > 4.0 * pi))
                throw admissibility_error("reg_schamel requires L > 4*pi");
            double kL = find_kL(family, L);
            if (!(k < kL))
                throw admissibility_error("reg_schamel requires k < k_L(L) (else c <= 1)");
            double mt = L * L - 64.0 * K * K * s;
            double c = L * L / mt;
            double t = 2.0 * k * k - 1.0;
            double A = -204800.0 * std::pow(K, 6) / (27.0 * std::pow(mt, 3)) *
                       ((s - t) * (s - t) * (2.0 * s + t));
            return {c, A};
        }
    }
    throw std::logic_error("unreachable");
}

WaveProfile construct(const FamilyId& family, double k, double L, int N) {
    if (N < 64 || !is_pow2(N))
        throw std::invalid_argument("grid size N must be a power of two >= 64");
    auto [c, A] = wave_constants(family, k, L);

    WaveProfile p;
    p.family = family;
    p.k = k;
    p.L = L;
    p.c = c;
    p.A = A;
    p.N = N;
    p.samples.resize(N);

    const double K = complete_K(k);
    const double s = sqrt_s(k);
    const auto x = grid(L, N);

    switch (family.tag) {
        case FamilyId::Tag::kdv_cnoidal: {
            double b = 2.0 * K / L;
            for (int i = 0; i < N; ++i) {
                double cn = jacobi(b * x[i], k).cn;
                p.samples[i] = 12.0 * k * k * b * b * cn * cn;
            }
            break;
        }
        case FamilyId::Tag::mkdv_dnoidal: {
            double a = 2.0 * K / L;
            for (int i = 0; i < N; ++i) p.samples[i] = a * jacobi(a * x[i], k).dn;
            break;
        }
        case FamilyId::Tag::mkdv_dnsn:
        case FamilyId::Tag::mbbm_dnsn: {
            double beta2 = s + k * k - 1.0;
            double g = std::sqrt(s - k * k + 0.5);
            double amp = family.tag == FamilyId::Tag::mkdv_dnsn
                             ? 4.0 * K / (std::sqrt(2.0) * g * L)
                             : 4.0 * std::sqrt(c) * K / (g * L);
            for (int i = 0; i < N; ++i) {
                auto j = jacobi(2.0 * K * x[i] / L, k);
                p.samples[i] =
                    amp * j.dn * j.dn / (1.0 + beta2 * j.sn * j.sn);
            }
            p.aux["beta2"] = beta2;
            p.aux["g"] = g;
            if (family.tag == FamilyId::Tag::mbbm_dnsn)
                p.aux["r"] = std::sqrt(2.0 * s + 2.0 * k * k - 1.0);
            break;
        }
        case FamilyId::Tag::gardner_dn:
        case FamilyId::Tag::gardner_dnsn: {
            FamilyId base;
            base.tag = family.tag == FamilyId::Tag::gardner_dn
                           ? FamilyId::Tag::mkdv_dnoidal
                           : FamilyId::Tag::mkdv_dnsn;
            WaveProfile mk = construct(base, k, L, N);
            p.samples = gardner_inverse(mk.samples, family.a, family.b);
            break;
        }
        case FamilyId::Tag::ilw: {
            double kp = std::sqrt(1.0 - k * k);
            double Kp = complete_K(kp);
            double v = 2.0 * family.delta * K / L;
            auto j1 = jacobi(v, kp);
            double zv = jacobi_zeta(v, kp);
            double off = 4.0 * family.delta * pi * K / (L * L * Kp);
            for (int i = 0; i < N; ++i) {
                double dy = jacobi(2.0 * K * x[i] / L, k).dn;
                p.samples[i] = (4.0 * K / L) *
                                   (j1.sn * j1.cn * j1.dn * dy * dy /
                                        (1.0 - j1.sn * j1.sn * dy * dy) -
                                    zv) -
                               off;
            }
            double mean2 = 0.0;
            for (double u : p.samples) mean2 += u * u;
            p.A = mean2 / N;
            break;
        }
        case FamilyId::Tag::schamel: {
            double base = 1.0 - 2.0 * k * k + s;
            double amp = 6400.0 * std::pow(K, 4) / (9.0 * std::pow(L, 4));
            for (int i = 0; i < N; ++i) {
                double cn = jacobi(2.0 * K * x[i] / L, k).cn;
                double w = base + 3.0 * k * k * cn * cn;
                p.samples[i] = amp * w * w;
            }
            break;
        }
        case FamilyId::Tag::reg_schamel: {
            double mt = L * L - 64.0 * K * K * s;
            double w0 = (5.0 / 12.0) *
                        ((L * L - 64.0 * (2.0 * k * k - 1.0) * K * K) / mt - 1.0);
            double w2 = 80.0 * k * k * K * K / mt;
            for (int i = 0; i < N; ++i) {
                double cn = jacobi(2.0 * K * x[i] / L, k).cn;
                double w = w0 + w2 * cn * cn;
                p.samples[i] = w * w;
            }
            p.aux["w0"] = w0;
            p.aux["w2"] = w2;
            break;
        }
    }
    if (family.tag == FamilyId::Tag::schamel ||
        family.tag == FamilyId::Tag::reg_schamel) {
        for (double u : p.samples)
            if (u < 0.0)
                throw std::logic_error("schamel-type profile has a negative sample");
    }
    if (family.tag == FamilyId::Tag::mkdv_dnsn) {
        // Roots of the quartic first integral P(phi) = -phi^4 + c phi^2 + 2A phi + B.
        double a4 = *std::max_element(p.samples.begin(), p.samples.end());
        double a3 = *std::min_element(p.samples.begin(), p.samples.end());
        double B = std::pow(a4, 4) - c * a4 * a4 - 2.0 * A * a4;
        auto P = [&](double u) { return -std::pow(u, 4) + c * u * u + 2.0 * A * u + B; };
        auto Pp = [&](double u) { return -4.0 * u * u * u + 2.0 * c * u + 2.0 * A; };
        auto polish = [&](double u) {
            for (int it = 0; it < 50; ++it) {
                double d = P(u) / Pp(u);
                u -= d;
                if (std::fabs(d) < 1e-15 * std::max(1.0, std::fabs(u))) break;
            }
            return u;
        };
        a4 = polish(a4);
        a3 = polish(a3);
        // Remaining quadratic factor: roots sum to -(a3+a4), product -B/(a3*a4).
        double ps = a3 + a4, q = -B / (a3 * a4);
        double disc = std::sqrt(std::max(0.0, ps * ps - 4.0 * q));
        double a1 = polish(0.5 * (-ps - disc));
        double a2 = polish(0.5 * (-ps + disc));
        p.aux["alpha1"] = a1;
        p.aux["alpha2"] = a2;
        p.aux["alpha3"] = a3;
        p.aux["alpha4"] = a4;
        p.aux["B"] = B;
    }
    p.fourier = detail::fft_coeffs(p.samples);
    return p;
}

double residual(const WaveProfile& p, const SymbolSpec& symbol) {
    auto uh = p.fourier;
    for (int i = 0; i < p.N; ++i)
        uh[i] *= symbol.multiplier(detail::mode_of(i, p.N), p.L);
    auto Mu = detail::ifft_real(uh);
    double worst = 0.0;
    const bool reg = p.family.regularized();
    for (int i = 0; i < p.N; ++i) {
        double u = p.samples[i];
        double r = reg ? p.c * Mu[i] + (p.c - 1.0) * u - p.family.f(u) + p.A
                       : Mu[i] + p.c * u - p.family.f(u) + p.A;
        worst = std::max(worst, std::fabs(r));
    }
    double scale = 0.0;
    for (double u : p.samples) scale = std::max(scale, std::fabs(u));
    return worst / std::max(1.0, scale);
}

double residual(const WaveProfile& p) { return residual(p, p.family.symbol()); }

namespace {

// 16-point Gauss-Legendre nodes/weights on (-1,1).
const double gl_x[8] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                        0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                        0.9445750230732326, 0.9894009349916499};
const double gl_w[8] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                        0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                        0.0622535239386479, 0.0271524594117541};

template <class F>
double gauss16(F&& f, double a, double b) {
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < 8; ++i) {
        acc += gl_w[i] * (f(mid + half * gl_x[i]) + f(mid - half * gl_x[i]));
    }
    return acc * half;
}

} // namespace

double quadrature_period(const FirstIntegralSpec& spec, double root_lo, double root_hi) {
    if (!(root_hi > root_lo))
        throw std::invalid_argument("quadrature_period: need root_lo < root_hi");
    double Glo = spec.Gprime(root_lo), Ghi = spec.Gprime(root_hi);
    if (std::fabs(Glo) < 1e-10 || std::fabs(Ghi) < 1e-10)
        throw std::runtime_error(
            "quadrature_period: double root detected (homoclinic/solitary limit)");
    double mid = 0.5 * (root_lo + root_hi), half = 0.5 * (root_hi - root_lo);
    // phi = mid + half sin t removes the sqrt endpoint singularities.
    auto integrand = [&](double t) {
        double phi = mid + half * std::sin(t);
        double G = spec.G(phi);
        if (G <= 0.0) return 0.0; // roundoff at the endpoints only
        return half * std::cos(t) / std::sqrt(G);
    };
    const int panels = 64;
    double acc = 0.0;
    for (int p = 0; p < panels; ++p) {
        double a = -pi / 2 + pi * p / panels;
        double b = -pi / 2 + pi * (p + 1) / panels;
        acc += gauss16(integrand, a, b);
    }
    return 2.0 * acc;
}

std::vector<double> quadrature_profile(const FirstIntegralSpec& spec, double root_lo,
                                       double root_hi, int N) {
    double L = quadrature_period(spec, root_lo, root_hi);
    std::vector<double> out(N);
    // phi'' = G'(phi)/2, starting at the maximum root (phi' = 0), RK4.
    const int sub = 64;
    double h = L / (static_cast<double>(N) * sub);
    double y = root_hi, v = 0.0;
    auto acc = [&](double phi) { return 0.5 * spec.Gprime(phi); };
    out[0] = y;
    for (int i = 1; i < N; ++i) {
        for (int s = 0; s < sub; ++s) {
            double k1y = v, k1v = acc(y);
            double k2y = v + 0.5 * h * k1v, k2v = acc(y + 0.5 * h * k1y);
            double k3y = v + 0.5 * h * k2v, k3v = acc(y + 0.5 * h * k2y);
            double k4y = v + h * k3v, k4v = acc(y + h * k3y);
            y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
            v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        }
        out[i] = y;
    }
    return out;
}

FirstIntegralSpec first_integral(const WaveProfile& p) {
    if (p.family.symbol().kind != SymbolSpec::Kind::neg_second_derivative)
        throw std::invalid_argument("first_integral: second-order dispersion only");
    const FamilyId fam = p.family;
    const double c = p.c, A = p.A;
    const bool reg = fam.regularized();
    auto F = [fam](double u) { return fam.F(u); };
    double phi0 = *std::max_element(p.samples.begin(), p.samples.end());
    double clin = reg ? c - 1.0 : c;
    double B = -(clin * phi0 * phi0 + 2.0 * A * phi0 - 2.0 * F(phi0));
    double denom = reg ? c : 1.0;
    FirstIntegralSpec spec;
    spec.G = [=](double u) {
        return (clin * u * u + 2.0 * A * u - 2.0 * F(u) + B) / denom;
    };
    spec.Gprime = [=, f = fam](double u) {
        return (2.0 * clin * u + 2.0 * A - 2.0 * f.f(u)) / denom;
    };
    return spec;
}

std::vector<double> gardner_forward(const std::vector<double>& v, double a, double b) {
    if (!(b > 0.0)) throw std::invalid_argument("gardner transform requires b > 0");
    double s = std::sqrt(b / 6.0);
    std::vector<double> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = s * (v[i] + a / (2.0 * b));
    return out;
}

std::vector<double> gardner_inverse(const std::vector<double>& u, double a, double b) {
    if (!(b > 0.0)) throw std::invalid_argument("gardner transform requires b > 0");
    double s = std::sqrt(6.0 / b);
    std::vector<double> out(u.size());
    for (size_t i = 0; i < u.size(); ++i) out[i] = s * u[i] - a / (2.0 * b);
    return out;
}

double find_kL(const FamilyId& family, double L) {
    double coef;
    if (family.tag == FamilyId::Tag::mbbm_dnsn) {
        if (!(L > 2.0 * pi)) throw admissibility_error("mbbm_dnsn requires L > 2*pi");
        coef = 16.0;
    } else if (family.tag == FamilyId::Tag::reg_schamel) {
        if (!(L > 4.0 * pi)) throw admissibility_error("reg_schamel requires L > 4*pi");
        coef = 64.0;
    } else {
        throw std::invalid_argument("find_kL: regularized families only");
    }
    auto D = [&](double k) {
        double K = complete_K(k);
        return L * L - coef * K * K * sqrt_s(k);
    };
    double lo = 1e-12, hi = 1.0 - 1e-14;
    // For large L the root sits closer to 1 than double spacing (K grows only
    // logarithmically in 1-k); the bound then never binds for representable k.
    if (D(hi) >= 0.0) return 1.0;
    while (hi - lo > 1e-12) {
        double mid = 0.5 * (lo + hi);
        (D(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace periwave
