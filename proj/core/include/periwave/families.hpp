#ifndef PERIWAVE_FAMILIES_HPP
#define PERIWAVE_FAMILIES_HPP

#include <complex>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "periwave/symbol.hpp"

namespace periwave {

// Thrown when (family, k, L) falls outside the admissible parameter set.
struct admissibility_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FamilyId {
    enum class Tag {
        kdv_cnoidal,
        mkdv_dnoidal,
        mkdv_dnsn,
        gardner_dn,
        gardner_dnsn,
        ilw,
        schamel,
        mbbm_dnsn,
        reg_schamel,
    };

    Tag tag = Tag::mkdv_dnoidal;
    double a = 1.0, b = 6.0; // Gardner coefficients (b > 0)
    double delta = 1.0;      // ILW depth

    bool regularized() const {
        return tag == Tag::mbbm_dnsn || tag == Tag::reg_schamel;
    }
    SymbolSpec symbol() const {
        return tag == Tag::ilw ? SymbolSpec::ilw_symbol(delta)
                               : SymbolSpec::second_derivative();
    }
    // Nonlinearity f, its derivative, and its antiderivative F (F(0) = 0).
    double f(double u) const;
    double fprime(double u) const;
    double F(double u) const;

    std::string name() const;
    static FamilyId parse(const std::string& name, double a = 1.0, double b = 6.0,
                          double delta = 1.0);
};

struct WaveProfile {
    FamilyId family;
    double k = 0.0, L = 0.0, c = 0.0, A = 0.0;
    int N = 0;
    std::vector<double> samples;
    std::vector<std::complex<double>> fourier; // f_hat(m) = (1/N) sum f_j e^{-2pi i j m / N}
    std::map<std::string, double> aux;

    double fourier_eval(double x) const;   // trigonometric interpolation
    double fourier_deriv(double x) const;  // d/dx of the interpolant
};

// (phi')^2 = G(phi) first integral for the quadrature oracle.
struct FirstIntegralSpec {
    std::function<double(double)> G;
    std::function<double(double)> Gprime;
};

std::pair<double, double> wave_constants(const FamilyId& family, double k, double L);
WaveProfile construct(const FamilyId& family, double k, double L, int N);
double residual(const WaveProfile& profile, const SymbolSpec& symbol);
double residual(const WaveProfile& profile);

// Period of the orbit of (phi')^2 = G(phi) between two simple roots.
double quadrature_period(const FirstIntegralSpec& spec, double root_lo, double root_hi);
// Profile by integrating phi'' = G'(phi)/2 from the maximum root, sampled on
// the uniform N-grid of one period.
std::vector<double> quadrature_profile(const FirstIntegralSpec& spec, double root_lo,
                                       double root_hi, int N);
// First-integral data for a constructed profile (B recovered at x = 0).
FirstIntegralSpec first_integral(const WaveProfile& profile);

std::vector<double> gardner_forward(const std::vector<double>& v, double a, double b);
std::vector<double> gardner_inverse(const std::vector<double>& u, double a, double b);

// Root of the period constraint for the regularized families.
double find_kL(const FamilyId& family, double L);

} // namespace periwave

#endif
