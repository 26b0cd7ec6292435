#ifndef PERIWAVE_ELLIPTIC_HPP
#define PERIWAVE_ELLIPTIC_HPP

// Elliptic integrals and Jacobi elliptic functions.
//
// Complete integrals use the arithmetic-geometric mean; incomplete
// integrals and the complete third-kind integral go through the Carlson
// symmetric forms RF/RD/RJ, which are numerically stable for all the
// parameter ranges needed here (including negative characteristic).
// Modulus convention: k is the modulus itself, not the parameter m = k^2.

namespace periwave::ell {

// Complete elliptic integrals of the first and second kind.
// Domain: 0 <= k < 1; throws std::domain_error otherwise.
double complete_K(double k);
double complete_E(double k);

// Carlson symmetric forms (exposed for tests).
double carlson_rf(double x, double y, double z);
double carlson_rd(double x, double y, double z);
double carlson_rc(double x, double y);
double carlson_rj(double x, double y, double z, double p);

// Incomplete integrals of the first/second kind, amplitude w (radians).
// Valid for any real w via the quasi-periodicity
// F(w + n*pi, k) = F(w, k) + 2n K(k), same pattern for E.
double incomplete_F(double w, double k);
double incomplete_E_inc(double w, double k);

struct SnCnDn {
    double sn, cn, dn;
};

// Jacobi elliptic functions by descending Landen / AGM recursion.
SnCnDn jacobi(double x, double k);

// Jacobi amplitude am(x,k) with winding (continuous, not reduced mod pi).
double jacobi_am(double x, double k);

// Jacobi Zeta, Z(x,k) = E(am(x,k),k) - x E(k)/K(k); 2K-periodic, zero mean.
double jacobi_zeta(double x, double k);

// Heuman's Lambda_0(w,k) = (2/pi)[K E(w,k') - K F(w,k') + E F(w,k')].
double heuman_lambda(double w, double k);

// Complete integral of the third kind, characteristic alpha2:
//   Pi(alpha2, k) = int_0^K ds / (1 - alpha2 sn^2(s,k)).
// Requires alpha2 < k^2 (circular case; alpha2 < 0 allowed).
double complete_Pi(double alpha2, double k);

} // namespace periwave::ell

#endif
