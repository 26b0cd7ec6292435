#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>

#include "periwave/elliptic.hpp"

// Reference values computed with an independent arbitrary-precision
// implementation (40 decimal digits), rounded to double.

using namespace periwave::ell;

namespace {
constexpr double pi = 3.14159265358979323846;

double rel(double got, double want) {
    return std::fabs(got - want) / std::fabs(want);
}
} // namespace

TEST_CASE("complete integrals match reference values") {
    CHECK(rel(complete_K(0.5), 1.685750354812596) < 1e-14);
    CHECK(rel(complete_E(0.5), 1.4674622093394272) < 1e-14);
    // near-degenerate modulus: probes the 1 - k^2 cancellation guard
    CHECK(rel(complete_K(0.999999), 7.947479773547967) < 1e-13);
    CHECK(rel(complete_E(0.999999), 1.0000074474777244) < 1e-13);
    CHECK(rel(complete_K(0.0), pi / 2.0) < 1e-15);
}

TEST_CASE("incomplete integrals match reference values") {
    CHECK(rel(incomplete_F(0.7, 0.8), 0.73805852075077706) < 1e-13);
    CHECK(rel(incomplete_E_inc(0.7, 0.8), 0.66532187484499875) < 1e-13);
    // quasi-periodicity: F(w + pi) = F(w) + 2K
    double K = complete_K(0.6);
    CHECK(std::fabs(incomplete_F(0.4 + pi, 0.6) - incomplete_F(0.4, 0.6) - 2 * K) <
          1e-12);
}

TEST_CASE("jacobi functions match reference values") {
    SnCnDn j = jacobi(1.3, 0.9);
    CHECK(rel(j.sn, 0.88576019828039892) < 1e-13);
    CHECK(rel(j.cn, 0.4641431580259138) < 1e-13);
    CHECK(rel(j.dn, 0.60373618876562084) < 1e-13);
}

TEST_CASE("jacobi quarter- and half-period values") {
    for (double k : {0.3, 0.6, 0.9, 0.99}) {
        double K = complete_K(k), kp = std::sqrt(1.0 - k * k);
        SnCnDn q = jacobi(K, k);
        CHECK(std::fabs(q.sn - 1.0) < 1e-12);
        CHECK(std::fabs(q.cn) < 1e-12);
        CHECK(std::fabs(q.dn - kp) < 1e-12);
        SnCnDn h = jacobi(2.0 * K, k);
        CHECK(std::fabs(h.sn) < 1e-11);
        CHECK(std::fabs(h.cn + 1.0) < 1e-11);
        CHECK(std::fabs(h.dn - 1.0) < 1e-11);
    }
}

TEST_CASE("jacobi identity battery over random samples") {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> xk(-8.0, 8.0), kk(0.01, 0.99);
    for (int i = 0; i < 1000; ++i) {
        double x = xk(rng), k = kk(rng);
        SnCnDn j = jacobi(x, k);
        CHECK(std::fabs(j.sn * j.sn + j.cn * j.cn - 1.0) < 1e-11);
        CHECK(std::fabs(j.dn * j.dn + k * k * j.sn * j.sn - 1.0) < 1e-11);
    }
}

TEST_CASE("jacobi periodicity") {
    for (double k : {0.2, 0.5, 0.8}) {
        double K = complete_K(k);
        for (double x : {-1.7, 0.3, 2.9}) {
            SnCnDn a = jacobi(x, k), b = jacobi(x + 4.0 * K, k);
            CHECK(std::fabs(a.sn - b.sn) < 1e-10);
            CHECK(std::fabs(a.cn - b.cn) < 1e-10);
            CHECK(std::fabs(a.dn - b.dn) < 1e-10);
        }
    }
}

TEST_CASE("legendre relation") {
    for (double k : {0.1, 0.35, 0.62, 0.9}) {
        double kp = std::sqrt(1.0 - k * k);
        double lhs = complete_E(k) * complete_K(kp) +
                     complete_E(kp) * complete_K(k) -
                     complete_K(k) * complete_K(kp);
        CHECK(std::fabs(lhs - pi / 2.0) < 1e-12);
    }
}

TEST_CASE("jacobi zeta") {
    CHECK(rel(jacobi_zeta(1.0, 0.7), 0.14016216444378549) < 1e-12);
    for (double k : {0.4, 0.8}) {
        double K = complete_K(k);
        // 2K-periodic with Z(0) = Z(K) = 0
        CHECK(std::fabs(jacobi_zeta(0.0, k)) < 1e-12);
        CHECK(std::fabs(jacobi_zeta(K, k)) < 1e-12);
        CHECK(std::fabs(jacobi_zeta(0.7 + 2 * K, k) - jacobi_zeta(0.7, k)) < 1e-11);
    }
}

TEST_CASE("heuman lambda") {
    CHECK(rel(heuman_lambda(0.6, 0.4), 0.54175492221207529) < 1e-12);
    for (double k : {0.15, 0.5, 0.85})
        CHECK(std::fabs(heuman_lambda(pi / 2.0, k) - 1.0) < 1e-12);
}

TEST_CASE("complete third-kind integral") {
    CHECK(rel(complete_Pi(-0.3, 0.6), 1.5243814243493585) < 1e-12);
    // Pi(0, k) = K(k)
    CHECK(rel(complete_Pi(0.0, 0.7), complete_K(0.7)) < 1e-14);
}

TEST_CASE("domain validation") {
    CHECK_THROWS_AS(complete_K(1.0), std::domain_error);
    CHECK_THROWS_AS(complete_E(-0.1), std::domain_error);
    CHECK_THROWS_AS(jacobi(0.5, 1.2), std::domain_error);
    CHECK_THROWS_AS(complete_Pi(0.5, 0.6), std::domain_error); // alpha2 >= k^2
}
