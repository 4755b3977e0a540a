#include "origami/weierstrass.hpp"

#include <cmath>
#include <numeric>

#include "origami/errors.hpp"

namespace origami {

namespace {

const double kPi = std::acos(-1.0);

Complex inv_sin_sq(const Complex& w) {
    const Complex s = std::sin(w);
    return 1.0 / (s * s);
}

} // namespace

double g2_square_lattice() {
    // g2 = (4 pi^4 / 3) E4(i) with the weight-4 Eisenstein q-series at q = e^{-2 pi}.
    const double q = std::exp(-2.0 * kPi);
    double e4 = 1.0;
    double qk = 1.0;
    for (int k = 1; k < 64; ++k) {
        qk *= q;
        const double term = 240.0 * std::pow(static_cast<double>(k), 3) * qk / (1.0 - qk);
        e4 += term;
        if (term < 1e-18) break;
    }
    return 4.0 * std::pow(kPi, 4) / 3.0 * e4;
}

Complex wp(const Complex& z, int m_terms) {
    // Row-by-row summation: each horizontal line of lattice points contributes
    // a pi^2 / sin^2 term; the m = 0 row carries the pole at z = 0.
    const double pi2 = kPi * kPi;
    Complex acc = pi2 * inv_sin_sq(kPi * z) - pi2 / 3.0;
    for (int m = 1; m <= m_terms; ++m) {
        const Complex shift(0.0, static_cast<double>(m));
        const double sh = std::sinh(kPi * m);
        acc += pi2 * inv_sin_sq(kPi * (z - shift));
        acc += pi2 * inv_sin_sq(kPi * (z + shift));
        acc += 2.0 * pi2 / (sh * sh);
    }
    return acc;
}

Complex wp_prime(const Complex& z, int m_terms) {
    const double pi3 = kPi * kPi * kPi;
    Complex acc(0.0, 0.0);
    for (int m = -m_terms; m <= m_terms; ++m) {
        const Complex w = kPi * (z - Complex(0.0, static_cast<double>(m)));
        const Complex s = std::sin(w);
        acc += -2.0 * pi3 * std::cos(w) / (s * s * s);
    }
    return acc;
}

EPoint weierstrass_bridge(int a, int b, int n, double tol) {
    if (n <= 0) throw ParseError("grid modulus must be positive");
    a = ((a % n) + n) % n;
    b = ((b % n) + n) % n;
    if (a == 0 && b == 0) return EPoint::O();

    const Complex z(static_cast<double>(a) / n, static_cast<double>(b) / n);
    const double g2 = g2_square_lattice();
    const Complex c = std::pow(Complex(4.0 / g2, 0.0), 0.25);
    const Complex u = c * c * wp(z);
    const Complex v = 0.5 * c * c * c * wp_prime(z);
    const Complex residual = v * v - (u * u * u - u);
    if (std::abs(residual) > tol * (1.0 + std::norm(u) * std::abs(u)))
        throw ConvergenceBudgetExceeded("lattice sums did not land on the curve");
    const EPoint res = EPoint::affine(u, v);

    // (a + b i)/n generates the cyclic group of order n / gcd(a, b, n) in
    // (1/n)L / L, and the group law must agree: the least k with k * res = O
    // has to be that order exactly.
    const int order = n / std::gcd(std::gcd(a, b), n);
    if (point_order_search(res, order) != std::optional<int>(order))
        throw ConvergenceBudgetExceeded("bridged point has the wrong group order");
    return res;
}

} // namespace origami
