#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "origami/elliptic.hpp"
#include "origami/errors.hpp"

#include "test_util.hpp"

using namespace origami;

namespace {

EPoint random_point(std::mt19937_64& rng) {
    for (;;) {
        const Complex x(-2.0 + 4.0 * testing::unit_real(rng),
                        -2.0 + 4.0 * testing::unit_real(rng));
        if (std::abs(x) < 0.2 || std::abs(x - 1.0) < 0.2 || std::abs(x + 1.0) < 0.2)
            continue;
        return EPoint::affine(x, std::sqrt(x * x * x - x));
    }
}

} // namespace

TEST_CASE("group law axioms on random points") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        const EPoint p = random_point(rng);
        const EPoint q = random_point(rng);
        const EPoint r = random_point(rng);
        REQUIRE(on_curve_e(p, 1e-9));

        CHECK(ec_eq(ec_add(p, q), ec_add(q, p), 1e-8));
        CHECK(ec_eq(ec_add(ec_add(p, q), r), ec_add(p, ec_add(q, r)), 1e-6));
        CHECK(ec_eq(ec_add(p, EPoint::O()), p, 1e-12));
        CHECK(ec_add(p, ec_neg(p)).infinity);
        CHECK(on_curve_e(ec_add(p, q), 1e-6));

        // Multiples distribute: (m + k) p = m p + k p.
        const EPoint m3 = ec_mul(3, p);
        const EPoint m2 = ec_mul(2, p);
        CHECK(ec_eq(ec_mul(5, p), ec_add(m3, m2), 1e-5));
        CHECK(ec_eq(ec_mul(-2, p), ec_neg(m2), 1e-8));
    }
}

TEST_CASE("two-torsion arithmetic") {
    const EPoint a = EPoint::affine(Complex(0, 0), Complex(0, 0));
    const EPoint b = EPoint::affine(Complex(1, 0), Complex(0, 0));
    const EPoint c = EPoint::affine(Complex(-1, 0), Complex(0, 0));
    CHECK(ec_add(a, a).infinity);
    CHECK(ec_add(b, b).infinity);
    CHECK(ec_eq(ec_add(b, c), a, 1e-12));
    CHECK(ec_eq(ec_add(a, b), c, 1e-12));
    CHECK(point_order_search(a) == 2);
    CHECK(point_order_search(b) == 2);
}

TEST_CASE("group operations reject points off the curve") {
    const EPoint bogus = EPoint::affine(Complex(2.0, 0.0), Complex(3.0, 0.0));
    const EPoint fine = EPoint::affine(Complex(0, 0), Complex(0, 0));
    CHECK_THROWS_AS(ec_add(bogus, fine), OffCurve);
    CHECK_THROWS_AS(ec_add(fine, bogus), OffCurve);
    CHECK_THROWS_AS(ec_neg(bogus), OffCurve);
    CHECK_THROWS_AS(ec_mul(3, bogus), OffCurve);
    CHECK_THROWS_AS(rot_c(bogus), OffCurve);
    CHECK_NOTHROW(ec_add(fine, EPoint::O()));
    // Runaway coordinates stand for the point at infinity and pass.
    CHECK_NOTHROW(ec_neg(EPoint::affine(Complex(1e9, 0), Complex(7, 7))));
}

TEST_CASE("complex multiplication by the quarter turn") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const EPoint p = random_point(rng);
        CHECK(on_curve_e(rot_c(p), 1e-9));
        CHECK(ec_eq(rot_c(rot_c(p)), ec_neg(p), 1e-12));
        EPoint four = p;
        for (int k = 0; k < 4; ++k) four = rot_c(four);
        CHECK(ec_eq(four, p, 1e-12));
        // It is a group homomorphism.
        const EPoint q = random_point(rng);
        CHECK(ec_eq(rot_c(ec_add(p, q)), ec_add(rot_c(p), rot_c(q)), 1e-7));
    }
}

TEST_CASE("division polynomial roots are killed by their level") {
    for (int n = 2; n <= 8; ++n) {
        const RationalPoly psi = division_polynomial(n);
        const auto roots = find_roots(psi.complex_coeffs());
        CHECK(!roots.empty());
        for (const Complex& x : roots) {
            const EPoint p = EPoint::affine(x, std::sqrt(x * x * x - x));
            const auto ord = point_order_search(p, n);
            REQUIRE(ord.has_value());
            CHECK(n % *ord == 0);
        }
    }
}

TEST_CASE("division polynomial low levels in closed form") {
    // Level 2 vanishes exactly on the three affine two-torsion abscissas.
    const RationalPoly psi2 = division_polynomial(2);
    CHECK(psi2.degree() == 3);
    CHECK(psi2.eval(Rat(0)) == 0);
    CHECK(psi2.eval(Rat(1)) == 0);
    CHECK(psi2.eval(Rat(-1)) == 0);

    // Level 3: 3x^4 - 6x^2 - 1.
    const RationalPoly psi3 = division_polynomial(3);
    CHECK(psi3.degree() == 4);
    CHECK(psi3.coeff(4) == 3);
    CHECK(psi3.coeff(2) == -6);
    CHECK(psi3.coeff(0) == -1);
    CHECK(psi3.coeff(1) == 0);
    CHECK(psi3.coeff(3) == 0);

    // Level 4 vanishes at x = +-i, the abscissas with zeta = +-i.
    const RationalPoly psi4 = division_polynomial(4);
    GaussRat acc{};
    GaussRat pw = gauss(1);
    for (int k = 0; k <= psi4.degree(); ++k) {
        acc = acc + GaussRat{psi4.coeff(k), Rat(0)} * pw;
        pw = pw * gauss_i();
    }
    CHECK(acc.is_zero());
}

TEST_CASE("torsion point counts") {
    CHECK(torsion_points(3).size() == 8);
    CHECK(torsion_points(4).size() == 12);
    CHECK(torsion_points(5).size() == 24);
    CHECK(torsion_points(6).size() == 24);
    CHECK(torsion_points(7).size() == 48);
    CHECK(torsion_points(8).size() == 48);
    for (int n = 2; n <= 6; ++n) CHECK(torsion_kernel_size(n) == n * n);
}

TEST_CASE("torsion points have their exact order") {
    for (int n : {3, 4, 6}) {
        for (const auto& t : torsion_points(n)) {
            const EPoint p = EPoint::affine(t.x, t.y);
            CHECK(t.order == n);
            CHECK(on_curve_e(p, 1e-8));
            CHECK(point_order_search(p, n) == n);
        }
    }
}

TEST_CASE("exact arithmetic certifies the order-4 point") {
    const ExactPoint t = ExactPoint::affine(gauss_i(), gauss(1) - gauss_i());
    REQUIRE(exact_on_curve(t));
    const ExactPoint twice = exact_mul(2, t);
    CHECK(twice == ExactPoint::affine(gauss(0), gauss(0)));
    CHECK(exact_mul(4, t).infinity);
    CHECK(!exact_mul(2, t).infinity);
    CHECK(!exact_mul(3, t).infinity);

    // Negation and inverses behave.
    CHECK(exact_add(t, exact_neg(t)).infinity);
    CHECK(exact_add(twice, twice).infinity);
}

TEST_CASE("parameter from a torsion abscissa") {
    const auto lr = lambda_from_torsion(Complex(0.0, 1.0));
    CHECK(std::abs(lr.zeta - Complex(0.0, 1.0)) < 1e-14);
    CHECK(std::abs(lr.lambda - Complex(2.0, 0.0)) < 1e-14);

    // Same through the point overload.
    TorsionPoint t;
    t.x = Complex(0.0, 1.0);
    t.y = Complex(1.0, -1.0);
    t.order = 4;
    const auto lr2 = lambda_from_torsion(t);
    CHECK(std::abs(lr2.lambda - lr.lambda) == 0.0);

    CHECK_THROWS_AS(lambda_from_torsion(Complex(0.0, 0.0)), TwoTorsionInput);
    CHECK_THROWS_AS(lambda_from_torsion(Complex(1.0, 0.0)), TwoTorsionInput);
    CHECK_THROWS_AS(lambda_from_torsion(Complex(-1.0, 0.0)), TwoTorsionInput);

    // Exact oracle over the Gaussian rationals.
    const GaussRat x = gauss_i();
    const GaussRat zeta = (gauss(1) + x) / (gauss(1) - x);
    CHECK(zeta == gauss_i());
    CHECK(gauss(1) - zeta * zeta == gauss(2));
}

TEST_CASE("root finder recovers planted roots") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Complex> roots;
        for (int k = 0; k < 6; ++k)
            roots.emplace_back(-2.0 + 4.0 * testing::unit_real(rng),
                               -2.0 + 4.0 * testing::unit_real(rng));
        std::vector<Complex> coeffs{1.0};
        for (const Complex& r : roots) {
            std::vector<Complex> next(coeffs.size() + 1, Complex(0.0));
            for (size_t i = 0; i < coeffs.size(); ++i) {
                next[i + 1] += coeffs[i];
                next[i] -= r * coeffs[i];
            }
            coeffs = std::move(next);
        }
        // coeffs is already ascending: coeffs[i] multiplies x^i.
        const auto found = find_roots(coeffs);
        REQUIRE(found.size() <= roots.size());
        for (const Complex& r : roots) {
            double best = 1e9;
            for (const Complex& f : found) best = std::min(best, std::abs(f - r));
            CHECK(best < 1e-7);
        }
    }
}

TEST_CASE("non-torsion points have no small order") {
    // The abscissa whose parameter is 1/3 solves x^2 + 10x + 1 = 0.
    const double x = -5.0 + 2.0 * std::sqrt(6.0);
    const EPoint p = EPoint::affine(Complex(x, 0.0),
                                    std::sqrt(Complex(x * x * x - x, 0.0)));
    CHECK(!point_order_search(p, 12).has_value());
}
