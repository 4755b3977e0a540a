#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "origami/rational_poly.hpp"

namespace origami {

using Complex = std::complex<double>;

// ---------------------------------------------------------------------------
// Points on the square-lattice elliptic curve  E:  y^2 = x^3 - x.
// ---------------------------------------------------------------------------

struct EPoint {
    bool infinity = true;
    Complex x{0.0, 0.0};
    Complex y{0.0, 0.0};

    static EPoint O() { return {}; }
    static EPoint affine(Complex x, Complex y) { return {false, x, y}; }
};

bool on_curve_e(const EPoint& p, double tol = 1e-9);
// The group operations reject affine inputs that are not on the curve
// (OffCurve, checked at tolerance 1e-6); huge coordinates pass as "nearly O".
EPoint ec_neg(const EPoint& p);
// Chord-tangent addition; doubling a point with y ~ 0 (a 2-torsion point)
// returns the point at infinity instead of dividing by ~0.
EPoint ec_add(const EPoint& p, const EPoint& q);
EPoint ec_mul(long n, EPoint p);
bool ec_eq(const EPoint& p, const EPoint& q, double tol = 1e-9);

// Complex multiplication by i on E: (x, y) -> (-x, i y).
EPoint rot_c(const EPoint& p);

// Least 1 <= k <= nmax with k*p = O, if any.
std::optional<int> point_order_search(const EPoint& p, int nmax = 12);

// ---------------------------------------------------------------------------
// Division polynomials of E with exact rational coefficients.
// division_polynomial(n) vanishes exactly at the x-coordinates of the
// nonzero points killed by n (for n even this includes the 2-torsion fiber,
// folded in through the factor x^3 - x).
// ---------------------------------------------------------------------------

RationalPoly division_polynomial(int n);

// ---------------------------------------------------------------------------
// Torsion enumeration (numeric).
// ---------------------------------------------------------------------------

struct TorsionPoint {
    Complex x, y;
    int order = 0;
};

// All points of exact order n, found as roots of the division polynomial and
// filtered by multiplying down the maximal proper divisors of n.
std::vector<TorsionPoint> torsion_points(int n);

// |{P : nP = O}| including the origin.
int torsion_kernel_size(int n);

// ---------------------------------------------------------------------------
// The parameter attached to a torsion point: zeta = (1+x)/(1-x),
// lambda = 1 - zeta^2 = -4x/(1-x)^2. The 2-torsion x-values {0, 1, -1}
// are rejected (they give degenerate lambda).
// ---------------------------------------------------------------------------

struct LambdaResult {
    Complex zeta;
    Complex lambda;
};

LambdaResult lambda_from_torsion(const Complex& x_t);
LambdaResult lambda_from_torsion(const TorsionPoint& t);

// ---------------------------------------------------------------------------
// Durand-Kerner root finder for dense complex polynomials (ascending
// coefficients). Roots are polished and deduplicated; throws
// RootFindingDiverged when residuals stay large.
// ---------------------------------------------------------------------------

std::vector<Complex> find_roots(std::vector<Complex> coeffs, double residual_tol = 1e-8);

// ---------------------------------------------------------------------------
// Exact arithmetic over Q(i) for the same curve, used where equalities are
// claimed exactly rather than numerically.
// ---------------------------------------------------------------------------

struct GaussRat {
    Rat re{0};
    Rat im{0};

    bool operator==(const GaussRat&) const = default;
    bool is_zero() const { return re == 0 && im == 0; }
};

GaussRat operator+(const GaussRat& a, const GaussRat& b);
GaussRat operator-(const GaussRat& a, const GaussRat& b);
GaussRat operator-(const GaussRat& a);
GaussRat operator*(const GaussRat& a, const GaussRat& b);
GaussRat operator/(const GaussRat& a, const GaussRat& b);
GaussRat gauss_i();
GaussRat gauss(long re, long im = 0);

struct ExactPoint {
    bool infinity = true;
    GaussRat x{};
    GaussRat y{};

    static ExactPoint O() { return {}; }
    static ExactPoint affine(GaussRat x, GaussRat y) {
        return {false, std::move(x), std::move(y)};
    }
    bool operator==(const ExactPoint&) const = default;
};

bool exact_on_curve(const ExactPoint& p);
ExactPoint exact_neg(const ExactPoint& p);
ExactPoint exact_add(const ExactPoint& p, const ExactPoint& q);
ExactPoint exact_mul(long n, ExactPoint p);

} // namespace origami
