#include "origami/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "origami/errors.hpp"

namespace origami {

namespace {

// Coordinate merge scale for chord-tangent degeneracy tests.
double merge_eps(const Complex& a, const Complex& b) {
    return 1e-9 * (1.0 + std::max(std::abs(a), std::abs(b)));
}

// Multiplication chains that pass through an imperfectly merged cancellation
// blow coordinates up; treat such runaways as the point at infinity.
bool is_o(const EPoint& p) { return p.infinity || std::abs(p.x) > 1e8; }

// Group-law inputs must sit on the curve. The residual is compared at the
// scale of the cubic so large (nearly infinite) coordinates stay legal.
void require_on_curve(const EPoint& p, const char* where) {
    if (is_o(p)) return;
    const double scale = 1.0 + std::abs(p.x * p.x * p.x) + std::abs(p.y * p.y);
    if (std::abs(p.y * p.y - (p.x * p.x * p.x - p.x)) > 1e-6 * scale)
        throw OffCurve(std::string(where) + ": input point is not on the curve");
}

} // namespace

bool on_curve_e(const EPoint& p, double tol) {
    if (p.infinity) return true;
    return std::abs(p.y * p.y - (p.x * p.x * p.x - p.x)) <= tol;
}

EPoint ec_neg(const EPoint& p) {
    require_on_curve(p, "ec_neg");
    if (p.infinity) return p;
    return EPoint::affine(p.x, -p.y);
}

EPoint ec_add(const EPoint& p, const EPoint& q) {
    require_on_curve(p, "ec_add");
    require_on_curve(q, "ec_add");
    if (p.infinity) return q;
    if (q.infinity) return p;
    Complex slope;
    if (std::abs(p.x - q.x) < merge_eps(p.x, q.x)) {
        // Same x: either inverse points (or a 2-torsion doubling), or a
        // genuine tangent step.
        if (std::abs(p.y + q.y) < merge_eps(p.y, q.y)) return EPoint::O();
        slope = (3.0 * p.x * p.x - 1.0) / (2.0 * p.y);
    } else {
        slope = (q.y - p.y) / (q.x - p.x);
    }
    const Complex xr = slope * slope - p.x - q.x;
    const Complex yr = slope * (p.x - xr) - p.y;
    return EPoint::affine(xr, yr);
}

EPoint ec_mul(long n, EPoint p) {
    require_on_curve(p, "ec_mul");
    if (n < 0) {
        n = -n;
        p = ec_neg(p);
    }
    EPoint acc = EPoint::O();
    while (n > 0) {
        if (n & 1) acc = ec_add(acc, p);
        n >>= 1;
        if (n) p = ec_add(p, p);
    }
    return acc;
}

bool ec_eq(const EPoint& p, const EPoint& q, double tol) {
    if (p.infinity || q.infinity) return p.infinity && q.infinity;
    return std::abs(p.x - q.x) <= tol && std::abs(p.y - q.y) <= tol;
}

EPoint rot_c(const EPoint& p) {
    require_on_curve(p, "rot_c");
    if (p.infinity) return p;
    return EPoint::affine(-p.x, Complex(0.0, 1.0) * p.y);
}

std::optional<int> point_order_search(const EPoint& p, int nmax) {
    for (int k = 1; k <= nmax; ++k)
        if (is_o(ec_mul(k, p))) return k;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Division polynomials.
// ---------------------------------------------------------------------------

namespace {

const RationalPoly& curve_cubic() { // x^3 - x
    static const RationalPoly f({Rat(0), Rat(-1), Rat(0), Rat(1)});
    return f;
}

// Elements a(x) + y*b(x) of the coordinate ring, reduced with y^2 = x^3 - x.
struct YPoly {
    RationalPoly a, b;
};

YPoly ymul(const YPoly& p, const YPoly& q) {
    return {p.a * q.a + curve_cubic() * (p.b * q.b), p.a * q.b + p.b * q.a};
}

YPoly ysub(const YPoly& p, const YPoly& q) { return {p.a - q.a, p.b - q.b}; }

YPoly ypow3(const YPoly& p) { return ymul(p, ymul(p, p)); }
YPoly ypow2(const YPoly& p) { return ymul(p, p); }

// (a + y b) / (2y) = b/2 + y * a/(2(x^3-x)); the x-part division is exact
// for every numerator arising in the recurrences below.
YPoly div_2y(const YPoly& p) {
    return {Rat(1, 2) * p.b,
            Rat(1, 2) * RationalPoly::exact_div(p.a, curve_cubic())};
}

std::vector<YPoly> psi_table(int n) {
    std::vector<YPoly> psi(std::max(n + 1, 5));
    psi[0] = {RationalPoly{}, RationalPoly{}};
    psi[1] = {RationalPoly::constant(1), RationalPoly{}};
    psi[2] = {RationalPoly{}, RationalPoly::constant(2)};
    psi[3] = {RationalPoly({Rat(-1), Rat(0), Rat(-6), Rat(0), Rat(3)}), RationalPoly{}};
    psi[4] = {RationalPoly{},
              Rat(4) * RationalPoly({Rat(1), Rat(0), Rat(-5), Rat(0), Rat(-5), Rat(0), Rat(1)})};
    for (int k = 5; k <= n; ++k) {
        if (k % 2 == 1) {
            const int m = (k - 1) / 2;
            psi[k] = ysub(ymul(psi[m + 2], ypow3(psi[m])),
                          ymul(psi[m - 1], ypow3(psi[m + 1])));
        } else {
            const int m = k / 2;
            const YPoly inner = ysub(ymul(psi[m + 2], ypow2(psi[m - 1])),
                                     ymul(psi[m - 2], ypow2(psi[m + 1])));
            psi[k] = div_2y(ymul(psi[m], inner));
        }
    }
    return psi;
}

} // namespace

RationalPoly division_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("division polynomial index must be positive");
    const auto psi = psi_table(n);
    if (n % 2 == 1) {
        if (!psi[n].b.is_zero())
            throw RelationViolated("odd division polynomial has a y part");
        return psi[n].a;
    }
    if (!psi[n].a.is_zero())
        throw RelationViolated("even division polynomial has an x-only part");
    // psi_n = y * u; fold the 2-torsion fiber back in via the curve cubic.
    return curve_cubic() * (Rat(1, 2) * psi[n].b);
}

// ---------------------------------------------------------------------------
// Root finding.
// ---------------------------------------------------------------------------

std::vector<Complex> find_roots(std::vector<Complex> coeffs, double residual_tol) {
    while (!coeffs.empty() && coeffs.back() == 0.0) coeffs.pop_back();
    if (coeffs.size() <= 1) return {};
    const Complex lead = coeffs.back();
    for (auto& c : coeffs) c /= lead;
    const int d = static_cast<int>(coeffs.size()) - 1;

    const auto eval = [&](const Complex& z) {
        Complex acc(0.0, 0.0);
        for (int k = d; k >= 0; --k) acc = acc * z + coeffs[k];
        return acc;
    };
    const auto eval_scale = [&](const Complex& z) {
        double acc = 0.0;
        const double az = std::abs(z);
        double zp = 1.0;
        for (int k = 0; k <= d; ++k) {
            acc += std::abs(coeffs[k]) * zp;
            zp *= az;
        }
        return std::max(acc, 1e-300);
    };
    const auto eval_deriv = [&](const Complex& z) {
        Complex acc(0.0, 0.0);
        for (int k = d; k >= 1; --k) acc = acc * z + double(k) * coeffs[k];
        return acc;
    };

    if (d == 1) return {-coeffs[0]};

    double radius = 0.0;
    for (int k = 0; k < d; ++k) radius = std::max(radius, std::abs(coeffs[k]));
    radius = 1.0 + radius; // Cauchy bound for a monic polynomial

    // Simultaneous iteration from an asymmetric spiral of start points.
    std::vector<Complex> z(d);
    const double scale = std::max(1.0, 0.8 * radius);
    Complex w(0.4, 0.9);
    Complex cur = w;
    for (int k = 0; k < d; ++k) {
        z[k] = scale * cur;
        cur *= w;
    }

    const int max_iter = 600;
    for (int iter = 0; iter < max_iter; ++iter) {
        double moved = 0.0;
        for (int k = 0; k < d; ++k) {
            Complex denom(1.0, 0.0);
            for (int j = 0; j < d; ++j)
                if (j != k) denom *= z[k] - z[j];
            if (denom == Complex(0.0, 0.0)) {
                z[k] += Complex(1e-6, 2e-6); // nudge a collided guess
                moved = 1.0;
                continue;
            }
            const Complex step = eval(z[k]) / denom;
            z[k] -= step;
            moved = std::max(moved, std::abs(step));
        }
        if (moved < 1e-13 * (1.0 + radius)) break;
    }

    // Newton polish sharpens each root to machine precision.
    for (auto& r : z) {
        for (int it = 0; it < 8; ++it) {
            const Complex dp = eval_deriv(r);
            if (std::abs(dp) < 1e-300) break;
            const Complex step = eval(r) / dp;
            r -= step;
            if (std::abs(step) < 1e-15 * (1.0 + std::abs(r))) break;
        }
    }

    for (const auto& r : z)
        if (std::abs(eval(r)) > residual_tol * eval_scale(r))
            throw RootFindingDiverged("root refinement left a large residual");

    std::sort(z.begin(), z.end(), [](const Complex& a, const Complex& b) {
        return std::make_pair(a.real(), a.imag()) < std::make_pair(b.real(), b.imag());
    });
    std::vector<Complex> out;
    for (const auto& r : z) {
        bool dup = false;
        for (const auto& s : out)
            if (std::abs(r - s) < 1e-8) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(r);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Torsion enumeration.
// ---------------------------------------------------------------------------

namespace {

std::vector<int> prime_divisors(int n) {
    std::vector<int> ps;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

} // namespace

std::vector<TorsionPoint> torsion_points(int n) {
    if (n < 2) return {};
    const RationalPoly f = division_polynomial(n);
    const std::vector<Complex> xs = find_roots(f.complex_coeffs());
    const std::vector<int> primes = prime_divisors(n);

    std::vector<TorsionPoint> out;
    for (const Complex& x : xs) {
        const Complex y2 = x * x * x - x;
        std::vector<Complex> ys;
        if (std::abs(y2) < 1e-12)
            ys = {Complex(0.0, 0.0)};
        else {
            const Complex y = std::sqrt(y2);
            ys = {y, -y};
        }
        for (const Complex& y : ys) {
            const EPoint p = EPoint::affine(x, y);
            if (!is_o(ec_mul(n, p))) continue; // numerically stray root
            bool exact = true;
            for (int q : primes)
                if (is_o(ec_mul(n / q, p))) {
                    exact = false;
                    break;
                }
            if (exact) out.push_back({x, y, n});
        }
    }
    std::sort(out.begin(), out.end(), [](const TorsionPoint& a, const TorsionPoint& b) {
        return std::make_tuple(a.x.real(), a.x.imag(), a.y.real(), a.y.imag()) <
               std::make_tuple(b.x.real(), b.x.imag(), b.y.real(), b.y.imag());
    });
    return out;
}

int torsion_kernel_size(int n) {
    int total = 1; // the origin
    for (int d = 2; d <= n; ++d)
        if (n % d == 0) total += static_cast<int>(torsion_points(d).size());
    return total;
}

LambdaResult lambda_from_torsion(const Complex& x_t) {
    for (double two : {0.0, 1.0, -1.0})
        if (std::abs(x_t - two) < 1e-12)
            throw TwoTorsionInput("2-torsion x-coordinate gives a degenerate parameter");
    const Complex zeta = (1.0 + x_t) / (1.0 - x_t);
    return {zeta, 1.0 - zeta * zeta};
}

LambdaResult lambda_from_torsion(const TorsionPoint& t) { return lambda_from_torsion(t.x); }

// ---------------------------------------------------------------------------
// Exact arithmetic over Q(i).
// ---------------------------------------------------------------------------

GaussRat operator+(const GaussRat& a, const GaussRat& b) { return {a.re + b.re, a.im + b.im}; }
GaussRat operator-(const GaussRat& a, const GaussRat& b) { return {a.re - b.re, a.im - b.im}; }
GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }

GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussRat operator/(const GaussRat& a, const GaussRat& b) {
    const Rat norm = b.re * b.re + b.im * b.im;
    if (norm == 0) throw std::invalid_argument("division by zero Gaussian rational");
    return {(a.re * b.re + a.im * b.im) / norm, (a.im * b.re - a.re * b.im) / norm};
}

GaussRat gauss_i() { return {Rat(0), Rat(1)}; }
GaussRat gauss(long re, long im) { return {Rat(re), Rat(im)}; }

bool exact_on_curve(const ExactPoint& p) {
    if (p.infinity) return true;
    return (p.y * p.y) == (p.x * p.x * p.x - p.x);
}

ExactPoint exact_neg(const ExactPoint& p) {
    if (p.infinity) return p;
    return ExactPoint::affine(p.x, -p.y);
}

ExactPoint exact_add(const ExactPoint& p, const ExactPoint& q) {
    if (p.infinity) return q;
    if (q.infinity) return p;
    GaussRat slope;
    if (p.x == q.x) {
        if ((p.y + q.y).is_zero()) return ExactPoint::O();
        slope = (gauss(3) * p.x * p.x - gauss(1)) / (gauss(2) * p.y);
    } else {
        slope = (q.y - p.y) / (q.x - p.x);
    }
    const GaussRat xr = slope * slope - p.x - q.x;
    const GaussRat yr = slope * (p.x - xr) - p.y;
    return ExactPoint::affine(xr, yr);
}

ExactPoint exact_mul(long n, ExactPoint p) {
    if (n < 0) {
        n = -n;
        p = exact_neg(p);
    }
    ExactPoint acc = ExactPoint::O();
    while (n > 0) {
        if (n & 1) acc = exact_add(acc, p);
        n >>= 1;
        if (n) p = exact_add(p, p);
    }
    return acc;
}

} // namespace origami
