#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "origami/elliptic.hpp"

namespace origami {

// ---------------------------------------------------------------------------
// The plane quartic  W_lambda:  Y^4 = X (X - Z) (X - lambda Z) Z,
// its degree-2 quotient      E_lambda:  Y^2 Z = X (X - Z) (X - lambda Z),
// and the square-lattice curve in projective form  B^2 C = A^3 - A C^2.
// ---------------------------------------------------------------------------

struct ProjPoint2 {
    Complex X{}, Y{}, Z{};
};

// Scale so the largest coordinate has modulus 1.
ProjPoint2 normalized(const ProjPoint2& p);
bool proj_eq(const ProjPoint2& p, const ProjPoint2& q, double tol = 1e-9);

using Mat3 = std::array<std::array<Complex, 3>, 3>;

Mat3 mat3_identity();
Mat3 mat3_mul(const Mat3& a, const Mat3& b);
Mat3 mat3_adjugate(const Mat3& m); // inverse up to the determinant factor
ProjPoint2 apply(const Mat3& m, const ProjPoint2& p);
bool mat3_proj_eq(const Mat3& a, const Mat3& b, double tol = 1e-9);

// Root data attached to one member of the family. All auxiliary roots are
// chosen once at construction (principal branches unless overridden).
struct CurveParams {
    Complex lambda{};
    Complex zeta{};  // zeta^2   = 1 - lambda
    Complex xi{};    // xi^2     = 1 - 1/lambda
    Complex eta{};   // eta^2    = lambda
    Complex omega_sigma{};      // ^2 = 1 - zeta
    Complex omega_neg_sigma{};  // ^2 = 1 + zeta
    Complex omega_rho{};        // ^4 = 1 / (lambda (1 + xi)^2)
    Complex omega_neg_rho{};    // ^4 = 1 / (lambda (1 - xi)^2)
    Complex omega_tau{};        // ^2 = (i / (1 + eta))^3
    Complex omega_neg_tau{};    // ^2 = (i / (1 - eta))^3
    Complex zeta8{};            // primitive eighth root of unity, e^{i pi/4}
    Complex mu1{};              // lambda^{-1/4}
};

// Throws DegenerateLambda when lambda is 0 or 1 (within 1e-12).
CurveParams make_params(const Complex& lambda);
CurveParams make_params(const Complex& lambda, const Complex& zeta);
CurveParams make_params_with_roots(const Complex& lambda, const Complex& zeta,
                                   const Complex& xi, const Complex& eta);

bool on_curve_w(const CurveParams& cp, const ProjPoint2& p, double tol = 1e-9);
bool on_curve_e_lambda(const CurveParams& cp, const ProjPoint2& p, double tol = 1e-9);
bool on_curve_e_proj(const ProjPoint2& p, double tol = 1e-9);

// ---------------------------------------------------------------------------
// The sixteen automorphisms of W_lambda, named after the unit quaternions
// they realize together with the central quarter turn c.
// ---------------------------------------------------------------------------

enum class AutName {
    One, MinusOne, C, MinusC,        // Y-scalings diag(1, i^v, 1)
    Sigma, MinusSigma, K, MinusK,    // alpha family
    Rho, MinusRho, I, MinusI,        // beta family
    Tau, MinusTau, J, MinusJ,        // gamma family
};

const std::array<AutName, 16>& all_aut_names();
std::string aut_name_str(AutName a);
Mat3 aut_matrix(AutName a, const CurveParams& cp);

// Apply the named automorphism to a point of W_lambda. Throws OffCurve when
// the input does not lie on the curve (tolerance 1e-6).
ProjPoint2 apply_aut(AutName a, const CurveParams& cp, const ProjPoint2& p);

enum class Involution { Sigma, MinusSigma, Rho, MinusRho, Tau, MinusTau };
AutName involution_aut(Involution v);
std::string involution_str(Involution v);

// ---------------------------------------------------------------------------
// Quotient maps kappa to the square-lattice curve, one per involution.
// Each is evaluated in two charts and the better-conditioned value wins,
// so the special points of either chart are covered by the other.
// Throws OffCurve when the input does not lie on W_lambda (tolerance 1e-6).
// ---------------------------------------------------------------------------

ProjPoint2 kappa(Involution v, const CurveParams& cp, const ProjPoint2& p);

// The four fixed points (X : i^nu : Z) of an involution on W_lambda.
std::array<ProjPoint2, 4> involution_fixed_points(Involution v, const CurveParams& cp);

// Closed-form image of the fixed points on the square-lattice curve:
// a representative and its orbit under complex multiplication by i.
std::array<ProjPoint2, 4> critical_values(Involution v, const CurveParams& cp);

EPoint to_affine_e(const ProjPoint2& p);            // (A:B:C) with C ~ 0 -> O
ProjPoint2 rot_c_proj(const ProjPoint2& p);         // (A:B:C) -> (-A : iB : C)
ProjPoint2 quotient_to_e_lambda(const ProjPoint2& p); // (X:Y:Z) -> (XZ : Y^2 : Z^2)

// ---------------------------------------------------------------------------
// The two changes of parameter lambda -> 1/lambda and lambda -> 1 - lambda,
// realized by explicit matrices, and the root conventions that transport
// the named automorphisms along them.
// ---------------------------------------------------------------------------

enum class IsoName { Phi1, Phi2 };
Mat3 iso_matrix(IsoName name, const CurveParams& cp);
// Apply the parameter-change map to a point of W_lambda (OffCurve as above).
ProjPoint2 iso_phi(IsoName name, const CurveParams& cp, const ProjPoint2& p);
CurveParams transported_params_phi1(const CurveParams& cp); // family member at 1/lambda
CurveParams transported_params_phi2(const CurveParams& cp); // family member at 1 - lambda

// ---------------------------------------------------------------------------
// Random curve points and the verification drivers.
// ---------------------------------------------------------------------------

std::vector<ProjPoint2> sample_points(const CurveParams& cp, int count, std::uint64_t seed);

struct VerifyReport {
    std::vector<std::pair<std::string, bool>> checks;
    int commuting_square_power = -1; // which power of the quarter turn closes the square
    bool all_passed = false;
};

VerifyReport verify_identities(const Complex& lambda, int samples = 12,
                               std::uint64_t seed = 1, double tol = 1e-9);

struct TheoremReport {
    Complex lambda{}, zeta{};
    bool representative_x_matches = false; // one critical value reproduces the input x
    bool images_on_curve = false;          // all four critical values land on the curve
    std::array<int, 4> image_orders{};     // group order of each critical value (0 = none found)
    bool n_multiple_rot_fixed = false;     // n * all four agree on one quarter-turn-fixed point
    bool two_n_kills = false;              // 2n * each critical value = O
    bool passed = false;
};

// For a torsion x-coordinate x_t of exact order n: builds the attached family
// member and checks that n times every critical value of sigma is the same
// point fixed by complex multiplication by i (so O or (0,0)), hence that 2n
// kills all of them.
TheoremReport theorem_check(const Complex& x_t, int n, double tol = 1e-8);
TheoremReport theorem_check(const TorsionPoint& t, double tol = 1e-8);

} // namespace origami
