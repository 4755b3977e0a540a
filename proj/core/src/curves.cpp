#include "origami/curves.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "origami/errors.hpp"

namespace origami {

namespace {

const Complex kI(0.0, 1.0);

Complex ipow(int nu) {
    switch (((nu % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

double max_mod(const ProjPoint2& p) {
    return std::max({std::abs(p.X), std::abs(p.Y), std::abs(p.Z)});
}

} // namespace

ProjPoint2 normalized(const ProjPoint2& p) {
    const double m = max_mod(p);
    if (m == 0.0) return p;
    return {p.X / m, p.Y / m, p.Z / m};
}

bool proj_eq(const ProjPoint2& p, const ProjPoint2& q, double tol) {
    const ProjPoint2 a = normalized(p);
    const ProjPoint2 b = normalized(q);
    return std::abs(a.X * b.Y - b.X * a.Y) <= tol && std::abs(a.X * b.Z - b.X * a.Z) <= tol &&
           std::abs(a.Y * b.Z - b.Y * a.Z) <= tol;
}

Mat3 mat3_identity() {
    Mat3 m{};
    m[0][0] = m[1][1] = m[2][2] = 1.0;
    return m;
}

Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Complex s(0.0, 0.0);
            for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
            r[i][j] = s;
        }
    return r;
}

Mat3 mat3_adjugate(const Mat3& m) {
    const auto cof = [&](int r, int c) {
        const int r0 = (r + 1) % 3, r1 = (r + 2) % 3;
        const int c0 = (c + 1) % 3, c1 = (c + 2) % 3;
        return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    };
    Mat3 adj{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) adj[i][j] = cof(j, i);
    return adj;
}

ProjPoint2 apply(const Mat3& m, const ProjPoint2& p) {
    return {m[0][0] * p.X + m[0][1] * p.Y + m[0][2] * p.Z,
            m[1][0] * p.X + m[1][1] * p.Y + m[1][2] * p.Z,
            m[2][0] * p.X + m[2][1] * p.Y + m[2][2] * p.Z};
}

namespace {

Mat3 mat3_unit(const Mat3& m) {
    double mx = 0.0;
    for (const auto& row : m)
        for (const auto& e : row) mx = std::max(mx, std::abs(e));
    Mat3 r = m;
    if (mx == 0.0) return r;
    for (auto& row : r)
        for (auto& e : row) e /= mx;
    return r;
}

} // namespace

bool mat3_proj_eq(const Mat3& a, const Mat3& b, double tol) {
    const Mat3 na = mat3_unit(a);
    const Mat3 nb = mat3_unit(b);
    int br = 0, bc = 0;
    double best = -1.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (std::abs(nb[i][j]) > best) {
                best = std::abs(nb[i][j]);
                br = i;
                bc = j;
            }
    if (best == 0.0) return false;
    const Complex s = na[br][bc] / nb[br][bc];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (std::abs(na[i][j] - s * nb[i][j]) > tol) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Parameters.
// ---------------------------------------------------------------------------

namespace {

void fill_companion_roots(CurveParams& cp) {
    const Complex one(1.0, 0.0);
    cp.omega_sigma = std::sqrt(one - cp.zeta);
    cp.omega_neg_sigma = std::sqrt(one + cp.zeta);
    cp.omega_rho = std::pow(one / (cp.lambda * (one + cp.xi) * (one + cp.xi)), 0.25);
    cp.omega_neg_rho = std::pow(one / (cp.lambda * (one - cp.xi) * (one - cp.xi)), 0.25);
    cp.omega_tau = std::sqrt(std::pow(kI / (one + cp.eta), 3));
    cp.omega_neg_tau = std::sqrt(std::pow(kI / (one - cp.eta), 3));
    cp.zeta8 = std::polar(1.0, std::acos(-1.0) / 4.0);
    cp.mu1 = std::pow(cp.lambda, -0.25);
}

void check_root(const Complex& root, const Complex& square, const char* what) {
    if (std::abs(root * root - square) > 1e-9 * (1.0 + std::abs(square)))
        throw RelationViolated(std::string("pinned root does not square correctly: ") + what);
}

} // namespace

CurveParams make_params(const Complex& lambda) {
    return make_params(lambda, std::sqrt(Complex(1.0, 0.0) - lambda));
}

CurveParams make_params(const Complex& lambda, const Complex& zeta) {
    return make_params_with_roots(lambda, zeta, std::sqrt(Complex(1.0, 0.0) - 1.0 / lambda),
                                  std::sqrt(lambda));
}

CurveParams make_params_with_roots(const Complex& lambda, const Complex& zeta,
                                   const Complex& xi, const Complex& eta) {
    if (std::abs(lambda) < 1e-12 || std::abs(lambda - 1.0) < 1e-12)
        throw DegenerateLambda("family member is degenerate at lambda in {0, 1}");
    check_root(zeta, Complex(1.0, 0.0) - lambda, "zeta");
    check_root(xi, Complex(1.0, 0.0) - 1.0 / lambda, "xi");
    check_root(eta, lambda, "eta");
    CurveParams cp;
    cp.lambda = lambda;
    cp.zeta = zeta;
    cp.xi = xi;
    cp.eta = eta;
    fill_companion_roots(cp);
    return cp;
}

bool on_curve_w(const CurveParams& cp, const ProjPoint2& p, double tol) {
    const ProjPoint2 n = normalized(p);
    const Complex lhs = n.Y * n.Y * n.Y * n.Y;
    const Complex rhs = n.X * (n.X - n.Z) * (n.X - cp.lambda * n.Z) * n.Z;
    return std::abs(lhs - rhs) <= tol * (1.0 + std::abs(cp.lambda));
}

bool on_curve_e_lambda(const CurveParams& cp, const ProjPoint2& p, double tol) {
    const ProjPoint2 n = normalized(p);
    const Complex lhs = n.Y * n.Y * n.Z;
    const Complex rhs = n.X * (n.X - n.Z) * (n.X - cp.lambda * n.Z);
    return std::abs(lhs - rhs) <= tol * (1.0 + std::abs(cp.lambda));
}

bool on_curve_e_proj(const ProjPoint2& p, double tol) {
    const ProjPoint2 n = normalized(p);
    const Complex lhs = n.Y * n.Y * n.Z;
    const Complex rhs = n.X * n.X * n.X - n.X * n.Z * n.Z;
    return std::abs(lhs - rhs) <= tol;
}

// ---------------------------------------------------------------------------
// Automorphisms.
// ---------------------------------------------------------------------------

const std::array<AutName, 16>& all_aut_names() {
    static const std::array<AutName, 16> names = {
        AutName::One,  AutName::MinusOne,    AutName::C,   AutName::MinusC,
        AutName::Sigma, AutName::MinusSigma, AutName::K,   AutName::MinusK,
        AutName::Rho,   AutName::MinusRho,   AutName::I,   AutName::MinusI,
        AutName::Tau,   AutName::MinusTau,   AutName::J,   AutName::MinusJ,
    };
    return names;
}

std::string aut_name_str(AutName a) {
    switch (a) {
        case AutName::One: return "1";
        case AutName::MinusOne: return "-1";
        case AutName::C: return "c";
        case AutName::MinusC: return "-c";
        case AutName::Sigma: return "sigma";
        case AutName::MinusSigma: return "-sigma";
        case AutName::K: return "k";
        case AutName::MinusK: return "-k";
        case AutName::Rho: return "rho";
        case AutName::MinusRho: return "-rho";
        case AutName::I: return "i";
        case AutName::MinusI: return "-i";
        case AutName::Tau: return "tau";
        case AutName::MinusTau: return "-tau";
        case AutName::J: return "j";
        case AutName::MinusJ: return "-j";
    }
    return "?";
}

namespace {

Mat3 alpha_matrix(const Complex& a, const Complex& lambda) {
    Mat3 m{};
    m[0][0] = 1.0;
    m[0][2] = -lambda;
    m[1][1] = a;
    m[2][0] = 1.0;
    m[2][2] = -1.0;
    return m;
}

Mat3 beta_matrix(const Complex& b, const Complex& lambda) {
    Mat3 m{};
    m[0][0] = 1.0;
    m[0][2] = -1.0;
    m[1][1] = b;
    m[2][0] = 1.0 / lambda;
    m[2][2] = -1.0;
    return m;
}

Mat3 gamma_matrix(const Complex& g, const Complex& lambda) {
    Mat3 m{};
    m[0][2] = lambda;
    m[1][1] = g;
    m[2][0] = 1.0;
    return m;
}

Mat3 iota_matrix(int nu) {
    Mat3 m{};
    m[0][0] = 1.0;
    m[1][1] = ipow(nu);
    m[2][2] = 1.0;
    return m;
}

} // namespace

Mat3 aut_matrix(AutName a, const CurveParams& cp) {
    switch (a) {
        case AutName::One: return iota_matrix(0);
        case AutName::MinusOne: return iota_matrix(2);
        case AutName::C: return iota_matrix(1);
        case AutName::MinusC: return iota_matrix(3);
        case AutName::Sigma: return alpha_matrix(cp.zeta, cp.lambda);
        case AutName::MinusSigma: return alpha_matrix(-cp.zeta, cp.lambda);
        case AutName::K: return alpha_matrix(kI * cp.zeta, cp.lambda);
        case AutName::MinusK: return alpha_matrix(-kI * cp.zeta, cp.lambda);
        case AutName::Rho: return beta_matrix(cp.xi, cp.lambda);
        case AutName::MinusRho: return beta_matrix(-cp.xi, cp.lambda);
        case AutName::I: return beta_matrix(kI * cp.xi, cp.lambda);
        case AutName::MinusI: return beta_matrix(-kI * cp.xi, cp.lambda);
        case AutName::Tau: return gamma_matrix(cp.eta, cp.lambda);
        case AutName::MinusTau: return gamma_matrix(-cp.eta, cp.lambda);
        case AutName::J: return gamma_matrix(kI * cp.eta, cp.lambda);
        case AutName::MinusJ: return gamma_matrix(-kI * cp.eta, cp.lambda);
    }
    return mat3_identity();
}

ProjPoint2 apply_aut(AutName a, const CurveParams& cp, const ProjPoint2& p) {
    if (!on_curve_w(cp, p, 1e-6))
        throw OffCurve("apply_aut: point is not on the quartic");
    const Mat3 m = aut_matrix(a, cp);
    return apply(m, p);
}

AutName involution_aut(Involution v) {
    switch (v) {
        case Involution::Sigma: return AutName::Sigma;
        case Involution::MinusSigma: return AutName::MinusSigma;
        case Involution::Rho: return AutName::Rho;
        case Involution::MinusRho: return AutName::MinusRho;
        case Involution::Tau: return AutName::Tau;
        case Involution::MinusTau: return AutName::MinusTau;
    }
    return AutName::Sigma;
}

std::string involution_str(Involution v) { return aut_name_str(involution_aut(v)); }

// ---------------------------------------------------------------------------
// Quotient maps kappa.
// ---------------------------------------------------------------------------

namespace {

// Pick whichever chart is better conditioned; the charts agree projectively
// wherever both are nonzero.
ProjPoint2 better_chart(const ProjPoint2& a, const ProjPoint2& b) {
    return max_mod(a) >= max_mod(b) ? a : b;
}

} // namespace

ProjPoint2 kappa(Involution v, const CurveParams& cp, const ProjPoint2& point) {
    if (!on_curve_w(cp, point, 1e-6))
        throw OffCurve("kappa: point is not on the quartic");
    const ProjPoint2 p = normalized(point);
    const Complex one(1.0, 0.0);
    const Complex& la = cp.lambda;
    const Complex X = p.X, Y = p.Y, Z = p.Z;
    ProjPoint2 main{}, overlap{};
    switch (v) {
        case Involution::Sigma:
        case Involution::MinusSigma: {
            const Complex zc = v == Involution::Sigma ? cp.zeta : -cp.zeta;
            const Complex om = v == Involution::Sigma ? cp.omega_sigma : cp.omega_neg_sigma;
            main = {-(one - zc) * Y * Y, om * Y * (X - (one - zc) * Z), X * (X - la * Z)};
            overlap = {-(one - zc) * Y * Z * (X - Z),
                       om * (X - (one - zc) * Z) * Z * (X - Z), Y * Y * Y};
            break;
        }
        case Involution::Rho:
        case Involution::MinusRho: {
            const Complex xc = v == Involution::Rho ? cp.xi : -cp.xi;
            const Complex om = v == Involution::Rho ? cp.omega_rho : cp.omega_neg_rho;
            main = {-om * om * Y * Y, om * Y * (X - Z / (one + xc)), X * (X - Z)};
            overlap = {-om * om * Y * (X - la * Z) * Z,
                       om * (X - Z / (one + xc)) * (X - la * Z) * Z, Y * Y * Y};
            break;
        }
        case Involution::Tau:
        case Involution::MinusTau: {
            const Complex ec = v == Involution::Tau ? cp.eta : -cp.eta;
            const Complex om = v == Involution::Tau ? cp.omega_tau : cp.omega_neg_tau;
            const Complex front = kI / (one + ec);
            main = {front * Y * Y, om * Y * (X + ec * Z), X * Z};
            overlap = {front * Y * (X - Z) * (X - la * Z),
                       om * (X + ec * Z) * (X - Z) * (X - la * Z), Y * Y * Y};
            break;
        }
    }
    return better_chart(main, overlap);
}

std::array<ProjPoint2, 4> involution_fixed_points(Involution v, const CurveParams& cp) {
    const Complex one(1.0, 0.0);
    Complex X, Z;
    switch (v) {
        case Involution::Sigma:
        case Involution::MinusSigma: {
            const Complex zc = v == Involution::Sigma ? cp.zeta : -cp.zeta;
            Z = one / std::sqrt(zc * (one + zc));
            X = (one + zc) * Z;
            break;
        }
        case Involution::Rho:
        case Involution::MinusRho: {
            const Complex xc = v == Involution::Rho ? cp.xi : -cp.xi;
            X = std::pow((one + xc) / (xc * xc * (one - xc)), 0.25);
            Z = (one - xc) * X;
            break;
        }
        case Involution::Tau:
        case Involution::MinusTau: {
            const Complex ec = v == Involution::Tau ? cp.eta : -cp.eta;
            Z = one / std::sqrt(kI * ec * (ec - one));
            X = ec * Z;
            break;
        }
    }
    std::array<ProjPoint2, 4> pts;
    for (int nu = 0; nu < 4; ++nu) pts[nu] = {X, ipow(nu), Z};
    return pts;
}

ProjPoint2 rot_c_proj(const ProjPoint2& p) { return {-p.X, kI * p.Y, p.Z}; }

std::array<ProjPoint2, 4> critical_values(Involution v, const CurveParams& cp) {
    const Complex one(1.0, 0.0);
    ProjPoint2 rep;
    switch (v) {
        case Involution::Sigma:
            rep = {-cp.lambda, 2.0 * std::sqrt(cp.zeta * cp.lambda),
                   (one + cp.zeta) * (one + cp.zeta)};
            break;
        case Involution::MinusSigma:
            rep = {cp.lambda, 2.0 * std::sqrt(cp.zeta * cp.lambda),
                   (one - cp.zeta) * (one - cp.zeta)};
            break;
        case Involution::Rho:
            rep = {cp.xi - one, 2.0 * cp.eta * (one - cp.xi) * std::sqrt(cp.xi), one + cp.xi};
            break;
        case Involution::MinusRho:
            rep = {cp.xi + one, 2.0 * cp.eta * (one + cp.xi) * std::sqrt(cp.xi), one - cp.xi};
            break;
        case Involution::Tau:
            rep = {one - cp.eta,
                   2.0 * std::sqrt(cp.eta) * std::sqrt((cp.eta - one) / (cp.eta + one)),
                   cp.eta + one};
            break;
        case Involution::MinusTau:
            rep = {one + cp.eta,
                   2.0 * std::sqrt(cp.eta) * std::sqrt((cp.eta + one) / (cp.eta - one)),
                   cp.eta - one};
            break;
    }
    std::array<ProjPoint2, 4> orbit;
    orbit[0] = rep;
    for (int k = 1; k < 4; ++k) orbit[k] = rot_c_proj(orbit[k - 1]);
    return orbit;
}

EPoint to_affine_e(const ProjPoint2& p) {
    const ProjPoint2 n = normalized(p);
    if (std::abs(n.Z) < 1e-10) return EPoint::O();
    return EPoint::affine(n.X / n.Z, n.Y / n.Z);
}

ProjPoint2 quotient_to_e_lambda(const ProjPoint2& p) {
    const ProjPoint2 n = normalized(p);
    if (std::abs(n.Z) < 1e-14) return {Complex(0.0), Complex(1.0), Complex(0.0)};
    return {n.X * n.Z, n.Y * n.Y, n.Z * n.Z};
}

// ---------------------------------------------------------------------------
// Parameter changes.
// ---------------------------------------------------------------------------

Mat3 iso_matrix(IsoName name, const CurveParams& cp) {
    Mat3 m{};
    if (name == IsoName::Phi1) {
        m[0][2] = 1.0;
        m[1][1] = cp.mu1;
        m[2][0] = 1.0;
    } else {
        m[0][0] = -1.0;
        m[0][2] = 1.0;
        m[1][1] = cp.zeta8;
        m[2][2] = 1.0;
    }
    return m;
}

ProjPoint2 iso_phi(IsoName name, const CurveParams& cp, const ProjPoint2& p) {
    if (!on_curve_w(cp, p, 1e-6))
        throw OffCurve("iso_phi: point is not on the quartic");
    const Mat3 m = iso_matrix(name, cp);
    return apply(m, p);
}

CurveParams transported_params_phi1(const CurveParams& cp) {
    return make_params_with_roots(1.0 / cp.lambda, cp.xi, cp.zeta, cp.eta / cp.lambda);
}

CurveParams transported_params_phi2(const CurveParams& cp) {
    return make_params_with_roots(1.0 - cp.lambda, cp.eta,
                                  -cp.lambda * cp.xi / (1.0 - cp.lambda), cp.zeta);
}

// ---------------------------------------------------------------------------
// Sampling and verification.
// ---------------------------------------------------------------------------

std::vector<ProjPoint2> sample_points(const CurveParams& cp, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto u01 = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    std::vector<ProjPoint2> out;
    while (static_cast<int>(out.size()) < count) {
        const Complex X(-2.0 + 4.0 * u01(), -2.0 + 4.0 * u01());
        if (std::abs(X) < 0.1 || std::abs(X - 1.0) < 0.1 || std::abs(X - cp.lambda) < 0.1)
            continue;
        const Complex w = X * (X - 1.0) * (X - cp.lambda);
        const int k = static_cast<int>(rng() & 3);
        const Complex Y = ipow(k) * std::pow(w, 0.25);
        out.push_back({X, Y, Complex(1.0, 0.0)});
    }
    return out;
}

namespace {

// Cayley table of the 16 matrices under projective equality; index into
// all_aut_names(), or -1 when a product escapes the set.
std::array<std::array<int, 16>, 16> cayley_table(const std::array<Mat3, 16>& mats,
                                                 double tol) {
    std::array<std::array<int, 16>, 16> table{};
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j) {
            const Mat3 prod = mat3_mul(mats[i], mats[j]);
            int found = -1;
            for (int k = 0; k < 16; ++k)
                if (mat3_proj_eq(prod, mats[k], tol)) {
                    if (found != -1) {
                        found = -2; // ambiguous match
                        break;
                    }
                    found = k;
                }
            table[i][j] = found;
        }
    return table;
}

int table_order(const std::array<std::array<int, 16>, 16>& table, int g) {
    int cur = g;
    for (int k = 1; k <= 16; ++k) {
        if (cur == 0) return k;
        cur = table[cur][g];
        if (cur < 0) return -1;
    }
    return -1;
}

} // namespace

VerifyReport verify_identities(const Complex& lambda, int samples, std::uint64_t seed,
                               double tol) {
    VerifyReport rep;
    const CurveParams cp = make_params(lambda);
    const auto pts = sample_points(cp, samples, seed);

    std::array<Mat3, 16> mats;
    for (int i = 0; i < 16; ++i) mats[i] = aut_matrix(all_aut_names()[i], cp);

    // (a) every automorphism maps curve points to curve points
    bool a_ok = true;
    for (const auto& p : pts) {
        if (!on_curve_w(cp, p, tol)) a_ok = false;
        for (const auto& m : mats)
            if (!on_curve_w(cp, apply(m, p), tol)) a_ok = false;
    }
    rep.checks.emplace_back("automorphisms_preserve_curve", a_ok);

    // (b) the 16 matrices close under composition with orders 1:1, 2:7, 4:8
    const auto table = cayley_table(mats, tol);
    bool b_ok = true;
    for (const auto& row : table)
        for (int e : row)
            if (e < 0) b_ok = false;
    if (b_ok) {
        std::map<int, int> hist;
        for (int g = 0; g < 16; ++g) {
            const int ord = table_order(table, g);
            if (ord <= 0) b_ok = false;
            ++hist[ord];
        }
        const std::map<int, int> expected{{1, 1}, {2, 7}, {4, 8}};
        if (hist != expected) b_ok = false;
    }
    rep.checks.emplace_back("group_closure_and_orders", b_ok);

    // (c) the quarter turn c commutes with everything
    bool c_ok = b_ok;
    if (b_ok) {
        const int c_idx = 2;
        for (int j = 0; j < 16; ++j)
            if (table[c_idx][j] != table[j][c_idx]) c_ok = false;
    }
    rep.checks.emplace_back("center_contains_quarter_turn", c_ok);

    // (d) dichotomy of squares in the alpha family
    bool d_ok = true;
    {
        const Mat3 s2 = mat3_mul(mats[4], mats[4]);   // sigma^2
        const Mat3 k2 = mat3_mul(mats[6], mats[6]);   // k^2
        if (!mat3_proj_eq(s2, mats[0], tol)) d_ok = false;
        if (!mat3_proj_eq(k2, mats[1], tol)) d_ok = false;
        if (mat3_proj_eq(k2, mats[0], tol)) d_ok = false;
    }
    rep.checks.emplace_back("square_dichotomy", d_ok);

    // (e) each kappa is invariant under its involution and lands on the
    //     square-lattice curve
    bool e_ok = true;
    for (const Involution v : {Involution::Sigma, Involution::MinusSigma, Involution::Rho,
                               Involution::MinusRho, Involution::Tau, Involution::MinusTau}) {
        const Mat3 m = aut_matrix(involution_aut(v), cp);
        for (const auto& p : pts) {
            const ProjPoint2 q = kappa(v, cp, p);
            if (!on_curve_e_proj(q, tol)) e_ok = false;
            if (!proj_eq(kappa(v, cp, apply(m, p)), q, tol)) e_ok = false;
        }
    }
    rep.checks.emplace_back("involution_quotients_land_on_base", e_ok);

    // (f) the degree-2 quotient lands on the intermediate curve
    bool f_ok = true;
    for (const auto& p : pts)
        if (!on_curve_e_lambda(cp, quotient_to_e_lambda(p), tol)) f_ok = false;
    rep.checks.emplace_back("degree_two_quotient_on_intermediate", f_ok);

    // (g) conjugating by the parameter changes permutes the involutions
    bool g_ok = true;
    {
        const CurveParams tp1 = transported_params_phi1(cp);
        const CurveParams tp2 = transported_params_phi2(cp);
        const Mat3 phi1 = iso_matrix(IsoName::Phi1, cp);
        const Mat3 phi2 = iso_matrix(IsoName::Phi2, cp);
        const auto conj = [](const Mat3& phi, const Mat3& m) {
            return mat3_mul(mat3_adjugate(phi), mat3_mul(m, phi));
        };
        const std::array<std::pair<AutName, AutName>, 3> phi1_pairs = {
            std::pair{AutName::Sigma, AutName::MinusRho},
            std::pair{AutName::Rho, AutName::MinusSigma},
            std::pair{AutName::Tau, AutName::Tau}};
        for (const auto& [up, down] : phi1_pairs)
            if (!mat3_proj_eq(conj(phi1, aut_matrix(up, tp1)), aut_matrix(down, cp), tol))
                g_ok = false;
        const std::array<std::pair<AutName, AutName>, 3> phi2_pairs = {
            std::pair{AutName::Sigma, AutName::MinusTau},
            std::pair{AutName::Rho, AutName::Rho},
            std::pair{AutName::Tau, AutName::MinusSigma}};
        for (const auto& [up, down] : phi2_pairs)
            if (!mat3_proj_eq(conj(phi2, aut_matrix(up, tp2)), aut_matrix(down, cp), tol))
                g_ok = false;
    }
    rep.checks.emplace_back("parameter_change_conjugations", g_ok);

    // (h) the square built from phi1, the two kappas, and a translation by
    //     the 2-torsion point (0,0) commutes for one fixed power of the turn
    bool h_ok = false;
    {
        const CurveParams cp_inv = make_params(1.0 / lambda);
        const Mat3 phi1 = iso_matrix(IsoName::Phi1, cp);
        const EPoint two_torsion = EPoint::affine(Complex(0.0), Complex(0.0));
        for (int k = 0; k < 4 && !h_ok; ++k) {
            bool all = true;
            for (const auto& p : pts) {
                const EPoint lhs = to_affine_e(kappa(Involution::Sigma, cp_inv, apply(phi1, p)));
                EPoint rhs = to_affine_e(kappa(Involution::MinusRho, cp, p));
                for (int t = 0; t < k; ++t) rhs = rot_c(rhs);
                rhs = ec_add(rhs, two_torsion);
                if (!ec_eq(lhs, rhs, tol)) {
                    all = false;
                    break;
                }
            }
            if (all) {
                h_ok = true;
                rep.commuting_square_power = k;
            }
        }
    }
    rep.checks.emplace_back("commuting_square", h_ok);

    rep.all_passed = std::all_of(rep.checks.begin(), rep.checks.end(),
                                 [](const auto& c) { return c.second; });
    return rep;
}

TheoremReport theorem_check(const Complex& x_t, int n, double tol) {
    TheoremReport rep;
    const LambdaResult lr = lambda_from_torsion(x_t);
    rep.lambda = lr.lambda;
    rep.zeta = lr.zeta;
    const CurveParams cp = make_params(lr.lambda, lr.zeta);

    const auto crit = critical_values(Involution::Sigma, cp);
    std::array<EPoint, 4> q{};
    for (int nu = 0; nu < 4; ++nu) q[nu] = to_affine_e(crit[nu]);

    rep.representative_x_matches = !q[0].infinity && std::abs(q[0].x - x_t) <= tol;

    rep.images_on_curve = true;
    for (int nu = 0; nu < 4; ++nu)
        if (!on_curve_e(q[nu], tol)) rep.images_on_curve = false;

    if (rep.images_on_curve) {
        // The only points fixed by complex multiplication by i are the origin
        // of the group law and (0, 0); n times every critical value must be
        // one of them, the same one across the whole orbit.
        const auto is_inf = [](const EPoint& p) {
            return p.infinity || std::abs(p.x) > 1e8;
        };
        const EPoint two_torsion = EPoint::affine(Complex(0.0), Complex(0.0));
        std::array<EPoint, 4> m{};
        rep.n_multiple_rot_fixed = true;
        for (int nu = 0; nu < 4; ++nu) {
            m[nu] = ec_mul(n, q[nu]);
            if (!is_inf(m[nu]) && !ec_eq(m[nu], two_torsion, tol))
                rep.n_multiple_rot_fixed = false;
        }
        for (int nu = 1; nu < 4; ++nu) {
            const bool same = (is_inf(m[0]) && is_inf(m[nu])) ||
                              (!is_inf(m[0]) && !is_inf(m[nu]) && ec_eq(m[0], m[nu], tol));
            if (!same) rep.n_multiple_rot_fixed = false;
        }
        rep.two_n_kills = true;
        for (int nu = 0; nu < 4; ++nu)
            if (!is_inf(ec_mul(2L * n, q[nu]))) rep.two_n_kills = false;
        for (int nu = 0; nu < 4; ++nu)
            rep.image_orders[nu] = point_order_search(q[nu], 2 * n).value_or(0);
    }

    rep.passed = rep.representative_x_matches && rep.images_on_curve &&
                 rep.n_multiple_rot_fixed && rep.two_n_kills;
    return rep;
}

TheoremReport theorem_check(const TorsionPoint& t, double tol) {
    return theorem_check(t.x, t.order, tol);
}

} // namespace origami
