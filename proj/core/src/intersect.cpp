#include "origami/intersect.hpp"

#include <numeric>
#include <optional>
#include <utility>

#include "origami/errors.hpp"
#include "origami/weierstrass.hpp"

namespace origami {

namespace {

int mod(int x, int n) { return ((x % n) + n) % n; }

bool is_two_torsion(const GridPoint& p) {
    return mod(2 * p.a, p.n) == 0 && mod(2 * p.b, p.n) == 0;
}

bool in_triangle_wedge(const GridPoint& p) {
    return 0 < p.b && p.b < p.a && 2 * p.a < p.n;
}

} // namespace

GridPoint make_grid_point(int a, int b, int n) {
    if (n <= 0) throw ParseError("grid size must be positive");
    return {mod(a, n), mod(b, n), n};
}

GridPoint rotate90(const GridPoint& p) { return make_grid_point(-p.b, p.a, p.n); }

MarkedQuadruple marked_quadruple(const GridPoint& p) {
    const GridPoint P = make_grid_point(p.a, p.b, p.n);
    if (is_two_torsion(P))
        throw TwoTorsionInput("the quarter-turn orbit of a 2-torsion point collapses");
    const GridPoint Q = rotate90(P);
    const GridPoint R = rotate90(Q);
    const GridPoint S = rotate90(R);
    return {P, Q, R, S};
}

std::string case_kind_str(CaseKind c) {
    switch (c) {
        case CaseKind::Case1: return "case1";
        case CaseKind::Case2: return "case2";
        case CaseKind::Case3: return "case3";
        case CaseKind::Case4: return "case4";
        case CaseKind::Case5: return "case5";
    }
    return "?";
}

CaseKind classify_case(const GridPoint& gp) {
    const GridPoint p = make_grid_point(gp.a, gp.b, gp.n);
    if (is_two_torsion(p)) throw TwoTorsionInput("2-torsion points are not classified");
    const int n = p.n, a = p.a, b = p.b;
    if (a == b || mod(a + b, n) == 0) return CaseKind::Case3;
    if (a == 0 || b == 0) return CaseKind::Case4;
    if (mod(2 * a, n) == 0 || mod(2 * b, n) == 0) return CaseKind::Case5;
    const bool d1 = 0 < b && b < a && 2 * a < n;
    const bool d3 = 2 * a > n && a + b > n && 2 * b < n;
    const bool d5 = 2 * a > n && b > a;
    const bool d7 = 2 * a < n && 2 * b > n && a + b < n;
    return (d1 || d3 || d5 || d7) ? CaseKind::Case1 : CaseKind::Case2;
}

EdgeLabeling empty_labeling(int n) {
    if (n <= 0) throw ParseError("grid size must be positive");
    EdgeLabeling el;
    el.n = n;
    el.vlabel.assign(n, std::vector<std::uint8_t>(n, 0));
    el.hlabel.assign(n, std::vector<std::uint8_t>(n, 0));
    return el;
}

std::vector<GridPoint> branch_set(const EdgeLabeling& el) {
    const int n = el.n;
    std::vector<GridPoint> out;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int sum = el.vlabel[x][mod(y - 1, n)] + el.vlabel[x][y] +
                            el.hlabel[mod(x - 1, n)][y] + el.hlabel[x][y];
            if (sum % 2 == 1) out.push_back({x, y, n});
        }
    return out;
}

Origami cover_from_labeling(const EdgeLabeling& el) {
    const int n = el.n;
    if (n <= 0) throw ParseError("labeling has no grid");
    const int sheet = n * n;
    std::vector<int> h(2 * sheet), v(2 * sheet);
    for (int leaf = 0; leaf < 2; ++leaf)
        for (int y = 0; y < n; ++y)
            for (int x = 0; x < n; ++x) {
                const int idx = leaf * sheet + y * n + x;
                const int xr = (x + 1) % n;
                const int hl = leaf ^ el.vlabel[xr][y];
                h[idx] = hl * sheet + y * n + xr;
                const int yu = (y + 1) % n;
                const int vl = leaf ^ el.hlabel[x][yu];
                v[idx] = vl * sheet + yu * n + x;
            }
    Permutation hp{std::move(h)}, vp{std::move(v)};
    if (!is_transitive(hp, vp))
        throw Disconnected("labeling monodromy does not join the two leaves");
    return make_origami(std::move(hp), std::move(vp));
}

EdgeLabeling case1_labeling(const GridPoint& gp) {
    GridPoint p = make_grid_point(gp.a, gp.b, gp.n);
    const int n = p.n;
    bool found = false;
    for (int k = 0; k < 4 && !found; ++k) {
        if (in_triangle_wedge(p))
            found = true;
        else
            p = rotate90(p);
    }
    if (!found) throw WrongCase("orbit does not meet the open triangle 0 < b < a < n/2");
    const int a = p.a, b = p.b;
    EdgeLabeling el = empty_labeling(n);
    const auto flip_h = [&](int x, int y) { el.hlabel[mod(x, n)][mod(y, n)] ^= 1; };
    const auto flip_v = [&](int x, int y) { el.vlabel[mod(x, n)][mod(y, n)] ^= 1; };
    for (int x = a; x < n - b; ++x) flip_h(x, b);          // from the point to the right corner line
    for (int x = n - b; x < n + b; ++x) flip_h(x, b);      // wrap along the bottom corner line
    for (int y = a; y < n - b; ++y) flip_v(n - b, y);      // up the right corner line
    for (int x = n - a; x < n - b; ++x) flip_h(x, n - b);  // along the top corner line
    for (int y = n - a; y < n + b; ++y) flip_v(b, y);      // wrap up the left corner line
    return el;
}

std::vector<AffineAuto> quarter_turn_lifts(const Origami& cover, int n) {
    if (cover.size() != 2 * n * n)
        throw ParseError("cover size does not match the grid");
    std::vector<AffineAuto> lifts;
    for (const auto& c : affine_autos(cover, Derivative::S)) {
        bool over_rotation = true;
        for (int idx = 0; idx < cover.size() && over_rotation; ++idx) {
            const int x = idx % n;
            const int y = (idx / n) % n;
            const int im = c.pi(idx);
            if (im % n != mod(n - 1 - y, n) || (im / n) % n != x) over_rotation = false;
        }
        if (over_rotation) lifts.push_back(c);
    }
    return lifts;
}

namespace {

// Path along grid edges from u to v: rightward run, then upward run.
void xor_l_path(EdgeLabeling& el, const GridPoint& u, const GridPoint& v) {
    const int n = el.n;
    for (int x = u.a; x % n != v.a; ++x) el.hlabel[x % n][u.b] ^= 1;
    for (int y = u.b; y % n != v.b; ++y) el.vlabel[v.a][y % n] ^= 1;
}

bool has_four_point_lift(const Origami& cand, int n) {
    for (const auto& lift : quarter_turn_lifts(cand, n)) {
        if (fixed_points(cand, lift).total() == 4 &&
            fixed_points(cand, compose(lift, lift)).total() == 4)
            return true;
    }
    return false;
}

} // namespace

Origami construct_D(const GridPoint& gp) {
    const MarkedQuadruple quad = marked_quadruple(gp);
    const int n = quad.P.n;

    EdgeLabeling base = empty_labeling(n);
    xor_l_path(base, quad.P, quad.Q);
    xor_l_path(base, quad.R, quad.S);

    std::vector<Origami> passers;
    for (int add_row = 0; add_row < 2; ++add_row)
        for (int add_col = 0; add_col < 2; ++add_col) {
            EdgeLabeling el = base;
            if (add_row)
                for (int x = 0; x < n; ++x) el.hlabel[x][0] ^= 1;
            if (add_col)
                for (int y = 0; y < n; ++y) el.vlabel[0][y] ^= 1;
            std::optional<Origami> cand;
            try {
                cand = cover_from_labeling(el);
            } catch (const Disconnected&) {
                continue;
            }
            if (has_four_point_lift(*cand, n)) passers.push_back(std::move(*cand));
        }

    if (passers.size() != 1)
        throw UniquenessViolated("expected exactly one holonomy class with a four-point lift, got " +
                                 std::to_string(passers.size()));
    Origami d = std::move(passers.front());
    d.name = "D(" + std::to_string(quad.P.a) + "," + std::to_string(quad.P.b) + ";" +
             std::to_string(n) + ")";
    return d;
}

IntersectionCertificate pipeline(const GridPoint& gp) {
    const GridPoint p = make_grid_point(gp.a, gp.b, gp.n);
    Origami d = construct_D(p);

    const int order = p.n / std::gcd(std::gcd(p.a, p.b), p.n);
    const EPoint t = weierstrass_bridge(p.a, p.b, p.n);
    const TheoremReport theorem = theorem_check(t.x, order);
    const auto found_order = point_order_search(t, 2 * order);
    const bool order_ok = found_order.has_value() && *found_order == order;

    return IntersectionCertificate{p.n,           p,       order, theorem.lambda,
                                   theorem,       theorem.passed && order_ok,
                                   std::move(d)};
}

} // namespace origami
