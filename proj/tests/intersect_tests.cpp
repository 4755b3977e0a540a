#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "origami/errors.hpp"
#include "origami/intersect.hpp"

using namespace origami;

namespace {

std::set<std::pair<int, int>> point_set(const std::vector<GridPoint>& pts) {
    std::set<std::pair<int, int>> s;
    for (const auto& p : pts) s.insert({p.a, p.b});
    return s;
}

} // namespace

TEST_CASE("grid points reduce modulo the grid size") {
    const GridPoint p = make_grid_point(7, -3, 5);
    CHECK(p.a == 2);
    CHECK(p.b == 2);
    CHECK(p.n == 5);
    CHECK(make_grid_point(5, 10, 5) == make_grid_point(0, 0, 5));
    CHECK_THROWS_AS(make_grid_point(1, 1, 0), ParseError);
    CHECK_THROWS_AS(make_grid_point(1, 1, -4), ParseError);
}

TEST_CASE("quarter turn has period four") {
    const GridPoint p = make_grid_point(2, 1, 5);
    CHECK(rotate90(p) == make_grid_point(-1, 2, 5));
    GridPoint q = p;
    for (int k = 0; k < 4; ++k) q = rotate90(q);
    CHECK(q == p);
}

TEST_CASE("marked quadruple is the rotation orbit") {
    const MarkedQuadruple quad = marked_quadruple(make_grid_point(2, 1, 5));
    const auto pts = quad.points();
    CHECK(pts[0] == make_grid_point(2, 1, 5));
    CHECK(pts[1] == rotate90(pts[0]));
    CHECK(pts[2] == rotate90(pts[1]));
    CHECK(pts[3] == rotate90(pts[2]));
    std::set<std::pair<int, int>> distinct = point_set({pts.begin(), pts.end()});
    CHECK(distinct.size() == 4);
}

TEST_CASE("half-lattice points are rejected") {
    for (int n = 3; n <= 8; ++n)
        CHECK_THROWS_AS(marked_quadruple(make_grid_point(0, 0, n)), TwoTorsionInput);
    CHECK_THROWS_AS(marked_quadruple(make_grid_point(2, 0, 4)), TwoTorsionInput);
    CHECK_THROWS_AS(marked_quadruple(make_grid_point(0, 2, 4)), TwoTorsionInput);
    CHECK_THROWS_AS(marked_quadruple(make_grid_point(2, 2, 4)), TwoTorsionInput);
    CHECK_NOTHROW(marked_quadruple(make_grid_point(1, 0, 4)));
}

TEST_CASE("position classification against the symmetry lines") {
    CHECK(classify_case(make_grid_point(2, 1, 5)) == CaseKind::Case1);
    CHECK(classify_case(make_grid_point(1, 2, 5)) == CaseKind::Case2);
    CHECK(classify_case(make_grid_point(1, 1, 5)) == CaseKind::Case3);
    CHECK(classify_case(make_grid_point(1, 4, 5)) == CaseKind::Case3); // anti-diagonal
    CHECK(classify_case(make_grid_point(1, 0, 5)) == CaseKind::Case4);
    CHECK(classify_case(make_grid_point(0, 3, 7)) == CaseKind::Case4);
    CHECK(classify_case(make_grid_point(3, 1, 6)) == CaseKind::Case5); // 2a = 0 mod 6
    CHECK(classify_case(make_grid_point(1, 3, 6)) == CaseKind::Case5);
    CHECK(case_kind_str(CaseKind::Case1) != case_kind_str(CaseKind::Case2));
    std::set<std::string> names;
    for (CaseKind c : {CaseKind::Case1, CaseKind::Case2, CaseKind::Case3,
                       CaseKind::Case4, CaseKind::Case5})
        names.insert(case_kind_str(c));
    CHECK(names.size() == 5);
}

TEST_CASE("edge labelings and their branch sets") {
    const EdgeLabeling empty = empty_labeling(4);
    CHECK(empty.n == 4);
    CHECK(branch_set(empty).empty());
    CHECK_THROWS_AS(cover_from_labeling(empty), Disconnected);

    const GridPoint p = make_grid_point(2, 1, 5);
    const EdgeLabeling el = case1_labeling(p);
    const auto branches = branch_set(el);
    REQUIRE(branches.size() == 4);
    const auto quad = marked_quadruple(p).points();
    CHECK(point_set(branches) == point_set({quad.begin(), quad.end()}));

    const Origami cover = cover_from_labeling(el);
    CHECK(cover.size() == 50);
    CHECK(genus(cover) == 3);
}

TEST_CASE("explicit labeling requires the fundamental triangle") {
    CHECK_NOTHROW(case1_labeling(make_grid_point(2, 1, 5)));
    // Rotating into the triangle is handled internally.
    CHECK_NOTHROW(case1_labeling(rotate90(make_grid_point(2, 1, 5))));
    CHECK_THROWS_AS(case1_labeling(make_grid_point(1, 1, 5)), WrongCase);
    CHECK_THROWS_AS(case1_labeling(make_grid_point(1, 0, 5)), WrongCase);
    CHECK_THROWS_AS(case1_labeling(make_grid_point(1, 2, 5)), WrongCase);
}

TEST_CASE("quarter-turn lifts act as the rotation downstairs") {
    const int n = 5;
    const Origami d = construct_D(make_grid_point(2, 1, n));
    const auto lifts = quarter_turn_lifts(d, n);
    REQUIRE(!lifts.empty());
    for (const AffineAuto& lift : lifts) {
        CHECK(lift.d == Derivative::S);
        CHECK(is_valid(d, lift));
        for (int s = 0; s < d.size(); ++s) {
            const int x = s % n;
            const int y = (s / n) % n;
            const int im = lift.pi(s);
            CHECK(im % n == (n - 1 - y + n) % n);
            CHECK((im / n) % n == x);
        }
    }
}

TEST_CASE("branched double cover with a symmetric leaf structure") {
    const Origami d = construct_D(make_grid_point(1, 0, 3));
    CHECK(d.size() == 18);
    CHECK(d.name == "D(1,0;3)");
    CHECK(genus(d) == 3);
    CHECK(stratum(d) == std::vector<int>{1, 1, 1, 1});
    CHECK(singularity_profile(d).vertex_count == 14);

    // Swapping the two leaves is a translation of order two.
    std::vector<int> swap_images(d.size());
    for (int s = 0; s < d.size(); ++s) swap_images[s] = (s + 9) % 18;
    const AffineAuto leaf_swap{Permutation(swap_images), Derivative::I};
    CHECK(is_valid(d, leaf_swap));
    CHECK(element_order(leaf_swap) == 2);
}

TEST_CASE("explicit labeling agrees with the holonomy search") {
    for (const GridPoint p : {make_grid_point(2, 1, 5), make_grid_point(3, 1, 7)}) {
        const Origami via_labels = cover_from_labeling(case1_labeling(p));
        const Origami via_search = construct_D(p);
        CHECK(is_isomorphic(via_labels, via_search));
    }
}

TEST_CASE("cover invariants across small grids") {
    for (int n = 3; n <= 6; ++n) {
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                if ((2 * a) % n == 0 && (2 * b) % n == 0) continue;
                const Origami d = construct_D(make_grid_point(a, b, n));
                CHECK(d.size() == 2 * n * n);
                CHECK(genus(d) == 3);
                CHECK(stratum(d) == std::vector<int>{1, 1, 1, 1});
                CHECK(is_transitive(d.h, d.v));
            }
        }
    }
}

TEST_CASE("full certificates for small marked points") {
    const IntersectionCertificate c3 = pipeline(make_grid_point(1, 0, 3));
    CHECK(c3.passed);
    CHECK(c3.n == 3);
    CHECK(c3.torsion_order == 3);
    CHECK(c3.cover.size() == 18);
    CHECK(c3.theorem.passed);
    CHECK(c3.lambda.real() == doctest::Approx(-26.820462).epsilon(1e-6));
    CHECK(std::abs(c3.lambda.imag()) < 1e-9);

    const IntersectionCertificate c4 = pipeline(make_grid_point(1, 0, 4));
    CHECK(c4.passed);
    CHECK(c4.torsion_order == 4);
    const double expected4 = -2.0 - 2.0 * std::sqrt(2.0);
    CHECK(std::abs(c4.lambda - Complex(expected4, 0.0)) < 1e-8);

    const IntersectionCertificate c5 = pipeline(make_grid_point(1, 0, 5));
    CHECK(c5.passed);
    CHECK(c5.torsion_order == 5);

    const IntersectionCertificate c21 = pipeline(make_grid_point(2, 1, 5));
    CHECK(c21.passed);
    CHECK(c21.torsion_order == 5);
    CHECK(c21.point == make_grid_point(2, 1, 5));
}

TEST_CASE("certificates reduce the order by the content of the point") {
    // gcd(2, 0, 4) = 2, so the bridged point has order 4 / 2 = 2... which is
    // two-torsion and must be rejected before any cover is built.
    CHECK_THROWS_AS(pipeline(make_grid_point(2, 0, 4)), TwoTorsionInput);
    // gcd(2, 4, 6) = 2: order three survives.
    const IntersectionCertificate c = pipeline(make_grid_point(2, 4, 6));
    CHECK(c.torsion_order == 3);
    CHECK(c.passed);
}
