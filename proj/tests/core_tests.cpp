#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "origami/errors.hpp"
#include "origami/io.hpp"
#include "origami/origami.hpp"
#include "origami/permutation.hpp"
#include "origami/quaternion.hpp"

#include "test_util.hpp"

using namespace origami;

TEST_CASE("permutation arithmetic") {
    const Permutation p = Permutation::from_cycles(4, {{0, 1, 2}});
    CHECK(p(0) == 1);
    CHECK(p(2) == 0);
    CHECK(p(3) == 3);
    CHECK(p.order() == 3);
    CHECK(p.inverse()(1) == 0);
    CHECK((p * p.inverse()).is_identity());

    // Composition convention: (f * g)(x) = f(g(x)).
    const Permutation f = Permutation::from_cycles(3, {{0, 1}});
    const Permutation g = Permutation::from_cycles(3, {{1, 2}});
    CHECK((f * g)(1) == 2);
    CHECK((f * g)(2) == 0);

    // conjugate(pi, p) = pi p pi^{-1}.
    const Permutation pi = Permutation::from_cycles(4, {{0, 3}});
    const Permutation c = conjugate(pi, p);
    CHECK(c(3) == 1); // 3 -> 0 -> 1 -> 1
    CHECK(c.order() == 3);

    CHECK(Permutation::identity(5).is_identity());
    CHECK_THROWS_AS(Permutation(std::vector<int>{0, 0, 1}), NotBijection);
    CHECK_THROWS_AS(Permutation(std::vector<int>{0, 5, 1}), NotBijection);
}

TEST_CASE("permutation cycles") {
    const Permutation p = Permutation::from_cycles(5, {{0, 2}, {1, 3, 4}});
    const auto cy = p.cycles();
    REQUIRE(cy.size() == 2);
    CHECK(cy[0] == std::vector<int>{0, 2});
    CHECK(cy[1] == std::vector<int>{1, 3, 4});
    CHECK(p.nontrivial_cycles().size() == 2);
    CHECK(Permutation::identity(3).cycles().size() == 3);
    CHECK(Permutation::identity(3).nontrivial_cycles().empty());
}

TEST_CASE("origami construction validates connectivity") {
    CHECK_THROWS_AS(
        make_origami(Permutation::identity(2), Permutation::identity(2)), NotConnected);
    CHECK_THROWS_AS(make_origami(Permutation::from_cycles(4, {{0, 1}}),
                                 Permutation::from_cycles(4, {{2, 3}})),
                    NotConnected);
    CHECK_NOTHROW(make_origami(Permutation::from_cycles(2, {{0, 1}}),
                               Permutation::identity(2)));
}

TEST_CASE("quaternion origami gluings") {
    // Square order (1, i, -1, -i, j, -k, -j, k); right neighbor g*i, top g*j.
    const Origami w = quaternion_origami();
    REQUIRE(w.size() == 8);
    CHECK(w.h.images() == std::vector<int>{1, 2, 3, 0, 5, 6, 7, 4});
    CHECK(w.v.images() == std::vector<int>{4, 7, 6, 5, 2, 1, 0, 3});

    // The same tables straight from the group.
    for (int s = 0; s < 8; ++s) {
        const Quat g = Quat::from_square_index(s);
        CHECK(w.h(s) == (g * Quat::i()).square_index());
        CHECK(w.v(s) == (g * Quat::j()).square_index());
    }
}

TEST_CASE("quaternion origami invariants") {
    const Origami w = quaternion_origami();
    const auto prof = singularity_profile(w);
    CHECK(prof.vertex_count == 4);
    CHECK(stratum(w) == std::vector<int>{1, 1, 1, 1});
    CHECK(genus(w) == 3);

    // Euler count done by hand: V - E + F = V - 2n + n.
    const int euler = static_cast<int>(vertex_cycles(w).size()) - 8;
    CHECK(euler == 2 - 2 * genus(w));

    const auto hcyl = horizontal_cylinders(w);
    REQUIRE(hcyl.size() == 2);
    CHECK(hcyl[0] == Cylinder{4, 1});
    CHECK(hcyl[1] == Cylinder{4, 1});
    const auto vcyl = vertical_cylinders(w);
    REQUIRE(vcyl.size() == 2);
    CHECK(vcyl[0] == Cylinder{4, 1});
    CHECK(vcyl[1] == Cylinder{4, 1});
}

TEST_CASE("torus grids") {
    for (int n = 1; n <= 4; ++n) {
        const Origami t = torus_grid(n);
        CHECK(t.size() == n * n);
        CHECK(genus(t) == 1);
        CHECK(stratum(t).empty());
        CHECK(singularity_profile(t).vertex_count == n * n);
        const auto cyl = horizontal_cylinders(t);
        REQUIRE(cyl.size() == 1);
        CHECK(cyl[0] == Cylinder{n, n});
    }
}

TEST_CASE("canonical form is a relabeling invariant") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const Origami o = testing::random_origami(rng, 4 + static_cast<int>(rng() % 5));
        const int n = o.size();
        std::vector<int> imgs(n);
        for (int i = 0; i < n; ++i) imgs[i] = i;
        std::shuffle(imgs.begin(), imgs.end(), rng);
        const Origami r = relabel(o, Permutation(imgs));

        CHECK(canonical_pair(o) == canonical_pair(r));
        CHECK(is_isomorphic(o, r));

        const Origami c = canonical_form(o);
        CHECK(is_isomorphic(c, o));
        CHECK(canonical_pair(c) == canonical_pair(o));
        CHECK(c.h.images() == canonical_pair(o).first);
        CHECK(c.v.images() == canonical_pair(o).second);
        CHECK(genus(c) == genus(o));
    }
}

TEST_CASE("non-isomorphic surfaces are distinguished") {
    const Origami torus = torus_grid(2);
    const Origami ell = make_origami(Permutation::from_cycles(4, {{0, 1, 2}}),
                                     Permutation::from_cycles(4, {{0, 3}}));
    CHECK(!is_isomorphic(torus, ell));
    CHECK(!is_isomorphic(quaternion_origami(), torus_grid(3))); // both 8 vs 9: size gate
    CHECK(is_isomorphic(torus, torus));
}

TEST_CASE("json round trip") {
    const Origami w = quaternion_origami();
    const Json j = origami_to_json(w);
    CHECK(j["n"] == 8);
    CHECK(j["h"].size() == 8);
    const Origami back = origami_from_json(j);
    CHECK(back.h == w.h);
    CHECK(back.v == w.v);

    CHECK_THROWS_AS(origami_from_json(Json::parse(R"({"n":2,"h":[0,1],"v":[0,1]})")),
                    NotConnected);
    CHECK_THROWS_AS(origami_from_json(Json::parse(R"({"n":2,"h":[0,0],"v":[1,0]})")),
                    NotBijection);
    CHECK_THROWS_AS(origami_from_json(Json::parse(R"({"h":[0,1]})")), ParseError);
}

TEST_CASE("text round trip") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const Origami o = testing::random_origami(rng, 3 + static_cast<int>(rng() % 6));
        const Origami back = origami_from_text(origami_to_text(o));
        CHECK(back.h == o.h);
        CHECK(back.v == o.v);
    }
    const Origami t = origami_from_text("h=(1,2)(3); v=(1,3)(2)");
    CHECK(t.size() == 3);
    CHECK(t.h(0) == 1);
    CHECK(t.v(0) == 2);
    CHECK_THROWS_AS(origami_from_text("h=(1,2"), ParseError);
}
