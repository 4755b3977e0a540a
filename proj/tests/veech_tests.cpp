#include <doctest.h>

#include <algorithm>
#include <array>
#include <functional>
#include <initializer_list>
#include <random>
#include <vector>

#include "origami/origami.hpp"
#include "origami/veech.hpp"

#include "test_util.hpp"

using namespace origami;

namespace {

Sl2Word word(std::initializer_list<Sl2Letter> ls) {
    Sl2Word w;
    w.letters = ls;
    return w;
}

bool literally_equal(const Origami& a, const Origami& b) {
    return a.h == b.h && a.v == b.v;
}

} // namespace

TEST_CASE("letter actions and matrices") {
    const Origami w = quaternion_origami();
    const Origami s = act(Sl2Letter::S, w);
    CHECK(s.h == w.v);
    CHECK(s.v == w.h.inverse());
    const Origami t = act(Sl2Letter::T, w);
    CHECK(t.h == w.h);
    CHECK(t.v == w.v * w.h.inverse());
    const Origami ti = act(Sl2Letter::TInv, w);
    CHECK(ti.v == w.v * w.h);

    CHECK(letter_matrix(Sl2Letter::S) == Mat2{0, -1, 1, 0});
    CHECK(letter_matrix(Sl2Letter::T) == Mat2{1, 1, 0, 1});

    // Word matrix multiplies letters left to right.
    const Sl2Word st = word({Sl2Letter::S, Sl2Letter::T});
    CHECK(st.matrix() == letter_matrix(Sl2Letter::S) * letter_matrix(Sl2Letter::T));
    CHECK(st.matrix() == Mat2{0, -1, 1, 1});

    // The action applies the rightmost letter first.
    CHECK(literally_equal(act(st, w), act(Sl2Letter::S, act(Sl2Letter::T, w))));

    CHECK(st.inverse().matrix() * st.matrix() == Mat2{});
    CHECK(st.str() == "S T");
    CHECK(Sl2Word{}.str() == "1");
}

TEST_CASE("defining relations hold on a random corpus") {
    std::mt19937_64 rng(7);
    const Sl2Word s4 = word({Sl2Letter::S, Sl2Letter::S, Sl2Letter::S, Sl2Letter::S});
    Sl2Word st6;
    for (int k = 0; k < 6; ++k) {
        st6.letters.push_back(Sl2Letter::S);
        st6.letters.push_back(Sl2Letter::T);
    }
    const Sl2Word s2 = word({Sl2Letter::S, Sl2Letter::S});

    for (int trial = 0; trial < 20; ++trial) {
        const Origami o = testing::random_origami(rng, 4 + static_cast<int>(rng() % 5));
        CHECK(literally_equal(act(s4, o), o));
        CHECK(literally_equal(act(st6, o), o));

        // The half turn is central up to isomorphism.
        Sl2Word wrd;
        for (int k = 0; k < 5; ++k)
            wrd.letters.push_back(static_cast<Sl2Letter>(rng() % 4));
        Sl2Word left = s2, right = wrd;
        left.letters.insert(left.letters.end(), wrd.letters.begin(), wrd.letters.end());
        right.letters.insert(right.letters.end(), s2.letters.begin(), s2.letters.end());
        CHECK(is_isomorphic(act(left, o), act(right, o)));
    }
}

TEST_CASE("orbit of the quaternion origami is a single point") {
    const auto r = veech_group(quaternion_origami());
    CHECK(r.index == 1);
    CHECK(r.cusp_widths == std::vector<int>{1});
    CHECK(cusp_count(r) == 1);
    REQUIRE(r.coset_table.size() == 1);
    CHECK(r.coset_table[0] == std::array<int, 2>{0, 0});
    CHECK(!r.generators.empty());
    for (const auto& g : r.generators) {
        CHECK(g.matrix.a * g.matrix.d - g.matrix.b * g.matrix.c == 1);
        CHECK(is_isomorphic(act(g.word, quaternion_origami()), quaternion_origami()));
    }
}

TEST_CASE("torus grids have the full group") {
    for (int n = 1; n <= 4; ++n) {
        const auto r = veech_group(torus_grid(n));
        CHECK(r.index == 1);
        CHECK(r.cusp_widths == std::vector<int>{1});
    }
}

TEST_CASE("three-square orbits") {
    // h=(0 1), v=(0 2): genus 2 with one cone point.
    const Origami a = make_origami(Permutation::from_cycles(3, {{0, 1}}),
                                   Permutation::from_cycles(3, {{0, 2}}));
    CHECK(genus(a) == 2);
    CHECK(stratum(a) == std::vector<int>{2});
    const auto ra = veech_group(a);
    CHECK(ra.index == 3);
    CHECK(ra.cusp_widths == std::vector<int>{2, 1});

    // h=(0 1 2), v=(0 2) lies in the same orbit.
    const Origami b = make_origami(Permutation::from_cycles(3, {{0, 1, 2}}),
                                   Permutation::from_cycles(3, {{0, 2}}));
    const auto rb = veech_group(b);
    CHECK(rb.index == 3);
    CHECK(rb.cusp_widths == std::vector<int>{2, 1});
    bool found = false;
    for (const auto& rep : ra.orbit)
        if (is_isomorphic(rep, b)) found = true;
    CHECK(found);
}

TEST_CASE("coset table is consistent with the orbit") {
    const Origami a = make_origami(Permutation::from_cycles(3, {{0, 1}}),
                                   Permutation::from_cycles(3, {{0, 2}}));
    const auto r = veech_group(a);
    REQUIRE(static_cast<int>(r.coset_table.size()) == r.index);
    REQUIRE(static_cast<int>(r.orbit.size()) == r.index);
    for (int i = 0; i < r.index; ++i) {
        CHECK(is_isomorphic(act(Sl2Letter::S, r.orbit[i]), r.orbit[r.coset_table[i][0]]));
        CHECK(is_isomorphic(act(Sl2Letter::T, r.orbit[i]), r.orbit[r.coset_table[i][1]]));
    }

    // Cusp widths are the cycle lengths of the shear column.
    std::vector<int> widths;
    std::vector<char> seen(r.index, 0);
    for (int i = 0; i < r.index; ++i) {
        if (seen[i]) continue;
        int len = 0, cur = i;
        while (!seen[cur]) {
            seen[cur] = 1;
            ++len;
            cur = r.coset_table[cur][1];
        }
        widths.push_back(len);
    }
    std::sort(widths.begin(), widths.end(), std::greater<int>());
    CHECK(widths == r.cusp_widths);
}

TEST_CASE("pair scan characterizes the quaternion origami") {
    const auto rep = verify_characteristic_W();
    CHECK(rep.candidate_pairs == 36);
    CHECK(rep.epimorphisms == 24);
    CHECK(rep.covers_isomorphic == 24);
    CHECK(rep.all_covers_match);
}
