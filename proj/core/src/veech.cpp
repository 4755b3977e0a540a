#include "origami/veech.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <queue>

#include "origami/errors.hpp"
#include "origami/quaternion.hpp"

namespace origami {

Sl2Letter letter_inverse(Sl2Letter g) {
    switch (g) {
        case Sl2Letter::S: return Sl2Letter::SInv;
        case Sl2Letter::SInv: return Sl2Letter::S;
        case Sl2Letter::T: return Sl2Letter::TInv;
        case Sl2Letter::TInv: return Sl2Letter::T;
    }
    return Sl2Letter::S; // unreachable
}

std::string letter_name(Sl2Letter g) {
    switch (g) {
        case Sl2Letter::S: return "S";
        case Sl2Letter::SInv: return "S^-1";
        case Sl2Letter::T: return "T";
        case Sl2Letter::TInv: return "T^-1";
    }
    return "?";
}

Mat2 operator*(const Mat2& m, const Mat2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

Mat2 letter_matrix(Sl2Letter g) {
    switch (g) {
        case Sl2Letter::S: return {0, -1, 1, 0};
        case Sl2Letter::SInv: return {0, 1, -1, 0};
        case Sl2Letter::T: return {1, 1, 0, 1};
        case Sl2Letter::TInv: return {1, -1, 0, 1};
    }
    return {};
}

Mat2 Sl2Word::matrix() const {
    Mat2 m;
    for (Sl2Letter g : letters) m = m * letter_matrix(g);
    return m;
}

Sl2Word Sl2Word::inverse() const {
    Sl2Word w;
    w.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        w.letters.push_back(letter_inverse(*it));
    return w;
}

std::string Sl2Word::str() const {
    if (letters.empty()) return "1";
    std::string s;
    for (std::size_t k = 0; k < letters.size(); ++k) {
        if (k) s += ' ';
        s += letter_name(letters[k]);
    }
    return s;
}

Origami act(Sl2Letter g, const Origami& o) {
    switch (g) {
        case Sl2Letter::S: return Origami{o.v, o.h.inverse(), o.name};
        case Sl2Letter::SInv: return Origami{o.v.inverse(), o.h, o.name};
        case Sl2Letter::T: return Origami{o.h, o.v * o.h.inverse(), o.name};
        case Sl2Letter::TInv: return Origami{o.h, o.v * o.h, o.name};
    }
    return o; // unreachable
}

Origami act(const Sl2Word& w, const Origami& o) {
    Origami cur = o;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        cur = act(*it, cur);
    return cur;
}

VeechResult veech_group(const Origami& o) {
    using Key = std::pair<std::vector<int>, std::vector<int>>;
    // The two letters act bijectively on the finite orbit of isomorphism
    // classes, so forward closure under S and T alone reaches everything.
    const Sl2Letter gens[2] = {Sl2Letter::S, Sl2Letter::T};

    std::map<Key, int> id_of;
    std::vector<Origami> reps;
    std::vector<Sl2Word> coset_word; // act(coset_word[i], o) lands in class i
    std::vector<std::array<int, 2>> transition;

    const Key root = canonical_pair(o);
    id_of[root] = 0;
    reps.push_back(o);
    coset_word.emplace_back();

    std::queue<int> bfs;
    bfs.push(0);
    while (!bfs.empty()) {
        const int i = bfs.front();
        bfs.pop();
        if (static_cast<int>(transition.size()) <= i) transition.resize(i + 1, {-1, -1});
        for (int gi = 0; gi < 2; ++gi) {
            const Origami img = act(gens[gi], reps[i]);
            const Key key = canonical_pair(img);
            auto [it, inserted] = id_of.try_emplace(key, static_cast<int>(reps.size()));
            if (inserted) {
                reps.push_back(img);
                Sl2Word w;
                w.letters.push_back(gens[gi]);
                w.letters.insert(w.letters.end(), coset_word[i].letters.begin(),
                                 coset_word[i].letters.end());
                coset_word.push_back(std::move(w));
                bfs.push(it->second);
            }
            transition[i][gi] = it->second;
        }
    }

    VeechResult res;
    res.index = static_cast<int>(reps.size());
    res.orbit = std::move(reps);
    transition.resize(res.index, {-1, -1});

    // Schreier generators: u_j^{-1} g u_i whenever g sends coset i to coset j.
    std::vector<Mat2> seen_matrices;
    for (int i = 0; i < res.index; ++i) {
        for (int gi = 0; gi < 2; ++gi) {
            const int j = transition[i][gi];
            Sl2Word w = coset_word[j].inverse();
            w.letters.push_back(gens[gi]);
            w.letters.insert(w.letters.end(), coset_word[i].letters.begin(),
                             coset_word[i].letters.end());
            const Mat2 m = w.matrix();
            if (m == Mat2{}) continue; // trivial Schreier generator
            if (std::find(seen_matrices.begin(), seen_matrices.end(), m) !=
                seen_matrices.end())
                continue;
            seen_matrices.push_back(m);
            res.generators.push_back({std::move(w), m});
        }
    }

    // Cusps: cycles of the shear T on the coset table.
    std::vector<char> done(res.index, 0);
    for (int i = 0; i < res.index; ++i) {
        if (done[i]) continue;
        int len = 0;
        int cur = i;
        while (!done[cur]) {
            done[cur] = 1;
            ++len;
            cur = transition[cur][1];
        }
        res.cusp_widths.push_back(len);
    }
    std::sort(res.cusp_widths.begin(), res.cusp_widths.end(), std::greater<int>());
    res.coset_table = std::move(transition);

    // Each Schreier generator must return the base class to itself.
    for (const VeechGenerator& g : res.generators) {
        if (!is_isomorphic(act(g.word, o), o))
            throw RelationViolated("stabilizer generator " + g.word.str() +
                                   " moves the base surface");
    }
    return res;
}

CharacteristicReport verify_characteristic_W() {
    CharacteristicReport rep;
    const Origami w = quaternion_origami();
    for (const Quat& a : Quat::all()) {
        if (a.order() != 4) continue;
        for (const Quat& b : Quat::all()) {
            if (b.order() != 4) continue;
            ++rep.candidate_pairs;

            // Defining relations of the quaternion group on (a, b).
            const bool relations = (a * a * a * a == Quat::one()) && (a * a == b * b) &&
                                   (b.inverse() * a * b == a.inverse());

            // <a, b> must be the whole group of 8 units.
            std::vector<Quat> closure{Quat::one()};
            bool grew = true;
            while (grew) {
                grew = false;
                for (std::size_t k = 0; k < closure.size(); ++k) {
                    for (const Quat& g : {closure[k] * a, closure[k] * b}) {
                        if (std::find(closure.begin(), closure.end(), g) == closure.end()) {
                            closure.push_back(g);
                            grew = true;
                        }
                    }
                }
            }
            const bool generates = closure.size() == 8;
            if (!(relations && generates)) continue;
            ++rep.epimorphisms;

            std::vector<int> h(8), v(8);
            for (const Quat& g : Quat::all()) {
                h[g.square_index()] = (g * a).square_index();
                v[g.square_index()] = (g * b).square_index();
            }
            const Origami cover =
                make_origami(Permutation(std::move(h)), Permutation(std::move(v)));
            if (is_isomorphic(cover, w)) ++rep.covers_isomorphic;
        }
    }
    rep.all_covers_match = rep.epimorphisms == rep.covers_isomorphic;
    return rep;
}

} // namespace origami
