#include "origami/affine.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "origami/errors.hpp"

namespace origami {

int derivative_exponent(Derivative d) {
    switch (d) {
        case Derivative::I: return 0;
        case Derivative::S: return 1;
        case Derivative::MinusI: return 2;
        case Derivative::SInv: return 3;
    }
    return 0;
}

Derivative derivative_from_exponent(int e) {
    switch (((e % 4) + 4) % 4) {
        case 0: return Derivative::I;
        case 1: return Derivative::S;
        case 2: return Derivative::MinusI;
        default: return Derivative::SInv;
    }
}

Derivative compose(Derivative a, Derivative b) {
    return derivative_from_exponent(derivative_exponent(a) + derivative_exponent(b));
}

Derivative inverse(Derivative d) {
    return derivative_from_exponent(-derivative_exponent(d));
}

namespace {

// Images of h and v under conjugation by an automorphism of derivative d.
std::pair<Permutation, Permutation> conjugation_targets(const Origami& o, Derivative d) {
    switch (d) {
        case Derivative::I: return {o.h, o.v};
        case Derivative::MinusI: return {o.h.inverse(), o.v.inverse()};
        case Derivative::S: return {o.v, o.h.inverse()};
        case Derivative::SInv: return {o.v.inverse(), o.h};
    }
    return {o.h, o.v};
}

} // namespace

bool is_valid(const Origami& o, const AffineAuto& a) {
    const auto [dh, dv] = conjugation_targets(o, a.d);
    return conjugate(a.pi, o.h) == dh && conjugate(a.pi, o.v) == dv;
}

std::vector<AffineAuto> affine_autos(const Origami& o, Derivative d) {
    const int n = o.size();
    const auto [dh, dv] = conjugation_targets(o, d);
    std::vector<AffineAuto> out;
    std::vector<int> img(n);
    for (int t = 0; t < n; ++t) {
        // pi(0) = t determines pi on the whole connected surface via
        // pi(h(x)) = dh(pi(x)) and pi(v(x)) = dv(pi(x)).
        std::fill(img.begin(), img.end(), -1);
        img[0] = t;
        std::queue<int> q;
        q.push(0);
        bool ok = true;
        while (ok && !q.empty()) {
            const int x = q.front();
            q.pop();
            const std::pair<int, int> steps[2] = {{o.h(x), dh(img[x])},
                                                  {o.v(x), dv(img[x])}};
            for (const auto& [y, want] : steps) {
                if (img[y] == -1) {
                    img[y] = want;
                    q.push(y);
                } else if (img[y] != want) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        if (std::any_of(img.begin(), img.end(), [](int x) { return x < 0; })) continue;
        std::vector<char> hit(n, 0);
        for (int x : img) {
            if (hit[x]) {
                ok = false;
                break;
            }
            hit[x] = 1;
        }
        if (!ok) continue;
        AffineAuto a{Permutation(img), d};
        if (is_valid(o, a)) out.push_back(std::move(a));
    }
    return out;
}

std::vector<AffineAuto> affine_group(const Origami& o) {
    std::vector<AffineAuto> all;
    for (Derivative d :
         {Derivative::I, Derivative::MinusI, Derivative::S, Derivative::SInv}) {
        auto part = affine_autos(o, d);
        all.insert(all.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }
    return all;
}

std::vector<AffineAuto> translations(const Origami& o) {
    return affine_autos(o, Derivative::I);
}

AffineAuto identity_auto(const Origami& o) {
    return {Permutation::identity(o.size()), Derivative::I};
}

AffineAuto compose(const AffineAuto& a, const AffineAuto& b) {
    return {a.pi * b.pi, compose(a.d, b.d)};
}

AffineAuto inverse(const AffineAuto& a) {
    return {a.pi.inverse(), inverse(a.d)};
}

int element_order(const AffineAuto& a) {
    const int e = derivative_exponent(a.d);
    const int derivative_order = 4 / std::gcd(4, e == 0 ? 4 : e);
    return std::lcm(a.pi.order(), derivative_order);
}

std::map<int, int> order_histogram(const std::vector<AffineAuto>& group) {
    const auto contains = [&](const AffineAuto& x) {
        return std::find(group.begin(), group.end(), x) != group.end();
    };
    for (const auto& a : group)
        for (const auto& b : group)
            if (!contains(compose(a, b)))
                throw NotClosed("automorphism set is not closed under composition");
    std::map<int, int> hist;
    for (const auto& a : group) ++hist[element_order(a)];
    return hist;
}

std::vector<AffineAuto> center_of(const std::vector<AffineAuto>& group) {
    std::vector<AffineAuto> c;
    for (const auto& a : group) {
        const bool central = std::all_of(group.begin(), group.end(), [&](const AffineAuto& b) {
            return compose(a, b) == compose(b, a);
        });
        if (central) c.push_back(a);
    }
    return c;
}

FixedPointReport fixed_points(const Origami& o, const AffineAuto& a) {
    FixedPointReport rep;
    const int n = o.size();
    const Permutation& pi = a.pi;

    for (int s = 0; s < n; ++s)
        if (pi(s) == s) rep.square_centers.push_back(s);

    if (a.d == Derivative::MinusI) {
        // A point reflection fixes the midpoint of the edge between s and
        // h(s) exactly when it swaps the two squares (the reverse swap
        // pi(h(s)) = s follows from the conjugation relation).
        for (int s = 0; s < n; ++s)
            if (pi(s) == o.h(s)) rep.vertical_edge_midpoints.push_back(s);
        for (int s = 0; s < n; ++s)
            if (pi(s) == o.v(s)) rep.horizontal_edge_midpoints.push_back(s);
    } else if (a.d == Derivative::I) {
        // A translation fixes an edge midpoint only where it fixes the
        // whole square carrying the edge (i.e. only for the identity).
        for (int s = 0; s < n; ++s)
            if (pi(s) == s) {
                rep.vertical_edge_midpoints.push_back(s);
                rep.horizontal_edge_midpoints.push_back(s);
            }
    }

    // Vertices: the bottom-left corner of square s is carried to a corner of
    // pi(s); re-expressed as a bottom-left corner it lands in the rotation
    // cycle below. The vertex is fixed when that is the original cycle.
    const auto cycles = vertex_cycles(o);
    std::vector<int> cycle_of(n, -1);
    for (int c = 0; c < static_cast<int>(cycles.size()); ++c)
        for (int s : cycles[c]) cycle_of[s] = c;
    const auto image_corner_square = [&](int s) {
        switch (a.d) {
            case Derivative::I: return pi(s);                 // stays bottom-left
            case Derivative::MinusI: return o.v(o.h(pi(s)));  // becomes top-right
            case Derivative::S: return o.h(pi(s));            // becomes bottom-right
            case Derivative::SInv: return o.v(pi(s));         // becomes top-left
        }
        return pi(s);
    };
    for (const auto& cyc : cycles) {
        bool fixed = cycle_of[image_corner_square(cyc.front())] == cycle_of[cyc.front()];
        for (int s : cyc) {
            const bool f = cycle_of[image_corner_square(s)] == cycle_of[s];
            if (f != fixed)
                throw RelationViolated("vertex image disagrees along a rotation cycle");
        }
        if (fixed) rep.vertices.push_back(cyc);
    }
    return rep;
}

Origami quotient_by_translations(const Origami& o,
                                 const std::vector<Permutation>& subgroup) {
    const int n = o.size();
    if (subgroup.empty()) throw NotSubgroup("empty translation set");
    for (const auto& g : subgroup) {
        if (g.size() != n) throw NotSubgroup("translation acts on wrong square count");
        if (!(g * o.h == o.h * g) || !(g * o.v == o.v * g))
            throw NotSubgroup("element does not commute with the gluings");
    }
    const auto contains = [&](const Permutation& p) {
        return std::find(subgroup.begin(), subgroup.end(), p) != subgroup.end();
    };
    if (!contains(Permutation::identity(n))) throw NotSubgroup("missing identity");
    for (const auto& g1 : subgroup)
        for (const auto& g2 : subgroup)
            if (!contains(g1 * g2)) throw NotSubgroup("not closed under composition");
    for (const auto& g : subgroup)
        if (!g.is_identity())
            for (int s = 0; s < n; ++s)
                if (g(s) == s) throw NotFreeOnSquares("translation fixes a square");

    // Orbits, numbered by their smallest square.
    std::vector<int> orbit_of(n, -1);
    int orbits = 0;
    for (int s = 0; s < n; ++s) {
        if (orbit_of[s] != -1) continue;
        for (const auto& g : subgroup) orbit_of[g(s)] = orbits;
        ++orbits;
    }
    std::vector<int> hq(orbits, -1), vq(orbits, -1);
    for (int s = 0; s < n; ++s) {
        hq[orbit_of[s]] = orbit_of[o.h(s)];
        vq[orbit_of[s]] = orbit_of[o.v(s)];
    }
    return make_origami(Permutation(std::move(hq)), Permutation(std::move(vq)));
}

Origami quotient_by_translations(const Origami& o,
                                 const std::vector<AffineAuto>& subgroup) {
    std::vector<Permutation> perms;
    perms.reserve(subgroup.size());
    for (const auto& a : subgroup) {
        if (a.d != Derivative::I)
            throw NotSubgroup("quotient requires trivial derivatives");
        perms.push_back(a.pi);
    }
    return quotient_by_translations(o, perms);
}

int quotient_genus_by_involution(const Origami& o, const AffineAuto& a) {
    if (element_order(a) != 2)
        throw RelationViolated("quotient genus requires an involution");
    const int chi_x = 2 - 2 * genus(o);
    const int fixed = fixed_points(o, a).total();
    if ((chi_x + fixed) % 2 != 0)
        throw RelationViolated("fixed point count incompatible with a double cover");
    const int chi_y = (chi_x + fixed) / 2;
    return (2 - chi_y) / 2;
}

} // namespace origami
