#include "origami/origami.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "origami/errors.hpp"
#include "origami/quaternion.hpp"

namespace origami {

bool is_transitive(const Permutation& h, const Permutation& v) {
    // Forward closure under h and v equals the orbit of the generated group:
    // a forward-closed set has full-size image under each permutation, hence
    // is closed under the inverses as well.
    const int n = h.size();
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    seen[0] = 1;
    q.push(0);
    int count = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : {h(x), v(x)}) {
            if (!seen[y]) {
                seen[y] = 1;
                ++count;
                q.push(y);
            }
        }
    }
    return count == n;
}

Origami make_origami(Permutation h, Permutation v, std::string name) {
    if (h.size() != v.size())
        throw NotBijection("horizontal and vertical permutations act on different square counts");
    if (!is_transitive(h, v))
        throw NotConnected("squares do not form a connected surface");
    return Origami{std::move(h), std::move(v), std::move(name)};
}

Origami quaternion_origami() {
    const auto all = Quat::all();
    std::vector<int> h(8), v(8);
    for (const Quat& g : all) {
        const int s = g.square_index();
        h[s] = (g * Quat::i()).square_index();
        v[s] = (g * Quat::j()).square_index();
    }
    return make_origami(Permutation(std::move(h)), Permutation(std::move(v)), "W");
}

Origami torus_grid(int n) {
    if (n <= 0) throw std::invalid_argument("torus_grid: n must be positive");
    std::vector<int> h(n * n), v(n * n);
    for (int y = 0; y < n; ++y) {
        for (int x = 0; x < n; ++x) {
            const int s = x + n * y;
            h[s] = (x + 1) % n + n * y;
            v[s] = x + n * ((y + 1) % n);
        }
    }
    return make_origami(Permutation(std::move(h)), Permutation(std::move(v)),
                        "torus" + std::to_string(n));
}

Permutation vertex_rotation(const Origami& o) {
    // R(s) = v(h(v^{-1}(h^{-1}(s)))): counterclockwise rotation around the
    // vertex sitting at the bottom-left corner of square s.
    return o.v * o.h * o.v.inverse() * o.h.inverse();
}

std::vector<std::vector<int>> vertex_cycles(const Origami& o) {
    return vertex_rotation(o).cycles();
}

SingularityProfile singularity_profile(const Origami& o) {
    SingularityProfile p;
    for (const auto& cyc : vertex_cycles(o))
        p.cone_orders.push_back(static_cast<int>(cyc.size()) - 1);
    std::sort(p.cone_orders.begin(), p.cone_orders.end(), std::greater<int>());
    p.vertex_count = static_cast<int>(p.cone_orders.size());
    return p;
}

int genus(const Origami& o) {
    // V - E + F with E = 2N, F = N gives chi = V - N = 2 - 2g.
    const int v = singularity_profile(o).vertex_count;
    const int chi = v - o.size();
    return (2 - chi) / 2;
}

std::vector<int> stratum(const Origami& o) {
    std::vector<int> orders;
    for (int k : singularity_profile(o).cone_orders)
        if (k != 0) orders.push_back(k);
    return orders;
}

namespace {

// A strip is one h-cycle. Its top boundary is smooth (no cone point) exactly
// when v maps it onto a single strip respecting h, i.e. v(h(x)) == h(v(x))
// for every square x of the strip; then the cylinder continues upward.
struct StripData {
    std::vector<std::vector<int>> strips;
    std::vector<int> strip_of;   // square -> strip index
    std::vector<char> smooth;    // strip -> top boundary smooth?
    std::vector<int> above;      // strip -> strip above (valid when smooth)
};

StripData build_strips(const Origami& o) {
    StripData d;
    d.strips = o.h.cycles();
    d.strip_of.assign(o.size(), -1);
    for (int s = 0; s < static_cast<int>(d.strips.size()); ++s)
        for (int x : d.strips[s]) d.strip_of[x] = s;
    d.smooth.assign(d.strips.size(), 1);
    d.above.assign(d.strips.size(), -1);
    for (int s = 0; s < static_cast<int>(d.strips.size()); ++s) {
        for (int x : d.strips[s]) {
            if (o.v(o.h(x)) != o.h(o.v(x))) {
                d.smooth[s] = 0;
                break;
            }
        }
        d.above[s] = d.strip_of[o.v(d.strips[s].front())];
    }
    return d;
}

} // namespace

std::vector<Cylinder> horizontal_cylinders(const Origami& o) {
    const StripData d = build_strips(o);
    const int m = static_cast<int>(d.strips.size());

    // A strip starts a cylinder when no smooth strip sits directly below it.
    std::vector<char> has_smooth_below(m, 0);
    for (int s = 0; s < m; ++s)
        if (d.smooth[s]) has_smooth_below[d.above[s]] = 1;

    std::vector<Cylinder> out;
    std::vector<char> used(m, 0);
    for (int s = 0; s < m; ++s) {
        if (has_smooth_below[s]) continue;
        int height = 1;
        int cur = s;
        used[cur] = 1;
        while (d.smooth[cur]) {
            cur = d.above[cur];
            used[cur] = 1;
            ++height;
        }
        out.push_back({static_cast<int>(d.strips[s].size()), height});
    }

    // Strips left over sit in all-smooth loops: the surface closes up in the
    // vertical direction without meeting a cone point (torus-like component).
    for (int s = 0; s < m; ++s) {
        if (used[s]) continue;
        int height = 0;
        int cur = s;
        do {
            used[cur] = 1;
            ++height;
            cur = d.above[cur];
        } while (cur != s);
        out.push_back({static_cast<int>(d.strips[s].size()), height});
    }

    std::sort(out.begin(), out.end(), [](const Cylinder& a, const Cylinder& b) {
        return std::tie(a.circumference, a.height) < std::tie(b.circumference, b.height);
    });
    return out;
}

std::vector<Cylinder> vertical_cylinders(const Origami& o) {
    // Quarter turn: horizontal data of (v, h^{-1}).
    return horizontal_cylinders(Origami{o.v, o.h.inverse(), o.name});
}

std::pair<std::vector<int>, std::vector<int>> canonical_pair(const Origami& o) {
    const int n = o.size();
    std::pair<std::vector<int>, std::vector<int>> best;
    bool have = false;
    std::vector<int> label(n);
    std::vector<int> order(n);
    for (int start = 0; start < n; ++start) {
        // Breadth-first relabeling: squares get consecutive labels in
        // discovery order, exploring the right neighbor before the top one.
        std::fill(label.begin(), label.end(), -1);
        label[start] = 0;
        order[0] = start;
        int next = 1;
        for (int head = 0; head < n; ++head) {
            const int x = order[head];
            for (int y : {o.h(x), o.v(x)}) {
                if (label[y] < 0) {
                    label[y] = next;
                    order[next] = y;
                    ++next;
                }
            }
        }
        std::pair<std::vector<int>, std::vector<int>> cand{std::vector<int>(n),
                                                           std::vector<int>(n)};
        for (int x = 0; x < n; ++x) {
            cand.first[label[x]] = label[o.h(x)];
            cand.second[label[x]] = label[o.v(x)];
        }
        if (!have || cand < best) {
            best = std::move(cand);
            have = true;
        }
    }
    return best;
}

Origami canonical_form(const Origami& o) {
    auto [h, v] = canonical_pair(o);
    return make_origami(Permutation(std::move(h)), Permutation(std::move(v)), o.name);
}

bool is_isomorphic(const Origami& a, const Origami& b) {
    if (a.size() != b.size()) return false;
    return canonical_pair(a) == canonical_pair(b);
}

Origami relabel(const Origami& o, const Permutation& pi) {
    return Origami{conjugate(pi, o.h), conjugate(pi, o.v), o.name};
}

} // namespace origami
