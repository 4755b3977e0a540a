#include "origami/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace origami {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    const int n = static_cast<int>(img_.size());
    std::vector<char> seen(n, 0);
    for (int x : img_) {
        if (x < 0 || x >= n || seen[x])
            throw NotBijection("image array is not a bijection on {0..n-1}");
        seen[x] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    for (const auto& cyc : cycles) {
        for (size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i];
            int to = cyc[(i + 1) % cyc.size()];
            if (from < 0 || from >= n || to < 0 || to >= n)
                throw NotBijection("cycle label out of range");
            img[from] = to;
        }
    }
    return Permutation(std::move(img)); // ctor re-validates bijectivity
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (int x = 0; x < size(); ++x) inv[img_[x]] = x;
    Permutation p;
    p.img_ = std::move(inv);
    return p;
}

bool Permutation::is_identity() const {
    for (int x = 0; x < size(); ++x)
        if (img_[x] != x) return false;
    return true;
}

int Permutation::order() const {
    int ord = 1;
    for (const auto& cyc : cycles()) ord = std::lcm(ord, static_cast<int>(cyc.size()));
    return ord;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(img_.size(), 0);
    for (int start = 0; start < size(); ++start) {
        if (seen[start]) continue;
        std::vector<int> cyc;
        for (int x = start; !seen[x]; x = img_[x]) {
            seen[x] = 1;
            cyc.push_back(x);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

std::vector<std::vector<int>> Permutation::nontrivial_cycles() const {
    auto all = cycles();
    std::vector<std::vector<int>> out;
    for (auto& cyc : all)
        if (cyc.size() > 1) out.push_back(std::move(cyc));
    return out;
}

Permutation operator*(const Permutation& f, const Permutation& g) {
    std::vector<int> img(g.size());
    for (int x = 0; x < g.size(); ++x) img[x] = f(g(x));
    return Permutation(std::move(img));
}

Permutation conjugate(const Permutation& pi, const Permutation& p) {
    return pi * p * pi.inverse();
}

} // namespace origami
