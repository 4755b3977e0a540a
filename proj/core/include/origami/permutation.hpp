#pragma once

#include <vector>

#include "origami/errors.hpp"

namespace origami {

// Permutation of {0, ..., n-1}, stored as its image array.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    // Cycles use 0-based labels; omitted labels are fixed points.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int x) const { return img_[x]; }
    const std::vector<int>& images() const { return img_; }

    Permutation inverse() const;
    int order() const;
    bool is_identity() const;

    // Cycle decomposition: each cycle starts at its least element,
    // cycles sorted by least element, fixed points included as singletons.
    std::vector<std::vector<int>> cycles() const;
    // Same, without the singletons.
    std::vector<std::vector<int>> nontrivial_cycles() const;

    bool operator==(const Permutation& other) const = default;

private:
    std::vector<int> img_;
};

// Function composition: (f * g)(x) = f(g(x)).
Permutation operator*(const Permutation& f, const Permutation& g);

// pi * p * pi^{-1}; the relabeling of p under pi.
Permutation conjugate(const Permutation& pi, const Permutation& p);

} // namespace origami
