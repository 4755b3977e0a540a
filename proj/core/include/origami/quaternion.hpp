#pragma once

#include <array>
#include <cstdlib>

namespace origami {

// The unit quaternion group {±1, ±i, ±j, ±k} with ij = k = -ji.
class Quat {
public:
    constexpr Quat() : axis_(0), neg_(false) {}

    static constexpr Quat one() { return Quat(0, false); }
    static constexpr Quat i() { return Quat(1, false); }
    static constexpr Quat j() { return Quat(2, false); }
    static constexpr Quat k() { return Quat(3, false); }

    constexpr Quat operator-() const { return Quat(axis_, !neg_); }

    constexpr Quat operator*(Quat rhs) const {
        // axis products: table[a][b] = (axis, sign) of basis product
        constexpr int axis_table[4][4] = {
            {0, 1, 2, 3},
            {1, 0, 3, 2},
            {2, 3, 0, 1},
            {3, 2, 1, 0},
        };
        constexpr bool neg_table[4][4] = {
            {false, false, false, false},
            {false, true, false, true},
            {false, true, true, false},
            {false, false, true, true},
        };
        const bool neg = neg_ ^ rhs.neg_ ^ neg_table[axis_][rhs.axis_];
        return Quat(axis_table[axis_][rhs.axis_], neg);
    }

    constexpr Quat inverse() const {
        return axis_ == 0 ? *this : -*this; // i^-1 = -i etc., (±1)^-1 = ±1
    }

    constexpr bool operator==(const Quat&) const = default;

    constexpr int order() const {
        if (axis_ == 0) return neg_ ? 2 : 1;
        return 4;
    }

    // Index of this element in the fixed square order (1, i, -1, -i, j, -k, -j, k).
    constexpr int square_index() const {
        constexpr int pos_index[4] = {0, 1, 4, 7};  // 1, i, j, k
        constexpr int neg_index[4] = {2, 3, 6, 5};  // -1, -i, -j, -k
        return neg_ ? neg_index[axis_] : pos_index[axis_];
    }

    static constexpr Quat from_square_index(int idx) {
        constexpr int axes[8] = {0, 1, 0, 1, 2, 3, 2, 3};
        constexpr bool negs[8] = {false, false, true, true, false, true, true, false};
        return Quat(axes[idx], negs[idx]);
    }

    static constexpr std::array<Quat, 8> all() {
        std::array<Quat, 8> out{};
        for (int idx = 0; idx < 8; ++idx) out[idx] = from_square_index(idx);
        return out;
    }

private:
    constexpr Quat(int axis, bool neg) : axis_(axis), neg_(neg) {}

    int axis_;  // 0:1, 1:i, 2:j, 3:k
    bool neg_;
};

} // namespace origami
