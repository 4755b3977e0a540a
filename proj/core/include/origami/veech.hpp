#pragma once

#include <array>
#include <string>
#include <vector>

#include "origami/origami.hpp"

namespace origami {

// Letters of words in SL(2,Z), generated by
//   S = ((0,-1),(1,0))   quarter turn
//   T = ((1,1),(0,1))    horizontal shear
enum class Sl2Letter { S, SInv, T, TInv };

Sl2Letter letter_inverse(Sl2Letter g);
std::string letter_name(Sl2Letter g); // "S", "S^-1", "T", "T^-1"

struct Mat2 {
    long long a = 1, b = 0, c = 0, d = 1; // ((a,b),(c,d))
    bool operator==(const Mat2&) const = default;
};

Mat2 operator*(const Mat2& m, const Mat2& n);
Mat2 letter_matrix(Sl2Letter g);

// A word acts on the plane with its rightmost letter first; its matrix is the
// product of the letter matrices from left to right.
struct Sl2Word {
    std::vector<Sl2Letter> letters;

    Mat2 matrix() const;
    Sl2Word inverse() const;
    std::string str() const; // space-separated letters, "1" when empty
};

// Shear/rotate the square tiling and recut:
//   S:     (h, v) -> (v, h^{-1})
//   S^-1:  (h, v) -> (v^{-1}, h)
//   T:     (h, v) -> (h, v h^{-1})
//   T^-1:  (h, v) -> (h, v h)
Origami act(Sl2Letter g, const Origami& o);
Origami act(const Sl2Word& w, const Origami& o);

struct VeechGenerator {
    Sl2Word word;
    Mat2 matrix;
};

struct VeechResult {
    int index = 0;                          // orbit size = index of the stabilizer
    std::vector<int> cusp_widths;           // cycle lengths of T on cosets, descending
    std::vector<VeechGenerator> generators; // Schreier generators of the stabilizer
    std::vector<Origami> orbit;             // breadth-first orbit representatives
    std::vector<std::array<int, 2>> coset_table; // images of each coset under {S, T}
};

// Orbit of the isomorphism class of o under S and T, with Schreier
// generators of the stabilizer of the class of o itself.
VeechResult veech_group(const Origami& o);

inline int cusp_count(const VeechResult& r) {
    return static_cast<int>(r.cusp_widths.size());
}

struct CharacteristicReport {
    int candidate_pairs = 0;     // ordered pairs of order-4 unit quaternions
    int epimorphisms = 0;        // pairs that satisfy the defining relations and generate
    int covers_isomorphic = 0;   // whose right-translation cover matches the quaternion origami
    bool all_covers_match = false;
};

// Scans all ordered pairs (a, b) of order-4 unit quaternions, keeps those with
// a^4 = 1, a^2 = b^2, b^{-1} a b = a^{-1} that generate the whole group, and
// compares the origami (g -> g*a, g -> g*b) with the quaternion origami.
CharacteristicReport verify_characteristic_W();

} // namespace origami
